#include "zerosum/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace zerosum {

Hypergraph::Hypergraph(int n, int r, std::vector<std::vector<int>> edges,
                       std::optional<std::vector<std::vector<int>>> classes)
    : n_(n), r_(r), edges_(std::move(edges)), classes_(std::move(classes)) {
  if (n_ <= 0) throw invalid_input("hypergraph: vertex count must be positive");
  if (r_ <= 0 || r_ > n_) throw invalid_input("hypergraph: need 1 <= r <= n");

  for (auto& e : edges_) {
    if (static_cast<int>(e.size()) != r_)
      throw invalid_input("hypergraph: edge of size " + std::to_string(e.size()) +
                          " in a " + std::to_string(r_) + "-uniform hypergraph");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n_) throw invalid_input("hypergraph: vertex id out of range");
      if (i > 0 && e[i] == e[i - 1]) throw invalid_input("hypergraph: repeated vertex in edge");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw invalid_input("hypergraph: duplicate edge");

  if (classes_) {
    if (static_cast<int>(classes_->size()) != r_)
      throw invalid_input("hypergraph: partition must have exactly r blocks");
    std::vector<int> owner(n_, -1);
    for (std::size_t b = 0; b < classes_->size(); ++b) {
      for (int v : (*classes_)[b]) {
        if (v < 0 || v >= n_) throw invalid_input("hypergraph: class vertex out of range");
        if (owner[v] != -1) throw invalid_input("hypergraph: classes overlap");
        owner[v] = static_cast<int>(b);
      }
    }
    for (int v = 0; v < n_; ++v)
      if (owner[v] == -1) throw invalid_input("hypergraph: classes do not cover the vertex set");
    std::vector<char> seen(r_, 0);
    for (const auto& e : edges_) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int v : e) {
        if (seen[owner[v]]) throw invalid_input("hypergraph: edge meets a class twice");
        seen[owner[v]] = 1;
      }
    }
  }

  incidence_.assign(n_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (int v : edges_[i]) incidence_[v].push_back(i);
}

bool Hypergraph::has_isolated_vertices() const {
  for (int v = 0; v < n_; ++v)
    if (incidence_[v].empty()) return true;
  return false;
}

bool Hypergraph::is_complete() const {
  return Int(edges_.size()) == binomial(n_, r_);
}

std::optional<std::size_t> Hypergraph::find_edge(const std::vector<int>& vertices) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), vertices);
  if (it != edges_.end() && *it == vertices)
    return static_cast<std::size_t>(it - edges_.begin());
  return std::nullopt;
}

Hypergraph complete_hypergraph(int n, int r) {
  if (r <= 0 || n <= 0 || r > n) throw invalid_input("complete_hypergraph: need 1 <= r <= n");
  std::vector<std::vector<int>> edges;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    edges.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph complete_equipartite_on(int n_vertices,
                                   const std::vector<std::vector<int>>& classes) {
  if (classes.empty()) throw invalid_input("complete_equipartite: no classes");
  const std::size_t size = classes.front().size();
  if (size == 0) throw invalid_input("complete_equipartite: empty class");
  for (const auto& c : classes)
    if (c.size() != size) throw invalid_input("complete_equipartite: classes of unequal size");

  const int r = static_cast<int>(classes.size());
  std::vector<std::vector<int>> edges;
  std::vector<std::size_t> idx(r, 0);
  std::vector<int> edge(r);
  while (true) {
    for (int i = 0; i < r; ++i) edge[i] = classes[i][idx[i]];
    edges.push_back(edge);
    int i = r - 1;
    while (i >= 0 && idx[i] + 1 == size) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return Hypergraph(n_vertices, r, std::move(edges), classes);
}

Hypergraph complete_equipartite(int r, int n) {
  if (r <= 0 || n <= 0) throw invalid_input("complete_equipartite: need r >= 1 and n >= 1");
  std::vector<std::vector<int>> classes(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) classes[i].push_back(i * n + j);
  return complete_equipartite_on(r * n, classes);
}

void validate_weighting(const Hypergraph& h, const Weighting& f) {
  if (f.values.size() != h.edge_count())
    throw invalid_input("weighting: expected " + std::to_string(h.edge_count()) +
                        " values, got " + std::to_string(f.values.size()));
  for (const Rat& v : f.values)
    if (v < -1 || v > 1) throw invalid_input("weighting: value outside [-1, 1]");
}

Rat vertex_imbalance(const Hypergraph& h, const Weighting& f, int v) {
  validate_weighting(h, f);
  if (v < 0 || v >= h.vertex_count()) throw invalid_input("vertex_imbalance: vertex out of range");
  Rat sum = 0;
  for (std::size_t e : h.incident_edges(v)) sum += f.values[e];
  return sum;
}

Rat unbalancedness(const Hypergraph& h, const Weighting& f) {
  validate_weighting(h, f);
  Rat best;
  bool first = true;
  for (int v = 0; v < h.vertex_count(); ++v) {
    Rat imbalance = 0;
    for (std::size_t e : h.incident_edges(v)) imbalance += f.values[e];
    if (imbalance < 0) imbalance = -imbalance;
    if (first || imbalance < best) {
      best = imbalance;
      first = false;
    }
  }
  return best;
}

Rat total_sum(const Hypergraph& h, const Weighting& f) {
  validate_weighting(h, f);
  Rat sum = 0;
  for (const Rat& v : f.values) sum += v;
  return sum;
}

}  // namespace zerosum
