#pragma once

#include <optional>
#include <vector>

#include "zerosum/rational.hpp"

namespace zerosum {

// Uniform hypergraph on vertices [0, n). Edges are kept sorted vertex-wise
// and lexicographically, with duplicates rejected, so an edge's position is a
// stable id. `classes`, when present, partitions the vertex set into r blocks
// and every edge meets each block exactly once (r-partite case).
class Hypergraph {
 public:
  Hypergraph(int n, int r, std::vector<std::vector<int>> edges,
             std::optional<std::vector<std::vector<int>>> classes = std::nullopt);

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edge(std::size_t i) const { return edges_[i]; }
  const std::optional<std::vector<std::vector<int>>>& classes() const { return classes_; }

  // Edge ids incident to v.
  const std::vector<std::size_t>& incident_edges(int v) const { return incidence_[v]; }
  std::size_t degree(int v) const { return incidence_[v].size(); }

  bool has_isolated_vertices() const;
  bool is_complete() const;

  // Index of an edge given as a sorted vertex list, if present.
  std::optional<std::size_t> find_edge(const std::vector<int>& vertices) const;

 private:
  int n_;
  int r_;
  std::vector<std::vector<int>> edges_;
  std::optional<std::vector<std::vector<int>>> classes_;
  std::vector<std::vector<std::size_t>> incidence_;
};

// One rational value in [-1, 1] per edge, indexed by edge id.
struct Weighting {
  std::vector<Rat> values;
};

// +-1 per vertex; encodes the P/N bipartition (or the per-class sign splits).
struct SignPattern {
  std::vector<int> signs;
};

// All C(n, r) edges in lexicographic order, no classes.
Hypergraph complete_hypergraph(int n, int r);

// Complete r-partite r-uniform hypergraph: r consecutive classes of size n,
// all n^r transversals as edges.
Hypergraph complete_equipartite(int r, int n);

// Same, but on an arbitrary partition into equal-size classes.
Hypergraph complete_equipartite_on(int n_vertices,
                                   const std::vector<std::vector<int>>& classes);

void validate_weighting(const Hypergraph& h, const Weighting& f);

// Sum of f over the edges containing v.
Rat vertex_imbalance(const Hypergraph& h, const Weighting& f, int v);

// X(f) = min over vertices of |vertex imbalance|. Zero when some vertex is
// isolated (an isolated vertex has imbalance 0); callers that care should
// check has_isolated_vertices().
Rat unbalancedness(const Hypergraph& h, const Weighting& f);

// Sum of f over all edges.
Rat total_sum(const Hypergraph& h, const Weighting& f);

}  // namespace zerosum
