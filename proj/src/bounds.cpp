#include "zerosum/bounds.hpp"

#include <cmath>

namespace zerosum {

double balogh_smyth_bound(int r, int n, double density, double alpha) {
  if (r < 1 || n < 1) throw invalid_input("balogh_smyth_bound: need r >= 1 and n >= 1");
  if (density <= 0) throw invalid_input("balogh_smyth_bound: density must be positive");
  if (alpha < -1 || alpha > 1) throw invalid_input("balogh_smyth_bound: alpha outside [-1, 1]");
  const double inner = (density + alpha * alpha * density * density * (r - 1)) / r;
  return std::sqrt(inner) * std::pow(static_cast<double>(n), r - 1);
}

Rat complete_partite_bound(int r, int n) {
  if (r < 1 || n < 1) throw invalid_input("complete_partite_bound: need r >= 1 and n >= 1");
  return Rat(binomial(r - 1, r / 2)) * rat_pow(Rat(n, 2), r - 1);
}

BoundReport equipartite_bound(int r, int n, const Int& e) {
  if (r < 1 || n < 1) throw invalid_input("equipartite_bound: need r >= 1 and n >= 1");
  Int total = 1;
  for (int i = 0; i < r; ++i) total *= n;
  if (e < 0 || e > total) throw invalid_input("equipartite_bound: edge count outside [0, n^r]");

  const Rat lambda = Rat(e) / Rat(total);
  SemiThreshold g = max_semi_threshold(r, lambda);

  BoundReport report;
  report.kind = BoundKind::Equipartite;
  report.n = n;
  report.r = r;
  report.edge_count = e;
  report.threshold = g;
  report.value = semi_threshold_unbalancedness(g) * rat_pow(Rat(n), r - 1);
  return report;
}

std::vector<Int> edge_class_sizes(int n, int r, int k) {
  if (k <= 0 || k >= n) throw invalid_input("edge_class_sizes: need 0 < k < n");
  if (r < 1) throw invalid_input("edge_class_sizes: need r >= 1");
  std::vector<Int> sizes(r + 1);
  for (int l = 0; l <= r; ++l) sizes[l] = binomial(n - k, l) * binomial(k, r - l);
  return sizes;
}

int fractional_level(int n, int r, int k) {
  const auto sizes = edge_class_sizes(n, r, k);
  Int total = 0;
  for (const Int& s : sizes) total += s;
  if (total == 0) throw invalid_input("fractional_level: all edge classes empty");
  Int prefix = 0;
  for (int l = 0; l <= r; ++l) {
    prefix += sizes[l];
    if (sizes[l] != 0 && 2 * prefix >= total) return l;
  }
  return r;  // unreachable: the last nonempty level always crosses
}

Rat fractional_level_value(int n, int r, int k) {
  const auto sizes = edge_class_sizes(n, r, k);
  const int m = fractional_level(n, r, k);
  Int below = 0, above = 0;
  for (int l = 0; l < m; ++l) below += sizes[l];
  for (int l = m + 1; l <= r; ++l) above += sizes[l];
  return Rat(below - above) / Rat(sizes[m]);
}

Rat split_optimum(int n, int r, int k) {
  const auto sizes = edge_class_sizes(n, r, k);
  const int m = fractional_level(n, r, k);
  Int weighted = 0;
  for (int l = 0; l <= r; ++l) weighted += Int(std::abs(m - l)) * sizes[l];
  return Rat(weighted) / Rat(std::max(n - k, k));
}

BoundReport complete_bound(int n, int r) {
  if (n < 2) throw invalid_input("complete_bound: need n >= 2");
  if (r < 1 || r > n) throw invalid_input("complete_bound: need 1 <= r <= n");
  const int k = (n + 1) / 2;
  const int center = (r + 1) / 2;
  Int weighted = 0;
  for (int l = 0; l <= r; ++l)
    weighted += Int(std::abs(center - l)) * binomial(n - k, l) * binomial(k, r - l);

  BoundReport report;
  report.kind = BoundKind::Complete;
  report.n = n;
  report.r = r;
  report.split = k;
  report.weight_center = center;
  report.value = Rat(weighted) / Rat(k);
  return report;
}

Rat centered_level_sum(int n, int r, int k, int s) {
  if (s < 0 || s > r) throw invalid_input("centered_level_sum: need 0 <= s <= r");
  const auto sizes = edge_class_sizes(n, r, k);
  Int weighted = 0;
  for (int l = 0; l <= r; ++l) weighted += Int(std::abs(s - l)) * sizes[l];
  return Rat(weighted) / Rat(n - k);
}

std::pair<Rat, Rat> centered_level_sum_difference(int n, int r, int k, int s) {
  if (k <= 0 || k >= n - 1)
    throw invalid_input("centered_level_sum_difference: need 0 < k < n - 1");
  const Rat direct = centered_level_sum(n, r, k + 1, s) - centered_level_sum(n, r, k, s);

  const auto sizes = edge_class_sizes(n, r, k);
  Int low = 0, high = 0;
  for (int l = 0; l <= r; ++l) (l <= s ? low : high) += sizes[l];
  const Rat closed = Rat(s) * Rat(low - high) / Rat(Int(n - k) * Int(n - k - 1));
  return {direct, closed};
}

bool check_split_monotonicity(int n, int r) {
  if (n < 4) throw invalid_input("check_split_monotonicity: need n >= 4");
  if (r < 1 || r > n) throw invalid_input("check_split_monotonicity: need 1 <= r <= n");
  auto series_value = [&](int k) {
    return centered_level_sum(n, r, k, fractional_level(n, r, k));
  };
  for (int k = 1; k < n / 2; ++k) {
    const int m_here = fractional_level(n, r, k);
    const int m_next = fractional_level(n, r, k + 1);
    const int drop = m_here - m_next;
    if (drop != 0 && drop != 1) return false;
    if (series_value(k + 1) < series_value(k)) return false;
  }
  return true;
}

}  // namespace zerosum
