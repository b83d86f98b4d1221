#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zerosum/cube.hpp"
#include "zerosum/rational.hpp"

namespace zerosum {

enum class BoundKind { Complete, Equipartite, CompletePartite, BaloghSmyth };

// A bound value together with the parameters that produced it, so reports and
// tables can show the certificate next to the number.
struct BoundReport {
  BoundKind kind;
  Rat value;
  int n = 0;
  int r = 0;
  std::optional<Int> edge_count;            // equipartite: e
  std::optional<SemiThreshold> threshold;   // equipartite: the extremal g
  std::optional<int> split;                 // complete: k = ceil(n/2)
  std::optional<int> weight_center;         // complete: ceil(r/2)
  std::optional<bool> attained;
  std::string note;
};

// sqrt((D + alpha^2 D^2 (r-1)) / r) * n^(r-1). The only floating-point bound
// in the library; everything else is exact.
double balogh_smyth_bound(int r, int n, double density, double alpha);

// C(r-1, floor(r/2)) * (n/2)^(r-1), exact.
Rat complete_partite_bound(int r, int n);

// Bound for r-equipartite hypergraphs with classes of size n and e edges:
// the extremal semi-threshold for lambda = e/n^r, scaled by n^(r-1).
BoundReport equipartite_bound(int r, int n, const Int& e);

// |E_l| = C(n-k, l) * C(k, r-l) for l = 0..r, where E_l collects the edges
// meeting the (n-k)-vertex positive side in exactly l vertices.
std::vector<Int> edge_class_sizes(int n, int r, int k);

// The level carrying the single fractional value of the optimal level
// weighting: the smallest nonempty l whose cumulative size reaches the mass
// above it (sum_{j<=l} |E_j| >= sum_{j>l} |E_j|).
int fractional_level(int n, int r, int k);

// Value prescribed at the fractional level so the weighting sums to zero:
// [ sum_{l<m} |E_l| - sum_{l>m} |E_l| ] / |E_m|, in [-1, 1).
Rat fractional_level_value(int n, int r, int k);

// Unbalancedness attained by the optimal level weighting whose negative side
// has k vertices: sum_l |m-l| |E_l| / max(n-k, k).
Rat split_optimum(int n, int r, int k);

// Closed-form bound for the complete r-uniform hypergraph on n vertices,
// evaluated at k = ceil(n/2) with weight center ceil(r/2).
BoundReport complete_bound(int n, int r);

// sum_l |s-l| |E_l| / (n-k) for an arbitrary center s.
Rat centered_level_sum(int n, int r, int k, int s);

// The step G(k+1, s) - G(k, s) computed two ways: directly, and via the
// collapsed form s * [ sum_{l<=s} |E_l| - sum_{l>s} |E_l| ] / ((n-k)(n-k-1))
// with the sizes taken at k. The two must agree; callers assert it.
std::pair<Rat, Rat> centered_level_sum_difference(int n, int r, int k, int s);

// True iff F(k) = centered_level_sum(n, r, k, fractional_level(n, r, k)) is
// non-decreasing for 0 < k < floor(n/2) and the fractional level falls by at
// most one per step.
bool check_split_monotonicity(int n, int r);

}  // namespace zerosum
