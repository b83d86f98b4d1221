#pragma once

#include <utility>
#include <vector>

#include "zerosum/rational.hpp"

namespace zerosum {

// Product measure on {-1,+1}^r: p[i] is the probability that coordinate i
// equals +1.
struct ProductMeasure {
  std::vector<Rat> p;

  explicit ProductMeasure(std::vector<Rat> probabilities);
  static ProductMeasure uniform(int r);

  int arity() const { return static_cast<int>(p.size()); }
  bool is_uniform() const;
};

// Dense table of a function {-1,+1}^r -> [-1,1]. Points are indexed by
// bitmask: bit i set means x_i = +1. Arity is capped at 24 (table of 2^24).
struct CubeFunction {
  int r;
  std::vector<Rat> table;

  CubeFunction(int arity, std::vector<Rat> values);
  static CubeFunction constant(int arity, const Rat& c);

  std::size_t size() const { return table.size(); }
};

inline constexpr int kMaxCubeArity = 24;

// Sum of coordinates of the point encoded by `mask` (2*popcount - r).
int coordinate_sum(unsigned mask, int r);

// Piecewise-constant symmetric function: +-1 beyond the +-k levels of the
// coordinate sum, +-beta exactly at +-k, 0 strictly between. k must have the
// parity of r, and k = 0 forces beta = 0 (the +0 and -0 levels coincide).
struct SemiThreshold {
  int r;
  int k;
  Rat beta;

  SemiThreshold(int arity, int threshold, Rat level_value);
};

Rat measure_of_point(const ProductMeasure& mu, unsigned mask, int r);

Rat expectation(const CubeFunction& f, const ProductMeasure& mu);
Rat abs_expectation(const CubeFunction& f, const ProductMeasure& mu);

// E[f | x_i = sign]; requires the conditioning event to have positive measure.
Rat conditional_expectation(const CubeFunction& f, const ProductMeasure& mu, int coordinate,
                            int sign);

// Signed cube analogue of the unbalancedness:
//   min_i min( E[f | x_i = +1], -E[f | x_i = -1] ).
// May be negative. Requires every p_i strictly inside (0, 1).
Rat cube_unbalancedness(const CubeFunction& f, const ProductMeasure& mu);

CubeFunction semi_threshold_function(const SemiThreshold& t);

// E_{uniform}|g| for the semi-threshold g, in closed form.
Rat semi_threshold_abs_expectation(const SemiThreshold& t);

// Closed form of cube_unbalancedness(semi_threshold_function(t), uniform):
//   [ 2(1-beta) C(r-1, (k+r)/2) + 2 beta C(r-1, (k+r-2)/2) ] / 2^r.
Rat semi_threshold_unbalancedness(const SemiThreshold& t);

// The semi-threshold with the largest E_{uniform}|g| not exceeding lambda.
// For even r and lambda above the achievable maximum 1 - C(r, r/2)/2^r the
// canonical answer is (k=0, beta=0). Parameterization ties resolve to the
// smaller k (the same function; smaller k is the canonical name for it).
SemiThreshold max_semi_threshold(int r, const Rat& lambda);

// One step of the joint function/measure shift: moves p_i to 1/2 while
// preserving every pairwise mass sum mu(x)f(x) + mu(x^i)f(x^i). For p_i <= 1/2
// the averaged side is x_i = +1 and f is unchanged on x_i = -1; for p_i > 1/2
// the roles of the two sides are mirrored.
std::pair<CubeFunction, ProductMeasure> shift_coordinate(const CubeFunction& f,
                                                         const ProductMeasure& mu,
                                                         int coordinate);

// Applies shift_coordinate at 0, 1, ..., r-1; the result lives under the
// uniform measure.
std::pair<CubeFunction, ProductMeasure> shift_to_uniform(const CubeFunction& f,
                                                         const ProductMeasure& mu);

// E_mu[ f * sum_i x_i ]. Under the uniform measure and |f| <= 1 this is at
// most 2 r C(r-1, floor(r/2)) / 2^r, with equality for the majority pattern.
Rat level_one_correlation(const CubeFunction& f, const ProductMeasure& mu);

// The sharp constant 2 r C(r-1, floor(r/2)) / 2^r above.
Rat level_one_correlation_max(int r);

}  // namespace zerosum
