#include "zerosum/cube.hpp"

#include <bit>
#include <string>

namespace zerosum {

ProductMeasure::ProductMeasure(std::vector<Rat> probabilities) : p(std::move(probabilities)) {
  if (p.empty()) throw invalid_input("measure: arity must be >= 1");
  for (const Rat& pi : p)
    if (pi < 0 || pi > 1) throw invalid_input("measure: probability outside [0, 1]");
}

ProductMeasure ProductMeasure::uniform(int r) {
  if (r < 1) throw invalid_input("measure: arity must be >= 1");
  return ProductMeasure(std::vector<Rat>(r, Rat(1, 2)));
}

bool ProductMeasure::is_uniform() const {
  for (const Rat& pi : p)
    if (pi != Rat(1, 2)) return false;
  return true;
}

CubeFunction::CubeFunction(int arity, std::vector<Rat> values) : r(arity), table(std::move(values)) {
  if (r < 1 || r > kMaxCubeArity) throw invalid_input("cube function: arity out of range");
  if (table.size() != (std::size_t{1} << r))
    throw invalid_input("cube function: table must have 2^r entries");
  for (const Rat& v : table)
    if (v < -1 || v > 1) throw invalid_input("cube function: value outside [-1, 1]");
}

CubeFunction CubeFunction::constant(int arity, const Rat& c) {
  if (arity < 1 || arity > kMaxCubeArity) throw invalid_input("cube function: arity out of range");
  return CubeFunction(arity, std::vector<Rat>(std::size_t{1} << arity, c));
}

int coordinate_sum(unsigned mask, int r) {
  return 2 * std::popcount(mask) - r;
}

SemiThreshold::SemiThreshold(int arity, int threshold, Rat level_value)
    : r(arity), k(threshold), beta(std::move(level_value)) {
  if (r < 1 || r > kMaxCubeArity) throw invalid_input("semi-threshold: arity out of range");
  if (k < 0 || k > r) throw invalid_input("semi-threshold: need 0 <= k <= r");
  if ((k & 1) != (r & 1)) throw invalid_input("semi-threshold: k must have the parity of r");
  if (beta < 0 || beta > 1) throw invalid_input("semi-threshold: beta outside [0, 1]");
  if (k == 0 && beta != 0) throw invalid_input("semi-threshold: k = 0 forces beta = 0");
}

static void check_arity(const CubeFunction& f, const ProductMeasure& mu) {
  if (f.r != mu.arity()) throw invalid_input("cube: function/measure arity mismatch");
}

Rat measure_of_point(const ProductMeasure& mu, unsigned mask, int r) {
  if (r != mu.arity()) throw invalid_input("measure_of_point: arity mismatch");
  Rat m = 1;
  for (int i = 0; i < r; ++i) m *= (mask >> i & 1u) ? mu.p[i] : Rat(1) - mu.p[i];
  return m;
}

Rat expectation(const CubeFunction& f, const ProductMeasure& mu) {
  check_arity(f, mu);
  Rat sum = 0;
  for (unsigned x = 0; x < f.size(); ++x) sum += measure_of_point(mu, x, f.r) * f.table[x];
  return sum;
}

Rat abs_expectation(const CubeFunction& f, const ProductMeasure& mu) {
  check_arity(f, mu);
  Rat sum = 0;
  for (unsigned x = 0; x < f.size(); ++x)
    sum += measure_of_point(mu, x, f.r) * abs(f.table[x]);
  return sum;
}

Rat conditional_expectation(const CubeFunction& f, const ProductMeasure& mu, int coordinate,
                            int sign) {
  check_arity(f, mu);
  if (coordinate < 0 || coordinate >= f.r)
    throw invalid_input("conditional_expectation: coordinate out of range");
  if (sign != 1 && sign != -1) throw invalid_input("conditional_expectation: sign must be +-1");
  const Rat side = sign == 1 ? mu.p[coordinate] : Rat(1) - mu.p[coordinate];
  if (side == 0)
    throw invalid_input("degenerate measure: conditioning on a zero-probability event");
  Rat sum = 0;
  const unsigned bit = 1u << coordinate;
  for (unsigned x = 0; x < f.size(); ++x) {
    const bool plus = (x & bit) != 0;
    if (plus != (sign == 1)) continue;
    sum += measure_of_point(mu, x, f.r) * f.table[x];
  }
  return sum / side;
}

Rat cube_unbalancedness(const CubeFunction& f, const ProductMeasure& mu) {
  check_arity(f, mu);
  Rat best;
  bool first = true;
  for (int i = 0; i < f.r; ++i) {
    Rat plus = conditional_expectation(f, mu, i, 1);
    Rat minus = -conditional_expectation(f, mu, i, -1);
    Rat local = plus < minus ? plus : minus;
    if (first || local < best) {
      best = local;
      first = false;
    }
  }
  return best;
}

CubeFunction semi_threshold_function(const SemiThreshold& t) {
  std::vector<Rat> table(std::size_t{1} << t.r);
  for (unsigned x = 0; x < table.size(); ++x) {
    const int s = coordinate_sum(x, t.r);
    if (s > t.k)
      table[x] = 1;
    else if (s == t.k)
      table[x] = t.beta;
    else if (s > -t.k)
      table[x] = 0;
    else if (s == -t.k)
      table[x] = -t.beta;
    else
      table[x] = -1;
  }
  return CubeFunction(t.r, std::move(table));
}

Rat semi_threshold_abs_expectation(const SemiThreshold& t) {
  // |g| is 1 on the 2*sum_{j > (k+r)/2} C(r, j) points beyond the +-k levels
  // and beta on the 2*C(r, (k+r)/2) points at them.
  const long upper = (t.k + t.r) / 2;
  Int beyond = 0;
  for (long j = upper + 1; j <= t.r; ++j) beyond += binomial(t.r, j);
  Rat total = 2 * Rat(beyond) + 2 * t.beta * Rat(binomial(t.r, upper));
  // k = 0 counts the single |x| = 0 level twice, but beta = 0 there.
  return total / rat_pow(Rat(2), t.r);
}

Rat semi_threshold_unbalancedness(const SemiThreshold& t) {
  const long upper = (t.k + t.r) / 2;
  Rat value = 2 * (Rat(1) - t.beta) * Rat(binomial(t.r - 1, upper)) +
              2 * t.beta * Rat(binomial(t.r - 1, upper - 1));
  return value / rat_pow(Rat(2), t.r);
}

SemiThreshold max_semi_threshold(int r, const Rat& lambda) {
  if (r < 1 || r > kMaxCubeArity) throw invalid_input("max_semi_threshold: arity out of range");
  if (lambda < 0 || lambda > 1) throw invalid_input("max_semi_threshold: lambda outside [0, 1]");

  const Rat scale = rat_pow(Rat(2), r);
  const int k_min = r % 2 == 0 ? 0 : 1;

  // E|g| at beta = 0 for this k (mass strictly beyond the +-k levels).
  auto base_mass = [&](int k) {
    Int beyond = 0;
    for (long j = (k + r) / 2 + 1; j <= r; ++j) beyond += binomial(r, j);
    return 2 * Rat(beyond) / scale;
  };

  const Rat max_mass = r % 2 == 0 ? base_mass(0) : Rat(1);
  if (lambda >= max_mass)
    return r % 2 == 0 ? SemiThreshold(r, 0, 0) : SemiThreshold(r, 1, 1);

  // Mass grows as k shrinks; pick the smallest k whose beta = 0 mass still
  // fits, then solve for beta exactly.
  for (int k = k_min; k <= r; k += 2) {
    const Rat base = base_mass(k);
    if (base > lambda) continue;
    if (k == 0) return SemiThreshold(r, 0, 0);
    const Rat slope = 2 * Rat(binomial(r, (k + r) / 2)) / scale;
    return SemiThreshold(r, k, (lambda - base) / slope);
  }
  return SemiThreshold(r, r, 0);  // lambda below every positive mass: the zero function
}

std::pair<CubeFunction, ProductMeasure> shift_coordinate(const CubeFunction& f,
                                                         const ProductMeasure& mu,
                                                         int coordinate) {
  check_arity(f, mu);
  if (coordinate < 0 || coordinate >= f.r)
    throw invalid_input("shift_coordinate: coordinate out of range");

  const Rat p = mu.p[coordinate];
  const unsigned bit = 1u << coordinate;
  std::vector<Rat> table = f.table;

  if (p <= Rat(1, 2)) {
    // Average onto the +1 side; the -1 side is untouched.
    for (unsigned x = 0; x < f.size(); ++x)
      if (x & bit) table[x] = 2 * p * f.table[x] + (1 - 2 * p) * f.table[x ^ bit];
  } else {
    // Mirrored instance: reflect the coordinate, shift, reflect back.
    const Rat q = Rat(1) - p;
    for (unsigned x = 0; x < f.size(); ++x)
      if (!(x & bit)) table[x] = 2 * q * f.table[x] + (1 - 2 * q) * f.table[x ^ bit];
  }

  ProductMeasure shifted = mu;
  shifted.p[coordinate] = Rat(1, 2);
  return {CubeFunction(f.r, std::move(table)), std::move(shifted)};
}

std::pair<CubeFunction, ProductMeasure> shift_to_uniform(const CubeFunction& f,
                                                         const ProductMeasure& mu) {
  check_arity(f, mu);
  std::pair<CubeFunction, ProductMeasure> current{f, mu};
  for (int i = 0; i < f.r; ++i) current = shift_coordinate(current.first, current.second, i);
  return current;
}

Rat level_one_correlation(const CubeFunction& f, const ProductMeasure& mu) {
  check_arity(f, mu);
  Rat sum = 0;
  for (unsigned x = 0; x < f.size(); ++x)
    sum += measure_of_point(mu, x, f.r) * f.table[x] * coordinate_sum(x, f.r);
  return sum;
}

Rat level_one_correlation_max(int r) {
  if (r < 1) throw invalid_input("level_one_correlation_max: arity must be >= 1");
  return 2 * r * Rat(binomial(r - 1, r / 2)) / rat_pow(Rat(2), r);
}

}  // namespace zerosum
