#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace zerosum {

// All exact arithmetic in the library runs on arbitrary-precision rationals.
// cpp_rational keeps values normalized (reduced, positive denominator), which
// the serialization layer relies on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown for violated preconditions and malformed inputs. CLI exit code 1.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a requested object cannot exist (e.g. a zero-sum +-1 weighting
// on an odd number of edges). CLI exit code 2.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an instance exceeds a hard enumeration/LP budget. CLI exit code 3.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact binomial coefficient; zero outside 0 <= k <= n.
Int binomial(long n, long k);

// x^e for integer e >= 0.
Rat rat_pow(const Rat& base, long exp);

// Canonical "p/q" form, e.g. "4/1", "-1/2", "0/1".
std::string rat_to_string(const Rat& x);

// Parses "p" or "p/q" (q > 0 after normalization happens automatically).
Rat rat_from_string(const std::string& s);

// 12-significant-digit decimal; only used for the one non-rational bound.
std::string real_to_string(double x);

}  // namespace zerosum
