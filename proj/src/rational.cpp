#include "zerosum/rational.hpp"

#include <cctype>
#include <sstream>

namespace zerosum {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact: result is a binomial at every step
  }
  return result;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp < 0) throw invalid_input("rat_pow: negative exponent");
  Rat result = 1;
  Rat b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << numerator(x) << "/" << denominator(x);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw invalid_input("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw invalid_input("malformed rational literal: " + s);
    Int q(den);
    if (q == 0) throw invalid_input("zero denominator: " + s);
    return Rat(Int(num), q);
  } catch (const std::runtime_error&) {
    throw invalid_input("malformed rational literal: " + s);
  }
}

std::string real_to_string(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace zerosum
