#include "groupmix/numeric.hpp"

namespace groupmix {

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num) / Rat(den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

std::string rational_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

BigFloat parse_bigfloat(const std::string& s) {
  try {
    return BigFloat(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed decimal: '" + s + "'");
  }
}

std::string bigfloat_string(const BigFloat& x) {
  return x.str(40);
}

int floor_log2(const Int& n) {
  if (n < 1) throw std::domain_error("floor_log2: n must be >= 1");
  // msb() gives the index of the most significant bit.
  return static_cast<int>(boost::multiprecision::msb(n));
}

int ceil_log2(const Int& n) {
  if (n < 1) throw std::domain_error("ceil_log2: n must be >= 1");
  int f = floor_log2(n);
  return (Int(1) << f) == n ? f : f + 1;
}

int hamming_weight(std::int64_t n) {
  if (n < 0) throw std::domain_error("hamming_weight: n must be >= 0");
  int w = 0;
  while (n) {
    w += static_cast<int>(n & 1);
    n >>= 1;
  }
  return w;
}

bool is_power_of_two(const Int& n) {
  if (n < 1) return false;
  return (Int(1) << floor_log2(n)) == n;
}

}  // namespace groupmix
