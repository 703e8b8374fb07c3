#include "groupmix/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace groupmix {

namespace {

// Packed default moduli, Conway-style: one fixed choice per (p, e) so that
// canonical encodings are reproducible across runs.
struct DefaultModulus {
  std::int64_t p;
  int e;
  std::vector<std::int64_t> coeffs;  // low-to-high, monic
};

const std::vector<DefaultModulus>& default_moduli() {
  static const std::vector<DefaultModulus> table = {
      {2, 1, {1, 1}},
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {3, 1, {1, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {5, 1, {3, 1}},
      {5, 2, {2, 4, 1}},
      {7, 1, {4, 1}},
      {7, 2, {3, 6, 1}},
      {11, 1, {9, 1}},
      {11, 2, {2, 7, 1}},
      {13, 1, {11, 1}},
      {13, 2, {2, 12, 1}},
  };
  return table;
}

using Poly = std::vector<std::int64_t>;  // low-to-high, coefficients mod p

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  int dm = degree(m);
  std::int64_t lead_inv = 1;
  {
    // modulus is monic in all our uses, but handle the general case
    std::int64_t lead = m[dm];
    for (std::int64_t x = 1; x < p; ++x)
      if (x * lead % p == 1) { lead_inv = x; break; }
  }
  for (int i = degree(a); i >= dm; --i) {
    std::int64_t c = a[i] % p;
    if (c == 0) continue;
    std::int64_t f = c * lead_inv % p;
    for (int j = 0; j <= dm; ++j) {
      a[i - dm + j] = ((a[i - dm + j] - f * m[j]) % p + p * p) % p;
    }
  }
  a.resize(dm);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  Poly c(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

// Remainder of a by b over F_p; b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  int db = degree(b);
  if (db < 0) throw std::domain_error("poly_rem by zero");
  std::int64_t lead = b[db], lead_inv = 1;
  for (std::int64_t x = 1; x < p; ++x)
    if (x * lead % p == 1) { lead_inv = x; break; }
  for (int i = degree(a); i >= db; --i) {
    std::int64_t c = a[i] % p;
    if (c == 0) continue;
    std::int64_t f = c * lead_inv % p;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p * p) % p;
  }
  if (degree(a) >= db) throw std::logic_error("poly_rem failed");
  return a;
}

bool poly_is_zero(const Poly& f) { return degree(f) < 0; }

// Exhaustive irreducibility test: no monic divisor of degree 1..e/2.
bool is_irreducible(const Poly& m, std::int64_t p, int e) {
  if (e > 12) throw std::domain_error("irreducibility check supported for e <= 12 only");
  for (int d = 1; d <= e / 2; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Poly div(d + 1, 0);
      std::int64_t t = idx;
      for (int i = 0; i < d; ++i) { div[i] = t % p; t /= p; }
      div[d] = 1;  // monic
      if (poly_is_zero(poly_rem(m, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void factor_prime_power(std::int64_t q, std::int64_t& p, int& e) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  std::int64_t d = 2;
  while (d * d <= q && q % d != 0) ++d;
  p = (d * d <= q) ? d : q;
  e = 0;
  std::int64_t t = q;
  while (t % p == 0) { t /= p; ++e; }
  if (t != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
}

FieldSpec::FieldSpec(std::int64_t p, int e, std::vector<std::int64_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
  if (e_ < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (static_cast<int>(modulus_.size()) != e_ + 1)
    throw std::invalid_argument("modulus must have degree e");
  for (auto& c : modulus_) c = ((c % p_) + p_) % p_;
  if (modulus_[e_] != 1) throw std::invalid_argument("modulus must be monic");
  if (!is_irreducible(modulus_, p_, e_))
    throw std::invalid_argument("modulus is reducible over F_p");

  q_ = 1;
  for (int i = 0; i < e_; ++i) {
    if (q_ > (1LL << 40) / p_) throw std::invalid_argument("field too large");
    q_ *= p_;
  }

  if (q_ <= 4096) {
    tabled_ = true;
    mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
    inv_table_.assign(q_, 0);
    for (std::int64_t a = 0; a < q_; ++a)
      for (std::int64_t b = a; b < q_; ++b) {
        std::int64_t ab = mul_slow(a, b);
        mul_table_[a * q_ + b] = ab;
        mul_table_[b * q_ + a] = ab;
        if (ab == 1) { inv_table_[a] = b; inv_table_[b] = a; }
      }
  }
}

FieldSpec FieldSpec::with_default_modulus(std::int64_t p, int e) {
  for (const auto& d : default_moduli())
    if (d.p == p && d.e == e) return FieldSpec(p, e, d.coeffs);
  if (e == 1) {
    // F_p needs no genuine modulus; x - 1 is monic of degree 1.
    return FieldSpec(p, 1, {static_cast<std::int64_t>(p - 1), 1});
  }
  throw std::invalid_argument("no default modulus shipped for p=" + std::to_string(p) +
                              ", e=" + std::to_string(e) + "; supply one explicitly");
}

std::vector<std::int64_t> FieldSpec::decode(std::int64_t a) const {
  std::vector<std::int64_t> c(e_);
  for (int i = 0; i < e_; ++i) { c[i] = a % p_; a /= p_; }
  return c;
}

std::int64_t FieldSpec::encode(const std::vector<std::int64_t>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > e_) {
    for (size_t i = e_; i < coeffs.size(); ++i)
      if (coeffs[i] % p_ != 0) throw std::invalid_argument("field element has degree >= e");
  }
  std::int64_t a = 0;
  for (int i = std::min<int>(e_, static_cast<int>(coeffs.size())) - 1; i >= 0; --i)
    a = a * p_ + (((coeffs[i] % p_) + p_) % p_);
  return a;
}

std::int64_t FieldSpec::add(std::int64_t a, std::int64_t b) const {
  std::int64_t r = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_; b /= p_; mult *= p_;
  }
  return r;
}

std::int64_t FieldSpec::neg(std::int64_t a) const {
  std::int64_t r = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_; mult *= p_;
  }
  return r;
}

std::int64_t FieldSpec::sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

std::int64_t FieldSpec::mul_slow(std::int64_t a, std::int64_t b) const {
  Poly fa = decode(a), fb = decode(b);
  return encode(poly_mod(poly_mul(fa, fb, p_), modulus_, p_));
}

std::int64_t FieldSpec::mul(std::int64_t a, std::int64_t b) const {
  if (tabled_) return mul_table_[a * q_ + b];
  return mul_slow(a, b);
}

std::int64_t FieldSpec::pow(std::int64_t a, std::int64_t k) const {
  if (k < 0) { a = inv(a); k = -k; }
  std::int64_t r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::int64_t FieldSpec::inv(std::int64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  if (tabled_) return inv_table_[a];
  return pow(a, q_ - 2);
}

std::int64_t FieldSpec::element_order(std::int64_t a) const {
  if (a == 0) throw std::domain_error("element_order of zero");
  std::int64_t r = a, k = 1;
  while (r != 1) { r = mul(r, a); ++k; }
  return k;
}

std::int64_t FieldSpec::multiplicative_generator() const {
  for (std::int64_t a = 1; a < q_; ++a)
    if (element_order(a) == q_ - 1) return a;
  throw std::logic_error("no multiplicative generator found");
}

std::vector<std::int64_t> FieldSpec::roots_of_unity(std::int64_t d) const {
  std::vector<std::int64_t> r;
  for (std::int64_t a = 1; a < q_; ++a)
    if (pow(a, d) == 1) r.push_back(a);
  return r;
}

}  // namespace groupmix
