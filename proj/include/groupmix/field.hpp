#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace groupmix {

/// F_{p^e} described by a monic irreducible modulus polynomial over F_p
/// (coefficients low-to-high, length e+1). Elements are stored by their
/// integer encoding sum(c_i * p^i), which also fixes the canonical total
/// order used everywhere for tie-breaking.
class FieldSpec {
 public:
  /// Builds the field, checking that p is prime and the modulus is monic and
  /// irreducible (exhaustive factor search, supported for e <= 12).
  FieldSpec(std::int64_t p, int e, std::vector<std::int64_t> modulus);

  /// Field with the shipped default modulus for (p, e).
  static FieldSpec with_default_modulus(std::int64_t p, int e);

  std::int64_t p() const { return p_; }
  int e() const { return e_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  // Arithmetic on encoded elements (each in [0, q)).
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;  // throws on a == 0
  std::int64_t pow(std::int64_t a, std::int64_t k) const;

  std::int64_t zero() const { return 0; }
  std::int64_t one() const { return 1; }

  /// Multiplicative order of a nonzero element.
  std::int64_t element_order(std::int64_t a) const;

  /// Smallest-encoded generator of the multiplicative group.
  std::int64_t multiplicative_generator() const;

  /// mu_d = { x : x^d = 1 }, ascending by encoding. Size gcd(q-1, d).
  std::vector<std::int64_t> roots_of_unity(std::int64_t d) const;

  std::vector<std::int64_t> decode(std::int64_t a) const;  // coefficient vector, length e
  std::int64_t encode(const std::vector<std::int64_t>& coeffs) const;

  bool operator==(const FieldSpec& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

 private:
  std::int64_t p_;
  int e_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;

  // Dense tables for small fields; polynomial arithmetic above the cutoff.
  bool tabled_ = false;
  std::vector<std::int64_t> mul_table_;
  std::vector<std::int64_t> inv_table_;

  std::int64_t mul_slow(std::int64_t a, std::int64_t b) const;
};

bool is_prime(std::int64_t n);

/// Factors q as p^e with p prime; throws if q is not a prime power.
void factor_prime_power(std::int64_t q, std::int64_t& p, int& e);

}  // namespace groupmix
