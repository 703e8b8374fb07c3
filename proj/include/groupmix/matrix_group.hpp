#pragma once

#include <memory>
#include <string>
#include <vector>

#include "groupmix/field.hpp"
#include "groupmix/group.hpp"

namespace groupmix {

enum class MatrixFamily { GL, SL, PGL, PSL };

const char* family_name(MatrixFamily f);
MatrixFamily family_from_name(const std::string& s);

/// d x d matrices over F_q. Payloads are row-major field-element encodings.
/// PSL/PGL payloads are canonical coset representatives: the lexicographically
/// least matrix among {lambda*M} for lambda in mu_d(F_q) resp. F_q^x.
class MatrixGroup : public Group {
 public:
  MatrixGroup(MatrixFamily family, int d, std::shared_ptr<const FieldSpec> field);

  GroupKind kind() const override { return GroupKind::matrix; }
  std::int64_t order() const override;
  size_t payload_size() const override { return static_cast<size_t>(d_) * d_; }
  Elem identity() const override;
  Elem multiply(const Elem& a, const Elem& b) const override;
  Elem inverse(const Elem& a) const override;
  void validate(const Elem& a) const override;
  std::vector<Elem> enumerate(std::int64_t bound = kDefaultEnumBound) const override;
  std::string describe() const override;

  MatrixFamily family() const { return family_; }
  int d() const { return d_; }
  const FieldSpec& field() const { return *field_; }
  std::shared_ptr<const FieldSpec> field_ptr() const { return field_; }

  /// Builds an element from raw entries, checking the family's determinant
  /// constraint and canonicalizing projective representatives.
  Elem make_element(const std::vector<std::int64_t>& entries) const;

  /// Canonical representative of the scalar orbit of m (no-op for GL/SL).
  Elem canonicalize(const Elem& m) const;

  std::int64_t det(const Elem& m) const;

  // Projective machinery -----------------------------------------------------

  /// A projective point: homogeneous coordinates over F_q, normalized so the
  /// first nonzero coordinate is 1. Stored as encoded field elements.
  using ProjPoint = std::vector<std::int64_t>;

  ProjPoint normalize_point(ProjPoint hom) const;

  /// All points of P^{d-1}(F_q), canonical order (lex on normalized coords).
  std::vector<ProjPoint> projective_points() const;

  /// Matrix-vector action followed by normalization.
  ProjPoint apply_to_point(const Elem& m, const ProjPoint& x) const;

 private:
  MatrixFamily family_;
  int d_;
  std::shared_ptr<const FieldSpec> field_;
  std::vector<std::int64_t> scalar_orbit_;  // scalars used in canonicalization

  std::vector<std::int64_t> mat_mul(const std::vector<std::int64_t>& a,
                                    const std::vector<std::int64_t>& b) const;
};

/// What the mixability lattice licenses for (q, d): flags on the 2-power
/// structure of q-1, and the statements that follow for GL/SL/PGL/PSL.
struct MatrixFamilyStatus {
  std::int64_t q = 0, p = 0, d = 0;
  int e = 0;
  bool q_minus_1_pow2 = false;
  bool gcd_pow2 = false;        // gcd(q-1, d)
  bool quotient_pow2 = false;   // (q-1)/gcd(q-1, d)
  bool char2_psl2_construction = false;  // explicit PSL_2(F_{2^e}) sequence available
  std::vector<std::string> statements;
};

MatrixFamilyStatus matrix_family_status(std::int64_t q, std::int64_t d);

}  // namespace groupmix
