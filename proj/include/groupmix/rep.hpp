#pragma once

#include <optional>
#include <vector>

#include "groupmix/group.hpp"
#include "groupmix/numeric.hpp"

namespace groupmix {

/// Minimal extended-precision complex scalar for representation numerics.
struct Cplx {
  BigFloat re, im;

  Cplx() : re(0), im(0) {}
  Cplx(BigFloat r) : re(std::move(r)), im(0) {}
  Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
  Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
  Cplx operator*(const Cplx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cplx conj() const { return {re, -im}; }
  BigFloat norm2() const { return re * re + im * im; }
};

using CMatrix = std::vector<Cplx>;  // row-major d x d
using CVector = std::vector<Cplx>;

/// An explicit unitary representation of a finite group: one matrix per
/// element, held at extended precision. The constructor checks rho(e) = I,
/// the homomorphism property on sampled pairs, and near-unitarity.
class MatrixRep {
 public:
  MatrixRep(GroupPtr group, int dim, ElemMap<CMatrix> matrices);

  const Group& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int dim() const { return d_; }
  const CMatrix& at(const Elem& g) const;
  const std::vector<Elem>& elements() const { return elements_; }

  /// True when every entry of every matrix has negligible imaginary part.
  bool is_real() const;

 private:
  GroupPtr group_;
  int d_;
  std::vector<Elem> elements_;
  ElemMap<CMatrix> matrices_;
};

struct RepStep {
  Elem g;
  BigFloat p;
};

struct RepMixingSequence {
  std::vector<RepStep> steps;
  BigFloat residual;  // Frobenius norm of the ordered step-matrix product
};

// ---- matrix helpers (exposed for tests) ------------------------------------

CMatrix cmat_identity(int d);
CMatrix cmat_mul(const CMatrix& a, const CMatrix& b, int d);
/// (1-p) I + p M
CMatrix cmat_step(const CMatrix& m, const BigFloat& p, int d);
BigFloat cmat_frobenius(const CMatrix& m, int d);
Cplx cmat_det(CMatrix m, int d);  // Gaussian elimination
/// Multiplicity of -1 as an eigenvalue: d - rank(I + M).
int minus_one_multiplicity(const CMatrix& m, int d);

inline const char* kEigenTol = "1e-20";

// ---- operations ------------------------------------------------------

/// Finds an element whose image has eigenvalue -1, replaced by an odd power
/// so the returned witness has 2-power order. Nothing when no image does.
std::optional<Elem> potential_mixability_witness(const MatrixRep& rep);

/// (1-p)I + p rho(g) is singular iff p = 1/2 and -1 is an eigenvalue of
/// rho(g). Exposed for the exhaustive criterion tests.
bool step_matrix_singular(const MatrixRep& rep, const Elem& g, const BigFloat& p);

/// One step (g, p) whose matrix sends v into its orthogonal complement.
/// Requires a nontrivial irreducible real representation.
RepStep kill_vector_step(const MatrixRep& rep, const CVector& v);

/// Mixes a nontrivial irreducible representation:
///   rho(a) = -I            -> one step;
///   -1 with multiplicity d-1 -> three steps;
///   real 3-dimensional      -> the seven-step annihilation pipeline.
/// Throws when no witness exists or the shape is unsupported.
RepMixingSequence mix_rep(const MatrixRep& rep);

/// Frobenius norm of prod_i ((1-p_i) I + p_i rho(g_i)), in listed order.
BigFloat verify_rep_sequence(const MatrixRep& rep, const std::vector<RepStep>& steps);

/// Sum over p = 1/2 steps of dim ker(I + rho(g_i)); at least d for any
/// sequence whose product vanishes.
int kernel_dimension_budget(const MatrixRep& rep, const std::vector<RepStep>& steps);

// ---- built-in representations ---------------------------------------------

/// The sign character through D_n/<sigma> followed by the floor((n-1)/2)
/// two-dimensional rotation/reflection representations.
std::vector<MatrixRep> dihedral_irreps(std::int64_t n);

/// The standard (n-1)-dimensional irreducible representation of S_n, in an
/// orthonormal basis of the sum-zero subspace.
MatrixRep symmetric_standard_rep(int n);

/// The sign character of S_n.
MatrixRep symmetric_sign_rep(int n);

/// The one-dimensional character k of Z/n (k-th power of the primitive one).
MatrixRep cyclic_character(std::int64_t n, std::int64_t k);

}  // namespace groupmix
