#include "groupmix/rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupmix {

namespace {

const BigFloat& eigen_tol() {
  static const BigFloat tol(kEigenTol);
  return tol;
}

BigFloat fabsb(const BigFloat& x) { return x < 0 ? BigFloat(-x) : x; }

}  // namespace

CMatrix cmat_identity(int d) {
  CMatrix m(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i) m[i * d + i] = Cplx(BigFloat(1));
  return m;
}

CMatrix cmat_mul(const CMatrix& a, const CMatrix& b, int d) {
  CMatrix c(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Cplx& aik = a[i * d + k];
      if (aik.norm2() == 0) continue;
      for (int j = 0; j < d; ++j) c[i * d + j] = c[i * d + j] + aik * b[k * d + j];
    }
  return c;
}

CMatrix cmat_step(const CMatrix& m, const BigFloat& p, int d) {
  CMatrix out(static_cast<size_t>(d) * d);
  const BigFloat keep = 1 - p;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      out[i * d + j] = Cplx(p) * m[i * d + j];
      if (i == j) out[i * d + j] = out[i * d + j] + Cplx(keep);
    }
  return out;
}

BigFloat cmat_frobenius(const CMatrix& m, int d) {
  BigFloat s(0);
  for (const auto& x : m) s += x.norm2();
  (void)d;
  return sqrt(s);
}

Cplx cmat_det(CMatrix a, int d) {
  Cplx det(BigFloat(1));
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    BigFloat best(0);
    for (int row = col; row < d; ++row) {
      BigFloat mag = a[row * d + col].norm2();
      if (mag > best) { best = mag; pivot = row; }
    }
    if (pivot < 0 || best == 0) return Cplx(BigFloat(0));
    if (pivot != col) {
      for (int j = 0; j < d; ++j) std::swap(a[pivot * d + j], a[col * d + j]);
      det = det * Cplx(BigFloat(-1));
    }
    Cplx pv = a[col * d + col];
    det = det * pv;
    BigFloat pn = pv.norm2();
    Cplx pv_inv(pv.re / pn, -pv.im / pn);
    for (int row = col + 1; row < d; ++row) {
      Cplx f = a[row * d + col] * pv_inv;
      if (f.norm2() == 0) continue;
      for (int j = col; j < d; ++j)
        a[row * d + j] = a[row * d + j] - f * a[col * d + j];
    }
  }
  return det;
}

int minus_one_multiplicity(const CMatrix& m, int d) {
  // rank of I + M by Gaussian elimination with a pivot threshold
  CMatrix a = m;
  for (int i = 0; i < d; ++i) a[i * d + i] = a[i * d + i] + Cplx(BigFloat(1));
  const BigFloat thresh = eigen_tol() * eigen_tol();  // on |pivot|^2
  int rank = 0;
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int pivot = -1;
    BigFloat best(0);
    for (int r = row; r < d; ++r) {
      BigFloat mag = a[r * d + col].norm2();
      if (mag > best) { best = mag; pivot = r; }
    }
    if (pivot < 0 || best < thresh) continue;
    if (pivot != row)
      for (int j = 0; j < d; ++j) std::swap(a[pivot * d + j], a[row * d + j]);
    Cplx pv = a[row * d + col];
    BigFloat pn = pv.norm2();
    Cplx pv_inv(pv.re / pn, -pv.im / pn);
    for (int r = row + 1; r < d; ++r) {
      Cplx f = a[r * d + col] * pv_inv;
      if (f.norm2() == 0) continue;
      for (int j = col; j < d; ++j) a[r * d + j] = a[r * d + j] - f * a[row * d + j];
    }
    ++rank;
    ++row;
  }
  return d - rank;
}

MatrixRep::MatrixRep(GroupPtr group, int dim, ElemMap<CMatrix> matrices)
    : group_(std::move(group)), d_(dim), matrices_(std::move(matrices)) {
  if (d_ < 1) throw std::invalid_argument("representation dimension must be >= 1");
  elements_ = group_->enumerate();
  if (matrices_.size() != elements_.size())
    throw std::invalid_argument("representation must assign a matrix to every element");
  for (const auto& e : elements_) {
    auto it = matrices_.find(e);
    if (it == matrices_.end())
      throw std::invalid_argument("representation misses an element");
    if (it->second.size() != static_cast<size_t>(d_) * d_)
      throw std::invalid_argument("representation matrix has wrong shape");
  }
  const BigFloat tol("1e-25");
  // rho(e) = I
  {
    CMatrix diff = at(group_->identity());
    for (int i = 0; i < d_; ++i) diff[i * d_ + i] = diff[i * d_ + i] - Cplx(BigFloat(1));
    if (cmat_frobenius(diff, d_) > tol)
      throw std::invalid_argument("rho(identity) is not the identity matrix");
  }
  // homomorphism and unitarity, sampled
  for (size_t i = 0; i < elements_.size(); i += std::max<size_t>(1, elements_.size() / 8))
    for (size_t j = 0; j < elements_.size(); j += std::max<size_t>(1, elements_.size() / 8)) {
      CMatrix prod = cmat_mul(at(elements_[i]), at(elements_[j]), d_);
      CMatrix expect = at(group_->multiply(elements_[i], elements_[j]));
      for (size_t k = 0; k < prod.size(); ++k) prod[k] = prod[k] - expect[k];
      if (cmat_frobenius(prod, d_) > tol)
        throw std::invalid_argument("representation is not a homomorphism");
    }
  for (const auto& e : elements_) {
    // columns orthonormal: M* M = I
    const CMatrix& m = at(e);
    CMatrix mstar(static_cast<size_t>(d_) * d_);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) mstar[i * d_ + j] = m[j * d_ + i].conj();
    CMatrix g = cmat_mul(mstar, m, d_);
    for (int i = 0; i < d_; ++i) g[i * d_ + i] = g[i * d_ + i] - Cplx(BigFloat(1));
    if (cmat_frobenius(g, d_) > tol)
      throw std::invalid_argument("representation is not unitary");
  }
}

const CMatrix& MatrixRep::at(const Elem& g) const {
  auto it = matrices_.find(g);
  if (it == matrices_.end()) throw std::invalid_argument("element has no matrix");
  return it->second;
}

bool MatrixRep::is_real() const {
  for (const auto& [e, m] : matrices_)
    for (const auto& x : m)
      if (fabsb(x.im) > eigen_tol()) return false;
  return true;
}

std::optional<Elem> potential_mixability_witness(const MatrixRep& rep) {
  const int d = rep.dim();
  for (const auto& e : rep.elements()) {
    CMatrix a = rep.at(e);
    for (int i = 0; i < d; ++i) a[i * d + i] = a[i * d + i] + Cplx(BigFloat(1));
    if (cmat_det(std::move(a), d).norm2() > eigen_tol() * eigen_tol()) continue;
    // -1 is an eigenvalue; pass to the odd-power so the order is a power of 2
    std::int64_t k = element_order(rep.group(), e);
    std::int64_t m = k;
    while (m % 2 == 0) m /= 2;
    return rep.group().power(e, m);
  }
  return std::nullopt;
}

bool step_matrix_singular(const MatrixRep& rep, const Elem& g, const BigFloat& p) {
  const int d = rep.dim();
  CMatrix m = cmat_step(rep.at(g), p, d);
  BigFloat mag = sqrt(cmat_det(std::move(m), d).norm2());
  if (mag < BigFloat("1e-25")) return true;
  if (mag > BigFloat("1e-10")) return false;
  throw std::logic_error("singularity test is numerically ambiguous");
}

namespace {

Cplx inner(const CVector& a, const CVector& b) {
  // <a, b> with conjugation on the second slot
  Cplx s;
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i].conj();
  return s;
}

CVector mat_vec(const CMatrix& m, const CVector& v, int d) {
  CVector out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[i] = out[i] + m[i * d + j] * v[j];
  return out;
}

CVector normalized(CVector v) {
  BigFloat n(0);
  for (const auto& x : v) n += x.norm2();
  n = sqrt(n);
  if (n == 0) throw std::invalid_argument("zero vector");
  for (auto& x : v) x = Cplx(x.re / n, x.im / n);
  return v;
}

// Three steps [(a,1/2), (h a h^-1, 1/(1-alpha)), (a,1/2)] annihilating the
// d-dimensional space when rho(a) has eigenvalue -1 with multiplicity d-1.
// The pool restricts the h-scan (used for the subgroup action in the 3-dim
// pipeline); rho_of maps pool elements to their matrices.
template <class RhoOf>
std::vector<RepStep> corank_one_steps(const Group& g, const std::vector<Elem>& pool,
                                      const RhoOf& rho_of, const Elem& a, int d) {
  CMatrix ma = rho_of(a);
  // v1: the +1-eigenvector, via the projector (M + I)/2
  CVector v1;
  {
    BigFloat best(-1);
    for (int j = 0; j < d; ++j) {
      CVector col(d);
      for (int i = 0; i < d; ++i) {
        col[i] = ma[i * d + j];
        if (i == j) col[i] = col[i] + Cplx(BigFloat(1));
      }
      BigFloat n(0);
      for (const auto& x : col) n += x.norm2();
      if (n > best) { best = n; v1 = col; }
    }
    v1 = normalized(v1);
  }

  const BigFloat margin("1e-12");
  for (const auto& h : pool) {
    Elem hah = g.conjugate(h, a);
    BigFloat alpha = inner(mat_vec(rho_of(hah), v1, d), v1).re;
    if (alpha < -margin) {
      BigFloat p = BigFloat(1) / (BigFloat(1) - alpha);
      return {{a, BigFloat("0.5")}, {hah, p}, {a, BigFloat("0.5")}};
    }
  }
  throw std::logic_error("no conjugate with negative diagonal entry found");
}

CVector cross3(const CVector& a, const CVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

RepStep kill_vector_step(const MatrixRep& rep, const CVector& v) {
  if (!rep.is_real()) throw std::invalid_argument("kill_vector_step needs a real representation");
  const int d = rep.dim();
  CVector vhat = normalized(v);
  // sum_g <rho(g) v, v> = 0 for a nontrivial irreducible, and the identity
  // contributes +1, so a strictly negative term exists.
  const BigFloat margin("1e-12");
  for (const auto& e : rep.elements()) {
    BigFloat alpha = inner(mat_vec(rep.at(e), vhat, d), vhat).re;
    if (alpha < -margin) return {e, BigFloat(1) / (BigFloat(1) - alpha)};
  }
  throw std::logic_error("kill_vector_step: no negative inner product found");
}

RepMixingSequence mix_rep(const MatrixRep& rep) {
  const int d = rep.dim();
  auto rho = [&](const Elem& e) -> const CMatrix& { return rep.at(e); };

  std::vector<RepStep> steps;

  // Case -I: one step.
  for (const auto& e : rep.elements()) {
    CMatrix m = rep.at(e);
    for (int i = 0; i < d; ++i) m[i * d + i] = m[i * d + i] + Cplx(BigFloat(1));
    if (cmat_frobenius(m, d) < eigen_tol()) {
      steps = {{e, BigFloat("0.5")}};
      RepMixingSequence out{steps, verify_rep_sequence(rep, steps)};
      return out;
    }
  }

  // First involution image in enumeration order drives the dispatch.
  std::optional<Elem> witness;
  for (const auto& e : rep.elements()) {
    if (e == rep.group().identity()) continue;
    CMatrix sq = cmat_mul(rep.at(e), rep.at(e), d);
    for (int i = 0; i < d; ++i) sq[i * d + i] = sq[i * d + i] - Cplx(BigFloat(1));
    if (cmat_frobenius(sq, d) > eigen_tol()) continue;
    CMatrix diff = rep.at(e);
    for (int i = 0; i < d; ++i) diff[i * d + i] = diff[i * d + i] - Cplx(BigFloat(1));
    if (cmat_frobenius(diff, d) < eigen_tol()) continue;  // rho(e) = I
    witness = e;
    break;
  }
  if (!witness)
    throw std::invalid_argument("representation has no potential-mixability witness");

  const Elem a = *witness;
  int mult = minus_one_multiplicity(rep.at(a), d);

  if (mult == d - 1) {
    steps = corank_one_steps(rep.group(), rep.elements(), rho, a, d);
    return {steps, verify_rep_sequence(rep, steps)};
  }

  if (d == 3 && rep.is_real() && mult == 1) {
    // Fixed plane U of rho(a); w spans the -1 line, so U = w-perp.
    CMatrix ma = rep.at(a);
    CVector w;
    {
      BigFloat best(-1);
      for (int j = 0; j < 3; ++j) {
        CVector col(3);
        for (int i = 0; i < 3; ++i) {
          col[i] = Cplx(BigFloat(i == j ? 1 : 0)) - ma[i * 3 + j];
        }
        BigFloat n(0);
        for (const auto& x : col) n += x.norm2();
        if (n > best) { best = n; w = col; }
      }
      w = normalized(w);
    }

    // g with gU != U, i.e. rho(g) w not collinear with w.
    std::optional<Elem> mover;
    CVector w2;
    for (const auto& e : rep.elements()) {
      CVector cand = mat_vec(rep.at(e), w, 3);
      if (sqrt(inner(cand, w).norm2()) < BigFloat(1) - BigFloat("1e-9")) {
        mover = e;
        w2 = cand;
        break;
      }
    }
    if (!mover) throw std::logic_error("rho(a) fixed-plane is G-invariant; rep not irreducible");

    // U0 = U n gU is spanned by w x w2; {w, z} is an orthonormal basis of
    // its orthogonal complement.
    CVector u0 = normalized(cross3(w, w2));
    CVector z = cross3(u0, w);

    Elem gag = rep.group().conjugate(*mover, a);
    auto h_pool = subgroup_closure(rep.group(), {a, gag});

    // 2-dimensional restriction of rho to span{w, z} for elements of H.
    auto rho2 = [&](const Elem& e) {
      const CMatrix& m = rep.at(e);
      CVector mw = mat_vec(m, w, 3), mz = mat_vec(m, z, 3);
      CMatrix r(4);
      r[0] = inner(mw, w);
      r[1] = inner(mz, w);
      r[2] = inner(mw, z);
      r[3] = inner(mz, z);
      return r;
    };

    auto annihilator = corank_one_steps(rep.group(), h_pool, rho2, a, 2);
    RepStep kill = kill_vector_step(rep, u0);

    // product order: rightmost block maps R^3 to U0, then the kill step maps
    // U0 into its complement, then the recomputed annihilator finishes.
    auto annihilator2 = corank_one_steps(rep.group(), h_pool, rho2, a, 2);
    steps = annihilator2;
    steps.push_back(kill);
    steps.insert(steps.end(), annihilator.begin(), annihilator.end());
    RepMixingSequence out{steps, verify_rep_sequence(rep, steps)};
    if (out.residual > BigFloat(kDefaultNumericTol))
      throw std::logic_error("3-dimensional pipeline failed to annihilate");
    return out;
  }

  throw std::invalid_argument("unsupported representation shape for mix_rep");
}

BigFloat verify_rep_sequence(const MatrixRep& rep, const std::vector<RepStep>& steps) {
  const int d = rep.dim();
  CMatrix prod = cmat_identity(d);
  for (const auto& st : steps) prod = cmat_mul(prod, cmat_step(rep.at(st.g), st.p, d), d);
  return cmat_frobenius(prod, d);
}

int kernel_dimension_budget(const MatrixRep& rep, const std::vector<RepStep>& steps) {
  int total = 0;
  for (const auto& st : steps)
    if (fabsb(st.p - BigFloat("0.5")) < eigen_tol())
      total += minus_one_multiplicity(rep.at(st.g), rep.dim());
  return total;
}

// ---- built-ins ---------------------------------------------------------

std::vector<MatrixRep> dihedral_irreps(std::int64_t n) {
  auto group = std::make_shared<DihedralGroup>(n);
  std::vector<MatrixRep> reps;

  // sign character through G/<sigma>
  {
    ElemMap<CMatrix> mats;
    for (const auto& e : group->enumerate())
      mats.emplace(e, CMatrix{Cplx(BigFloat(e.v[1] ? -1 : 1))});
    reps.emplace_back(group, 1, std::move(mats));
  }

  const BigFloat pi = acos(BigFloat(-1));
  for (std::int64_t j = 1; j <= (n - 1) / 2; ++j) {
    ElemMap<CMatrix> mats;
    for (const auto& e : group->enumerate()) {
      BigFloat theta = BigFloat(2) * pi * j * e.v[0] / n;
      BigFloat c = cos(theta), s = sin(theta);
      // rotation by theta, reflected when the tau bit is set
      CMatrix m(4);
      if (e.v[1] == 0) {
        m[0] = Cplx(c); m[1] = Cplx(s);
        m[2] = Cplx(-s); m[3] = Cplx(c);
      } else {
        m[0] = Cplx(c); m[1] = Cplx(-s);
        m[2] = Cplx(-s); m[3] = Cplx(-c);
      }
      mats.emplace(e, std::move(m));
    }
    reps.emplace_back(group, 2, std::move(mats));
  }
  return reps;
}

MatrixRep symmetric_standard_rep(int n) {
  if (n < 2) throw std::invalid_argument("standard representation needs n >= 2");
  auto group = std::make_shared<SymmetricGroup>(n);
  const int d = n - 1;

  // Orthonormal basis u_1..u_{n-1} of the sum-zero subspace of R^n:
  // u_k = (1,...,1,-k,0,...,0)/sqrt(k(k+1)) with k ones.
  std::vector<std::vector<BigFloat>> basis(d, std::vector<BigFloat>(n, BigFloat(0)));
  for (int k = 1; k <= d; ++k) {
    BigFloat norm = sqrt(BigFloat(k) * (k + 1));
    for (int i = 0; i < k; ++i) basis[k - 1][i] = BigFloat(1) / norm;
    basis[k - 1][k] = BigFloat(-k) / norm;
  }

  ElemMap<CMatrix> mats;
  for (const auto& e : group->enumerate()) {
    // (P_sigma x)_i = x_{sigma^-1(i)}; entries <u_i, P u_j>
    CMatrix m(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        BigFloat s(0);
        for (int x = 0; x < n; ++x) {
          // P u_j has, at position sigma(x), the value u_j[x]
          s += basis[i][e.v[x] - 1] * basis[j][x];
        }
        m[i * d + j] = Cplx(s);
      }
    mats.emplace(e, std::move(m));
  }
  return MatrixRep(group, d, std::move(mats));
}

MatrixRep symmetric_sign_rep(int n) {
  auto group = std::make_shared<SymmetricGroup>(n);
  ElemMap<CMatrix> mats;
  for (const auto& e : group->enumerate())
    mats.emplace(e, CMatrix{Cplx(BigFloat(permutation_is_even(e) ? 1 : -1))});
  return MatrixRep(group, 1, std::move(mats));
}

MatrixRep cyclic_character(std::int64_t n, std::int64_t k) {
  auto group = std::make_shared<CyclicGroup>(n);
  const BigFloat pi = acos(BigFloat(-1));
  ElemMap<CMatrix> mats;
  for (const auto& e : group->enumerate()) {
    BigFloat theta = BigFloat(2) * pi * k * e.v[0] / n;
    mats.emplace(e, CMatrix{Cplx(cos(theta), sin(theta))});
  }
  return MatrixRep(group, 1, std::move(mats));
}

}  // namespace groupmix
