#include "groupmix/matrix_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace groupmix {

const char* family_name(MatrixFamily f) {
  switch (f) {
    case MatrixFamily::GL: return "GL";
    case MatrixFamily::SL: return "SL";
    case MatrixFamily::PGL: return "PGL";
    case MatrixFamily::PSL: return "PSL";
  }
  return "?";
}

MatrixFamily family_from_name(const std::string& s) {
  if (s == "GL") return MatrixFamily::GL;
  if (s == "SL") return MatrixFamily::SL;
  if (s == "PGL") return MatrixFamily::PGL;
  if (s == "PSL") return MatrixFamily::PSL;
  throw std::invalid_argument("unknown matrix family: " + s);
}

MatrixGroup::MatrixGroup(MatrixFamily family, int d, std::shared_ptr<const FieldSpec> field)
    : family_(family), d_(d), field_(std::move(field)) {
  if (d_ < 1 || d_ > 8) throw std::invalid_argument("matrix dimension must be in [1, 8]");
  switch (family_) {
    case MatrixFamily::PSL:
      scalar_orbit_ = field_->roots_of_unity(d_);
      break;
    case MatrixFamily::PGL:
      for (std::int64_t a = 1; a < field_->q(); ++a) scalar_orbit_.push_back(a);
      break;
    default:
      scalar_orbit_ = {1};
  }
}

std::int64_t MatrixGroup::order() const {
  const std::int64_t q = field_->q();
  // |GL_d(q)| = prod_{i<d} (q^d - q^i)
  auto checked_mul = [](std::int64_t a, std::int64_t b) {
    if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
      throw std::overflow_error("matrix group order overflows int64");
    return a * b;
  };
  std::int64_t qd = 1;
  for (int i = 0; i < d_; ++i) qd = checked_mul(qd, q);
  std::int64_t gl = 1, qi = 1;
  for (int i = 0; i < d_; ++i) {
    gl = checked_mul(gl, qd - qi);
    qi *= q;
  }
  std::int64_t g = std::gcd(q - 1, static_cast<std::int64_t>(d_));
  switch (family_) {
    case MatrixFamily::GL: return gl;
    case MatrixFamily::SL:
    case MatrixFamily::PGL: return gl / (q - 1);
    case MatrixFamily::PSL: return gl / (q - 1) / g;
  }
  return 0;
}

Elem MatrixGroup::identity() const {
  std::vector<std::int32_t> v(payload_size(), 0);
  for (int i = 0; i < d_; ++i) v[i * d_ + i] = 1;
  return Elem(std::move(v));
}

std::vector<std::int64_t> MatrixGroup::mat_mul(const std::vector<std::int64_t>& a,
                                               const std::vector<std::int64_t>& b) const {
  std::vector<std::int64_t> c(payload_size(), 0);
  for (int i = 0; i < d_; ++i)
    for (int k = 0; k < d_; ++k) {
      std::int64_t aik = a[i * d_ + k];
      if (aik == 0) continue;
      for (int j = 0; j < d_; ++j)
        c[i * d_ + j] = field_->add(c[i * d_ + j], field_->mul(aik, b[k * d_ + j]));
    }
  return c;
}

Elem MatrixGroup::canonicalize(const Elem& m) const {
  if (scalar_orbit_.size() == 1) return m;
  std::vector<std::int32_t> best = m.v;
  for (std::int64_t lam : scalar_orbit_) {
    if (lam == 1) continue;
    std::vector<std::int32_t> cand(payload_size());
    for (size_t i = 0; i < cand.size(); ++i)
      cand[i] = static_cast<std::int32_t>(field_->mul(lam, m.v[i]));
    if (cand < best) best = std::move(cand);
  }
  return Elem(std::move(best));
}

Elem MatrixGroup::multiply(const Elem& a, const Elem& b) const {
  std::vector<std::int64_t> av(a.v.begin(), a.v.end()), bv(b.v.begin(), b.v.end());
  auto cv = mat_mul(av, bv);
  std::vector<std::int32_t> out(cv.begin(), cv.end());
  return canonicalize(Elem(std::move(out)));
}

std::int64_t MatrixGroup::det(const Elem& m) const {
  // Gaussian elimination over F_q; sufficient for the small d we support.
  std::vector<std::int64_t> a(m.v.begin(), m.v.end());
  std::int64_t result = 1;
  for (int col = 0; col < d_; ++col) {
    int pivot = -1;
    for (int row = col; row < d_; ++row)
      if (a[row * d_ + col] != 0) { pivot = row; break; }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < d_; ++j) std::swap(a[pivot * d_ + j], a[col * d_ + j]);
      result = field_->neg(result);
    }
    std::int64_t pv = a[col * d_ + col];
    result = field_->mul(result, pv);
    std::int64_t pv_inv = field_->inv(pv);
    for (int row = col + 1; row < d_; ++row) {
      std::int64_t f = field_->mul(a[row * d_ + col], pv_inv);
      if (f == 0) continue;
      for (int j = col; j < d_; ++j)
        a[row * d_ + j] = field_->sub(a[row * d_ + j], field_->mul(f, a[col * d_ + j]));
    }
  }
  return result;
}

Elem MatrixGroup::inverse(const Elem& m) const {
  // Gauss-Jordan on [M | I].
  int d = d_;
  std::vector<std::int64_t> a(m.v.begin(), m.v.end());
  std::vector<std::int64_t> inv(payload_size(), 0);
  for (int i = 0; i < d; ++i) inv[i * d + i] = 1;
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row)
      if (a[row * d + col] != 0) { pivot = row; break; }
    if (pivot < 0) throw std::invalid_argument("singular matrix");
    if (pivot != col)
      for (int j = 0; j < d; ++j) {
        std::swap(a[pivot * d + j], a[col * d + j]);
        std::swap(inv[pivot * d + j], inv[col * d + j]);
      }
    std::int64_t pv_inv = field_->inv(a[col * d + col]);
    for (int j = 0; j < d; ++j) {
      a[col * d + j] = field_->mul(a[col * d + j], pv_inv);
      inv[col * d + j] = field_->mul(inv[col * d + j], pv_inv);
    }
    for (int row = 0; row < d; ++row) {
      if (row == col) continue;
      std::int64_t f = a[row * d + col];
      if (f == 0) continue;
      for (int j = 0; j < d; ++j) {
        a[row * d + j] = field_->sub(a[row * d + j], field_->mul(f, a[col * d + j]));
        inv[row * d + j] = field_->sub(inv[row * d + j], field_->mul(f, inv[col * d + j]));
      }
    }
  }
  std::vector<std::int32_t> out(inv.begin(), inv.end());
  return canonicalize(Elem(std::move(out)));
}

void MatrixGroup::validate(const Elem& a) const {
  if (a.v.size() != payload_size())
    throw std::invalid_argument("matrix payload has wrong length");
  for (auto x : a.v)
    if (x < 0 || x >= field_->q())
      throw std::invalid_argument("matrix entry out of field range");
  std::int64_t dt = det(a);
  if (dt == 0) throw std::invalid_argument("singular matrix");
  if ((family_ == MatrixFamily::SL || family_ == MatrixFamily::PSL) && dt != 1)
    throw std::invalid_argument("determinant must be 1 for SL/PSL");
  if (family_ == MatrixFamily::PSL || family_ == MatrixFamily::PGL) {
    if (!(canonicalize(a) == a))
      throw std::invalid_argument("matrix is not the canonical projective representative");
  }
}

Elem MatrixGroup::make_element(const std::vector<std::int64_t>& entries) const {
  if (entries.size() != payload_size())
    throw std::invalid_argument("matrix entries have wrong length");
  std::vector<std::int32_t> v;
  v.reserve(entries.size());
  for (auto x : entries) {
    if (x < 0 || x >= field_->q()) throw std::invalid_argument("matrix entry out of field range");
    v.push_back(static_cast<std::int32_t>(x));
  }
  Elem raw(std::move(v));
  std::int64_t dt = det(raw);
  if (dt == 0) throw std::invalid_argument("singular matrix");
  if ((family_ == MatrixFamily::SL || family_ == MatrixFamily::PSL) && dt != 1)
    throw std::invalid_argument("determinant must be 1 for SL/PSL");
  return canonicalize(raw);
}

std::vector<Elem> MatrixGroup::enumerate(std::int64_t bound) const {
  if (order() > bound)
    throw std::length_error("enumeration bound exceeded for matrix group");
  const std::int64_t q = field_->q();
  const size_t cells = payload_size();
  double scan = 1;
  for (size_t i = 0; i < cells; ++i) scan *= static_cast<double>(q);
  if (scan > 2e8) throw std::length_error("matrix enumeration scan too large");

  std::set<Elem> out;
  std::vector<std::int32_t> cur(cells, 0);
  while (true) {
    Elem m(cur);
    std::int64_t dt = det(m);
    bool ok = dt != 0;
    if (family_ == MatrixFamily::SL || family_ == MatrixFamily::PSL) ok = dt == 1;
    if (ok) out.insert(canonicalize(m));
    size_t i = cells;
    bool done = true;
    while (i > 0) {
      --i;
      if (++cur[i] < q) { done = false; break; }
      cur[i] = 0;
    }
    if (done) break;
  }
  return std::vector<Elem>(out.begin(), out.end());
}

std::string MatrixGroup::describe() const {
  return std::string(family_name(family_)) + "_" + std::to_string(d_) + "(F_" +
         std::to_string(field_->q()) + ")";
}

MatrixGroup::ProjPoint MatrixGroup::normalize_point(ProjPoint hom) const {
  // Scale so the trailing nonzero coordinate is 1; the projective line then
  // reads {[a:1]} plus the point at infinity [1:0].
  int lead = -1;
  for (int i = static_cast<int>(hom.size()) - 1; i >= 0; --i)
    if (hom[i] != 0) { lead = i; break; }
  if (lead < 0) throw std::invalid_argument("projective point cannot be the zero vector");
  std::int64_t s = field_->inv(hom[lead]);
  for (auto& c : hom) c = field_->mul(s, c);
  return hom;
}

std::vector<MatrixGroup::ProjPoint> MatrixGroup::projective_points() const {
  const std::int64_t q = field_->q();
  std::set<ProjPoint> pts;
  std::vector<std::int64_t> cur(d_, 0);
  while (true) {
    size_t i = d_;
    bool done = true;
    while (i > 0) {
      --i;
      if (++cur[i] < q) { done = false; break; }
      cur[i] = 0;
    }
    if (done) break;
    pts.insert(normalize_point(cur));
  }
  return std::vector<ProjPoint>(pts.begin(), pts.end());
}

MatrixGroup::ProjPoint MatrixGroup::apply_to_point(const Elem& m, const ProjPoint& x) const {
  if (static_cast<int>(x.size()) != d_)
    throw std::invalid_argument("projective point has wrong dimension");
  ProjPoint y(d_, 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      y[i] = field_->add(y[i], field_->mul(m.v[i * d_ + j], x[j]));
  return normalize_point(std::move(y));
}

MatrixFamilyStatus matrix_family_status(std::int64_t q, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  MatrixFamilyStatus st;
  st.q = q;
  st.d = d;
  factor_prime_power(q, st.p, st.e);

  auto pow2 = [](std::int64_t n) { return n >= 1 && (n & (n - 1)) == 0; };
  std::int64_t g = std::gcd(q - 1, d);
  st.q_minus_1_pow2 = pow2(q - 1);
  st.gcd_pow2 = pow2(g);
  st.quotient_pow2 = pow2((q - 1) / g);
  st.char2_psl2_construction = (st.p == 2 && d == 2);

  auto qs = std::to_string(q), ds = std::to_string(d);
  if (st.q_minus_1_pow2) {
    st.statements.push_back("GL_" + ds + "(F_" + qs + ") mixable (q-1 is a power of 2)");
    st.statements.push_back("SL_" + ds + "(F_" + qs + "), PSL_" + ds + "(F_" + qs + "), PGL_" +
                            ds + "(F_" + qs + ") mixable for all d >= 1");
  } else {
    st.statements.push_back("GL_" + ds + "(F_" + qs + ") not mixable (q-1 is not a power of 2)");
  }
  if (!st.gcd_pow2)
    st.statements.push_back("PGL_" + ds + "(F_" + qs +
                            ") not mixable (gcd(q-1,d) is not a power of 2)");
  if (st.char2_psl2_construction)
    st.statements.push_back("PSL_2(F_" + qs +
                            ") mixable: explicit characteristic-2 construction available");
  if (!st.q_minus_1_pow2 && st.quotient_pow2 && !st.char2_psl2_construction)
    st.statements.push_back("PSL_" + ds + "(F_" + qs + ") mixable if PSL_" +
                            std::to_string(d - 1) + "(F_" + qs +
                            ") is mixable ((q-1)/gcd(q-1,d) is a power of 2)");
  return st;
}

}  // namespace groupmix
