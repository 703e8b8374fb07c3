#include "groupmix/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace groupmix {

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::dihedral: return "dihedral";
    case GroupKind::symmetric: return "symmetric";
    case GroupKind::alternating: return "alternating";
    case GroupKind::signed_permutation: return "signed_permutation";
    case GroupKind::matrix: return "matrix";
    case GroupKind::cayley: return "cayley";
    case GroupKind::product: return "product";
  }
  return "?";
}

Elem Group::power(const Elem& a, std::int64_t k) const {
  Elem base = k < 0 ? inverse(a) : a;
  if (k < 0) k = -k;
  Elem r = identity();
  while (k) {
    if (k & 1) r = multiply(r, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return r;
}

namespace {

void check_order_bound(std::int64_t order, std::int64_t bound) {
  if (order > bound)
    throw std::length_error("enumeration bound exceeded: |G| = " + std::to_string(order) +
                            " > " + std::to_string(bound));
}

std::int64_t factorial_checked(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / i)
      throw std::overflow_error("group order overflows int64");
    r *= i;
  }
  return r;
}

}  // namespace

// ---- cyclic ----------------------------------------------------------------

CyclicGroup::CyclicGroup(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
}

Elem CyclicGroup::multiply(const Elem& a, const Elem& b) const {
  return Elem({static_cast<std::int32_t>((static_cast<std::int64_t>(a.v[0]) + b.v[0]) % n_)});
}

Elem CyclicGroup::inverse(const Elem& a) const {
  return Elem({static_cast<std::int32_t>((n_ - a.v[0]) % n_)});
}

void CyclicGroup::validate(const Elem& a) const {
  if (a.v.size() != 1 || a.v[0] < 0 || a.v[0] >= n_)
    throw std::invalid_argument("invalid cyclic element");
}

std::vector<Elem> CyclicGroup::enumerate(std::int64_t bound) const {
  check_order_bound(n_, bound);
  std::vector<Elem> out;
  out.reserve(n_);
  for (std::int64_t i = 0; i < n_; ++i) out.push_back(make(i));
  return out;
}

std::string CyclicGroup::describe() const { return "Z/" + std::to_string(n_); }

// ---- dihedral --------------------------------------------------------------

DihedralGroup::DihedralGroup(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("dihedral group needs n >= 1");
}

Elem DihedralGroup::multiply(const Elem& a, const Elem& b) const {
  // sigma^i tau^r * sigma^j tau^s = sigma^{i + (-1)^r j} tau^{r xor s}
  std::int64_t i = a.v[0], j = b.v[0];
  std::int32_t r = a.v[1], s = b.v[1];
  std::int64_t rot = r ? (i - j) : (i + j);
  rot = ((rot % n_) + n_) % n_;
  return Elem({static_cast<std::int32_t>(rot), static_cast<std::int32_t>(r ^ s)});
}

Elem DihedralGroup::inverse(const Elem& a) const {
  if (a.v[1]) return a;  // reflections are involutions
  return Elem({static_cast<std::int32_t>((n_ - a.v[0]) % n_), 0});
}

void DihedralGroup::validate(const Elem& a) const {
  if (a.v.size() != 2 || a.v[0] < 0 || a.v[0] >= n_ || (a.v[1] != 0 && a.v[1] != 1))
    throw std::invalid_argument("invalid dihedral element");
}

std::vector<Elem> DihedralGroup::enumerate(std::int64_t bound) const {
  check_order_bound(2 * n_, bound);
  std::vector<Elem> out;
  out.reserve(2 * n_);
  for (std::int64_t i = 0; i < n_; ++i)
    for (int r = 0; r <= 1; ++r) out.push_back(make(i, r));
  return out;
}

std::string DihedralGroup::describe() const {
  return "D_" + std::to_string(n_) + " (order " + std::to_string(2 * n_) + ")";
}

// ---- symmetric / alternating -----------------------------------------------

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("symmetric group needs n >= 1");
}

std::int64_t SymmetricGroup::order() const { return factorial_checked(n_); }

Elem SymmetricGroup::identity() const {
  std::vector<std::int32_t> img(n_);
  std::iota(img.begin(), img.end(), 1);
  return Elem(std::move(img));
}

Elem SymmetricGroup::multiply(const Elem& a, const Elem& b) const {
  // left action: (fg)(x) = f(g(x))
  std::vector<std::int32_t> img(n_);
  for (int x = 0; x < n_; ++x) img[x] = a.v[b.v[x] - 1];
  return Elem(std::move(img));
}

Elem SymmetricGroup::inverse(const Elem& a) const {
  std::vector<std::int32_t> img(n_);
  for (int x = 0; x < n_; ++x) img[a.v[x] - 1] = x + 1;
  return Elem(std::move(img));
}

void SymmetricGroup::validate(const Elem& a) const {
  if (static_cast<int>(a.v.size()) != n_)
    throw std::invalid_argument("permutation payload has wrong length");
  std::vector<bool> seen(n_, false);
  for (auto x : a.v) {
    if (x < 1 || x > n_ || seen[x - 1])
      throw std::invalid_argument("permutation images are not a bijection of {1..n}");
    seen[x - 1] = true;
  }
}

std::vector<Elem> SymmetricGroup::enumerate(std::int64_t bound) const {
  check_order_bound(order(), bound);
  std::vector<Elem> out;
  out.reserve(order());
  Elem cur = identity();
  do {
    out.push_back(cur);
  } while (std::next_permutation(cur.v.begin(), cur.v.end()));
  return out;
}

std::string SymmetricGroup::describe() const { return "S_" + std::to_string(n_); }

AlternatingGroup::AlternatingGroup(int n) : SymmetricGroup(n) {}

std::int64_t AlternatingGroup::order() const {
  std::int64_t s = factorial_checked(n_);
  return n_ < 2 ? s : s / 2;
}

void AlternatingGroup::validate(const Elem& a) const {
  SymmetricGroup::validate(a);
  if (!permutation_is_even(a))
    throw std::invalid_argument("odd permutation is not in the alternating group");
}

std::vector<Elem> AlternatingGroup::enumerate(std::int64_t bound) const {
  check_order_bound(order(), bound);
  std::vector<Elem> out;
  out.reserve(order());
  Elem cur = identity();
  do {
    if (permutation_is_even(cur)) out.push_back(cur);
  } while (std::next_permutation(cur.v.begin(), cur.v.end()));
  return out;
}

std::string AlternatingGroup::describe() const { return "A_" + std::to_string(n_); }

// ---- signed permutations ---------------------------------------------------

SignedPermGroup::SignedPermGroup(int n, bool even_only) : n_(n), even_only_(even_only) {
  if (n < 1) throw std::invalid_argument("signed permutation group needs n >= 1");
  if (n > 60) throw std::invalid_argument("signed permutation rank too large");
}

std::int64_t SignedPermGroup::order() const {
  std::int64_t f = factorial_checked(n_);
  int signs = even_only_ ? n_ - 1 : n_;
  for (int i = 0; i < signs; ++i) {
    if (f > std::numeric_limits<std::int64_t>::max() / 2)
      throw std::overflow_error("group order overflows int64");
    f *= 2;
  }
  return f;
}

Elem SignedPermGroup::identity() const {
  std::vector<std::int32_t> v(2 * n_, 0);
  std::iota(v.begin(), v.begin() + n_, 1);
  return Elem(std::move(v));
}

Elem SignedPermGroup::multiply(const Elem& a, const Elem& b) const {
  // (ab)(i) = a(b(i)); sign picks up a's sign at b's image.
  std::vector<std::int32_t> v(2 * n_);
  for (int i = 0; i < n_; ++i) {
    std::int32_t bi = b.v[i];
    v[i] = a.v[bi - 1];
    v[n_ + i] = b.v[n_ + i] ^ a.v[n_ + bi - 1];
  }
  return Elem(std::move(v));
}

Elem SignedPermGroup::inverse(const Elem& a) const {
  std::vector<std::int32_t> v(2 * n_);
  for (int i = 0; i < n_; ++i) {
    v[a.v[i] - 1] = i + 1;
    v[n_ + a.v[i] - 1] = a.v[n_ + i];
  }
  return Elem(std::move(v));
}

void SignedPermGroup::validate(const Elem& a) const {
  if (static_cast<int>(a.v.size()) != 2 * n_)
    throw std::invalid_argument("signed permutation payload has wrong length");
  std::vector<bool> seen(n_, false);
  int flips = 0;
  for (int i = 0; i < n_; ++i) {
    std::int32_t x = a.v[i];
    if (x < 1 || x > n_ || seen[x - 1])
      throw std::invalid_argument("signed permutation images are not a bijection");
    seen[x - 1] = true;
    if (a.v[n_ + i] != 0 && a.v[n_ + i] != 1)
      throw std::invalid_argument("sign bits must be 0/1");
    flips += a.v[n_ + i];
  }
  if (even_only_ && flips % 2 != 0)
    throw std::invalid_argument("odd sign count not allowed with even_only");
}

std::vector<Elem> SignedPermGroup::enumerate(std::int64_t bound) const {
  check_order_bound(order(), bound);
  std::vector<Elem> out;
  out.reserve(order());
  std::vector<std::int32_t> img(n_);
  std::iota(img.begin(), img.end(), 1);
  do {
    for (std::int64_t mask = 0; mask < (1LL << n_); ++mask) {
      if (even_only_ && (hamming_weight(mask) % 2) != 0) continue;
      std::vector<std::int32_t> v(2 * n_);
      std::copy(img.begin(), img.end(), v.begin());
      for (int i = 0; i < n_; ++i) v[n_ + i] = (mask >> i) & 1;
      out.push_back(Elem(std::move(v)));
    }
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::string SignedPermGroup::describe() const {
  return std::string(even_only_ ? "Coxeter D_" : "B_") + std::to_string(n_) + " (order " +
         std::to_string(order()) + ")";
}

// ---- cayley ----------------------------------------------------------------

CayleyGroup::CayleyGroup(std::vector<std::vector<std::int32_t>> table) : table_(std::move(table)) {
  auto n = static_cast<std::int64_t>(table_.size());
  if (n == 0) throw std::invalid_argument("cayley table is empty");
  inverse_.assign(n, -1);
  for (std::int64_t i = 0; i < n; ++i) {
    if (static_cast<std::int64_t>(table_[i].size()) != n)
      throw std::invalid_argument("cayley table is not square");
    std::vector<bool> seen(n, false);
    for (std::int64_t j = 0; j < n; ++j) {
      auto x = table_[i][j];
      if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("cayley row is not a bijection");
      seen[x] = true;
      if (x == 0) inverse_[i] = static_cast<std::int32_t>(j);
    }
    if (table_[i][0] != i || table_[0][i] != i)
      throw std::invalid_argument("cayley index 0 is not an identity");
  }
  // Associativity: exhaustive for small tables, randomized spot checks above.
  if (n <= 128) {
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        for (std::int64_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::invalid_argument("cayley table is not associative");
  } else {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
    for (int t = 0; t < 20000; ++t) {
      std::int64_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
        throw std::invalid_argument("cayley table is not associative");
    }
  }
  for (std::int64_t i = 0; i < n; ++i) {
    if (inverse_[i] < 0 || table_[inverse_[i]][i] != 0)
      throw std::invalid_argument("cayley element has no two-sided inverse");
  }
}

Elem CayleyGroup::multiply(const Elem& a, const Elem& b) const {
  return Elem({table_[a.v[0]][b.v[0]]});
}

Elem CayleyGroup::inverse(const Elem& a) const { return Elem({inverse_[a.v[0]]}); }

void CayleyGroup::validate(const Elem& a) const {
  if (a.v.size() != 1 || a.v[0] < 0 || a.v[0] >= order())
    throw std::invalid_argument("invalid cayley element index");
}

std::vector<Elem> CayleyGroup::enumerate(std::int64_t bound) const {
  check_order_bound(order(), bound);
  std::vector<Elem> out;
  out.reserve(order());
  for (std::int64_t i = 0; i < order(); ++i) out.push_back(make(i));
  return out;
}

std::string CayleyGroup::describe() const {
  return "cayley group of order " + std::to_string(order());
}

// ---- product ---------------------------------------------------------------

ProductGroup::ProductGroup(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("product group needs at least one factor");
  payload_size_ = 0;
  for (const auto& f : factors_) payload_size_ += f->payload_size();
}

std::int64_t ProductGroup::order() const {
  std::int64_t r = 1;
  for (const auto& f : factors_) {
    std::int64_t o = f->order();
    if (r > std::numeric_limits<std::int64_t>::max() / o)
      throw std::overflow_error("group order overflows int64");
    r *= o;
  }
  return r;
}

Elem ProductGroup::identity() const {
  Elem out;
  out.v.reserve(payload_size_);
  for (const auto& f : factors_) {
    Elem id = f->identity();
    out.v.insert(out.v.end(), id.v.begin(), id.v.end());
  }
  return out;
}

Elem ProductGroup::multiply(const Elem& a, const Elem& b) const {
  Elem out;
  out.v.reserve(payload_size_);
  size_t off = 0;
  for (const auto& f : factors_) {
    size_t sz = f->payload_size();
    Elem fa(std::vector<std::int32_t>(a.v.begin() + off, a.v.begin() + off + sz));
    Elem fb(std::vector<std::int32_t>(b.v.begin() + off, b.v.begin() + off + sz));
    Elem r = f->multiply(fa, fb);
    out.v.insert(out.v.end(), r.v.begin(), r.v.end());
    off += sz;
  }
  return out;
}

Elem ProductGroup::inverse(const Elem& a) const {
  Elem out;
  out.v.reserve(payload_size_);
  size_t off = 0;
  for (const auto& f : factors_) {
    size_t sz = f->payload_size();
    Elem fa(std::vector<std::int32_t>(a.v.begin() + off, a.v.begin() + off + sz));
    Elem r = f->inverse(fa);
    out.v.insert(out.v.end(), r.v.begin(), r.v.end());
    off += sz;
  }
  return out;
}

void ProductGroup::validate(const Elem& a) const {
  if (a.v.size() != payload_size_) throw std::invalid_argument("product payload has wrong length");
  size_t off = 0;
  for (const auto& f : factors_) {
    size_t sz = f->payload_size();
    f->validate(Elem(std::vector<std::int32_t>(a.v.begin() + off, a.v.begin() + off + sz)));
    off += sz;
  }
}

std::vector<Elem> ProductGroup::enumerate(std::int64_t bound) const {
  check_order_bound(order(), bound);
  std::vector<std::vector<Elem>> parts;
  for (const auto& f : factors_) parts.push_back(f->enumerate(bound));
  std::vector<Elem> out;
  out.reserve(order());
  std::vector<size_t> idx(parts.size(), 0);
  while (true) {
    Elem e;
    e.v.reserve(payload_size_);
    for (size_t i = 0; i < parts.size(); ++i)
      e.v.insert(e.v.end(), parts[i][idx[i]].v.begin(), parts[i][idx[i]].v.end());
    out.push_back(std::move(e));
    // odometer, last factor fastest (keeps lexicographic payload order)
    size_t i = parts.size();
    while (i > 0) {
      --i;
      if (++idx[i] < parts[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::string ProductGroup::describe() const {
  std::string s = "product(";
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += factors_[i]->describe();
  }
  return s + ")";
}

Elem ProductGroup::embed(size_t factor_index, const Elem& x) const {
  Elem out;
  out.v.reserve(payload_size_);
  for (size_t i = 0; i < factors_.size(); ++i) {
    Elem part = (i == factor_index) ? x : factors_[i]->identity();
    out.v.insert(out.v.end(), part.v.begin(), part.v.end());
  }
  return out;
}

Elem ProductGroup::component(size_t factor_index, const Elem& x) const {
  size_t off = 0;
  for (size_t i = 0; i < factor_index; ++i) off += factors_[i]->payload_size();
  size_t sz = factors_[factor_index]->payload_size();
  return Elem(std::vector<std::int32_t>(x.v.begin() + off, x.v.begin() + off + sz));
}

// ---- helpers ---------------------------------------------------------------

std::int64_t element_order(const Group& g, const Elem& a) {
  g.validate(a);
  Elem cur = a;
  Elem id = g.identity();
  std::int64_t k = 1;
  while (!(cur == id)) {
    cur = g.multiply(cur, a);
    ++k;
  }
  return k;
}

std::vector<Elem> subgroup_closure(const Group& g, const std::vector<Elem>& generators,
                                   std::int64_t bound) {
  ElemSet seen;
  std::deque<Elem> todo;
  Elem id = g.identity();
  seen.insert(id);
  todo.push_back(id);
  std::vector<Elem> gens = generators;
  for (auto& x : gens) {
    g.validate(x);
    if (seen.insert(x).second) todo.push_back(x);
  }
  while (!todo.empty()) {
    Elem cur = todo.front();
    todo.pop_front();
    for (const auto& x : gens) {
      for (Elem next : {g.multiply(cur, x), g.multiply(x, cur), g.inverse(cur)}) {
        if (seen.insert(next).second) {
          if (static_cast<std::int64_t>(seen.size()) > bound)
            throw std::length_error("subgroup closure exceeded enumeration bound");
          todo.push_back(std::move(next));
        }
      }
    }
    if (gens.empty()) break;
  }
  std::vector<Elem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elem>> conjugacy_classes(const Group& g, std::int64_t bound) {
  std::vector<Elem> all = g.enumerate(bound);
  ElemSet assigned;
  std::vector<std::vector<Elem>> classes;
  for (const auto& x : all) {
    if (assigned.count(x)) continue;
    ElemSet cls;
    for (const auto& h : all) cls.insert(g.conjugate(h, x));
    std::vector<Elem> sorted(cls.begin(), cls.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& y : sorted) assigned.insert(y);
    classes.push_back(std::move(sorted));
  }
  return classes;
}

bool is_subgroup(const Group& g, const std::vector<Elem>& elements) {
  if (elements.empty()) return false;
  ElemSet set(elements.begin(), elements.end());
  if (!set.count(g.identity())) return false;
  for (const auto& a : elements) {
    if (!set.count(g.inverse(a))) return false;
    for (const auto& b : elements)
      if (!set.count(g.multiply(a, b))) return false;
  }
  return true;
}

Quotient quotient_group(const Group& g, const std::vector<Elem>& normal_subgroup,
                        std::int64_t bound) {
  if (!is_subgroup(g, normal_subgroup))
    throw std::invalid_argument("quotient: N is not a subgroup");
  std::vector<Elem> all = g.enumerate(bound);
  ElemSet nset(normal_subgroup.begin(), normal_subgroup.end());
  for (const auto& x : all)
    for (const auto& n : normal_subgroup)
      if (!nset.count(g.conjugate(x, n)))
        throw std::invalid_argument("quotient: N is not normal in G");

  Quotient q;
  // Identity coset first so that index 0 is the identity of the quotient.
  std::vector<Elem> order_scan;
  order_scan.push_back(g.identity());
  for (const auto& x : all)
    if (!(x == g.identity())) order_scan.push_back(x);

  for (const auto& x : order_scan) {
    if (q.projection.count(x)) continue;
    std::int32_t idx = static_cast<std::int32_t>(q.coset_reps.size());
    Elem rep = x;
    std::vector<Elem> members;
    for (const auto& n : normal_subgroup) {
      Elem m = g.multiply(x, n);
      if (m < rep) rep = m;
      members.push_back(std::move(m));
    }
    for (auto& m : members) q.projection.emplace(std::move(m), idx);
    q.coset_reps.push_back(std::move(rep));
  }

  auto k = static_cast<std::int64_t>(q.coset_reps.size());
  std::vector<std::vector<std::int32_t>> table(k, std::vector<std::int32_t>(k));
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t j = 0; j < k; ++j)
      table[i][j] = q.projection.at(g.multiply(q.coset_reps[i], q.coset_reps[j]));
  q.group = std::make_shared<CayleyGroup>(std::move(table));
  return q;
}

SubgroupTable cayley_from_subgroup(const Group& g, const std::vector<Elem>& elements) {
  if (!is_subgroup(g, elements))
    throw std::invalid_argument("cayley_from_subgroup: set is not closed");
  SubgroupTable st;
  st.elements.push_back(g.identity());
  std::vector<Elem> rest;
  for (const auto& x : elements)
    if (!(x == g.identity())) rest.push_back(x);
  std::sort(rest.begin(), rest.end());
  st.elements.insert(st.elements.end(), rest.begin(), rest.end());
  for (size_t i = 0; i < st.elements.size(); ++i)
    st.index_of.emplace(st.elements[i], static_cast<std::int32_t>(i));
  auto k = static_cast<std::int64_t>(st.elements.size());
  std::vector<std::vector<std::int32_t>> table(k, std::vector<std::int32_t>(k));
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t j = 0; j < k; ++j)
      table[i][j] = st.index_of.at(g.multiply(st.elements[i], st.elements[j]));
  st.group = std::make_shared<CayleyGroup>(std::move(table));
  return st;
}

bool permutation_is_even(const Elem& perm) {
  int n = static_cast<int>(perm.v.size());
  std::vector<bool> seen(n, false);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm.v[j] - 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Elem transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("bad transposition indices");
  std::vector<std::int32_t> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[i - 1], img[j - 1]);
  return Elem(std::move(img));
}

Elem involution_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::int32_t> img(n);
  std::iota(img.begin(), img.end(), 1);
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 1 || i > n || j > n || i == j || img[i - 1] != i || img[j - 1] != j)
      throw std::invalid_argument("pairs are not disjoint transpositions");
    std::swap(img[i - 1], img[j - 1]);
  }
  return Elem(std::move(img));
}

}  // namespace groupmix
