#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "groupmix/numeric.hpp"

namespace groupmix {

/// Default ceiling on the number of elements any enumeration-based operation
/// is willing to materialize. Operations fail loudly above it.
inline constexpr std::int64_t kDefaultEnumBound = 10'000'000;

/// A group element. The payload layout is fixed per group kind:
///   cyclic               [residue]
///   dihedral             [rot, ref]                 (sigma^rot * tau^ref)
///   symmetric            [img_1 .. img_n]           (1-based images)
///   alternating          [img_1 .. img_n]
///   signed_permutation   [img_1 .. img_n, s_1 .. s_n]
///   matrix               [a_11 .. a_dd]             (row-major field encodings)
///   cayley               [index]
///   product              concatenated factor payloads
/// Lexicographic order on the payload is the canonical element order; every
/// kind enumerates in this order.
struct Elem {
  std::vector<std::int32_t> v;

  Elem() = default;
  explicit Elem(std::vector<std::int32_t> payload) : v(std::move(payload)) {}

  bool operator==(const Elem& o) const { return v == o.v; }
  bool operator!=(const Elem& o) const { return v != o.v; }
  bool operator<(const Elem& o) const { return v < o.v; }
};

struct ElemHash {
  size_t operator()(const Elem& e) const {
    // FNV-1a over the payload words
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t x : e.v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

using ElemSet = std::unordered_set<Elem, ElemHash>;
template <class T>
using ElemMap = std::unordered_map<Elem, T, ElemHash>;

enum class GroupKind {
  cyclic,
  dihedral,
  symmetric,
  alternating,
  signed_permutation,
  matrix,
  cayley,
  product,
};

const char* kind_name(GroupKind k);

/// Immutable finite group. All operations are pure; instances are safe to
/// share across threads without synchronization.
class Group {
 public:
  virtual ~Group() = default;

  virtual GroupKind kind() const = 0;
  virtual std::int64_t order() const = 0;
  virtual size_t payload_size() const = 0;

  virtual Elem identity() const = 0;
  virtual Elem multiply(const Elem& a, const Elem& b) const = 0;
  virtual Elem inverse(const Elem& a) const = 0;

  /// Throws std::invalid_argument on a malformed or out-of-range payload.
  virtual void validate(const Elem& a) const = 0;

  /// All elements in canonical (lexicographic) order.
  /// Throws std::length_error when order() exceeds the bound.
  virtual std::vector<Elem> enumerate(std::int64_t bound = kDefaultEnumBound) const = 0;

  virtual std::string describe() const = 0;

  bool is_identity(const Elem& a) const { return a == identity(); }

  Elem conjugate(const Elem& h, const Elem& g) const {
    return multiply(multiply(h, g), inverse(h));
  }

  Elem power(const Elem& a, std::int64_t k) const;
};

using GroupPtr = std::shared_ptr<const Group>;

class CyclicGroup : public Group {
 public:
  explicit CyclicGroup(std::int64_t n);
  GroupKind kind() const override { return GroupKind::cyclic; }
  std::int64_t order() const override { return n_; }
  size_t payload_size() const override { return 1; }
  Elem identity() const override { return Elem({0}); }
  Elem multiply(const Elem& a, const Elem& b) const override;
  Elem inverse(const Elem& a) const override;
  void validate(const Elem& a) const override;
  std::vector<Elem> enumerate(std::int64_t bound = kDefaultEnumBound) const override;
  std::string describe() const override;
  std::int64_t n() const { return n_; }

  static Elem make(std::int64_t r) { return Elem({static_cast<std::int32_t>(r)}); }

 private:
  std::int64_t n_;
};

/// Dihedral group of order 2n, elements sigma^rot * tau^ref in normal form
/// with 0 <= rot < n and ref in {0,1}; tau*sigma*tau = sigma^-1.
class DihedralGroup : public Group {
 public:
  explicit DihedralGroup(std::int64_t n);
  GroupKind kind() const override { return GroupKind::dihedral; }
  std::int64_t order() const override { return 2 * n_; }
  size_t payload_size() const override { return 2; }
  Elem identity() const override { return Elem({0, 0}); }
  Elem multiply(const Elem& a, const Elem& b) const override;
  Elem inverse(const Elem& a) const override;
  void validate(const Elem& a) const override;
  std::vector<Elem> enumerate(std::int64_t bound = kDefaultEnumBound) const override;
  std::string describe() const override;
  std::int64_t n() const { return n_; }

  static Elem make(std::int64_t rot, int ref) {
    return Elem({static_cast<std::int32_t>(rot), static_cast<std::int32_t>(ref)});
  }

 private:
  std::int64_t n_;
};

/// Permutations act on the left: (fg)(x) = f(g(x)).
class SymmetricGroup : public Group {
 public:
  explicit SymmetricGroup(int n);
  GroupKind kind() const override { return GroupKind::symmetric; }
  std::int64_t order() const override;
  size_t payload_size() const override { return static_cast<size_t>(n_); }
  Elem identity() const override;
  Elem multiply(const Elem& a, const Elem& b) const override;
  Elem inverse(const Elem& a) const override;
  void validate(const Elem& a) const override;
  std::vector<Elem> enumerate(std::int64_t bound = kDefaultEnumBound) const override;
  std::string describe() const override;
  int n() const { return n_; }

 protected:
  int n_;
};

class AlternatingGroup : public SymmetricGroup {
 public:
  explicit AlternatingGroup(int n);
  GroupKind kind() const override { return GroupKind::alternating; }
  std::int64_t order() const override;
  void validate(const Elem& a) const override;
  std::vector<Elem> enumerate(std::int64_t bound = kDefaultEnumBound) const override;
  std::string describe() const override;
};

/// Signed permutations w(i) = (-1)^{s_i} img_i. With even_only, the Coxeter
/// D_n subgroup of words with an even number of sign flips.
class SignedPermGroup : public Group {
 public:
  SignedPermGroup(int n, bool even_only);
  GroupKind kind() const override { return GroupKind::signed_permutation; }
  std::int64_t order() const override;
  size_t payload_size() const override { return static_cast<size_t>(2 * n_); }
  Elem identity() const override;
  Elem multiply(const Elem& a, const Elem& b) const override;
  Elem inverse(const Elem& a) const override;
  void validate(const Elem& a) const override;
  std::vector<Elem> enumerate(std::int64_t bound = kDefaultEnumBound) const override;
  std::string describe() const override;
  int n() const { return n_; }
  bool even_only() const { return even_only_; }

 private:
  int n_;
  bool even_only_;
};

/// Group given by a full multiplication table; index 0 is the identity.
class CayleyGroup : public Group {
 public:
  explicit CayleyGroup(std::vector<std::vector<std::int32_t>> table);
  GroupKind kind() const override { return GroupKind::cayley; }
  std::int64_t order() const override { return static_cast<std::int64_t>(table_.size()); }
  size_t payload_size() const override { return 1; }
  Elem identity() const override { return Elem({0}); }
  Elem multiply(const Elem& a, const Elem& b) const override;
  Elem inverse(const Elem& a) const override;
  void validate(const Elem& a) const override;
  std::vector<Elem> enumerate(std::int64_t bound = kDefaultEnumBound) const override;
  std::string describe() const override;
  const std::vector<std::vector<std::int32_t>>& table() const { return table_; }

  static Elem make(std::int64_t i) { return Elem({static_cast<std::int32_t>(i)}); }

 private:
  std::vector<std::vector<std::int32_t>> table_;
  std::vector<std::int32_t> inverse_;
};

class ProductGroup : public Group {
 public:
  explicit ProductGroup(std::vector<GroupPtr> factors);
  GroupKind kind() const override { return GroupKind::product; }
  std::int64_t order() const override;
  size_t payload_size() const override { return payload_size_; }
  Elem identity() const override;
  Elem multiply(const Elem& a, const Elem& b) const override;
  Elem inverse(const Elem& a) const override;
  void validate(const Elem& a) const override;
  std::vector<Elem> enumerate(std::int64_t bound = kDefaultEnumBound) const override;
  std::string describe() const override;
  const std::vector<GroupPtr>& factors() const { return factors_; }

  /// Embeds an element of factor i as (e, ..., x, ..., e).
  Elem embed(size_t factor_index, const Elem& x) const;
  /// Extracts the i-th component.
  Elem component(size_t factor_index, const Elem& x) const;

 private:
  std::vector<GroupPtr> factors_;
  size_t payload_size_;
};

// ---- element-level helpers -------------------------------------------------

/// Least k >= 1 with g^k = identity.
std::int64_t element_order(const Group& g, const Elem& a);

/// Smallest subset containing the generators that is closed under
/// multiplication and inverses (always contains the identity).
std::vector<Elem> subgroup_closure(const Group& g, const std::vector<Elem>& generators,
                                   std::int64_t bound = kDefaultEnumBound);

/// Conjugacy classes; each class is sorted, classes ordered by their
/// lex-least representative.
std::vector<std::vector<Elem>> conjugacy_classes(const Group& g,
                                                 std::int64_t bound = kDefaultEnumBound);

struct Quotient {
  std::shared_ptr<CayleyGroup> group;
  std::vector<Elem> coset_reps;       // indexed by coset, reps[0] = identity coset
  ElemMap<std::int32_t> projection;   // every element of G -> coset index
};

/// Quotient of G by a normal subgroup N. Verifies that N is a subgroup and
/// normal (conjugation by every element of G); throws otherwise.
Quotient quotient_group(const Group& g, const std::vector<Elem>& normal_subgroup,
                        std::int64_t bound = kDefaultEnumBound);

struct SubgroupTable {
  std::shared_ptr<CayleyGroup> group;
  std::vector<Elem> elements;        // index -> ambient element, elements[0] = identity
  ElemMap<std::int32_t> index_of;
};

/// Reindexes a subgroup (given as a closed element set) as a Cayley-table
/// group. Throws if the set is not closed.
SubgroupTable cayley_from_subgroup(const Group& g, const std::vector<Elem>& elements);

bool is_subgroup(const Group& g, const std::vector<Elem>& elements);

/// Permutation parity; true for even. Valid for symmetric/alternating payloads.
bool permutation_is_even(const Elem& perm);

/// Transposition (i j) in S_n, 1-based.
Elem transposition(int n, int i, int j);

/// Product of disjoint transpositions given as index pairs, 1-based.
Elem involution_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

}  // namespace groupmix
