#pragma once

#include <memory>
#include <vector>

#include "groupmix/group.hpp"
#include "groupmix/sequence.hpp"

namespace groupmix {

/// A point of a group action, packed the same way as element payloads:
///   natural          [x]                      (1-based for permutation kinds,
///                                              residues for cyclic/dihedral)
///   pairs            [i, j] with i < j        (permutation kinds, unordered)
///                    [x_1..x_d, y_1..y_d]     (matrix kinds: ordered distinct
///                                              projective points)
///   projective-line  [c_1..c_d]               (normalized homogeneous coords)
///   cosets           payload of the lex-least coset element
using Point = Elem;

/// A concrete enumerable action of a group on a point set.
class ActionView {
 public:
  ActionView(GroupPtr group, ActionKind kind, std::vector<Elem> subgroup = {},
             std::int64_t bound = kDefaultEnumBound);

  ActionKind action_kind() const { return kind_; }
  const Group& group() const { return *group_; }

  std::int64_t size() const;
  std::vector<Point> points() const;

  Point apply(const Elem& g, const Point& x) const;
  void validate_point(const Point& x) const;

  /// True when G acts transitively on ordered pairs of distinct points.
  bool is_two_transitive() const;

 private:
  GroupPtr group_;
  ActionKind kind_;
  std::int64_t bound_;

  // cosets only
  std::vector<Elem> subgroup_;
  ElemMap<Point> coset_rep_;  // element -> lex-least element of its coset
  std::vector<Point> coset_points_;

  int natural_degree() const;
  Point natural_apply(const Elem& g, std::int64_t x) const;
};

/// Builds the action named by an action claim.
ActionView action_for_claim(const GroupPtr& group, const Claim& claim,
                            std::int64_t bound = kDefaultEnumBound);

}  // namespace groupmix
