#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupmix/group.hpp"
#include "groupmix/numeric.hpp"

namespace groupmix {

/// A step probability, either an exact rational or an extended-precision
/// decimal. Exact values never silently degrade to numeric.
class Probability {
 public:
  Probability() : exact_(true), q_(0) {}
  explicit Probability(Rat q);
  explicit Probability(BigFloat f);

  static Probability half() { return Probability(Rat(1, 2)); }

  bool is_exact() const { return exact_; }

  /// Throws std::logic_error when the value is numeric-only.
  const Rat& rat() const;

  BigFloat value() const { return exact_ ? to_bigfloat(q_) : f_; }

  std::string str() const;
  static Probability parse(const std::string& s);

  bool operator==(const Probability& o) const;

 private:
  bool exact_;
  Rat q_;
  BigFloat f_;
};

struct MixingStep {
  Elem g;
  Probability p;
};

enum class ActionKind { natural, pairs, projective_line, cosets };

const char* action_kind_name(ActionKind k);
ActionKind action_kind_from_name(const std::string& s);

/// What a sequence claims to mix: the whole group, or a named action from a
/// base point. Coset actions carry the subgroup explicitly.
struct Claim {
  bool is_group = true;
  ActionKind action = ActionKind::natural;
  Elem base;                          // action claims only
  std::vector<Elem> subgroup;         // cosets only

  static Claim group() { return Claim{}; }
  static Claim act(ActionKind k, Elem base_point) {
    Claim c;
    c.is_group = false;
    c.action = k;
    c.base = std::move(base_point);
    return c;
  }
};

/// An ordered list of (element, probability) steps over an ambient group.
/// Index 0 is the leftmost factor of the random subproduct.
struct MixingSequence {
  GroupPtr group;
  std::vector<MixingStep> steps;
  Claim claim;

  size_t length() const { return steps.size(); }

  /// True when every step probability is an exact rational.
  bool all_exact() const;

  /// The mode this sequence can honestly be verified in.
  Mode natural_mode() const { return all_exact() ? Mode::exact : Mode::numeric; }
};

/// Conjugates every step by h: g_i -> h g_i h^-1. Mixing sequences are stable
/// under this, with base points transported to h*x0.
MixingSequence conjugate_sequence(const MixingSequence& seq, const Elem& h);

/// Reverses the order and inverts every element, keeping probabilities.
MixingSequence invert_sequence(const MixingSequence& seq);

/// One random choice between two elements.
struct PairChoice {
  Elem a;     // picked when the coin shows 0
  Elem b;     // picked with probability p
  Probability p;
};

struct SubproductForm {
  std::vector<MixingStep> steps;
  Elem trailing_constant;
};

/// Rewrites a product of pairwise choices x_1...x_n (x_i in {a_i, b_i}) as a
/// random subproduct times a trailing constant a_1...a_n with the same law.
SubproductForm pairs_to_subproduct(const Group& g, const std::vector<PairChoice>& pairs);

}  // namespace groupmix
