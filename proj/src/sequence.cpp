#include "groupmix/sequence.hpp"

#include <stdexcept>

namespace groupmix {

Probability::Probability(Rat q) : exact_(true), q_(std::move(q)) {
  if (q_ < 0 || q_ > 1) throw std::invalid_argument("probability out of [0,1]");
}

Probability::Probability(BigFloat f) : exact_(false), f_(std::move(f)) {
  if (f_ < 0 || f_ > 1) throw std::invalid_argument("probability out of [0,1]");
}

const Rat& Probability::rat() const {
  if (!exact_) throw std::logic_error("numeric probability used where an exact one is required");
  return q_;
}

std::string Probability::str() const {
  return exact_ ? rational_string(q_) : bigfloat_string(f_);
}

Probability Probability::parse(const std::string& s) {
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    return Probability(parse_bigfloat(s));
  }
  return Probability(parse_rational(s));
}

bool Probability::operator==(const Probability& o) const {
  if (exact_ != o.exact_) return false;
  return exact_ ? q_ == o.q_ : f_ == o.f_;
}

const char* action_kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::natural: return "natural";
    case ActionKind::pairs: return "pairs";
    case ActionKind::projective_line: return "projective-line";
    case ActionKind::cosets: return "cosets";
  }
  return "?";
}

ActionKind action_kind_from_name(const std::string& s) {
  if (s == "natural") return ActionKind::natural;
  if (s == "pairs") return ActionKind::pairs;
  if (s == "projective-line") return ActionKind::projective_line;
  if (s == "cosets") return ActionKind::cosets;
  throw std::invalid_argument("unknown action kind: " + s);
}

bool MixingSequence::all_exact() const {
  for (const auto& s : steps)
    if (!s.p.is_exact()) return false;
  return true;
}

MixingSequence conjugate_sequence(const MixingSequence& seq, const Elem& h) {
  MixingSequence out = seq;
  for (auto& s : out.steps) s.g = seq.group->conjugate(h, s.g);
  return out;
}

MixingSequence invert_sequence(const MixingSequence& seq) {
  MixingSequence out = seq;
  out.steps.clear();
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it)
    out.steps.push_back({seq.group->inverse(it->g), it->p});
  return out;
}

SubproductForm pairs_to_subproduct(const Group& g, const std::vector<PairChoice>& pairs) {
  SubproductForm out;
  Elem prefix = g.identity();  // a_1 ... a_{i-1}
  for (const auto& pc : pairs) {
    g.validate(pc.a);
    g.validate(pc.b);
    // prefix * (b_i a_i^-1) * prefix^-1
    Elem core = g.multiply(pc.b, g.inverse(pc.a));
    out.steps.push_back({g.multiply(g.multiply(prefix, core), g.inverse(prefix)), pc.p});
    prefix = g.multiply(prefix, pc.a);
  }
  out.trailing_constant = prefix;
  return out;
}

}  // namespace groupmix
