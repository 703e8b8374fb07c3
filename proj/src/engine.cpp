#include "groupmix/engine.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace groupmix {

template <class S>
DistT<S> convolve_step(const Group& g, const DistT<S>& mu, const Elem& step_elem, const S& p) {
  DistT<S> out;
  out.mass.reserve(mu.mass.size() * 2);
  const S keep = S(1) - p;
  for (const auto& [x, m] : mu.mass) {
    if (!(keep == 0)) out.mass[x] += keep * m;
    if (!(p == 0)) out.mass[g.multiply(x, step_elem)] += p * m;
  }
  return out;
}

template DistT<Rat> convolve_step<Rat>(const Group&, const DistT<Rat>&, const Elem&, const Rat&);
template DistT<BigFloat> convolve_step<BigFloat>(const Group&, const DistT<BigFloat>&, const Elem&,
                                                 const BigFloat&);

namespace {

template <class S>
S step_probability(const MixingStep& s);

template <>
Rat step_probability<Rat>(const MixingStep& s) {
  return s.p.rat();
}
template <>
BigFloat step_probability<BigFloat>(const MixingStep& s) {
  return s.p.value();
}

template <class S>
bool mass_is_one(const S& total);

template <>
bool mass_is_one<Rat>(const Rat& total) {
  return total == 1;
}
template <>
bool mass_is_one<BigFloat>(const BigFloat& total) {
  // numeric mode tolerates rounding at working precision
  return abs(total - 1) < BigFloat("1e-30");
}

template <class S>
DistT<S> fold_group(const Group& g, const std::vector<MixingStep>& steps, FoldTrace* trace) {
  DistT<S> mu = DistT<S>::delta(g.identity());
  for (const auto& s : steps) {
    g.validate(s.g);
    std::int64_t before = mu.support();
    mu = convolve_step(g, mu, s.g, step_probability<S>(s));
    if (trace) {
      trace->support_sizes.push_back(mu.support());
      if (mu.support() > 2 * before) trace->support_growth_ok = false;
      if (!mass_is_one<S>(mu.total())) trace->mass_conserved = false;
    }
  }
  return mu;
}

template <class S>
DistT<S> fold_action(const ActionView& act, const std::vector<MixingStep>& steps,
                     const Point& base, FoldTrace* trace) {
  act.validate_point(base);
  DistT<S> nu = DistT<S>::delta(base);
  // nu_i(y) = (1-p_i) nu_{i+1}(y) + p_i nu_{i+1}(g_i^-1 y): fold right to left,
  // pushing mass forward through the action.
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    act.group().validate(it->g);
    const S p = step_probability<S>(*it);
    const S keep = S(1) - p;
    DistT<S> next;
    next.mass.reserve(nu.mass.size() * 2);
    std::int64_t before = nu.support();
    for (const auto& [y, m] : nu.mass) {
      if (!(keep == 0)) next.mass[y] += keep * m;
      if (!(p == 0)) next.mass[act.apply(it->g, y)] += p * m;
    }
    nu = std::move(next);
    if (trace) {
      trace->support_sizes.push_back(nu.support());
      if (nu.support() > 2 * before) trace->support_growth_ok = false;
      if (!mass_is_one<S>(nu.total())) trace->mass_conserved = false;
    }
  }
  return nu;
}

}  // namespace

Dist sequence_law_exact(const Group& g, const std::vector<MixingStep>& steps, FoldTrace* trace) {
  return fold_group<Rat>(g, steps, trace);
}

DistN sequence_law_numeric(const Group& g, const std::vector<MixingStep>& steps,
                           FoldTrace* trace) {
  return fold_group<BigFloat>(g, steps, trace);
}

Dist action_law_exact(const ActionView& act, const std::vector<MixingStep>& steps,
                      const Point& base, FoldTrace* trace) {
  return fold_action<Rat>(act, steps, base, trace);
}

DistN action_law_numeric(const ActionView& act, const std::vector<MixingStep>& steps,
                         const Point& base, FoldTrace* trace) {
  return fold_action<BigFloat>(act, steps, base, trace);
}

template <class S>
DistT<S> pushforward(const ActionView& act, const DistT<S>& mu, const Point& base) {
  act.validate_point(base);
  DistT<S> out;
  for (const auto& [g, m] : mu.mass) out.mass[act.apply(g, base)] += m;
  return out;
}

template DistT<Rat> pushforward<Rat>(const ActionView&, const DistT<Rat>&, const Point&);
template DistT<BigFloat> pushforward<BigFloat>(const ActionView&, const DistT<BigFloat>&,
                                               const Point&);

UniformCheck is_uniform_exact(const Dist& mu, std::int64_t carrier_size) {
  const Rat target(1, carrier_size);
  Rat max_dev(0);
  bool uniform = true;
  for (const auto& [x, m] : mu.mass) {
    Rat dev = m > target ? m - target : target - m;
    if (dev > max_dev) max_dev = dev;
    if (!(m == target)) uniform = false;
  }
  if (mu.support() < carrier_size) {
    uniform = false;
    if (target > max_dev) max_dev = target;  // some point has mass 0
  }
  return {uniform, rational_string(max_dev)};
}

UniformCheck is_uniform_numeric(const DistN& mu, std::int64_t carrier_size, const BigFloat& tol) {
  const BigFloat target = BigFloat(1) / carrier_size;
  BigFloat max_dev(0);
  for (const auto& [x, m] : mu.mass) {
    BigFloat dev = abs(m - target);
    if (dev > max_dev) max_dev = dev;
  }
  if (mu.support() < carrier_size && target > max_dev) max_dev = target;
  return {max_dev <= tol, bigfloat_string(max_dev)};
}

EntropyBound entropy_bound_ok(std::int64_t sequence_length, const Int& carrier_size) {
  EntropyBound eb;
  eb.bound = carrier_size <= 1 ? 0 : ceil_log2(carrier_size);
  // length >= log2(carrier) <=> 2^length >= carrier
  if (sequence_length >= 0 && sequence_length < 1024)
    eb.ok = (Int(1) << static_cast<unsigned>(sequence_length)) >= carrier_size;
  else
    eb.ok = sequence_length >= 1024 ? true : false;
  return eb;
}

VerifyReport verify_sequence(const MixingSequence& seq, Mode mode, const BigFloat& tol,
                             std::int64_t bound, FoldTrace* trace) {
  if (mode == Mode::exact && !seq.all_exact())
    throw std::invalid_argument(
        "exact verification requested but the sequence has numeric probabilities");

  VerifyReport rep;
  rep.length = static_cast<std::int64_t>(seq.steps.size());
  rep.mode = mode;

  if (seq.claim.is_group) {
    rep.carrier = seq.group->order();
    if (rep.carrier > bound) throw std::length_error("group exceeds enumeration bound");
    if (mode == Mode::exact) {
      Dist mu = sequence_law_exact(*seq.group, seq.steps, trace);
      auto uc = is_uniform_exact(mu, rep.carrier);
      rep.uniform = uc.uniform;
      rep.max_dev = uc.max_dev;
      rep.support = mu.support();
    } else {
      DistN mu = sequence_law_numeric(*seq.group, seq.steps, trace);
      auto uc = is_uniform_numeric(mu, rep.carrier, tol);
      rep.uniform = uc.uniform;
      rep.max_dev = uc.max_dev;
      rep.support = mu.support();
    }
  } else {
    ActionView act = action_for_claim(seq.group, seq.claim, bound);
    rep.carrier = act.size();
    if (mode == Mode::exact) {
      Dist nu = action_law_exact(act, seq.steps, seq.claim.base, trace);
      auto uc = is_uniform_exact(nu, rep.carrier);
      rep.uniform = uc.uniform;
      rep.max_dev = uc.max_dev;
      rep.support = nu.support();
    } else {
      DistN nu = action_law_numeric(act, seq.steps, seq.claim.base, trace);
      auto uc = is_uniform_numeric(nu, rep.carrier, tol);
      rep.uniform = uc.uniform;
      rep.max_dev = uc.max_dev;
      rep.support = nu.support();
    }
  }

  auto eb = entropy_bound_ok(rep.length, Int(rep.carrier));
  rep.entropy_lb = eb.bound;
  rep.entropy_ok = eb.ok;
  return rep;
}

VerifyReport verify_sequence_auto(const MixingSequence& seq, const BigFloat& tol,
                                  std::int64_t bound, FoldTrace* trace) {
  return verify_sequence(seq, seq.natural_mode(), tol, bound, trace);
}

SampleReport sample_sequence(const MixingSequence& seq, std::uint64_t trials, std::uint64_t seed,
                             std::int64_t bound) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  SampleReport rep;
  rep.trials = trials;
  rep.seed = seed;

  std::vector<double> probs;
  probs.reserve(seq.steps.size());
  for (const auto& s : seq.steps) probs.push_back(s.p.value().convert_to<double>());

  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  const bool group_claim = seq.claim.is_group;
  std::optional<ActionView> act;
  if (!group_claim) act.emplace(action_for_claim(seq.group, seq.claim, bound));

  ElemMap<std::uint64_t> counts;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (group_claim) {
      Elem x = seq.group->identity();
      for (size_t i = 0; i < seq.steps.size(); ++i)
        if (unit() < probs[i]) x = seq.group->multiply(x, seq.steps[i].g);
      ++counts[x];
    } else {
      // rightmost factor acts first
      Point x = seq.claim.base;
      for (size_t i = seq.steps.size(); i-- > 0;)
        if (unit() < probs[i]) x = act->apply(seq.steps[i].g, x);
      ++counts[x];
    }
  }

  std::int64_t carrier = group_claim ? seq.group->order() : act->size();
  double expected = static_cast<double>(trials) / static_cast<double>(carrier);
  double chi = 0.0;
  for (const auto& [x, c] : counts) {
    double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  chi += static_cast<double>(carrier - static_cast<std::int64_t>(counts.size())) * expected;
  rep.chi_square = chi;
  rep.dof = carrier - 1;

  rep.counts.assign(counts.begin(), counts.end());
  std::sort(rep.counts.begin(), rep.counts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return rep;
}

}  // namespace groupmix
