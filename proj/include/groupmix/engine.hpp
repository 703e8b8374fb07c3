#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupmix/action.hpp"
#include "groupmix/group.hpp"
#include "groupmix/sequence.hpp"

namespace groupmix {

/// Sparse probability mass function over group elements or action points,
/// parameterized by the scalar type (Rat for exact mode, BigFloat for
/// numeric mode).
template <class S>
struct DistT {
  ElemMap<S> mass;

  static DistT delta(const Elem& x) {
    DistT d;
    d.mass.emplace(x, S(1));
    return d;
  }

  S total() const {
    S t(0);
    for (const auto& [k, v] : mass) t += v;
    return t;
  }

  std::int64_t support() const { return static_cast<std::int64_t>(mass.size()); }
};

using Dist = DistT<Rat>;
using DistN = DistT<BigFloat>;

/// One convolution step: mu'(x) = (1-p) mu(x) + p mu(x g^-1).
/// Support at most doubles; total mass is preserved.
template <class S>
DistT<S> convolve_step(const Group& g, const DistT<S>& mu, const Elem& step_elem, const S& p);

/// Law of the random subproduct g_1^{e_1} ... g_k^{e_k}: a left fold of
/// convolve_step starting from the point mass at the identity.
/// When trace is non-null, records the support size after every step and
/// checks mass conservation.
struct FoldTrace {
  std::vector<std::int64_t> support_sizes;
  bool mass_conserved = true;
  bool support_growth_ok = true;  // |supp| at most doubles per step
};

Dist sequence_law_exact(const Group& g, const std::vector<MixingStep>& steps,
                        FoldTrace* trace = nullptr);
DistN sequence_law_numeric(const Group& g, const std::vector<MixingStep>& steps,
                           FoldTrace* trace = nullptr);

/// Law of g_1^{e_1} ... g_k^{e_k} x0 under the action: the fold runs right to
/// left (the rightmost factor acts first).
Dist action_law_exact(const ActionView& act, const std::vector<MixingStep>& steps,
                      const Point& base, FoldTrace* trace = nullptr);
DistN action_law_numeric(const ActionView& act, const std::vector<MixingStep>& steps,
                         const Point& base, FoldTrace* trace = nullptr);

/// Pushes a law over G through the action at the base point.
template <class S>
DistT<S> pushforward(const ActionView& act, const DistT<S>& mu, const Point& base);

struct UniformCheck {
  bool uniform = false;
  std::string max_dev;  // exact rational or 40-digit decimal
};

/// Exact equality test against 1/carrier per point.
UniformCheck is_uniform_exact(const Dist& mu, std::int64_t carrier_size);
/// Max |mu(x) - 1/carrier| compared against the tolerance.
UniformCheck is_uniform_numeric(const DistN& mu, std::int64_t carrier_size, const BigFloat& tol);

/// Entropy lower bound: a length-k subproduct is supported on at most 2^k
/// values, so mixing needs k >= log2(carrier).
struct EntropyBound {
  bool ok = false;
  int bound = 0;  // ceil(log2 carrier)
};
EntropyBound entropy_bound_ok(std::int64_t sequence_length, const Int& carrier_size);

inline constexpr const char* kDefaultNumericTol = "1e-9";

struct VerifyReport {
  bool uniform = false;
  std::string max_dev;
  std::int64_t support = 0;
  std::int64_t length = 0;
  int entropy_lb = 0;
  bool entropy_ok = false;
  Mode mode = Mode::exact;
  std::int64_t carrier = 0;
};

/// Verifies a sequence against its claim. In exact mode, every probability
/// must be rational. In numeric mode the check is against tol.
VerifyReport verify_sequence(const MixingSequence& seq, Mode mode,
                             const BigFloat& tol = BigFloat(kDefaultNumericTol),
                             std::int64_t bound = kDefaultEnumBound,
                             FoldTrace* trace = nullptr);

/// Verifies in the sequence's natural mode (exact when all steps are exact).
VerifyReport verify_sequence_auto(const MixingSequence& seq,
                                  const BigFloat& tol = BigFloat(kDefaultNumericTol),
                                  std::int64_t bound = kDefaultEnumBound,
                                  FoldTrace* trace = nullptr);

struct SampleReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<Elem, std::uint64_t>> counts;  // sorted by element
  double chi_square = 0.0;
  std::int64_t dof = 0;
};

/// Monte Carlo demonstration sampler; reproducible under a fixed seed.
SampleReport sample_sequence(const MixingSequence& seq, std::uint64_t trials, std::uint64_t seed,
                             std::int64_t bound = kDefaultEnumBound);

}  // namespace groupmix
