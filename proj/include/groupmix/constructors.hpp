#pragma once

#include <string>
#include <vector>

#include "groupmix/engine.hpp"
#include "groupmix/group.hpp"
#include "groupmix/sequence.hpp"

namespace groupmix {

/// Output of a certified constructor. Every constructor verifies its sequence
/// (exact fold when all probabilities are rational, numeric fold otherwise)
/// before returning; a failed certification is a bug and throws.
struct ConstructionReport {
  MixingSequence sequence;
  std::string family;
  Rat claimed_bound;       // closed-form length bound for this family
  bool bound_ok = false;   // length <= claimed_bound
  Mode required_mode = Mode::exact;
  VerifyReport verification;
};

// ---- explicit families -------------------------------------------------

/// Z/2^d mixed by the doubling sequence (1,1/2),(2,1/2),...,(2^{d-1},1/2).
ConstructionReport construct_cyclic_2group(int d);

/// Any 2-group given as a Cayley table, mixed along a descending index-2
/// chain; length exactly log2|G|.
ConstructionReport construct_2group_chain(const std::shared_ptr<const CayleyGroup>& g);

/// S_n by adjacent transpositions, length n(n-1)/2.
ConstructionReport construct_sym_adjacent(int n);

/// The natural action of S_n on {1..n} from base 1, using involutions;
/// length floor(log2 n) + wt(n) - 1.
ConstructionReport construct_sym_action(int n);

/// Full S_n mixer by recursive coset composition; length at most
/// (3/2) floor(log2 n!) + n/2.
ConstructionReport construct_sym_fast(int n);

/// The natural action of A_n on {1..n} from base 1 using even involutions;
/// length at most floor(log2 n) + wt(n). Requires n >= 5.
ConstructionReport construct_alt_action(int n);

/// Full A_n mixer (n >= 5) through the unordered-pair action; length within
/// (3/2) floor(log2 n!) + n/2.
ConstructionReport construct_alt_full(int n);

/// Dihedral group of order 2n: reflection-conjugate triples for the odd part
/// and a doubling tail for the 2-part; length at most t + m for n = 2^t m.
ConstructionReport construct_dihedral(std::int64_t n);

/// Signed permutations: Coxeter B_n, or D_n with even_only. Requires n >= 2.
ConstructionReport construct_signed_perm(int n, bool even_only);

/// PSL_2(F_{2^e}): unipotent blocks and the antidiagonal twist mix the
/// pairs action; a dihedral subgroup mixer finishes the job.
ConstructionReport construct_psl2_char2(int e);

/// Coxeter H_3 as the direct product A_5 x Z/2.
ConstructionReport construct_coxeter_h3();

// ---- generic composers ---------------------------------------------------

/// Coset-then-subgroup composition: coset_mixer must mix the action of G on
/// G/H from the base coset H, subgroup_mixer must be uniform on H. Both
/// preconditions are verified; the result is the concatenation.
MixingSequence compose_extension(const GroupPtr& g, const std::vector<Elem>& subgroup_h,
                                 const MixingSequence& coset_mixer,
                                 const MixingSequence& subgroup_mixer,
                                 std::int64_t bound = kDefaultEnumBound);

/// Concatenates two verified mixers on the direct product G1 x G2.
ConstructionReport compose_direct_product(const MixingSequence& seq1, const MixingSequence& seq2);

/// One-extra-step lifting along a verified 2-transitive action: the output
/// mixes the action of G from base x, given a mixer for stab(x) acting on the
/// remaining points and any a moving x. The stabilizer mixer may be based at
/// any point; it is conjugated to base a*x by a stabilizer element.
MixingSequence lift_2transitive(const GroupPtr& g, ActionKind kind,
                                const std::vector<Elem>& action_subgroup, const Point& x,
                                const Elem& a, const MixingSequence& stab_mixer,
                                std::int64_t bound = kDefaultEnumBound);

/// G = N x| Q with the Q-conjugation action having exactly two orbits on N:
/// lifts a Q mixer to a full G mixer through the 2-transitive coset action.
ConstructionReport semidirect_two_orbit_lift(const GroupPtr& g, const std::vector<Elem>& normal_n,
                                             const std::vector<Elem>& subgroup_q,
                                             const MixingSequence& q_mixer,
                                             std::int64_t bound = kDefaultEnumBound);

// ---- internal step builders (no certification) -----------------------------
// Exposed for the table generator, which reports lengths beyond the sizes an
// exact fold can verify.

std::vector<MixingStep> sym_action_steps(int n);
std::vector<MixingStep> sym_fast_steps(int n);
std::vector<MixingStep> alt_action_steps(int n);  // valid for n >= 4
std::vector<MixingStep> alt_full_steps(int n);
std::vector<MixingStep> dihedral_steps(std::int64_t n, Mode* required_mode = nullptr);

/// floor(log2(n!)).
std::int64_t floor_log2_factorial(int n);

/// Closed-form bound (3/2) floor(log2 n!) + n/2 shared by the S_n and A_n
/// constructions.
Rat perm_length_bound(int n);

}  // namespace groupmix
