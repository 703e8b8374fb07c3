#include "groupmix/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "groupmix/matrix_group.hpp"

namespace groupmix {

namespace {

/// Runs the verifier in the sequence's natural mode and wraps the result,
/// enforcing the entropy lower bound and the claimed length bound.
ConstructionReport certify(MixingSequence seq, std::string family, Rat claimed_bound,
                           std::int64_t bound = kDefaultEnumBound) {
  ConstructionReport rep;
  rep.family = std::move(family);
  rep.claimed_bound = std::move(claimed_bound);
  rep.required_mode = seq.natural_mode();
  rep.verification = verify_sequence(seq, rep.required_mode, BigFloat(kDefaultNumericTol), bound);
  rep.bound_ok = Rat(static_cast<std::int64_t>(seq.steps.size())) <= rep.claimed_bound;
  rep.sequence = std::move(seq);
  if (!rep.verification.uniform)
    throw std::logic_error("constructor certification failed for " + rep.family +
                           " (max_dev = " + rep.verification.max_dev + ")");
  if (!rep.verification.entropy_ok)
    throw std::logic_error("emitted sequence violates the entropy bound: " + rep.family);
  if (!rep.bound_ok)
    throw std::logic_error("emitted sequence exceeds its claimed length bound: " + rep.family);
  return rep;
}

Elem embed_perm(const Elem& g, int n_to) {
  std::vector<std::int32_t> img(n_to);
  std::iota(img.begin(), img.end(), 1);
  std::copy(g.v.begin(), g.v.end(), img.begin());
  return Elem(std::move(img));
}

std::vector<int> block_exponents(int n) {
  std::vector<int> ms;
  for (int m = 0; (1 << m) <= n; ++m)
    if ((n >> m) & 1) ms.push_back(m);
  return ms;
}

}  // namespace

std::int64_t floor_log2_factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return floor_log2(f);
}

Rat perm_length_bound(int n) {
  return Rat(3, 2) * Rat(floor_log2_factorial(n)) + Rat(n, 2);
}

// ---- cyclic 2-groups ---------------------------------------------------

ConstructionReport construct_cyclic_2group(int d) {
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  if (d > 30) throw std::invalid_argument("2^d exceeds supported size");
  MixingSequence seq;
  seq.group = std::make_shared<CyclicGroup>(std::int64_t(1) << d);
  seq.claim = Claim::group();
  for (int j = 0; j < d; ++j)
    seq.steps.push_back({CyclicGroup::make(std::int64_t(1) << j), Probability::half()});
  return certify(std::move(seq), "cyclic-2group(d=" + std::to_string(d) + ")", Rat(d));
}

// ---- generic 2-groups via an index-2 chain -------------------------------

namespace {

// Finds (t, M): a coset representative and an index-2 subgroup M <= S with
// S = M u tM. S is a 2-group of order >= 2 given as a closed element set.
void split_index_two(const Group& g, const std::vector<Elem>& s, Elem& t_out,
                     std::vector<Elem>& m_out) {
  // K = < squares and commutators >; S/K is elementary abelian and nontrivial.
  std::vector<Elem> gens;
  for (const auto& a : s) gens.push_back(g.multiply(a, a));
  for (const auto& a : s)
    for (const auto& b : s)
      gens.push_back(g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b))));
  auto k = subgroup_closure(g, gens);
  if (k.size() >= s.size()) throw std::logic_error("2-group has trivial Frattini quotient");

  auto sub = cayley_from_subgroup(g, s);
  std::vector<Elem> k_in_sub;
  for (const auto& x : k) k_in_sub.push_back(CayleyGroup::make(sub.index_of.at(x)));
  auto quot = quotient_group(*sub.group, k_in_sub);

  // Greedy basis of the elementary abelian quotient; the hyperplane spanned by
  // all basis vectors except the first misses the first one.
  auto qelems = quot.group->enumerate();
  std::vector<Elem> basis;
  ElemSet span;
  auto respan = [&]() {
    auto cl = subgroup_closure(*quot.group, basis);
    span = ElemSet(cl.begin(), cl.end());
  };
  respan();
  for (const auto& q : qelems) {
    if (span.count(q)) continue;
    basis.push_back(q);
    respan();
  }
  std::vector<Elem> hyper(basis.begin() + 1, basis.end());
  auto hyperplane = subgroup_closure(*quot.group, hyper);
  ElemSet hset(hyperplane.begin(), hyperplane.end());

  m_out.clear();
  bool t_found = false;
  for (std::int64_t i = 0; i < sub.group->order(); ++i) {
    Elem in_sub = CayleyGroup::make(i);
    Elem q = CayleyGroup::make(quot.projection.at(in_sub));
    if (hset.count(q)) {
      m_out.push_back(sub.elements[i]);
    } else if (!t_found && q == basis.front()) {
      t_out = sub.elements[i];
      t_found = true;
    }
  }
  if (!t_found || 2 * m_out.size() != s.size())
    throw std::logic_error("index-2 split failed");
}

std::vector<MixingStep> two_group_chain_steps(const Group& g, std::vector<Elem> s) {
  std::vector<MixingStep> steps;
  while (s.size() > 1) {
    Elem t;
    std::vector<Elem> m;
    split_index_two(g, s, t, m);
    steps.push_back({t, Probability::half()});
    s = std::move(m);
  }
  return steps;
}

}  // namespace

ConstructionReport construct_2group_chain(const std::shared_ptr<const CayleyGroup>& g) {
  std::int64_t n = g->order();
  if (!is_power_of_two(Int(n)) && n != 1)
    throw std::invalid_argument("group order is not a power of 2");
  MixingSequence seq;
  seq.group = g;
  seq.claim = Claim::group();
  seq.steps = two_group_chain_steps(*g, g->enumerate());
  int t = n == 1 ? 0 : floor_log2(Int(n));
  return certify(std::move(seq), "2group-chain(order=" + std::to_string(n) + ")", Rat(t));
}

// ---- symmetric groups ------------------------------------------------------

ConstructionReport construct_sym_adjacent(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  MixingSequence seq;
  seq.group = std::make_shared<SymmetricGroup>(n);
  seq.claim = Claim::group();
  // seq(k) = seq(k-1) ++ [(k-1,k)@(k-1)/k, (k-2,k-1)@(k-2)/(k-1), ..., (1,2)@1/2]
  for (int k = 2; k <= n; ++k)
    for (int i = k; i >= 2; --i)
      seq.steps.push_back({transposition(n, i - 1, i), Probability(Rat(i - 1, i))});
  return certify(std::move(seq), "sym-adjacent(n=" + std::to_string(n) + ")",
                 Rat(std::int64_t(n) * (n - 1) / 2));
}

std::vector<MixingStep> sym_action_steps(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<MixingStep> steps;
  if (n == 1) return steps;
  auto ms = block_exponents(n);
  int t = static_cast<int>(ms.size());
  std::vector<std::int64_t> nk(t + 1, 0);  // nk[k] = |B_1| + ... + |B_k|
  for (int k = 1; k <= t; ++k) nk[k] = nk[k - 1] + (std::int64_t(1) << ms[k - 1]);

  // Stage II first (leftmost), levels descending so the lowest level acts
  // first; each level merges the matching pairings of all big-enough blocks.
  int top = ms.back();
  for (int lvl = top - 1; lvl >= 0; --lvl) {
    std::vector<std::pair<int, int>> pairs;
    for (int k = 1; k <= t; ++k) {
      if (ms[k - 1] <= lvl) continue;
      std::int64_t off = nk[k - 1];
      std::int64_t size = std::int64_t(1) << ms[k - 1];
      for (std::int64_t pos = 1; pos <= size; ++pos)
        if (((pos - 1) >> lvl & 1) == 0)
          pairs.emplace_back(static_cast<int>(off + pos),
                             static_cast<int>(off + pos + (1LL << lvl)));
    }
    steps.push_back({involution_from_pairs(n, pairs), Probability::half()});
  }

  // Stage I rightmost; (1, n_1+1) is the last entry, so it acts first.
  std::int64_t used = 0;  // |B_2| + ... + |B_{k-1}|
  std::vector<MixingStep> stage1;
  for (int k = 2; k <= t; ++k) {
    std::int64_t bk = std::int64_t(1) << ms[k - 1];
    stage1.push_back({transposition(n, 1, static_cast<int>(nk[k - 1] + 1)),
                      Probability(Rat(bk, n - used))});
    used += bk;
  }
  steps.insert(steps.end(), stage1.rbegin(), stage1.rend());
  return steps;
}

ConstructionReport construct_sym_action(int n) {
  MixingSequence seq;
  seq.group = std::make_shared<SymmetricGroup>(n);
  seq.claim = Claim::act(ActionKind::natural, Elem({1}));
  seq.steps = sym_action_steps(n);
  Rat bound = n == 1 ? Rat(0) : Rat(floor_log2(Int(n)) + hamming_weight(n) - 1);
  return certify(std::move(seq), "sym-action(n=" + std::to_string(n) + ")", bound);
}

std::vector<MixingStep> sym_fast_steps(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<MixingStep> steps;
  SymmetricGroup sn(n);
  for (int k = n; k >= 2; --k) {
    // Coset part for S_k over S_{k-1} = stab(k): the natural action mixer of
    // S_k, rebased from 1 to k by conjugation, embedded into S_n.
    Elem conj = transposition(n, 1, k);
    for (const auto& st : sym_action_steps(k)) {
      Elem g = embed_perm(st.g, n);
      steps.push_back({sn.conjugate(conj, g), st.p});
    }
  }
  return steps;
}

ConstructionReport construct_sym_fast(int n) {
  MixingSequence seq;
  seq.group = std::make_shared<SymmetricGroup>(n);
  seq.claim = Claim::group();
  seq.steps = sym_fast_steps(n);
  return certify(std::move(seq), "sym-fast(n=" + std::to_string(n) + ")", perm_length_bound(n));
}

// ---- alternating groups ------------------------------------------------

std::vector<MixingStep> alt_action_steps(int n) {
  // Even-involution version of the S_n action mixer. The fixes below need the
  // largest block to have size >= 4, which holds from n = 4 on.
  if (n < 4) throw std::invalid_argument("alternating action mixer needs n >= 4");
  std::vector<MixingStep> steps;
  auto ms = block_exponents(n);
  int t = static_cast<int>(ms.size());
  std::vector<std::int64_t> nk(t + 1, 0);
  for (int k = 1; k <= t; ++k) nk[k] = nk[k - 1] + (std::int64_t(1) << ms[k - 1]);

  // A block of size 2 would need a bare transposition; pull it out of the
  // merged level-0 step and re-pair it with (n-1, n) as a final extra step.
  int two_block = -1;
  for (int k = 1; k <= t; ++k)
    if (ms[k - 1] == 1) two_block = k;

  if (two_block >= 0) {
    int off = static_cast<int>(nk[two_block - 1]);
    steps.push_back(
        {involution_from_pairs(n, {{off + 1, off + 2}, {n - 1, n}}), Probability::half()});
  }

  int top = ms.back();
  for (int lvl = top - 1; lvl >= 0; --lvl) {
    std::vector<std::pair<int, int>> pairs;
    for (int k = 1; k <= t; ++k) {
      if (ms[k - 1] <= lvl) continue;
      if (lvl == 0 && k == two_block) continue;  // handled by the extra step
      std::int64_t off = nk[k - 1];
      std::int64_t size = std::int64_t(1) << ms[k - 1];
      for (std::int64_t pos = 1; pos <= size; ++pos)
        if (((pos - 1) >> lvl & 1) == 0)
          pairs.emplace_back(static_cast<int>(off + pos),
                             static_cast<int>(off + pos + (1LL << lvl)));
    }
    steps.push_back({involution_from_pairs(n, pairs), Probability::half()});
  }

  // Stage I with each transposition made even by the extra (n-1, n); the pair
  // lies in the last block and never meets the trajectory of point 1.
  std::int64_t used = 0;
  std::vector<MixingStep> stage1;
  for (int k = 2; k <= t; ++k) {
    std::int64_t bk = std::int64_t(1) << ms[k - 1];
    stage1.push_back(
        {involution_from_pairs(n, {{1, static_cast<int>(nk[k - 1] + 1)}, {n - 1, n}}),
         Probability(Rat(bk, n - used))});
    used += bk;
  }
  steps.insert(steps.end(), stage1.rbegin(), stage1.rend());

  for (const auto& s : steps)
    if (!permutation_is_even(s.g)) throw std::logic_error("odd element in alternating mixer");
  return steps;
}

ConstructionReport construct_alt_action(int n) {
  if (n < 5) throw std::invalid_argument("construct_alt_action needs n >= 5");
  MixingSequence seq;
  seq.group = std::make_shared<AlternatingGroup>(n);
  seq.claim = Claim::act(ActionKind::natural, Elem({1}));
  seq.steps = alt_action_steps(n);
  Rat bound = Rat(floor_log2(Int(n)) + hamming_weight(n));
  return certify(std::move(seq), "alt-action(n=" + std::to_string(n) + ")", bound);
}

std::vector<MixingStep> alt_full_steps(int n) {
  if (n < 5) throw std::invalid_argument("A_n is mixable only for n >= 5");
  SymmetricGroup sn(n);
  std::vector<MixingStep> steps;

  // Unordered-pair action from base {n-1, n}: mix the second coordinate over
  // {1..n-1} by the stabilizer copy of A_{n-1}, then the first over {1..n}.
  // Rebasing is by conjugation; conjugates of even permutations stay even.
  Elem c1 = transposition(n, 1, n);
  for (const auto& st : alt_action_steps(n))
    steps.push_back({sn.conjugate(c1, st.g), st.p});

  Elem c2 = transposition(n, 1, n - 1);
  for (const auto& st : alt_action_steps(n - 1))
    steps.push_back({sn.conjugate(c2, embed_perm(st.g, n)), st.p});

  // The pair stabilizer in A_n is the twisted S_{n-2} copy: permutations of
  // {1..n-2} with odd ones compensated by the swap (n-1, n).
  Elem swap_tail = transposition(n, n - 1, n);
  for (const auto& st : sym_fast_steps(n - 2)) {
    Elem g = embed_perm(st.g, n);
    if (!permutation_is_even(g)) g = sn.multiply(g, swap_tail);
    steps.push_back({g, st.p});
  }

  for (const auto& s : steps)
    if (!permutation_is_even(s.g)) throw std::logic_error("odd element in A_n mixer");
  return steps;
}

ConstructionReport construct_alt_full(int n) {
  MixingSequence seq;
  seq.group = std::make_shared<AlternatingGroup>(n);
  seq.claim = Claim::group();
  seq.steps = alt_full_steps(n);
  return certify(std::move(seq), "alt-full(n=" + std::to_string(n) + ")", perm_length_bound(n));
}

// ---- dihedral groups -----------------------------------------------------

std::vector<MixingStep> dihedral_steps(std::int64_t n, Mode* required_mode) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::int64_t m = n;
  int t = 0;
  while (m % 2 == 0) { m /= 2; ++t; }

  std::vector<MixingStep> steps;
  Elem tau = DihedralGroup::make(0, 1);
  Mode mode = Mode::exact;

  // Coset part: a lifted D_m mixer (D_n / <sigma^m> is a copy of D_m). One
  // reflection triple per 2-dimensional piece, sharing the tau@1/2 boundaries.
  steps.push_back({tau, Probability::half()});
  const std::int64_t k = (m - 1) / 2;
  const BigFloat pi = acos(BigFloat(-1));
  for (std::int64_t j = 1; j <= k; ++j) {
    std::int64_t sj = 0;
    BigFloat alpha;
    for (std::int64_t s = 1; s < m; ++s) {
      // alpha = cos(4 pi j s / m); never exactly zero for odd m
      BigFloat cand = cos(BigFloat(pi) * 4 * j * s / m);
      if (cand < 0) {
        sj = s;
        alpha = cand;
        break;
      }
    }
    if (sj == 0) throw std::logic_error("no negative cosine found for dihedral triple");
    Elem gj = DihedralGroup::make((2 * sj) % n, 1);
    // p = 1/(1 - alpha); rational exactly when alpha is (alpha = -1/2 at m=3)
    if (m == 3) {
      steps.push_back({gj, Probability(Rat(2, 3))});
    } else {
      steps.push_back({gj, Probability(BigFloat(1) / (BigFloat(1) - alpha))});
      mode = Mode::numeric;
    }
    steps.push_back({tau, Probability::half()});
  }

  // 2-part: <sigma^m> is cyclic of order 2^t, mixed by doubling.
  for (int i = 0; i < t; ++i)
    steps.push_back({DihedralGroup::make((m << i) % n, 0), Probability::half()});

  if (required_mode) *required_mode = mode;
  return steps;
}

ConstructionReport construct_dihedral(std::int64_t n) {
  MixingSequence seq;
  seq.group = std::make_shared<DihedralGroup>(n);
  seq.claim = Claim::group();
  seq.steps = dihedral_steps(n);
  std::int64_t m = n;
  int t = 0;
  while (m % 2 == 0) { m /= 2; ++t; }
  return certify(std::move(seq), "dihedral(n=" + std::to_string(n) + ")", Rat(t + m));
}

// ---- signed permutations (Coxeter B_n / D_n) -------------------------------

ConstructionReport construct_signed_perm(int n, bool even_only) {
  if (n < 2) throw std::invalid_argument("signed permutation mixer needs n >= 2");
  auto group = std::make_shared<SignedPermGroup>(n, even_only);
  MixingSequence seq;
  seq.group = group;
  seq.claim = Claim::group();

  // Lift of the S_n mixer with zero sign bits: mixes G modulo the sign group.
  for (const auto& st : sym_fast_steps(n)) {
    std::vector<std::int32_t> v(2 * n, 0);
    std::copy(st.g.v.begin(), st.g.v.end(), v.begin());
    seq.steps.push_back({Elem(std::move(v)), st.p});
  }

  // Sign part: single flips span (Z/2)^n; adjacent double flips span the
  // even-flip subgroup (Z/2)^{n-1}.
  auto flip = [&](std::vector<int> bits) {
    std::vector<std::int32_t> v(2 * n, 0);
    std::iota(v.begin(), v.begin() + n, 1);
    for (int b : bits) v[n + b - 1] = 1;
    return Elem(std::move(v));
  };
  if (even_only) {
    for (int i = 1; i < n; ++i) seq.steps.push_back({flip({i, i + 1}), Probability::half()});
  } else {
    for (int i = 1; i <= n; ++i) seq.steps.push_back({flip({i}), Probability::half()});
  }

  Rat bound = perm_length_bound(n) + Rat(even_only ? n - 1 : n);
  return certify(std::move(seq),
                 std::string(even_only ? "coxeter-D(n=" : "coxeter-B(n=") + std::to_string(n) +
                     ")",
                 bound);
}

// ---- PSL_2(F_{2^e}) -------------------------------------------------

ConstructionReport construct_psl2_char2(int e) {
  if (e < 1) throw std::invalid_argument("e must be >= 1");
  auto field = std::make_shared<FieldSpec>(FieldSpec::with_default_modulus(2, e));
  auto group = std::make_shared<MatrixGroup>(MatrixFamily::PSL, 2, field);
  const std::int64_t q = field->q();

  MixingSequence seq;
  seq.group = group;
  seq.claim = Claim::group();

  auto unipotent = [&](std::int64_t a) { return group->make_element({1, a, 0, 1}); };
  Elem w = group->make_element({0, field->neg(1), 1, 0});

  // Pairs-action part: e unipotent coins over an F_2-basis, the antidiagonal
  // twist, e fresh unipotent coins.
  for (int i = 0; i < e; ++i) seq.steps.push_back({unipotent(1LL << i), Probability::half()});
  seq.steps.push_back({w, Probability(Rat(q, q + 1))});
  for (int i = 0; i < e; ++i) seq.steps.push_back({unipotent(1LL << i), Probability::half()});

  // K = <diag(b, b^-1), w> is dihedral of order 2(q-1); push the dihedral
  // mixer through sigma -> diag(b, b^-1), tau -> w.
  std::int64_t beta = field->multiplicative_generator();
  auto dihedral_to_k = [&](const Elem& d) {
    std::int64_t r = d.v[0];
    Elem m = group->make_element({field->pow(beta, r), 0, 0, field->pow(beta, q - 1 - r)});
    if (d.v[1]) m = group->multiply(m, w);
    return m;
  };
  for (const auto& st : dihedral_steps(q - 1))
    seq.steps.push_back({dihedral_to_k(st.g), st.p});

  Rat bound = Rat(2 * e + 1 + (q - 1));
  return certify(std::move(seq), "psl2-char2(e=" + std::to_string(e) + ")", bound);
}

// ---- composers -------------------------------------------------------

MixingSequence compose_extension(const GroupPtr& g, const std::vector<Elem>& subgroup_h,
                                 const MixingSequence& coset_mixer,
                                 const MixingSequence& subgroup_mixer, std::int64_t bound) {
  if (!is_subgroup(*g, subgroup_h))
    throw std::invalid_argument("compose_extension: H is not a subgroup");

  // The coset mixer must mix G/H from the base coset H.
  ActionView cosets(g, ActionKind::cosets, subgroup_h, bound);
  Point base_h = cosets.apply(g->identity(), g->identity());
  {
    bool ok;
    if (coset_mixer.all_exact()) {
      Dist nu = action_law_exact(cosets, coset_mixer.steps, base_h);
      ok = is_uniform_exact(nu, cosets.size()).uniform;
    } else {
      DistN nu = action_law_numeric(cosets, coset_mixer.steps, base_h);
      ok = is_uniform_numeric(nu, cosets.size(), BigFloat(kDefaultNumericTol)).uniform;
    }
    if (!ok) throw std::invalid_argument("compose_extension: coset mixer does not mix G/H");
  }

  // The subgroup mixer must be uniform on H.
  {
    ElemSet hset(subgroup_h.begin(), subgroup_h.end());
    for (const auto& st : subgroup_mixer.steps)
      if (!hset.count(st.g))
        throw std::invalid_argument("compose_extension: subgroup mixer leaves H");
    auto h_size = static_cast<std::int64_t>(subgroup_h.size());
    bool ok;
    if (subgroup_mixer.all_exact()) {
      Dist mu = sequence_law_exact(*g, subgroup_mixer.steps);
      ok = mu.support() == h_size && is_uniform_exact(mu, h_size).uniform;
    } else {
      DistN mu = sequence_law_numeric(*g, subgroup_mixer.steps);
      ok = mu.support() == h_size &&
           is_uniform_numeric(mu, h_size, BigFloat(kDefaultNumericTol)).uniform;
    }
    if (!ok) throw std::invalid_argument("compose_extension: subgroup mixer is not uniform on H");
  }

  MixingSequence out;
  out.group = g;
  out.claim = Claim::group();
  out.steps = coset_mixer.steps;
  out.steps.insert(out.steps.end(), subgroup_mixer.steps.begin(), subgroup_mixer.steps.end());
  return out;
}

ConstructionReport compose_direct_product(const MixingSequence& seq1,
                                          const MixingSequence& seq2) {
  for (const auto* s : {&seq1, &seq2}) {
    auto rep = verify_sequence_auto(*s);
    if (!rep.uniform)
      throw std::invalid_argument("compose_direct_product: input sequence is not uniform");
  }
  auto prod = std::make_shared<ProductGroup>(std::vector<GroupPtr>{seq1.group, seq2.group});
  MixingSequence seq;
  seq.group = prod;
  seq.claim = Claim::group();
  for (const auto& st : seq1.steps) seq.steps.push_back({prod->embed(0, st.g), st.p});
  for (const auto& st : seq2.steps) seq.steps.push_back({prod->embed(1, st.g), st.p});
  return certify(std::move(seq),
                 "direct-product(" + seq1.group->describe() + " x " + seq2.group->describe() + ")",
                 Rat(static_cast<std::int64_t>(seq.steps.size())));
}

MixingSequence lift_2transitive(const GroupPtr& g, ActionKind kind,
                                const std::vector<Elem>& action_subgroup, const Point& x,
                                const Elem& a, const MixingSequence& stab_mixer,
                                std::int64_t bound) {
  ActionView act(g, kind, action_subgroup, bound);
  act.validate_point(x);
  g->validate(a);
  if (act.size() < 2)
    throw std::invalid_argument("lift_2transitive: the action is degenerate (|X| < 2)");
  Point ax = act.apply(a, x);
  if (ax == x) throw std::invalid_argument("lift_2transitive: a stabilizes the base point");
  if (!act.is_two_transitive())
    throw std::invalid_argument("lift_2transitive: the action is not 2-transitive");

  for (const auto& st : stab_mixer.steps)
    if (!(act.apply(st.g, x) == x))
      throw std::invalid_argument("lift_2transitive: stabilizer mixer moves the base point");

  // Rebase the stabilizer mixer to a*x by conjugating with a stabilizer element.
  MixingSequence sigma_h = stab_mixer;
  Point b = stab_mixer.claim.is_group ? ax : stab_mixer.claim.base;
  if (!(b == ax)) {
    bool found = false;
    for (const auto& h : g->enumerate(bound)) {
      if (!(act.apply(h, x) == x)) continue;
      if (act.apply(h, b) == ax) {
        sigma_h = conjugate_sequence(stab_mixer, h);
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("lift_2transitive: cannot rebase the stabilizer mixer");
  }

  // sigma_h must mix X \ {x} from base a*x.
  {
    std::int64_t carrier = act.size() - 1;
    bool ok;
    if (sigma_h.all_exact()) {
      Dist nu = action_law_exact(act, sigma_h.steps, ax);
      ok = !nu.mass.count(x) && is_uniform_exact(nu, carrier).uniform;
    } else {
      DistN nu = action_law_numeric(act, sigma_h.steps, ax);
      ok = !nu.mass.count(x) &&
           is_uniform_numeric(nu, carrier, BigFloat(kDefaultNumericTol)).uniform;
    }
    if (!ok)
      throw std::invalid_argument(
          "lift_2transitive: stabilizer mixer does not mix the punctured action");
  }

  MixingSequence out;
  out.group = g;
  out.claim = Claim::act(kind, x);
  out.claim.subgroup = action_subgroup;
  out.steps = sigma_h.steps;
  out.steps.push_back({a, Probability(Rat(act.size() - 1, act.size()))});
  return out;
}

ConstructionReport semidirect_two_orbit_lift(const GroupPtr& g, const std::vector<Elem>& normal_n,
                                             const std::vector<Elem>& subgroup_q,
                                             const MixingSequence& q_mixer, std::int64_t bound) {
  if (!is_subgroup(*g, normal_n) || !is_subgroup(*g, subgroup_q))
    throw std::invalid_argument("semidirect lift: N and Q must be subgroups");
  auto all = g->enumerate(bound);
  ElemSet nset(normal_n.begin(), normal_n.end());
  for (const auto& x : all)
    for (const auto& n : normal_n)
      if (!nset.count(g->conjugate(x, n)))
        throw std::invalid_argument("semidirect lift: N is not normal");
  ElemSet qset(subgroup_q.begin(), subgroup_q.end());
  std::int64_t inter = 0;
  for (const auto& n : normal_n)
    if (qset.count(n)) ++inter;
  if (inter != 1 || static_cast<std::int64_t>(normal_n.size()) *
                            static_cast<std::int64_t>(subgroup_q.size()) !=
                        g->order())
    throw std::invalid_argument("semidirect lift: G is not N x| Q");

  // Q-conjugation orbits on N must be {identity} and everything else.
  ElemSet seen;
  std::int64_t orbits = 0;
  for (const auto& n : normal_n) {
    if (seen.count(n)) continue;
    ++orbits;
    for (const auto& q : subgroup_q) seen.insert(g->conjugate(q, n));
  }
  if (orbits != 2)
    throw std::invalid_argument("semidirect lift: Q-conjugation has " + std::to_string(orbits) +
                                " orbits on N, need exactly 2");

  {
    if (!q_mixer.all_exact())
      throw std::invalid_argument("semidirect lift: Q mixer must use exact probabilities");
    auto mu = sequence_law_exact(*g, q_mixer.steps);
    auto q_size = static_cast<std::int64_t>(subgroup_q.size());
    if (mu.support() != q_size || !is_uniform_exact(mu, q_size).uniform)
      throw std::invalid_argument("semidirect lift: Q mixer is not uniform on Q");
  }

  // a: any nontrivial element of N. The coset action of G on G/Q is then
  // 2-transitive (G = Q u QaQ); lift_2transitive re-checks this.
  Elem a = g->identity();
  for (const auto& n : normal_n)
    if (!(n == g->identity())) { a = n; break; }

  ActionView cosets(g, ActionKind::cosets, subgroup_q, bound);
  Point base = cosets.apply(g->identity(), g->identity());
  MixingSequence stab = q_mixer;
  stab.claim = Claim::act(ActionKind::cosets, cosets.apply(a, base));
  stab.claim.subgroup = subgroup_q;

  MixingSequence action_mixer =
      lift_2transitive(g, ActionKind::cosets, subgroup_q, base, a, stab, bound);
  MixingSequence full = compose_extension(g, subgroup_q, action_mixer, q_mixer, bound);
  return certify(std::move(full), "semidirect-two-orbit(order=" + std::to_string(g->order()) + ")",
                 Rat(static_cast<std::int64_t>(action_mixer.steps.size() + q_mixer.steps.size())));
}

ConstructionReport construct_coxeter_h3() {
  auto a5 = construct_alt_full(5);
  MixingSequence z2seq;
  z2seq.group = std::make_shared<CyclicGroup>(2);
  z2seq.claim = Claim::group();
  z2seq.steps.push_back({CyclicGroup::make(1), Probability::half()});
  auto rep = compose_direct_product(a5.sequence, z2seq);
  rep.family = "coxeter-H3";
  return rep;
}

}  // namespace groupmix
