#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupmix/constructors.hpp"
#include "groupmix/matrix_group.hpp"

using namespace groupmix;

namespace {

// Dicyclic-style order-4m table: a^i b^j with b a = a^-1 b, b^2 = a^m.
std::shared_ptr<CayleyGroup> quaternion_like(std::int64_t m) {
  std::int64_t n = 4 * m;
  auto code = [&](std::int64_t i, std::int64_t j) { return i + 2 * m * j; };
  std::vector<std::vector<std::int32_t>> table(n, std::vector<std::int32_t>(n));
  for (std::int64_t i = 0; i < 2 * m; ++i)
    for (std::int64_t j = 0; j < 2; ++j)
      for (std::int64_t k = 0; k < 2 * m; ++k)
        for (std::int64_t l = 0; l < 2; ++l) {
          std::int64_t ii = j ? (i - k + 2 * m) % (2 * m) : (i + k) % (2 * m);
          std::int64_t jj = j ^ l;
          if (j && l) ii = (ii + m) % (2 * m);  // b^2 = a^m
          table[code(i, j)][code(k, l)] = static_cast<std::int32_t>(code(ii, jj));
        }
  return std::make_shared<CayleyGroup>(table);
}

std::shared_ptr<CayleyGroup> as_cayley(const Group& g) {
  return cayley_from_subgroup(g, g.enumerate()).group;
}

}  // namespace

TEST_CASE("cyclic 2-group doubling sequence") {
  auto r0 = construct_cyclic_2group(0);
  CHECK(r0.sequence.steps.empty());
  CHECK(r0.verification.uniform);

  auto r3 = construct_cyclic_2group(3);
  REQUIRE(r3.sequence.steps.size() == 3);
  CHECK(r3.sequence.steps[0].g == CyclicGroup::make(1));
  CHECK(r3.sequence.steps[1].g == CyclicGroup::make(2));
  CHECK(r3.sequence.steps[2].g == CyclicGroup::make(4));
  CHECK(r3.verification.uniform);
  CHECK(r3.verification.max_dev == "0");

  auto r10 = construct_cyclic_2group(10);
  CHECK(r10.sequence.steps.size() == 10);
  CHECK(r10.verification.uniform);
  CHECK(r10.verification.entropy_lb == 10);  // length == log2|G|
}

TEST_CASE("2-group chain on Cayley tables") {
  SUBCASE("Klein four-group") {
    auto klein = as_cayley(ProductGroup(
        {std::make_shared<CyclicGroup>(2), std::make_shared<CyclicGroup>(2)}));
    auto rep = construct_2group_chain(klein);
    CHECK(rep.sequence.steps.size() == 2);
    CHECK(rep.verification.uniform);
  }
  SUBCASE("dihedral of order 8") {
    auto d4 = as_cayley(DihedralGroup(4));
    auto rep = construct_2group_chain(d4);
    CHECK(rep.sequence.steps.size() == 3);
    CHECK(rep.verification.uniform);
  }
  SUBCASE("quaternion group of order 8") {
    auto q8 = quaternion_like(2);
    REQUIRE(q8->order() == 8);
    auto rep = construct_2group_chain(q8);
    CHECK(rep.sequence.steps.size() == 3);
    CHECK(rep.verification.uniform);
  }
  SUBCASE("non-2-group is rejected") {
    auto z6 = as_cayley(CyclicGroup(6));
    CHECK_THROWS_AS(construct_2group_chain(z6), std::invalid_argument);
  }
}

TEST_CASE("adjacent-transposition mixer of S_n") {
  auto r3 = construct_sym_adjacent(3);
  REQUIRE(r3.sequence.steps.size() == 3);
  CHECK(r3.sequence.steps[0].g == transposition(3, 1, 2));
  CHECK(r3.sequence.steps[0].p == Probability(Rat(1, 2)));
  CHECK(r3.sequence.steps[1].g == transposition(3, 2, 3));
  CHECK(r3.sequence.steps[1].p == Probability(Rat(2, 3)));
  CHECK(r3.sequence.steps[2].g == transposition(3, 1, 2));

  auto r4 = construct_sym_adjacent(4);
  CHECK(r4.sequence.steps.size() == 6);
  CHECK(r4.verification.uniform);

  auto r1 = construct_sym_adjacent(1);
  CHECK(r1.sequence.steps.empty());
  CHECK(r1.verification.uniform);
}

TEST_CASE("S_n action mixer (involutions)") {
  SUBCASE("n = 4: the two bit-mixing involutions") {
    auto r = construct_sym_action(4);
    REQUIRE(r.sequence.steps.size() == 2);
    CHECK(r.sequence.steps[0].g == involution_from_pairs(4, {{1, 3}, {2, 4}}));
    CHECK(r.sequence.steps[1].g == involution_from_pairs(4, {{1, 2}, {3, 4}}));
    CHECK(r.sequence.steps[0].p == Probability::half());
    CHECK(r.verification.uniform);
  }
  SUBCASE("n = 6 matches the worked sequence") {
    auto r = construct_sym_action(6);
    REQUIRE(r.sequence.steps.size() == 3);
    CHECK(r.sequence.steps[0].g == involution_from_pairs(6, {{3, 5}, {4, 6}}));
    CHECK(r.sequence.steps[1].g == involution_from_pairs(6, {{1, 2}, {3, 4}, {5, 6}}));
    CHECK(r.sequence.steps[2].g == transposition(6, 1, 3));
    CHECK(r.sequence.steps[2].p == Probability(Rat(2, 3)));
    CHECK(r.verification.uniform);
  }
  SUBCASE("n = 1 is empty") {
    CHECK(construct_sym_action(1).sequence.steps.empty());
  }
  SUBCASE("lengths and uniformity across n") {
    for (int n : {2, 3, 5, 7, 8, 12, 16, 31, 100}) {
      auto r = construct_sym_action(n);
      std::int64_t expect = floor_log2(Int(n)) + hamming_weight(n) - 1;
      CHECK(static_cast<std::int64_t>(r.sequence.steps.size()) == expect);
      CHECK(r.verification.uniform);
    }
  }
}

TEST_CASE("fast S_n mixer") {
  auto r2 = construct_sym_fast(2);
  REQUIRE(r2.sequence.steps.size() == 1);
  CHECK(r2.sequence.steps[0].g == transposition(2, 1, 2));
  CHECK(r2.sequence.steps[0].p == Probability::half());

  for (int n : {3, 4, 5, 6}) {
    auto r = construct_sym_fast(n);
    CHECK(r.verification.uniform);
    CHECK(r.verification.max_dev == "0");
    CHECK(r.bound_ok);
  }
  // n = 6: length <= (3/2) * 9 + 3 = 16
  auto r6 = construct_sym_fast(6);
  CHECK(Rat(static_cast<std::int64_t>(r6.sequence.steps.size())) <= Rat(16));
}

TEST_CASE("A_n action mixer") {
  CHECK_THROWS_AS(construct_alt_action(4), std::invalid_argument);
  for (int n : {5, 6, 8, 12}) {
    auto r = construct_alt_action(n);
    CHECK(r.verification.uniform);
    CHECK(Rat(static_cast<std::int64_t>(r.sequence.steps.size())) <= r.claimed_bound);
    for (const auto& st : r.sequence.steps) CHECK(permutation_is_even(st.g));
  }
  // n = 8 has Hamming weight 1: at most 4 steps
  CHECK(construct_alt_action(8).sequence.steps.size() <= 4);

  // the internal helper also covers n = 4 (needed by the full A_5 mixer)
  auto steps4 = alt_action_steps(4);
  CHECK(steps4.size() == 2);
}

TEST_CASE("full A_n mixer") {
  for (int n : {5, 6}) {
    auto r = construct_alt_full(n);
    CHECK(r.verification.uniform);
    CHECK(r.verification.max_dev == "0");
    CHECK(r.bound_ok);
  }
  CHECK_THROWS_AS(construct_alt_full(4), std::invalid_argument);
}

TEST_CASE("pair action of the A_n mixer's first two blocks is uniform") {
  // the first two blocks mix the unordered-pair action from base {n-1, n}
  int n = 6;
  auto g = std::make_shared<AlternatingGroup>(n);
  SymmetricGroup sn(n);
  std::vector<MixingStep> steps;
  Elem c1 = transposition(n, 1, n);
  for (const auto& st : alt_action_steps(n)) steps.push_back({sn.conjugate(c1, st.g), st.p});
  Elem c2 = transposition(n, 1, n - 1);
  for (const auto& st : alt_action_steps(n - 1)) {
    std::vector<std::int32_t> img(st.g.v.begin(), st.g.v.end());
    img.push_back(n);
    steps.push_back({sn.conjugate(c2, Elem(img)), st.p});
  }
  ActionView pairs(g, ActionKind::pairs);
  Dist nu = action_law_exact(pairs, steps, Elem({n - 1, n}));
  CHECK(is_uniform_exact(nu, pairs.size()).uniform);
}

TEST_CASE("dihedral mixer") {
  SUBCASE("n = 3: the worked triple") {
    auto r = construct_dihedral(3);
    REQUIRE(r.sequence.steps.size() == 3);
    CHECK(r.sequence.steps[0].g == DihedralGroup::make(0, 1));
    CHECK(r.sequence.steps[1].g == DihedralGroup::make(2, 1));  // sigma tau sigma^-1
    CHECK(r.sequence.steps[1].p == Probability(Rat(2, 3)));
    CHECK(r.sequence.steps[2].g == DihedralGroup::make(0, 1));
    CHECK(r.required_mode == Mode::exact);
    CHECK(r.verification.uniform);
  }
  SUBCASE("n = 4: pure 2-group shape") {
    auto r = construct_dihedral(4);
    REQUIRE(r.sequence.steps.size() == 3);
    CHECK(r.sequence.steps[0].g == DihedralGroup::make(0, 1));
    CHECK(r.sequence.steps[1].g == DihedralGroup::make(1, 0));
    CHECK(r.sequence.steps[2].g == DihedralGroup::make(2, 0));
    CHECK(r.required_mode == Mode::exact);
    CHECK(r.verification.uniform);
  }
  SUBCASE("n = 5: numeric verification") {
    auto r = construct_dihedral(5);
    CHECK(r.sequence.steps.size() == 5);
    CHECK(r.required_mode == Mode::numeric);
    CHECK(r.verification.uniform);
    CHECK(BigFloat(r.verification.max_dev) < BigFloat("1e-9"));
  }
  SUBCASE("length bound t + m across n") {
    for (std::int64_t n : {1, 2, 6, 7, 12, 20, 45}) {
      auto r = construct_dihedral(n);
      CHECK(r.bound_ok);
      CHECK(r.verification.uniform);
    }
  }
}

TEST_CASE("signed permutation mixers") {
  auto b2 = construct_signed_perm(2, false);
  CHECK(b2.sequence.group->order() == 8);
  CHECK(b2.verification.uniform);

  auto b3 = construct_signed_perm(3, false);
  CHECK(b3.sequence.group->order() == 48);
  CHECK(b3.verification.uniform);

  auto d3 = construct_signed_perm(3, true);
  CHECK(d3.sequence.group->order() == 24);
  CHECK(d3.verification.uniform);

  CHECK_THROWS_AS(construct_signed_perm(1, false), std::invalid_argument);
}

TEST_CASE("PSL_2(F_2) explicit sequence") {
  auto r = construct_psl2_char2(1);
  REQUIRE(r.sequence.steps.size() == 4);
  CHECK(r.sequence.group->order() == 6);
  CHECK(r.required_mode == Mode::exact);
  CHECK(r.verification.uniform);
  // [u(1)@1/2, w@2/3, u(1)@1/2, w@1/2]
  CHECK(r.sequence.steps[0].g == Elem({1, 1, 0, 1}));
  CHECK(r.sequence.steps[1].g == Elem({0, 1, 1, 0}));
  CHECK(r.sequence.steps[1].p == Probability(Rat(2, 3)));
  CHECK(r.sequence.steps[3].p == Probability::half());
}

TEST_CASE("PSL_2(F_4) exact") {
  auto r = construct_psl2_char2(2);
  CHECK(r.sequence.group->order() == 60);
  CHECK(r.required_mode == Mode::exact);
  CHECK(r.verification.uniform);
  CHECK(r.verification.max_dev == "0");
}

TEST_CASE("compose_extension") {
  SUBCASE("Z/4 over <2>") {
    auto z4 = std::make_shared<CyclicGroup>(4);
    MixingSequence coset{z4, {{CyclicGroup::make(1), Probability::half()}}, Claim::group()};
    MixingSequence sub{z4, {{CyclicGroup::make(2), Probability::half()}}, Claim::group()};
    auto seq = compose_extension(z4, {CyclicGroup::make(0), CyclicGroup::make(2)}, coset, sub);
    CHECK(verify_sequence(seq, Mode::exact).uniform);
  }
  SUBCASE("S_3 over A_3 is rejected: no subgroup mixer can verify") {
    auto s3 = std::make_shared<SymmetricGroup>(3);
    std::vector<Elem> a3;
    for (const auto& e : s3->enumerate())
      if (permutation_is_even(e)) a3.push_back(e);
    MixingSequence coset{s3, {{transposition(3, 1, 2), Probability::half()}}, Claim::group()};
    MixingSequence sub{s3, {{Elem({2, 3, 1}), Probability::half()}}, Claim::group()};
    CHECK_THROWS_AS(compose_extension(s3, a3, coset, sub), std::invalid_argument);
  }
  SUBCASE("S_4 over S_3") {
    auto s4 = std::make_shared<SymmetricGroup>(4);
    // stab(4) copy of S_3
    std::vector<Elem> h;
    for (const auto& e : s4->enumerate())
      if (e.v[3] == 4) h.push_back(e);
    REQUIRE(h.size() == 6);
    // rebase the natural action mixer from 1 to 4
    MixingSequence coset{s4, {}, Claim::group()};
    for (const auto& st : sym_action_steps(4))
      coset.steps.push_back({s4->conjugate(transposition(4, 1, 4), st.g), st.p});
    MixingSequence sub{s4, {}, Claim::group()};
    for (const auto& st : sym_fast_steps(3)) {
      std::vector<std::int32_t> img(st.g.v.begin(), st.g.v.end());
      img.push_back(4);
      sub.steps.push_back({Elem(img), st.p});
    }
    auto seq = compose_extension(s4, h, coset, sub);
    CHECK(verify_sequence(seq, Mode::exact).uniform);
  }
}

TEST_CASE("compose_direct_product") {
  SUBCASE("Z/2 x Z/2") {
    MixingSequence a{std::make_shared<CyclicGroup>(2),
                     {{CyclicGroup::make(1), Probability::half()}},
                     Claim::group()};
    auto rep = compose_direct_product(a, a);
    CHECK(rep.sequence.steps.size() == 2);
    CHECK(rep.verification.uniform);
  }
  SUBCASE("Z/8 x S_3") {
    auto z8 = construct_cyclic_2group(3);
    auto s3 = construct_sym_fast(3);
    auto rep = compose_direct_product(z8.sequence, s3.sequence);
    CHECK(rep.sequence.group->order() == 48);
    CHECK(rep.verification.uniform);
  }
  SUBCASE("unverified input is rejected") {
    MixingSequence bad{std::make_shared<CyclicGroup>(3),
                       {{CyclicGroup::make(1), Probability::half()}},
                       Claim::group()};
    MixingSequence good{std::make_shared<CyclicGroup>(2),
                        {{CyclicGroup::make(1), Probability::half()}},
                        Claim::group()};
    CHECK_THROWS_AS(compose_direct_product(bad, good), std::invalid_argument);
  }
}

TEST_CASE("lift_2transitive") {
  SUBCASE("S_3 on 3 points") {
    auto s3 = std::make_shared<SymmetricGroup>(3);
    MixingSequence stab{s3, {{transposition(3, 2, 3), Probability::half()}},
                        Claim::act(ActionKind::natural, Elem({2}))};
    auto seq =
        lift_2transitive(s3, ActionKind::natural, {}, Elem({1}), transposition(3, 1, 2), stab);
    REQUIRE(seq.steps.size() == 2);
    CHECK(seq.steps[1].p == Probability(Rat(2, 3)));
    CHECK(verify_sequence(seq, Mode::exact).uniform);
  }
  SUBCASE("S_4 on 4 points, rebasing kicks in") {
    auto s4 = std::make_shared<SymmetricGroup>(4);
    // stabilizer of 1 is the S_3 copy on {2,3,4}; its mixer from base 3
    MixingSequence stab{s4, {}, Claim::act(ActionKind::natural, Elem({3}))};
    for (const auto& st : sym_action_steps(3)) {
      std::vector<std::int32_t> img = {1};
      for (auto x : st.g.v) img.push_back(x + 1);
      // conjugate inside the stabilizer so the mixer is based at 3 = 2+1
      stab.steps.push_back({s4->conjugate(transposition(4, 2, 3), Elem(img)), st.p});
    }
    auto seq =
        lift_2transitive(s4, ActionKind::natural, {}, Elem({1}), transposition(4, 1, 2), stab);
    auto rep = verify_sequence(seq, Mode::exact);
    CHECK(rep.uniform);
    CHECK(seq.steps.back().p == Probability(Rat(3, 4)));
  }
  SUBCASE("degenerate |X| = 1 is rejected") {
    auto s1 = std::make_shared<SymmetricGroup>(1);
    MixingSequence stab{s1, {}, Claim::group()};
    CHECK_THROWS_AS(
        lift_2transitive(s1, ActionKind::natural, {}, Elem({1}), s1->identity(), stab),
        std::invalid_argument);
  }
}

TEST_CASE("semidirect_two_orbit_lift") {
  SUBCASE("S_3 = Z/3 x| Z/2") {
    auto s3 = std::make_shared<SymmetricGroup>(3);
    std::vector<Elem> n = {s3->identity(), Elem({2, 3, 1}), Elem({3, 1, 2})};
    std::vector<Elem> q = {s3->identity(), transposition(3, 2, 3)};
    MixingSequence qmix{s3, {{transposition(3, 2, 3), Probability::half()}}, Claim::group()};
    auto rep = semidirect_two_orbit_lift(s3, n, q, qmix);
    CHECK(rep.verification.uniform);
  }
  SUBCASE("trivial action has too many orbits") {
    auto prod = std::make_shared<ProductGroup>(std::vector<GroupPtr>{
        std::make_shared<CyclicGroup>(3), std::make_shared<CyclicGroup>(2)});
    std::vector<Elem> n, q;
    for (int i = 0; i < 3; ++i) n.push_back(prod->embed(0, CyclicGroup::make(i)));
    for (int i = 0; i < 2; ++i) q.push_back(prod->embed(1, CyclicGroup::make(i)));
    MixingSequence qmix{prod, {{prod->embed(1, CyclicGroup::make(1)), Probability::half()}},
                        Claim::group()};
    CHECK_THROWS_WITH_AS(semidirect_two_orbit_lift(prod, n, q, qmix),
                         doctest::Contains("orbits"), std::invalid_argument);
  }
}

TEST_CASE("Coxeter H_3 = A_5 x Z/2") {
  auto rep = construct_coxeter_h3();
  CHECK(rep.sequence.group->order() == 120);
  CHECK(rep.verification.uniform);
  CHECK(rep.verification.max_dev == "0");
}
