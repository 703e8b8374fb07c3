#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupmix/engine.hpp"
#include "groupmix/group.hpp"
#include "groupmix/sequence.hpp"

using namespace groupmix;

TEST_CASE("cyclic multiplication is addition mod n") {
  CyclicGroup z8(8);
  CHECK(z8.multiply(CyclicGroup::make(5), CyclicGroup::make(6)) == CyclicGroup::make(3));
  CHECK(z8.inverse(CyclicGroup::make(3)) == CyclicGroup::make(5));
  CHECK(z8.multiply(z8.identity(), CyclicGroup::make(7)) == CyclicGroup::make(7));
}

TEST_CASE("symmetric left-action composition") {
  SymmetricGroup s3(3);
  // (1 2) * (2 3) -> images [2,3,1] under (fg)(x) = f(g(x))
  Elem t12 = transposition(3, 1, 2);
  Elem t23 = transposition(3, 2, 3);
  Elem prod = s3.multiply(t12, t23);
  CHECK(prod == Elem({2, 3, 1}));
  CHECK(s3.multiply(prod, s3.inverse(prod)) == s3.identity());
}

TEST_CASE("dihedral normal form and defining relation") {
  DihedralGroup d3(3);
  // tau * sigma = sigma^-1 tau
  Elem tau = DihedralGroup::make(0, 1);
  Elem sigma = DihedralGroup::make(1, 0);
  CHECK(d3.multiply(tau, sigma) == DihedralGroup::make(2, 1));
  // every reflection has order 2
  CHECK(element_order(d3, DihedralGroup::make(2, 1)) == 2);
  DihedralGroup d5(5);
  CHECK(element_order(d5, DihedralGroup::make(2, 1)) == 2);
}

TEST_CASE("element orders") {
  CyclicGroup z12(12);
  CHECK(element_order(z12, z12.identity()) == 1);
  CHECK(element_order(z12, CyclicGroup::make(8)) == 3);
}

TEST_CASE("enumeration sizes and canonical order") {
  CHECK(CyclicGroup(4).enumerate().size() == 4);
  CHECK(SymmetricGroup(3).enumerate().size() == 6);
  CHECK(AlternatingGroup(4).enumerate().size() == 12);
  CHECK(DihedralGroup(6).enumerate().size() == 12);
  CHECK(SignedPermGroup(3, false).enumerate().size() == 48);
  CHECK(SignedPermGroup(3, true).enumerate().size() == 24);

  auto elems = SymmetricGroup(3).enumerate();
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(elems.front() == SymmetricGroup(3).identity());
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(SymmetricGroup(12).enumerate(1000), std::length_error);
}

TEST_CASE("group axioms hold exhaustively on small groups") {
  std::vector<GroupPtr> groups = {
      std::make_shared<CyclicGroup>(7),
      std::make_shared<DihedralGroup>(4),
      std::make_shared<SymmetricGroup>(4),
      std::make_shared<AlternatingGroup>(4),
      std::make_shared<SignedPermGroup>(2, false),
      std::make_shared<ProductGroup>(
          std::vector<GroupPtr>{std::make_shared<CyclicGroup>(3), std::make_shared<CyclicGroup>(4)}),
  };
  for (const auto& g : groups) {
    auto all = g->enumerate();
    REQUIRE(static_cast<std::int64_t>(all.size()) == g->order());
    Elem id = g->identity();
    for (const auto& a : all) {
      CHECK(g->multiply(id, a) == a);
      CHECK(g->multiply(a, id) == a);
      CHECK(g->multiply(g->inverse(a), a) == id);
    }
    // associativity on a sample of triples
    for (size_t i = 0; i < all.size(); i += 3)
      for (size_t j = 1; j < all.size(); j += 5)
        for (size_t k = 2; k < all.size(); k += 7) {
          CHECK(g->multiply(g->multiply(all[i], all[j]), all[k]) ==
                g->multiply(all[i], g->multiply(all[j], all[k])));
        }
  }
}

TEST_CASE("subgroup closure") {
  SymmetricGroup s3(3);
  auto sub = subgroup_closure(s3, {transposition(3, 1, 2)});
  CHECK(sub.size() == 2);

  // all transpositions generate S_3
  auto full = subgroup_closure(s3, {transposition(3, 1, 2), transposition(3, 2, 3),
                                    transposition(3, 1, 3)});
  CHECK(full.size() == 6);

  // order-2 elements of A_4 close to the Klein four-group
  AlternatingGroup a4(4);
  std::vector<Elem> invs;
  for (const auto& e : a4.enumerate())
    if (!(e == a4.identity()) && element_order(a4, e) == 2) invs.push_back(e);
  CHECK(invs.size() == 3);
  auto klein = subgroup_closure(a4, invs);
  CHECK(klein.size() == 4);

  // closing a closed set is a fixed point
  auto again = subgroup_closure(a4, klein);
  CHECK(again == klein);
}

TEST_CASE("quotient groups") {
  SUBCASE("Z/12 by <4>") {
    CyclicGroup z12(12);
    std::vector<Elem> n = {CyclicGroup::make(0), CyclicGroup::make(4), CyclicGroup::make(8)};
    auto q = quotient_group(z12, n);
    CHECK(q.group->order() == 4);
    // projection is a homomorphism
    auto all = z12.enumerate();
    for (const auto& a : all)
      for (const auto& b : all) {
        auto lhs = q.projection.at(z12.multiply(a, b));
        auto rhs = q.group->multiply(CayleyGroup::make(q.projection.at(a)),
                                     CayleyGroup::make(q.projection.at(b)));
        CHECK(lhs == rhs.v[0]);
      }
  }
  SUBCASE("A_4 by Klein four has order 3") {
    AlternatingGroup a4(4);
    std::vector<Elem> invs = {a4.identity()};
    for (const auto& e : a4.enumerate())
      if (!(e == a4.identity()) && element_order(a4, e) == 2) invs.push_back(e);
    auto q = quotient_group(a4, invs);
    CHECK(q.group->order() == 3);
  }
  SUBCASE("S_3 by A_3 has order 2") {
    SymmetricGroup s3(3);
    std::vector<Elem> a3;
    for (const auto& e : s3.enumerate())
      if (permutation_is_even(e)) a3.push_back(e);
    CHECK(a3.size() == 3);
    auto q = quotient_group(s3, a3);
    CHECK(q.group->order() == 2);
  }
  SUBCASE("non-normal subgroup is rejected") {
    SymmetricGroup s3(3);
    std::vector<Elem> h = {s3.identity(), transposition(3, 1, 2)};
    CHECK_THROWS_AS(quotient_group(s3, h), std::invalid_argument);
  }
  SUBCASE("non-subgroup is rejected") {
    CyclicGroup z6(6);
    std::vector<Elem> bad = {CyclicGroup::make(0), CyclicGroup::make(1)};
    CHECK_THROWS_AS(quotient_group(z6, bad), std::invalid_argument);
  }
}

TEST_CASE("cayley table validation") {
  // Z/2 x Z/2
  std::vector<std::vector<std::int32_t>> klein = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  CayleyGroup g(klein);
  CHECK(g.order() == 4);
  CHECK(element_order(g, CayleyGroup::make(3)) == 2);

  auto bad = klein;
  bad[1][1] = 1;  // row no longer a bijection
  CHECK_THROWS_AS(CayleyGroup{bad}, std::invalid_argument);
}

TEST_CASE("product group embedding") {
  auto z2 = std::make_shared<CyclicGroup>(2);
  auto s3 = std::make_shared<SymmetricGroup>(3);
  ProductGroup prod({z2, s3});
  CHECK(prod.order() == 12);
  Elem e = prod.embed(1, transposition(3, 1, 2));
  CHECK(prod.component(0, e) == z2->identity());
  CHECK(prod.component(1, e) == transposition(3, 1, 2));
  CHECK(element_order(prod, e) == 2);
}

TEST_CASE("pairs_to_subproduct") {
  SymmetricGroup s3(3);

  SUBCASE("single pair with a = identity") {
    std::vector<PairChoice> pairs = {{s3.identity(), transposition(3, 1, 2), Probability::half()}};
    auto form = pairs_to_subproduct(s3, pairs);
    REQUIRE(form.steps.size() == 1);
    CHECK(form.steps[0].g == transposition(3, 1, 2));
    CHECK(form.trailing_constant == s3.identity());
  }

  SUBCASE("degenerate choices give identity steps") {
    Elem a = transposition(3, 1, 3);
    std::vector<PairChoice> pairs = {{a, a, Probability::half()},
                                     {a, a, Probability(Rat(1, 3))}};
    auto form = pairs_to_subproduct(s3, pairs);
    for (const auto& st : form.steps) CHECK(st.g == s3.identity());
    CHECK(form.trailing_constant == s3.multiply(a, a));
  }

  SUBCASE("law matches direct two-coin enumeration") {
    Elem a1 = transposition(3, 1, 2), b1 = transposition(3, 2, 3);
    Elem a2 = Elem({2, 3, 1}), b2 = transposition(3, 1, 3);
    Rat p1(1, 3), p2(1, 4);
    std::vector<PairChoice> pairs = {{a1, b1, Probability(p1)}, {a2, b2, Probability(p2)}};
    auto form = pairs_to_subproduct(s3, pairs);

    // direct law of x1 x2
    Dist direct;
    direct.mass[s3.multiply(a1, a2)] += (1 - p1) * (1 - p2);
    direct.mass[s3.multiply(a1, b2)] += (1 - p1) * p2;
    direct.mass[s3.multiply(b1, a2)] += p1 * (1 - p2);
    direct.mass[s3.multiply(b1, b2)] += p1 * p2;

    // subproduct law, then multiply by the trailing constant
    Dist sub = sequence_law_exact(s3, form.steps);
    Dist shifted;
    for (const auto& [x, m] : sub.mass) shifted.mass[s3.multiply(x, form.trailing_constant)] += m;

    for (const auto& [x, m] : direct.mass) {
      auto it = shifted.mass.find(x);
      bool found = it != shifted.mass.end();
      CHECK(found);
      if (found) CHECK(it->second == m);
    }
    CHECK(shifted.mass.size() == direct.mass.size());
  }
}

TEST_CASE("conjugacy classes of S_3") {
  SymmetricGroup s3(3);
  auto classes = conjugacy_classes(s3);
  REQUIRE(classes.size() == 3);
  size_t total = 0;
  for (const auto& c : classes) total += c.size();
  CHECK(total == 6);
}
