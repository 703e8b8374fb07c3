#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupmix/structure.hpp"

using namespace groupmix;

TEST_CASE("two_element_closure") {
  SUBCASE("S_3: transpositions generate everything") {
    SymmetricGroup s3(3);
    CHECK(two_element_closure(s3).size() == 6);
  }
  SUBCASE("A_4: the Klein four-group, index 3") {
    AlternatingGroup a4(4);
    auto u = two_element_closure(a4);
    CHECK(u.size() == 4);
  }
  SUBCASE("Z/6: the unique involution gives {0, 3}") {
    CyclicGroup z6(6);
    auto u = two_element_closure(z6);
    REQUIRE(u.size() == 2);
    CHECK(u[0] == CyclicGroup::make(0));
    CHECK(u[1] == CyclicGroup::make(3));
  }
}

TEST_CASE("U(G) is normal (conjugation-closed)") {
  std::vector<GroupPtr> groups = {
      std::make_shared<SymmetricGroup>(4),
      std::make_shared<AlternatingGroup>(4),
      std::make_shared<CyclicGroup>(12),
      std::make_shared<DihedralGroup>(6),
  };
  for (const auto& g : groups) {
    auto u = two_element_closure(*g);
    ElemSet uset(u.begin(), u.end());
    for (const auto& x : g->enumerate())
      for (const auto& n : u) CHECK(uset.count(g->conjugate(x, n)));
    CHECK((g->order() / static_cast<std::int64_t>(u.size())) % 2 == 1);
  }
}

TEST_CASE("is_2prime_simple") {
  CHECK(is_2prime_simple(SymmetricGroup(4)));
  CHECK_FALSE(is_2prime_simple(AlternatingGroup(4)));
  CHECK(is_2prime_simple(CyclicGroup(8)));
  CHECK(is_2prime_simple(CyclicGroup(1)));
}

TEST_CASE("odd_quotient_witness") {
  SUBCASE("Z/3 yields an order-3 quotient") {
    auto w = odd_quotient_witness(CyclicGroup(3));
    REQUIRE(w.has_value());
    CHECK(w->group->order() == 3);
  }
  SUBCASE("A_4 yields an order-3 quotient") {
    auto w = odd_quotient_witness(AlternatingGroup(4));
    REQUIRE(w.has_value());
    CHECK(w->group->order() == 3);
  }
  SUBCASE("S_5 yields none") {
    CHECK_FALSE(odd_quotient_witness(SymmetricGroup(5)).has_value());
  }
}

TEST_CASE("involution_series") {
  SUBCASE("S_4: [1, S_4]") {
    auto s = involution_series(SymmetricGroup(4));
    CHECK(s.orders == std::vector<std::int64_t>{1, 24});
    CHECK(s.top_quotient_order == 1);
  }
  SUBCASE("Z/12: orders [1, 2, 4], top quotient 3") {
    auto s = involution_series(CyclicGroup(12));
    CHECK(s.orders == std::vector<std::int64_t>{1, 2, 4});
    CHECK(s.top_quotient_order == 3);
  }
  SUBCASE("Z/7: no involutions at all") {
    auto s = involution_series(CyclicGroup(7));
    CHECK(s.orders == std::vector<std::int64_t>{1});
    CHECK(s.top_quotient_order == 7);
  }
}

TEST_CASE("is_involution_generated") {
  CHECK(is_involution_generated(SymmetricGroup(2)));
  CHECK(is_involution_generated(SymmetricGroup(5)));
  CHECK(is_involution_generated(AlternatingGroup(5)));
  // Z/4 is 2'-simple yet not involution-generated
  CHECK_FALSE(is_involution_generated(CyclicGroup(4)));
  CHECK(is_2prime_simple(CyclicGroup(4)));
}

TEST_CASE("2'-simple iff trivial top quotient in the involution series") {
  std::vector<GroupPtr> battery = {
      std::make_shared<CyclicGroup>(4),      std::make_shared<CyclicGroup>(6),
      std::make_shared<CyclicGroup>(12),     std::make_shared<SymmetricGroup>(4),
      std::make_shared<AlternatingGroup>(4), std::make_shared<AlternatingGroup>(5),
      std::make_shared<DihedralGroup>(6),    std::make_shared<CyclicGroup>(9),
  };
  for (const auto& g : battery) {
    auto s = involution_series(*g);
    CHECK(is_2prime_simple(*g) == (s.top_quotient_order == 1));
  }
}

TEST_CASE("analyze_structure summary") {
  auto rep = analyze_structure(CyclicGroup(12));
  CHECK(rep.order == 12);
  CHECK(rep.u_order == 4);
  CHECK(rep.odd_quotient_order == 3);
  CHECK_FALSE(rep.two_prime_simple);
  CHECK_FALSE(rep.involution_generated);
  CHECK(rep.series_orders == std::vector<std::int64_t>{1, 2, 4});
  CHECK(rep.series_top_quotient == 3);

  auto rep2 = analyze_structure(SymmetricGroup(5));
  CHECK(rep2.two_prime_simple);
  CHECK(rep2.involution_generated);
  CHECK(rep2.series_top_quotient == 1);
}
