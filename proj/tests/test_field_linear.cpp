#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "groupmix/field.hpp"
#include "groupmix/matrix_group.hpp"

using namespace groupmix;

TEST_CASE("F4 arithmetic with modulus x^2+x+1") {
  FieldSpec f4(2, 2, {1, 1, 1});
  // x * (x+1) = x^2 + x = 1 (since x^2 = x+1)
  std::int64_t x = f4.encode({0, 1});
  std::int64_t x1 = f4.encode({1, 1});
  CHECK(f4.mul(x, x1) == f4.one());
  CHECK(f4.inv(x) == x1);
}

TEST_CASE("F5 inverse") {
  auto f5 = FieldSpec::with_default_modulus(5, 1);
  CHECK(f5.inv(2) == 3);
  CHECK_THROWS_AS(f5.inv(0), std::domain_error);
}

TEST_CASE("F8 reduction of x^3") {
  FieldSpec f8(2, 3, {1, 1, 0, 1});  // x^3 + x + 1
  std::int64_t x = f8.encode({0, 1});
  std::int64_t x3 = f8.mul(f8.mul(x, x), x);
  CHECK(x3 == f8.encode({1, 1}));  // x + 1
}

TEST_CASE("field axioms over default moduli") {
  for (auto [p, e] : {std::pair<std::int64_t, int>{2, 2}, {2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
    auto f = FieldSpec::with_default_modulus(p, e);
    for (std::int64_t a = 0; a < f.q(); ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, f.one()) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::int64_t b = 0; b < f.q(); ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::int64_t c = 0; c < f.q(); ++c)
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("reducible modulus is rejected") {
  CHECK_THROWS_AS(FieldSpec(2, 2, {1, 0, 1}), std::invalid_argument);  // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(FieldSpec(4, 1, {1, 1}), std::invalid_argument);     // 4 not prime
}

TEST_CASE("prime power factoring") {
  std::int64_t p;
  int e;
  factor_prime_power(8, p, e);
  CHECK(p == 2);
  CHECK(e == 3);
  factor_prime_power(49, p, e);
  CHECK(p == 7);
  CHECK(e == 2);
  CHECK_THROWS_AS(factor_prime_power(12, p, e), std::invalid_argument);
}

TEST_CASE("SL2(F2) canonicalization is trivial") {
  auto f2 = std::make_shared<FieldSpec>(FieldSpec::with_default_modulus(2, 1));
  MatrixGroup sl2(MatrixFamily::SL, 2, f2);
  Elem m = sl2.make_element({1, 1, 0, 1});
  CHECK(m == Elem({1, 1, 0, 1}));
  CHECK(sl2.order() == 6);
}

TEST_CASE("PSL2(F5) identifies M and 4M") {
  auto f5 = std::make_shared<FieldSpec>(FieldSpec::with_default_modulus(5, 1));
  MatrixGroup psl2(MatrixFamily::PSL, 2, f5);
  // mu_2(F_5) = {1, 4}
  Elem a = psl2.make_element({1, 1, 0, 1});
  Elem b = psl2.make_element({4, 4, 0, 4});
  CHECK(a == b);
}

TEST_CASE("PGL2(F3) sends scalar matrices to the identity") {
  auto f3 = std::make_shared<FieldSpec>(FieldSpec::with_default_modulus(3, 1));
  MatrixGroup pgl2(MatrixFamily::PGL, 2, f3);
  CHECK(pgl2.make_element({2, 0, 0, 2}) == pgl2.identity());
}

TEST_CASE("canonicalization is constant on scalar orbits (q <= 9, d = 2)") {
  for (auto [p, e] : {std::pair<std::int64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                      {2, 3}, {3, 2}}) {
    auto f = std::make_shared<FieldSpec>(FieldSpec::with_default_modulus(p, e));
    for (MatrixFamily fam : {MatrixFamily::PSL, MatrixFamily::PGL}) {
      MatrixGroup g(fam, 2, f);
      std::vector<std::int64_t> scalars;
      if (fam == MatrixFamily::PGL)
        for (std::int64_t s = 1; s < f->q(); ++s) scalars.push_back(s);
      else
        scalars = f->roots_of_unity(2);
      // scan a slice of invertible matrices
      int tested = 0;
      for (std::int64_t code = 0; code < f->q() * f->q() * f->q() * f->q() && tested < 60;
           ++code) {
        std::int64_t c = code;
        std::vector<std::int64_t> entries(4);
        for (auto& x : entries) { x = c % f->q(); c /= f->q(); }
        MatrixGroup raw(MatrixFamily::GL, 2, f);
        std::int64_t det =
            f->sub(f->mul(entries[0], entries[3]), f->mul(entries[1], entries[2]));
        if (det == 0) continue;
        if (fam == MatrixFamily::PSL && det != 1) continue;
        ++tested;
        Elem canon = g.make_element(entries);
        for (auto s : scalars) {
          std::vector<std::int64_t> scaled(4);
          for (int i = 0; i < 4; ++i) scaled[i] = f->mul(s, entries[i]);
          CHECK(g.make_element(scaled) == canon);
        }
        CHECK(g.canonicalize(canon) == canon);  // idempotent
      }
    }
  }
}

TEST_CASE("PSL2 enumerated orders match q(q^2-1)/gcd(2,q-1)") {
  for (auto [p, e] : {std::pair<std::int64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                      {2, 3}, {3, 2}}) {
    auto f = std::make_shared<FieldSpec>(FieldSpec::with_default_modulus(p, e));
    MatrixGroup g(MatrixFamily::PSL, 2, f);
    std::int64_t q = f->q();
    std::int64_t expect = q * (q * q - 1) / std::gcd<std::int64_t>(2, q - 1);
    CHECK(g.order() == expect);
    auto all = g.enumerate();
    CHECK(static_cast<std::int64_t>(all.size()) == expect);
    for (const auto& m : all) g.validate(m);
  }
}

TEST_CASE("projective action") {
  auto f2 = std::make_shared<FieldSpec>(FieldSpec::with_default_modulus(2, 1));
  MatrixGroup sl2(MatrixFamily::SL, 2, f2);
  MatrixGroup::ProjPoint inf = {1, 0};
  CHECK(sl2.apply_to_point(sl2.identity(), inf) == inf);
  Elem w = sl2.make_element({0, 1, 1, 0});
  CHECK(sl2.apply_to_point(w, inf) == MatrixGroup::ProjPoint{0, 1});

  auto f4 = std::make_shared<FieldSpec>(FieldSpec::with_default_modulus(2, 2));
  MatrixGroup sl2f4(MatrixFamily::SL, 2, f4);
  std::int64_t x = f4->encode({0, 1});
  Elem u = sl2f4.make_element({1, x, 0, 1});
  // [[1,x],[0,1]] * [0:1] = [x:1]
  CHECK(sl2f4.apply_to_point(u, {0, 1}) == MatrixGroup::ProjPoint{x, 1});

  // group action property on sampled pairs
  auto all = sl2f4.enumerate();
  auto pts = sl2f4.projective_points();
  CHECK(pts.size() == 5);
  for (size_t i = 0; i < all.size(); i += 7)
    for (size_t j = 0; j < all.size(); j += 11)
      for (const auto& pt : pts) {
        auto lhs = sl2f4.apply_to_point(sl2f4.multiply(all[i], all[j]), pt);
        auto rhs = sl2f4.apply_to_point(all[i], sl2f4.apply_to_point(all[j], pt));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("matrix family status report") {
  auto st = matrix_family_status(5, 2);
  CHECK(st.q_minus_1_pow2);
  CHECK(st.gcd_pow2);
  CHECK(st.quotient_pow2);
  bool mixable_all = false;
  for (const auto& s : st.statements)
    if (s.find("mixable for all d") != std::string::npos) mixable_all = true;
  CHECK(mixable_all);

  auto st2 = matrix_family_status(7, 3);
  CHECK_FALSE(st2.q_minus_1_pow2);
  bool gl_neg = false;
  for (const auto& s : st2.statements)
    if (s.find("GL_3(F_7) not mixable") != std::string::npos) gl_neg = true;
  CHECK(gl_neg);

  auto st3 = matrix_family_status(4, 2);
  CHECK(st3.gcd_pow2);               // gcd(3, 2) = 1
  CHECK_FALSE(st3.quotient_pow2);    // (4-1)/gcd = 3
  CHECK(st3.char2_psl2_construction);

  CHECK_THROWS_AS(matrix_family_status(12, 2), std::invalid_argument);
}

TEST_CASE("matrix element validation") {
  auto f5 = std::make_shared<FieldSpec>(FieldSpec::with_default_modulus(5, 1));
  MatrixGroup sl2(MatrixFamily::SL, 2, f5);
  CHECK_THROWS_AS(sl2.make_element({1, 0, 0, 2}), std::invalid_argument);  // det 2
  CHECK_THROWS_AS(sl2.make_element({1, 0, 1, 0}), std::invalid_argument);  // singular
  MatrixGroup gl2(MatrixFamily::GL, 2, f5);
  CHECK(gl2.make_element({1, 0, 0, 2}) == Elem({1, 0, 0, 2}));
}
