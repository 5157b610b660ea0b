#include "doctest.h"

#include "hermlie/complex_structure.hpp"
#include "hermlie/lie_algebra.hpp"
#include "hermlie/parse.hpp"
#include "oracles.hpp"

using namespace hermlie;
using F = Form<Rational>;

TEST_CASE("chevalley differential on family (2.14) at t=1") {
  auto g = parse_structure_equations("(0,0,0,0,13+42,14+23)");  // h5, adapted frame
  CHECK(g.d(F::monomial({5})) == F::monomial({1, 3}) - F::monomial({2, 4}));
  CHECK(g.d(F::monomial({1})).is_zero());
  // dF for F = e12+e34+e56
  F fund = F::monomial({1, 2}) + F::monomial({3, 4}) + F::monomial({5, 6});
  F want = F::monomial({1, 3, 6}) - F::monomial({1, 4, 5}) - F::monomial({2, 3, 5}) -
           F::monomial({2, 4, 6});
  CHECK(g.d(fund) == want);
}

TEST_CASE("jacobi closure check") {
  for (Preset p : all_presets()) {
    CAPTURE(preset_name(p));
    CHECK(jacobi_closure_check(preset_algebra<Rational>(p)).ok);
  }
  // failing constants: de5 = -e25, de6 = e15 gives d(de6) = e125 != 0
  LieAlgebra<Rational> bad;
  bad.d_coframe[4] = -F::monomial({2, 5});
  bad.d_coframe[5] = F::monomial({1, 5});
  auto rep = jacobi_closure_check(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failing_k == 6);
  CHECK(rep.witness == F::monomial({1, 2, 5}));
}

TEST_CASE("d^2 = 0 on random forms when jacobi passes") {
  for (Preset p : all_presets()) {
    auto g = preset_algebra<Rational>(p);
    for (int rep = 0; rep < 8; ++rep) {
      F a = hermlie::testing::random_form(1 + rep % 4);
      CHECK(g.d(g.d(a)).is_zero());
    }
  }
}

TEST_CASE("differential matches the dual-bracket formula") {
  for (Preset p : all_presets()) {
    auto g = preset_algebra<Rational>(p);
    for (int k = 1; k <= 6; ++k)
      for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
          auto lhs = evaluate(g.d_coframe[size_t(k - 1)], {i, j});
          CHECK(lhs.re == hermlie::testing::dual_bracket_oracle(g, k, i, j));
          CHECK(lhs.im == 0);
        }
  }
}

TEST_CASE("ascending central series") {
  auto h5 = preset_algebra<Rational>(Preset::h5);
  auto s = ascending_series(h5);
  CHECK(s.nilpotent);
  CHECK(s.steps == 2);
  REQUIRE(s.terms.size() >= 1);
  CHECK(s.terms[0].dim() == 2);
  Vec<Rational> e5(6), e6(6);
  e5[4] = 1;
  e6[5] = 1;
  CHECK(s.terms[0].contains(e5));
  CHECK(s.terms[0].contains(e6));

  auto ab = LieAlgebra<Rational>::abelian();
  auto sa = ascending_series(ab);
  CHECK(sa.nilpotent);
  CHECK(sa.steps == 1);

  auto solv = preset_algebra<Rational>(Preset::solvable_su3);
  auto ss = ascending_series(solv);
  CHECK_FALSE(ss.nilpotent);
  CHECK(ss.terms.back().dim() < 6);

  auto h19 = preset_algebra<Rational>(Preset::h19minus);
  auto s19 = ascending_series(h19);
  CHECK(s19.nilpotent);
  CHECK(s19.steps == 3);
}

TEST_CASE("parser: tuples, equations, errors") {
  auto h2 = parse_structure_equations("(0,0,0,0,12,34)");
  CHECK(h2.d_coframe[4] == F::monomial({1, 2}));
  CHECK(h2.d_coframe[5] == F::monomial({3, 4}));
  auto h5 = preset_algebra<Rational>(Preset::h5);
  for (int k = 0; k < 6; ++k)
    CHECK(parse_structure_equations("(0,0,0,0,13+42,14+23)").d_coframe[size_t(k)] ==
          h5.d_coframe[size_t(k)]);

  auto h3 = parse_structure_equations("(0,0,0,0,0,12+34)");
  CHECK(h3.d_coframe[5] == F::monomial({1, 2}) + F::monomial({3, 4}));

  auto g = parse_structure_equations("de5 = 3/2 e13 - e24");
  CHECK(g.structure_constant(5, 1, 3) == Rational(3, 2));
  CHECK(g.structure_constant(5, 2, 4) == Rational(-1));
  CHECK(g.d_coframe[0].is_zero());

  // reversed pairs normalize by sign: 42 == -e24
  auto r = parse_structure_equations("(0,0,0,0,42,0)");
  CHECK(r.structure_constant(5, 2, 4) == Rational(-1));

  CHECK_THROWS_AS(parse_structure_equations("(0,0,0,0,12)"), ParseError);
  CHECK_THROWS_AS(parse_structure_equations("de7 = e12"), ParseError);
  CHECK_THROWS_AS(parse_structure_equations("de5 = e17"), ParseError);
  CHECK_THROWS_AS(parse_structure_equations("de5 = e12\nde5 = e13"), ParseError);
  CHECK_THROWS_AS(parse_structure_equations("de5 = e11"), ParseError);
  try {
    parse_structure_equations("de5 = e12\nde6 = e12 +");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("serialize round-trip is the identity on canonical text") {
  for (Preset p : all_presets()) {
    auto g = preset_algebra<Rational>(p);
    std::string canon = serialize_structure_equations(g);
    auto g2 = parse_structure_equations(canon);
    for (int k = 0; k < 6; ++k) CHECK(g2.d_coframe[size_t(k)] == g.d_coframe[size_t(k)]);
    CHECK(serialize_structure_equations(g2) == canon);
  }
  auto g = parse_structure_equations("de6 = -5/3 e12 + e34");
  CHECK(parse_structure_equations(serialize_structure_equations(g)).d_coframe[5] ==
        g.d_coframe[5]);
}

TEST_CASE("json mirror") {
  auto g = preset_algebra<Rational>(Preset::h5);
  auto g2 = lie_algebra_from_json(lie_algebra_to_json(g));
  for (int k = 0; k < 6; ++k) CHECK(g2.d_coframe[size_t(k)] == g.d_coframe[size_t(k)]);
  auto h = lie_algebra_from_json(R"({"de":[[],[],[],[],[[1,3,"1"],[4,2,"1"]],[[1,4,"1"],[2,3,"1"]]]})");
  for (int k = 0; k < 6; ++k) CHECK(h.d_coframe[size_t(k)] == g.d_coframe[size_t(k)]);
  CHECK_THROWS_AS(lie_algebra_from_json("{\"de\":[[]]}"), ParseError);
  CHECK_THROWS_AS(lie_algebra_from_json("not json"), ParseError);
}
