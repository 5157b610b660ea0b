#include "doctest.h"

#include "hermlie/complex_structure.hpp"
#include "hermlie/form.hpp"
#include "oracles.hpp"

using namespace hermlie;
using hermlie::testing::random_form;
using hermlie::testing::wedge_eval_oracle;

using F = Form<Rational>;
using C = Complex<Rational>;

namespace {
F gamma1() { return F::monomial({1, 2}) - F::monomial({3, 4}); }
F gamma4() { return F::monomial({3, 4}) - F::monomial({5, 6}); }
}  // namespace

TEST_CASE("wedge basics") {
  CHECK(wedge(F::monomial({1}), F::monomial({2})) == F::monomial({1, 2}));
  CHECK(wedge(F::monomial({2}), F::monomial({1})) == -F::monomial({1, 2}));
  CHECK(wedge(F::monomial({1, 2}), F::monomial({1, 2})).is_zero());
  // gamma_1 ^ gamma_1 = -2 e^{1234}
  CHECK(wedge(gamma1(), gamma1()) == Rational(-2) * F::monomial({1, 2, 3, 4}));
  // degree overflow past 6 is the zero form, not an error
  F five = F::monomial({1, 2, 3, 4, 5});
  CHECK(wedge(five, F::monomial({2, 6})).is_zero());
}

TEST_CASE("wedge is graded-anticommutative, associative, bilinear") {
  for (int rep = 0; rep < 40; ++rep) {
    int p = 1 + rep % 3, q = 1 + (rep / 3) % 3;
    F a = random_form(p), b = random_form(q), c = random_form(1);
    F ab = wedge(a, b), ba = wedge(b, a);
    if ((p * q) % 2 == 1)
      CHECK(ab == -ba);
    else
      CHECK(ab == ba);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    C s = hermlie::testing::random_complex();
    CHECK(wedge(s * a, b) == s * wedge(a, b));
    F a2 = random_form(p);
    CHECK(wedge(a + a2, b) == wedge(a, b) + wedge(a2, b));
  }
}

TEST_CASE("evaluate on frame vectors") {
  CHECK(evaluate(F::monomial({1, 2}), {1, 2}) == C(Rational(1)));
  CHECK(evaluate(F::monomial({1, 2}), {2, 1}) == C(Rational(-1)));
  // gamma_4 = e^{34} - e^{56}
  CHECK(evaluate(gamma4(), {3, 4}) == C(Rational(1)));
  CHECK(evaluate(gamma4(), {5, 6}) == C(Rational(-1)));
  CHECK_THROWS(evaluate(F::monomial({1, 2}), {1}));
}

TEST_CASE("evaluate(a^b) agrees with the shuffle-sum oracle") {
  std::uniform_int_distribution<int> coord(-3, 3);
  auto random_vector = [&]() {
    CVector<Rational> v{};
    for (auto& x : v) x = C(Rational(coord(hermlie::testing::rng())));
    return v;
  };
  for (int rep = 0; rep < 25; ++rep) {
    int p = 1 + rep % 2, q = 1 + (rep / 2) % 2;  // (1,1) and (2,1) pairs
    F a = random_form(p), b = random_form(q);
    std::vector<CVector<Rational>> vs;
    for (int i = 0; i < p + q; ++i) vs.push_back(random_vector());
    CHECK(evaluate(wedge(a, b), vs) == wedge_eval_oracle(a, b, vs));
  }
}

TEST_CASE("conjugation and reality") {
  F a = random_form(2);
  CHECK(a.conjugate().conjugate() == a);
  CHECK((a + a.conjugate()).is_real());
  F f = F::monomial({1, 2}) + F::monomial({3, 4}) + F::monomial({5, 6});
  CHECK(f.is_real());
  CHECK(f.conjugate() == f);
}

TEST_CASE("bidegree split under the adapted J") {
  auto J = ComplexStructure<Rational>::adapted();
  F f = F::monomial({1, 2}) + F::monomial({3, 4}) + F::monomial({5, 6});
  CHECK(J.component(f, 1, 1) == f);  // F is pure (1,1)
  CHECK(J.component(f, 2, 0).is_zero());

  // Psi = (e1+ie2)^(e3+ie4)^(e5+ie6) is pure (3,0)
  F psi = wedge(wedge(F::monomial({1}) + C::i() * F::monomial({2}),
                      F::monomial({3}) + C::i() * F::monomial({4})),
                F::monomial({5}) + C::i() * F::monomial({6}));
  CHECK(J.component(psi, 3, 0) == psi);

  // components are idempotent projections summing to the identity
  for (int rep = 0; rep < 10; ++rep) {
    F a = random_form(3);
    auto buckets = J.bidegree_split(a);
    F sum(3);
    for (auto& [pq, comp] : buckets) {
      sum += comp;
      CHECK(J.component(comp, pq.first, pq.second) == comp);
    }
    CHECK(sum == a);
  }

  // conjugation maps the (p,q) component to the (q,p) component
  F a = random_form(3);
  CHECK(J.component(a, 2, 1).conjugate() == J.component(a.conjugate(), 1, 2));

  // conj(w^{1 2b}) = -w^{2 1b} in the abstract coframe reading
  F w12b(2);
  w12b.add_term(indices_mask({1, 5}), C(Rational(1)));  // w^1 ^ wb^2
  F got = coframe_conjugate(w12b);
  F want(2);
  want.add_term(indices_mask({2, 4}), C(Rational(-1)));  // -w^2 ^ wb^1
  CHECK(got == want);
}

TEST_CASE("pullback substitution is a wedge homomorphism") {
  std::array<F, kFrameDim> images;
  for (int i = 0; i < kFrameDim; ++i) images[size_t(i)] = random_form(1, 2);
  for (int rep = 0; rep < 10; ++rep) {
    F a = random_form(1 + rep % 2), b = random_form(1);
    CHECK(pullback(wedge(a, b), images) == wedge(pullback(a, images), pullback(b, images)));
  }
}
