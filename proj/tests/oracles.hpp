#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <random>
#include <vector>

#include "hermlie/form.hpp"
#include "hermlie/lie_algebra.hpp"

namespace hermlie::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20260810u);
  return gen;
}

inline Rational random_rational(int max_abs = 5) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_abs);
  return Rational(num(rng()), den(rng()));
}

inline Complex<Rational> random_complex() {
  return Complex<Rational>(random_rational(), random_rational());
}

inline Form<Rational> random_form(int degree, int terms = 4, bool complexified = true) {
  Form<Rational> f(degree);
  std::vector<Mask> masks;
  for (unsigned m = 0; m < 64; ++m)
    if (mask_degree(Mask(m)) == degree) masks.push_back(Mask(m));
  std::uniform_int_distribution<size_t> pick(0, masks.size() - 1);
  for (int t = 0; t < terms; ++t) {
    Complex<Rational> c = complexified ? random_complex() : Complex<Rational>(random_rational());
    f.add_term(masks[pick(rng())], c);
  }
  return f;
}

// Shuffle-sum expansion of (a ^ b)(v_1..v_{p+q}); brute force over p-subsets.
inline Complex<Rational> wedge_eval_oracle(const Form<Rational>& a, const Form<Rational>& b,
                                           const std::vector<CVector<Rational>>& vs) {
  const int p = a.degree(), q = b.degree(), n = p + q;
  Complex<Rational> total;
  auto subset = std::vector<int>(size_t(p));
  // iterate ascending p-subsets of {0..n-1}
  for (int i = 0; i < p; ++i) subset[size_t(i)] = i;
  auto advance = [&]() {
    int i = p - 1;
    while (i >= 0 && subset[size_t(i)] == n - p + i) --i;
    if (i < 0) return false;
    ++subset[size_t(i)];
    for (int j = i + 1; j < p; ++j) subset[size_t(j)] = subset[size_t(j - 1)] + 1;
    return true;
  };
  if (p == 0 || q == 0 || n == 0) {
    // degenerate cases handled by direct evaluation
    return evaluate(wedge(a, b), vs);
  }
  do {
    auto in = std::vector<bool>(size_t(n), false);
    for (int s : subset) in[size_t(s)] = true;
    int inversions = 0;
    for (int k = 0; k < p; ++k) inversions += subset[size_t(k)] - k;
    std::vector<CVector<Rational>> va, vb;
    for (int s : subset) va.push_back(vs[size_t(s)]);
    for (int t = 0; t < n; ++t)
      if (!in[size_t(t)]) vb.push_back(vs[size_t(t)]);
    Complex<Rational> term = evaluate(a, va) * evaluate(b, vb);
    total += (inversions & 1) ? -term : term;
  } while (advance());
  return total;
}

// d e^k evaluated through the dual-bracket formula de^k(e_i,e_j) = -e^k([e_i,e_j]).
inline Rational dual_bracket_oracle(const LieAlgebra<Rational>& g, int k, int i, int j) {
  auto br = g.bracket(i, j);
  return -br[size_t(k - 1)];
}

}  // namespace hermlie::testing
