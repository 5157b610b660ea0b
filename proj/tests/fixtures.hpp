#pragma once

// Shared test fixtures: the nilpotent normal form (2.4)-style equations, the
// non-nilpotent normal form, and the Example 3.7 deformation.

#include "hermlie/hermitian.hpp"

namespace hermlie::testing {

// dw3 = rho w^{12} + w^{1 1b} + bsq w^{1 2b} + (x+yi) w^{2 2b}
template <class R>
std::array<Form<R>, 3> nilpotent_normal_form(int rho, const R& bsq, const R& x, const R& y) {
  std::array<Form<R>, 3> dw = {Form<R>(2), Form<R>(2), Form<R>(2)};
  dw[2].add_term(indices_mask({1, 2}), Complex<R>(R(rho)));
  dw[2].add_term(indices_mask({1, 4}), Complex<R>(R(1)));
  dw[2].add_term(indices_mask({1, 5}), Complex<R>(bsq));
  dw[2].add_term(indices_mask({2, 5}), Complex<R>(x, y));
  return dw;
}

// dw2 = w^{13} + w^{1 3b},  dw3 = sign * i (w^{1 2b} - w^{2 1b})
template <class R>
std::array<Form<R>, 3> nonnilpotent_normal_form(int sign) {
  std::array<Form<R>, 3> dw = {Form<R>(2), Form<R>(2), Form<R>(2)};
  dw[1].add_term(indices_mask({1, 3}), Complex<R>(R(1)));
  dw[1].add_term(indices_mask({1, 6}), Complex<R>(R(1)));
  dw[2].add_term(indices_mask({1, 5}), Complex<R>(R(0), R(sign)));
  dw[2].add_term(indices_mask({2, 4}), Complex<R>(R(0), R(-sign)));
  return dw;
}

// Example 3.7: I_lambda on h5 via the printed form action.
template <class R>
ComplexStructure<R> example37_structure(const R& lambda) {
  auto P = Mat<R>(6, Vec<R>(6));
  R kappa = (lambda + 1) / (lambda - 1);
  P[0][1] = -1; P[1][0] = 1;
  P[2][3] = -kappa; P[3][2] = 1 / kappa;
  P[4][5] = -1; P[5][4] = 1;
  return ComplexStructure<R>::from_form_matrix(P);
}

// A balanced I_lambda-Hermitian metric, diagonal in the (1,0)-basis
// {mu^1, mu^2, e^5 + i e^6}: coefficients (1, h2, t2). The printed g_lambda
// is h2 = sqrt((1+lambda)/(1-lambda)), t2 = 1+lambda (float backend);
// rational h2, t2 keep the exact backend exact.
template <class R>
HermitianData<R> example37_hermitian(const R& lambda, const R& h2, const R& t2) {
  auto g = preset_algebra<R>(Preset::h5);
  auto I = example37_structure(lambda);
  MetricCoefficients<R> mc;
  mc.s2 = h2;
  mc.t2 = t2;
  return build_hermitian(g, I, mc);
}

}  // namespace hermlie::testing
