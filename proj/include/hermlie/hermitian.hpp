#pragma once

// Hermitian data (metric coefficients, fundamental form F, (3,0)-form Psi),
// positivity and balanced checks, the canonical balanced families of the
// adapted frame, the underlying-algebra classifier and verification of
// explicit equivalence maps.

#include <optional>
#include <string>

#include "hermlie/complex_structure.hpp"

namespace hermlie {

/// Coefficients of 2F = i(r^2 w^{1 1b} + s^2 w^{2 2b} + t^2 w^{3 3b})
///                      + u w^{1 2b} - ub w^{2 1b} + v w^{2 3b} - vb w^{3 2b}
///                      + z w^{1 3b} - zb w^{3 1b}.
template <class R>
struct MetricCoefficients {
  R r2{1}, s2{1}, t2{1};
  Complex<R> u, v, z;
};

template <class R>
struct HermitianData {
  LieAlgebra<R> algebra;
  ComplexStructure<R> J = ComplexStructure<R>::adapted();
  Form<R> F{2};
  Form<R> Psi{3};  // w^1 ^ w^2 ^ w^3 for the coframe basis in use
  bool orthonormal_adapted = false;
  std::optional<MetricCoefficients<R>> coeffs;

  /// g(X,Y) = -F(X, JY) as a matrix in the frame.
  Mat<R> metric_matrix() const {
    auto M = Mat<R>(kFrameDim, Vec<R>(kFrameDim));
    for (int p = 1; p <= kFrameDim; ++p)
      for (int q = 1; q <= kFrameDim; ++q) {
        CVector<R> jq = J.apply_vector(basis_vector<R>(q));
        std::vector<CVector<R>> args = {basis_vector<R>(p), jq};
        M[size_t(p - 1)][size_t(q - 1)] = -evaluate(F, args).re;
      }
    return M;
  }

  template <class R2>
  HermitianData<R2> convert() const {
    HermitianData<R2> out;
    out.algebra = algebra.template convert<R2>();
    out.J = J.template convert<R2>();
    out.F = F.template convert<R2>();
    out.Psi = Psi.template convert<R2>();
    out.orthonormal_adapted = orthonormal_adapted;
    if (coeffs) {
      MetricCoefficients<R2> c;
      c.r2 = convert_scalar<R2>(coeffs->r2);
      c.s2 = convert_scalar<R2>(coeffs->s2);
      c.t2 = convert_scalar<R2>(coeffs->t2);
      c.u = convert_complex<R2>(coeffs->u);
      c.v = convert_complex<R2>(coeffs->v);
      c.z = convert_complex<R2>(coeffs->z);
      out.coeffs = c;
    }
    return out;
  }
};

namespace detail {
template <class R>
bool positive(const R& x) {
  return !scalar_traits<R>::is_zero(x) && !scalar_traits<R>::is_negative(x);
}
}  // namespace detail

/// Builds F, g, Psi from metric coefficients relative to J's (1,0)-basis.
/// Throws PreconditionError naming the violated positivity condition.
template <class R>
HermitianData<R> build_hermitian(const LieAlgebra<R>& g, const ComplexStructure<R>& J,
                                 const MetricCoefficients<R>& mc) {
  using detail::positive;
  if (!positive(mc.r2)) throw PreconditionError("positivity violated: r^2 > 0");
  if (!positive(mc.s2)) throw PreconditionError("positivity violated: s^2 > 0");
  if (!positive(mc.t2)) throw PreconditionError("positivity violated: t^2 > 0");
  if (!positive(mc.r2 * mc.s2 - mc.u.norm2()))
    throw PreconditionError("positivity violated: r^2 s^2 > |u|^2");
  if (!positive(mc.s2 * mc.t2 - mc.v.norm2()))
    throw PreconditionError("positivity violated: s^2 t^2 > |v|^2");
  if (!positive(mc.r2 * mc.t2 - mc.z.norm2()))
    throw PreconditionError("positivity violated: r^2 t^2 > |z|^2");
  R det_lhs = mc.r2 * mc.s2 * mc.t2 +
              R(2) * (Complex<R>::i() * mc.u.conj() * mc.v.conj() * mc.z).re;
  R det_rhs = mc.t2 * mc.u.norm2() + mc.r2 * mc.v.norm2() + mc.s2 * mc.z.norm2();
  if (!positive(det_lhs - det_rhs))
    throw PreconditionError(
        "positivity violated: r^2 s^2 t^2 + 2 Re(i ub vb z) > t^2|u|^2 + r^2|v|^2 + s^2|z|^2");

  using C = Complex<R>;
  auto w = [&](int j) { return J.omega(j); };
  auto wb = [&](int j) { return J.omega(j + 3); };
  Form<R> twoF =
      C::i() * (mc.r2 * wedge(w(1), wb(1)) + mc.s2 * wedge(w(2), wb(2)) +
                mc.t2 * wedge(w(3), wb(3))) +
      mc.u * wedge(w(1), wb(2)) - mc.u.conj() * wedge(w(2), wb(1)) +
      mc.v * wedge(w(2), wb(3)) - mc.v.conj() * wedge(w(3), wb(2)) +
      mc.z * wedge(w(1), wb(3)) - mc.z.conj() * wedge(w(3), wb(1));
  HermitianData<R> H;
  H.algebra = g;
  H.J = J;
  H.F = C(R(1) / R(2)) * twoF;
  if (!H.F.is_real()) throw PreconditionError("fundamental form is not real");
  H.Psi = wedge(w(1), w(2), w(3));
  H.coeffs = mc;
  return H;
}

template <class R>
struct BalancedReport {
  bool balanced = false;
  Form<R> residual{5};  // F ^ dF
};

template <class R>
BalancedReport<R> balanced_check(const HermitianData<R>& H) {
  Form<R> res = wedge(H.F, H.algebra.d(H.F));
  return {res.is_zero(), res};
}

// ---------------------------------------------------------------------------
// Canonical balanced families in the adapted frame.
// ---------------------------------------------------------------------------

enum class Family { F214, F215, F216, F217, F218 };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::F214: return "F214";
    case Family::F215: return "F215";
    case Family::F216: return "F216";
    case Family::F217: return "F217";
    case Family::F218: return "F218";
  }
  return "?";
}

template <class R>
struct FamilyDescriptor {
  Family family = Family::F214;
  int rho = 0;      // F215/F216
  R bsq{0};         // b^2; equals delta in {0,1} when rho = 0
  R s{1};
  R t{1};
  R r{1};           // F217/F218
  Complex<R> u;     // F216
  int sign = +1;    // F217/F218
};

namespace detail {

template <class R>
R exact_sqrt_or_throw(const R& x, const std::string& what) {
  auto root = scalar_traits<R>::sqrt(x);
  if (!root)
    throw ScalarError(what + " is not a perfect square on the exact backend (" +
                      scalar_traits<R>::str(x) + "); use the float backend");
  return *root;
}

}  // namespace detail

/// Emits the algebra in the adapted frame together with the adapted J,
/// F = e^{12}+e^{34}+e^{56} and Psi. Validates the descriptor domain, Jacobi
/// closure, the balanced condition and the family's complex-type claim.
template <class R>
HermitianData<R> build_family(const FamilyDescriptor<R>& d) {
  using detail::positive;
  auto nonzero = [](const R& x, const char* name) {
    if (scalar_traits<R>::is_zero(x))
      throw PreconditionError(std::string("family parameter ") + name + " must be nonzero");
  };
  if (d.rho != 0 && d.rho != 1) throw PreconditionError("rho must be 0 or 1");
  if (d.sign != 1 && d.sign != -1) throw PreconditionError("sign must be +1 or -1");

  auto M = [](int i, int j) { return Form<R>::monomial({i, j}); };
  LieAlgebra<R> g;
  R rho(d.rho);

  switch (d.family) {
    case Family::F214: {
      nonzero(d.t, "t");
      g.d_coframe[4] = d.t * (M(1, 3) - M(2, 4));
      g.d_coframe[5] = d.t * (M(1, 4) + M(2, 3));
      break;
    }
    case Family::F215: {
      nonzero(d.s, "s");
      nonzero(d.t, "t");
      if (d.rho == 0 && !(d.bsq == R(0) || d.bsq == R(1)))
        throw PreconditionError("abelian family (rho = 0) requires b^2 = delta in {0,1}");
      R ts = d.t / d.s;
      g.d_coframe[4] = ts * (rho + d.bsq) * M(1, 3) - ts * (rho - d.bsq) * M(2, 4);
      g.d_coframe[5] = R(-2) * d.t * (M(1, 2) - M(3, 4)) + ts * (rho - d.bsq) * M(1, 4) +
                       ts * (rho + d.bsq) * M(2, 3);
      break;
    }
    case Family::F216: {
      nonzero(d.t, "t");
      if (d.rho == 0 && !(d.bsq == R(0) || d.bsq == R(1)))
        throw PreconditionError("abelian family (rho = 0) requires b^2 = delta in {0,1}");
      R u2n = d.u.norm2();
      if (!positive(u2n)) throw PreconditionError("family (2.16) requires u != 0");
      if (!positive(d.s * d.s - u2n))
        throw PreconditionError("family (2.16) requires s^2 > |u|^2");
      R uabs = detail::exact_sqrt_or_throw(u2n, "|u|^2");
      R root = detail::exact_sqrt_or_throw(d.s * d.s - u2n, "s^2 - |u|^2");
      R Y = R(2) * root / (uabs * d.t);
      R u1 = d.u.re, u2 = d.u.im, s = d.s, t = d.t, b2 = d.bsq;
      Form<R> common = (rho - b2) * M(1, 4) + (rho + b2) * M(2, 3);
      g.d_coframe[4] =
          (s * Y) * (R(2) * b2 * u1 * uabs * (M(1, 2) - M(3, 4)) -
                     b2 * t * u1 * uabs * Y * (M(1, 3) + M(2, 4)) +
                     R(2) * rho * s * u1 * (M(1, 3) - M(2, 4)) + R(2) * s * u2 * common);
      g.d_coframe[5] =
          (s * Y) * (R(2) * (R(2) * s * s - b2 * u2) * uabs * (M(1, 2) - M(3, 4)) +
                     b2 * t * u2 * uabs * Y * (M(1, 3) + M(2, 4)) -
                     R(2) * rho * s * u2 * (M(1, 3) - M(2, 4)) + R(2) * s * u1 * common);
      break;
    }
    case Family::F217: {
      nonzero(d.r, "r");
      nonzero(d.s, "s");
      R c = R(2) * d.s / d.r;
      g.d_coframe[2] = c * M(1, 5);
      g.d_coframe[3] = c * M(2, 5);
      g.d_coframe[5] = R(d.sign) * (R(2) / (d.r * d.s)) * (M(1, 3) + M(2, 4));
      break;
    }
    case Family::F218: {
      nonzero(d.r, "r");
      nonzero(d.s, "s");
      nonzero(d.t, "t");
      R st2 = d.s * d.s * d.t * d.t;
      if (!positive(st2 - R(1))) throw PreconditionError("family (2.18) requires s^2 t^2 > 1");
      R Z = detail::exact_sqrt_or_throw(st2 - R(1), "s^2 t^2 - 1");
      R stZ = d.s * d.t + Z;
      R pre = d.s / (d.r * d.t * Z);
      R ts = d.t * d.t / (d.s * d.s);
      R sg(d.sign);
      g.d_coframe[2] = pre * (sg * ts * (M(1, 3) + M(2, 4)) +
                              sg * ts * stZ * (M(2, 5) - M(1, 6)) + M(1, 4) +
                              (R(1) / stZ) * M(1, 5));
      g.d_coframe[3] = pre * (M(2, 4) + (R(1) / stZ) * M(2, 5));
      g.d_coframe[4] = -pre * (stZ * M(2, 4) + M(2, 5));
      g.d_coframe[5] = pre * (sg * ts * (R(1) / stZ) * (M(1, 3) + M(2, 4)) +
                              sg * ts * (M(2, 5) - M(1, 6)) + stZ * M(1, 4) + M(1, 5));
      break;
    }
  }

  HermitianData<R> H;
  H.algebra = g;
  H.J = ComplexStructure<R>::adapted();
  H.F = Form<R>::monomial({1, 2}) + Form<R>::monomial({3, 4}) + Form<R>::monomial({5, 6});
  H.Psi = wedge(H.J.omega(1), H.J.omega(2), H.J.omega(3));
  H.orthonormal_adapted = true;
  H.coeffs = MetricCoefficients<R>{};

  auto jac = jacobi_closure_check(g);
  if (!jac.ok)
    throw PreconditionError("family build violates d^2 = 0 (internal inconsistency)");
  if (!balanced_check(H).balanced)
    throw PreconditionError("family build is not balanced (internal inconsistency)");
  ComplexType type = classify_complex_type(g, H.J);
  ComplexType want;
  switch (d.family) {
    case Family::F214: want = ComplexType::Parallelizable; break;
    case Family::F215:
    case Family::F216:
      want = d.rho == 0 ? ComplexType::Abelian : ComplexType::NilpotentNonAbelian;
      break;
    default: want = ComplexType::NonNilpotent; break;
  }
  if (type != want)
    throw PreconditionError(std::string("family complex type mismatch: got ") +
                            complex_type_name(type));
  return H;
}

// ---------------------------------------------------------------------------
// Underlying-algebra classification for the nilpotent normal form (2.4).
// ---------------------------------------------------------------------------

struct AlgebraClassification {
  std::string algebra;   // "h2".."h8"
  std::string case_tag;  // "(i.1)".."(ii.3)"
  bool admits_balanced = true;
};

template <class R>
AlgebraClassification classify_underlying_algebra(int rho, const R& bsq, const R& x,
                                                  const R& y) {
  auto zero = [](const R& v) { return scalar_traits<R>::is_zero(v); };
  R rhoR(rho);
  if (bsq == rhoR) {
    if (rho == 0 && zero(bsq) && zero(x) && zero(y))
      return {"h8", "(omitted)", false};  // no balanced structure
    if (!zero(y)) return {"h2", "(i.1)", true};
    if (rho == 0 && !zero(x)) return {"h3", "(i.2)", true};
    if (rho == 1 && zero(y) && !zero(x)) return {"h4", "(i.3)", true};
    return {"h6", "(i.4)", true};  // rho = 1, x = y = 0
  }
  R b4 = bsq * bsq;
  R disc = (rhoR - b4) * (R(4) * x + rhoR - b4);
  R lhs = R(4) * y * y;
  if (zero(lhs - disc)) return {"h4", "(ii.2)", true};
  if (scalar_traits<R>::is_negative(lhs - disc)) return {"h5", "(ii.3)", true};
  return {"h2", "(ii.1)", true};
}

/// Name the Lie algebra underlying a family build. The balanced constraint
/// (2.6) is already folded in: x = u2 b^2 - s^2, y = u1 b^2.
template <class R>
std::string family_underlying_algebra(const FamilyDescriptor<R>& d) {
  switch (d.family) {
    case Family::F214: return "h5";
    case Family::F217:
    case Family::F218: return "h19-";
    case Family::F215: {
      R x = -d.s * d.s;  // u = 0
      return classify_underlying_algebra(d.rho, d.bsq, x, R(0)).algebra;
    }
    case Family::F216: {
      R x = d.u.im * d.bsq - d.s * d.s;
      R y = d.u.re * d.bsq;
      return classify_underlying_algebra(d.rho, d.bsq, x, y).algebra;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Equivalence verification
// ---------------------------------------------------------------------------

template <class R>
struct EquivalenceReport {
  bool equivalent = false;
  std::string failure;  // empty when equivalent
};

/// Verifies that the (1,0)-basis map sigma^j = sum_k a[j][k] w_src^k realizes
/// an equivalence (dst <- src pullback): it must commute with d and pull the
/// destination F back to the source F. Intertwining J'A = AJ holds by
/// construction since the map sends (1,0) to (1,0).
template <class R>
EquivalenceReport<R> verify_equivalence(const HermitianData<R>& src,
                                        const HermitianData<R>& dst,
                                        const Mat<Complex<R>>& a) {
  if (a.size() != 3 || a[0].size() != 3)
    throw PreconditionError("equivalence map must be a 3x3 complex matrix");
  if (!inverse(a)) throw PreconditionError("equivalence map is singular");

  // images of the destination coframe inside the source e-frame
  std::array<Form<R>, kFrameDim> images;
  for (int j = 0; j < 3; ++j) {
    Form<R> s(1);
    for (int k = 0; k < 3; ++k) s += a[size_t(j)][size_t(k)] * src.J.omega(k + 1);
    images[size_t(j)] = s;
    images[size_t(j + 3)] = s.conjugate();
  }
  auto phi = [&](const Form<R>& dst_form) {
    return pullback(dst.J.to_coframe_coords(dst_form), images);
  };
  for (int j = 1; j <= 3; ++j) {
    Form<R> lhs = src.algebra.d(images[size_t(j - 1)]);
    Form<R> rhs = phi(dst.algebra.d(dst.J.omega(j)));
    if (!(lhs == rhs))
      return {false, "map does not commute with d on w^" + std::to_string(j)};
  }
  if (!(phi(dst.F) == src.F)) return {false, "map does not pull F' back to F"};
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Adapted orthonormal frames for arbitrary Hermitian data
// ---------------------------------------------------------------------------

template <class R>
struct AdaptedBuild {
  HermitianData<R> data;        // orthonormal adapted frame
  Mat<R> frame_rows;            // row i = adapted e~^i in old e-frame coordinates
};

/// Re-expresses (g, J, F) in a frame where J is adapted, F = e^{12}+e^{34}+e^{56}
/// and the metric is orthonormal, via LDL* Gram-Schmidt on the Hermitian
/// coefficient matrix. Exact when the arising square roots are rational.
template <class R>
AdaptedBuild<R> adapt(const HermitianData<R>& H) {
  using C = Complex<R>;
  // Hermitian matrix: 2F = i sum Hm[j][k] w^{j kb}
  Form<R> cc = H.J.to_coframe_coords(R(2) * H.F);
  auto Hm = Mat<C>(3, Vec<C>(3));
  for (auto& [m, c] : cc.terms()) {
    auto pq = mask_bidegree(m);
    if (pq != std::pair<int, int>{1, 1})
      throw PreconditionError("adapt: F is not of type (1,1) for this J");
    auto idx = mask_indices(m);
    int j = idx[0], k = idx[1] - 3;
    Hm[size_t(j - 1)][size_t(k - 1)] = -C::i() * c;
  }
  // LDL*: Hm = L D L^dagger with unit lower-triangular L, positive diagonal D
  auto L = Mat<C>(3, Vec<C>(3));
  Vec<R> diag(3);
  for (int k = 0; k < 3; ++k) {
    C acc = Hm[size_t(k)][size_t(k)];
    for (int m = 0; m < k; ++m) acc -= L[size_t(k)][size_t(m)] *
                                       L[size_t(k)][size_t(m)].conj() * C(diag[size_t(m)]);
    if (!scalar_traits<R>::is_zero(acc.im) || !detail::positive(acc.re))
      throw PreconditionError("adapt: Hermitian matrix is not positive definite");
    diag[size_t(k)] = acc.re;
    L[size_t(k)][size_t(k)] = C(R(1));
    for (int j = k + 1; j < 3; ++j) {
      C s = Hm[size_t(j)][size_t(k)];
      for (int m = 0; m < k; ++m)
        s -= L[size_t(j)][size_t(m)] * L[size_t(k)][size_t(m)].conj() * C(diag[size_t(m)]);
      L[size_t(j)][size_t(k)] = s / C(diag[size_t(k)]);
    }
  }
  // new (1,0) basis nu^k = sqrt(d_k) sum_j L_{jk} w^j, so that the coefficient
  // matrix N = sqrt(D) L^T satisfies N^T conj(N) = Hm, i.e. 2F = i sum nu^{k kb}
  std::array<Form<R>, 3> nu;
  for (int k = 0; k < 3; ++k) {
    R root = detail::exact_sqrt_or_throw(diag[size_t(k)], "Gram-Schmidt pivot");
    Form<R> f(1);
    for (int j = 0; j < 3; ++j)
      f += (C(root) * L[size_t(j)][size_t(k)]) * H.J.omega(j + 1);
    nu[size_t(k)] = f;
  }
  // sanity: 2F = i sum nu^k ^ conj(nu^k)
  Form<R> rebuilt(2);
  for (int k = 0; k < 3; ++k)
    rebuilt += C::i() * wedge(nu[size_t(k)], nu[size_t(k)].conjugate());
  if (!(rebuilt == R(2) * H.F))
    throw PreconditionError("adapt: Gram-Schmidt did not reproduce F (internal)");

  // real adapted frame and the change of coordinates
  auto rows = Mat<R>(kFrameDim, Vec<R>(kFrameDim));
  for (int k = 0; k < 3; ++k)
    for (int i = 1; i <= kFrameDim; ++i) {
      C c = nu[size_t(k)].coeff(indices_mask({i}));
      rows[size_t(2 * k)][size_t(i - 1)] = c.re;
      rows[size_t(2 * k + 1)][size_t(i - 1)] = c.im;
    }
  auto inv = inverse(rows);
  if (!inv) throw PreconditionError("adapt: degenerate frame change (internal)");
  std::array<Form<R>, kFrameDim> old_to_new;
  for (int i = 0; i < kFrameDim; ++i) {
    Form<R> f(1);
    for (int m = 0; m < kFrameDim; ++m)
      f.add_term(indices_mask({m + 1}), C((*inv)[size_t(i)][size_t(m)]));
    old_to_new[size_t(i)] = f;
  }
  AdaptedBuild<R> out;
  out.frame_rows = rows;
  LieAlgebra<R>& g2 = out.data.algebra;
  for (int i = 0; i < kFrameDim; ++i) {
    Form<R> row(1);
    for (int m = 0; m < kFrameDim; ++m)
      row.add_term(indices_mask({m + 1}), C(rows[size_t(i)][size_t(m)]));
    Form<R> de_old = H.algebra.d(row);
    Form<R> de_new = pullback(de_old, old_to_new);
    if (!de_new.is_real()) throw PreconditionError("adapt: non-real structure constants");
    g2.d_coframe[size_t(i)] = de_new.real_part();
  }
  out.data.J = ComplexStructure<R>::adapted();
  out.data.F = Form<R>::monomial({1, 2}) + Form<R>::monomial({3, 4}) + Form<R>::monomial({5, 6});
  out.data.Psi = wedge(out.data.J.omega(1), out.data.J.omega(2), out.data.J.omega(3));
  out.data.orthonormal_adapted = true;
  out.data.coeffs = MetricCoefficients<R>{};
  auto jac = jacobi_closure_check(g2);
  if (!jac.ok) throw PreconditionError("adapt: d^2 = 0 lost in the frame change (internal)");
  return out;
}

}  // namespace hermlie
