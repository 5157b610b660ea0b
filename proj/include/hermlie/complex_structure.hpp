#pragma once

// Almost-complex structures J on a 6-dimensional frame, the induced
// (1,0)-coframe and bigrading, integrability tests, the J-compatible
// ascending series and the four-way type classification.
//
// Conventions, used everywhere:
//   * form action      (J a)(X) = -a(JX); the matrix P is J e^i = sum_j P_ij e^j
//   * vector action    M = -P (as matrices in the frame coordinates)
//   * (1,0)-forms      the +i eigenspace of J on the complexified coframe
//   * k-form pullback  (J a)(X_1..X_k) = (-1)^k a(JX_1..JX_k), so J acts on
//                      (p,q)-forms as i^{p-q}; the torsion is T = J dF.

#include <algorithm>
#include <map>
#include <utility>

#include "hermlie/lie_algebra.hpp"

namespace hermlie {

enum class ComplexType {
  NonIntegrable,
  Parallelizable,
  Abelian,
  NilpotentNonAbelian,
  NonNilpotent,
};

inline const char* complex_type_name(ComplexType t) {
  switch (t) {
    case ComplexType::NonIntegrable: return "non-integrable";
    case ComplexType::Parallelizable: return "complex-parallelizable";
    case ComplexType::Abelian: return "abelian";
    case ComplexType::NilpotentNonAbelian: return "nilpotent-non-abelian";
    case ComplexType::NonNilpotent: return "non-nilpotent";
  }
  return "?";
}

template <class R>
class ComplexStructure {
 public:
  using C = Complex<R>;

  /// (2.13)-style J: Je^1 = -e^2, Je^3 = -e^4, Je^5 = -e^6.
  static ComplexStructure adapted() {
    std::array<Form<R>, 3> w;
    for (int k = 0; k < 3; ++k)
      w[size_t(k)] = Form<R>::monomial({2 * k + 1}) +
                     C::i() * Form<R>::monomial({2 * k + 2});
    return from_coframe(w);
  }

  /// Build from a chosen (1,0)-coframe basis {w^1,w^2,w^3}.
  static ComplexStructure from_coframe(const std::array<Form<R>, 3>& w) {
    ComplexStructure cs;
    for (int m = 0; m < 3; ++m) {
      if (w[size_t(m)].degree() != 1) throw PreconditionError("coframe entries must be 1-forms");
      cs.coframe_[size_t(m)] = w[size_t(m)];
      cs.coframe_[size_t(m + 3)] = w[size_t(m)].conjugate();
    }
    Mat<C> B(kFrameDim, Vec<C>(kFrameDim));
    for (int m = 0; m < kFrameDim; ++m)
      for (int i = 1; i <= kFrameDim; ++i)
        B[size_t(m)][size_t(i - 1)] = cs.coframe_[size_t(m)].coeff(indices_mask({i}));
    auto Binv = inverse(B);
    if (!Binv) throw PreconditionError("coframe basis is not independent over C");
    cs.to_coframe_ = *Binv;  // e^i = sum_m to_coframe_[i][m] * coframe_m

    // P = B^{-1} D B with D = diag(i,i,i,-i,-i,-i); must come out real.
    Mat<C> DB(kFrameDim, Vec<C>(kFrameDim));
    for (int m = 0; m < kFrameDim; ++m)
      for (int j = 0; j < kFrameDim; ++j)
        DB[size_t(m)][size_t(j)] = (m < 3 ? C::i() : -C::i()) * B[size_t(m)][size_t(j)];
    Mat<C> Pc = mat_mul(*Binv, DB);
    cs.P_ = Mat<R>(kFrameDim, Vec<R>(kFrameDim));
    for (int i = 0; i < kFrameDim; ++i)
      for (int j = 0; j < kFrameDim; ++j) {
        if (!scalar_traits<R>::is_zero(Pc[size_t(i)][size_t(j)].im))
          throw PreconditionError("coframe does not define a real structure J");
        cs.P_[size_t(i)][size_t(j)] = Pc[size_t(i)][size_t(j)].re;
      }
    return cs;
  }

  /// Build from the form-action matrix P (J e^i = sum_j P_ij e^j, P^2 = -Id).
  static ComplexStructure from_form_matrix(const Mat<R>& P) {
    Mat<R> P2 = mat_mul(P, P);
    for (int i = 0; i < kFrameDim; ++i)
      for (int j = 0; j < kFrameDim; ++j) {
        R want = i == j ? R(-1) : R(0);
        if (!scalar_traits<R>::is_zero(P2[size_t(i)][size_t(j)] - want))
          throw PreconditionError("J^2 != -Id");
      }
    // coefficient action of J on 1-forms is P^T; (1,0)-forms = ker(P^T - i I)
    Mat<C> A(kFrameDim, Vec<C>(kFrameDim));
    for (int i = 0; i < kFrameDim; ++i)
      for (int j = 0; j < kFrameDim; ++j) {
        A[size_t(i)][size_t(j)] = C(P[size_t(j)][size_t(i)]);
        if (i == j) A[size_t(i)][size_t(j)] -= C::i();
      }
    Mat<C> ker = kernel(A);
    if (ker.size() != 3) throw PreconditionError("J has no 3-dimensional (1,0) eigenspace");
    // normalize: unit leading coefficient, rows ordered by leading index
    auto leading = [](const Vec<C>& v) {
      for (size_t i = 0; i < v.size(); ++i)
        if (!hermlie::is_zero(v[i])) return int(i);
      return int(v.size());
    };
    std::sort(ker.begin(), ker.end(),
              [&](const Vec<C>& a, const Vec<C>& b) { return leading(a) < leading(b); });
    std::array<Form<R>, 3> w;
    for (int m = 0; m < 3; ++m) {
      C lead = ker[size_t(m)][size_t(leading(ker[size_t(m)]))];
      Form<R> f(1);
      for (int i = 1; i <= kFrameDim; ++i)
        f.add_term(indices_mask({i}), ker[size_t(m)][size_t(i - 1)] / lead);
      w[size_t(m)] = f;
    }
    return from_coframe(w);
  }

  const Mat<R>& form_action() const { return P_; }

  Mat<R> vector_action() const {
    Mat<R> M(kFrameDim, Vec<R>(kFrameDim));
    for (int i = 0; i < kFrameDim; ++i)
      for (int j = 0; j < kFrameDim; ++j) M[size_t(i)][size_t(j)] = -P_[size_t(i)][size_t(j)];
    return M;
  }

  /// J e_i as a coordinate vector.
  CVector<R> apply_vector(const CVector<R>& x) const {
    CVector<R> y{};
    for (int i = 0; i < kFrameDim; ++i)
      for (int j = 0; j < kFrameDim; ++j) y[size_t(i)] += C(-P_[size_t(i)][size_t(j)]) * x[size_t(j)];
    return y;
  }

  /// (J a)(X_1..X_k) = (-1)^k a(JX_1..JX_k); equals i^{p-q} on (p,q)-forms.
  Form<R> pullback_j(const Form<R>& a) const {
    std::array<Form<R>, kFrameDim> images;
    for (int i = 0; i < kFrameDim; ++i) {
      Form<R> f(1);
      for (int j = 0; j < kFrameDim; ++j)
        f.add_term(indices_mask({j + 1}), C(-P_[size_t(i)][size_t(j)]));
      images[size_t(i)] = f;
    }
    Form<R> out = pullback(a, images);
    return (a.degree() & 1) ? -out : out;
  }

  /// The chosen (1,0)-basis; j in 1..3 gives w^j, 4..6 the conjugates.
  const Form<R>& omega(int j) const { return coframe_[size_t(j - 1)]; }

  /// Express an e-frame form over the abstract coframe {w^1..w^3, wb^1..wb^3}.
  Form<R> to_coframe_coords(const Form<R>& a) const {
    std::array<Form<R>, kFrameDim> images;
    for (int i = 0; i < kFrameDim; ++i) {
      Form<R> f(1);
      for (int m = 0; m < kFrameDim; ++m)
        f.add_term(indices_mask({m + 1}), to_coframe_[size_t(i)][size_t(m)]);
      images[size_t(i)] = f;
    }
    return pullback(a, images);
  }

  Form<R> from_coframe_coords(const Form<R>& a) const {
    std::array<Form<R>, kFrameDim> images = {coframe_[0], coframe_[1], coframe_[2],
                                             coframe_[3], coframe_[4], coframe_[5]};
    return pullback(a, images);
  }

  /// e-frame form of the abstract coframe monomial with the given mask.
  Form<R> coframe_monomial(Mask m) const {
    Form<R> abstract(mask_degree(m));
    abstract.add_term(m, C(R(1)));
    return from_coframe_coords(abstract);
  }

  std::map<std::pair<int, int>, Form<R>> bidegree_split(const Form<R>& a) const {
    std::map<std::pair<int, int>, Form<R>> buckets;
    Form<R> cc = to_coframe_coords(a);
    for (auto& [m, c] : cc.terms()) {
      auto pq = mask_bidegree(m);
      auto it = buckets.find(pq);
      if (it == buckets.end()) it = buckets.emplace(pq, Form<R>(a.degree())).first;
      Form<R> mono(a.degree());
      mono.add_term(m, c);
      it->second += from_coframe_coords(mono);
    }
    return buckets;
  }

  Form<R> component(const Form<R>& a, int p, int q) const {
    Form<R> cc = to_coframe_coords(a);
    Form<R> keep(a.degree());
    for (auto& [m, c] : cc.terms())
      if (mask_bidegree(m) == std::pair<int, int>{p, q}) keep.add_term(m, c);
    return from_coframe_coords(keep);
  }

  template <class R2>
  ComplexStructure<R2> convert() const {
    std::array<Form<R2>, 3> w = {coframe_[0].template convert<R2>(),
                                 coframe_[1].template convert<R2>(),
                                 coframe_[2].template convert<R2>()};
    return ComplexStructure<R2>::from_coframe(w);
  }

 private:
  ComplexStructure() = default;
  template <class>
  friend class ComplexStructure;

  Mat<R> P_;
  std::array<Form<R>, kFrameDim> coframe_;
  Mat<C> to_coframe_;
};

// ---------------------------------------------------------------------------
// Integrability
// ---------------------------------------------------------------------------

template <class R>
struct IntegrabilityReport {
  bool nijenhuis_ok = true;
  bool dbar_ok = true;  // d(g^{1,0}) has no (0,2) component
  int witness_i = 0, witness_j = 0;
  std::array<R, kFrameDim> nijenhuis_value{};
  Form<R> residue_02{2};
  bool ok() const { return nijenhuis_ok; }
  bool criteria_agree() const { return nijenhuis_ok == dbar_ok; }
};

template <class R>
IntegrabilityReport<R> integrability_check(const LieAlgebra<R>& g,
                                           const ComplexStructure<R>& J) {
  IntegrabilityReport<R> rep;
  Mat<R> M = J.vector_action();
  auto col = [&](int i) {
    std::array<R, kFrameDim> v{};
    for (int r = 0; r < kFrameDim; ++r) v[size_t(r)] = M[size_t(r)][size_t(i - 1)];
    return v;
  };
  auto apply = [&](const std::array<R, kFrameDim>& x) {
    std::array<R, kFrameDim> y{};
    for (int r = 0; r < kFrameDim; ++r)
      for (int c = 0; c < kFrameDim; ++c) y[size_t(r)] += M[size_t(r)][size_t(c)] * x[size_t(c)];
    return y;
  };
  for (int i = 1; i <= kFrameDim && rep.nijenhuis_ok; ++i)
    for (int j = i + 1; j <= kFrameDim && rep.nijenhuis_ok; ++j) {
      std::array<R, kFrameDim> ei{}, ej{};
      ei[size_t(i - 1)] = R(1);
      ej[size_t(j - 1)] = R(1);
      auto t1 = g.bracket(col(i), col(j));
      auto t2 = apply(g.bracket(col(i), ej));
      auto t3 = apply(g.bracket(ei, col(j)));
      auto t4 = g.bracket(i, j);
      std::array<R, kFrameDim> n{};
      bool zero = true;
      for (int r = 0; r < kFrameDim; ++r) {
        n[size_t(r)] = t1[size_t(r)] - t2[size_t(r)] - t3[size_t(r)] - t4[size_t(r)];
        if (!is_zero(n[size_t(r)])) zero = false;
      }
      if (!zero) {
        rep.nijenhuis_ok = false;
        rep.witness_i = i;
        rep.witness_j = j;
        rep.nijenhuis_value = n;
      }
    }
  for (int m = 1; m <= 3; ++m) {
    Form<R> res = J.component(g.d(J.omega(m)), 0, 2);
    if (!res.is_zero()) {
      rep.dbar_ok = false;
      rep.residue_02 = res;
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Dolbeault operators
// ---------------------------------------------------------------------------

template <class R>
struct DolbeaultPair {
  Form<R> del;     // (p+1, q)
  Form<R> delbar;  // (p, q+1)
};

template <class R>
DolbeaultPair<R> dolbeault_split(const LieAlgebra<R>& g, const ComplexStructure<R>& J,
                                 const Form<R>& a, int p, int q) {
  if (!integrability_check(g, J).ok())
    throw PreconditionError("dolbeault_split: J is not integrable");
  if (!(a == J.component(a, p, q)))
    throw PreconditionError("dolbeault_split: form is not of pure bidegree (p,q)");
  Form<R> da = g.d(a);
  DolbeaultPair<R> out{J.component(da, p + 1, q), J.component(da, p, q + 1)};
  if (!(da == out.del + out.delbar))
    throw PreconditionError("dolbeault_split: d leaves (p+1,q)+(p,q+1), J not integrable");
  return out;
}

/// Splits without knowing (p,q) in advance; input must be pure.
template <class R>
DolbeaultPair<R> dolbeault_split(const LieAlgebra<R>& g, const ComplexStructure<R>& J,
                                 const Form<R>& a) {
  Form<R> cc = J.to_coframe_coords(a);
  if (cc.is_zero()) return {Form<R>(a.degree() + 1), Form<R>(a.degree() + 1)};
  auto pq = mask_bidegree(cc.terms().begin()->first);
  for (auto& [m, c] : cc.terms())
    if (mask_bidegree(m) != pq)
      throw PreconditionError("dolbeault_split: form has mixed bidegree");
  return dolbeault_split(g, J, a, pq.first, pq.second);
}

// ---------------------------------------------------------------------------
// J-compatible ascending series and classification
// ---------------------------------------------------------------------------

template <class R>
AscendingSeries<R> j_ascending_series(const LieAlgebra<R>& g, const ComplexStructure<R>& J) {
  Mat<R> M = J.vector_action();
  return ascending_series(g, &M);
}

template <class R>
ComplexType classify_complex_type(const LieAlgebra<R>& g, const ComplexStructure<R>& J) {
  if (!integrability_check(g, J).ok()) return ComplexType::NonIntegrable;
  Mat<R> M = J.vector_action();
  auto col = [&](int i) {
    std::array<R, kFrameDim> v{};
    for (int r = 0; r < kFrameDim; ++r) v[size_t(r)] = M[size_t(r)][size_t(i - 1)];
    return v;
  };
  auto apply = [&](const std::array<R, kFrameDim>& x) {
    std::array<R, kFrameDim> y{};
    for (int r = 0; r < kFrameDim; ++r)
      for (int c = 0; c < kFrameDim; ++c) y[size_t(r)] += M[size_t(r)][size_t(c)] * x[size_t(c)];
    return y;
  };
  bool parallelizable = true, abelian = true;
  for (int i = 1; i <= kFrameDim; ++i)
    for (int j = 1; j <= kFrameDim; ++j) {
      std::array<R, kFrameDim> ei{}, ej{};
      ei[size_t(i - 1)] = R(1);
      ej[size_t(j - 1)] = R(1);
      auto jxy = g.bracket(col(i), ej);
      auto jofxy = apply(g.bracket(i, j));
      auto jxjy = g.bracket(col(i), col(j));
      auto xy = g.bracket(i, j);
      for (int r = 0; r < kFrameDim; ++r) {
        if (!is_zero(jxy[size_t(r)] - jofxy[size_t(r)])) parallelizable = false;
        if (!is_zero(jxjy[size_t(r)] - xy[size_t(r)])) abelian = false;
      }
    }
  if (parallelizable) return ComplexType::Parallelizable;
  if (abelian) return ComplexType::Abelian;
  return j_ascending_series(g, J).nilpotent ? ComplexType::NilpotentNonAbelian
                                            : ComplexType::NonNilpotent;
}

// ---------------------------------------------------------------------------
// Real structures from complex structure equations
// ---------------------------------------------------------------------------

/// Given d w^k as forms over the abstract coframe (generators 1..3 = w^k,
/// 4..6 = conj), realizes the real algebra with w^k = e^{2k-1} + i e^{2k}
/// and the adapted J. Fails if d^2 != 0.
template <class R>
std::pair<LieAlgebra<R>, ComplexStructure<R>> from_complex_equations(
    const std::array<Form<R>, 3>& domega) {
  std::array<Form<R>, kFrameDim> images;
  for (int m = 0; m < 3; ++m) {
    images[size_t(m)] = Form<R>::monomial({2 * m + 1}) +
                        Complex<R>::i() * Form<R>::monomial({2 * m + 2});
    images[size_t(m + 3)] = images[size_t(m)].conjugate();
  }
  LieAlgebra<R> g;
  for (int k = 0; k < 3; ++k) {
    Form<R> dwk = pullback(domega[size_t(k)], images);
    g.d_coframe[size_t(2 * k)] = dwk.real_part();
    g.d_coframe[size_t(2 * k + 1)] = dwk.imag_part();
  }
  auto jac = jacobi_closure_check(g);
  if (!jac.ok)
    throw PreconditionError("complex structure equations violate d^2 = 0 on e" +
                            std::to_string(jac.failing_k));
  return {g, ComplexStructure<R>::adapted()};
}

/// Monomial masks of bidegree (p,q) in the abstract coframe, canonical order.
inline std::vector<Mask> pq_masks(int p, int q) {
  std::vector<Mask> out;
  for (unsigned m = 0; m < 64; ++m) {
    auto pq = mask_bidegree(Mask(m));
    if (pq.first == p && pq.second == q) out.push_back(Mask(m));
  }
  return out;
}

}  // namespace hermlie
