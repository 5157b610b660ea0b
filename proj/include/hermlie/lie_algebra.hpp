#pragma once

// Six-dimensional Lie algebras given by structure constants c^k_{ij}, stored
// as the 2-forms de^k. Conventions:
//   de^k = sum_{i<j} c^k_{ij} e^{ij},   de^k(e_i,e_j) = -e^k([e_i,e_j]),
// hence [e_i,e_j] = -sum_k c^k_{ij} e_k.

#include <array>
#include <string>
#include <vector>

#include "hermlie/form.hpp"
#include "hermlie/linalg.hpp"

namespace hermlie {

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
struct LieAlgebra {
  std::array<Form<R>, kFrameDim> d_coframe;  // real 2-forms de^1..de^6

  LieAlgebra() {
    for (auto& f : d_coframe) f = Form<R>(2);
  }

  static LieAlgebra abelian() { return LieAlgebra(); }

  /// c^k_{ij}, antisymmetric in (i,j).
  R structure_constant(int k, int i, int j) const {
    if (i == j) return R(0);
    Complex<R> c = i < j ? d_coframe[size_t(k - 1)].coeff(indices_mask({i, j}))
                         : -d_coframe[size_t(k - 1)].coeff(indices_mask({j, i}));
    return c.re;
  }

  /// [e_i, e_j] as a real coordinate vector.
  std::array<R, kFrameDim> bracket(int i, int j) const {
    std::array<R, kFrameDim> v{};
    for (int k = 1; k <= kFrameDim; ++k) v[size_t(k - 1)] = -structure_constant(k, i, j);
    return v;
  }

  /// Bracket of two arbitrary vectors.
  std::array<R, kFrameDim> bracket(const std::array<R, kFrameDim>& x,
                                   const std::array<R, kFrameDim>& y) const {
    std::array<R, kFrameDim> v{};
    for (int i = 1; i <= kFrameDim; ++i)
      for (int j = 1; j <= kFrameDim; ++j) {
        if (is_zero(x[size_t(i - 1)]) || is_zero(y[size_t(j - 1)])) continue;
        R f = x[size_t(i - 1)] * y[size_t(j - 1)];
        for (int k = 1; k <= kFrameDim; ++k)
          v[size_t(k - 1)] += f * (-structure_constant(k, i, j));
      }
    return v;
  }

  /// Chevalley-Eilenberg differential, extended by the graded Leibniz rule.
  Form<R> d(const Form<R>& a) const {
    Form<R> out(a.degree() + 1);
    if (a.degree() >= kFrameDim) return out;
    for (auto& [m, c] : a.terms()) {
      int sign = 1;
      auto idx = mask_indices(m);
      for (size_t r = 0; r < idx.size(); ++r) {
        Mask rest = Mask(m & ~Mask(1u << (idx[r] - 1)));
        Form<R> restf(int(idx.size()) - 1);
        restf.add_term(rest, Complex<R>(R(1)));
        Form<R> piece = wedge(d_coframe[size_t(idx[r] - 1)], restf);
        // de^{i_r} slides to the front of the monomial: sign (-1)^{r}
        out += (sign > 0 ? c : -c) * piece;
        sign = -sign;
      }
    }
    return out;
  }

  template <class R2>
  LieAlgebra<R2> convert() const {
    LieAlgebra<R2> out;
    for (int k = 0; k < kFrameDim; ++k)
      out.d_coframe[size_t(k)] = d_coframe[size_t(k)].template convert<R2>();
    return out;
  }
};

template <class R>
struct JacobiReport {
  bool ok = true;
  int failing_k = 0;      // 1-based generator index when !ok
  Form<R> witness{3};     // nonzero d(de^k)
};

/// d^2 = 0 on all generators (equivalent to the Jacobi identity).
template <class R>
JacobiReport<R> jacobi_closure_check(const LieAlgebra<R>& g) {
  for (int k = 1; k <= kFrameDim; ++k) {
    Form<R> dd = g.d(g.d_coframe[size_t(k - 1)]);
    if (!dd.is_zero()) return {false, k, dd};
  }
  return {};
}

template <class R>
struct AscendingSeries {
  std::vector<RowSpace<R>> terms;  // g_1, g_2, ... up to stabilization
  bool nilpotent = false;
  int steps = 0;  // number of terms until g_l = g (when nilpotent)
};

namespace detail {

// {X : [X, e_m] in V for all m, and (with J) [JX, e_m] in V}.
template <class R>
RowSpace<R> series_step(const LieAlgebra<R>& g, const RowSpace<R>& prev,
                        const Mat<R>* j_vector_action) {
  // Linear conditions on X: residues of [X, e_m] (and [JX, e_m]) modulo prev.
  Mat<R> cond;
  for (int m = 1; m <= kFrameDim; ++m) {
    // rows of the map X -> [X, e_m] reduced mod prev, one condition per coord
    Mat<R> map(kFrameDim, Vec<R>(kFrameDim));  // map[c][i] = coord c of [e_i, e_m]
    for (int i = 1; i <= kFrameDim; ++i) {
      auto br = g.bracket(i, m);
      Vec<R> brv(br.begin(), br.end());
      Vec<R> red = prev.reduce(brv);
      for (int c = 0; c < kFrameDim; ++c) map[size_t(c)][size_t(i - 1)] = red[size_t(c)];
    }
    for (auto& row : map) cond.push_back(row);
    if (j_vector_action) {
      // conditions on JX: compose with the J action (columns transform)
      Mat<R> mapj(kFrameDim, Vec<R>(kFrameDim));
      for (int i = 1; i <= kFrameDim; ++i) {
        // JX column for X = e_i is column i of the vector action
        std::array<R, kFrameDim> jei{};
        for (int r = 0; r < kFrameDim; ++r) jei[size_t(r)] = (*j_vector_action)[size_t(r)][size_t(i - 1)];
        auto br = g.bracket(jei, [&] {
          std::array<R, kFrameDim> em{};
          em[size_t(m - 1)] = R(1);
          return em;
        }());
        Vec<R> brv(br.begin(), br.end());
        Vec<R> red = prev.reduce(brv);
        for (int c = 0; c < kFrameDim; ++c) mapj[size_t(c)][size_t(i - 1)] = red[size_t(c)];
      }
      for (auto& row : mapj) cond.push_back(row);
    }
  }
  Mat<R> ker = kernel(cond);
  RowSpace<R> out(kFrameDim);
  for (auto& v : ker) out.insert(v);
  return out;
}

}  // namespace detail

/// Usual ascending central series; j_vector_action = nullptr. With a J action
/// supplied it computes the J-compatible series {g_l^J}.
template <class R>
AscendingSeries<R> ascending_series(const LieAlgebra<R>& g,
                                    const Mat<R>* j_vector_action = nullptr) {
  AscendingSeries<R> out;
  RowSpace<R> prev(kFrameDim);
  for (int l = 1; l <= kFrameDim + 1; ++l) {
    RowSpace<R> next = detail::series_step(g, prev, j_vector_action);
    if (next.dim() == kFrameDim) {
      out.terms.push_back(next);
      out.nilpotent = true;
      out.steps = l;
      return out;
    }
    if (next.dim() == prev.dim()) {  // stabilized at a proper subspace
      out.terms.push_back(next);
      return out;
    }
    out.terms.push_back(next);
    prev = next;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named presets.
// ---------------------------------------------------------------------------

namespace detail {
template <class R>
Form<R> two_form(std::initializer_list<std::pair<std::pair<int, int>, int>> terms) {
  Form<R> f(2);
  for (auto& [ij, c] : terms)
    f += R(c) * Form<R>::monomial({ij.first, ij.second});
  return f;
}
}  // namespace detail

enum class Preset { h2, h3, h4, h5, h6, h8, h19minus, solvable_su3 };

inline const char* preset_name(Preset p) {
  switch (p) {
    case Preset::h2: return "h2";
    case Preset::h3: return "h3";
    case Preset::h4: return "h4";
    case Preset::h5: return "h5";
    case Preset::h6: return "h6";
    case Preset::h8: return "h8";
    case Preset::h19minus: return "h19-";
    case Preset::solvable_su3: return "solvable";
  }
  return "?";
}

template <class R>
LieAlgebra<R> preset_algebra(Preset p) {
  using detail::two_form;
  LieAlgebra<R> g;
  switch (p) {
    case Preset::h2:  // (0,0,0,0,12,34)
      g.d_coframe[4] = two_form<R>({{{1, 2}, 1}});
      g.d_coframe[5] = two_form<R>({{{3, 4}, 1}});
      break;
    case Preset::h3:  // (0,0,0,0,0,12+34)
      g.d_coframe[5] = two_form<R>({{{1, 2}, 1}, {{3, 4}, 1}});
      break;
    case Preset::h4:  // (0,0,0,0,12,14+23)
      g.d_coframe[4] = two_form<R>({{{1, 2}, 1}});
      g.d_coframe[5] = two_form<R>({{{1, 4}, 1}, {{2, 3}, 1}});
      break;
    case Preset::h5:  // (0,0,0,0,13+42,14+23)
      g.d_coframe[4] = two_form<R>({{{1, 3}, 1}, {{2, 4}, -1}});
      g.d_coframe[5] = two_form<R>({{{1, 4}, 1}, {{2, 3}, 1}});
      break;
    case Preset::h6:  // (0,0,0,0,12,13)
      g.d_coframe[4] = two_form<R>({{{1, 2}, 1}});
      g.d_coframe[5] = two_form<R>({{{1, 3}, 1}});
      break;
    case Preset::h8:  // (0,0,0,0,0,12)
      g.d_coframe[5] = two_form<R>({{{1, 2}, 1}});
      break;
    case Preset::h19minus:  // (0,0,0,12,23,14-35)
      g.d_coframe[3] = two_form<R>({{{1, 2}, 1}});
      g.d_coframe[4] = two_form<R>({{{2, 3}, 1}});
      g.d_coframe[5] = two_form<R>({{{1, 4}, 1}, {{3, 5}, -1}});
      break;
    case Preset::solvable_su3:
      // de^3 = -e^13 - e^24, de^4 = -e^14 + e^23,
      // de^5 =  e^15 + e^26, de^6 =  e^16 - e^25
      g.d_coframe[2] = two_form<R>({{{1, 3}, -1}, {{2, 4}, -1}});
      g.d_coframe[3] = two_form<R>({{{1, 4}, -1}, {{2, 3}, 1}});
      g.d_coframe[4] = two_form<R>({{{1, 5}, 1}, {{2, 6}, 1}});
      g.d_coframe[5] = two_form<R>({{{1, 6}, 1}, {{2, 5}, -1}});
      break;
  }
  return g;
}

inline const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> v = {Preset::h2, Preset::h3, Preset::h4,
                                        Preset::h5, Preset::h6, Preset::h8,
                                        Preset::h19minus, Preset::solvable_su3};
  return v;
}

}  // namespace hermlie
