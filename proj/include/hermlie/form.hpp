#pragma once

// Sparse exterior forms over a fixed 6-dimensional frame with complex
// coefficients. Monomials are keyed by index-set bitmasks (bit k-1 <-> frame
// index k); coefficients of stored monomials are never zero. The same type
// serves the real frame {e^1..e^6} and, contextually, the complex coframe
// {w^1,w^2,w^3,conj(w^1),conj(w^2),conj(w^3)}.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "hermlie/scalar.hpp"

namespace hermlie {

inline constexpr int kFrameDim = 6;

using Mask = std::uint8_t;

inline int mask_degree(Mask m) { return std::popcount(unsigned(m)); }

/// Sign of sorting the concatenation of two disjoint ascending index sets.
inline int merge_sign(Mask a, Mask b) {
  int swaps = 0;
  for (int j = 0; j < kFrameDim; ++j)
    if (b & Mask(1u << j)) swaps += std::popcount(unsigned(a) >> (j + 1));
  return (swaps & 1) ? -1 : 1;
}

inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (int j = 0; j < kFrameDim; ++j)
    if (m & Mask(1u << j)) out.push_back(j + 1);
  return out;
}

inline Mask indices_mask(std::initializer_list<int> idx) {
  Mask m = 0;
  for (int i : idx) {
    if (i < 1 || i > kFrameDim) throw ScalarError("frame index out of range 1..6");
    Mask bit = Mask(1u << (i - 1));
    if (m & bit) throw ScalarError("repeated frame index in monomial");
    m |= bit;
  }
  return m;
}

template <class R>
class Form {
 public:
  using C = Complex<R>;
  using CoefMap = std::map<Mask, C>;

  Form() = default;
  explicit Form(int degree) : degree_(degree) {}

  static Form zero(int degree) { return Form(degree); }

  /// c * e^{i1...ik} with strictly the given indices (any order, sign folded in).
  static Form monomial(std::initializer_list<int> idx, C c = C(R(1))) {
    // normalize sign of the given ordering against the ascending canonical one
    Mask m = 0;
    int sign = 1;
    for (int i : idx) {
      if (i < 1 || i > kFrameDim) throw ScalarError("frame index out of range 1..6");
      Mask bit = Mask(1u << (i - 1));
      if (m & bit) return Form(int(idx.size()));
      sign *= merge_sign(m, bit);
      m |= bit;
    }
    Form f(int(idx.size()));
    f.add_term(m, sign < 0 ? -c : c);
    return f;
  }

  static Form one() {
    Form f(0);
    f.add_term(0, C(R(1)));
    return f;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return coef_.empty(); }
  const CoefMap& terms() const { return coef_; }

  C coeff(Mask m) const {
    auto it = coef_.find(m);
    return it == coef_.end() ? C() : it->second;
  }
  C coeff(std::initializer_list<int> idx) const { return coeff(indices_mask(idx)); }

  void add_term(Mask m, const C& c) {
    if (hermlie::is_zero(c)) return;
    if (mask_degree(m) != degree_)
      throw ScalarError("monomial degree does not match form degree");
    auto [it, inserted] = coef_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (hermlie::is_zero(it->second)) coef_.erase(it);
    }
  }

  bool is_real() const {
    for (auto& [m, c] : coef_)
      if (!scalar_traits<R>::is_zero(c.im)) return false;
    return true;
  }

  Form conjugate() const {
    Form out(degree_);
    for (auto& [m, c] : coef_) out.add_term(m, c.conj());
    return out;
  }

  Form real_part() const {
    Form out(degree_);
    for (auto& [m, c] : coef_) out.add_term(m, C(c.re));
    return out;
  }

  Form imag_part() const {
    Form out(degree_);
    for (auto& [m, c] : coef_) out.add_term(m, C(c.im));
    return out;
  }

  Form operator-() const {
    Form out(degree_);
    for (auto& [m, c] : coef_) out.add_term(m, -c);
    return out;
  }

  friend Form operator+(const Form& a, const Form& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_) throw ScalarError("adding forms of different degree");
    Form out = a;
    for (auto& [m, c] : b.coef_) out.add_term(m, c);
    return out;
  }
  friend Form operator-(const Form& a, const Form& b) { return a + (-b); }

  friend Form operator*(const C& s, const Form& a) {
    Form out(a.degree_);
    if (hermlie::is_zero(s)) return out;
    for (auto& [m, c] : a.coef_) out.add_term(m, s * c);
    return out;
  }
  friend Form operator*(const R& s, const Form& a) { return C(s) * a; }
  Form& operator+=(const Form& b) { *this = *this + b; return *this; }
  Form& operator-=(const Form& b) { *this = *this - b; return *this; }

  friend bool operator==(const Form& a, const Form& b) {
    Form d = a.is_zero() || b.is_zero() || a.degree_ == b.degree_
                 ? (a.is_zero() ? b : (b.is_zero() ? a : a - b))
                 : Form(1);
    if (!a.is_zero() && !b.is_zero() && a.degree_ != b.degree_) return false;
    for (auto& [m, c] : d.coef_)
      if (!hermlie::is_zero(c)) return false;
    return true;
  }

  template <class R2>
  Form<R2> convert() const {
    Form<R2> out(degree_);
    for (auto& [m, c] : coef_) out.add_term(m, convert_complex<R2>(c));
    return out;
  }

  std::string str(const std::array<std::string, kFrameDim>& names) const;
  std::string str() const {
    return str({"e1", "e2", "e3", "e4", "e5", "e6"});
  }

 private:
  int degree_ = 0;
  CoefMap coef_;
};

template <class R>
Form<R> wedge(const Form<R>& a, const Form<R>& b) {
  int deg = a.degree() + b.degree();
  Form<R> out(deg);
  if (deg > kFrameDim) return out;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      int s = merge_sign(ma, mb);
      Complex<R> c = ca * cb;
      out.add_term(Mask(ma | mb), s < 0 ? -c : c);
    }
  return out;
}

template <class R>
Form<R> wedge(const Form<R>& a, const Form<R>& b, const Form<R>& c) {
  return wedge(wedge(a, b), c);
}

/// Coordinate vector of a frame vector (or complexified vector).
template <class R>
using CVector = std::array<Complex<R>, kFrameDim>;

template <class R>
CVector<R> basis_vector(int i) {
  CVector<R> v{};
  v[i - 1] = Complex<R>(R(1));
  return v;
}

namespace detail {
// Determinant over the coefficient field by Gaussian elimination (k <= 6).
template <class R>
Complex<R> small_det(std::vector<std::vector<Complex<R>>> m) {
  const int n = int(m.size());
  Complex<R> det(R(1));
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(m[size_t(r)][size_t(col)])) { piv = r; break; }
    if (piv < 0) return Complex<R>();
    if (piv != col) {
      std::swap(m[size_t(piv)], m[size_t(col)]);
      det = -det;
    }
    det *= m[size_t(col)][size_t(col)];
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(m[size_t(r)][size_t(col)])) continue;
      Complex<R> f = m[size_t(r)][size_t(col)] / m[size_t(col)][size_t(col)];
      for (int c2 = col; c2 < n; ++c2)
        m[size_t(r)][size_t(c2)] -= f * m[size_t(col)][size_t(c2)];
    }
  }
  return det;
}
}  // namespace detail

/// Fully antisymmetric multilinear evaluation; evaluate(e^{I}, (e_I)) = 1.
template <class R>
Complex<R> evaluate(const Form<R>& a, const std::vector<CVector<R>>& vectors) {
  if (int(vectors.size()) != a.degree())
    throw ScalarError("evaluate: number of vectors must equal the form degree");
  const int k = a.degree();
  Complex<R> total;
  for (auto& [m, c] : a.terms()) {
    // rows: monomial indices ascending; cols: supplied vectors
    auto idx = mask_indices(m);
    auto mat = std::vector<std::vector<Complex<R>>>(size_t(k), std::vector<Complex<R>>(size_t(k)));
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < k; ++col)
        mat[size_t(r)][size_t(col)] = vectors[size_t(col)][size_t(idx[size_t(r)] - 1)];
    total += c * detail::small_det(std::move(mat));
  }
  return total;
}

template <class R>
Complex<R> evaluate(const Form<R>& a, std::initializer_list<int> frame_indices) {
  std::vector<CVector<R>> vs;
  for (int i : frame_indices) vs.push_back(basis_vector<R>(i));
  return evaluate(a, vs);
}

/// Substitution homomorphism: generator i (1-based) maps to images[i-1].
template <class R>
Form<R> pullback(const Form<R>& a, const std::array<Form<R>, kFrameDim>& images) {
  Form<R> out(a.degree());
  for (auto& [m, c] : a.terms()) {
    Form<R> prod = Form<R>::one();
    for (int j : mask_indices(m)) prod = wedge(prod, images[size_t(j - 1)]);
    out += c * prod;
  }
  return out;
}

/// Conjugation in the complex-coframe reading of the frame: generators 1..3
/// are (1,0), generators 4..6 their conjugates. conj(w^I ^ wb^J) = (-1)^{|I||J|} w^J ^ wb^I.
template <class R>
Form<R> coframe_conjugate(const Form<R>& a) {
  Form<R> out(a.degree());
  for (auto& [m, c] : a.terms()) {
    Mask lo = m & 0x07u, hi = Mask(m & 0x38u);
    int p = mask_degree(lo), q = mask_degree(hi);
    Mask swapped = Mask((lo << 3) | (hi >> 3));
    Complex<R> cc = c.conj();
    if ((p * q) & 1) cc = -cc;
    out.add_term(swapped, cc);
  }
  return out;
}

/// (p,q) content of a monomial in the complex-coframe reading.
inline std::pair<int, int> mask_bidegree(Mask m) {
  return {mask_degree(m & 0x07u), mask_degree(Mask(m & 0x38u))};
}

template <class R>
std::string Form<R>::str(const std::array<std::string, kFrameDim>& names) const {
  if (coef_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : coef_) {
    std::string mono;
    for (int i : mask_indices(m)) {
      if (!mono.empty()) mono += "^";
      mono += names[size_t(i - 1)];
    }
    if (mono.empty()) mono = "1";
    bool neg = scalar_traits<R>::is_zero(c.im) && scalar_traits<R>::is_negative(c.re);
    Complex<R> cc = neg ? -c : c;
    std::string cs = to_string(cc);
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    first = false;
    if (cs == "1" && degree_ > 0) out += mono;
    else out += cs + (degree_ > 0 ? "*" + mono : "");
  }
  return out;
}

}  // namespace hermlie
