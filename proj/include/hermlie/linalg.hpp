#pragma once

// Dense exact linear algebra over a field (the real backend or its
// complexification). Everything is small (<= ~30 columns), so plain
// Gauss-Jordan with full normalization is used throughout. On the float
// backend the pivot decisions go through is_zero().

#include <optional>
#include <vector>

#include "hermlie/scalar.hpp"

namespace hermlie {

template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
Mat<F> identity_matrix(int n) {
  auto m = Mat<F>(size_t(n), Vec<F>(size_t(n)));
  for (int i = 0; i < n; ++i) m[size_t(i)][size_t(i)] = F(1);
  return m;
}

template <class F>
Vec<F> mat_apply(const Mat<F>& a, const Vec<F>& x) {
  Vec<F> y(a.size());
  for (size_t r = 0; r < a.size(); ++r) {
    F acc{};
    for (size_t c = 0; c < x.size(); ++c) acc += a[r][c] * x[c];
    y[r] = acc;
  }
  return y;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat<F> out(n, Vec<F>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      F acc{};
      for (size_t l = 0; l < k; ++l) acc += a[i][l] * b[l][j];
      out[i][j] = acc;
    }
  return out;
}

/// In-place reduced row echelon form; returns pivot column per row.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = int(m.size()), cols = int(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int rr = r; rr < rows; ++rr)
      if (!is_zero(m[size_t(rr)][size_t(c)])) { piv = rr; break; }
    if (piv < 0) continue;
    std::swap(m[size_t(piv)], m[size_t(r)]);
    F inv = F(1) / m[size_t(r)][size_t(c)];
    for (int cc = 0; cc < cols; ++cc) m[size_t(r)][size_t(cc)] = inv * m[size_t(r)][size_t(cc)];
    for (int rr = 0; rr < rows; ++rr) {
      if (rr == r || is_zero(m[size_t(rr)][size_t(c)])) continue;
      F f = m[size_t(rr)][size_t(c)];
      for (int cc = 0; cc < cols; ++cc)
        m[size_t(rr)][size_t(cc)] -= f * m[size_t(r)][size_t(cc)];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(size_t(r));  // drop zero rows
  return pivots;
}

template <class F>
int rank(Mat<F> m) {
  return int(rref(m).size());
}

/// Basis of the right null space {x : m x = 0}.
template <class F>
Mat<F> kernel(Mat<F> m) {
  const int cols = m.empty() ? 0 : int(m[0].size());
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(size_t(cols), false);
  for (int c : pivots) is_pivot[size_t(c)] = true;
  Mat<F> basis;
  for (int freec = 0; freec < cols; ++freec) {
    if (is_pivot[size_t(freec)]) continue;
    auto v = Vec<F>(size_t(cols));
    v[size_t(freec)] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[size_t(pivots[r])] = -m[r][size_t(freec)];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b, if consistent.
template <class F>
std::optional<Vec<F>> solve(Mat<F> m, Vec<F> b) {
  const int cols = m.empty() ? 0 : int(m[0].size());
  for (size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
  std::vector<int> pivots = rref(m);
  auto x = Vec<F>(size_t(cols));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // pivot in the RHS column
    x[size_t(pivots[r])] = m[r][size_t(cols)];
  }
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
  const int n = int(a.size());
  Mat<F> m(size_t(n), Vec<F>(size_t(2 * n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[size_t(i)][size_t(j)] = a[size_t(i)][size_t(j)];
    m[size_t(i)][size_t(n + i)] = F(1);
  }
  std::vector<int> pivots = rref(m);
  if (int(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  auto inv = Mat<F>(size_t(n), Vec<F>(size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[size_t(i)][size_t(j)] = m[size_t(i)][size_t(n + j)];
  return inv;
}

/// A subspace kept as a reduced row basis; supports incremental closure loops.
template <class F>
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(int ambient) : ambient_(ambient) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return int(rows_.size()); }
  const Mat<F>& rows() const { return rows_; }

  /// Residual of v after eliminating against the stored basis.
  Vec<F> reduce(Vec<F> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      F f = v[size_t(pivots_[r])];
      if (is_zero(f)) continue;
      for (int c = 0; c < ambient_; ++c) v[size_t(c)] -= f * rows_[r][size_t(c)];
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    Vec<F> res = reduce(v);
    for (auto& x : res)
      if (!is_zero(x)) return false;
    return true;
  }

  bool contains(const RowSpace& other) const {
    for (auto& row : other.rows_)
      if (!contains(row)) return false;
    return true;
  }

  bool equals(const RowSpace& other) const {
    return dim() == other.dim() && contains(other);
  }

  /// Inserts v if independent; returns whether the dimension grew.
  bool insert(Vec<F> v) {
    if (int(v.size()) != ambient_) throw ScalarError("RowSpace: wrong vector length");
    v = reduce(std::move(v));
    int piv = -1;
    for (int c = 0; c < ambient_; ++c)
      if (!is_zero(v[size_t(c)])) { piv = c; break; }
    if (piv < 0) return false;
    F inv = F(1) / v[size_t(piv)];
    for (int c = 0; c < ambient_; ++c) v[size_t(c)] = inv * v[size_t(c)];
    // back-eliminate the new pivot from existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
      F f = rows_[r][size_t(piv)];
      if (is_zero(f)) continue;
      for (int c = 0; c < ambient_; ++c) rows_[r][size_t(c)] -= f * v[size_t(c)];
    }
    // keep rows ordered by pivot column
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + long(pos), std::move(v));
    pivots_.insert(pivots_.begin() + long(pos), piv);
    return true;
  }

 private:
  int ambient_ = 0;
  Mat<F> rows_;
  std::vector<int> pivots_;
};

}  // namespace hermlie
