#pragma once

// Scalar backends: exact rationals (default) and arbitrary-precision floats.
// All rank/zero decisions on the float backend go through is_zero(), which
// compares against a configurable threshold; arithmetic itself never rounds
// through the threshold.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hermlie {

namespace mp = boost::multiprecision;

using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer  = mp::number<mp::gmp_int, mp::et_off>;
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Zero threshold used for all float-backend rank and verdict decisions.
inline BigFloat& float_epsilon() {
  thread_local BigFloat eps{"1e-25"};
  return eps;
}

/// Significant decimal digits carried by newly created BigFloats.
inline void set_float_precision(unsigned digits10) {
  if (digits10 < 50) digits10 = 50;
  BigFloat::default_precision(digits10);
}

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_negative(const Rational& x) { return x < 0; }
  /// Exact square root; empty unless the argument is a perfect square.
  static std::optional<Rational> sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    Integer num = numerator(x), den = denominator(x);
    Integer rn, rd, rem;
    rn = mp::sqrt(num, rem);
    if (rem != 0) return std::nullopt;
    rd = mp::sqrt(den, rem);
    if (rem != 0) return std::nullopt;
    return Rational(rn, rd);
  }
  static Rational from_rational(const Rational& q) { return q; }
  static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct scalar_traits<BigFloat> {
  static constexpr bool exact = false;
  static bool is_zero(const BigFloat& x) { return abs(x) < float_epsilon(); }
  static bool is_negative(const BigFloat& x) { return x < -float_epsilon(); }
  static std::optional<BigFloat> sqrt(const BigFloat& x) {
    if (x < -float_epsilon()) return std::nullopt;
    if (x < 0) return BigFloat(0);
    return mp::sqrt(x);
  }
  static BigFloat from_rational(const Rational& q) { return BigFloat(q); }
  static std::string str(const BigFloat& x) { return x.str(); }
};

template <class R>
bool is_zero(const R& x) {
  return scalar_traits<R>::is_zero(x);
}

/// Parses "p/q", "p", or (float backend only) decimal literals.
template <class R>
R scalar_from_string(std::string_view s) {
  if constexpr (scalar_traits<R>::exact) {
    try {
      return Rational(std::string(s));
    } catch (const std::exception&) {
      throw ScalarError("invalid rational literal: '" + std::string(s) + "'");
    }
  } else {
    try {
      if (s.find('/') != std::string_view::npos)
        return BigFloat(Rational(std::string(s)));
      return BigFloat(std::string(s));
    } catch (const std::exception&) {
      throw ScalarError("invalid numeric literal: '" + std::string(s) + "'");
    }
  }
}

// ---------------------------------------------------------------------------
// Complex numbers over a scalar backend. std::complex is not specified for
// user-defined types, so we carry our own minimal field implementation.
// ---------------------------------------------------------------------------

template <class R>
struct Complex {
  R re{};
  R im{};

  Complex() = default;
  Complex(R r) : re(std::move(r)) {}
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return Complex(R(0), R(1)); }

  Complex operator-() const { return Complex(-re, -im); }
  Complex conj() const { return Complex(re, -im); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator*(const R& a, const Complex& b) {
    return Complex(a * b.re, a * b.im);
  }
  friend Complex operator*(const Complex& a, const R& b) { return b * a; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    R n = b.re * b.re + b.im * b.im;
    if (scalar_traits<R>::is_zero(n)) throw ScalarError("complex division by zero");
    return Complex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }

  Complex& operator+=(const Complex& b) { *this = *this + b; return *this; }
  Complex& operator-=(const Complex& b) { *this = *this - b; return *this; }
  Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return scalar_traits<R>::is_zero(a.re - b.re) && scalar_traits<R>::is_zero(a.im - b.im);
  }

  R norm2() const { return re * re + im * im; }
};

template <class R>
bool is_zero(const Complex<R>& z) {
  return scalar_traits<R>::is_zero(z.re) && scalar_traits<R>::is_zero(z.im);
}

template <class R>
std::string to_string(const Complex<R>& z) {
  using T = scalar_traits<R>;
  if (T::is_zero(z.im)) return T::str(z.re);
  if (T::is_zero(z.re)) return T::str(z.im) + "*i";
  std::string s = "(" + T::str(z.re);
  s += T::is_negative(z.im) ? "-" : "+";
  R a = T::is_negative(z.im) ? R(-z.im) : z.im;
  s += T::str(a) + "*i)";
  return s;
}

/// Backend conversion (exact -> float, or identity).
template <class R2, class R1>
R2 convert_scalar(const R1& x) {
  if constexpr (std::is_same_v<R1, R2>) {
    return x;
  } else {
    static_assert(std::is_same_v<R1, Rational> && std::is_same_v<R2, BigFloat>,
                  "only exact-to-float conversion is supported");
    return BigFloat(x);
  }
}

template <class R2, class R1>
Complex<R2> convert_complex(const Complex<R1>& z) {
  return Complex<R2>(convert_scalar<R2>(z.re), convert_scalar<R2>(z.im));
}

}  // namespace hermlie
