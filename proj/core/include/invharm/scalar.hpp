#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace invharm {

/// Exact arbitrary-precision rational, the real coefficient type.
using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational re + im*i, the coefficient field for all linear algebra.
///
/// Every operation is exact; there is no rounding anywhere in the library.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(int v) : re(v) {}                       // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : re(std::move(r)) {}       // NOLINT(google-explicit-constructor)
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar{Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar{re, -im}; }

  /// re^2 + im^2, the (rational) squared modulus.
  Rational norm() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar{-re, -im}; }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// Multiplicative inverse; throws std::domain_error on zero.
Scalar inverse(const Scalar& s);

std::string to_string(const Rational& r);

/// Human-readable form: "0", "1", "-3/2", "i", "1/2-2*i", ...
std::string to_string(const Scalar& s);

}  // namespace invharm
