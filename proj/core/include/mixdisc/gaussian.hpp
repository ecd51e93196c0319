#pragma once

#include <iosfwd>

#include "mixdisc/rational.hpp"

namespace mixdisc {

/// Complex number re + i*im with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  template <std::integral I>
  GaussianRational(I real) : re(real) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm2() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& rhs) {
    if (im.is_zero() && rhs.im.is_zero()) {
      re *= rhs.re;
      return *this;
    }
    Rational r = re * rhs.re - im * rhs.im;
    im = re * rhs.im + im * rhs.re;
    re = std::move(r);
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline Rational conj(const Rational& r) { return r; }

}  // namespace mixdisc
