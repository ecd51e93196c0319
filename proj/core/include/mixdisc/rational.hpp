#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mixdisc {

/// Exact rational number in canonical reduced form (gcd(|p|, q) = 1, q >= 1).
///
/// Thin value wrapper around GMP's mpq_class. Every operation returns a
/// canonical value; there is no approximate path.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const mpz_class& numerator, const mpz_class& denominator);

  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" (q > 0, decimal). Non-reduced input is canonicalized.
  /// Throws InputError on malformed text or zero denominator.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when q == 1.
  std::string str() const { return value_.get_str(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  Rational abs() const;
  /// Throws std::domain_error on zero.
  Rational inverse() const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as a Rational.
Rational factorial(int n);

}  // namespace mixdisc
