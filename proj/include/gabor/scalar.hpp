#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace gabor {

using Rational = mpq_class;
using Approx = std::complex<long double>;

/// Rejected user input (malformed literals, violated preconditions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was asked to run outside the regime its rule covers.
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Rational helpers.

/// Parses "p", "-p", "p/q". Decimal literals ("1.95") only when
/// `allow_decimal` is set; they are converted exactly.
Rational parse_rational(std::string_view text, bool allow_decimal = false);
std::string to_string(const Rational& q);
long double to_long_double(const Rational& q);
/// Exact binary value of a finite double.
Rational from_double(double x);
std::int64_t floor_to_int(const Rational& q);
std::int64_t ceil_to_int(const Rational& q);
bool is_integer(const Rational& q);
std::int64_t to_int(const Rational& q);

/// Global tolerance for approx-mode equality; default 1e-12.
double approx_tolerance();
void set_approx_tolerance(double eps);

/// Complex scalar, either exactly rational or a long double approximation.
/// Exact arithmetic never rounds; mixing modes yields approx.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : value_(Exact{Rational(v), Rational(0)}) {}
  Scalar(long v) : value_(Exact{Rational(v), Rational(0)}) {}
  Scalar(Rational re) : value_(Exact{std::move(re), Rational(0)}) {}
  Scalar(Rational re, Rational im)
      : value_(Exact{std::move(re), std::move(im)}) {}

  static Scalar approx(Approx z) { return Scalar(z); }
  static Scalar approx(long double re, long double im = 0) {
    return Scalar(Approx(re, im));
  }

  bool is_exact() const { return std::holds_alternative<Exact>(value_); }
  bool is_real() const;
  bool is_zero() const;

  /// Exact components; throw if approx.
  const Rational& re() const;
  const Rational& im() const;
  Approx to_complex() const;
  long double real_value() const { return to_complex().real(); }

  Scalar conj() const;
  Scalar abs() const;     // exact when the modulus is rational
  Scalar abs_sq() const;  // always exact in exact mode

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  /// Exact equality in exact mode; within approx_tolerance() otherwise.
  friend bool operator==(const Scalar& x, const Scalar& y);

  /// Total order on real scalars (imaginary parts must vanish).
  /// Approx comparisons treat values within tolerance as equal.
  friend int compare(const Scalar& x, const Scalar& y);
  friend bool operator<(const Scalar& x, const Scalar& y) { return compare(x, y) < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return compare(x, y) > 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return compare(x, y) >= 0; }

  std::string to_string() const;

 private:
  struct Exact {
    Rational re, im;
  };
  explicit Scalar(Approx z) : value_(z) {}

  std::variant<Exact, Approx> value_{Exact{}};
};

/// Square root of a nonnegative real scalar; exact for rational squares.
Scalar sqrt(const Scalar& x);
Scalar max(const Scalar& x, const Scalar& y);
Scalar min(const Scalar& x, const Scalar& y);

}  // namespace gabor
