#pragma once

#include <vector>

#include "gabor/scalar.hpp"

namespace gabor::poly {

/// Dense univariate polynomial over Q; coeffs[i] multiplies x^i. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  Poly derivative() const;
  /// z^deg p(1/z).
  Poly reversed() const;
  Poly monic() const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& num, const Poly& den);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(Poly p, Poly q);

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<Poly> sturm_chain(const Poly& p);
int sign_changes(const std::vector<Poly>& chain, const Rational& x);
/// Number of distinct real roots in (lo, hi]; neither endpoint may be a root.
int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi);

/// For a palindromic p of even degree 2m, the R with z^{-m} p(z) = R(z + 1/z).
Poly palindromic_to_trace(const Poly& p);

}  // namespace gabor::poly
