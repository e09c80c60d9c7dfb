#include "gabor/poly.hpp"

#include <stdexcept>

namespace gabor::poly {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::reversed() const { return Poly(std::vector<Rational>(c_.rbegin(), c_.rend())); }

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> m = c_;
  const Rational lead = c_.back();
  for (Rational& x : m) x /= lead;
  return Poly(std::move(m));
}

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& p, const Poly& q) {
  std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Rational> r(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
  return Poly(std::move(r));
}

DivMod divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {Poly(), num};
  std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int i = num.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / den.leading();
    quo[static_cast<std::size_t>(i - dd)] = factor;
    if (sgn(factor) == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= factor * den.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly p, Poly q) {
  while (!q.is_zero()) {
    Poly r = divmod(p, q).remainder;
    p = std::move(q);
    q = r.monic();
  }
  return p.monic();
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(Poly() - r);
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const Poly& q : chain) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  if (sgn(p(lo)) == 0 || sgn(p(hi)) == 0)
    throw std::domain_error("Sturm count endpoint is a root");
  const std::vector<Poly> chain = sturm_chain(p);
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Poly palindromic_to_trace(const Poly& p) {
  const int deg = p.degree();
  if (deg % 2 != 0) throw std::domain_error("palindromic reduction needs even degree");
  if (!(p == p.reversed())) throw std::domain_error("polynomial is not palindromic");
  const int m = deg / 2;
  // Dickson polynomials: z^k + z^{-k} = V_k(x), V_0 = 2, V_1 = x,
  // V_{k+1} = x V_k - V_{k-1}.
  const Poly x(std::vector<Rational>{Rational(0), Rational(1)});
  Poly prev(std::vector<Rational>{Rational(2)});
  Poly cur = x;
  Poly result(std::vector<Rational>{p.coeffs()[static_cast<std::size_t>(m)]});
  for (int k = 1; k <= m; ++k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(m + k)];
    result = result + Poly(std::vector<Rational>{c}) * cur;
    Poly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return result;
}

}  // namespace gabor::poly
