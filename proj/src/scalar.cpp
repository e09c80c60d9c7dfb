#include "gabor/scalar.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace gabor {

namespace {

std::atomic<double> g_tolerance{1e-12};

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Exact square root of a nonnegative rational, if one exists.
bool exact_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text, bool allow_decimal) {
  std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty rational literal");
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InputError("malformed rational literal '" + std::string(s) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
    result = Rational(n, d);
    result.canonicalize();
  } else if (all_digits(body)) {
    result = Rational(mpz_class(std::string(body), 10));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    if (!allow_decimal)
      throw InputError("decimal literal '" + std::string(s) +
                       "' needs --approx; write rationals as p/q");
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty()))
      throw InputError("malformed decimal literal '" + std::string(s) + "'");
    mpz_class n(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
    result = Rational(n, d);
    result.canonicalize();
  } else {
    throw InputError("malformed rational literal '" + std::string(s) + "'");
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long double to_long_double(const Rational& q) {
  // mpq_get_d truncates to double; split to keep extra bits for long double.
  const double hi = q.get_d();
  const Rational rest = q - Rational(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite floating literal");
  Rational q(x);
  q.canonicalize();
  return q;
}

std::int64_t floor_to_int(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("integer part out of range");
  return f.get_si();
}

std::int64_t ceil_to_int(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!c.fits_slong_p()) throw std::overflow_error("integer part out of range");
  return c.get_si();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + q.get_str());
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
  return q.get_num().get_si();
}

double approx_tolerance() { return g_tolerance.load(std::memory_order_relaxed); }
void set_approx_tolerance(double eps) {
  if (!(eps > 0)) throw InputError("tolerance must be positive");
  g_tolerance.store(eps, std::memory_order_relaxed);
}

bool Scalar::is_real() const {
  if (auto* e = std::get_if<Exact>(&value_)) return sgn(e->im) == 0;
  return std::fabs(std::get<Approx>(value_).imag()) <= approx_tolerance();
}

bool Scalar::is_zero() const {
  if (auto* e = std::get_if<Exact>(&value_)) return sgn(e->re) == 0 && sgn(e->im) == 0;
  return std::abs(std::get<Approx>(value_)) <= approx_tolerance();
}

const Rational& Scalar::re() const {
  if (auto* e = std::get_if<Exact>(&value_)) return e->re;
  throw std::logic_error("exact component requested from approx scalar");
}

const Rational& Scalar::im() const {
  if (auto* e = std::get_if<Exact>(&value_)) return e->im;
  throw std::logic_error("exact component requested from approx scalar");
}

Approx Scalar::to_complex() const {
  if (auto* e = std::get_if<Exact>(&value_))
    return {to_long_double(e->re), to_long_double(e->im)};
  return std::get<Approx>(value_);
}

Scalar Scalar::conj() const {
  if (auto* e = std::get_if<Exact>(&value_)) return Scalar(e->re, -e->im);
  return Scalar(std::conj(std::get<Approx>(value_)));
}

Scalar Scalar::abs_sq() const {
  if (auto* e = std::get_if<Exact>(&value_)) return Scalar(e->re * e->re + e->im * e->im);
  return Scalar(Approx(std::norm(std::get<Approx>(value_)), 0));
}

Scalar Scalar::abs() const {
  if (auto* e = std::get_if<Exact>(&value_)) {
    if (sgn(e->im) == 0) return Scalar(Rational(::abs(e->re)));
    if (sgn(e->re) == 0) return Scalar(Rational(::abs(e->im)));
    return sqrt(abs_sq());
  }
  return Scalar(Approx(std::abs(std::get<Approx>(value_)), 0));
}

Scalar Scalar::operator-() const {
  if (auto* e = std::get_if<Exact>(&value_)) return Scalar(-e->re, -e->im);
  return Scalar(-std::get<Approx>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  auto* a = std::get_if<Exact>(&value_);
  auto* b = std::get_if<Exact>(&o.value_);
  if (a && b) {
    a->re += b->re;
    a->im += b->im;
  } else {
    value_ = to_complex() + o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  auto* a = std::get_if<Exact>(&value_);
  auto* b = std::get_if<Exact>(&o.value_);
  if (a && b) {
    a->re -= b->re;
    a->im -= b->im;
  } else {
    value_ = to_complex() - o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  auto* a = std::get_if<Exact>(&value_);
  auto* b = std::get_if<Exact>(&o.value_);
  if (a && b) {
    if (sgn(a->im) == 0 && sgn(b->im) == 0) {
      a->re *= b->re;
    } else {
      Rational re = a->re * b->re - a->im * b->im;
      Rational im = a->re * b->im + a->im * b->re;
      a->re = std::move(re);
      a->im = std::move(im);
    }
  } else {
    value_ = to_complex() * o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_exact() && o.is_zero()) throw std::domain_error("division by zero");
  auto* a = std::get_if<Exact>(&value_);
  auto* b = std::get_if<Exact>(&o.value_);
  if (a && b) {
    if (sgn(b->im) == 0) {
      a->re /= b->re;
      a->im /= b->re;
    } else {
      Rational den = b->re * b->re + b->im * b->im;
      Rational re = (a->re * b->re + a->im * b->im) / den;
      Rational im = (a->im * b->re - a->re * b->im) / den;
      a->re = std::move(re);
      a->im = std::move(im);
    }
  } else {
    value_ = to_complex() / o.to_complex();
  }
  return *this;
}

bool operator==(const Scalar& x, const Scalar& y) {
  auto* a = std::get_if<Scalar::Exact>(&x.value_);
  auto* b = std::get_if<Scalar::Exact>(&y.value_);
  if (a && b) return a->re == b->re && a->im == b->im;
  return std::abs(x.to_complex() - y.to_complex()) <= approx_tolerance();
}

int compare(const Scalar& x, const Scalar& y) {
  if (!x.is_real() || !y.is_real())
    throw std::domain_error("ordering requested on complex scalar");
  auto* a = std::get_if<Scalar::Exact>(&x.value_);
  auto* b = std::get_if<Scalar::Exact>(&y.value_);
  if (a && b) return cmp(a->re, b->re) < 0 ? -1 : (cmp(a->re, b->re) > 0 ? 1 : 0);
  const long double d = x.real_value() - y.real_value();
  if (std::fabs(d) <= approx_tolerance()) return 0;
  return d < 0 ? -1 : 1;
}

std::string Scalar::to_string() const {
  if (auto* e = std::get_if<Exact>(&value_)) {
    if (sgn(e->im) == 0) return e->re.get_str();
    return e->re.get_str() + (sgn(e->im) < 0 ? "-" : "+") +
           Rational(::abs(e->im)).get_str() + "i";
  }
  const Approx z = std::get<Approx>(value_);
  char buf[96];
  if (z.imag() == 0)
    std::snprintf(buf, sizeof buf, "%.21Lg", z.real());
  else
    std::snprintf(buf, sizeof buf, "%.21Lg%+.21Lgi", z.real(), z.imag());
  return buf;
}

Scalar sqrt(const Scalar& x) {
  if (!x.is_real()) throw std::domain_error("sqrt of complex scalar");
  if (x.is_exact()) {
    if (sgn(x.re()) < 0) throw std::domain_error("sqrt of negative scalar");
    Rational r;
    if (exact_sqrt(x.re(), r)) return Scalar(r);
  }
  const long double v = x.real_value();
  if (v < -approx_tolerance()) throw std::domain_error("sqrt of negative scalar");
  return Scalar::approx(std::sqrt(std::max(v, 0.0L)));
}

Scalar max(const Scalar& x, const Scalar& y) { return compare(x, y) >= 0 ? x : y; }
Scalar min(const Scalar& x, const Scalar& y) { return compare(x, y) <= 0 ? x : y; }

}  // namespace gabor
