#include "gabor/abc.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gabor/parallel.hpp"

namespace gabor {

AbcNumber::AbcNumber(Rational q) : exact_(std::move(q)) {
  if (sgn(*exact_) <= 0) throw InputError("a, b, c must be positive");
  approx_ = to_long_double(*exact_);
}

AbcNumber AbcNumber::irrational(long double approx) {
  if (!(approx > 0) || !std::isfinite(approx))
    throw InputError("irrational parameters must be positive and finite");
  AbcNumber x;
  x.approx_ = approx;
  return x;
}

AbcNumber AbcNumber::parse(const std::string& text, bool allow_decimal) {
  constexpr std::string_view tag = "irr:";
  if (text.rfind(tag, 0) == 0) {
    const std::string body = text.substr(tag.size());
    std::size_t used = 0;
    long double v = 0;
    try {
      v = std::stold(body, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != body.size())
      throw InputError("malformed irrational tag '" + text + "'");
    return irrational(v);
  }
  return AbcNumber(parse_rational(text, allow_decimal));
}

const Rational& AbcNumber::rational() const {
  if (!exact_) throw std::logic_error("AbcNumber is irrational");
  return *exact_;
}

std::string AbcNumber::to_string() const {
  if (exact_) return gabor::to_string(*exact_);
  char buf[64];
  std::snprintf(buf, sizeof buf, "irr:%.17Lg", approx_);
  return buf;
}

AbcNumber operator*(const AbcNumber& x, const Rational& r) {
  if (x.exact_) return AbcNumber(*x.exact_ * r);
  return AbcNumber::irrational(x.approx_ * to_long_double(r));
}

bool operator==(const AbcNumber& x, const AbcNumber& y) {
  if (x.exact_ && y.exact_) return *x.exact_ == *y.exact_;
  return !x.exact_ && !y.exact_ && x.approx_ == y.approx_;
}

AbcQuery::AbcQuery(AbcNumber a_, Rational b_, AbcNumber c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (sgn(b) <= 0) throw InputError("a, b, c must be positive");
}

AbcQuery reduce(const AbcQuery& q) { return AbcQuery(q.a * q.b, Rational(1), q.c * q.b); }

std::string to_string(AbcStatus s) {
  switch (s) {
    case AbcStatus::Frame: return "Frame";
    case AbcStatus::NotFrame: return "NotFrame";
    case AbcStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {
constexpr std::pair<AbcRule, const char*> kRuleNames[] = {
    {AbcRule::AB_GT_1, "AB_GT_1"},     {AbcRule::C_EQ_1_ONB, "C_EQ_1_ONB"},
    {AbcRule::C_LT_1, "C_LT_1"},       {AbcRule::INTEGER_C, "INTEGER_C"},
    {AbcRule::JANSSEN_1, "JANSSEN_1"}, {AbcRule::JANSSEN_2, "JANSSEN_2"},
    {AbcRule::JANSSEN_3, "JANSSEN_3"}, {AbcRule::JANSSEN_4, "JANSSEN_4"},
    {AbcRule::NONE, "NONE"}};
}  // namespace

std::string to_string(AbcRule r) {
  for (auto [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "NONE";
}

AbcStatus abc_status_from_string(const std::string& s) {
  for (AbcStatus st : {AbcStatus::Frame, AbcStatus::NotFrame, AbcStatus::Unknown})
    if (to_string(st) == s) return st;
  throw InputError("unknown abc status '" + s + "'");
}

AbcRule abc_rule_from_string(const std::string& s) {
  for (auto [rule, name] : kRuleNames)
    if (s == name) return rule;
  throw InputError("unknown abc rule '" + s + "'");
}

namespace {

enum class Tri { False, True, Undecided };

Tri tri(bool b) { return b ? Tri::True : Tri::False; }

Tri operator&&(Tri x, Tri y) {
  if (x == Tri::False || y == Tri::False) return Tri::False;
  if (x == Tri::Undecided || y == Tri::Undecided) return Tri::Undecided;
  return Tri::True;
}

// A real quantity built from the query; exact while every input is rational.
struct Num {
  std::optional<Rational> q;
  long double v = 0;

  Num(const AbcNumber& x) : v(x.approx()) {
    if (x.is_rational()) q = x.rational();
  }
  Num(Rational r) : q(std::move(r)), v(to_long_double(*q)) {}
  Num(int r) : Num(Rational(r)) {}
  Num(long double x) : v(x) {}

  friend Num operator+(const Num& x, const Num& y) {
    if (x.q && y.q) return Num(*x.q + *y.q);
    return Num(x.v + y.v);
  }
  friend Num operator-(const Num& x, const Num& y) {
    if (x.q && y.q) return Num(Rational(*x.q - *y.q));
    return Num(x.v - y.v);
  }
  friend Num operator*(const Num& x, const Num& y) {
    if (x.q && y.q) return Num(Rational(*x.q * *y.q));
    return Num(x.v * y.v);
  }
};

Num abs(const Num& x) {
  if (x.q) return Num(Rational(::abs(*x.q)));
  return Num(std::fabs(x.v));
}

// sign(x - y), or nothing inside the guard band.
std::optional<int> cmp(const Num& x, const Num& y) {
  if (x.q && y.q) return sgn(*x.q - *y.q);
  const long double d = x.v - y.v;
  if (std::fabs(d) <= kAbcGuard) return std::nullopt;
  return d < 0 ? -1 : 1;
}

Tri lt(const Num& x, const Num& y) {
  auto c = cmp(x, y);
  return c ? tri(*c < 0) : Tri::Undecided;
}
Tri gt(const Num& x, const Num& y) { return lt(y, x); }

// An irrational tag never equals a rational value.
Tri eq(const AbcNumber& x, const Num& y) {
  if (x.is_rational() != y.q.has_value()) return Tri::False;
  auto c = cmp(Num(x), y);
  return c ? tri(*c == 0) : Tri::Undecided;
}

// floor(x), or nothing when an irrational lies within the band of an integer.
std::optional<Num> floor_of(const Num& x) {
  if (x.q) return Num(Rational(floor_to_int(*x.q)));
  const long double f = std::floor(x.v);
  if (x.v - f <= kAbcGuard || f + 1 - x.v <= kAbcGuard) return std::nullopt;
  return Num(Rational(static_cast<long>(f)));
}

Tri janssen3(const AbcNumber& a, const AbcNumber& c) {
  // c = L - 1 + L(1 - a) = L(2 - a) - 1 for an integer L >= 3.
  if (a.is_rational() != c.is_rational()) return Tri::False;
  if (a.approx() >= 1) return Tri::False;
  if (a.is_rational()) {
    const Rational l = (c.rational() + 1) / (Rational(2) - a.rational());
    return tri(is_integer(l) && l >= 3);
  }
  const long double l = std::round((c.approx() + 1) / (2 - a.approx()));
  if (l < 3) return Tri::False;
  return std::fabs(l * (2 - a.approx()) - 1 - c.approx()) <= kAbcGuard ? Tri::Undecided
                                                                      : Tri::False;
}

}  // namespace

std::vector<RuleMatch> matching_rules(const AbcQuery& query) {
  const AbcQuery q = reduce(query);
  const Num a(q.a), c(q.c);
  const Num one(1), two(2);
  std::vector<RuleMatch> out;
  auto record = [&](AbcRule rule, Tri pred, AbcStatus status) {
    if (pred == Tri::True) out.push_back({rule, status});
    if (pred == Tri::Undecided) out.push_back({rule, AbcStatus::Unknown});
  };

  record(AbcRule::AB_GT_1, gt(a, one), AbcStatus::NotFrame);
  record(AbcRule::C_EQ_1_ONB, eq(q.c, one) && eq(q.a, one), AbcStatus::Frame);

  const Tri c_lt_1 = lt(c, one);
  if (c_lt_1 != Tri::False) {
    const Tri a_le_c = [&] {
      auto r = cmp(a, c);
      return r ? tri(*r <= 0) : Tri::Undecided;
    }();
    if (c_lt_1 == Tri::Undecided || a_le_c == Tri::Undecided)
      out.push_back({AbcRule::C_LT_1, AbcStatus::Unknown});
    else
      out.push_back({AbcRule::C_LT_1, a_le_c == Tri::True ? AbcStatus::Frame : AbcStatus::NotFrame});
  }

  record(AbcRule::INTEGER_C, tri(q.c.is_rational() && is_integer(q.c.rational()) && q.c.rational() >= 2),
         AbcStatus::NotFrame);

  // Janssen's rules assume a < 1 < c.
  const Tri standing = lt(a, one) && gt(c, one);
  record(AbcRule::JANSSEN_1, tri(!q.a.is_rational()) && standing && lt(c, two), AbcStatus::Frame);
  if (q.a.is_rational()) {
    const Num lower(Rational(2) - Rational(1) / Rational(q.a.rational().get_den()));
    record(AbcRule::JANSSEN_2, standing && gt(c, lower) && lt(c, two), AbcStatus::NotFrame);
  }
  record(AbcRule::JANSSEN_3, standing && gt(a, Num(Rational(3, 4))) && janssen3(q.a, q.c),
         AbcStatus::NotFrame);
  if (auto d = floor_of(c)) {
    const Num half(Rational(1, 2));
    record(AbcRule::JANSSEN_4, standing && lt(abs(c - *d - half), half - a), AbcStatus::Frame);
  } else if (standing != Tri::False) {
    out.push_back({AbcRule::JANSSEN_4, AbcStatus::Unknown});
  }
  return out;
}

AbcVerdict classify(const AbcQuery& q) {
  const std::vector<RuleMatch> matches = matching_rules(q);
  std::optional<AbcStatus> decided;
  for (const RuleMatch& m : matches) {
    if (m.status == AbcStatus::Unknown) continue;
    if (decided && *decided != m.status)
      throw std::logic_error("conflicting abc rules at a=" + q.a.to_string() +
                             ", c=" + q.c.to_string());
    decided = m.status;
  }
  if (matches.empty() || matches.front().status == AbcStatus::Unknown) return {};
  return {matches.front().status, matches.front().rule};
}

std::vector<ChartRow> chart(const std::vector<AbcNumber>& a_grid,
                            const std::vector<AbcNumber>& c_grid, unsigned jobs) {
  std::vector<ChartRow> rows;
  rows.reserve(a_grid.size() * c_grid.size());
  for (const AbcNumber& a : a_grid)
    for (const AbcNumber& c : c_grid) rows.push_back({a, c, {}});
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    rows[i].verdict = classify(AbcQuery(rows[i].a, Rational(1), rows[i].c));
  });
  return rows;
}

}  // namespace gabor
