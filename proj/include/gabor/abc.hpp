#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gabor/scalar.hpp"

namespace gabor {

/// A positive parameter that is either an exact rational or declared
/// irrational by the caller (with an approximate value for comparisons).
class AbcNumber {
 public:
  AbcNumber(Rational q);
  AbcNumber(int v) : AbcNumber(Rational(v)) {}
  static AbcNumber irrational(long double approx);
  /// "p/q" or "irr:<decimal>"; plain decimals need `allow_decimal`.
  static AbcNumber parse(const std::string& text, bool allow_decimal = false);

  bool is_rational() const { return exact_.has_value(); }
  const Rational& rational() const;
  long double approx() const { return approx_; }
  std::string to_string() const;

  friend AbcNumber operator*(const AbcNumber& x, const Rational& r);
  friend bool operator==(const AbcNumber& x, const AbcNumber& y);

 private:
  AbcNumber() = default;
  std::optional<Rational> exact_;
  long double approx_ = 0;
};

struct AbcQuery {
  AbcNumber a;
  Rational b;
  AbcNumber c;

  AbcQuery(AbcNumber a_, Rational b_, AbcNumber c_);
};

/// (a, b, c) -> (ab, 1, bc).
AbcQuery reduce(const AbcQuery& q);

enum class AbcStatus { Frame, NotFrame, Unknown };
enum class AbcRule {
  AB_GT_1,
  C_EQ_1_ONB,
  C_LT_1,
  INTEGER_C,
  JANSSEN_1,
  JANSSEN_2,
  JANSSEN_3,
  JANSSEN_4,
  NONE
};
std::string to_string(AbcStatus s);
std::string to_string(AbcRule r);
AbcStatus abc_status_from_string(const std::string& s);
AbcRule abc_rule_from_string(const std::string& s);

struct AbcVerdict {
  AbcStatus status = AbcStatus::Unknown;
  AbcRule rule = AbcRule::NONE;
  friend bool operator==(const AbcVerdict&, const AbcVerdict&) = default;
};

/// Guard band for comparisons that involve a tagged irrational.
inline constexpr long double kAbcGuard = 1e-9L;

struct RuleMatch {
  AbcRule rule;
  /// Frame or NotFrame when the predicate holds; Unknown when it cannot be
  /// decided outside the guard band.
  AbcStatus status;
};

/// Rules whose predicate holds or is undecided, in catalog order.
std::vector<RuleMatch> matching_rules(const AbcQuery& q);

/// First matching rule; Unknown/NONE when an earlier rule is undecided or
/// nothing matches. Throws std::logic_error when two matches disagree.
AbcVerdict classify(const AbcQuery& q);

struct ChartRow {
  AbcNumber a;
  AbcNumber c;
  AbcVerdict verdict;
};

/// Classifies (a, 1, c) over the grid, rows ordered a-major.
std::vector<ChartRow> chart(const std::vector<AbcNumber>& a_grid,
                            const std::vector<AbcNumber>& c_grid, unsigned jobs = 1);

}  // namespace gabor
