#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gabor/scalar.hpp"

namespace gabor {

/// Half-open piece [lo, hi) carrying a constant value.
struct Piece {
  Rational lo;
  Rational hi;
  Scalar value;
};

/// Compactly supported piecewise-constant function with rational breakpoints.
///
/// The representation is canonical: pieces are sorted and disjoint, adjacent
/// pieces with equal values are merged and zero pieces are dropped, so two
/// functions that agree almost everywhere compare equal structurally.
class StepFunction {
 public:
  StepFunction() = default;

  /// Validating constructor. Overlapping pieces must carry the same value.
  static StepFunction make(std::vector<Piece> pieces);
  static StepFunction indicator(Rational lo, Rational hi, Scalar value = Scalar(1));

  std::span<const Piece> pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  Scalar operator()(const Rational& t) const;

  /// [inf supp, sup supp), or nothing for the zero function.
  std::optional<std::pair<Rational, Rational>> support_hull() const;
  Rational diameter() const;

  bool is_exact() const;
  bool is_real() const;
  /// Set when an exact and an approx operand were combined.
  bool mixed_mode_warning() const { return mixed_mode_; }

  friend bool operator==(const StepFunction& f, const StepFunction& g);

  /// Builds from pieces already sorted and disjoint; merges and drops zeros.
  static StepFunction from_sorted(std::vector<Piece> pieces, bool mixed_mode = false);
  /// Sums possibly overlapping pieces.
  static StepFunction accumulate(std::vector<Piece> pieces, bool mixed_mode = false);

 private:
  std::vector<Piece> pieces_;
  bool mixed_mode_ = false;
};

StepFunction translate(const StepFunction& f, const Rational& s);
/// t -> f(t / r), r > 0.
StepFunction dilate(const StepFunction& f, const Rational& r);
StepFunction conj(const StepFunction& f);
StepFunction scale(const StepFunction& f, const Scalar& c);
StepFunction abs(const StepFunction& f);
StepFunction add(const StepFunction& f, const StepFunction& g);
StepFunction sub(const StepFunction& f, const StepFunction& g);
StepFunction mul(const StepFunction& f, const StepFunction& g);
/// Restriction to [lo, hi).
StepFunction restrict_to(const StepFunction& f, const Rational& lo, const Rational& hi);
/// Indicator of {t : f(t) != 0}.
StepFunction support_indicator(const StepFunction& f);

inline StepFunction operator+(const StepFunction& f, const StepFunction& g) { return add(f, g); }
inline StepFunction operator-(const StepFunction& f, const StepFunction& g) { return sub(f, g); }
inline StepFunction operator-(const StepFunction& f) { return scale(f, Scalar(-1)); }
inline StepFunction operator*(const StepFunction& f, const StepFunction& g) { return mul(f, g); }
inline StepFunction operator*(const Scalar& c, const StepFunction& f) { return scale(f, c); }

Scalar norm_sq(const StepFunction& f);
Scalar integral(const StepFunction& f);
/// L^2 inner product, conjugate-linear in the second slot.
Scalar inner(const StepFunction& f, const StepFunction& g);

/// A p-periodic step function, stored as its restriction to the cell [0, p).
class PeriodicStepFunction {
 public:
  PeriodicStepFunction(Rational period, StepFunction cell);
  static PeriodicStepFunction zero(Rational period);
  static PeriodicStepFunction constant(Rational period, Scalar value);

  const Rational& period() const { return period_; }
  const StepFunction& cell() const { return cell_; }
  bool is_zero() const { return cell_.empty(); }
  bool has_gaps() const;

  Scalar operator()(const Rational& t) const;

  /// The periodic extension restricted to [lo, hi).
  StepFunction tile(const Rational& lo, const Rational& hi) const;
  /// Pointwise product with a compactly supported function.
  StepFunction times(const StepFunction& f) const;
  /// Restricts to [0, q) and extends q-periodically.
  PeriodicStepFunction rewrap(const Rational& q) const;

  /// Partition of [0, p) into maximal constant cells, gaps included as zero.
  std::vector<Piece> cells() const;
  /// Essential inf / sup over R of a real-valued function.
  Scalar ess_inf() const;
  Scalar ess_sup() const;

  friend bool operator==(const PeriodicStepFunction& x, const PeriodicStepFunction& y) {
    return x.period_ == y.period_ && x.cell_ == y.cell_;
  }

 private:
  Rational period_;
  StepFunction cell_;
};

PeriodicStepFunction add(const PeriodicStepFunction& x, const PeriodicStepFunction& y);
PeriodicStepFunction sub(const PeriodicStepFunction& x, const PeriodicStepFunction& y);
PeriodicStepFunction mul(const PeriodicStepFunction& x, const PeriodicStepFunction& y);
PeriodicStepFunction conj(const PeriodicStepFunction& x);
PeriodicStepFunction abs(const PeriodicStepFunction& x);
PeriodicStepFunction scale(const PeriodicStepFunction& x, const Scalar& c);

/// Common refinement of several same-period functions: cell boundaries in
/// [0, p] (first 0, last p).
std::vector<Rational> common_breakpoints(std::span<const PeriodicStepFunction> fns);

}  // namespace gabor
