#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "gabor/stepfn.hpp"

namespace gabor {

/// The Weyl-Heisenberg system (E_{mb} T_{na} sqrt(weight) g)_{m,n}.
///
/// `weight` lets windows such as sqrt(b) chi_[0,a) stay exact: every
/// quadratic quantity (G_k, energies, frame operators) is scaled by it.
struct GaborSystem {
  StepFunction g;
  Rational a;
  Rational b;
  Rational weight{1};

  GaborSystem(StepFunction window, Rational a_, Rational b_, Rational w = Rational(1));

  Rational inv_b() const { return Rational(1) / b; }
};

/// p-periodization: t -> sum_j f(t - j p) on [0, p).
PeriodicStepFunction periodize(const StepFunction& f, const Rational& p);

/// p-inner product <f, g>_p(t) = sum_k f(t - kp) conj(g(t - kp)).
PeriodicStepFunction bracket(const StepFunction& f, const StepFunction& g, const Rational& p);

/// The correlation functions G_k(t) = sum_n g(t - na) conj(g(t - na - k/b)).
class GkTable {
 public:
  GkTable(Rational a, Rational b, std::map<std::int64_t, PeriodicStepFunction> entries);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  /// G_k; the zero function outside the stored range.
  const PeriodicStepFunction& operator[](std::int64_t k) const;
  /// Nonzero entries only.
  const std::map<std::int64_t, PeriodicStepFunction>& entries() const { return entries_; }
  /// Smallest and largest k with G_k != 0, or (0, -1) when all vanish.
  std::pair<std::int64_t, std::int64_t> krange() const;

 private:
  Rational a_, b_;
  std::map<std::int64_t, PeriodicStepFunction> entries_;
  PeriodicStepFunction zero_;
};

GkTable gk_table(const GaborSystem& sys);

/// Range [lo, hi] of integers n with supp f and supp g + n*a overlapping.
std::pair<std::int64_t, std::int64_t> overlap_range(const StepFunction& f, const StepFunction& g,
                                                    const Rational& a);

struct EnergyResult {
  Scalar value;
  bool exact = true;
};

/// sum_{m,n} |<f, E_{mb} T_{na} g>|^2, with the modulation sum collapsed by
/// Parseval on the 1/b-periodization.
EnergyResult frame_energy(const StepFunction& f, const GaborSystem& sys);

/// frame_energy(f) / ||f||^2; f must be nonzero.
Scalar energy_ratio(const StepFunction& f, const GaborSystem& sys);

/// Zero-modulation part sum_n |<f, T_{na} g>|^2 (translates only).
Scalar translation_energy(const StepFunction& f, const StepFunction& g, const Rational& a);

}  // namespace gabor
