#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gabor/gabor_core.hpp"

namespace gabor {

enum class FrameStatus { Frame, NotFrame, Inconclusive };
std::string to_string(FrameStatus s);
FrameStatus frame_status_from_string(const std::string& s);

/// Outcome of a frame criterion. `rule` cites the result applied
/// ("Thm1.3", "Prop2.1", ...); `margin` is the quantity the rule measured.
struct FrameVerdict {
  FrameStatus status = FrameStatus::Inconclusive;
  std::string rule;
  std::optional<std::pair<Scalar, Scalar>> bounds;
  std::optional<std::string> witness;
  std::optional<Scalar> margin;
};

enum class CcVerdict { FrameCertified, Inconclusive };
std::string to_string(CcVerdict v);

/// The inf/sup of the CC-condition and the resulting frame bounds A/b, B/b.
struct CcReport {
  Scalar a_raw;
  Scalar b_raw;
  Scalar frame_lower;
  Scalar frame_upper;
  CcVerdict verdict = CcVerdict::Inconclusive;
  /// g is real and nonnegative.
  bool nonneg_necessary = false;
  /// NotFrame when nonneg_necessary holds and the condition fails.
  std::optional<FrameStatus> necessity_verdict;
};

CcReport cc_bounds(const GaborSystem& sys);
CcReport cc_bounds(const GkTable& table);

/// (ess inf, ess sup) of G_0; zero counts when the periodization has gaps.
std::pair<Scalar, Scalar> g0_bounds(const GaborSystem& sys);
/// NotFrame when ess inf G_0 = 0, otherwise Inconclusive.
FrameVerdict g0_verdict(const GaborSystem& sys);

/// Maximal number of simultaneously nonzero integer translates g(t - n).
int max_integer_overlap(const StepFunction& g);

/// Two-overlap criterion for (g, 1, 1). Throws NotApplicable when three or
/// more integer translates overlap somewhere.
FrameVerdict two_overlap_verdict(const StepFunction& g);

/// NotFrame when the 1-periodization of g vanishes on a cell of positive
/// measure; the margin is the smallest cell modulus.
FrameVerdict small_periodization_obstruction(const StepFunction& g, const Scalar& eps);

struct Thm53Residual {
  PeriodicStepFunction residual;
  Scalar max;
};

/// sum_n |<g, T_{na} g>_{1/b}|^2 - b B ||g||_{1/b} as a 1/b-periodic function.
Thm53Residual thm53_residual(const GaborSystem& sys, const std::optional<Scalar>& upper_bound);

/// sup_t sum_j |sum_{k=-m}^{m} g(t - ka - j/b)|^2 / (2 m b).
Scalar prop55_average(const GaborSystem& sys, std::int64_t m);
Scalar prop55_average(const StepFunction& g, const Rational& a, const Rational& b,
                      std::int64_t m);

}  // namespace gabor
