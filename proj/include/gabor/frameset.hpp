#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gabor/conditions.hpp"
#include "gabor/poly.hpp"

namespace gabor {

/// Strictly increasing integers n_1 < ... < n_k defining p(z) = sum_j z^{n_j}.
class ExponentSet {
 public:
  explicit ExponentSet(std::vector<std::int64_t> exps);

  std::span<const std::int64_t> exps() const { return exps_; }
  std::size_t size() const { return exps_.size(); }
  /// Shifted so the smallest exponent is 0 (same modulus on |z| = 1).
  ExponentSet normalized() const;
  ExponentSet shifted(std::int64_t c) const;
  /// Integer polynomial of the normalized set.
  poly::Poly polynomial() const;
  /// F = union_j ([0,1) + n_j) as an indicator.
  StepFunction indicator() const;
  /// union_j (E + n_j) for E a subset of [0,1) given as an indicator.
  StepFunction lift(const StepFunction& e) const;

 private:
  std::vector<std::int64_t> exps_;
};

struct Enclosure {
  double lower = 0;
  double upper = 0;
  double width() const { return upper - lower; }
};

/// How an enclosure was certified.
struct RangeCertificate {
  double grid_step = 0;       // initial uniform step
  double min_step = 0;        // finest interval after refinement
  double lipschitz = 0;       // sum_j |n_j - n_1|
  double curvature = 0;       // sum_j (n_j - n_1)^2, bound on |q''|
  double rounding_guard = 0;  // added to every floating bound
  std::int64_t evaluations = 0;
  bool exact_tiebreak = false;
  bool converged = true;
};

/// Enclosures of min and max of |p(e^{i theta})|.
struct CertifiedRange {
  Enclosure min;
  Enclosure max;
  bool min_is_zero = false;
  double argmin = 0;
  RangeCertificate certificate;
};

CertifiedRange circle_range(const ExponentSet& e, double tol = 1e-9);

enum class CircleZero { Yes, No };

/// Exact decision whether p has a zero on the unit circle.
CircleZero exact_circle_zero(const ExponentSet& e);

struct FrameSetReport {
  FrameVerdict verdict;
  CertifiedRange range;
  /// Frame bound enclosures of (chi_F, 1, 1): squares of the modulus range.
  Enclosure lower_bound;
  Enclosure upper_bound;
};

FrameSetReport frame_set_report(const ExponentSet& e, double tol = 1e-9);
FrameVerdict is_frame_set(const ExponentSet& e, double tol = 1e-9);

}  // namespace gabor
