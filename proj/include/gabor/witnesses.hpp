#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gabor/conditions.hpp"

namespace gabor {

/// Half-open interval [lo, hi).
struct Interval {
  Rational lo;
  Rational hi;
};

/// sum_{i=0}^{2n} (-1)^i chi_[i, i+d), 0 < d <= 1.
StepFunction case1_witness(const Rational& d, std::int64_t n);
/// 3n blocks chi_[i, i+d) with weights 1, -1/2, -1/2 repeating.
StepFunction case2_witness(const Rational& d, std::int64_t n);
/// sum_{j<k} (T_{jn} g - T_{jn+1} g) for g = chi_[0,n).
StepFunction riesz_witness(std::int64_t n, std::int64_t k);
/// sum_{k=0}^{n} chi_{k+E}; E is a nonzero indicator inside [0, 1).
StepFunction p3_witness(const StepFunction& e, std::int64_t n);

/// A cell E where |g| and |g(. + m)| are nonzero and nearly equal.
struct P2Set {
  std::int64_t m = 0;
  Interval e;
  Scalar mismatch;
};

/// Best candidate with mismatch < eps (or == 0 when eps is 0), if any.
std::optional<P2Set> find_p2_set(const StepFunction& g, const Scalar& eps);

/// 2n blocks +-f_i chi_{E+im} for a real window g. Rejects E unless g and
/// g(. + m) are nonzero constants on E whose moduli differ by at most eps.
StepFunction p2_witness(const StepFunction& g, std::int64_t m, const Interval& e, std::int64_t n,
                        const Scalar& eps = Scalar(0));

/// chi of a cell of [0, a) where G_0 vanishes, if one exists; its frame
/// energy is zero.
std::optional<StepFunction> gap_witness(const GaborSystem& sys);

struct WitnessFamily {
  std::string name;
  std::function<StepFunction(std::int64_t)> builder;
  GaborSystem target;
  std::string expected;
  /// Overrides for the default norm_sq(f) and frame_energy(f, target);
  /// the Riesz family measures coefficient norm against synthesis norm.
  std::function<Scalar(const StepFunction&, std::int64_t)> norm;
  std::function<Scalar(const StepFunction&, std::int64_t)> energy;
};

struct DecayRow {
  std::int64_t n = 0;
  Scalar norm_sq;
  Scalar energy;
  Scalar ratio;
};

std::vector<DecayRow> decay_table(const WitnessFamily& family, const std::vector<std::int64_t>& ns,
                                  unsigned jobs = 1);

/// Named families: case1(d, c), case2(d, c), riesz(n), p3(g, E), p2(g, m, E).
WitnessFamily case1_family(const Rational& d, const Rational& c);
WitnessFamily case2_family(const Rational& d, const Rational& c);
WitnessFamily riesz_family(std::int64_t n);
WitnessFamily p3_family(const StepFunction& g, const StepFunction& e);
WitnessFamily p2_family(const StepFunction& g, std::int64_t m, const Interval& e,
                        const Scalar& eps = Scalar(0));

}  // namespace gabor
