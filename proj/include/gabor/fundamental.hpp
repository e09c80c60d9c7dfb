#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gabor/conditions.hpp"

namespace gabor {

/// The 1/b-orthonormal cells e_k = T_{k/b} chi_[0,1/b).
StepFunction e_cell(const Rational& b, std::int64_t k);

enum class WindowKind { e, alpha, phi, beta, gamma, psi };
std::string to_string(WindowKind k);

/// A family member(k) = T_{shift(k)} generator, with shift k/b for e and phi
/// and ka otherwise.
struct WindowFamily {
  WindowKind kind;
  Rational a;
  Rational b;
  StepFunction generator;

  StepFunction member(std::int64_t k) const;
  Rational shift(std::int64_t k) const;
};

WindowFamily make_family(WindowKind kind, const Rational& a, const Rational& b);

/// S f = (w/b) sum_n <f, T_{na} g>_{1/b} T_{na} g.
StepFunction apply_frame_operator(const GaborSystem& sys, const StepFunction& f);
/// T f = sqrt(w/b) sum_k <f, e_k>_{1/b} T_{ka} g.
StepFunction apply_preframe(const GaborSystem& sys, const StepFunction& f);
/// T* f = sqrt(w/b) sum_k <f, T_{ka} g>_{1/b} e_k.
StepFunction apply_adjoint(const GaborSystem& sys, const StepFunction& f);

/// The 1/b-periodic matrix entry <S e_k, e_j>_{1/b}.
PeriodicStepFunction walnut_entry(const GaborSystem& sys, std::int64_t j, std::int64_t k);
/// Largest |j - k| with a possibly nonzero entry.
std::int64_t walnut_bandwidth(const GaborSystem& sys);
/// S f assembled from the matrix entries.
StepFunction apply_via_walnut(const GaborSystem& sys, const StepFunction& f);

struct WalnutBand {
  std::int64_t band_low = 0;
  std::int64_t band_high = 0;
  /// (j, k) -> entry for columns k in the requested range.
  std::map<std::pair<std::int64_t, std::int64_t>, PeriodicStepFunction> entries;
};
WalnutBand walnut_band(const GaborSystem& sys, std::int64_t k_min, std::int64_t k_max);

/// S f = sum_k <f, alpha_k>_{1/b} T_{ka} S(alpha_0), with
/// S(alpha_0) = (1/b) sum_j G_j phi_j. Requires ab <= 1.
StepFunction fundamental_decomposition_apply(const GaborSystem& sys, const StepFunction& f);

struct BgpFamilies {
  WindowFamily beta;
  WindowFamily gamma;
  WindowFamily psi;
};

/// beta, gamma, psi families for 1/2 <= ab <= 1.
BgpFamilies build_bgp(const Rational& a, const Rational& b);

/// S^b and S^psi: frame operators of (sqrt(b) beta_0, a, b), (sqrt(b) psi_0, a, b).
GaborSystem beta_system(const BgpFamilies& f);
GaborSystem psi_system(const BgpFamilies& f);
GaborSystem gamma_system(const BgpFamilies& f);

struct SqrtInverseReport {
  Rational a;
  Rational b;
  double max_err_beta_gamma = 0;
  double max_err_identity = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  /// Measured ess inf / sup of b G_0 for the beta and gamma systems.
  std::pair<double, double> beta_g0{0, 0};
  std::pair<double, double> gamma_g0{0, 0};
};

/// Checks S^psi(beta_k) = gamma_k (k = -1, 0, 1) and S^psi S^b S^psi f = f
/// on `trials` seeded random step functions.
SqrtInverseReport sqrt_inverse_check(const Rational& a, const Rational& b, int trials,
                                     std::uint64_t seed = 1);

/// g_N = sum_{n=2}^{N} e_n / n for a = b = 1, in approx mode.
StepFunction harmonic_window(std::int64_t n_max);
/// (1/k) sum_{j=2}^{k+1} 1/j for k != 0; sum_{j>=2} 1/j^2 for k = 0.
long double harmonic_closed_form(std::int64_t k);

}  // namespace gabor
