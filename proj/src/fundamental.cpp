#include "gabor/fundamental.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace gabor {

StepFunction e_cell(const Rational& b, std::int64_t k) {
  const Rational p = Rational(1) / b;
  return StepFunction::indicator(p * k, p * (k + 1));
}

std::string to_string(WindowKind k) {
  switch (k) {
    case WindowKind::e: return "e";
    case WindowKind::alpha: return "alpha";
    case WindowKind::phi: return "phi";
    case WindowKind::beta: return "beta";
    case WindowKind::gamma: return "gamma";
    case WindowKind::psi: return "psi";
  }
  return "?";
}

Rational WindowFamily::shift(std::int64_t k) const {
  if (kind == WindowKind::e || kind == WindowKind::phi) return Rational(k) / b;
  return a * k;
}

StepFunction WindowFamily::member(std::int64_t k) const { return translate(generator, shift(k)); }

namespace {

void require_positive(const Rational& a, const Rational& b) {
  if (sgn(a) <= 0 || sgn(b) <= 0) throw InputError("a and b must be positive");
}

// (1/sqrt2 or 2^{-3/4}) on [0, delta) and [a, 1/b), 1 on [delta, a).
StepFunction soft_box(const Rational& a, const Rational& b, long double edge) {
  const Rational p = Rational(1) / b;
  const Rational delta = p - a;
  std::vector<Piece> pieces;
  if (sgn(delta) > 0) pieces.push_back({Rational(0), delta, Scalar::approx(edge)});
  pieces.push_back({delta, a, Scalar::approx(1.0L)});
  if (sgn(delta) > 0) pieces.push_back({a, p, Scalar::approx(edge)});
  return StepFunction::make(std::move(pieces));
}

void require_bgp(const Rational& a, const Rational& b) {
  require_positive(a, b);
  const Rational ab = a * b;
  if (ab < Rational(1, 2) || ab > 1)
    throw InputError("the beta/gamma/psi construction needs 1/2 <= ab <= 1");
}

std::pair<std::int64_t, std::int64_t> cell_range(const StepFunction& f, const Rational& width) {
  auto hull = f.support_hull();
  if (!hull) return {0, -1};
  return {floor_to_int(hull->first / width), ceil_to_int(hull->second / width) - 1};
}

Scalar root_weight(const GaborSystem& sys) { return sqrt(Scalar(Rational(sys.weight / sys.b))); }

}  // namespace

WindowFamily make_family(WindowKind kind, const Rational& a, const Rational& b) {
  require_positive(a, b);
  const Rational p = Rational(1) / b;
  switch (kind) {
    case WindowKind::e:
    case WindowKind::beta:
      return {kind, a, b, StepFunction::indicator(Rational(0), p)};
    case WindowKind::alpha:
    case WindowKind::phi:
      return {kind, a, b, StepFunction::indicator(Rational(0), a)};
    case WindowKind::gamma:
      require_bgp(a, b);
      return {kind, a, b, soft_box(a, b, 1 / std::sqrt(2.0L))};
    case WindowKind::psi:
      require_bgp(a, b);
      return {kind, a, b, soft_box(a, b, std::pow(2.0L, -0.75L))};
  }
  throw InputError("unknown window family");
}

StepFunction apply_frame_operator(const GaborSystem& sys, const StepFunction& f) {
  const Rational p = sys.inv_b();
  const auto [n0, n1] = overlap_range(f, sys.g, sys.a);
  std::vector<Piece> parts;
  for (std::int64_t n = n0; n <= n1; ++n) {
    const StepFunction h = translate(sys.g, sys.a * n);
    const PeriodicStepFunction c = bracket(f, h, p);
    if (c.is_zero()) continue;
    const StepFunction cell = c.times(h);
    parts.insert(parts.end(), cell.pieces().begin(), cell.pieces().end());
  }
  return scale(StepFunction::accumulate(std::move(parts)), Scalar(Rational(sys.weight * p)));
}

StepFunction apply_adjoint(const GaborSystem& sys, const StepFunction& f) {
  const Rational p = sys.inv_b();
  const auto [k0, k1] = overlap_range(f, sys.g, sys.a);
  std::vector<Piece> parts;
  for (std::int64_t k = k0; k <= k1; ++k) {
    const PeriodicStepFunction c = bracket(f, translate(sys.g, sys.a * k), p);
    if (c.is_zero()) continue;
    const StepFunction cell = c.times(e_cell(sys.b, k));
    parts.insert(parts.end(), cell.pieces().begin(), cell.pieces().end());
  }
  return scale(StepFunction::accumulate(std::move(parts)), root_weight(sys));
}

StepFunction apply_preframe(const GaborSystem& sys, const StepFunction& f) {
  const Rational p = sys.inv_b();
  const auto [k0, k1] = cell_range(f, p);
  std::vector<Piece> parts;
  for (std::int64_t k = k0; k <= k1; ++k) {
    const PeriodicStepFunction c = bracket(f, e_cell(sys.b, k), p);
    if (c.is_zero()) continue;
    const StepFunction cell = c.times(translate(sys.g, sys.a * k));
    parts.insert(parts.end(), cell.pieces().begin(), cell.pieces().end());
  }
  return scale(StepFunction::accumulate(std::move(parts)), root_weight(sys));
}

PeriodicStepFunction walnut_entry(const GaborSystem& sys, std::int64_t j, std::int64_t k) {
  const Rational p = sys.inv_b();
  const PeriodicStepFunction corr =
      bracket(translate(sys.g, -p * j), translate(sys.g, -p * k), sys.a);
  return scale(corr.rewrap(p), Scalar(Rational(sys.weight * p)));
}

std::int64_t walnut_bandwidth(const GaborSystem& sys) {
  return ceil_to_int(sys.b * sys.g.diameter());
}

StepFunction apply_via_walnut(const GaborSystem& sys, const StepFunction& f) {
  const Rational p = sys.inv_b();
  const std::int64_t w = walnut_bandwidth(sys);
  const auto [k0, k1] = cell_range(f, p);
  std::vector<Piece> parts;
  for (std::int64_t k = k0; k <= k1; ++k) {
    const PeriodicStepFunction c = bracket(f, e_cell(sys.b, k), p);
    if (c.is_zero()) continue;
    for (std::int64_t j = k - w; j <= k + w; ++j) {
      const PeriodicStepFunction m = walnut_entry(sys, j, k);
      if (m.is_zero()) continue;
      const StepFunction cell = mul(c, m).times(e_cell(sys.b, j));
      parts.insert(parts.end(), cell.pieces().begin(), cell.pieces().end());
    }
  }
  return StepFunction::accumulate(std::move(parts));
}

WalnutBand walnut_band(const GaborSystem& sys, std::int64_t k_min, std::int64_t k_max) {
  if (k_min > k_max) throw InputError("empty column range");
  WalnutBand band;
  const std::int64_t w = walnut_bandwidth(sys);
  band.band_low = -w;
  band.band_high = w;
  for (std::int64_t k = k_min; k <= k_max; ++k)
    for (std::int64_t j = k - w; j <= k + w; ++j) {
      PeriodicStepFunction m = walnut_entry(sys, j, k);
      if (!m.is_zero()) band.entries.emplace(std::make_pair(j, k), std::move(m));
    }
  return band;
}

StepFunction fundamental_decomposition_apply(const GaborSystem& sys, const StepFunction& f) {
  if (sys.a * sys.b > 1) throw NotApplicable("the fundamental decomposition needs ab <= 1");
  const Rational p = sys.inv_b();
  const GkTable table = gk_table(sys);
  const StepFunction box = StepFunction::indicator(Rational(0), sys.a);
  std::vector<Piece> s0_parts;
  for (const auto& [j, gj] : table.entries()) {
    const StepFunction cell = gj.times(translate(box, p * j));
    s0_parts.insert(s0_parts.end(), cell.pieces().begin(), cell.pieces().end());
  }
  const StepFunction s0 = scale(StepFunction::accumulate(std::move(s0_parts)), Scalar(p));

  const auto [k0, k1] = cell_range(f, sys.a);
  std::vector<Piece> parts;
  for (std::int64_t k = k0; k <= k1; ++k) {
    const PeriodicStepFunction c = bracket(f, translate(box, sys.a * k), p);
    if (c.is_zero()) continue;
    const StepFunction cell = c.times(translate(s0, sys.a * k));
    parts.insert(parts.end(), cell.pieces().begin(), cell.pieces().end());
  }
  return StepFunction::accumulate(std::move(parts));
}

BgpFamilies build_bgp(const Rational& a, const Rational& b) {
  require_bgp(a, b);
  return {make_family(WindowKind::beta, a, b), make_family(WindowKind::gamma, a, b),
          make_family(WindowKind::psi, a, b)};
}

GaborSystem beta_system(const BgpFamilies& f) {
  return GaborSystem(f.beta.generator, f.beta.a, f.beta.b, f.beta.b);
}
GaborSystem gamma_system(const BgpFamilies& f) {
  return GaborSystem(f.gamma.generator, f.gamma.a, f.gamma.b, f.gamma.b);
}
GaborSystem psi_system(const BgpFamilies& f) {
  return GaborSystem(f.psi.generator, f.psi.a, f.psi.b, f.psi.b);
}

namespace {

StepFunction random_step(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 6), grid(-40, 60), value(-4, 4);
  std::vector<Piece> parts;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    int lo = grid(rng), hi = grid(rng);
    if (lo == hi) ++hi;
    if (lo > hi) std::swap(lo, hi);
    int v = value(rng);
    if (v == 0) v = 1;
    parts.push_back({Rational(lo) / 20, Rational(hi) / 20, Scalar(v)});
  }
  return StepFunction::accumulate(std::move(parts));
}

double l2(const StepFunction& f) { return std::sqrt(static_cast<double>(norm_sq(f).real_value())); }

std::pair<double, double> g0_over_b(const GaborSystem& sys) {
  const auto [lo, hi] = g0_bounds(sys);
  const double b = static_cast<double>(to_long_double(sys.b));
  return {static_cast<double>(lo.real_value()) / b, static_cast<double>(hi.real_value()) / b};
}

}  // namespace

SqrtInverseReport sqrt_inverse_check(const Rational& a, const Rational& b, int trials,
                                     std::uint64_t seed) {
  if (trials < 0) throw InputError("trials must be nonnegative");
  const BgpFamilies fam = build_bgp(a, b);
  const GaborSystem sb = beta_system(fam), spsi = psi_system(fam);
  SqrtInverseReport rep;
  rep.a = a;
  rep.b = b;
  rep.trials = trials;
  rep.seed = seed;
  for (std::int64_t k = -1; k <= 1; ++k) {
    const StepFunction diff =
        apply_frame_operator(spsi, fam.beta.member(k)) - fam.gamma.member(k);
    rep.max_err_beta_gamma = std::max(rep.max_err_beta_gamma, l2(diff));
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const StepFunction f = random_step(rng);
    if (f.empty()) continue;
    const StepFunction back =
        apply_frame_operator(spsi, apply_frame_operator(sb, apply_frame_operator(spsi, f)));
    rep.max_err_identity = std::max(rep.max_err_identity, l2(back - f) / l2(f));
  }
  rep.beta_g0 = g0_over_b(sb);
  rep.gamma_g0 = g0_over_b(gamma_system(fam));
  return rep;
}

StepFunction harmonic_window(std::int64_t n_max) {
  if (n_max < 2) throw InputError("harmonic window needs N >= 2");
  std::vector<Piece> pieces;
  for (std::int64_t n = 2; n <= n_max; ++n)
    pieces.push_back({Rational(n), Rational(n + 1), Scalar::approx(1.0L / static_cast<long double>(n))});
  return StepFunction::from_sorted(std::move(pieces));
}

long double harmonic_closed_form(std::int64_t k) {
  if (k < 0) k = -k;
  if (k == 0) return std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6 - 1;
  long double s = 0;
  for (std::int64_t j = k + 1; j >= 2; --j) s += 1.0L / static_cast<long double>(j);
  return s / static_cast<long double>(k);
}

}  // namespace gabor
