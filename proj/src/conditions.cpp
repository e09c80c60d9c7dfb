#include "gabor/conditions.hpp"

#include <algorithm>
#include <vector>

namespace gabor {

std::string to_string(FrameStatus s) {
  switch (s) {
    case FrameStatus::Frame: return "Frame";
    case FrameStatus::NotFrame: return "NotFrame";
    case FrameStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

FrameStatus frame_status_from_string(const std::string& s) {
  if (s == "Frame") return FrameStatus::Frame;
  if (s == "NotFrame") return FrameStatus::NotFrame;
  if (s == "Inconclusive") return FrameStatus::Inconclusive;
  throw InputError("unknown frame status '" + s + "'");
}

std::string to_string(CcVerdict v) {
  return v == CcVerdict::FrameCertified ? "FrameCertified" : "Inconclusive";
}

CcReport cc_bounds(const GkTable& table) {
  std::vector<PeriodicStepFunction> fns;
  fns.push_back(table[0]);
  for (const auto& [k, gk] : table.entries())
    if (k != 0) fns.push_back(gk);
  const std::vector<Rational> xs = common_breakpoints(fns);

  std::optional<Scalar> lower, upper;
  for (std::size_t c = 0; c + 1 < xs.size(); ++c) {
    const Rational& t = xs[c];
    const Scalar g0 = table[0](t);
    Scalar off;
    for (const auto& [k, gk] : table.entries())
      if (k != 0) off += gk(t).abs();
    const Scalar a_cell = g0 - off;
    const Scalar b_cell = g0.abs() + off;
    lower = lower ? min(*lower, a_cell) : a_cell;
    upper = upper ? max(*upper, b_cell) : b_cell;
  }

  CcReport r;
  r.a_raw = *lower;
  r.b_raw = *upper;
  const Scalar b(table.b());
  r.frame_lower = r.a_raw / b;
  r.frame_upper = r.b_raw / b;
  r.verdict = r.a_raw > Scalar(0) ? CcVerdict::FrameCertified : CcVerdict::Inconclusive;
  return r;
}

CcReport cc_bounds(const GaborSystem& sys) {
  CcReport r = cc_bounds(gk_table(sys));
  r.nonneg_necessary = std::all_of(sys.g.pieces().begin(), sys.g.pieces().end(),
                                   [](const Piece& p) {
                                     return p.value.is_real() && p.value >= Scalar(0);
                                   });
  if (r.nonneg_necessary)
    r.necessity_verdict =
        r.verdict == CcVerdict::FrameCertified ? FrameStatus::Frame : FrameStatus::NotFrame;
  return r;
}

std::pair<Scalar, Scalar> g0_bounds(const GaborSystem& sys) {
  const PeriodicStepFunction g0 = periodize(scale(mul(sys.g, conj(sys.g)), Scalar(sys.weight)), sys.a);
  return {g0.ess_inf(), g0.ess_sup()};
}

FrameVerdict g0_verdict(const GaborSystem& sys) {
  const auto [lo, hi] = g0_bounds(sys);
  FrameVerdict v;
  v.rule = "Prop1.2(3)";
  v.margin = lo;
  if (lo.is_zero()) {
    v.status = FrameStatus::NotFrame;
    v.witness = "gap_witness";
  }
  return v;
}

int max_integer_overlap(const StepFunction& g) {
  const PeriodicStepFunction count = periodize(support_indicator(g), Rational(1));
  if (count.is_zero()) return 0;
  return static_cast<int>(to_int(count.ess_sup().re()));
}

FrameVerdict two_overlap_verdict(const StepFunction& g) {
  if (g.empty()) throw InputError("window must be nonzero");
  if (max_integer_overlap(g) > 2)
    throw NotApplicable("three or more integer translates overlap; the two-overlap criterion does not apply");

  FrameVerdict v;
  v.rule = "Prop2.1";
  const GaborSystem sys(g, Rational(1), Rational(1));
  const auto [g0_lo, g0_hi] = g0_bounds(sys);
  if (g0_lo.is_zero()) {
    v.status = FrameStatus::NotFrame;
    v.rule = "Prop1.2(3)";
    v.witness = "gap_witness";
    v.margin = g0_lo;
    return v;
  }

  // inf of ||g(t)| - |g(t-n)|| over cells where both factors are nonzero.
  std::optional<Scalar> gap;
  std::int64_t gap_shift = 0;
  const std::int64_t reach = ceil_to_int(g.diameter());
  for (std::int64_t n = -reach; n <= reach; ++n) {
    if (n == 0) continue;
    const StepFunction shifted = translate(g, Rational(n));
    const StepFunction both = mul(support_indicator(g), support_indicator(shifted));
    if (both.empty()) continue;
    std::vector<Rational> xs;
    for (const StepFunction* f : {&g, &shifted, &both})
      for (const Piece& p : f->pieces()) {
        xs.push_back(p.lo);
        xs.push_back(p.hi);
      }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t c = 0; c + 1 < xs.size(); ++c) {
      const Rational& t = xs[c];
      if (both(t).is_zero()) continue;
      const Scalar h = (g(t).abs() - shifted(t).abs()).abs();
      if (!gap || h < *gap) {
        gap = h;
        gap_shift = n;
      }
    }
  }

  if (gap && gap->is_zero()) {
    v.status = FrameStatus::NotFrame;
    v.witness = "p2_witness(m=" + std::to_string(gap_shift) + ")";
    v.margin = *gap;
    return v;
  }
  const CcReport cc = cc_bounds(sys);
  v.status = FrameStatus::Frame;
  v.bounds = std::make_pair(cc.frame_lower, cc.frame_upper);
  if (gap) v.margin = *gap;
  return v;
}

FrameVerdict small_periodization_obstruction(const StepFunction& g, const Scalar& eps) {
  const PeriodicStepFunction p = periodize(g, Rational(1));
  std::optional<Scalar> smallest;
  Rational where_lo, where_hi;
  for (const Piece& c : p.cells()) {
    const Scalar m = c.value.abs();
    if (!smallest || m < *smallest) {
      smallest = m;
      where_lo = c.lo;
      where_hi = c.hi;
    }
  }
  FrameVerdict v;
  v.rule = "Prop2.2";
  v.margin = *smallest;
  if (smallest->is_zero()) {
    v.status = FrameStatus::NotFrame;
    v.witness = "p3_witness(E=[" + to_string(where_lo) + "," + to_string(where_hi) + "))";
  } else if (*smallest < eps.abs()) {
    // Below this eps, but a positive floor means the hypothesis fails for smaller eps.
    v.status = FrameStatus::Inconclusive;
  }
  return v;
}

Thm53Residual thm53_residual(const GaborSystem& sys, const std::optional<Scalar>& upper_bound) {
  if (!upper_bound) throw InputError("Thm 5.3 residual needs an upper frame bound B");
  const Rational period = sys.inv_b();
  const auto [n0, n1] = overlap_range(sys.g, sys.g, sys.a);
  PeriodicStepFunction lhs = PeriodicStepFunction::zero(period);
  for (std::int64_t n = n0; n <= n1; ++n) {
    const PeriodicStepFunction br = bracket(sys.g, translate(sys.g, Rational(n) * sys.a), period);
    lhs = add(lhs, mul(br, conj(br)));
  }
  lhs = scale(lhs, Scalar(Rational(sys.weight * sys.weight)));
  const PeriodicStepFunction norm = bracket(sys.g, sys.g, period);
  const Scalar factor = Scalar(Rational(sys.b * sys.weight)) * *upper_bound;
  Thm53Residual out{sub(lhs, scale(norm, factor)), Scalar()};
  out.max = out.residual.ess_sup();
  return out;
}

Scalar prop55_average(const StepFunction& g, const Rational& a, const Rational& b,
                      std::int64_t m) {
  if (m < 1) throw InputError("prop55_average needs m >= 1");
  if (sgn(a) <= 0 || sgn(b) <= 0) throw InputError("lattice parameters a, b must be positive");
  std::vector<Piece> parts;
  for (std::int64_t k = -m; k <= m; ++k) {
    const StepFunction moved = translate(g, Rational(k) * a);
    parts.insert(parts.end(), moved.pieces().begin(), moved.pieces().end());
  }
  const StepFunction sum = StepFunction::accumulate(std::move(parts));
  const PeriodicStepFunction folded = periodize(mul(sum, conj(sum)), Rational(1) / b);
  const Scalar sup = folded.is_zero() ? Scalar() : folded.ess_sup();
  return sup / Scalar(Rational(2 * m * b));
}

Scalar prop55_average(const GaborSystem& sys, std::int64_t m) {
  return prop55_average(sys.g, sys.a, sys.b, m) * Scalar(sys.weight);
}

}  // namespace gabor
