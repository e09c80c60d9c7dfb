#include "gabor/witnesses.hpp"

#include <algorithm>
#include <set>

#include "gabor/parallel.hpp"

namespace gabor {

namespace {

void require_n(std::int64_t n, std::int64_t min = 1) {
  if (n < min) throw InputError("witness size n must be at least " + std::to_string(min));
}

int sign_of(const Scalar& x) { return compare(x, Scalar(0)); }

}  // namespace

StepFunction case1_witness(const Rational& d, std::int64_t n) {
  if (sgn(d) <= 0 || d > 1) throw InputError("case1 witness needs 0 < d <= 1");
  require_n(n);
  std::vector<Piece> pieces;
  for (std::int64_t i = 0; i <= 2 * n; ++i)
    pieces.push_back({Rational(i), Rational(i) + d, Scalar(i % 2 == 0 ? 1 : -1)});
  return StepFunction::make(std::move(pieces));
}

StepFunction case2_witness(const Rational& d, std::int64_t n) {
  if (sgn(d) <= 0 || d > 1) throw InputError("case2 witness needs 0 < d <= 1");
  require_n(n);
  const Scalar half(Rational(-1, 2));
  std::vector<Piece> pieces;
  for (std::int64_t i = 0; i < 3 * n; ++i)
    pieces.push_back({Rational(i), Rational(i) + d, i % 3 == 0 ? Scalar(1) : half});
  return StepFunction::make(std::move(pieces));
}

StepFunction riesz_witness(std::int64_t n, std::int64_t k) {
  require_n(n, 2);
  require_n(k);
  const StepFunction g = StepFunction::indicator(Rational(0), Rational(n));
  std::vector<Piece> parts;
  for (std::int64_t j = 0; j < k; ++j) {
    parts.push_back({Rational(j * n), Rational(j * n + n), Scalar(1)});
    parts.push_back({Rational(j * n + 1), Rational(j * n + 1 + n), Scalar(-1)});
  }
  return StepFunction::accumulate(std::move(parts));
}

StepFunction p3_witness(const StepFunction& e, std::int64_t n) {
  require_n(n, 0);
  auto hull = e.support_hull();
  if (!hull) throw InputError("p3 witness needs |E| > 0");
  if (sgn(hull->first) < 0 || hull->second > 1) throw InputError("E must lie in [0,1)");
  const StepFunction chi = support_indicator(e);
  std::vector<Piece> parts;
  for (std::int64_t k = 0; k <= n; ++k) {
    const StepFunction moved = translate(chi, Rational(k));
    parts.insert(parts.end(), moved.pieces().begin(), moved.pieces().end());
  }
  return StepFunction::make(std::move(parts));
}

std::optional<P2Set> find_p2_set(const StepFunction& g, const Scalar& eps) {
  if (!g.is_real()) throw NotApplicable("p2 witnesses support real windows only");
  if (g.empty()) return std::nullopt;
  const std::int64_t reach = ceil_to_int(g.diameter());
  std::optional<P2Set> best;
  for (std::int64_t m = 1; m < reach; ++m) {
    const StepFunction shifted = translate(g, Rational(-m));
    std::set<Rational> cuts;
    for (const StepFunction* f : {&g, &shifted})
      for (const Piece& p : f->pieces()) {
        cuts.insert(p.lo);
        cuts.insert(p.hi);
      }
    for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
      const Rational& lo = *it;
      const Scalar u = g(lo), v = shifted(lo);
      if (u.is_zero() || v.is_zero()) continue;
      Scalar mismatch = (u.abs() - v.abs()).abs();
      const bool ok = eps.is_zero() ? mismatch.is_zero() : mismatch < eps;
      if (!ok) continue;
      if (!best || mismatch < best->mismatch) {
        const Rational hi = std::min<Rational>(*std::next(it), lo + Rational(m));
        best = P2Set{m, {lo, hi}, mismatch};
      }
    }
  }
  return best;
}

StepFunction p2_witness(const StepFunction& g, std::int64_t m, const Interval& e, std::int64_t n,
                        const Scalar& eps) {
  if (!g.is_real()) throw NotApplicable("p2 witnesses support real windows only");
  require_n(n);
  if (m < 1) throw InputError("p2 witness needs m >= 1");
  if (!(e.lo < e.hi)) throw InputError("p2 witness needs a nonempty E");
  if (e.hi - e.lo > m) throw InputError("E must be shorter than the shift m");
  const StepFunction on_e = restrict_to(g, e.lo, e.hi);
  const StepFunction on_em = restrict_to(g, e.lo + m, e.hi + m);
  auto constant = [&](const StepFunction& f, const Rational& lo) {
    return f.size() == 1 && f.pieces()[0].lo == lo && f.pieces()[0].hi == lo + (e.hi - e.lo);
  };
  if (!constant(on_e, e.lo) || !constant(on_em, e.lo + m))
    throw InputError("g and g(. + m) must be nonzero constants on E");
  const Scalar g0 = on_e.pieces()[0].value, g1 = on_em.pieces()[0].value;
  const Scalar mismatch = (g0.abs() - g1.abs()).abs();
  if (eps.is_zero() ? !mismatch.is_zero() : !(mismatch < eps))
    throw InputError("no eps-matching set: | |g| - |g(. + m)| | = " + mismatch.to_string() +
                     " on E");
  const int s0 = sign_of(g0);
  const int sigma = s0 * sign_of(g1);
  std::vector<Piece> pieces;
  int phase = s0;
  for (std::int64_t i = 0; i < 2 * n; ++i) {
    const int sign = (i % 2 == 0 ? 1 : -1) * phase;
    pieces.push_back({e.lo + Rational(i * m), e.hi + Rational(i * m), Scalar(sign)});
    phase *= sigma;
  }
  return StepFunction::make(std::move(pieces));
}

std::optional<StepFunction> gap_witness(const GaborSystem& sys) {
  const PeriodicStepFunction g0 = bracket(sys.g, sys.g, sys.a);
  for (const Piece& c : g0.cells())
    if (c.value.is_zero()) return StepFunction::indicator(c.lo, c.hi);
  return std::nullopt;
}

std::vector<DecayRow> decay_table(const WitnessFamily& family, const std::vector<std::int64_t>& ns,
                                  unsigned jobs) {
  std::vector<DecayRow> rows(ns.size());
  parallel_for(ns.size(), jobs, [&](std::size_t i) {
    const std::int64_t n = ns[i];
    const StepFunction f = family.builder(n);
    DecayRow& r = rows[i];
    r.n = n;
    r.norm_sq = family.norm ? family.norm(f, n) : norm_sq(f);
    r.energy = family.energy ? family.energy(f, n) : frame_energy(f, family.target).value;
    r.ratio = r.energy / r.norm_sq;
  });
  return rows;
}

namespace {
GaborSystem box_system(const Rational& c) {
  return GaborSystem(StepFunction::indicator(Rational(0), c), Rational(1), Rational(1));
}
}  // namespace

WitnessFamily case1_family(const Rational& d, const Rational& c) {
  case1_witness(d, 1);
  return {"case1", [d](std::int64_t n) { return case1_witness(d, n); }, box_system(c),
          "energy bounded while norm_sq = (2n+1)d grows", {}, {}};
}

WitnessFamily case2_family(const Rational& d, const Rational& c) {
  case2_witness(d, 1);
  return {"case2", [d](std::int64_t n) { return case2_witness(d, n); }, box_system(c),
          "energy bounded while norm_sq = 3nd/2 grows", {}, {}};
}

WitnessFamily riesz_family(std::int64_t n) {
  riesz_witness(n, 1);
  return {"riesz",
          [n](std::int64_t k) { return riesz_witness(n, k); },
          box_system(Rational(n)),
          "synthesis norm 2 against coefficient norm 2k",
          [](const StepFunction&, std::int64_t k) { return Scalar(2 * k); },
          [](const StepFunction& f, std::int64_t) { return norm_sq(f); }};
}

WitnessFamily p3_family(const StepFunction& g, const StepFunction& e) {
  p3_witness(e, 0);
  return {"p3", [e](std::int64_t n) { return p3_witness(e, n); },
          GaborSystem(g, Rational(1), Rational(1)),
          "energy bounded while norm_sq = (n+1)|E| grows", {}, {}};
}

WitnessFamily p2_family(const StepFunction& g, std::int64_t m, const Interval& e,
                        const Scalar& eps) {
  p2_witness(g, m, e, 1, eps);
  return {"p2", [g, m, e, eps](std::int64_t n) { return p2_witness(g, m, e, n, eps); },
          GaborSystem(g, Rational(1), Rational(1)),
          "energy <= ((n-2)eps + B)|E| while norm_sq = 2n|E|", {}, {}};
}

}  // namespace gabor
