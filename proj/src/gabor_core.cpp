#include "gabor/gabor_core.hpp"

namespace gabor {

GaborSystem::GaborSystem(StepFunction window, Rational a_, Rational b_, Rational w)
    : g(std::move(window)), a(std::move(a_)), b(std::move(b_)), weight(std::move(w)) {
  if (sgn(a) <= 0 || sgn(b) <= 0) throw InputError("lattice parameters a, b must be positive");
  if (sgn(weight) <= 0) throw InputError("window weight must be positive");
  if (g.empty()) throw InputError("window must be nonzero");
}

PeriodicStepFunction periodize(const StepFunction& f, const Rational& p) {
  if (sgn(p) <= 0) throw InputError("period must be positive");
  std::vector<Piece> folded;
  for (const Piece& piece : f.pieces()) {
    std::int64_t k = floor_to_int(piece.lo / p);
    Rational lo = piece.lo;
    while (lo < piece.hi) {
      const Rational base = Rational(k) * p;
      const Rational cell_end = base + p;
      const Rational hi = piece.hi < cell_end ? piece.hi : cell_end;
      folded.push_back({lo - base, hi - base, piece.value});
      lo = hi;
      ++k;
    }
  }
  return PeriodicStepFunction(
      p, StepFunction::accumulate(std::move(folded), f.mixed_mode_warning()));
}

PeriodicStepFunction bracket(const StepFunction& f, const StepFunction& g, const Rational& p) {
  return periodize(mul(f, conj(g)), p);
}

GkTable::GkTable(Rational a, Rational b, std::map<std::int64_t, PeriodicStepFunction> entries)
    : a_(std::move(a)), b_(std::move(b)), entries_(std::move(entries)),
      zero_(PeriodicStepFunction::zero(a_)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->second.is_zero())
      it = entries_.erase(it);
    else
      ++it;
  }
}

const PeriodicStepFunction& GkTable::operator[](std::int64_t k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? zero_ : it->second;
}

std::pair<std::int64_t, std::int64_t> GkTable::krange() const {
  if (entries_.empty()) return {0, -1};
  return {entries_.begin()->first, entries_.rbegin()->first};
}

GkTable gk_table(const GaborSystem& sys) {
  // G_k vanishes once the shift k/b exceeds the support diameter.
  const std::int64_t kmax = ceil_to_int(sys.b * sys.g.diameter());
  const StepFunction weighted = scale(sys.g, Scalar(sys.weight));
  std::map<std::int64_t, PeriodicStepFunction> entries;
  for (std::int64_t k = -kmax; k <= kmax; ++k) {
    const StepFunction shifted = translate(sys.g, Rational(k) / sys.b);
    entries.emplace(k, bracket(weighted, shifted, sys.a));
  }
  return GkTable(sys.a, sys.b, std::move(entries));
}

std::pair<std::int64_t, std::int64_t> overlap_range(const StepFunction& f, const StepFunction& g,
                                                    const Rational& a) {
  auto hf = f.support_hull();
  auto hg = g.support_hull();
  if (!hf || !hg) return {0, -1};
  // Open overlap condition: f.lo - g.hi < n a < f.hi - g.lo.
  const std::int64_t lo = floor_to_int((hf->first - hg->second) / a) + 1;
  const std::int64_t hi = ceil_to_int((hf->second - hg->first) / a) - 1;
  return {lo, hi};
}

EnergyResult frame_energy(const StepFunction& f, const GaborSystem& sys) {
  const Rational period = sys.inv_b();
  const auto [n0, n1] = overlap_range(f, sys.g, sys.a);
  Scalar total;
  for (std::int64_t n = n0; n <= n1; ++n) {
    const StepFunction h = mul(f, conj(translate(sys.g, Rational(n) * sys.a)));
    if (h.empty()) continue;
    total += norm_sq(periodize(h, period).cell());
  }
  total *= Scalar(Rational(sys.weight * period));
  const bool exact = total.is_exact() && f.is_exact() && sys.g.is_exact();
  return {std::move(total), exact};
}

Scalar energy_ratio(const StepFunction& f, const GaborSystem& sys) {
  const Scalar n = norm_sq(f);
  if (n.is_zero()) throw InputError("energy ratio of the zero function");
  return frame_energy(f, sys).value / n;
}

Scalar translation_energy(const StepFunction& f, const StepFunction& g, const Rational& a) {
  const auto [n0, n1] = overlap_range(f, g, a);
  Scalar total;
  for (std::int64_t n = n0; n <= n1; ++n)
    total += inner(f, translate(g, Rational(n) * a)).abs_sq();
  return total;
}

}  // namespace gabor
