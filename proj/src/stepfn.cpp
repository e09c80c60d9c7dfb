#include "gabor/stepfn.hpp"

#include <algorithm>
#include <functional>

namespace gabor {

namespace {

std::vector<Rational> breakpoints_of(const StepFunction& f) {
  std::vector<Rational> xs;
  xs.reserve(2 * f.size());
  for (const Piece& p : f.pieces()) {
    if (xs.empty() || xs.back() != p.lo) xs.push_back(p.lo);
    xs.push_back(p.hi);
  }
  return xs;
}

std::vector<Rational> merged_breakpoints(const StepFunction& f, const StepFunction& g) {
  std::vector<Rational> a = breakpoints_of(f);
  std::vector<Rational> b = breakpoints_of(g);
  std::vector<Rational> xs;
  xs.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool mixes(const StepFunction& f, const StepFunction& g) {
  if (f.mixed_mode_warning() || g.mixed_mode_warning()) return true;
  return !f.empty() && !g.empty() && f.is_exact() != g.is_exact();
}

// Cell-wise sweep over the common refinement. `op` receives nullptr for a
// side that vanishes on the cell and returns nothing to skip the cell.
using CellOp = std::function<std::optional<Scalar>(const Scalar*, const Scalar*)>;

StepFunction combine(const StepFunction& f, const StepFunction& g, const CellOp& op) {
  const std::vector<Rational> xs = merged_breakpoints(f, g);
  auto fp = f.pieces();
  auto gp = g.pieces();
  std::size_t i = 0, j = 0;
  std::vector<Piece> out;
  for (std::size_t c = 0; c + 1 < xs.size(); ++c) {
    const Rational& lo = xs[c];
    const Rational& hi = xs[c + 1];
    while (i < fp.size() && fp[i].hi <= lo) ++i;
    while (j < gp.size() && gp[j].hi <= lo) ++j;
    const Scalar* fv = (i < fp.size() && fp[i].lo <= lo) ? &fp[i].value : nullptr;
    const Scalar* gv = (j < gp.size() && gp[j].lo <= lo) ? &gp[j].value : nullptr;
    if (!fv && !gv) continue;
    if (auto v = op(fv, gv)) out.push_back({lo, hi, std::move(*v)});
  }
  return StepFunction::from_sorted(std::move(out), mixes(f, g));
}

}  // namespace

StepFunction StepFunction::make(std::vector<Piece> pieces) {
  std::vector<Rational> xs;
  xs.reserve(2 * pieces.size());
  for (const Piece& p : pieces) {
    if (!(p.lo < p.hi))
      throw InputError("piece [" + to_string(p.lo) + ", " + to_string(p.hi) +
                       ") must satisfy lo < hi");
    xs.push_back(p.lo);
    xs.push_back(p.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const std::size_t ncells = xs.empty() ? 0 : xs.size() - 1;
  std::vector<std::optional<Scalar>> values(ncells);
  bool any_exact = false, any_approx = false;
  for (const Piece& p : pieces) {
    (p.value.is_exact() ? any_exact : any_approx) = true;
    auto first = std::lower_bound(xs.begin(), xs.end(), p.lo) - xs.begin();
    auto last = std::lower_bound(xs.begin(), xs.end(), p.hi) - xs.begin();
    for (auto c = first; c < last; ++c) {
      auto& slot = values[static_cast<std::size_t>(c)];
      if (!slot) {
        slot = p.value;
      } else if (!(*slot == p.value)) {
        throw InputError("overlapping pieces with conflicting values on [" +
                         to_string(xs[c]) + ", " + to_string(xs[c + 1]) + ")");
      }
    }
  }
  std::vector<Piece> sorted;
  for (std::size_t c = 0; c < ncells; ++c)
    if (values[c]) sorted.push_back({xs[c], xs[c + 1], std::move(*values[c])});
  return from_sorted(std::move(sorted), any_exact && any_approx);
}

StepFunction StepFunction::indicator(Rational lo, Rational hi, Scalar value) {
  return make({{std::move(lo), std::move(hi), std::move(value)}});
}

StepFunction StepFunction::from_sorted(std::vector<Piece> pieces, bool mixed_mode) {
  StepFunction f;
  f.mixed_mode_ = mixed_mode;
  f.pieces_.reserve(pieces.size());
  for (Piece& p : pieces) {
    if (p.value.is_zero()) continue;
    if (!f.pieces_.empty()) {
      Piece& last = f.pieces_.back();
      if (last.hi == p.lo && last.value == p.value) {
        last.hi = std::move(p.hi);
        continue;
      }
    }
    f.pieces_.push_back(std::move(p));
  }
  return f;
}

StepFunction StepFunction::accumulate(std::vector<Piece> pieces, bool mixed_mode) {
  struct Event {
    Rational x;
    Scalar delta;
  };
  std::vector<Event> events;
  events.reserve(2 * pieces.size());
  bool any_exact = false, any_approx = false;
  for (Piece& p : pieces) {
    if (p.value.is_zero()) continue;
    (p.value.is_exact() ? any_exact : any_approx) = true;
    events.push_back({p.lo, p.value});
    events.push_back({std::move(p.hi), -p.value});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& u, const Event& v) { return u.x < v.x; });
  std::vector<Piece> out;
  Scalar running;
  for (std::size_t e = 0; e < events.size();) {
    const Rational x = events[e].x;
    while (e < events.size() && events[e].x == x) running += events[e++].delta;
    if (e < events.size() && !running.is_zero()) out.push_back({x, events[e].x, running});
  }
  return from_sorted(std::move(out), mixed_mode || (any_exact && any_approx));
}

Scalar StepFunction::operator()(const Rational& t) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](const Rational& x, const Piece& p) { return x < p.lo; });
  if (it == pieces_.begin()) return Scalar();
  --it;
  return t < it->hi ? it->value : Scalar();
}

std::optional<std::pair<Rational, Rational>> StepFunction::support_hull() const {
  if (pieces_.empty()) return std::nullopt;
  return std::make_pair(pieces_.front().lo, pieces_.back().hi);
}

Rational StepFunction::diameter() const {
  auto hull = support_hull();
  return hull ? Rational(hull->second - hull->first) : Rational(0);
}

bool StepFunction::is_exact() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.value.is_exact(); });
}

bool StepFunction::is_real() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.value.is_real(); });
}

bool operator==(const StepFunction& f, const StepFunction& g) {
  if (f.pieces_.size() != g.pieces_.size()) return false;
  for (std::size_t i = 0; i < f.pieces_.size(); ++i) {
    const Piece& p = f.pieces_[i];
    const Piece& q = g.pieces_[i];
    if (p.lo != q.lo || p.hi != q.hi || !(p.value == q.value)) return false;
  }
  return true;
}

StepFunction translate(const StepFunction& f, const Rational& s) {
  std::vector<Piece> out(f.pieces().begin(), f.pieces().end());
  for (Piece& p : out) {
    p.lo += s;
    p.hi += s;
  }
  return StepFunction::from_sorted(std::move(out), f.mixed_mode_warning());
}

StepFunction dilate(const StepFunction& f, const Rational& r) {
  if (sgn(r) <= 0) throw InputError("dilation factor must be positive");
  std::vector<Piece> out(f.pieces().begin(), f.pieces().end());
  for (Piece& p : out) {
    p.lo *= r;
    p.hi *= r;
  }
  return StepFunction::from_sorted(std::move(out), f.mixed_mode_warning());
}

StepFunction conj(const StepFunction& f) {
  std::vector<Piece> out(f.pieces().begin(), f.pieces().end());
  for (Piece& p : out) p.value = p.value.conj();
  return StepFunction::from_sorted(std::move(out), f.mixed_mode_warning());
}

StepFunction scale(const StepFunction& f, const Scalar& c) {
  std::vector<Piece> out(f.pieces().begin(), f.pieces().end());
  for (Piece& p : out) p.value *= c;
  const bool mixed = f.mixed_mode_warning() || (!f.empty() && f.is_exact() != c.is_exact());
  return StepFunction::from_sorted(std::move(out), mixed);
}

StepFunction abs(const StepFunction& f) {
  std::vector<Piece> out(f.pieces().begin(), f.pieces().end());
  for (Piece& p : out) p.value = p.value.abs();
  return StepFunction::from_sorted(std::move(out), f.mixed_mode_warning());
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](const Scalar* x, const Scalar* y) -> std::optional<Scalar> {
    if (x && y) return *x + *y;
    return x ? *x : *y;
  });
}

StepFunction sub(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](const Scalar* x, const Scalar* y) -> std::optional<Scalar> {
    if (x && y) return *x - *y;
    return x ? *x : -*y;
  });
}

StepFunction mul(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](const Scalar* x, const Scalar* y) -> std::optional<Scalar> {
    if (x && y) return *x * *y;
    return std::nullopt;
  });
}

StepFunction restrict_to(const StepFunction& f, const Rational& lo, const Rational& hi) {
  std::vector<Piece> out;
  for (const Piece& p : f.pieces()) {
    if (p.hi <= lo || p.lo >= hi) continue;
    out.push_back({p.lo < lo ? lo : p.lo, p.hi > hi ? hi : p.hi, p.value});
  }
  return StepFunction::from_sorted(std::move(out), f.mixed_mode_warning());
}

StepFunction support_indicator(const StepFunction& f) {
  std::vector<Piece> out;
  for (const Piece& p : f.pieces()) out.push_back({p.lo, p.hi, Scalar(1)});
  return StepFunction::from_sorted(std::move(out));
}

Scalar norm_sq(const StepFunction& f) {
  Scalar total;
  for (const Piece& p : f.pieces()) total += Scalar(Rational(p.hi - p.lo)) * p.value.abs_sq();
  return total;
}

Scalar integral(const StepFunction& f) {
  Scalar total;
  for (const Piece& p : f.pieces()) total += Scalar(Rational(p.hi - p.lo)) * p.value;
  return total;
}

Scalar inner(const StepFunction& f, const StepFunction& g) { return integral(mul(f, conj(g))); }

// ---------------------------------------------------------------------------

PeriodicStepFunction::PeriodicStepFunction(Rational period, StepFunction cell)
    : period_(std::move(period)), cell_(std::move(cell)) {
  if (sgn(period_) <= 0) throw InputError("period must be positive");
  if (auto hull = cell_.support_hull()) {
    if (sgn(hull->first) < 0 || hull->second > period_)
      throw InputError("periodic cell must be supported in [0, period)");
  }
}

PeriodicStepFunction PeriodicStepFunction::zero(Rational period) {
  return PeriodicStepFunction(std::move(period), StepFunction());
}

PeriodicStepFunction PeriodicStepFunction::constant(Rational period, Scalar value) {
  Rational p = period;
  return PeriodicStepFunction(std::move(period),
                              StepFunction::indicator(Rational(0), std::move(p), std::move(value)));
}

bool PeriodicStepFunction::has_gaps() const {
  auto ps = cell_.pieces();
  if (ps.empty()) return true;
  if (sgn(ps.front().lo) != 0 || ps.back().hi != period_) return true;
  for (std::size_t i = 1; i < ps.size(); ++i)
    if (ps[i - 1].hi != ps[i].lo) return true;
  return false;
}

Scalar PeriodicStepFunction::operator()(const Rational& t) const {
  const Rational k(floor_to_int(t / period_));
  return cell_(t - k * period_);
}

StepFunction PeriodicStepFunction::tile(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi) || cell_.empty()) return StepFunction();
  const std::int64_t k0 = floor_to_int(lo / period_);
  const std::int64_t k1 = ceil_to_int(hi / period_);
  std::vector<Piece> out;
  for (std::int64_t k = k0; k < k1; ++k) {
    const Rational shift = Rational(k) * period_;
    for (const Piece& p : cell_.pieces()) {
      Rational plo = p.lo + shift, phi = p.hi + shift;
      if (phi <= lo || plo >= hi) continue;
      out.push_back({plo < lo ? lo : plo, phi > hi ? hi : phi, p.value});
    }
  }
  return StepFunction::from_sorted(std::move(out), cell_.mixed_mode_warning());
}

StepFunction PeriodicStepFunction::times(const StepFunction& f) const {
  auto hull = f.support_hull();
  if (!hull || cell_.empty()) return StepFunction();
  return mul(tile(hull->first, hull->second), f);
}

PeriodicStepFunction PeriodicStepFunction::rewrap(const Rational& q) const {
  return PeriodicStepFunction(q, tile(Rational(0), q));
}

std::vector<Piece> PeriodicStepFunction::cells() const {
  std::vector<Piece> out;
  Rational x(0);
  for (const Piece& p : cell_.pieces()) {
    if (x < p.lo) out.push_back({x, p.lo, Scalar()});
    out.push_back(p);
    x = p.hi;
  }
  if (x < period_) out.push_back({x, period_, Scalar()});
  return out;
}

Scalar PeriodicStepFunction::ess_inf() const {
  std::vector<Piece> cs = cells();
  Scalar best = cs.front().value;
  for (const Piece& c : cs) best = min(best, c.value);
  return best;
}

Scalar PeriodicStepFunction::ess_sup() const {
  std::vector<Piece> cs = cells();
  Scalar best = cs.front().value;
  for (const Piece& c : cs) best = max(best, c.value);
  return best;
}

namespace {
void require_same_period(const PeriodicStepFunction& x, const PeriodicStepFunction& y) {
  if (x.period() != y.period()) throw std::invalid_argument("period mismatch");
}
}  // namespace

PeriodicStepFunction add(const PeriodicStepFunction& x, const PeriodicStepFunction& y) {
  require_same_period(x, y);
  return PeriodicStepFunction(x.period(), add(x.cell(), y.cell()));
}
PeriodicStepFunction sub(const PeriodicStepFunction& x, const PeriodicStepFunction& y) {
  require_same_period(x, y);
  return PeriodicStepFunction(x.period(), sub(x.cell(), y.cell()));
}
PeriodicStepFunction mul(const PeriodicStepFunction& x, const PeriodicStepFunction& y) {
  require_same_period(x, y);
  return PeriodicStepFunction(x.period(), mul(x.cell(), y.cell()));
}
PeriodicStepFunction conj(const PeriodicStepFunction& x) {
  return PeriodicStepFunction(x.period(), conj(x.cell()));
}
PeriodicStepFunction abs(const PeriodicStepFunction& x) {
  return PeriodicStepFunction(x.period(), abs(x.cell()));
}
PeriodicStepFunction scale(const PeriodicStepFunction& x, const Scalar& c) {
  return PeriodicStepFunction(x.period(), scale(x.cell(), c));
}

std::vector<Rational> common_breakpoints(std::span<const PeriodicStepFunction> fns) {
  std::vector<Rational> xs;
  if (fns.empty()) return xs;
  xs.push_back(Rational(0));
  xs.push_back(fns.front().period());
  for (const PeriodicStepFunction& f : fns) {
    if (f.period() != fns.front().period()) throw std::invalid_argument("period mismatch");
    for (const Piece& p : f.cell().pieces()) {
      xs.push_back(p.lo);
      xs.push_back(p.hi);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace gabor
