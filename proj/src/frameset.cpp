#include "gabor/frameset.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <queue>

namespace gabor {

ExponentSet::ExponentSet(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw InputError("exponent set must be nonempty");
  for (std::size_t i = 1; i < exps_.size(); ++i)
    if (exps_[i] <= exps_[i - 1]) throw InputError("exponents must be strictly increasing");
}

ExponentSet ExponentSet::normalized() const { return shifted(-exps_.front()); }

ExponentSet ExponentSet::shifted(std::int64_t c) const {
  std::vector<std::int64_t> out = exps_;
  for (auto& n : out) n += c;
  return ExponentSet(std::move(out));
}

poly::Poly ExponentSet::polynomial() const {
  const ExponentSet n = normalized();
  std::vector<Rational> c(static_cast<std::size_t>(n.exps_.back() + 1));
  for (auto e : n.exps_) c[static_cast<std::size_t>(e)] = 1;
  return poly::Poly(std::move(c));
}

StepFunction ExponentSet::indicator() const {
  return lift(StepFunction::indicator(Rational(0), Rational(1)));
}

StepFunction ExponentSet::lift(const StepFunction& e) const {
  if (auto hull = e.support_hull(); hull && (sgn(hull->first) < 0 || hull->second > 1))
    throw InputError("base set E must lie in [0,1)");
  std::vector<Piece> parts;
  for (auto n : exps_) {
    const StepFunction moved = translate(e, Rational(n));
    parts.insert(parts.end(), moved.pieces().begin(), moved.pieces().end());
  }
  return StepFunction::make(std::move(parts));
}

namespace {

using cplx = std::complex<double>;

struct Evaluator {
  std::vector<double> n;  // normalized exponents
  double guard = 0;

  explicit Evaluator(const ExponentSet& e) {
    const ExponentSet z = e.normalized();
    for (auto v : z.exps()) n.push_back(static_cast<double>(v));
    const double eps = std::numeric_limits<double>::epsilon();
    guard = 8.0 * static_cast<double>(n.size()) * (n.back() * 2 * std::numbers::pi + 4) * eps;
  }

  void eval(double theta, cplx& q, cplx& dq) const {
    q = 0;
    dq = 0;
    for (double k : n) {
      const cplx w(std::cos(k * theta), std::sin(k * theta));
      q += w;
      dq += cplx(0, k) * w;
    }
  }
};

// Distance from 0 to the segment {z0 + z1 s : |s| <= r}.
double segment_distance(cplx z0, cplx z1, double r) {
  const double n1 = std::norm(z1);
  double s = 0;
  if (n1 > 0) s = std::clamp(-(std::conj(z1) * z0).real() / n1, -r, r);
  return std::abs(z0 + z1 * s);
}

struct Cell {
  double bound;
  double center;
  double radius;
  bool operator>(const Cell& o) const { return bound > o.bound; }
};

}  // namespace

CircleZero exact_circle_zero(const ExponentSet& e) {
  const poly::Poly p = e.polynomial();
  const poly::Poly d = poly::gcd(p, p.reversed());
  if (d.degree() < 1) return CircleZero::No;
  if (sgn(d(Rational(1))) == 0 || sgn(d(Rational(-1))) == 0) return CircleZero::Yes;
  // With z = +-1 excluded, d is palindromic of even degree.
  const poly::Poly trace = poly::palindromic_to_trace(d);
  return poly::count_real_roots(trace, Rational(-2), Rational(2)) > 0 ? CircleZero::Yes
                                                                      : CircleZero::No;
}

CertifiedRange circle_range(const ExponentSet& e, double tol) {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  CertifiedRange out;
  const double k = static_cast<double>(e.size());
  // |p| <= k on the circle with equality at z = 1.
  out.max = {k, k};

  const Evaluator ev(e);
  RangeCertificate& cert = out.certificate;
  cert.rounding_guard = ev.guard;
  for (double n : ev.n) {
    cert.lipschitz += n;
    cert.curvature += n * n;
  }
  if (e.size() == 1) {
    out.min = {1, 1};
    return out;
  }

  const double two_pi = 2 * std::numbers::pi;
  const std::size_t grid =
      std::max<std::size_t>(256, 16 * static_cast<std::size_t>(ev.n.back() + 1));
  cert.grid_step = two_pi / static_cast<double>(grid);
  cert.min_step = cert.grid_step;

  double best = std::numeric_limits<double>::infinity();
  std::priority_queue<Cell, std::vector<Cell>, std::greater<>> heap;
  auto visit = [&](double center, double radius) {
    cplx q, dq;
    ev.eval(center, q, dq);
    ++cert.evaluations;
    const double value = std::abs(q);
    if (value + ev.guard < best) {
      best = value + ev.guard;
      out.argmin = center;
    }
    const double first = value - cert.lipschitz * radius;
    const double second = segment_distance(q, dq, radius) - 0.5 * cert.curvature * radius * radius;
    heap.push({std::max(first, second) - ev.guard, center, radius});
  };
  for (std::size_t i = 0; i < grid; ++i)
    visit((static_cast<double>(i) + 0.5) * cert.grid_step, 0.5 * cert.grid_step);

  bool zero_ruled_out = false;
  constexpr std::int64_t kMaxEvaluations = 20'000'000;
  while (true) {
    const Cell top = heap.top();
    const double lower = std::max(0.0, top.bound);
    if (best - lower <= tol) {
      if (lower > 0 || zero_ruled_out) {
        out.min = {lower, best};
        break;
      }
      // The numeric bound cannot separate the minimum from 0.
      cert.exact_tiebreak = true;
      if (exact_circle_zero(e) == CircleZero::Yes) {
        out.min_is_zero = true;
        out.min = {0, best};
        break;
      }
      zero_ruled_out = true;
    }
    if (cert.evaluations >= kMaxEvaluations) {
      cert.converged = false;
      out.min = {lower, best};
      break;
    }
    heap.pop();
    const double r = 0.5 * top.radius;
    cert.min_step = std::min(cert.min_step, 2 * r);
    visit(top.center - r, r);
    visit(top.center + r, r);
  }
  return out;
}

FrameSetReport frame_set_report(const ExponentSet& e, double tol) {
  FrameSetReport rep;
  rep.range = circle_range(e, tol);
  rep.verdict.rule = "Thm4.2";
  const Enclosure& m = rep.range.min;
  rep.lower_bound = {m.lower * m.lower, m.upper * m.upper};
  rep.upper_bound = {rep.range.max.lower * rep.range.max.lower,
                     rep.range.max.upper * rep.range.max.upper};
  if (exact_circle_zero(e) == CircleZero::Yes) {
    rep.verdict.status = FrameStatus::NotFrame;
    rep.verdict.witness = "zero of p on the unit circle";
    rep.verdict.margin = Scalar(0);
  } else if (m.lower > 0) {
    rep.verdict.status = FrameStatus::Frame;
    const std::int64_t kk = static_cast<std::int64_t>(e.size());
    Scalar lower = Scalar::approx(rep.lower_bound.lower);
    if (e.size() == 1) lower = Scalar(1);
    rep.verdict.bounds = std::make_pair(lower, Scalar(kk * kk));
    rep.verdict.margin = Scalar::approx(m.lower);
  }
  return rep;
}

FrameVerdict is_frame_set(const ExponentSet& e, double tol) {
  return frame_set_report(e, tol).verdict;
}

}  // namespace gabor
