#include <doctest.h>

#include "gabor/stepfn.hpp"
#include "gabor/witnesses.hpp"
#include "oracles.hpp"

using namespace gabor;

namespace {

Rational q(long n, long d = 1) { return Rational(n) / d; }

StepFunction chi(long lo, long hi) { return StepFunction::indicator(q(lo), q(hi)); }

}  // namespace

TEST_SUITE("stepfn") {
  TEST_CASE("scalar parsing and exactness") {
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-7") == q(-7));
    CHECK(parse_rational("1.95", true) == q(39, 20));
    CHECK(parse_rational("0.25", true) == q(1, 4));
    CHECK(parse_rational("010") == q(10));
    CHECK(parse_rational("07/010") == q(7, 10));
    CHECK_THROWS_AS(parse_rational("1.95"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    const Scalar x(q(1, 3), q(2));
    CHECK((x * x.conj()) == Scalar(q(1, 9) + 4));
    CHECK(x.abs_sq().is_exact());
    CHECK(sqrt(Scalar(q(9, 4))) == Scalar(q(3, 2)));
    CHECK(sqrt(Scalar(q(9, 4))).is_exact());
    CHECK_FALSE(sqrt(Scalar(2)).is_exact());
  }

  TEST_CASE("approx equality uses the global tolerance") {
    const Scalar a = Scalar::approx(1.0L), b = Scalar::approx(1.0L + 1e-14L);
    CHECK(a == b);
    CHECK_FALSE(a == Scalar::approx(1.0L + 1e-9L));
    const double old = approx_tolerance();
    set_approx_tolerance(1e-8);
    CHECK(a == Scalar::approx(1.0L + 1e-9L));
    set_approx_tolerance(old);
  }

  TEST_CASE("make examples") {
    const StepFunction g = StepFunction::make({{q(0), q(2), Scalar(1)}, {q(2), q(3), Scalar(-1)}});
    CHECK(g.size() == 2);
    CHECK(g.support_hull()->first == 0);
    CHECK(g.support_hull()->second == 3);
    const StepFunction merged = StepFunction::make({{q(0), q(1), Scalar(1)}, {q(1), q(2), Scalar(1)}});
    CHECK(merged.size() == 1);
    CHECK(merged == chi(0, 2));
    CHECK(StepFunction::make({{q(0), q(1), Scalar(0)}}).empty());
  }

  TEST_CASE("make rejects bad pieces") {
    CHECK_THROWS_AS(StepFunction::make({{q(1), q(1), Scalar(1)}}), InputError);
    CHECK_THROWS_AS(StepFunction::make({{q(2), q(1), Scalar(1)}}), InputError);
    CHECK_THROWS_AS(StepFunction::make({{q(0), q(2), Scalar(1)}, {q(1), q(3), Scalar(2)}}), InputError);
    CHECK_NOTHROW(StepFunction::make({{q(0), q(2), Scalar(1)}, {q(1), q(3), Scalar(1)}}));
  }

  TEST_CASE("translate and dilate") {
    CHECK(translate(chi(0, 1), q(1)) == chi(1, 2));
    oracle::Generator gen(11);
    for (int i = 0; i < 50; ++i) {
      const StepFunction f = gen.step(q(-3), q(3), 4, 5, true);
      const Rational s = gen.rational(-20, 20, 7);
      CHECK(translate(f, q(0)) == f);
      CHECK(translate(translate(f, s), -s) == f);
      CHECK(norm_sq(translate(f, s)) == norm_sq(f));
      const Rational r = gen.rational(1, 20, 6);
      CHECK(norm_sq(dilate(f, r)) == Scalar(r) * norm_sq(f));
      CHECK(dilate(f, q(1)) == f);
    }
    CHECK(dilate(StepFunction::indicator(q(0), q(3, 4)), q(2)) == StepFunction::indicator(q(0), q(3, 2)));
    CHECK(norm_sq(dilate(chi(0, 1), q(3))) == Scalar(3));
    CHECK_THROWS_AS(dilate(chi(0, 1), q(0)), InputError);
    CHECK_THROWS_AS(dilate(chi(0, 1), q(-1)), InputError);
  }

  TEST_CASE("pointwise algebra examples") {
    CHECK(mul(chi(0, 2), chi(1, 3)) == chi(1, 2));
    const StepFunction f = StepFunction::make({{q(0), q(2), Scalar(1)}, {q(2), q(3), Scalar(-1)}});
    CHECK(add(f, scale(f, Scalar(-1))).empty());
    CHECK(conj(f) == f);
    CHECK(norm_sq(f) == Scalar(3));
    CHECK(integral(chi(0, 3)) == Scalar(3));
    CHECK(norm_sq(riesz_witness(2, 7)) == Scalar(2));
  }

  TEST_CASE("mixed modes coerce to approx with a warning flag") {
    const StepFunction e = chi(0, 1);
    const StepFunction x = StepFunction::indicator(q(0), q(1), Scalar::approx(0.5L));
    const StepFunction s = add(e, x);
    CHECK_FALSE(s.is_exact());
    CHECK(s.mixed_mode_warning());
    CHECK_FALSE(add(e, e).mixed_mode_warning());
  }

  TEST_CASE("canonical form is idempotent") {
    oracle::Generator gen(5);
    for (int i = 0; i < 100; ++i) {
      const StepFunction f = gen.step(q(-4), q(4), 3, 8, i % 2 == 0);
      std::vector<Piece> ps(f.pieces().begin(), f.pieces().end());
      CHECK(StepFunction::make(ps) == f);
      // Splitting every piece in two leaves the canonical form unchanged.
      std::vector<Piece> split;
      for (const Piece& p : f.pieces()) {
        const Rational mid = (p.lo + p.hi) / 2;
        split.push_back({p.lo, mid, p.value});
        split.push_back({mid, p.hi, p.value});
      }
      CHECK(StepFunction::make(split) == f);
    }
  }

  TEST_CASE("telescoping witness norm") {
    for (std::int64_t n = 2; n <= 6; ++n)
      for (std::int64_t k = 1; k <= 20; ++k) CHECK(norm_sq(riesz_witness(n, k)) == Scalar(2));
  }

  TEST_CASE("algebra agrees with pointwise evaluation") {
    oracle::Generator gen(2024);
    for (int trial = 0; trial < 10; ++trial) {
      const StepFunction f = gen.step(q(-2), q(3), 6, 7, true);
      const StepFunction g = gen.step(q(-1), q(4), 4, 7, true);
      const auto rf = oracle::raw(f), rg = oracle::raw(g);
      const StepFunction s = add(f, g), p = mul(f, g), c = conj(f);
      for (int i = 0; i < 100; ++i) {
        const Rational t = gen.rational(-300, 500, 97);
        const auto [fr, fi] = oracle::eval(rf, t);
        const auto [gr, gi] = oracle::eval(rg, t);
        CHECK(s(t) == Scalar(fr + gr, fi + gi));
        CHECK(p(t) == Scalar(fr * gr - fi * gi, fr * gi + fi * gr));
        CHECK(c(t) == Scalar(fr, -fi));
      }
    }
  }

  TEST_CASE("norm_sq is the piece sum") {
    oracle::Generator gen(9);
    for (int i = 0; i < 30; ++i) {
      const StepFunction f = gen.step(q(0), q(5), 5, 6, true);
      Rational s(0);
      for (const auto& p : oracle::raw(f)) s += (p.hi - p.lo) * (p.re * p.re + p.im * p.im);
      CHECK(norm_sq(f) == Scalar(s));
    }
  }

  TEST_CASE("periodic functions") {
    const PeriodicStepFunction p(q(1), StepFunction::indicator(q(0), q(1, 2), Scalar(2)));
    oracle::Generator gen(3);
    for (int i = 0; i < 50; ++i) {
      const Rational t = gen.rational(-100, 100, 13);
      CHECK(p(t) == p(t + 1));
      CHECK(p(t) == p(t - 3));
    }
    CHECK(p.has_gaps());
    CHECK(p.ess_inf() == Scalar(0));
    CHECK(p.ess_sup() == Scalar(2));
    const PeriodicStepFunction full = PeriodicStepFunction::constant(q(1), Scalar(3));
    CHECK_FALSE(full.has_gaps());
    CHECK(full.ess_inf() == Scalar(3));
    CHECK(p.tile(q(0), q(2)) == add(StepFunction::indicator(q(0), q(1, 2), Scalar(2)),
                                    StepFunction::indicator(q(1), q(3, 2), Scalar(2))));
    CHECK(p.rewrap(q(1, 2)) == PeriodicStepFunction::constant(q(1, 2), Scalar(2)));
    CHECK(p.rewrap(q(2)) == PeriodicStepFunction(q(2), StepFunction::indicator(q(0), q(1, 2), Scalar(2)) +
                                                           StepFunction::indicator(q(1), q(3, 2), Scalar(2))));
    CHECK_THROWS_AS(PeriodicStepFunction(q(1), chi(0, 2)), InputError);
  }
}
