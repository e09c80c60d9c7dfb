#include <doctest.h>

#include "gabor/conditions.hpp"
#include "gabor/fundamental.hpp"
#include "gabor/witnesses.hpp"
#include "oracles.hpp"

using namespace gabor;

namespace {

Rational q(long n, long d = 1) { return Rational(n) / d; }
StepFunction chi(const Rational& lo, const Rational& hi, Scalar v = Scalar(1)) {
  return StepFunction::indicator(lo, hi, v);
}
StepFunction up_down() { return chi(q(0), q(2)) - chi(q(2), q(3)); }
GaborSystem unit(const StepFunction& g) { return GaborSystem(g, q(1), q(1)); }

}  // namespace

TEST_SUITE("conditions") {
  TEST_CASE("cc_bounds examples") {
    const CcReport r = cc_bounds(unit(up_down()));
    CHECK(r.a_raw == Scalar(1));
    CHECK(r.b_raw == Scalar(5));
    CHECK(r.frame_lower == Scalar(1));
    CHECK(r.frame_upper == Scalar(5));
    CHECK(r.verdict == CcVerdict::FrameCertified);
    CHECK_FALSE(r.nonneg_necessary);
    CHECK_FALSE(r.necessity_verdict.has_value());

    const CcReport one = cc_bounds(unit(chi(q(0), q(1))));
    CHECK(one.a_raw == Scalar(1));
    CHECK(one.b_raw == Scalar(1));
    CHECK(one.verdict == CcVerdict::FrameCertified);

    const CcReport three = cc_bounds(unit(chi(q(0), q(3))));
    CHECK(three.a_raw == Scalar(-3));
    CHECK(three.b_raw == Scalar(9));
    CHECK(three.verdict == CcVerdict::Inconclusive);
    CHECK(three.nonneg_necessary);
    CHECK(three.necessity_verdict == FrameStatus::NotFrame);
  }

  TEST_CASE("cc_bounds scale with b") {
    // (chi[0,1), 1/2, 1): G_0 = 2, all other G_k vanish.
    const CcReport r = cc_bounds(GaborSystem(chi(q(0), q(1)), q(1, 2), q(1)));
    CHECK(r.frame_lower == Scalar(2));
    CHECK(r.frame_upper == Scalar(2));
    const CcReport s = cc_bounds(GaborSystem(chi(q(0), q(1, 2)), q(1, 2), q(2)));
    CHECK(s.a_raw == Scalar(1));
    CHECK(s.frame_lower == Scalar(q(1, 2)));
  }

  TEST_CASE("g0 bounds examples") {
    const auto [lo, hi] = g0_bounds(GaborSystem(chi(q(0), q(3, 4)), q(1, 2), q(1)));
    CHECK(lo == Scalar(1));
    CHECK(hi == Scalar(2));
    const auto [lo2, hi2] = g0_bounds(unit(up_down()));
    CHECK(lo2 == Scalar(3));
    CHECK(hi2 == Scalar(3));
    const auto [lo3, hi3] = g0_bounds(unit(chi(q(0), q(1, 2))));
    CHECK(lo3 == Scalar(0));
    CHECK(hi3 == Scalar(1));
    CHECK(g0_verdict(unit(chi(q(0), q(1, 2)))).status == FrameStatus::NotFrame);
    CHECK(g0_verdict(unit(up_down())).status == FrameStatus::Inconclusive);
  }

  TEST_CASE("two-overlap examples") {
    const FrameVerdict v1 = two_overlap_verdict(chi(q(0), q(2)));
    CHECK(v1.status == FrameStatus::NotFrame);
    CHECK(v1.rule == "Prop2.1");
    CHECK(v1.margin == Scalar(0));
    CHECK(two_overlap_verdict(chi(q(0), q(1)) - chi(q(1), q(2))).status == FrameStatus::NotFrame);
    const FrameVerdict v3 = two_overlap_verdict(chi(q(0), q(1)) + chi(q(1), q(2), Scalar(2)));
    CHECK(v3.status == FrameStatus::Frame);
    CHECK(v3.margin == Scalar(1));
    REQUIRE(v3.bounds.has_value());
    CHECK(v3.bounds->first == Scalar(1));
    CHECK(v3.bounds->second == Scalar(9));
    CHECK_THROWS_AS(two_overlap_verdict(chi(q(0), q(3))), NotApplicable);
    CHECK(max_integer_overlap(chi(q(0), q(3))) == 3);
    CHECK(max_integer_overlap(chi(q(0), q(1, 2))) == 1);
  }

  TEST_CASE("two-overlap verdict agrees with the CC-condition") {
    oracle::Generator gen(17);
    int frames = 0, not_frames = 0;
    for (int i = 0; i < 200; ++i) {
      const StepFunction g = gen.step(q(0), q(2), 2, 4, i % 3 == 0);
      if (g.empty() || max_integer_overlap(g) > 2) continue;
      const FrameVerdict v = two_overlap_verdict(g);
      const CcReport cc = cc_bounds(unit(g));
      CHECK((v.status == FrameStatus::Frame) == (cc.verdict == CcVerdict::FrameCertified));
      (v.status == FrameStatus::Frame ? frames : not_frames)++;
    }
    CHECK(frames > 5);
    CHECK(not_frames > 5);
  }

  TEST_CASE("small periodization obstruction examples") {
    const FrameVerdict v = small_periodization_obstruction(chi(q(0), q(2), Scalar(q(1, 2))) - chi(q(2), q(3)),
                                                           Scalar(q(1, 100)));
    CHECK(v.status == FrameStatus::NotFrame);
    CHECK(v.rule == "Prop2.2");
    CHECK(small_periodization_obstruction(chi(q(0), q(1)) - chi(q(1), q(2)), Scalar(q(1, 100))).status ==
          FrameStatus::NotFrame);
    const FrameVerdict w = small_periodization_obstruction(up_down(), Scalar(q(1, 100)));
    CHECK(w.status == FrameStatus::Inconclusive);
    CHECK(w.margin == Scalar(1));
  }

  TEST_CASE("obstruction witnesses decay") {
    const StepFunction g = chi(q(0), q(2), Scalar(q(1, 2))) - chi(q(2), q(3));
    const GaborSystem sys = unit(g);
    const StepFunction e = chi(q(0), q(1));
    Scalar prev = energy_ratio(p3_witness(e, 2), sys);
    for (std::int64_t n = 4; n <= 64; n *= 2) {
      const Scalar r = energy_ratio(p3_witness(e, n), sys);
      CHECK(r < prev);
      CHECK(r * Scalar(n + 1) <= Scalar(20));
      prev = r;
    }
  }

  TEST_CASE("CC soundness on random test functions") {
    oracle::Generator gen(123);
    const std::vector<GaborSystem> systems = {
        unit(up_down()), unit(chi(q(0), q(1)) + chi(q(1), q(2), Scalar(2))),
        GaborSystem(chi(q(0), q(1)), q(1, 2), q(1)), GaborSystem(chi(q(0), q(3, 4)), q(1, 2), q(1)),
        GaborSystem(chi(q(0), q(1), Scalar(q(0), q(1))) + chi(q(1), q(3, 2), Scalar(3)), q(1), q(1, 2))};
    for (const GaborSystem& sys : systems) {
      const CcReport r = cc_bounds(sys);
      REQUIRE(r.verdict == CcVerdict::FrameCertified);
      for (int i = 0; i < 50; ++i) {
        const StepFunction f = gen.step(q(-3), q(4), 4, 6, true);
        const Scalar ratio = energy_ratio(f, sys);
        CHECK(r.frame_lower <= ratio);
        CHECK(ratio <= r.frame_upper);
      }
    }
  }

  TEST_CASE("thm53 residual") {
    CHECK(thm53_residual(unit(chi(q(0), q(1))), Scalar(1)).max == Scalar(0));
    CHECK(thm53_residual(unit(chi(q(0), q(1))), Scalar(1)).residual.is_zero());
    CHECK(thm53_residual(unit(up_down()), Scalar(5)).max <= Scalar(0));
    CHECK_THROWS_AS(thm53_residual(unit(up_down()), std::nullopt), InputError);
  }

  TEST_CASE("thm53 necessity on certified systems") {
    oracle::Generator gen(61);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
      const StepFunction g = gen.step(q(0), q(3), 2, 4, i % 2 == 0);
      const Rational a = gen.rational(1, 4, 2), b = gen.rational(1, 4, 4);
      if (a * b > 1) continue;
      const GaborSystem sys(g, a, b);
      const CcReport r = cc_bounds(sys);
      if (r.verdict != CcVerdict::FrameCertified) continue;
      ++checked;
      CHECK(thm53_residual(sys, r.frame_upper).max <= Scalar(0));
    }
    CHECK(checked > 3);
  }

  TEST_CASE("thm53 residual stays bounded on the harmonic window") {
    long double prev_upper = 0;
    for (std::int64_t n = 16; n <= 1024; n *= 4) {
      const GaborSystem sys = unit(harmonic_window(n));
      const Thm53Residual r = thm53_residual(sys, Scalar(16));
      CHECK(r.max.real_value() <= 0);
      const long double upper = cc_bounds(sys).b_raw.real_value();
      CHECK(upper > prev_upper + 0.5L);
      prev_upper = upper;
    }
  }

  TEST_CASE("prop55 averages") {
    for (std::int64_t m = 1; m <= 8; ++m) {
      CHECK(prop55_average(unit(chi(q(0), q(1))), m) == Scalar(q(2 * m + 1, 2 * m)));
      CHECK(prop55_average(unit(chi(q(0), q(1)) - chi(q(1), q(2))), m) == Scalar(q(1, m)));
    }
    CHECK(prop55_average(StepFunction(), q(1), q(1), 3) == Scalar(0));
    CHECK_THROWS_AS(prop55_average(unit(chi(q(0), q(1))), 0), InputError);
  }
}
