#include <doctest.h>

#include <cmath>

#include "gabor/frameset.hpp"
#include "oracles.hpp"

using namespace gabor;

namespace {

Rational q(long n, long d = 1) { return Rational(n) / d; }

constexpr double kMin013 = 0.6073464337256564;

std::vector<std::vector<std::int64_t>> subsets_of_0_to_5() {
  std::vector<std::vector<std::int64_t>> out;
  for (int mask = 1; mask < 64; ++mask) {
    std::vector<std::int64_t> s;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_SUITE("frameset") {
  TEST_CASE("exponent sets") {
    CHECK_THROWS_AS(ExponentSet({}), InputError);
    CHECK_THROWS_AS(ExponentSet({0, 0}), InputError);
    CHECK_THROWS_AS(ExponentSet({2, 1}), InputError);
    const ExponentSet e({-3, -1, 2});
    const ExponentSet z = e.normalized();
    CHECK(std::vector<std::int64_t>(z.exps().begin(), z.exps().end()) == std::vector<std::int64_t>{0, 2, 5});
    CHECK(z.polynomial() == poly::Poly({q(1), q(0), q(1), q(0), q(0), q(1)}));
    CHECK(ExponentSet({0, 1, 3}).indicator() ==
          StepFunction::indicator(q(0), q(2)) + StepFunction::indicator(q(3), q(4)));
    CHECK(ExponentSet({0, 2}).lift(StepFunction::indicator(q(0), q(1, 2))) ==
          StepFunction::indicator(q(0), q(1, 2)) + StepFunction::indicator(q(2), q(5, 2)));
    CHECK_THROWS_AS(ExponentSet({0}).lift(StepFunction::indicator(q(0), q(2))), InputError);
  }

  TEST_CASE("circle_range examples") {
    const CertifiedRange one = circle_range(ExponentSet({0}));
    CHECK(one.min.lower == 1.0);
    CHECK(one.min.upper == 1.0);
    CHECK(one.max.lower == 1.0);

    const CertifiedRange cube = circle_range(ExponentSet({0, 1, 2}));
    CHECK(cube.min.lower == 0.0);
    CHECK(cube.min_is_zero);
    CHECK(cube.max.lower == 3.0);
    CHECK(cube.max.upper == 3.0);
    CHECK(std::fabs(std::fabs(cube.argmin - std::numbers::pi) - std::numbers::pi / 3) < 1e-4);

    const CertifiedRange r = circle_range(ExponentSet({0, 1, 3}));
    CHECK(r.min.lower > 0);
    CHECK(r.min.width() <= 1e-9);
    CHECK(r.min.lower <= kMin013);
    CHECK(kMin013 <= r.min.upper);
    CHECK(r.max.upper == 3.0);
    CHECK(r.certificate.converged);
    CHECK(r.certificate.lipschitz == 4.0);
    CHECK(r.certificate.curvature == 10.0);
    CHECK_THROWS_AS(circle_range(ExponentSet({0, 1}), 0.0), InputError);
  }

  TEST_CASE("min modulus agrees with dense sampling") {
    for (const auto& s : subsets_of_0_to_5()) {
      const CertifiedRange r = circle_range(ExponentSet(s));
      const auto [sampled, arg] = oracle::sampled_min_modulus(s, 20000);
      CHECK(r.min.lower <= sampled + 1e-12);
      // The sample grid misses the true minimum by at most L * step / 2.
      const double slack = 30.0 * std::numbers::pi / 20000;
      CHECK(r.min.upper >= sampled - slack);
    }
  }

  TEST_CASE("exact circle zero examples") {
    CHECK(exact_circle_zero(ExponentSet({0, 1, 2})) == CircleZero::Yes);
    CHECK(exact_circle_zero(ExponentSet({0, 2})) == CircleZero::Yes);
    CHECK(exact_circle_zero(ExponentSet({0, 1})) == CircleZero::Yes);
    CHECK(exact_circle_zero(ExponentSet({0, 1, 3})) == CircleZero::No);
    CHECK(exact_circle_zero(ExponentSet({0})) == CircleZero::No);
    // 1 + z + z^2 + z^3 + z^4 + z^5 vanishes at -1 and at sixth roots of unity.
    CHECK(exact_circle_zero(ExponentSet({0, 1, 2, 3, 4, 5})) == CircleZero::Yes);
  }

  TEST_CASE("exact decision agrees with the enclosure on every subset of {0..5}") {
    int yes = 0, no = 0;
    for (const auto& s : subsets_of_0_to_5()) {
      const ExponentSet e(s);
      const bool zero = exact_circle_zero(e) == CircleZero::Yes;
      for (double tol : {1e-3, 1e-6, 1e-9}) {
        const CertifiedRange r = circle_range(e, tol);
        CHECK((r.min.lower <= 0.0) == zero);
        if (!zero) CHECK(r.min.width() <= tol);
      }
      (zero ? yes : no)++;
    }
    CHECK(yes > 0);
    CHECK(no > 0);
  }

  TEST_CASE("is_frame_set examples") {
    const FrameVerdict two = is_frame_set(ExponentSet({0, 1}));
    CHECK(two.status == FrameStatus::NotFrame);
    CHECK(two.rule == "Thm4.2");
    CHECK(two.witness.has_value());
    CHECK(is_frame_set(ExponentSet({0, 1, 2})).status == FrameStatus::NotFrame);
    const FrameVerdict single = is_frame_set(ExponentSet({0}));
    CHECK(single.status == FrameStatus::Frame);
    REQUIRE(single.bounds.has_value());
    CHECK(single.bounds->first == Scalar(1));
    CHECK(single.bounds->second == Scalar(1));
    const FrameVerdict v = is_frame_set(ExponentSet({0, 1, 3}));
    CHECK(v.status == FrameStatus::Frame);
    REQUIRE(v.bounds.has_value());
    CHECK(std::fabs(static_cast<double>(v.bounds->first.real_value()) - kMin013 * kMin013) < 1e-8);
    CHECK(v.bounds->second == Scalar(9));
  }

  TEST_CASE("shift invariance") {
    for (const auto& s : subsets_of_0_to_5()) {
      const ExponentSet e(s);
      const FrameVerdict base = is_frame_set(e);
      for (std::int64_t c : {-7, -1, 3, 11}) {
        const FrameVerdict moved = is_frame_set(e.shifted(c));
        CHECK(moved.status == base.status);
        if (base.bounds) CHECK(moved.bounds->first == base.bounds->first);
      }
    }
  }

  TEST_CASE("frame bounds hold for test functions on F") {
    oracle::Generator gen(404);
    for (const std::vector<std::int64_t>& s : {std::vector<std::int64_t>{0, 1, 3}, {0, 2, 3}, {0, 1, 4}}) {
      const ExponentSet e(s);
      const FrameSetReport rep = frame_set_report(e);
      REQUIRE(rep.verdict.status == FrameStatus::Frame);
      const StepFunction chi_f = e.indicator();
      const GaborSystem sys(chi_f, q(1), q(1));
      for (int i = 0; i < 20; ++i) {
        const StepFunction f = mul(gen.step(q(0), q(s.back() + 1), 6, 8, true), chi_f);
        if (f.empty()) continue;
        const long double r = energy_ratio(f, sys).real_value();
        CHECK(r >= rep.lower_bound.lower - 1e-9);
        CHECK(r <= rep.upper_bound.upper + 1e-9);
      }
    }
  }

  TEST_CASE("polynomial helpers") {
    using poly::Poly;
    const Poly p({q(-1), q(0), q(1)});  // x^2 - 1
    CHECK(poly::count_real_roots(p, q(-2), q(2)) == 2);
    CHECK(poly::count_real_roots(p, q(0), q(2)) == 1);
    const Poly r({q(1), q(1)});
    CHECK(poly::gcd(p, r) == r);
    const auto dm = poly::divmod(p, r);
    CHECK(dm.quotient == Poly({q(-1), q(1)}));
    CHECK(dm.remainder.is_zero());
    // z^2 + z + 1 -> z + 1/z + 1
    CHECK(poly::palindromic_to_trace(Poly({q(1), q(1), q(1)})) == Poly({q(1), q(1)}));
  }
}
