#include <cmath>

#include "doctest.h"
#include "orlicz/young.hpp"
#include "support/generators.hpp"

using namespace orlicz;

namespace {

// sup_{t >= 0} (s t - A(t)) by golden-section search on a log scale; A convex, so
// s t - A(t) is concave and unimodal.
double brute_conjugate(const YoungFn& a, double s) {
  double lo = -30.0;
  double hi = 30.0;
  auto g = [&](double u) {
    const double t = std::exp(u);
    const double v = a(t);
    return v == kInf ? -kInf : s * t - v;
  };
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 200; ++i) {
    const double m1 = hi - r * (hi - lo);
    const double m2 = lo + r * (hi - lo);
    if (g(m1) < g(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return std::max(0.0, g(0.5 * (lo + hi)));
}

}  // namespace

TEST_CASE("power Young function values, derivative and descriptors") {
  const YoungFn a = young_power(3.0);
  CHECK(a(2.0) == doctest::Approx(8.0));
  CHECK(a.derivative_at(2.0) == doctest::Approx(12.0));
  CHECK(a(0.0) == 0.0);
  CHECK(a.is_pure_power());
  CHECK(a.describe() == "Young[0: t^3; inf: t^3]");
}

TEST_CASE("conjugate of t^p matches the closed form") {
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    const double pc = p / (p - 1.0);
    const YoungFn c = young_power(p).conjugate();
    for (double s : {1e-3, 0.5, 1.0, 7.0, 1e3}) {
      const double expected = (p - 1.0) * std::pow(s / p, pc);
      CHECK(c(s) == doctest::Approx(expected).epsilon(1e-10));
    }
    CHECK(c.infinity_descriptor() == AsymptoticDescriptor::power_log(pc, 0.0));
  }
}

TEST_CASE("conjugate agrees with a brute-force supremum on random Young functions") {
  testgen::Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const YoungFn a = testgen::random_young(rng);
    const YoungFn c = a.conjugate();
    for (double s : {1e-2, 0.3, 2.0, 40.0}) {
      const double expected = brute_conjugate(a, s);
      CHECK(c(s) == doctest::Approx(expected).epsilon(1e-6).scale(1e-12));
    }
  }
}

TEST_CASE("the conjugate of t is the L-infinity generator") {
  const YoungFn c = young_power(1.0).conjugate();
  CHECK(c(0.5) == 0.0);
  CHECK(c(1.0) == 0.0);
  CHECK(c(1.5) == kInf);
  CHECK(c.infinity_descriptor() == AsymptoticDescriptor::infinite_beyond(1.0));
}

TEST_CASE("L-infinity generator and its inverses") {
  const YoungFn a = young_linfty(2.0);
  CHECK(a(1.0) == 0.0);
  CHECK(a(2.0) == 0.0);
  CHECK(a(2.5) == kInf);
  CHECK(a.right_inverse_at(0.0) == doctest::Approx(2.0));
  CHECK(a.left_inverse_at(0.0) == 0.0);
  CHECK(a.right_inverse_at(5.0) == doctest::Approx(2.0));
}

TEST_CASE("inverse product lies between t and 2t on random Young functions") {
  testgen::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const YoungFn a = testgen::random_young(rng);
    const YoungFn c = a.conjugate();
    for (double t = 1e-6; t <= 1e6; t *= 3.7) {
      const double prod = a.right_inverse_at(t) * c.right_inverse_at(t);
      CHECK(prod >= t * (1.0 - 1e-9));
      CHECK(prod <= 2.0 * t * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("level function of t^p is s^{1/p}") {
  const YoungFn a = young_power(4.0);
  for (double s : {1e-4, 0.1, 1.0, 100.0}) CHECK(a.fundamental_at(s) == doctest::Approx(std::pow(s, 0.25)));
  CHECK(a.fundamental_at(0.0) == 0.0);
}

TEST_CASE("youngify integrates E(t)/t") {
  const QuasiConvexFn e(MonotoneFn::power(1.0, 2.0));
  const YoungFn a = youngify(e);
  CHECK(a(3.0) == doctest::Approx(4.5));
  CHECK(a(0.1) == doctest::Approx(0.005));
}

TEST_CASE("quasi-convex validation rejects decreasing F(t)/t") {
  CHECK_THROWS_AS(QuasiConvexFn(MonotoneFn::power(1.0, 0.5)), Error);
}

TEST_CASE("growth conditions on the standard classes") {
  CHECK(delta2(young_power(3.0), Regime::Global).holds_p());
  CHECK(delta2(make_young(GeneratorSpec::exponential(1.0)), Regime::NearInfinity).fails_p());
  CHECK(nabla2(young_power(1.0), Regime::NearInfinity).fails_p());
  CHECK(nabla2(young_power(2.0), Regime::Global).holds_p());
}

TEST_CASE("domination near infinity follows the exponent order") {
  const YoungFn a3 = young_power(3.0);
  const YoungFn a2 = young_power(2.0);
  CHECK(dominates(a3, a2, Regime::NearInfinity).holds_p());
  CHECK(dominates(a2, a3, Regime::NearInfinity).fails_p());
  CHECK(dominates(a2, a3, Regime::NearZero).holds_p());
  const YoungFn ex = make_young(GeneratorSpec::exponential(2.0));
  CHECK(dominates(ex, a3, Regime::NearInfinity).holds_p());
}

TEST_CASE("power-log generator carries its descriptors") {
  const YoungFn a = make_young(GeneratorSpec::power_log(2.0, 1.0, 2.0, 0.0));
  CHECK(a.infinity_descriptor() == AsymptoticDescriptor::power_log(2.0, 1.0));
  CHECK(a.zero_descriptor() == AsymptoticDescriptor::power_log(2.0, 0.0));
  const double ratio = a(1e6) / (1e12 * std::log(1e6));
  CHECK(ratio > 1.0 / 16.0);
  CHECK(ratio < 16.0);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(young_power(0.5), Error);
  CHECK_THROWS_AS(young_linfty(0.0), Error);
  CHECK_THROWS_AS(make_young(GeneratorSpec::tabulated({{1.0, 1.0}})), Error);
}
