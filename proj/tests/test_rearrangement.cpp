#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "orlicz/rearrangement.hpp"
#include "support/generators.hpp"

using namespace orlicz;

namespace {

// f* by sorting the pieces by decreasing value.
std::vector<Piece> sorted_pieces(const SampledFn& f) {
  std::vector<Piece> ps;
  for (const Piece& p : f.pieces()) {
    if (p.value != 0.0 && p.width > 0.0) ps.push_back({std::abs(p.value), p.width});
  }
  std::stable_sort(ps.begin(), ps.end(), [](const Piece& a, const Piece& b) { return a.value > b.value; });
  return ps;
}

double fstar_oracle(const SampledFn& f, double t) {
  double start = 0.0;
  for (const Piece& p : sorted_pieces(f)) {
    if (t < start + p.width) return p.value;
    start += p.width;
  }
  return 0.0;
}

double lp_oracle(const SampledFn& f, double p) {
  double s = 0.0;
  for (const Piece& q : f.pieces()) s += std::pow(std::abs(q.value), p) * q.width;
  return std::pow(s, 1.0 / p);
}

// Midpoint sum of the integrand of the Lorentz functional over a fine log grid plus
// exact contributions of each constant stretch of f*.
double lorentz_oracle(const SampledFn& f, double p, double q) {
  double total = 0.0;
  double start = 0.0;
  for (const Piece& piece : sorted_pieces(f)) {
    const double a = start;
    const double b = start + piece.width;
    // integral_a^b t^{q/p - 1} dt * v^q
    const double e = q / p;
    total += std::pow(piece.value, q) * (std::pow(b, e) - std::pow(a, e)) / e;
    start = b;
  }
  return std::pow(total, 1.0 / q);
}

}  // namespace

TEST_CASE("decreasing rearrangement sorts the pieces") {
  testgen::Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const SampledFn f = testgen::random_step(rng, kInf);
    const DecreasingFn fs = rearrange(f);
    for (double t = 1e-3; t < 200.0; t *= 1.7) CHECK(fs(t) == doctest::Approx(fstar_oracle(f, t)));
  }
}

TEST_CASE("distribution function is the measure of the superlevel set") {
  const SampledFn f({{3.0, 0.5}, {1.0, 1.0}, {3.0, 0.25}});
  const DistributionFn d = distribution(f);
  CHECK(d(0.0) == doctest::Approx(1.75));
  CHECK(d(1.0) == doctest::Approx(0.75));
  CHECK(d(2.9) == doctest::Approx(0.75));
  CHECK(d(3.0) == 0.0);
}

TEST_CASE("maximal function is the running average of f*") {
  testgen::Rng rng(102);
  for (int trial = 0; trial < 30; ++trial) {
    const SampledFn f = testgen::random_step(rng, kInf);
    const MaximalFn m = maximal(f);
    const DecreasingFn fs = rearrange(f);
    for (double t = 1e-3; t < 100.0; t *= 2.3) CHECK(m(t) == doctest::Approx(fs.integral_to(t) / t).epsilon(1e-12));
  }
}

TEST_CASE("Luxemburg norm for a power Young function is the L^p norm") {
  testgen::Rng rng(103);
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    const YoungFn a = young_power(p);
    for (int trial = 0; trial < 10; ++trial) {
      const SampledFn f = testgen::random_step(rng, 1.0);
      CHECK(luxemburg_norm(f, a) == doctest::Approx(lp_oracle(f, p)).epsilon(1e-10));
    }
  }
}

TEST_CASE("modular sums A over the pieces") {
  const SampledFn f({{2.0, 0.5}, {1.0, 0.25}});
  CHECK(modular(f, young_power(2.0)) == doctest::Approx(4.0 * 0.5 + 0.25));
  CHECK(modular(f, young_power(2.0), 0.5) == doctest::Approx(0.5 + 0.0625));
  CHECK(modular(f, young_linfty(1.5)) == kInf);
}

TEST_CASE("Lambda and Marcinkiewicz norms of a characteristic function") {
  for (double p : {1.0, 2.0, 3.0}) {
    const QuasiConvexFn e = make_quasi_convex(GeneratorSpec::power(p));
    for (double m : {1e-3, 0.5, 20.0}) {
      const SampledFn chi = SampledFn::characteristic(m);
      const double level = std::pow(m, 1.0 / p);
      CHECK(lambda_norm(chi, e) == doctest::Approx(level).epsilon(1e-9));
      CHECK(marcinkiewicz_norm(chi, e) == doctest::Approx(level).epsilon(1e-9));
    }
  }
}

TEST_CASE("Lorentz functional matches the integral of the step profile") {
  testgen::Rng rng(104);
  for (int trial = 0; trial < 20; ++trial) {
    const SampledFn f = testgen::random_step(rng, 1.0);
    for (auto [p, q] : {std::pair{2.0, 1.0}, {3.0, 2.0}, {1.5, 4.0}}) {
      CHECK(lorentz_functional(f, p, q) == doctest::Approx(lorentz_oracle(f, p, q)).epsilon(1e-10));
    }
  }
}

TEST_CASE("Lorentz L^{p,p} is the L^p norm") {
  testgen::Rng rng(105);
  for (int trial = 0; trial < 10; ++trial) {
    const SampledFn f = testgen::random_step(rng, 1.0);
    CHECK(lorentz_functional(f, 2.0, 2.0) == doctest::Approx(lp_oracle(f, 2.0)).epsilon(1e-10));
  }
}

TEST_CASE("weak-type functional is the supremum of t^{1/p} f*(t)") {
  const SampledFn f({{4.0, 0.25}, {1.0, 0.75}});
  // t^{1/2} f*: 4 * 0.5 = 2 at t = 0.25, 1 at t = 1.
  CHECK(lorentz_functional(f, 2.0, kInf) == doctest::Approx(2.0));
}

TEST_CASE("classical Lorentz norm with a constant weight on a set") {
  const SampledFn w({{1.0, 0.5}}, 1.0);
  const SampledFn f({{3.0, 0.25}, {2.0, 0.5}}, 1.0);
  // f* = 3 on (0, 0.25), 2 on (0.25, 0.75); w = 1 on (0, 0.5).
  CHECK(classical_lorentz_norm(f, w, 1.0) == doctest::Approx(3.0 * 0.25 + 2.0 * 0.25));
  CHECK(classical_lorentz_norm(f, w, 2.0) == doctest::Approx(std::sqrt(9.0 * 0.25 + 4.0 * 0.25)));
}

TEST_CASE("Hoelder inequality with constant 2 for complementary Young functions") {
  testgen::Rng rng(106);
  for (int trial = 0; trial < 30; ++trial) {
    const YoungFn a = testgen::random_young(rng);
    const YoungFn c = a.conjugate();
    std::vector<Piece> fp;
    std::vector<Piece> gp;
    const int k = testgen::integer(rng, 1, 6);
    for (int i = 0; i < k; ++i) {
      const double w = testgen::uniform(rng, 0.01, 0.2);
      fp.push_back({testgen::log_uniform(rng, 0.1, 10.0), w});
      gp.push_back({testgen::log_uniform(rng, 0.1, 10.0), w});
    }
    double inner = 0.0;
    for (int i = 0; i < k; ++i) inner += fp[i].value * gp[i].value * fp[i].width;
    const double bound = 2.0 * luxemburg_norm(SampledFn(fp, 1.0), a) * luxemburg_norm(SampledFn(gp, 1.0), c);
    CHECK(inner <= bound * (1.0 + 1e-9));
  }
}

TEST_CASE("gauge inverts a homogeneous functional") {
  CHECK(gauge([](double s) { return 4.0 * s * s; }) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(gauge([](double) { return 0.0; }) == 0.0);
}

TEST_CASE("power tails enter the rearrangement above every step") {
  const SampledFn f({{1.0, 0.5}}, 1.0, PowerTail{1.0, 0.5, 0.25});
  const DecreasingFn fs = rearrange(f);
  CHECK(fs(0.01) == doctest::Approx(10.0));
  CHECK(fs(0.5) == doctest::Approx(1.0));
  CHECK(fs.integral_to(0.25) == doctest::Approx(2.0 * 0.5));
}
