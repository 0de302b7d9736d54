#include <cmath>

#include "doctest.h"
#include "orlicz/diagonality.hpp"
#include "support/generators.hpp"

using namespace orlicz;

namespace {

// A(t) = max(t, t^3): derivative 1 on (0, 1], 3 t^2 beyond.
YoungFn linear_then_cubic() {
  std::vector<Vertex> vs{{0.0, 1.0}, {1.0, 1.0}, {1.0, 3.0}, {kInf, kInf}};
  Edge flat;
  Edge jump;
  jump.kind = EdgeKind::Jump;
  Edge cubic;
  cubic.kind = EdgeKind::Power;
  cubic.k = 2.0;
  cubic.anchor_t = 1.0;
  cubic.anchor_v = 3.0;
  return YoungFn::from_derivative(MonotoneFn::from_chain(vs, {flat, jump, cubic}));
}

QuasiConvexFn power_generator(double p) { return make_quasi_convex(GeneratorSpec::power(p)); }

SampledFn random_bounded(testgen::Rng& rng) { return testgen::random_step(rng, 1.0, 10); }

}  // namespace

TEST_CASE("weight attached to the square generator") {
  const LorentzWeightData d = build_lorentz_weight(power_generator(2.0));
  for (double tau : {1e-4, 0.01, 0.5, 3.0, 100.0}) {
    CHECK(d.weight(tau) == doctest::Approx(1.0 / std::sqrt(2.0 * tau)).epsilon(1e-8));
  }
  CHECK(d.weight(0.0) == kInf);
  CHECK(d.g(3.0) == doctest::Approx(3.0));
  CHECK(d.inverse(2.0) == doctest::Approx(2.0));
}

TEST_CASE("embedding integral of a linear-then-cubic Young function") {
  const YoungFn a = linear_then_cubic();
  const QuasiConvexFn e = power_generator(2.0);
  for (double lambda : {0.5, 1.0, 4.0}) {
    CHECK(orlicz_lambda_embedding_integral(a, e, lambda) == doctest::Approx(4.0 / (3.0 * lambda)).epsilon(1e-6));
  }
}

TEST_CASE("embedding integral diverges when a stays bounded") {
  CHECK(orlicz_lambda_embedding_integral(young_power(1.0), power_generator(2.0), 1.0) == kInf);
}

TEST_CASE("classical Lorentz embedding integral with an indicator weight") {
  const SampledFn w({{1.0, 1.0}}, kInf);
  for (double lambda : {0.25, 1.0, 3.0}) {
    CHECK(classical_lorentz_embedding_integral(young_power(2.0), w, 1.0, lambda) ==
          doctest::Approx(1.0 / (2.0 * lambda)).epsilon(1e-8));
  }
}

TEST_CASE("step chain is right-continuous") {
  const MonotoneFn s = step_chain({1.0, 2.0}, {0.5, 1.5, kInf});
  CHECK(s(0.3) == 0.5);
  CHECK(s(1.0) == 1.5);
  CHECK(s(1.99) == 1.5);
  CHECK(s(2.0) == kInf);
}

TEST_CASE("flattening near zero keeps the tail and raises the derivative below 1") {
  const YoungFn a = young_power(3.0);
  const YoungFn b = flatten_near_zero(a);
  CHECK(b.derivative_at(0.1) == doctest::Approx(3.0));
  CHECK(b.derivative_at(5.0) == doctest::Approx(75.0));
  CHECK(b.infinity_descriptor() == a.infinity_descriptor());
}

TEST_CASE("weighted Young-type inequality holds on random data") {
  testgen::Rng rng(2718);
  int violations = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const QuasiConvexFn e = testgen::random_power_generator(rng);
    const LorentzWeightData d = build_lorentz_weight(e);
    const YoungFn a = testgen::random_young(rng);
    const SampledFn v = testgen::random_step(rng, kInf, 6);
    const SampledFn f = random_bounded(rng);
    const double lambda = testgen::log_uniform(rng, 1e-2, 1e2);
    const OlGap gap = ol_inequality_gap(a, d.g_young, v, f, lambda);
    if (!(gap.lhs <= gap.rhs() * (1.0 + 1e-9) + 1e-12)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("constructed witness satisfies its three bounds") {
  testgen::Rng rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const QuasiConvexFn e = testgen::random_power_generator(rng);
    const SampledFn f = random_bounded(rng);
    const Witness w = construct_witness_young(f, e);
    CHECK(w.modular_at_h <= 1.0 + 1e-12);
    CHECK(w.luxemburg <= 2.0 * w.lambda_norm * (1.0 + 1e-12));
    CHECK(w.n1 <= 1.0 + 1e-9);
  }
}

TEST_CASE("witness rejects the zero function") {
  CHECK_THROWS_AS(construct_witness_young(SampledFn({{0.0, 0.5}}, 1.0), power_generator(2.0)), Error);
}

TEST_CASE("almost-compact embedding rules") {
  const QuasiConvexFn e2 = power_generator(2.0);
  CHECK(ac_embedding_check(young_power(4.0), e2).holds_p());
  CHECK(ac_embedding_check(young_power(2.0), e2).fails_p());
  CHECK(ac_embedding_check(young_power(1.5), e2).fails_p());
  CHECK(ac_embedding_check(make_young(GeneratorSpec::power_log(2.0, 2.0, 2.0, 0.0)), e2).holds_p());
  CHECK(ac_embedding_check(make_young(GeneratorSpec::power_log(2.0, 0.5, 2.0, 0.0)), e2).fails_p());
  CHECK(ac_embedding_check(make_young(GeneratorSpec::exponential(1.0)), e2).holds_p());
}

TEST_CASE("sub-diagonality of Lebesgue and Lorentz spaces") {
  for (double p : {1.5, 2.0, 4.0}) {
    CHECK(subdiagonality_status(SpaceDescriptor::lebesgue(p)).uniform());
    for (double q : {1.0, 2.0, 4.0, kInf}) {
      INFO("p = ", p, ", q = ", q);
      const DiagonalityStatus s = subdiagonality_status(SpaceDescriptor::lorentz(p, q));
      if (q <= p) {
        CHECK(s.uniform());
      } else {
        CHECK(s.status == Diagonality::NotSubDiagonal);
      }
    }
  }
}

TEST_CASE("exponential Lambda space is uniform while the exponential Orlicz space is not") {
  const DiagonalityStatus lam = subdiagonality_status(SpaceDescriptor::lambda(GeneratorSpec::exponential(1.0)));
  const DiagonalityStatus orl = subdiagonality_status(SpaceDescriptor::orlicz(GeneratorSpec::exponential(1.0)));
  CHECK(lam.uniform());
  CHECK(orl.sub_diagonal());
  CHECK_FALSE(orl.uniform());
}

TEST_CASE("diagonality over the half-line is rejected") {
  CHECK_THROWS_AS(subdiagonality_status(SpaceDescriptor::lebesgue(2.0, Interval::HalfLine)), Error);
}

TEST_CASE("lifted norm of a characteristic function") {
  for (double r : {1.0, 2.0, 3.0}) {
    for (double p : {1.0, 2.0}) {
      const double c = 3.0;
      const double s = 0.2;
      const SampledFn f({{c, s}}, 1.0);
      CHECK(lifted_norm(young_power(r), SpaceDescriptor::lebesgue(p), f) ==
            doctest::Approx(c * std::pow(s, 1.0 / (p * r))).epsilon(1e-9));
    }
  }
}

TEST_CASE("diagonality names") {
  CHECK(to_string(Diagonality::UniformlySubDiagonal) != to_string(Diagonality::SubDiagonal));
  CHECK(!to_string(Diagonality::Unknown).empty());
}
