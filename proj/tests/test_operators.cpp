#include <cmath>

#include "doctest.h"
#include "orlicz/operators.hpp"

using namespace orlicz;

TEST_CASE("Boyd index of a power from its descriptors") {
  for (double p : {1.0, 2.0, 3.5}) {
    const BoydEstimate b = boyd_upper_index(young_power(p));
    CHECK(b.exact);
    CHECK(b.upper_index == doctest::Approx(p));
  }
}

TEST_CASE("numeric Boyd index of a power") {
  for (double p : {1.5, 2.5, 4.0}) {
    const BoydEstimate b = boyd_upper_index(young_power(p), false);
    CHECK_FALSE(b.exact);
    CHECK(b.upper_index == doctest::Approx(p).epsilon(0.02));
  }
}

TEST_CASE("Boyd decision against the limiting exponent") {
  BoydEstimate e;
  e.exact = true;
  e.upper_index = 2.0;
  CHECK(boyd_decision(e, 3.0) == OutcomeKind::Optimal);
  e.upper_index = 3.0;
  CHECK(boyd_decision(e, 3.0) == OutcomeKind::NoOptimal);
  e.exact = false;
  e.upper_index = 2.98;
  CHECK(boyd_decision(e, 3.0) == OutcomeKind::Undecided);
  CHECK(boyd_decision(e, 3.0, 0.01) == OutcomeKind::Optimal);
}

TEST_CASE("Sobolev domain for a Lebesgue target below the critical exponent") {
  const AlternativeOutcome o = sobolev_orlicz_domain(SpaceDescriptor::lebesgue(6.0), SobolevContext(1, 3));
  CHECK(o.summary() == "Optimal(L^2)");
}

TEST_CASE("Sobolev domain for L-infinity target has no optimal Orlicz space") {
  const AlternativeOutcome o = sobolev_no_largest_on_level(SpaceDescriptor::lebesgue(kInf), SobolevContext(1, 3));
  CHECK(o.kind == OutcomeKind::NoOptimal);
}

TEST_CASE("Sobolev target fundamental function for a power level") {
  const SobolevContext ctx(1, 3);
  const FundamentalFn phi = fundamental_function(SpaceDescriptor::lebesgue(2.0));
  CHECK(sobolev_target_condition(phi, ctx).holds_p());
  const FundamentalFn psi = sobolev_optimal_target_fundamental(phi, ctx);
  const double r1 = psi(1e-4) / std::pow(1e-4, 1.0 / 6.0);
  const double r2 = psi(1e-2) / std::pow(1e-2, 1.0 / 6.0);
  CHECK(r1 / r2 == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("maximal operator target for power functions") {
  for (double p : {1.5, 2.0, 3.0}) {
    const double pc = p / (p - 1.0);
    const MaximalTarget mt = maximal_optimal_target(young_power(p));
    CHECK(mt.gate.holds_p());
    CHECK(mt.outcome.summary() == "Optimal(" + SpaceDescriptor::lebesgue(p).name() + ")");
    REQUIRE(mt.conjugate_target.has_value());
    const YoungFn c = young_power(p).conjugate();
    for (double t : {0.1, 1.0, 10.0}) {
      CHECK((*mt.conjugate_target)(t) == doctest::Approx(std::tgamma(pc + 1.0) * c(t)).epsilon(1e-3));
    }
  }
}

TEST_CASE("maximal operator target does not exist for t") {
  const MaximalTarget mt = maximal_optimal_target(young_power(1.0));
  CHECK(mt.outcome.kind == OutcomeKind::NoOptimal);
  CHECK(mt.outcome.reason.find("no Orlicz target exists") != std::string::npos);
}

TEST_CASE("maximal operator domain for power functions") {
  for (double p : {1.5, 2.0, 4.0}) {
    const MaximalDomain md = maximal_optimal_domain(young_power(p));
    REQUIRE(md.domain.has_value());
    for (double t : {0.01, 1.0, 50.0}) {
      CHECK((*md.domain)(t) == doctest::Approx(std::pow(t, p) / (p - 1.0)).epsilon(1e-6));
    }
  }
  CHECK(maximal_optimal_domain(young_power(1.0)).gate.fails_p());
}

TEST_CASE("origin integrability of B(t)/t^2") {
  CHECK(origin_integrability(young_power(2.0)).holds_p());
  CHECK(origin_integrability(young_power(1.0)).fails_p());
}

TEST_CASE("Laplace target averages the conjugate") {
  for (double p : {1.5, 2.0, 3.0}) {
    const double pc = p / (p - 1.0);
    const LaplaceTarget lt = laplace_optimal_target(young_power(p));
    REQUIRE(lt.averaged.has_value());
    const YoungFn c = young_power(p).conjugate();
    for (double t : {0.1, 1.0, 10.0}) {
      CHECK((*lt.averaged)(t) == doctest::Approx(c(t) / (pc - 1.0)).epsilon(1e-4));
    }
  }
}

TEST_CASE("Laplace target is optimal exactly up to exponent 2") {
  CHECK(laplace_optimal_target(young_power(1.0)).outcome.summary() == "Optimal(L^{inf})");
  CHECK(laplace_optimal_target(young_power(2.0)).outcome.kind == OutcomeKind::Optimal);
  CHECK(laplace_optimal_target(young_power(3.0)).outcome.kind == OutcomeKind::NoOptimal);
}

TEST_CASE("exponential average of a power") {
  // integral_0^inf (t tau)^2 e^{-tau} dtau = 2 t^2
  CHECK(exponential_average(young_power(2.0), 3.0) == doctest::Approx(18.0).epsilon(1e-8));
}
