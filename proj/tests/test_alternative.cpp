#include "doctest.h"
#include "orlicz/alternative.hpp"

using namespace orlicz;

TEST_CASE("Lebesgue inclusions on the unit interval") {
  CHECK(embeds(SpaceDescriptor::lebesgue(4.0), SpaceDescriptor::lebesgue(2.0)).holds_p());
  CHECK(embeds(SpaceDescriptor::lebesgue(2.0), SpaceDescriptor::lebesgue(4.0)).fails_p());
  CHECK(embeds(SpaceDescriptor::lebesgue(kInf), SpaceDescriptor::lebesgue(1.0)).holds_p());
}

TEST_CASE("Lorentz spaces sit inside the Lebesgue space with the same first index") {
  CHECK(embeds(SpaceDescriptor::lorentz(4.0, 2.0), SpaceDescriptor::lebesgue(4.0)).holds_p());
  CHECK(embeds(SpaceDescriptor::lebesgue(4.0), SpaceDescriptor::lorentz(4.0, 2.0)).fails_p());
  CHECK(embeds(SpaceDescriptor::lorentz(3.0, kInf), SpaceDescriptor::lebesgue(2.5)).holds_p());
}

TEST_CASE("Lorentz-Zygmund coordinate rule") {
  CHECK(lz_embeds({3.0, 1.0, 0.0}, {3.0, 2.0, 0.0}));
  CHECK_FALSE(lz_embeds({3.0, 2.0, 0.0}, {3.0, 1.0, 0.0}));
  CHECK(lz_embeds({4.0, kInf, 0.0}, {3.0, 1.0, 0.0}));
  CHECK(lz_embeds({3.0, 2.0, 1.0}, {3.0, 2.0, 0.0}));
  CHECK_FALSE(lz_embeds({3.0, 2.0, 0.0}, {3.0, 2.0, 1.0}));
  CHECK(lz_embeds({kInf, kInf, 0.0}, {kInf, 3.0, -1.0}));
}

TEST_CASE("coordinates of the classical scales") {
  const auto lp = lz_coordinates(SpaceDescriptor::lebesgue(2.0));
  REQUIRE(lp.has_value());
  CHECK(lp->p == 2.0);
  CHECK(lp->q == 2.0);
  CHECK(lp->alpha == 0.0);
  const auto lz = lz_coordinates(SpaceDescriptor::lorentz_zygmund(kInf, 3.0, -1.0));
  REQUIRE(lz.has_value());
  CHECK(lz->alpha == -1.0);
}

TEST_CASE("target side of the alternative for the Sobolev range") {
  struct Case {
    int n;
    int m;
    double p;
  };
  for (Case c : {Case{3, 1, 2.0}, Case{4, 1, 2.0}}) {
    const double q = c.n * c.p / (c.n - c.m * c.p);
    INFO("n = ", c.n);
    const AlternativeOutcome o = principal_alternative_target(SpaceDescriptor::lorentz(q, c.p));
    CHECK(o.kind == OutcomeKind::Optimal);
    REQUIRE(o.space.has_value());
    CHECK(o.space->name() == SpaceDescriptor::lebesgue(q).name());
    CHECK(o.side == Side::Target);
  }
}

TEST_CASE("limiting target has an exponential optimal Orlicz space") {
  const AlternativeOutcome o = principal_alternative_target(SpaceDescriptor::lorentz_zygmund(kInf, 3.0, -1.0));
  CHECK(o.summary() == "Optimal(exp L^{3/2})");
  const AlternativeOutcome o4 = principal_alternative_target(SpaceDescriptor::lorentz_zygmund(kInf, 4.0, -1.0));
  CHECK(o4.summary() == "Optimal(exp L^{4/3})");
}

TEST_CASE("domain side of the alternative") {
  const AlternativeOutcome ok = principal_alternative_domain(SpaceDescriptor::lorentz(2.0, 6.0));
  CHECK(ok.summary() == "Optimal(L^2)");
  const AlternativeOutcome no = principal_alternative_domain(SpaceDescriptor::lorentz(3.0, 1.0));
  CHECK(no.kind == OutcomeKind::NoOptimal);
  CHECK(no.evidence.fails_p());
  CHECK(!no.reason.empty());
}

TEST_CASE("an Orlicz space is its own optimal space on both sides") {
  const SpaceDescriptor x = SpaceDescriptor::orlicz(GeneratorSpec::power_log(2.0, 1.0, 2.0, 0.0));
  CHECK(principal_alternative_target(x).kind == OutcomeKind::Optimal);
  CHECK(principal_alternative_domain(x).kind == OutcomeKind::Optimal);
}

TEST_CASE("outcome strings") {
  CHECK(to_string(Side::Domain) == "domain");
  CHECK(to_string(OutcomeKind::NoOptimal) == "NoOptimal");
  AlternativeOutcome u;
  CHECK(u.summary() == "Undecided");
}
