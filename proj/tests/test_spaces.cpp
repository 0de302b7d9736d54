#include <cmath>

#include "doctest.h"
#include "orlicz/spaces.hpp"
#include "support/generators.hpp"

using namespace orlicz;

namespace {

std::vector<SpaceDescriptor> catalog() {
  return {SpaceDescriptor::lebesgue(2.0),
          SpaceDescriptor::lebesgue(1.0),
          SpaceDescriptor::lorentz(3.0, 1.0),
          SpaceDescriptor::lorentz(3.0, 6.0),
          SpaceDescriptor::lorentz(1.5, kInf),
          SpaceDescriptor::orlicz(GeneratorSpec::power_log(2.0, 1.0, 2.0, 0.0)),
          SpaceDescriptor::orlicz(GeneratorSpec::exponential(2.0)),
          SpaceDescriptor::lambda(GeneratorSpec::power(3.0)),
          SpaceDescriptor::marcinkiewicz(GeneratorSpec::power(3.0))};
}

}  // namespace

TEST_CASE("conventional names") {
  CHECK(SpaceDescriptor::lebesgue(4.0).name() == "L^4");
  CHECK(SpaceDescriptor::lebesgue(kInf).name() == "L^{inf}");
  CHECK(SpaceDescriptor::lorentz(4.0, 2.0).name() == "L^{4,2}");
  CHECK(SpaceDescriptor::lorentz_zygmund(kInf, 3.0, -1.0).name() == "L^{inf,3;-1}");
  CHECK(SpaceDescriptor::orlicz(GeneratorSpec::exponential(1.5)).name() == "exp L^{3/2}");
  CHECK(SpaceDescriptor::orlicz(GeneratorSpec::power(4.0)).name() == "L^4");
}

TEST_CASE("fundamental functions of the Lebesgue and Lorentz scales") {
  const FundamentalFn lp = fundamental_function(SpaceDescriptor::lebesgue(4.0));
  const FundamentalFn lpq = fundamental_function(SpaceDescriptor::lorentz(4.0, 2.0));
  for (double t : {1e-6, 1e-3, 0.5}) {
    CHECK(lp(t) == doctest::Approx(std::pow(t, 0.25)));
    CHECK(lpq(t) / lp(t) == doctest::Approx(std::sqrt(2.0)));
  }
  CHECK(norm_constant(SpaceDescriptor::lorentz(4.0, 2.0)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(lpq(0.5) == doctest::Approx(std::sqrt(2.0) * std::pow(0.5, 0.25)));
}

TEST_CASE("norm of a characteristic function is the fundamental function") {
  for (const SpaceDescriptor& x : catalog()) {
    const FundamentalFn phi = fundamental_function(x);
    for (double m : {1e-4, 1e-2, 0.3, 1.0}) {
      const SampledFn chi = SampledFn::characteristic(m, 1.0, 1.0);
      INFO(x.name(), " at |E| = ", m);
      CHECK(norm(x, chi) == doctest::Approx(phi(m)).epsilon(1e-6));
    }
  }
}

TEST_CASE("companions share the fundamental level") {
  for (const SpaceDescriptor& x : catalog()) {
    const Companions c = companions(x);
    const FundamentalFn phi = fundamental_function(x);
    INFO(x.name());
    CHECK(same_level(fundamental_function(c.lorentz_end), phi, x.interval).holds_p());
    CHECK(same_level(fundamental_function(c.orlicz), phi, x.interval).holds_p());
    CHECK(same_level(fundamental_function(c.marcinkiewicz_end), phi, x.interval).holds_p());
  }
}

TEST_CASE("companion Orlicz space of the limiting Lorentz-Zygmund space") {
  const Companions c = companions(SpaceDescriptor::lorentz_zygmund(kInf, 3.0, -1.0));
  CHECK(c.orlicz.name() == "exp L^{3/2}");
  CHECK(c.marcinkiewicz_end.name() == "exp L^{3/2}");
}

TEST_CASE("associate spaces of Lorentz spaces") {
  const SpaceDescriptor a = associate(SpaceDescriptor::lorentz(3.0, 2.0));
  CHECK(a.family == Family::Lorentz);
  CHECK(a.p == doctest::Approx(1.5));
  CHECK(a.q == doctest::Approx(2.0));
  const SpaceDescriptor b = associate(SpaceDescriptor::lorentz(3.0, 1.0));
  CHECK(b.q == kInf);
  CHECK(associate(SpaceDescriptor::lebesgue(1.0)).p == kInf);
}

TEST_CASE("double associate stays on the same level") {
  for (const SpaceDescriptor& x : catalog()) {
    INFO(x.name());
    const SpaceDescriptor xx = associate(associate(x));
    CHECK(same_level(fundamental_function(xx), fundamental_function(x), x.interval).holds_p());
  }
}

TEST_CASE("same-level relation is reflexive and symmetric") {
  const FundamentalFn a = fundamental_function(SpaceDescriptor::lebesgue(3.0));
  const FundamentalFn b = fundamental_function(SpaceDescriptor::lorentz(3.0, 7.0));
  const FundamentalFn c = fundamental_function(SpaceDescriptor::lebesgue(2.0));
  CHECK(same_level(a, a, Interval::Unit).holds_p());
  CHECK(same_level(a, b, Interval::Unit).holds_p());
  CHECK(same_level(b, a, Interval::Unit).holds_p());
  CHECK(same_level(a, c, Interval::Unit).fails_p());
}

TEST_CASE("Lorentz norm of a step function") {
  const SampledFn f({{2.0, 0.25}, {1.0, 0.5}}, 1.0);
  const SpaceDescriptor x = SpaceDescriptor::lorentz(2.0, 1.0);
  // integral t^{-1/2} f*(t) dt = 2 * 2 * 0.5 + 1 * 2 * (sqrt(0.75) - 0.5)
  CHECK(norm(x, f) == doctest::Approx(4.0 * 0.5 + 2.0 * (std::sqrt(0.75) - 0.5)));
}

TEST_CASE("invalid descriptors are rejected") {
  CHECK_THROWS_AS(SpaceDescriptor::lebesgue(0.5), Error);
  CHECK_THROWS_AS(SpaceDescriptor::lorentz(1.0, 2.0), Error);
  CHECK_THROWS_AS(SpaceDescriptor::lorentz_zygmund(kInf, 2.0, 0.0), Error);
  CHECK_THROWS_AS(SpaceDescriptor::classical_lorentz(SampledFn({{1.0, 0.2}, {2.0, 0.2}}), 1.0), Error);
}
