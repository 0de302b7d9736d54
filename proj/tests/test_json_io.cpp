#include <cmath>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "orlicz/json_io.hpp"
#include "support/generators.hpp"

using namespace orlicz;
using io::Json;

namespace {

std::string error_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("numbers accept the infinity spellings") {
  CHECK(io::parse_number(Json(2.5), "/p") == 2.5);
  CHECK(io::parse_number(Json("inf"), "/p") == kInf);
  CHECK(io::parse_number(Json("infinity"), "/p") == kInf);
  CHECK(error_text([] { io::parse_number(Json("abc"), "/params/q"); }).find("/params/q") != std::string::npos);
}

TEST_CASE("malformed documents report the offset") {
  const std::string msg = error_text([] { io::parse_document("{\"family\":", "--space"); });
  CHECK(msg.find("--space") != std::string::npos);
  CHECK(msg.find("InvalidInput") != std::string::npos);
}

TEST_CASE("bare linfty word parses as the L-infinity space") {
  const Json j = io::parse_document("linfty", "--space");
  CHECK(io::parse_space(j).name() == "L^{inf}");
}

TEST_CASE("generators with parameters at either level") {
  const GeneratorSpec a = io::parse_generator(Json::parse(R"({"class":"power-log","p":3})"));
  const GeneratorSpec b = io::parse_generator(Json::parse(R"({"class":"power-log","params":{"p":3}})"));
  CHECK(a.p == 3.0);
  CHECK(b.p == 3.0);
  CHECK(a.p0 == 3.0);
  const GeneratorSpec e = io::parse_generator(Json::parse(R"({"class":"exponential","gamma":2})"));
  CHECK(e.kind == GeneratorSpec::Kind::Exponential);
  CHECK(e.gamma == 2.0);
}

TEST_CASE("parameter errors carry a JSON pointer") {
  const std::string msg =
      error_text([] { io::parse_space(Json::parse(R"({"family":"lebesgue","params":{"p":0.5}})")); });
  CHECK(msg.find("/params/p") != std::string::npos);
  const std::string missing = error_text([] { io::parse_space(Json::parse(R"({"family":"lorentz","params":{"p":2}})")); });
  CHECK(missing.find("/params") != std::string::npos);
  CHECK(missing.find("\"q\"") != std::string::npos);
  const std::string family = error_text([] { io::parse_space(Json::parse(R"({"family":"sobolev"})")); });
  CHECK(family.find("/family") != std::string::npos);
}

TEST_CASE("space descriptors survive a round trip") {
  const std::vector<SpaceDescriptor> xs{
      SpaceDescriptor::lebesgue(kInf),
      SpaceDescriptor::lorentz(3.0, 1.5),
      SpaceDescriptor::lorentz_zygmund(kInf, 3.0, -1.0),
      SpaceDescriptor::orlicz(GeneratorSpec::power_log(2.0, 1.0, 2.0, 0.0)),
      SpaceDescriptor::lambda(GeneratorSpec::exponential(1.0)),
      SpaceDescriptor::marcinkiewicz(GeneratorSpec::power(2.0), Interval::HalfLine),
      SpaceDescriptor::classical_lorentz(SampledFn({{2.0, 0.3}, {1.0, 0.4}}, 1.0), 2.0),
  };
  const SampledFn f({{3.0, 0.1}, {0.5, 0.6}}, 1.0);
  for (const SpaceDescriptor& x : xs) {
    const Json j = io::to_json(x);
    const SpaceDescriptor y = io::parse_space(Json::parse(j.dump()));
    INFO(j.dump());
    CHECK(y.family == x.family);
    CHECK(y.interval == x.interval);
    CHECK(y.name() == x.name());
    if (x.family != Family::LorentzZygmund) CHECK(norm(y, f) == doctest::Approx(norm(x, f)).epsilon(1e-9));
  }
}

TEST_CASE("tabulated Young functions survive a round trip") {
  testgen::Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const YoungFn a = testgen::random_young(rng);
    const YoungFn b = io::parse_young(Json::parse(io::to_json(a).dump()));
    for (double t : {1e-2, 0.7, 3.0, 50.0}) CHECK(b(t) == doctest::Approx(a(t)).epsilon(0.02));
  }
}

TEST_CASE("sampled functions round trip with tails") {
  const SampledFn f({{2.0, 0.25}, {1.0, 0.5}}, 1.0, PowerTail{0.2, 0.5, 0.01});
  const SampledFn g = io::parse_sampled(Json::parse(io::to_json(f).dump()));
  REQUIRE(g.tail().has_value());
  CHECK(g.tail()->exponent == 0.5);
  CHECK(g.pieces().size() == 2);
  CHECK(g.domain_length() == 1.0);
}

TEST_CASE("CSV samples skip headers and blank lines") {
  std::istringstream in("value,width\n2,0.25\n\n1,0.5\n");
  const SampledFn f = io::read_samples_csv(in, 1.0);
  REQUIRE(f.pieces().size() == 2);
  CHECK(f.pieces()[0].value == 2.0);
  CHECK(f.pieces()[1].width == 0.5);
  std::istringstream bad("1,2\nx,y\n");
  CHECK_THROWS_AS(io::read_samples_csv(bad), Error);
}

TEST_CASE("infinite numbers serialize as strings") {
  CHECK(io::number_json(kInf) == Json("inf"));
  CHECK(io::number_json(2.0) == Json(2.0));
}

TEST_CASE("outcome serialization") {
  const AlternativeOutcome o = principal_alternative_target(SpaceDescriptor::lorentz(4.0, 2.0));
  const Json j = io::to_json(o);
  CHECK(j["outcome"] == "Optimal");
  CHECK(j["summary"] == "Optimal(L^4)");
  CHECK(j["space"]["name"] == "L^4");
  CHECK(j["side"] == "target");
}
