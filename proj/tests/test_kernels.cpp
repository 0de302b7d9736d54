#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "orlicz/kernels.hpp"
#include "support/generators.hpp"

namespace k = orlicz::kernels;

namespace {

std::vector<double> random_vector(testgen::Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = testgen::uniform(rng, lo, hi);
  return v;
}

}  // namespace

TEST_CASE("scalar dot matches a plain loop") {
  const std::vector<double> a{1.0, 2.0, 3.0};
  const std::vector<double> b{4.0, 5.0, 6.0};
  CHECK(k::scalar::dot(a.data(), b.data(), 3) == doctest::Approx(32.0));
  CHECK(k::scalar::dot(a.data(), b.data(), 0) == 0.0);
}

TEST_CASE("max_ratio skips non-positive denominators") {
  const std::vector<double> num{1.0, 10.0, 3.0};
  const std::vector<double> den{2.0, 0.0, 1.0};
  CHECK(k::scalar::max_ratio(num.data(), den.data(), 3) == doctest::Approx(3.0));
  const std::vector<double> zeros{0.0, 0.0};
  CHECK(k::scalar::max_ratio(num.data(), zeros.data(), 2) == 0.0);
}

TEST_CASE("count_outside and first_exceeding on small inputs") {
  const std::vector<double> x{1.0, 2.5, 0.4, 3.0};
  const std::vector<double> lo{1.0, 1.0, 0.5, 1.0};
  const std::vector<double> hi{2.0, 2.0, 2.0, 3.0};
  CHECK(k::scalar::count_outside(x.data(), lo.data(), hi.data(), 4, 0.0) == 2);
  CHECK(k::scalar::count_outside(x.data(), lo.data(), hi.data(), 4, 0.3) == 0);
  CHECK(k::scalar::first_exceeding(x.data(), hi.data(), 4) == 1);
  CHECK(k::scalar::first_exceeding(lo.data(), hi.data(), 4) == 4);
}

TEST_CASE("vector backend agrees with the scalar reference") {
  if (!k::avx2_available()) {
    MESSAGE("AVX2 not available; vector backend not exercised");
    return;
  }
  testgen::Rng rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testgen::integer(rng, 0, 67));
    auto a = random_vector(rng, n, 0.0, 10.0);
    auto b = random_vector(rng, n, 0.0, 10.0);
    auto lo = random_vector(rng, n, 0.0, 5.0);
    auto hi = random_vector(rng, n, 5.0, 10.0);
    if (n > 3) b[2] = 0.0;
    const double ds = k::scalar::dot(a.data(), b.data(), n);
    CHECK(k::avx2::dot(a.data(), b.data(), n) == doctest::Approx(ds).epsilon(1e-12));
    CHECK(k::avx2::max_ratio(a.data(), b.data(), n) == k::scalar::max_ratio(a.data(), b.data(), n));
    CHECK(k::avx2::count_outside(a.data(), lo.data(), hi.data(), n, 1e-3) ==
          k::scalar::count_outside(a.data(), lo.data(), hi.data(), n, 1e-3));
    CHECK(k::avx2::first_exceeding(a.data(), hi.data(), n) == k::scalar::first_exceeding(a.data(), hi.data(), n));
  }
}

TEST_CASE("dispatch reports a named backend") {
  const auto b = k::active_backend();
  CHECK(!k::backend_name(b).empty());
  if (!k::avx2_available()) CHECK(b == k::Backend::Scalar);
}
