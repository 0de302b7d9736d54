#include "orlicz/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace orlicz::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double max_ratio(const double* num, const double* den, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (den[i] > 0.0) {
      const double r = num[i] / den[i];
      if (r > best) best = r;
    }
  }
  return best;
}

std::size_t count_outside(const double* x, const double* lo, const double* hi, std::size_t n,
                          double rel) {
  const double down = 1.0 - rel;
  const double up = 1.0 + rel;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < lo[i] * down || x[i] > hi[i] * up) ++count;
  }
  return count;
}

std::size_t first_exceeding(const double* lhs, const double* rhs, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs[i] > rhs[i]) return i;
  }
  return n;
}

}  // namespace scalar

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend detect() {
  if (const char* forced = std::getenv("ORLICZ_KERNELS")) {
    if (std::strcmp(forced, "scalar") == 0) return Backend::Scalar;
  }
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

const Backend kBackend = detect();

}  // namespace

Backend active_backend() { return kBackend; }

std::string backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

double dot(const double* a, const double* b, std::size_t n) {
  return kBackend == Backend::Avx2 ? avx2::dot(a, b, n) : scalar::dot(a, b, n);
}

double max_ratio(const double* num, const double* den, std::size_t n) {
  return kBackend == Backend::Avx2 ? avx2::max_ratio(num, den, n) : scalar::max_ratio(num, den, n);
}

std::size_t count_outside(const double* x, const double* lo, const double* hi, std::size_t n,
                          double rel) {
  return kBackend == Backend::Avx2 ? avx2::count_outside(x, lo, hi, n, rel)
                                   : scalar::count_outside(x, lo, hi, n, rel);
}

std::size_t first_exceeding(const double* lhs, const double* rhs, std::size_t n) {
  return kBackend == Backend::Avx2 ? avx2::first_exceeding(lhs, rhs, n)
                                   : scalar::first_exceeding(lhs, rhs, n);
}

}  // namespace orlicz::kernels
