#include "orlicz/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ORLICZ_AVX2 __attribute__((target("avx2,fma")))
#endif

namespace orlicz::kernels::avx2 {

#if defined(ORLICZ_AVX2)

ORLICZ_AVX2 double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

ORLICZ_AVX2 double max_ratio(const double* num, const double* den, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  __m256d best = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_loadu_pd(den + i);
    const __m256d r = _mm256_div_pd(_mm256_loadu_pd(num + i), d);
    const __m256d keep = _mm256_cmp_pd(d, zero, _CMP_GT_OQ);
    best = _mm256_max_pd(_mm256_blendv_pd(zero, r, keep), best);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = lanes[0];
  for (int k = 1; k < 4; ++k) out = lanes[k] > out ? lanes[k] : out;
  for (; i < n; ++i) {
    if (den[i] > 0.0) {
      const double r = num[i] / den[i];
      if (r > out) out = r;
    }
  }
  return out;
}

ORLICZ_AVX2 std::size_t count_outside(const double* x, const double* lo, const double* hi,
                                      std::size_t n, double rel) {
  const __m256d down = _mm256_set1_pd(1.0 - rel);
  const __m256d up = _mm256_set1_pd(1.0 + rel);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d below = _mm256_cmp_pd(v, _mm256_mul_pd(_mm256_loadu_pd(lo + i), down), _CMP_LT_OQ);
    const __m256d above = _mm256_cmp_pd(v, _mm256_mul_pd(_mm256_loadu_pd(hi + i), up), _CMP_GT_OQ);
    const int mask = _mm256_movemask_pd(_mm256_or_pd(below, above));
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  const double dn = 1.0 - rel;
  const double u = 1.0 + rel;
  for (; i < n; ++i) {
    if (x[i] < lo[i] * dn || x[i] > hi[i] * u) ++count;
  }
  return count;
}

ORLICZ_AVX2 std::size_t first_exceeding(const double* lhs, const double* rhs, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gt = _mm256_cmp_pd(_mm256_loadu_pd(lhs + i), _mm256_loadu_pd(rhs + i), _CMP_GT_OQ);
    const int mask = _mm256_movemask_pd(gt);
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) {
    if (lhs[i] > rhs[i]) return i;
  }
  return n;
}

#else

double dot(const double* a, const double* b, std::size_t n) { return scalar::dot(a, b, n); }
double max_ratio(const double* num, const double* den, std::size_t n) {
  return scalar::max_ratio(num, den, n);
}
std::size_t count_outside(const double* x, const double* lo, const double* hi, std::size_t n,
                          double rel) {
  return scalar::count_outside(x, lo, hi, n, rel);
}
std::size_t first_exceeding(const double* lhs, const double* rhs, std::size_t n) {
  return scalar::first_exceeding(lhs, rhs, n);
}

#endif

}  // namespace orlicz::kernels::avx2
