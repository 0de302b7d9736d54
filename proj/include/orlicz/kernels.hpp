#pragma once

#include <cstddef>
#include <string>

namespace orlicz::kernels {

// Dense scan primitives used by grid checks and step sums. Each has a scalar
// reference and an AVX2/FMA variant; the active backend is chosen once at start-up.

enum class Backend { Scalar, Avx2 };

Backend active_backend();
std::string backend_name(Backend b);
bool avx2_available();

// sum_i a[i] * b[i]; the caller guarantees no 0 * inf products.
double dot(const double* a, const double* b, std::size_t n);

// max_i num[i] / den[i] over entries with den[i] > 0; 0 when there is none.
double max_ratio(const double* num, const double* den, std::size_t n);

// Number of i with x[i] < lo[i] * (1 - rel) or x[i] > hi[i] * (1 + rel).
std::size_t count_outside(const double* x, const double* lo, const double* hi, std::size_t n,
                          double rel);

// First i with lhs[i] > rhs[i], or n when lhs <= rhs everywhere.
std::size_t first_exceeding(const double* lhs, const double* rhs, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double max_ratio(const double* num, const double* den, std::size_t n);
std::size_t count_outside(const double* x, const double* lo, const double* hi, std::size_t n,
                          double rel);
std::size_t first_exceeding(const double* lhs, const double* rhs, std::size_t n);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double max_ratio(const double* num, const double* den, std::size_t n);
std::size_t count_outside(const double* x, const double* lo, const double* hi, std::size_t n,
                          double rel);
std::size_t first_exceeding(const double* lhs, const double* rhs, std::size_t n);
}  // namespace avx2

}  // namespace orlicz::kernels
