#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace orlicz {

// Nonnegative reals extended by +infinity are carried as plain doubles; +inf is the
// distinguished top element and NaN never escapes a public operation.
using Extended = double;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) { return x == kInf; }
inline bool is_finite_positive(double x) { return x > 0.0 && x < kInf; }

// Product with the modular convention 0 * inf = 0.
inline double mul0(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

// Reciprocal with 1/0 = inf and 1/inf = 0.
inline double recip(double x) {
  if (x == 0.0) return kInf;
  if (x == kInf) return 0.0;
  return 1.0 / x;
}

enum class ErrorKind {
  InvalidInput,
  UnsupportedFamily,
  IntegralDiverges,
  ConditionViolated,
  QuadratureNonConvergent,
  NotInSpace,
  ZeroFunction,
};

std::string to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(to_string(kind) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orlicz
