#pragma once

#include <functional>

#include "orlicz/extended.hpp"

namespace orlicz::quad {

using Fn = std::function<double(double)>;

// Adaptive Gauss-Kronrod on a finite interval [a, b].
double integrate(const Fn& f, double a, double b, double rel_tol = 1e-10);

// Integral over [a, b] with 0 < a < b < inf, substituting t = e^u and splitting
// the range into decades.
double integrate_log(const Fn& f, double a, double b, double rel_tol = 1e-10);

// Integral over [a, b] with 0 <= a < b <= inf. Ends at 0 or inf are truncated at
// `inner` / `outer` and closed with a power-law tail fit c t^k over the last decade.
// Returns +inf when the fitted tail diverges.
struct HalfLineOptions {
  double inner = 1e-12;
  double outer = 1e12;
  double rel_tol = 1e-10;
};
double integrate_half_line(const Fn& f, double a, double b, const HalfLineOptions& opt = {});

// Tail integrals of the power fit through (t1, f(t1)), (t2, f(t2)).
double tail_to_zero(double t1, double f1, double t2, double f2);      // integral over (0, t1)
double tail_to_infinity(double t1, double f1, double t2, double f2);  // integral over (t2, inf)

struct Extremum {
  double at;
  double value;
};

// Maximum of f over [a, b] (0 < a < b < inf) by Brent's method in log t, with
// the endpoints also considered.
Extremum maximize_log(const Fn& f, double a, double b, int bits = 40);

}  // namespace orlicz::quad
