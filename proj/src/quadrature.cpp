#include "orlicz/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <cmath>

namespace orlicz::quad {

double integrate(const Fn& f, double a, double b, double rel_tol) {
  if (!(b > a)) return 0.0;
  double err = 0.0;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto unit = [&](double x) { return f(mid + half * x); };
  const double v =
      half * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(unit, -1.0, 1.0, 12, rel_tol, &err);
  if (std::isnan(v)) throw Error(ErrorKind::QuadratureNonConvergent, "integrand produced NaN");
  return v;
}

double integrate_log(const Fn& f, double a, double b, double rel_tol) {
  if (!(b > a)) return 0.0;
  const double la = std::log(a);
  const double lb = std::log(b);
  const double step = std::log(10.0);
  auto g = [&](double u) {
    const double t = std::exp(u);
    const double v = f(t);
    return v == 0.0 ? 0.0 : v * t;
  };
  double total = 0.0;
  for (double u = la; u < lb; u += step) {
    const double hi = std::min(u + step, lb);
    total += integrate(g, u, hi, rel_tol);
    if (total == kInf) return kInf;
  }
  return total;
}

namespace {

// Fitted exponent k and coefficient of c t^k through two samples.
bool power_fit(double t1, double f1, double t2, double f2, double& k, double& c) {
  if (!(f1 > 0.0) || !(f2 > 0.0) || f1 == kInf || f2 == kInf) return false;
  k = std::log(f2 / f1) / std::log(t2 / t1);
  c = f1 / std::pow(t1, k);
  return true;
}

}  // namespace

double tail_to_zero(double t1, double f1, double t2, double f2) {
  if (f1 == 0.0) return 0.0;
  double k = 0.0;
  double c = 0.0;
  if (!power_fit(t1, f1, t2, f2, k, c)) return kInf;
  if (k <= -1.0 + 1e-3) return kInf;
  return c * std::pow(t1, k + 1.0) / (k + 1.0);
}

double tail_to_infinity(double t1, double f1, double t2, double f2) {
  if (f2 == 0.0) return 0.0;
  double k = 0.0;
  double c = 0.0;
  if (!power_fit(t1, f1, t2, f2, k, c)) return kInf;
  if (k >= -1.0 - 1e-3) return kInf;
  return -c * std::pow(t2, k + 1.0) / (k + 1.0);
}

double integrate_half_line(const Fn& f, double a, double b, const HalfLineOptions& opt) {
  if (!(b > a)) return 0.0;
  double lo = a;
  double hi = b;
  double total = 0.0;
  if (a == 0.0) {
    lo = std::min(opt.inner, b / 10.0);
    total += tail_to_zero(lo, f(lo), 10.0 * lo, f(10.0 * lo));
  }
  if (b == kInf) {
    hi = std::max(opt.outer, 10.0 * lo);
    total += tail_to_infinity(hi / 10.0, f(hi / 10.0), hi, f(hi));
  }
  if (total == kInf) return kInf;
  return total + integrate_log(f, lo, hi, opt.rel_tol);
}

Extremum maximize_log(const Fn& f, double a, double b, int bits) {
  Extremum best{a, f(a)};
  const double fb = f(b);
  if (fb > best.value) best = {b, fb};
  if (!(b > a)) return best;
  auto neg = [&](double u) {
    const double v = f(std::exp(u));
    return std::isnan(v) ? 0.0 : -v;
  };
  const auto r = boost::math::tools::brent_find_minima(neg, std::log(a), std::log(b), bits);
  if (-r.second > best.value) best = {std::exp(r.first), -r.second};
  return best;
}

}  // namespace orlicz::quad
