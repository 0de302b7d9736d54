#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/monotone.hpp"

namespace orlicz {

// Convex A(t) = integral_0^t a with a right-continuous non-decreasing derivative `a`.
// A is evaluated exactly per derivative edge; A^{-1} is solved in closed form per edge.
class YoungFn {
 public:
  // The derivative must not vanish identically; descriptors describe A itself and are
  // inferred from the derivative's descriptors when omitted.
  static YoungFn from_derivative(MonotoneFn a, std::optional<AsymptoticDescriptor> zero = {},
                                 std::optional<AsymptoticDescriptor> infinity = {});

  double operator()(double t) const;
  double derivative_at(double t) const { return a_(t); }
  const MonotoneFn& derivative() const { return a_; }

  double right_inverse_at(double s) const;  // sup{tau : A(tau) <= s}
  double left_inverse_at(double s) const;   // inf{tau : A(tau) >= s}
  // Level function s -> (A_#)^{-1}(s) = 1 / A^{-1}_left(1 / s), with value 0 at s = 0.
  double fundamental_at(double s) const;

  YoungFn conjugate() const;
  // Values of A sampled on grid points and derivative knots, as a chain.
  MonotoneFn values(const Grid& grid) const;

  double zero_threshold() const { return t_zero_; }
  double infinity_threshold() const { return t_inf_; }
  const AsymptoticDescriptor& zero_descriptor() const { return zero_; }
  const AsymptoticDescriptor& infinity_descriptor() const { return infinity_; }
  const AsymptoticDescriptor& descriptor(Regime end) const {
    return end == Regime::NearZero ? zero_ : infinity_;
  }
  // A = c t^p on the whole half-line.
  bool is_pure_power() const;
  std::string describe() const;

 private:
  YoungFn(MonotoneFn a, AsymptoticDescriptor zero, AsymptoticDescriptor infinity);
  std::pair<double, double> inverses(double s) const;

  MonotoneFn a_;
  std::vector<double> cumulative_;  // A at each derivative vertex
  double t_zero_ = 0.0;
  double t_inf_ = kInf;
  AsymptoticDescriptor zero_;
  AsymptoticDescriptor infinity_;
};

// Non-decreasing F with F(t)/t non-decreasing.
class QuasiConvexFn {
 public:
  explicit QuasiConvexFn(MonotoneFn base);
  static QuasiConvexFn from_young(const YoungFn& a, const Grid& grid = {});

  double operator()(double t) const { return base_(t); }
  const MonotoneFn& base() const { return base_; }
  // s -> (F_#)^{-1}(s) as a chain, with value 0 at the origin.
  const MonotoneFn& fundamental() const { return fundamental_; }
  double fundamental_at(double s) const { return fundamental_(s); }
  QuasiConvexFn correlative() const { return QuasiConvexFn(base_.correlative()); }
  const AsymptoticDescriptor& zero_descriptor() const { return base_.zero_descriptor(); }
  const AsymptoticDescriptor& infinity_descriptor() const { return base_.infinity_descriptor(); }

 private:
  MonotoneFn base_;
  MonotoneFn fundamental_;
};

// A(t) = integral_0^t B(tau)/tau dtau; throws IntegralDiverges when B is infinite on (0, inf).
YoungFn youngify(const QuasiConvexFn& b);

// Forces the value at the origin to 0 (a jump from 0 at t = 0 when F(0+) > 0).
MonotoneFn vanish_at_origin(const MonotoneFn& f);

// Symbolic description of a generating function, shared with the JSON layer.
struct GeneratorSpec {
  enum class Kind { PowerLog, Exponential, Linfty, Table };
  Kind kind = Kind::PowerLog;
  double p = 1.0;        // exponent near infinity
  double alpha = 0.0;    // log exponent near infinity
  double p0 = 1.0;       // exponent near zero
  double alpha0 = 0.0;   // log exponent near zero
  double gamma = 1.0;    // exponential class
  double threshold = 1.0;
  double coefficient = 1.0;
  std::vector<std::pair<double, double>> table;  // (t, value) pairs
  AsymptoticDescriptor table_zero;
  AsymptoticDescriptor table_infinity;

  static GeneratorSpec power(double p, double coefficient = 1.0);
  static GeneratorSpec power_log(double p, double alpha, double p0, double alpha0);
  static GeneratorSpec exponential(double gamma);
  static GeneratorSpec linfty(double threshold = 1.0);
  static GeneratorSpec tabulated(std::vector<std::pair<double, double>> points,
                                 AsymptoticDescriptor zero = {}, AsymptoticDescriptor infinity = {});
  std::string describe() const;
};

YoungFn make_young(const GeneratorSpec& spec, const Grid& grid = {});
// Tables are read as function values; the other kinds reuse the Young representative.
QuasiConvexFn make_quasi_convex(const GeneratorSpec& spec, const Grid& grid = {});

YoungFn young_power(double p, double coefficient = 1.0);
YoungFn young_linfty(double threshold = 1.0);

// Growth conditions and domination. Windows: the outer two grid decades for
// near-zero / near-infinity, the whole grid for global.
Verdict delta2(const YoungFn& a, Regime regime, const Grid& grid = {});
Verdict nabla2(const YoungFn& a, Regime regime, const Grid& grid = {});
// Decides B < A: B(t) <= A(K t) on the regime.
Verdict dominates(const YoungFn& a, const YoungFn& b, Regime regime, const Grid& grid = {});

std::vector<double> regime_window(const Grid& grid, Regime regime);

}  // namespace orlicz
