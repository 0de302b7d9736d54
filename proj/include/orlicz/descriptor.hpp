#pragma once

#include <optional>
#include <string>

#include "orlicz/extended.hpp"

namespace orlicz {

enum class Regime { NearZero, NearInfinity, Global };

std::string to_string(Regime regime);

enum class GrowthClass { PowerLog, Exponential, ZeroOnInterval, InfiniteBeyond, NumericOnly };

// Asymptotic growth class of a monotone function at one end of (0, inf).
//   PowerLog:        t^p (log 1/t)^alpha near zero, t^p (log t)^alpha near infinity
//   Exponential:     exp(t^gamma) near infinity
//   ZeroOnInterval:  identically zero below `threshold`
//   InfiniteBeyond:  identically +inf above `threshold`
//   NumericOnly:     nothing known beyond the samples
struct AsymptoticDescriptor {
  GrowthClass cls = GrowthClass::NumericOnly;
  double p = 0.0;
  double alpha = 0.0;
  double gamma = 0.0;
  double threshold = 0.0;

  static AsymptoticDescriptor power_log(double p, double alpha = 0.0);
  static AsymptoticDescriptor exponential(double gamma);
  static AsymptoticDescriptor zero_on_interval(double threshold);
  static AsymptoticDescriptor infinite_beyond(double threshold);
  static AsymptoticDescriptor numeric();

  bool symbolic() const { return cls != GrowthClass::NumericOnly; }
  bool is_power_log() const { return cls == GrowthClass::PowerLog; }
  bool is_pure_power() const { return cls == GrowthClass::PowerLog && alpha == 0.0; }
  bool operator==(const AsymptoticDescriptor&) const = default;
};

std::string describe(const AsymptoticDescriptor& d, Regime end);

// Short rendering of an exponent: integers plainly, small-denominator fractions as a/b,
// infinity as "inf", anything else with six significant digits.
std::string format_number(double x);

// Descriptor of the right/left inverse at the same end (inverses share both ends).
AsymptoticDescriptor inverse_descriptor(const AsymptoticDescriptor& d, Regime end);
// Descriptor of t -> 1/F(1/t) at the opposite end.
AsymptoticDescriptor correlative_descriptor(const AsymptoticDescriptor& d, Regime end);
// Descriptor of the complementary Young function at the same end.
AsymptoticDescriptor conjugate_descriptor(const AsymptoticDescriptor& d, Regime end);
// Descriptor of F(t) t^m at the same end.
AsymptoticDescriptor multiply_power_descriptor(const AsymptoticDescriptor& d, double m);
// Descriptor of the primitive integral_0^t f, and of the derivative f of a primitive.
AsymptoticDescriptor primitive_descriptor(const AsymptoticDescriptor& d);
AsymptoticDescriptor derivative_descriptor(const AsymptoticDescriptor& d);
// Descriptor of integral_0^t F(s)/s ds when F is quasi-convex (same end).
AsymptoticDescriptor youngify_descriptor(const AsymptoticDescriptor& d, Regime end);

// Exact comparison of symbolic descriptors at one end: true when b(t) <= a(Kt) for
// some K near that end, false when no K works, nullopt when the classes give no answer.
std::optional<bool> symbolic_dominates(const AsymptoticDescriptor& a, const AsymptoticDescriptor& b,
                                       Regime end);

enum class Status { Holds, Fails, Undecided };

std::string to_string(Status s);

struct Verdict {
  Status status = Status::Undecided;
  std::optional<double> constant;  // K, C, c or similar witness constant
  std::optional<double> point;     // divergence location or counterexample abscissa
  std::string note;

  static Verdict holds(std::string note = {}, std::optional<double> constant = {});
  static Verdict fails(std::string note = {}, std::optional<double> point = {});
  static Verdict undecided(std::string note = {});

  bool holds_p() const { return status == Status::Holds; }
  bool fails_p() const { return status == Status::Fails; }
};

}  // namespace orlicz
