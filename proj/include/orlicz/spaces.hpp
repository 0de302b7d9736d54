#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "orlicz/rearrangement.hpp"

namespace orlicz {

enum class Family { Lebesgue, Lorentz, LorentzZygmund, Orlicz, Lambda, Marcinkiewicz, ClassicalLorentz };
enum class Interval { Unit, HalfLine };

std::string to_string(Family f);

// Non-decreasing phi with phi(0) = 0 and phi(t)/t non-increasing. Carries an exact
// evaluator (when one exists), a chain for structural work, and the asymptotic class
// of phi itself at both ends: power_log(r, a) reads t^r (log 1/t)^a near zero and
// t^r (log t)^a near infinity.
class FundamentalFn {
 public:
  FundamentalFn(MonotoneFn chain, AsymptoticDescriptor near_zero, AsymptoticDescriptor near_infinity,
                std::function<double(double)> exact = {});

  double operator()(double s) const;
  const MonotoneFn& chain() const { return chain_; }
  const AsymptoticDescriptor& near_zero() const { return near_zero_; }
  const AsymptoticDescriptor& near_infinity() const { return near_infinity_; }
  const AsymptoticDescriptor& descriptor(Regime end) const {
    return end == Regime::NearInfinity ? near_infinity_ : near_zero_;
  }

  // Pure power t^r, with r = 1/p.
  static FundamentalFn power(double r, double coefficient = 1.0);
  // Samples an evaluator on a grid restricted to (0, length]; constant beyond length.
  static FundamentalFn sampled(const std::function<double(double)>& exact, double length,
                               AsymptoticDescriptor near_zero, AsymptoticDescriptor near_infinity,
                               int per_decade = 16);

 private:
  MonotoneFn chain_;
  AsymptoticDescriptor near_zero_;
  AsymptoticDescriptor near_infinity_;
  std::function<double(double)> exact_;
};

// Tagged description of a rearrangement-invariant space over (0, 1) or (0, inf).
struct SpaceDescriptor {
  Family family = Family::Lebesgue;
  Interval interval = Interval::Unit;
  double p = 1.0;
  double q = 1.0;
  double alpha = 0.0;
  std::shared_ptr<const YoungFn> young;                // Orlicz
  std::shared_ptr<const QuasiConvexFn> generator;      // Lambda, Marcinkiewicz
  std::shared_ptr<const SampledFn> weight;             // classical Lorentz (uses q)
  std::optional<GeneratorSpec> spec;                   // symbolic origin, when known

  static SpaceDescriptor lebesgue(double p, Interval i = Interval::Unit);
  static SpaceDescriptor lorentz(double p, double q, Interval i = Interval::Unit);
  static SpaceDescriptor lorentz_zygmund(double p, double q, double alpha, Interval i = Interval::Unit);
  static SpaceDescriptor orlicz(const GeneratorSpec& spec, Interval i = Interval::Unit);
  static SpaceDescriptor orlicz(YoungFn a, Interval i = Interval::Unit, std::optional<GeneratorSpec> spec = {});
  static SpaceDescriptor lambda(const GeneratorSpec& spec, Interval i = Interval::Unit);
  static SpaceDescriptor lambda(QuasiConvexFn e, Interval i = Interval::Unit, std::optional<GeneratorSpec> spec = {});
  static SpaceDescriptor marcinkiewicz(const GeneratorSpec& spec, Interval i = Interval::Unit);
  static SpaceDescriptor marcinkiewicz(QuasiConvexFn e, Interval i = Interval::Unit,
                                       std::optional<GeneratorSpec> spec = {});
  static SpaceDescriptor classical_lorentz(SampledFn w, double q, Interval i = Interval::Unit);

  double domain_length() const { return interval == Interval::Unit ? 1.0 : kInf; }
  // Conventional name, e.g. "L^4", "L^{4,2}", "exp L^{3/2}", "L^{inf,3;-1}".
  std::string name() const;
};

// Multiplicative constant c with norm(X, chi_E) = c * phi(|E|) for the family's
// canonical power: (p/q)^{1/q} for Lorentz and 1 elsewhere.
double norm_constant(const SpaceDescriptor& x);

FundamentalFn fundamental_function(const SpaceDescriptor& x);
// The Young function A with (A_#)^{-1} equivalent to phi.
YoungFn fundamental_orlicz(const FundamentalFn& phi);

struct Companions {
  SpaceDescriptor lorentz_end;        // Lambda(X)
  SpaceDescriptor orlicz;             // L(X)
  SpaceDescriptor marcinkiewicz_end;  // M(X)
};
Companions companions(const SpaceDescriptor& x);
SpaceDescriptor fundamental_orlicz_space(const SpaceDescriptor& x);

SpaceDescriptor associate(const SpaceDescriptor& x);

double norm(const SpaceDescriptor& x, const SampledFn& f);

// Equivalence of fundamental functions on the relevant ends: exact for symbolic
// descriptors, otherwise a sampled ratio within [1/16, 16].
Verdict same_level(const FundamentalFn& a, const FundamentalFn& b, Interval interval);
// phi_small <~ phi_large at one end from descriptors; nullopt when not decidable.
std::optional<bool> level_below(const AsymptoticDescriptor& small, const AsymptoticDescriptor& large, Regime end);

// Descriptor translations between a Young function at one end and its level function
// (A_#)^{-1} at the corresponding end (infinity of A <-> zero of phi).
AsymptoticDescriptor level_from_young(const AsymptoticDescriptor& a);
AsymptoticDescriptor young_from_level(const AsymptoticDescriptor& phi, Regime young_end);

}  // namespace orlicz
