#pragma once

#include <optional>
#include <utility>

#include "orlicz/alternative.hpp"

namespace orlicz {

// ---------------------------------------------------------------------------
// Sobolev embeddings of order m on an n-dimensional domain of unit measure.

struct SobolevContext {
  int m = 1;
  int n = 2;

  SobolevContext() = default;
  SobolevContext(int order, int dimension);
  double alpha() const { return static_cast<double>(m) / n; }
  double limiting() const { return static_cast<double>(n) / m; }
};

struct BoydEstimate {
  double upper_index = kInf;
  std::pair<double, double> window{kInf, kInf};
  bool exact = false;
};

// t -> t sup_{s > t} phi_y(s^beta) s^{alpha - 1}, restricted to (0, 1).
FundamentalFn sobolev_optimal_domain_fundamental(const FundamentalFn& phi_y, const SobolevContext& ctx,
                                                 double beta = 1.0);

// Young function whose inverse is t inf_{1 < s < t} B^{-1}(s) s^{m/n - 1} near infinity.
YoungFn sobolev_reduced_young(const YoungFn& b, const SobolevContext& ctx);

// Exact from a power-log descriptor, +inf for exponential or bounded-support growth,
// otherwise a log-log slope fit over the top grid decades extrapolated in 1/log t.
BoydEstimate boyd_upper_index(const YoungFn& b, bool use_descriptors = true);

// Optimal when the index is below the threshold, NoOptimal above; Undecided for
// non-exact estimates within `band` of the threshold.
OutcomeKind boyd_decision(const BoydEstimate& est, double threshold, double band = 0.05);

// `band` is passed to boyd_decision for numeric index estimates.
AlternativeOutcome sobolev_orlicz_domain(const SpaceDescriptor& target, const SobolevContext& ctx, double band = 0.05);
AlternativeOutcome sobolev_no_largest_on_level(const SpaceDescriptor& target, const SobolevContext& ctx,
                                               double band = 0.05);

Verdict sobolev_target_condition(const FundamentalFn& phi_x, const SobolevContext& ctx);
// phi_y(t) = t^{-m/n} phi_x(t) on (0, 1); throws ConditionViolated when the condition fails.
FundamentalFn sobolev_optimal_target_fundamental(const FundamentalFn& phi_x, const SobolevContext& ctx);

// ---------------------------------------------------------------------------
// Averaged Young function t -> t integral_0^t B(tau)/tau^2 dtau, built from its
// derivative integral_0^t B/tau^2 + B(t)/t. Throws IntegralDiverges when the integral
// diverges at the origin.
YoungFn averaged_young(const YoungFn& b, const Grid& grid = {});

// Whether integral_0^1 B(tau)/tau^2 dtau is finite.
Verdict origin_integrability(const YoungFn& b);

// ---------------------------------------------------------------------------
// Hardy-Littlewood maximal operator on R^n.

struct MaximalTarget {
  AlternativeOutcome outcome;
  std::optional<YoungFn> conjugate_target;  // integral_0^inf conj(A)(t tau) e^{-tau} dtau
  std::optional<YoungFn> target;            // its complementary function
  Verdict gate;
  Verdict reduction;
};

// integral_0^inf F(t0 tau) e^{-tau} dtau for one t0; +inf when divergent.
double exponential_average(const YoungFn& f, double t0);
Verdict maximal_gate(const YoungFn& a);
MaximalTarget maximal_optimal_target(const YoungFn& a);

struct MaximalDomain {
  AlternativeOutcome outcome;
  std::optional<YoungFn> domain;
  Verdict gate;
};
MaximalDomain maximal_optimal_domain(const YoungFn& b);

// ---------------------------------------------------------------------------
// Laplace transform on (0, inf).

struct LaplaceTarget {
  AlternativeOutcome outcome;
  std::optional<YoungFn> averaged;  // t integral_0^t conj(A)/tau^2
  std::optional<YoungFn> target;    // Young function equivalent to its correlative
  Verdict gate;
};

Verdict laplace_gate(const YoungFn& a);
LaplaceTarget laplace_optimal_target(const YoungFn& a);
Verdict laplace_interpolation_sufficient(const YoungFn& a);

}  // namespace orlicz
