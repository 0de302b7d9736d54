#pragma once

#include <string>
#include <vector>

#include "orlicz/spaces.hpp"

namespace orlicz {

// The Young function G(t) = integral_0^t E_#(tau)/tau dtau attached to a quasi-convex E,
// its derivative g = E_#(t)/t and the non-increasing weight w(tau) = 1/g(G^{-1}(tau)).
struct LorentzWeightData {
  QuasiConvexFn e;
  YoungFn g_young;
  double t0;     // G vanishes on [0, t0]
  double t_inf;  // G is infinite beyond t_inf

  double g(double t) const { return g_young.derivative_at(t); }
  // Left-continuous inverses of G and g.
  double inverse(double s) const { return g_young.left_inverse_at(s); }
  double g_inverse(double s) const { return g_young.derivative().left_inverse_at(s); }
  // w(0) = inf; zero once G^{-1} reaches t_inf.
  double weight(double tau) const;
};

// Throws ConditionViolated when the sandwich E_#^{-1} <= G^{-1} <= 2 E_#^{-1} fails on the grid.
LorentzWeightData build_lorentz_weight(const QuasiConvexFn& e);

// Right-continuous step function: values[0] on [0, knots[0]), values[i] on
// [knots[i-1], knots[i]), values.back() beyond the last knot. Values may end at +inf.
MonotoneFn step_chain(const std::vector<double>& knots, const std::vector<double>& values);

// Young function with derivative max(a, a(t)) below t (t = 1 unless a vanishes there);
// equivalent to A near infinity, hence defines the same space on (0, 1).
YoungFn flatten_near_zero(const YoungFn& a, double t = 1.0);

struct OlGap {
  double lhs = 0.0;           // integral G^{-1}(f_*) v
  double weight_term = 0.0;   // integral g^{-1}(v / (lambda a)) v
  double modular_term = 0.0;  // lambda integral A(|f|)
  double rhs() const { return weight_term + modular_term; }
};

// Both sides of the weighted Young-type inequality. The weight v is read as a step
// function on (0, inf) with its pieces laid out from the origin; f must be bounded.
OlGap ol_inequality_gap(const YoungFn& a, const YoungFn& g, const SampledFn& v, const SampledFn& f, double lambda);

// integral_0^inf g^{-1}(1 / (lambda a(t))) dt with g = E_#(t)/t; +inf on divergence.
double orlicz_lambda_embedding_integral(const YoungFn& a, const QuasiConvexFn& e, double lambda);
// integral_0^inf W(w^{-1}(lambda a(t) t^{1-q})) t^{q-1} dt, W the primitive of w and
// w^{-1}(s) = |{w > s}|.
double classical_lorentz_embedding_integral(const YoungFn& a, const SampledFn& w, double q, double lambda);

struct Witness {
  YoungFn a;
  double lambda_norm;  // norm of f in Lambda^E
  double luxemburg;    // norm of f in L^A
  double modular_at_h; // modular of f / (2 lambda_norm)
  double n1;           // embedding integral at lambda = 1
};

// Young function A with ||f||_{L^A} <= 2 ||f||_{Lambda^E} and embedding integral N_1 <= 1.
// f must be a bounded step function.
Witness construct_witness_young(const SampledFn& f, const QuasiConvexFn& e);

// Almost-compact embedding L^A(0,1) ->* Lambda^E(0,1).
Verdict ac_embedding_check(const YoungFn& a, const QuasiConvexFn& e);

enum class Diagonality { SubDiagonal, UniformlySubDiagonal, NotSubDiagonal, Unknown };
std::string to_string(Diagonality d);

struct DiagonalityStatus {
  Diagonality status = Diagonality::Unknown;
  std::string rule;

  bool sub_diagonal() const { return status != Diagonality::NotSubDiagonal; }
  bool uniform() const { return status == Diagonality::UniformlySubDiagonal; }
};

// Spaces over (0, 1) in the Lebesgue, Orlicz, Lorentz, Lambda and classical Lorentz
// families; `Unknown` means sub-diagonal with uniformity left open.
DiagonalityStatus subdiagonality_status(const SpaceDescriptor& x);

// inf{lambda > 0 : ||F(|f| / lambda)||_X <= 1}; f must be bounded.
double lifted_norm(const YoungFn& f_outer, const SpaceDescriptor& x, const SampledFn& f);

}  // namespace orlicz
