#include <cmath>

#include "orlicz/operators.hpp"

namespace orlicz {

namespace {

using D = AsymptoticDescriptor;

bool pure_power_both_ends(const YoungFn& a) {
  return a.zero_descriptor() == a.infinity_descriptor() && a.infinity_descriptor().is_pure_power();
}

bool quadratic_log_class(const YoungFn& a) {
  const D& z = a.zero_descriptor();
  const D& i = a.infinity_descriptor();
  return z.cls == GrowthClass::PowerLog && i.cls == GrowthClass::PowerLog && z.p == 2.0 && i.p == 2.0 &&
         z.alpha == i.alpha;
}

YoungFn correlative_young(const YoungFn& g) {
  const Grid grid;
  return youngify(QuasiConvexFn(g.values(grid).correlative()));
}

}  // namespace

Verdict laplace_gate(const YoungFn& a) {
  Verdict v = origin_integrability(a.conjugate());
  v.note = "integral of conj(A)(t)/t^2 near 0: " + v.note;
  return v;
}

Verdict laplace_interpolation_sufficient(const YoungFn& a) {
  const Verdict d2 = delta2(a, Regime::Global);
  if (d2.fails_p()) return Verdict::fails("A violates Delta2: " + d2.note);
  const Grid grid;
  double prev = kInf;
  for (double t : grid.points()) {
    const double r = a(t) / (t * t);
    if (r > prev * (1.0 + 1e-9)) return Verdict::fails("A(t)/t^2 increases", t);
    prev = r;
  }
  if (!d2.holds_p()) return Verdict::undecided("Delta2 undecided: " + d2.note);
  return Verdict::holds("Delta2 and A(t)/t^2 non-increasing");
}

LaplaceTarget laplace_optimal_target(const YoungFn& a) {
  LaplaceTarget r;
  r.gate = laplace_gate(a);
  AlternativeOutcome& out = r.outcome;
  out.side = Side::Target;
  out.relation = "Laplace: L^A -> L^B";
  if (r.gate.fails_p()) {
    out.kind = OutcomeKind::NoOptimal;
    out.evidence = r.gate;
    out.reason = "no Orlicz target exists: " + r.gate.note;
    return r;
  }
  if (!r.gate.holds_p()) {
    out.kind = OutcomeKind::Undecided;
    out.evidence = r.gate;
    out.reason = r.gate.note;
    return r;
  }

  const YoungFn ga = averaged_young(a.conjugate());
  const YoungFn ba = correlative_young(ga);
  r.averaged = ga;
  r.target = ba;
  const SpaceDescriptor candidate = SpaceDescriptor::orlicz(ba, Interval::HalfLine);
  const std::string relation = "Laplace: L^A -> " + candidate.name();

  if (pure_power_both_ends(a)) {
    const double p = a.infinity_descriptor().p;
    if (p == 1.0) {
      out = outcome_from(Side::Target, candidate, Verdict::holds("L^{inf,1} -> L^{inf}"), relation);
    } else {
      const double pc = p / (p - 1.0);
      const SpaceDescriptor rep = SpaceDescriptor::lorentz(pc, p, Interval::HalfLine);
      Verdict v = embeds(rep, SpaceDescriptor::lebesgue(pc, Interval::HalfLine));
      v.note = "optimal target " + rep.name() + " against its Orlicz level: " + v.note;
      out = outcome_from(Side::Target, candidate, v, relation);
    }
  } else if (quadratic_log_class(a)) {
    out = outcome_from(Side::Target, candidate, Verdict::holds("bounded on L^A for t^2 log^a(t + 1/t)"), relation);
  } else {
    const Verdict interp = laplace_interpolation_sufficient(a);
    if (interp.holds_p()) {
      const YoungFn direct = correlative_young(a.conjugate());
      r.target = direct;
      out = outcome_from(Side::Target, SpaceDescriptor::orlicz(direct, Interval::HalfLine), interp, relation);
    } else {
      out.kind = OutcomeKind::Undecided;
      out.evidence = Verdict::undecided("optimal r.i. target not identified: " + interp.note);
      out.reason = out.evidence.note;
      out.relation = relation;
    }
  }
  out.details = {{"B_A", r.target->describe()}};
  return r;
}

}  // namespace orlicz
