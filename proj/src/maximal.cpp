#include <algorithm>
#include <cmath>

#include "orlicz/operators.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

namespace {

using D = AsymptoticDescriptor;

// integral_0^inf f(tau) e^{-tau} dtau for non-negative f of at most sub-exponential growth.
// The range is extended by doubling until the integrand has decayed by twelve orders.
double exponential_moment(const std::function<double(double)>& f) {
  auto g = [&f](double tau) {
    const double v = f(tau);
    if (v == 0.0) return 0.0;
    return v * std::exp(-tau);
  };
  double upper = 50.0;
  while (true) {
    const double gu = g(upper);
    const double g2 = g(2.0 * upper);
    if (std::isinf(gu) || std::isinf(g2) || std::isnan(gu) || std::isnan(g2)) return kInf;
    if (g2 <= 1e-12 * gu || (gu == 0.0 && g2 == 0.0)) break;
    upper *= 2.0;
    if (upper > 1e7) return kInf;
  }
  double total = 0.0;
  double lo = 0.0;
  for (double hi = 1.0; lo < upper; hi = std::min(2.0 * hi, upper)) {
    const double piece = quad::integrate(g, lo, hi, 1e-10);
    if (!std::isfinite(piece)) return kInf;
    total += piece;
    lo = hi;
  }
  const double gu = g(upper);
  const double g2 = g(2.0 * upper);
  if (gu > 0.0 && g2 > 0.0) {
    const double rate = std::log(gu / g2) / upper;
    const double tail = gu / rate;
    const double g3 = g(3.0 * upper);
    const double rate_far = g3 > 0.0 ? std::log(g2 / g3) / upper : rate;
    if (std::abs(rate_far - rate) > 0.5 * rate && tail > 1e-8 * total) {
      throw Error(ErrorKind::QuadratureNonConvergent, "exponential tail estimates disagree");
    }
    total += tail;
  }
  return total;
}

D derivative_class(const D& d) {
  if (d.cls != GrowthClass::PowerLog) return D::numeric();
  if (d.p > 1.0) return D::power_log(d.p - 1.0, d.alpha);
  if (d.p == 1.0 && d.alpha > -1.0) return D::power_log(0.0, d.alpha + 1.0);
  return D::numeric();
}

bool power_log_above_one(const D& d) { return d.cls == GrowthClass::PowerLog && d.p > 1.0; }

AlternativeOutcome simple_outcome(Side side, OutcomeKind kind, Verdict evidence, std::string relation,
                                  std::string reason = {}) {
  AlternativeOutcome out;
  out.side = side;
  out.kind = kind;
  out.evidence = std::move(evidence);
  out.relation = std::move(relation);
  out.reason = std::move(reason);
  return out;
}

}  // namespace

Verdict origin_integrability(const YoungFn& b) {
  if (b.zero_threshold() > 0.0) return Verdict::holds("vanishes near the origin");
  const D& d = b.zero_descriptor();
  if (d.cls == GrowthClass::ZeroOnInterval) return Verdict::holds("vanishes near the origin");
  if (d.cls == GrowthClass::PowerLog) {
    if (d.p > 1.0 || (d.p == 1.0 && d.alpha < -1.0)) return Verdict::holds("power-log class at the origin");
    return Verdict::fails("B(t)/t^2 is not integrable at the origin", 0.0);
  }
  const double v = quad::integrate_half_line([&b](double t) { return b(t) / (t * t); }, 0.0, 1.0);
  if (v < kInf) return Verdict::holds("numeric integral", v);
  return Verdict::fails("numeric integral diverges at the origin", 0.0);
}

YoungFn averaged_young(const YoungFn& b, const Grid& grid) {
  if (origin_integrability(b).fails_p()) {
    throw Error(ErrorKind::IntegralDiverges, "integral of B(t)/t^2 diverges at the origin");
  }
  auto f = [&b](double t) { return b(t) / (t * t); };
  std::vector<double> ts = b.derivative().evaluation_points(grid);
  std::vector<double> d(ts.size());

  double running = 0.0;
  const double t0 = ts.front();
  if (b.zero_threshold() < t0) {
    const D& zd = b.zero_descriptor();
    if (zd.is_pure_power() && zd.p > 1.0) {
      running = b(t0) / (t0 * (zd.p - 1.0));
    } else {
      running = quad::tail_to_zero(t0, f(t0), ts[1], f(ts[1]));
    }
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0 && running < kInf) {
      const double hi = ts[i];
      const double lo = ts[i - 1];
      if (b(hi) == kInf) {
        running = kInf;
      } else {
        running += quad::integrate(f, lo, hi, 1e-12);
      }
    }
    const double bt = b(ts[i]);
    d[i] = running == kInf || bt == kInf ? kInf : running + bt / ts[i];
  }
  const D dz = b.zero_descriptor().cls == GrowthClass::ZeroOnInterval ? b.zero_descriptor()
                                                                        : derivative_class(b.zero_descriptor());
  D di = derivative_class(b.infinity_descriptor());
  if (b.infinity_descriptor().cls == GrowthClass::InfiniteBeyond) di = b.infinity_descriptor();
  return YoungFn::from_derivative(MonotoneFn::from_samples(ts, d, dz, di));
}

double exponential_average(const YoungFn& f, double t0) {
  if (f.infinity_threshold() < kInf) return kInf;
  return exponential_moment([&f, t0](double tau) { return f(t0 * tau); });
}

Verdict maximal_gate(const YoungFn& a) {
  const YoungFn at = a.conjugate();
  if (at.infinity_threshold() < kInf) {
    return Verdict::fails("complementary function is infinite beyond a finite point", at.infinity_threshold());
  }
  const D& d = at.infinity_descriptor();
  switch (d.cls) {
    case GrowthClass::InfiniteBeyond:
      return Verdict::fails("complementary function is infinite beyond a finite point");
    case GrowthClass::PowerLog: return Verdict::holds("power-log complementary function", 1.0);
    case GrowthClass::Exponential:
      if (d.gamma < 1.0) return Verdict::holds("exp(t^gamma) with gamma < 1", 1.0);
      if (d.gamma == 1.0) return Verdict::holds("exp(t) integrates against e^{-tau} for t0 < 1", 0.5);
      return Verdict::fails("exp(t^gamma) with gamma > 1 is not integrable against e^{-tau}");
    default: break;
  }
  const Grid grid;
  for (int k = static_cast<int>(grid.lo_decade); k <= static_cast<int>(grid.hi_decade); ++k) {
    const double t0 = std::pow(10.0, k);
    if (exponential_average(at, t0) < kInf) {
      Verdict v = Verdict::holds("finite exponential average at a sampled t0");
      v.point = t0;
      return v;
    }
  }
  return Verdict::undecided("exponential average infinite at every sampled t0");
}

MaximalTarget maximal_optimal_target(const YoungFn& a) {
  MaximalTarget r;
  r.gate = maximal_gate(a);
  const std::string relation = "M: L^A -> L^B";
  if (r.gate.fails_p()) {
    r.outcome = simple_outcome(Side::Target, OutcomeKind::NoOptimal, r.gate, relation,
                               "no Orlicz target exists: " + r.gate.note);
    return r;
  }
  if (!r.gate.holds_p()) {
    r.outcome = simple_outcome(Side::Target, OutcomeKind::Undecided, r.gate, relation, r.gate.note);
    return r;
  }

  const YoungFn at = a.conjugate();
  const Grid grid;
  const std::vector<double> ts = grid.points();
  std::vector<double> d(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    d[i] = exponential_moment([&at, t](double tau) { return tau * at.derivative_at(t * tau); });
    if (i > 0) d[i] = std::max(d[i], d[i - 1]);
  }
  const D& az = at.zero_descriptor();
  const D& ai = at.infinity_descriptor();
  const bool regular = az.cls == GrowthClass::PowerLog && ai.cls == GrowthClass::PowerLog;
  const D dz = regular ? derivative_descriptor(az) : D::numeric();
  const D di = regular ? derivative_descriptor(ai) : D::numeric();
  YoungFn bt = YoungFn::from_derivative(MonotoneFn::from_samples(ts, d, dz, di));
  YoungFn ba = bt.conjugate();
  r.conjugate_target = bt;
  r.target = ba;

  if (power_log_above_one(a.zero_descriptor()) && power_log_above_one(a.infinity_descriptor())) {
    r.reduction = Verdict::holds("complementary function satisfies Delta2 globally");
  } else {
    try {
      r.reduction = dominates(a, averaged_young(ba), Regime::Global);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IntegralDiverges) throw;
      r.reduction = Verdict::fails("integral of B_A(t)/t^2 diverges at the origin");
    }
  }
  const SpaceDescriptor candidate = SpaceDescriptor::orlicz(ba, Interval::HalfLine);
  r.outcome = outcome_from(Side::Target, candidate, r.reduction, "M: L^A -> " + candidate.name());
  if (r.outcome.kind == OutcomeKind::NoOptimal) r.outcome.reason = "reduction inequality fails for every sampled K";
  r.outcome.details = {{"B_A", ba.describe()}, {"gate", r.gate.note}};
  return r;
}

MaximalDomain maximal_optimal_domain(const YoungFn& b) {
  MaximalDomain r;
  r.gate = origin_integrability(b);
  const std::string relation = "M: L^A -> L^B";
  if (r.gate.fails_p()) {
    r.outcome = simple_outcome(Side::Domain, OutcomeKind::NoOptimal, r.gate, relation,
                               "no Orlicz domain space exists: " + r.gate.note);
    return r;
  }
  YoungFn ab = averaged_young(b);
  r.domain = ab;
  const SpaceDescriptor candidate = SpaceDescriptor::orlicz(ab, Interval::HalfLine);
  r.outcome = outcome_from(Side::Domain, candidate,
                           Verdict::holds("reduction inequality holds for A_B with K = 1", 1.0),
                           "M: " + candidate.name() + " -> L^B");
  r.outcome.details = {{"A_B", ab.describe()}};
  return r;
}

}  // namespace orlicz
