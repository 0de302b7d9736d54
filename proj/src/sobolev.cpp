#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "orlicz/operators.hpp"

namespace orlicz {

namespace {

using D = AsymptoticDescriptor;
constexpr double kEps = 1e-12;

std::optional<YoungFn> as_young(const SpaceDescriptor& x) {
  if (x.family == Family::Orlicz) return *x.young;
  if (x.family == Family::Lebesgue) return x.p == kInf ? young_linfty() : young_power(x.p);
  return std::nullopt;
}

// Near-infinity class of the reduced Young function for a target class at infinity.
D reduced_descriptor(const D& d, const SobolevContext& ctx) {
  const double a = ctx.alpha();
  switch (d.cls) {
    case GrowthClass::PowerLog: {
      if (d.p < 1.0) return D::numeric();
      const double gap = 1.0 / d.p - (1.0 - a);
      if (gap < -kEps) {
        const double r = 1.0 / d.p + a;
        return D::power_log(1.0 / r, d.alpha / (d.p * r));
      }
      if (gap > kEps) return D::power_log(1.0, 0.0);
      return d.alpha > 0.0 ? D::power_log(1.0, d.alpha / d.p) : D::power_log(1.0, 0.0);
    }
    case GrowthClass::Exponential: return D::power_log(ctx.limiting(), -ctx.limiting() / d.gamma);
    case GrowthClass::InfiniteBeyond: return D::power_log(ctx.limiting(), 0.0);
    default: return D::numeric();
  }
}

std::string fmt(double x) { return format_number(x); }

}  // namespace

SobolevContext::SobolevContext(int order, int dimension) : m(order), n(dimension) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw Error(ErrorKind::InvalidInput, "Sobolev context requires n >= 2 and 1 <= m <= n - 1");
  }
}

FundamentalFn sobolev_optimal_domain_fundamental(const FundamentalFn& phi_y, const SobolevContext& ctx, double beta) {
  if (!(beta > 0.0)) throw Error(ErrorKind::InvalidInput, "beta must be positive");
  const double a = ctx.alpha();
  const Grid grid;
  std::vector<double> ss = grid.points_between(grid.lo(), 1.0);
  if (ss.empty() || ss.back() < 1.0) ss.push_back(1.0);
  auto h = [phi_y, a, beta](double s) { return phi_y(std::pow(s, beta)) * std::pow(s, a - 1.0); };
  auto suffix = std::make_shared<std::vector<double>>(ss.size());
  for (std::size_t i = ss.size(); i-- > 0;) {
    const double v = h(ss[i]);
    (*suffix)[i] = i + 1 < ss.size() ? std::max(v, (*suffix)[i + 1]) : v;
  }
  auto points = std::make_shared<std::vector<double>>(std::move(ss));
  auto exact = [points, suffix, h](double t) {
    t = std::min(t, 1.0);
    const auto it = std::upper_bound(points->begin(), points->end(), t);
    double best = h(t);
    if (it != points->end()) best = std::max(best, (*suffix)[static_cast<std::size_t>(it - points->begin())]);
    return t * best;
  };

  D nz = D::numeric();
  const D& y0 = phi_y.near_zero();
  if (y0.cls == GrowthClass::PowerLog) {
    const double e = beta * y0.p + a - 1.0;
    if (e < -kEps) {
      nz = D::power_log(beta * y0.p + a, y0.alpha);
    } else if (e > kEps || y0.alpha <= 0.0) {
      nz = D::power_log(1.0, 0.0);
    } else {
      nz = D::power_log(1.0, y0.alpha);
    }
  }
  return FundamentalFn::sampled(exact, 1.0, nz, D::power_log(0.0, 0.0));
}

YoungFn sobolev_reduced_young(const YoungFn& b, const SobolevContext& ctx) {
  const double a = ctx.alpha();
  const D inf_d = reduced_descriptor(b.infinity_descriptor(), ctx);
  const Grid grid;
  std::vector<double> ts = grid.points_between(1.0, grid.hi());
  std::vector<double> inv(ts.size());
  double running = kInf;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    running = std::min(running, b.right_inverse_at(ts[i]) * std::pow(ts[i], a - 1.0));
    inv[i] = ts[i] * running;
  }
  const D zero_d = inf_d.cls == GrowthClass::PowerLog ? D::power_log(inf_d.p, 0.0) : D::numeric();
  const MonotoneFn inverse = MonotoneFn::from_samples(ts, inv, inverse_descriptor(zero_d, Regime::NearZero),
                                                      inverse_descriptor(inf_d, Regime::NearInfinity));
  const MonotoneFn values = inverse.right_inverse().with_descriptors(zero_d, inf_d);
  return youngify(QuasiConvexFn(values));
}

BoydEstimate boyd_upper_index(const YoungFn& b, bool use_descriptors) {
  if (use_descriptors) {
    const D& d = b.infinity_descriptor();
    if (d.cls == GrowthClass::PowerLog) return {d.p, {d.p, d.p}, true};
    if (d.cls == GrowthClass::Exponential || d.cls == GrowthClass::InfiniteBeyond) return {kInf, {kInf, kInf}, true};
  }
  if (b.infinity_threshold() < kInf) return {kInf, {kInf, kInf}, true};

  const Grid grid;
  std::vector<double> u;
  std::vector<double> slope;
  for (int k = 0; k < 12; ++k) {
    const double t0 = grid.hi() * std::pow(10.0, -3.0 + 0.25 * k);
    const double t1 = t0 * std::pow(10.0, 0.25);
    const double s = loglog_slope([&b](double t) { return b(t); }, t0, t1);
    if (std::isnan(s)) continue;
    u.push_back(1.0 / std::log(std::sqrt(t0 * t1)));
    slope.push_back(s);
  }
  if (slope.size() < 3) return {kInf, {0.0, kInf}, false};
  const double last = slope.back();
  if (last > slope.front() + 0.5) return {kInf, {last, kInf}, false};

  const double n = static_cast<double>(u.size());
  double su = 0.0, ss = 0.0, suu = 0.0, sus = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    su += u[i];
    ss += slope[i];
    suu += u[i] * u[i];
    sus += u[i] * slope[i];
  }
  const double det = n * suu - su * su;
  double index = ss / n;
  if (std::abs(det) > 1e-300) index = (ss * suu - su * sus) / det;
  double spread = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double c = det != 0.0 ? (n * sus - su * ss) / det : 0.0;
    spread = std::max(spread, std::abs(slope[i] - (index + c * u[i])));
  }
  const double lo = std::min(index, last) - spread;
  const double hi = std::max(index, last) + spread;
  return {index, {lo, hi}, false};
}

OutcomeKind boyd_decision(const BoydEstimate& est, double threshold, double band) {
  if (est.exact) return est.upper_index < threshold - kEps ? OutcomeKind::Optimal : OutcomeKind::NoOptimal;
  if (est.upper_index < threshold - band) return OutcomeKind::Optimal;
  if (est.upper_index > threshold + band) return OutcomeKind::NoOptimal;
  return OutcomeKind::Undecided;
}

AlternativeOutcome sobolev_orlicz_domain(const SpaceDescriptor& target, const SobolevContext& ctx, double band) {
  const auto b = as_young(target);
  if (!b) throw Error(ErrorKind::UnsupportedFamily, "Sobolev Orlicz domain needs an Orlicz or Lebesgue target");
  const YoungFn bn = sobolev_reduced_young(*b, ctx);
  const BoydEstimate est = boyd_upper_index(bn);
  const double threshold = ctx.limiting();
  const std::string bn_text = describe(bn.infinity_descriptor(), Regime::NearInfinity);

  AlternativeOutcome out;
  out.side = Side::Domain;
  out.kind = boyd_decision(est, threshold, band);
  out.relation = "W^" + std::to_string(ctx.m) + " L^B_n -> " + target.name();
  std::ostringstream index_text;
  index_text << "upper Boyd index " << fmt(est.upper_index);
  switch (out.kind) {
    case OutcomeKind::Optimal:
      out.space = SpaceDescriptor::orlicz(bn, target.interval);
      out.evidence = Verdict::holds(index_text.str() + " < n/m = " + fmt(threshold), est.upper_index);
      break;
    case OutcomeKind::NoOptimal:
      out.evidence = Verdict::fails(index_text.str() + " >= n/m = " + fmt(threshold), est.upper_index);
      out.reason = "B_n = " + bn_text + ", " + index_text.str() + " >= n/m = " + fmt(threshold);
      break;
    case OutcomeKind::Undecided:
      out.evidence = Verdict::undecided(index_text.str() + " within the estimate band around n/m = " + fmt(threshold));
      out.reason = out.evidence.note;
      break;
  }
  out.details = {{"B_n", bn_text},
                 {"upper_boyd_index", fmt(est.upper_index)},
                 {"index_window", "[" + fmt(est.window.first) + ", " + fmt(est.window.second) + "]"},
                 {"index_exact", est.exact ? "true" : "false"},
                 {"threshold", fmt(threshold)}};
  return out;
}

AlternativeOutcome sobolev_no_largest_on_level(const SpaceDescriptor& target, const SobolevContext& ctx, double band) {
  if (as_young(target)) return sobolev_orlicz_domain(target, ctx, band);

  const Companions comp = companions(target);
  AlternativeOutcome level = sobolev_orlicz_domain(comp.orlicz, ctx, band);
  if (level.kind == OutcomeKind::NoOptimal) {
    level.relation = "W^" + std::to_string(ctx.m) + " L^A -> " + target.name();
    level.reason = "Marcinkiewicz route: M(Y) = " + comp.marcinkiewicz_end.name() + " on the level of L(Y) = " +
                   comp.orlicz.name() + "; " + level.reason;
    level.details.emplace_back("marcinkiewicz_end", comp.marcinkiewicz_end.name());
    level.details.emplace_back("orlicz_level", comp.orlicz.name());
    return level;
  }

  if ((target.family == Family::Lorentz || target.family == Family::Lebesgue) && target.p < kInf) {
    const double inv = 1.0 / target.p + ctx.alpha();
    if (inv < 1.0 - kEps) {
      const double px = 1.0 / inv;
      const double q = target.family == Family::Lebesgue ? target.p : target.q;
      const SpaceDescriptor x = SpaceDescriptor::lorentz(px, q, target.interval);
      AlternativeOutcome out = principal_alternative_domain(x);
      out.details.emplace_back("optimal_ri_domain", x.name());
      return out;
    }
  }

  const FundamentalFn phi_x = sobolev_optimal_domain_fundamental(fundamental_function(target), ctx);
  const SpaceDescriptor candidate = SpaceDescriptor::orlicz(fundamental_orlicz(phi_x), target.interval);
  AlternativeOutcome out;
  out.side = Side::Domain;
  out.kind = OutcomeKind::Undecided;
  out.relation = candidate.name() + " -> optimal domain of " + target.name();
  out.evidence = Verdict::undecided("optimal domain known only through its fundamental level");
  out.reason = out.evidence.note;
  out.details.emplace_back("domain_level", candidate.name());
  return out;
}

Verdict sobolev_target_condition(const FundamentalFn& phi_x, const SobolevContext& ctx) {
  const double a = ctx.alpha();
  const D& d = phi_x.near_zero();
  if (d.cls == GrowthClass::PowerLog) {
    if (d.p > a + kEps) return Verdict::holds("level exponent " + fmt(d.p) + " exceeds m/n = " + fmt(a));
    return Verdict::fails("level exponent " + fmt(d.p) + " does not exceed m/n = " + fmt(a));
  }
  const Grid grid;
  const std::vector<double> ts = grid.points_between(grid.lo(), 1.0);
  for (int k = 1; k <= 20; ++k) {
    const double sigma = std::ldexp(1.0, -k);
    double c = 0.0;
    for (double t : ts) {
      if (sigma * t < grid.lo()) continue;
      c = std::max(c, phi_x(sigma * t) / (std::pow(sigma, a) * phi_x(t)));
    }
    if (c < 1.0 - 1e-9) {
      Verdict v = Verdict::holds("phi(sigma t) <= c sigma^(m/n) phi(t) on the grid", c);
      v.point = sigma;
      return v;
    }
  }
  return Verdict::undecided("no sampled sigma gives a contraction constant below 1");
}

FundamentalFn sobolev_optimal_target_fundamental(const FundamentalFn& phi_x, const SobolevContext& ctx) {
  const Verdict v = sobolev_target_condition(phi_x, ctx);
  if (v.fails_p()) throw Error(ErrorKind::ConditionViolated, "target condition fails: " + v.note);
  const double a = ctx.alpha();
  auto exact = [phi_x, a](double t) {
    t = std::min(t, 1.0);
    return std::pow(t, -a) * phi_x(t);
  };
  D nz = D::numeric();
  if (phi_x.near_zero().cls == GrowthClass::PowerLog) nz = D::power_log(phi_x.near_zero().p - a, phi_x.near_zero().alpha);
  return FundamentalFn::sampled(exact, 1.0, nz, D::power_log(0.0, 0.0));
}

}  // namespace orlicz
