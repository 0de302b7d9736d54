#include "orlicz/alternative.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/diagonality.hpp"

namespace orlicz {

std::string to_string(Side s) { return s == Side::Target ? "target" : "domain"; }

std::string to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Optimal: return "Optimal";
    case OutcomeKind::NoOptimal: return "NoOptimal";
    case OutcomeKind::Undecided: return "Undecided";
  }
  return "?";
}

std::string AlternativeOutcome::summary() const {
  if (kind == OutcomeKind::Optimal && space) return "Optimal(" + space->name() + ")";
  return to_string(kind);
}

AlternativeOutcome outcome_from(Side side, const SpaceDescriptor& candidate, Verdict evidence, std::string relation) {
  AlternativeOutcome out;
  out.side = side;
  out.relation = std::move(relation);
  switch (evidence.status) {
    case Status::Holds:
      out.kind = OutcomeKind::Optimal;
      out.space = candidate;
      break;
    case Status::Fails:
      out.kind = OutcomeKind::NoOptimal;
      out.reason = side == Side::Target ? "the space is not contained in its fundamental Orlicz space"
                                        : "the fundamental Orlicz space is not contained in the space";
      break;
    case Status::Undecided:
      out.kind = OutcomeKind::Undecided;
      out.reason = "embedding could not be decided: " + evidence.note;
      break;
  }
  out.evidence = std::move(evidence);
  return out;
}

// ---------------------------------------------------------------------------
// Lorentz-Zygmund coordinates

namespace {

std::optional<LzCoordinates> from_generator(Family family, const AsymptoticDescriptor& d) {
  switch (d.cls) {
    case GrowthClass::PowerLog: {
      if (d.p < 1.0) return std::nullopt;
      if (d.p == 1.0) {
        if (d.alpha != 0.0) return std::nullopt;
        return LzCoordinates{1.0, 1.0, 0.0};
      }
      const double a = d.alpha / d.p;
      if (family == Family::Orlicz) return LzCoordinates{d.p, d.p, a};
      if (family == Family::Lambda) return LzCoordinates{d.p, 1.0, a};
      return LzCoordinates{d.p, kInf, a};
    }
    case GrowthClass::Exponential: {
      const double b = -1.0 / d.gamma;
      if (family == Family::Lambda) return LzCoordinates{kInf, 1.0, b - 1.0};
      return LzCoordinates{kInf, kInf, b};
    }
    case GrowthClass::InfiniteBeyond: return LzCoordinates{kInf, kInf, 0.0};
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<LzCoordinates> lz_coordinates(const SpaceDescriptor& x) {
  std::optional<LzCoordinates> c;
  switch (x.family) {
    case Family::Lebesgue: c = LzCoordinates{x.p, x.p, 0.0}; break;
    case Family::Lorentz: c = LzCoordinates{x.p, x.q, 0.0}; break;
    case Family::LorentzZygmund:
      if (x.p == 1.0) return std::nullopt;
      c = LzCoordinates{x.p, x.q, x.alpha};
      break;
    case Family::Orlicz:
    case Family::Lambda:
    case Family::Marcinkiewicz: {
      const bool orlicz = x.family == Family::Orlicz;
      const auto& inf = orlicz ? x.young->infinity_descriptor() : x.generator->infinity_descriptor();
      const auto& zero = orlicz ? x.young->zero_descriptor() : x.generator->zero_descriptor();
      if (x.interval == Interval::HalfLine && !(inf == zero && inf.is_pure_power())) return std::nullopt;
      c = from_generator(x.family, inf);
      break;
    }
    case Family::ClassicalLorentz: return std::nullopt;
  }
  if (c && x.interval == Interval::HalfLine && (c->alpha != 0.0 || c->p == kInf)) return std::nullopt;
  return c;
}

bool lz_embeds(const LzCoordinates& a, const LzCoordinates& b) {
  if (a.p != b.p) return a.p > b.p;
  const double ra = a.q == kInf ? 0.0 : 1.0 / a.q;
  const double rb = b.q == kInf ? 0.0 : 1.0 / b.q;
  constexpr double eps = 1e-12;
  if (a.p == kInf) {
    const double ba = a.alpha + ra;
    const double bb = b.alpha + rb;
    if (a.q <= b.q) return ba >= bb - eps;
    return ba > bb + eps;
  }
  if (a.q <= b.q) return a.alpha >= b.alpha - eps;
  return a.alpha + ra > b.alpha + rb + eps;
}

// ---------------------------------------------------------------------------
// Embeddings

namespace {

bool same_descriptor(const SpaceDescriptor& x, const SpaceDescriptor& y) {
  if (x.family != y.family || x.interval != y.interval) return false;
  switch (x.family) {
    case Family::Lebesgue:
    case Family::Lorentz:
    case Family::LorentzZygmund: return x.p == y.p && x.q == y.q && x.alpha == y.alpha;
    case Family::Orlicz: return x.young == y.young;
    case Family::Lambda:
    case Family::Marcinkiewicz: return x.generator == y.generator;
    case Family::ClassicalLorentz: return x.weight == y.weight && x.q == y.q;
  }
  return false;
}

// Whether phi_y <~ phi_x on every relevant end; nullopt when not decidable.
std::optional<bool> level_dominated(const FundamentalFn& phi_y, const FundamentalFn& phi_x, Interval interval) {
  std::vector<Regime> ends{Regime::NearZero};
  if (interval == Interval::HalfLine) ends.push_back(Regime::NearInfinity);
  bool decided = true;
  for (Regime end : ends) {
    const auto r = level_below(phi_y.descriptor(end), phi_x.descriptor(end), end);
    if (r && !*r) return false;
    if (!r) decided = false;
  }
  if (decided) return true;
  const Grid grid;
  const double top = interval == Interval::Unit ? 1.0 : grid.hi();
  std::vector<double> ratios;
  for (double s : grid.points_between(grid.lo(), top)) {
    const double r = phi_y(s) / phi_x(s);
    if (std::isnan(r)) continue;
    ratios.push_back(r);
  }
  if (ratios.empty()) return std::nullopt;
  std::vector<double> sorted = ratios;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(sorted.size() / 2), sorted.end());
  const double median = sorted[sorted.size() / 2];
  const double worst = *std::max_element(ratios.begin(), ratios.end());
  if (worst <= 16.0 * median) return true;
  return std::nullopt;
}

}  // namespace

Verdict embeds(const SpaceDescriptor& x, const SpaceDescriptor& y) {
  if (same_descriptor(x, y)) return Verdict::holds("identical spaces", 1.0);
  if (x.interval != y.interval) throw Error(ErrorKind::InvalidInput, "spaces live on different intervals");

  const FundamentalFn phi_x = fundamental_function(x);
  const FundamentalFn phi_y = fundamental_function(y);
  const auto level = level_dominated(phi_y, phi_x, x.interval);
  if (level && !*level) {
    return Verdict::fails("fundamental function of " + y.name() + " is not dominated by that of " + x.name());
  }

  const auto cx = lz_coordinates(x);
  const auto cy = lz_coordinates(y);
  if (cx && cy) {
    const bool ok = x.interval == Interval::Unit ? lz_embeds(*cx, *cy) : (cx->p == cy->p && cx->q <= cy->q);
    return ok ? Verdict::holds("Lorentz-Zygmund index comparison") : Verdict::fails("Lorentz-Zygmund index comparison");
  }

  if (y.family == Family::Marcinkiewicz || x.family == Family::Lambda) {
    if (level) return Verdict::holds("endpoint space on a dominated fundamental level");
    return Verdict::undecided("fundamental functions could not be compared");
  }

  const Regime regime = x.interval == Interval::Unit ? Regime::NearInfinity : Regime::Global;
  if (x.family == Family::Orlicz && y.family == Family::Orlicz) {
    Verdict v = dominates(*x.young, *y.young, regime);
    v.note = "Young function comparison: " + v.note;
    return v;
  }
  if (x.family == Family::Orlicz && y.family == Family::Lambda) {
    const YoungFn a = x.interval == Interval::Unit ? flatten_near_zero(*x.young) : *x.young;
    for (int k = -10; k <= 10; ++k) {
      const double lambda = std::ldexp(1.0, k);
      const double n = orlicz_lambda_embedding_integral(a, *y.generator, lambda);
      if (n < kInf) return Verdict::holds("finite embedding integral", n + lambda);
    }
    return Verdict::undecided("embedding integral infinite for all sampled lambda");
  }
  return Verdict::undecided("no rule decides " + x.name() + " -> " + y.name());
}

AlternativeOutcome principal_alternative_target(const SpaceDescriptor& y) {
  if (y.family == Family::Orlicz) {
    return outcome_from(Side::Target, y, Verdict::holds("Orlicz spaces are their own fundamental Orlicz space"),
                        y.name() + " -> " + y.name());
  }
  const SpaceDescriptor l = fundamental_orlicz_space(y);
  return outcome_from(Side::Target, l, embeds(y, l), y.name() + " -> " + l.name());
}

AlternativeOutcome principal_alternative_domain(const SpaceDescriptor& x) {
  if (x.family == Family::Orlicz) {
    return outcome_from(Side::Domain, x, Verdict::holds("Orlicz spaces are their own fundamental Orlicz space"),
                        x.name() + " -> " + x.name());
  }
  const SpaceDescriptor l = fundamental_orlicz_space(x);
  return outcome_from(Side::Domain, l, embeds(l, x), l.name() + " -> " + x.name());
}

}  // namespace orlicz
