#include "orlicz/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

std::string to_string(Family f) {
  switch (f) {
    case Family::Lebesgue: return "lebesgue";
    case Family::Lorentz: return "lorentz";
    case Family::LorentzZygmund: return "lorentz-zygmund";
    case Family::Orlicz: return "orlicz";
    case Family::Lambda: return "lambda";
    case Family::Marcinkiewicz: return "marcinkiewicz";
    case Family::ClassicalLorentz: return "classical-lorentz";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Level descriptors

AsymptoticDescriptor level_from_young(const AsymptoticDescriptor& a) {
  using D = AsymptoticDescriptor;
  switch (a.cls) {
    case GrowthClass::PowerLog:
      if (a.p > 0.0) return D::power_log(1.0 / a.p, a.alpha / a.p);
      return D::numeric();
    case GrowthClass::Exponential: return D::power_log(0.0, -1.0 / a.gamma);
    case GrowthClass::ZeroOnInterval:
    case GrowthClass::InfiniteBeyond: return D::power_log(0.0, 0.0);
    case GrowthClass::NumericOnly: return D::numeric();
  }
  return D::numeric();
}

AsymptoticDescriptor young_from_level(const AsymptoticDescriptor& phi, Regime young_end) {
  using D = AsymptoticDescriptor;
  if (phi.cls != GrowthClass::PowerLog) return D::numeric();
  if (phi.p > 0.0) return D::power_log(1.0 / phi.p, phi.alpha / phi.p);
  if (phi.alpha == 0.0) {
    return young_end == Regime::NearZero ? D::zero_on_interval(0.0) : D::infinite_beyond(0.0);
  }
  if (phi.alpha < 0.0 && young_end == Regime::NearInfinity) return D::exponential(-1.0 / phi.alpha);
  return D::numeric();
}

std::optional<bool> level_below(const AsymptoticDescriptor& small, const AsymptoticDescriptor& large, Regime end) {
  if (small.cls != GrowthClass::PowerLog || large.cls != GrowthClass::PowerLog) return std::nullopt;
  constexpr double eps = 1e-12;
  if (std::abs(small.p - large.p) > eps) {
    return end == Regime::NearZero ? small.p > large.p : small.p < large.p;
  }
  return small.alpha <= large.alpha + eps;
}

// ---------------------------------------------------------------------------
// FundamentalFn

namespace {

// Chain equal to f on [0, length] and constant f(length) beyond.
MonotoneFn cap_chain(const MonotoneFn& f, double length) {
  if (length == kInf) return f;
  const auto& vs = f.vertices();
  const auto& es = f.edges();
  std::vector<Vertex> nv;
  std::vector<Edge> ne;
  std::size_t i = 0;
  for (; i + 1 < vs.size() && vs[i + 1].t < length; ++i) {
    nv.push_back(vs[i]);
    ne.push_back(es[i]);
  }
  nv.push_back(vs[i]);
  const double top = f(length);
  if (vs[i].t < length) {
    ne.push_back(es[i]);
    nv.push_back({length, top});
  }
  ne.push_back(Edge{});
  nv.push_back({kInf, top});
  return MonotoneFn::from_chain(std::move(nv), std::move(ne), f.zero_descriptor(),
                                AsymptoticDescriptor::power_log(0.0, 0.0));
}

}  // namespace

FundamentalFn::FundamentalFn(MonotoneFn chain, AsymptoticDescriptor near_zero, AsymptoticDescriptor near_infinity,
                             std::function<double(double)> exact)
    : chain_(vanish_at_origin(chain)), near_zero_(near_zero), near_infinity_(near_infinity), exact_(std::move(exact)) {}

double FundamentalFn::operator()(double s) const {
  if (!(s > 0.0)) return 0.0;
  return exact_ ? exact_(s) : chain_(s);
}

FundamentalFn FundamentalFn::power(double r, double coefficient) {
  const auto d = AsymptoticDescriptor::power_log(r, 0.0);
  MonotoneFn chain = r > 0.0 ? MonotoneFn::power(coefficient, r) : MonotoneFn::constant(coefficient);
  return FundamentalFn(chain, d, d, [r, coefficient](double s) { return coefficient * std::pow(s, r); });
}

FundamentalFn FundamentalFn::sampled(const std::function<double(double)>& exact, double length,
                                     AsymptoticDescriptor near_zero, AsymptoticDescriptor near_infinity,
                                     int per_decade) {
  Grid grid;
  grid.per_decade = per_decade;
  std::vector<double> ts;
  for (double t : grid.points()) {
    if (t < length * (1.0 - 1e-12)) ts.push_back(t);
  }
  if (length < kInf) {
    ts.push_back(length);
    ts.push_back(10.0 * length);
  }
  std::vector<double> vs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = exact(std::min(ts[i], length));
  auto chain = MonotoneFn::from_samples(ts, vs, near_zero, near_infinity);
  auto capped = [exact, length](double s) { return exact(std::min(s, length)); };
  return FundamentalFn(chain, near_zero, near_infinity, capped);
}

// ---------------------------------------------------------------------------
// SpaceDescriptor

SpaceDescriptor SpaceDescriptor::lebesgue(double p, Interval i) {
  if (!(p >= 1.0)) throw Error(ErrorKind::InvalidInput, "Lebesgue exponent must be >= 1");
  SpaceDescriptor x;
  x.family = Family::Lebesgue;
  x.interval = i;
  x.p = x.q = p;
  return x;
}

SpaceDescriptor SpaceDescriptor::lorentz(double p, double q, Interval i) {
  const bool ok = (p > 1.0 && p < kInf && q >= 1.0) || (p == 1.0 && q == 1.0) || (p == kInf && q == kInf);
  if (!ok) throw Error(ErrorKind::InvalidInput, "Lorentz indices need 1 < p < inf and q >= 1, or p = q = 1, or p = q = inf");
  SpaceDescriptor x;
  x.family = Family::Lorentz;
  x.interval = i;
  x.p = p;
  x.q = q;
  return x;
}

SpaceDescriptor SpaceDescriptor::lorentz_zygmund(double p, double q, double alpha, Interval i) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw Error(ErrorKind::InvalidInput, "Lorentz-Zygmund indices need p, q >= 1");
  if (p == kInf && !(alpha + 1.0 / q < 0.0) && !(q == kInf && alpha == 0.0)) {
    throw Error(ErrorKind::InvalidInput, "L^{inf,q;alpha} is trivial unless alpha + 1/q < 0");
  }
  if (p == kInf && i == Interval::HalfLine && alpha != 0.0) {
    throw Error(ErrorKind::UnsupportedFamily, "L^{inf,q;alpha} is modelled on the unit interval only");
  }
  SpaceDescriptor x;
  x.family = Family::LorentzZygmund;
  x.interval = i;
  x.p = p;
  x.q = q;
  x.alpha = alpha;
  return x;
}

SpaceDescriptor SpaceDescriptor::orlicz(const GeneratorSpec& spec, Interval i) {
  return orlicz(make_young(spec), i, spec);
}

SpaceDescriptor SpaceDescriptor::orlicz(YoungFn a, Interval i, std::optional<GeneratorSpec> spec) {
  SpaceDescriptor x;
  x.family = Family::Orlicz;
  x.interval = i;
  x.young = std::make_shared<const YoungFn>(std::move(a));
  x.spec = std::move(spec);
  return x;
}

SpaceDescriptor SpaceDescriptor::lambda(const GeneratorSpec& spec, Interval i) {
  return lambda(make_quasi_convex(spec), i, spec);
}

SpaceDescriptor SpaceDescriptor::lambda(QuasiConvexFn e, Interval i, std::optional<GeneratorSpec> spec) {
  SpaceDescriptor x;
  x.family = Family::Lambda;
  x.interval = i;
  x.generator = std::make_shared<const QuasiConvexFn>(std::move(e));
  x.spec = std::move(spec);
  return x;
}

SpaceDescriptor SpaceDescriptor::marcinkiewicz(const GeneratorSpec& spec, Interval i) {
  return marcinkiewicz(make_quasi_convex(spec), i, spec);
}

SpaceDescriptor SpaceDescriptor::marcinkiewicz(QuasiConvexFn e, Interval i, std::optional<GeneratorSpec> spec) {
  SpaceDescriptor x = lambda(std::move(e), i, std::move(spec));
  x.family = Family::Marcinkiewicz;
  return x;
}

SpaceDescriptor SpaceDescriptor::classical_lorentz(SampledFn w, double q, Interval i) {
  if (!(q > 0.0) || q == kInf) throw Error(ErrorKind::InvalidInput, "classical Lorentz exponent must be finite positive");
  if (w.tail() == std::nullopt) {
    const auto& ps = w.pieces();
    for (std::size_t k = 1; k < ps.size(); ++k) {
      if (ps[k].value > ps[k - 1].value) {
        throw Error(ErrorKind::InvalidInput, "classical Lorentz weight must be non-increasing");
      }
    }
  }
  SpaceDescriptor x;
  x.family = Family::ClassicalLorentz;
  x.interval = i;
  x.q = q;
  x.weight = std::make_shared<const SampledFn>(std::move(w));
  return x;
}

namespace {

std::string sup(const std::string& s) {
  if (s.size() == 1) return "^" + s;
  return "^{" + s + "}";
}

std::string num(double x) { return format_number(x); }

const AsymptoticDescriptor& generator_infinity(const SpaceDescriptor& x) {
  if (x.family == Family::Orlicz) return x.young->infinity_descriptor();
  return x.generator->infinity_descriptor();
}

const AsymptoticDescriptor& generator_zero(const SpaceDescriptor& x) {
  if (x.family == Family::Orlicz) return x.young->zero_descriptor();
  return x.generator->zero_descriptor();
}

std::string generator_text(const SpaceDescriptor& x) {
  if (x.spec) return x.spec->describe();
  const auto& z = generator_zero(x);
  const auto& i = generator_infinity(x);
  return "0: " + describe(z, Regime::NearZero) + "; inf: " + describe(i, Regime::NearInfinity);
}

}  // namespace

std::string SpaceDescriptor::name() const {
  switch (family) {
    case Family::Lebesgue: return "L" + sup(num(p));
    case Family::Lorentz: return "L^{" + num(p) + "," + num(q) + "}";
    case Family::LorentzZygmund: return "L^{" + num(p) + "," + num(q) + ";" + num(alpha) + "}";
    case Family::ClassicalLorentz: return "Lambda_w" + sup(num(q));
    default: break;
  }
  const AsymptoticDescriptor& inf = generator_infinity(*this);
  const AsymptoticDescriptor& zero = generator_zero(*this);
  if (family == Family::Orlicz && zero.cls == GrowthClass::ZeroOnInterval && inf.cls == GrowthClass::InfiniteBeyond) {
    return "L^{inf}";
  }
  const bool tail_agrees = interval == Interval::Unit || (zero == inf);
  const std::string fallback =
      (family == Family::Orlicz ? "L^A[" : family == Family::Lambda ? "Lambda^E[" : "M^E[") + generator_text(*this) + "]";
  if (!tail_agrees) return fallback;
  switch (inf.cls) {
    case GrowthClass::PowerLog: {
      const double pp = inf.p;
      const double a = inf.alpha;
      if (family == Family::Orlicz) {
        if (a == 0.0) return "L" + sup(num(pp));
        return "L" + sup(num(pp)) + " log" + sup(num(a)) + " L";
      }
      if (pp == 1.0 && a == 0.0) return "L^1";
      if (pp > 1.0) {
        const std::string second = family == Family::Lambda ? "1" : "inf";
        if (a == 0.0) return "L^{" + num(pp) + "," + second + "}";
        return "L^{" + num(pp) + "," + second + ";" + num(a / pp) + "}";
      }
      return fallback;
    }
    case GrowthClass::Exponential:
      if (family == Family::Lambda) return "Lambda^{exp L" + sup(num(inf.gamma)) + "}";
      return "exp L" + sup(num(inf.gamma));
    case GrowthClass::InfiniteBeyond: return "L^{inf}";
    default: return fallback;
  }
}

double norm_constant(const SpaceDescriptor& x) {
  if (x.family == Family::Lorentz && x.q < kInf && x.p < kInf) return std::pow(x.p / x.q, 1.0 / x.q);
  return 1.0;
}

// ---------------------------------------------------------------------------
// Fundamental functions

FundamentalFn fundamental_function(const SpaceDescriptor& x) {
  const double length = x.domain_length();
  const auto flat = AsymptoticDescriptor::power_log(0.0, 0.0);
  switch (x.family) {
    case Family::Lebesgue:
    case Family::Lorentz: {
      const double r = 1.0 / x.p;
      const double c = norm_constant(x);
      if (length == kInf) return FundamentalFn::power(r, c);
      return FundamentalFn::sampled([r, c](double s) { return c * std::pow(s, r); }, length,
                                    AsymptoticDescriptor::power_log(r, 0.0), flat);
    }
    case Family::LorentzZygmund: {
      const double p = x.p;
      const double q = x.q;
      const double a = x.alpha;
      const auto nz = p < kInf ? AsymptoticDescriptor::power_log(1.0 / p, a) : AsymptoticDescriptor::power_log(0.0, a + 1.0 / q);
      const auto ni = length < kInf ? flat : (p < kInf ? AsymptoticDescriptor::power_log(1.0 / p, a) : AsymptoticDescriptor::numeric());
      auto exact = [p, q, a, length](double s) {
        return lorentz_zygmund_functional(SampledFn::characteristic(std::min(s, length), 1.0, length), p, q, a);
      };
      return FundamentalFn::sampled(exact, length, nz, ni, 4);
    }
    case Family::Orlicz: {
      auto a = x.young;
      const auto nz = level_from_young(a->infinity_descriptor());
      const auto ni = length < kInf ? flat : level_from_young(a->zero_descriptor());
      const MonotoneFn chain = cap_chain(QuasiConvexFn::from_young(*a).fundamental(), length);
      return FundamentalFn(chain, nz, ni, [a, length](double s) { return a->fundamental_at(std::min(s, length)); });
    }
    case Family::Lambda:
    case Family::Marcinkiewicz: {
      auto e = x.generator;
      const auto nz = level_from_young(e->infinity_descriptor());
      const auto ni = length < kInf ? flat : level_from_young(e->zero_descriptor());
      const MonotoneFn chain = cap_chain(e->fundamental(), length);
      return FundamentalFn(chain, nz, ni, [e, length](double s) { return e->fundamental_at(std::min(s, length)); });
    }
    case Family::ClassicalLorentz: {
      auto ws = std::make_shared<const DecreasingFn>(rearrange(*x.weight));
      const double q = x.q;
      AsymptoticDescriptor nz = AsymptoticDescriptor::power_log(1.0 / q, 0.0);
      if (ws->tail()) nz = AsymptoticDescriptor::power_log((1.0 - ws->tail()->exponent) / q, 0.0);
      if (ws->support() == 0.0) throw Error(ErrorKind::InvalidInput, "classical Lorentz weight vanishes");
      const auto ni = length < kInf ? flat : AsymptoticDescriptor::power_log(0.0, 0.0);
      auto exact = [ws, q](double s) { return std::pow(ws->integral_to(s), 1.0 / q); };
      return FundamentalFn::sampled(exact, std::min(length, ws->support()), nz, ni);
    }
  }
  throw Error(ErrorKind::UnsupportedFamily, "no fundamental function for this family");
}

YoungFn fundamental_orlicz(const FundamentalFn& phi) {
  const auto zero = young_from_level(phi.near_infinity(), Regime::NearZero);
  const auto inf = young_from_level(phi.near_zero(), Regime::NearInfinity);
  const MonotoneFn base = phi.chain().right_inverse().correlative().with_descriptors(zero, inf);
  return youngify(QuasiConvexFn(base));
}

// ---------------------------------------------------------------------------
// Companions and associates

namespace {

std::optional<GeneratorSpec> conjugate_spec(const std::optional<GeneratorSpec>& s) {
  if (!s) return std::nullopt;
  if (s->kind == GeneratorSpec::Kind::Linfty) return GeneratorSpec::power(1.0, s->threshold);
  if (s->kind == GeneratorSpec::Kind::PowerLog && s->alpha == 0.0 && s->alpha0 == 0.0 && s->p == s->p0) {
    if (s->p == 1.0) return GeneratorSpec::linfty(1.0 / s->coefficient);
    return std::nullopt;  // conjugate of c t^p is a multiple of t^{p'}; the chain is exact
  }
  return std::nullopt;
}

SpaceDescriptor orlicz_companion(const SpaceDescriptor& x) {
  const Interval i = x.interval;
  switch (x.family) {
    case Family::Lebesgue:
    case Family::Lorentz:
      if (x.p == kInf) return SpaceDescriptor::orlicz(GeneratorSpec::linfty(1.0), i);
      return SpaceDescriptor::orlicz(GeneratorSpec::power(x.p), i);
    case Family::LorentzZygmund: {
      if (x.p == kInf) {
        const double b = x.alpha + 1.0 / x.q;
        if (x.q == kInf && x.alpha == 0.0) return SpaceDescriptor::orlicz(GeneratorSpec::linfty(1.0), i);
        return SpaceDescriptor::orlicz(GeneratorSpec::exponential(-1.0 / b), i);
      }
      if (x.alpha == 0.0) return SpaceDescriptor::orlicz(GeneratorSpec::power(x.p), i);
      const double a = x.p * x.alpha;
      const double a0 = i == Interval::HalfLine ? a : 0.0;
      return SpaceDescriptor::orlicz(GeneratorSpec::power_log(x.p, a, x.p, a0), i);
    }
    case Family::Orlicz: return x;
    case Family::Lambda:
    case Family::Marcinkiewicz: {
      YoungFn a = youngify(*x.generator);
      return SpaceDescriptor::orlicz(std::move(a), i, x.spec);
    }
    case Family::ClassicalLorentz:
      return SpaceDescriptor::orlicz(fundamental_orlicz(fundamental_function(x)), i);
  }
  throw Error(ErrorKind::UnsupportedFamily, "no fundamental Orlicz space for this family");
}

}  // namespace

SpaceDescriptor fundamental_orlicz_space(const SpaceDescriptor& x) { return orlicz_companion(x); }

Companions companions(const SpaceDescriptor& x) {
  SpaceDescriptor l = orlicz_companion(x);
  const QuasiConvexFn e = QuasiConvexFn::from_young(*l.young);
  return {SpaceDescriptor::lambda(e, x.interval, l.spec), l, SpaceDescriptor::marcinkiewicz(e, x.interval, l.spec)};
}

SpaceDescriptor associate(const SpaceDescriptor& x) {
  const Interval i = x.interval;
  switch (x.family) {
    case Family::Lebesgue: {
      const double pp = x.p == 1.0 ? kInf : x.p == kInf ? 1.0 : x.p / (x.p - 1.0);
      return SpaceDescriptor::lebesgue(pp, i);
    }
    case Family::Lorentz: {
      if (!(x.p > 1.0 && x.p < kInf)) break;
      const double pp = x.p / (x.p - 1.0);
      const double qq = x.q == 1.0 ? kInf : x.q == kInf ? 1.0 : x.q / (x.q - 1.0);
      return SpaceDescriptor::lorentz(pp, qq, i);
    }
    case Family::Orlicz: return SpaceDescriptor::orlicz(x.young->conjugate(), i, conjugate_spec(x.spec));
    case Family::Lambda: {
      const YoungFn c = youngify(*x.generator).conjugate();
      return SpaceDescriptor::marcinkiewicz(QuasiConvexFn::from_young(c), i, conjugate_spec(x.spec));
    }
    case Family::Marcinkiewicz: {
      const YoungFn c = youngify(*x.generator).conjugate();
      return SpaceDescriptor::lambda(QuasiConvexFn::from_young(c), i, conjugate_spec(x.spec));
    }
    default: break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "associate space not available for " + x.name());
}

double norm(const SpaceDescriptor& x, const SampledFn& f0) {
  const double length = std::min(f0.domain_length(), x.domain_length());
  const SampledFn f(f0.pieces(), length, f0.tail());
  switch (x.family) {
    case Family::Lebesgue:
      if (x.p == kInf) return rearrange(f).sup();
      return lorentz_functional(f, x.p, x.p);
    case Family::Lorentz: return lorentz_functional(f, x.p, x.q);
    case Family::LorentzZygmund: return lorentz_zygmund_functional(f, x.p, x.q, x.alpha);
    case Family::Orlicz: return luxemburg_norm(f, *x.young);
    case Family::Lambda: return lambda_norm(f, *x.generator);
    case Family::Marcinkiewicz: return marcinkiewicz_norm(f, *x.generator);
    case Family::ClassicalLorentz: return classical_lorentz_norm(f, *x.weight, x.q);
  }
  throw Error(ErrorKind::UnsupportedFamily, "no norm for this family");
}

Verdict same_level(const FundamentalFn& a, const FundamentalFn& b, Interval interval) {
  std::vector<Regime> ends{Regime::NearZero};
  if (interval == Interval::HalfLine) ends.push_back(Regime::NearInfinity);
  bool all_symbolic = true;
  for (Regime end : ends) {
    const auto& da = a.descriptor(end);
    const auto& db = b.descriptor(end);
    if (da.cls != GrowthClass::PowerLog || db.cls != GrowthClass::PowerLog) {
      all_symbolic = false;
      continue;
    }
    const auto lo = level_below(da, db, end);
    const auto hi = level_below(db, da, end);
    if (!(*lo && *hi)) return Verdict::fails("fundamental functions differ at " + to_string(end));
  }
  if (all_symbolic) return Verdict::holds("equal asymptotic classes");
  const Grid grid;
  const double top = interval == Interval::Unit ? 1.0 : grid.hi();
  double worst = 1.0;
  for (double s : grid.points_between(grid.lo(), top)) {
    const double r = a(s) / b(s);
    if (!(r > 0.0) || r == kInf) return Verdict::fails("fundamental functions not comparable", s);
    worst = std::max({worst, r, 1.0 / r});
    if (worst > 16.0) return Verdict::fails("ratio of fundamental functions leaves [1/16, 16]", s);
  }
  return Verdict::holds("sampled ratio within [1/16, 16]", worst);
}

}  // namespace orlicz
