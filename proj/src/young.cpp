#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/kernels.hpp"

namespace orlicz {

YoungFn::YoungFn(MonotoneFn a, AsymptoticDescriptor zero, AsymptoticDescriptor infinity)
    : a_(std::move(a)), zero_(zero), infinity_(infinity) {
  const auto& vs = a_.vertices();
  bool positive = false;
  for (const Vertex& v : vs) positive = positive || v.v > 0.0;
  if (!positive) throw Error(ErrorKind::InvalidInput, "derivative vanishes identically");
  t_zero_ = a_.zero_threshold();
  t_inf_ = a_.infinity_threshold();
  if (t_inf_ == 0.0) throw Error(ErrorKind::InvalidInput, "Young function is infinite on (0, inf)");
  cumulative_.resize(vs.size());
  cumulative_[0] = 0.0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    cumulative_[i + 1] = cumulative_[i] + a_.edge_integral(i, vs[i].t, vs[i + 1].t);
  }
}

YoungFn YoungFn::from_derivative(MonotoneFn a, std::optional<AsymptoticDescriptor> zero,
                                 std::optional<AsymptoticDescriptor> infinity) {
  const AsymptoticDescriptor z = zero ? *zero : primitive_descriptor(a.zero_descriptor());
  const AsymptoticDescriptor i = infinity ? *infinity : primitive_descriptor(a.infinity_descriptor());
  return YoungFn(std::move(a), z, i);
}

double YoungFn::operator()(double t) const {
  if (!(t > 0.0)) return 0.0;
  if (t > t_inf_) return kInf;
  const auto& vs = a_.vertices();
  if (t == kInf) return cumulative_.back();
  const auto it = std::upper_bound(vs.begin(), vs.end(), t,
                                   [](double x, const Vertex& v) { return x < v.t; });
  const std::size_t i = static_cast<std::size_t>(it - vs.begin()) - 1;
  return cumulative_[i] + a_.edge_integral(i, vs[i].t, t);
}

std::pair<double, double> YoungFn::inverses(double s) const {
  if (!(s > 0.0)) return {t_zero_, 0.0};
  if (s == kInf) return {kInf, t_inf_};
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  if (it == cumulative_.end()) return {kInf, kInf};
  const std::size_t j = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
  const double x = a_.edge_integral_inverse(j, s - cumulative_[j]);
  return {x, x};
}

double YoungFn::right_inverse_at(double s) const { return inverses(s).first; }
double YoungFn::left_inverse_at(double s) const { return inverses(s).second; }

double YoungFn::fundamental_at(double s) const {
  if (!(s > 0.0)) return 0.0;
  return recip(left_inverse_at(recip(s)));
}

YoungFn YoungFn::conjugate() const {
  MonotoneFn b = a_.right_inverse();
  auto pin = [&b](AsymptoticDescriptor d) {
    if (d.cls == GrowthClass::ZeroOnInterval) d.threshold = b.zero_threshold();
    if (d.cls == GrowthClass::InfiniteBeyond) d.threshold = b.infinity_threshold();
    return d;
  };
  const AsymptoticDescriptor zero = pin(conjugate_descriptor(zero_, Regime::NearZero));
  const AsymptoticDescriptor infinity = pin(conjugate_descriptor(infinity_, Regime::NearInfinity));
  return YoungFn(std::move(b), zero, infinity);
}

MonotoneFn YoungFn::values(const Grid& grid) const {
  std::vector<double> ts = a_.evaluation_points(grid);
  std::vector<double> vs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = (*this)(ts[i]);
  return MonotoneFn::from_samples(ts, vs, zero_, infinity_);
}

bool YoungFn::is_pure_power() const {
  const auto& es = a_.edges();
  if (es.size() != 1) return false;
  const auto& vs = a_.vertices();
  if (es[0].kind == EdgeKind::Power) return vs[0].v == 0.0 && vs[1].v == kInf;
  return es[0].kind == EdgeKind::Flat && is_finite_positive(vs[0].v);
}

std::string YoungFn::describe() const {
  std::ostringstream os;
  os << "Young[0: " << orlicz::describe(zero_, Regime::NearZero)
     << "; inf: " << orlicz::describe(infinity_, Regime::NearInfinity) << "]";
  return os.str();
}

MonotoneFn vanish_at_origin(const MonotoneFn& f) {
  const auto& vs = f.vertices();
  const auto& es = f.edges();
  std::size_t j = 0;
  while (j + 1 < vs.size() && vs[j + 1].t == 0.0) ++j;
  if (f(0.0) == 0.0) return f;
  std::vector<Vertex> nv{{0.0, 0.0}, {0.0, vs[j].v}};
  Edge jump;
  jump.kind = EdgeKind::Jump;
  jump.top = false;
  std::vector<Edge> ne{jump};
  for (std::size_t i = j; i < es.size(); ++i) {
    ne.push_back(es[i]);
    nv.push_back(vs[i + 1]);
  }
  return MonotoneFn::from_chain(std::move(nv), std::move(ne), f.zero_descriptor(), f.infinity_descriptor());
}

QuasiConvexFn::QuasiConvexFn(MonotoneFn base) : base_(std::move(base)) {
  const Grid grid;
  double prev = 0.0;
  for (double t : base_.evaluation_points(grid)) {
    const double r = base_(t) / t;
    if (r < prev * (1.0 - 1e-9)) {
      throw Error(ErrorKind::InvalidInput, "function is not quasi-convex: F(t)/t decreases near t=" +
                                               std::to_string(t));
    }
    prev = std::max(prev, r);
  }
  fundamental_ = vanish_at_origin(base_.correlative().right_inverse());
}

QuasiConvexFn QuasiConvexFn::from_young(const YoungFn& a, const Grid& grid) {
  return QuasiConvexFn(a.values(grid));
}

YoungFn youngify(const QuasiConvexFn& b) {
  if (b.base().infinity_threshold() == 0.0) {
    throw Error(ErrorKind::IntegralDiverges, "quasi-convex function is infinite on (0, inf)");
  }
  MonotoneFn density = b.base().multiply_power(-1.0);
  return YoungFn::from_derivative(std::move(density), youngify_descriptor(b.zero_descriptor(), Regime::NearZero),
                                  youngify_descriptor(b.infinity_descriptor(), Regime::NearInfinity));
}

// ---------------------------------------------------------------------------
// Generators

GeneratorSpec GeneratorSpec::power(double p, double coefficient) {
  GeneratorSpec s;
  s.kind = Kind::PowerLog;
  s.p = s.p0 = p;
  s.coefficient = coefficient;
  return s;
}

GeneratorSpec GeneratorSpec::power_log(double p, double alpha, double p0, double alpha0) {
  GeneratorSpec s;
  s.kind = Kind::PowerLog;
  s.p = p;
  s.alpha = alpha;
  s.p0 = p0;
  s.alpha0 = alpha0;
  return s;
}

GeneratorSpec GeneratorSpec::exponential(double gamma) {
  GeneratorSpec s;
  s.kind = Kind::Exponential;
  s.gamma = gamma;
  return s;
}

GeneratorSpec GeneratorSpec::linfty(double threshold) {
  GeneratorSpec s;
  s.kind = Kind::Linfty;
  s.threshold = threshold;
  return s;
}

GeneratorSpec GeneratorSpec::tabulated(std::vector<std::pair<double, double>> points,
                                       AsymptoticDescriptor zero, AsymptoticDescriptor infinity) {
  GeneratorSpec s;
  s.kind = Kind::Table;
  s.table = std::move(points);
  s.table_zero = zero;
  s.table_infinity = infinity;
  return s;
}

std::string GeneratorSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::PowerLog:
      if (coefficient != 1.0) os << coefficient << "*";
      os << "t^" << p;
      if (alpha != 0.0) os << " log^" << alpha;
      if (p0 != p || alpha0 != 0.0) os << " (near 0: t^" << p0 << " log^" << alpha0 << ")";
      break;
    case Kind::Exponential: os << "exp(t^" << gamma << ")"; break;
    case Kind::Linfty: os << "linfty(" << threshold << ")"; break;
    case Kind::Table: os << "table[" << table.size() << "]"; break;
  }
  return os.str();
}

YoungFn young_power(double p, double coefficient) {
  if (!(p >= 1.0) || !is_finite_positive(coefficient)) {
    throw Error(ErrorKind::InvalidInput, "power Young function needs p >= 1 and a positive coefficient");
  }
  const auto d = AsymptoticDescriptor::power_log(p, 0.0);
  if (p == 1.0) return YoungFn::from_derivative(MonotoneFn::constant(coefficient), d, d);
  return YoungFn::from_derivative(MonotoneFn::power(coefficient * p, p - 1.0), d, d);
}

YoungFn young_linfty(double threshold) {
  if (!is_finite_positive(threshold)) throw Error(ErrorKind::InvalidInput, "threshold must be finite positive");
  Edge flat;
  Edge jump;
  jump.kind = EdgeKind::Jump;
  jump.top = true;
  auto a = MonotoneFn::from_chain({{0.0, 0.0}, {threshold, 0.0}, {threshold, kInf}, {kInf, kInf}},
                                  {flat, jump, flat}, AsymptoticDescriptor::zero_on_interval(threshold),
                                  AsymptoticDescriptor::infinite_beyond(threshold));
  return YoungFn::from_derivative(std::move(a), AsymptoticDescriptor::zero_on_interval(threshold),
                                  AsymptoticDescriptor::infinite_beyond(threshold));
}

namespace {

void running_max(std::vector<double>& vs) {
  for (std::size_t i = 1; i < vs.size(); ++i) vs[i] = std::max(vs[i], vs[i - 1]);
}

YoungFn make_power_log(const GeneratorSpec& s, const Grid& grid) {
  if (!(s.p >= 1.0) || !(s.p0 >= 1.0)) throw Error(ErrorKind::InvalidInput, "power-log exponents must be >= 1");
  if (s.p == 1.0 && s.alpha < 0.0) {
    throw Error(ErrorKind::InvalidInput, "t log^alpha with alpha < 0 is not convex near infinity");
  }
  if (s.p0 == 1.0 && s.alpha0 > 0.0) {
    throw Error(ErrorKind::InvalidInput, "t log(1/t)^alpha with alpha > 0 is not convex near zero");
  }
  if (!is_finite_positive(s.coefficient)) throw Error(ErrorKind::InvalidInput, "coefficient must be positive");
  if (s.alpha == 0.0 && s.alpha0 == 0.0 && s.p == s.p0) return young_power(s.p, s.coefficient);
  const double glue = std::pow(1.0 + std::log(2.0), s.alpha0 - s.alpha);
  auto shape = [&](double t) {
    if (t < 1.0) return std::pow(t, s.p0 - 1.0) * std::pow(1.0 + std::log1p(1.0 / t), s.alpha0);
    return glue * std::pow(t, s.p - 1.0) * std::pow(1.0 + std::log1p(t), s.alpha);
  };
  const auto ts = grid.points();
  std::vector<double> vs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = s.coefficient * shape(ts[i]);
  running_max(vs);
  const auto zero = AsymptoticDescriptor::power_log(s.p0, s.alpha0);
  const auto inf = AsymptoticDescriptor::power_log(s.p, s.alpha);
  auto a = MonotoneFn::from_samples(ts, vs, derivative_descriptor(zero), derivative_descriptor(inf));
  return YoungFn::from_derivative(std::move(a), zero, inf);
}

YoungFn make_exponential(const GeneratorSpec& s, const Grid& grid) {
  const double g = s.gamma;
  if (!is_finite_positive(g)) throw Error(ErrorKind::InvalidInput, "exponential class needs gamma > 0");
  const double floor_t = g < 1.0 ? std::pow((1.0 - g) / g, 1.0 / g) : 0.0;
  auto deriv = [&](double t) {
    const double u = std::max(t, floor_t);
    return g * std::pow(u, g - 1.0) * std::exp(std::pow(u, g));
  };
  const auto ts = grid.points();
  std::vector<double> vs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = deriv(ts[i]);
  running_max(vs);
  const auto zero = AsymptoticDescriptor::power_log(std::max(g, 1.0), 0.0);
  const auto inf = AsymptoticDescriptor::exponential(g);
  auto a = MonotoneFn::from_samples(ts, vs, derivative_descriptor(zero), inf);
  return YoungFn::from_derivative(std::move(a), zero, inf);
}

YoungFn make_table(const GeneratorSpec& s) {
  const auto& pts = s.table;
  if (pts.size() < 2) throw Error(ErrorKind::InvalidInput, "table needs at least two points");
  std::vector<double> ts;
  std::vector<double> as;
  for (const auto& [t, v] : pts) {
    if (!is_finite_positive(t)) throw Error(ErrorKind::InvalidInput, "table abscissae must be finite positive");
    if (!ts.empty() && !(t > ts.back())) throw Error(ErrorKind::InvalidInput, "table abscissae must increase");
    if (std::isnan(v) || v < 0.0) throw Error(ErrorKind::InvalidInput, "table values must be non-negative");
    ts.push_back(t);
    as.push_back(v);
  }
  if (as.front() == kInf) throw Error(ErrorKind::InvalidInput, "table is infinite everywhere");
  // Slopes on (0, t0), (t0, t1), ...; an infinite value ends the finite part.
  std::vector<double> slopes{as[0] / ts[0]};
  std::size_t last = 0;
  bool infinite_tail = false;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (as[i + 1] == kInf) {
      infinite_tail = true;
      break;
    }
    slopes.push_back((as[i + 1] - as[i]) / (ts[i + 1] - ts[i]));
    last = i + 1;
  }
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    if (slopes[i] < slopes[i - 1] * (1.0 - 1e-9) - 1e-300) {
      throw Error(ErrorKind::InvalidInput, "table is not convex near t=" + std::to_string(ts[i - 1]));
    }
    slopes[i] = std::max(slopes[i], slopes[i - 1]);
  }
  std::vector<Vertex> vert{{0.0, slopes[0]}};
  std::vector<Edge> edges;
  Edge flat;
  Edge jump;
  jump.kind = EdgeKind::Jump;
  jump.top = true;
  for (std::size_t i = 0; i <= last; ++i) {
    edges.push_back(flat);
    vert.push_back({ts[i], slopes[i]});
    if (i + 1 < slopes.size()) {
      edges.push_back(jump);
      vert.push_back({ts[i], slopes[i + 1]});
    }
  }
  const double tail_start = ts[last];
  const double tail_value = slopes.back();
  if (infinite_tail) {
    edges.push_back(jump);
    vert.push_back({tail_start, kInf});
    edges.push_back(flat);
    vert.push_back({kInf, kInf});
  } else if (s.table_infinity.cls == GrowthClass::PowerLog && s.table_infinity.p > 1.0 && tail_value > 0.0) {
    Edge power;
    power.kind = EdgeKind::Power;
    power.k = s.table_infinity.p - 1.0;
    power.anchor_t = tail_start;
    power.anchor_v = tail_value;
    edges.push_back(power);
    vert.push_back({kInf, kInf});
  } else {
    edges.push_back(flat);
    vert.push_back({kInf, tail_value});
  }
  auto a = MonotoneFn::from_chain(std::move(vert), std::move(edges));
  AsymptoticDescriptor inf = s.table_infinity;
  if (infinite_tail) inf = AsymptoticDescriptor::infinite_beyond(tail_start);
  return YoungFn::from_derivative(std::move(a), s.table_zero, inf);
}

}  // namespace

YoungFn make_young(const GeneratorSpec& spec, const Grid& grid) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::PowerLog: return make_power_log(spec, grid);
    case GeneratorSpec::Kind::Exponential: return make_exponential(spec, grid);
    case GeneratorSpec::Kind::Linfty: return young_linfty(spec.threshold);
    case GeneratorSpec::Kind::Table: return make_table(spec);
  }
  throw Error(ErrorKind::InvalidInput, "unknown generator kind");
}

QuasiConvexFn make_quasi_convex(const GeneratorSpec& spec, const Grid& grid) {
  if (spec.kind == GeneratorSpec::Kind::Table) {
    std::vector<double> ts;
    std::vector<double> vs;
    for (const auto& [t, v] : spec.table) {
      ts.push_back(t);
      vs.push_back(v);
    }
    return QuasiConvexFn(MonotoneFn::from_samples(ts, vs, spec.table_zero, spec.table_infinity));
  }
  return QuasiConvexFn::from_young(make_young(spec, grid), grid);
}

// ---------------------------------------------------------------------------
// Growth conditions

std::vector<double> regime_window(const Grid& grid, Regime regime) {
  switch (regime) {
    case Regime::NearZero: return grid.points_between(grid.lo(), grid.lo() * 100.0 * (1.0 + 1e-12));
    case Regime::NearInfinity: return grid.points_between(grid.hi() / 100.0 * (1.0 - 1e-12), grid.hi());
    case Regime::Global: return grid.points();
  }
  return grid.points();
}

namespace {

std::optional<bool> combine_ends(const std::function<std::optional<bool>(Regime)>& end, Regime regime) {
  if (regime != Regime::Global) return end(regime);
  const auto z = end(Regime::NearZero);
  const auto i = end(Regime::NearInfinity);
  if (z && !*z) return false;
  if (i && !*i) return false;
  if (z && i) return true;
  return std::nullopt;
}

// Max of A(2t)/A(t) over the window; +inf when A(t) = 0 < A(2t) or A(2t) = inf > A(t).
struct RatioScan {
  double max_ratio = 0.0;
  double at = 0.0;
};

RatioScan doubling_scan(const YoungFn& a, const std::vector<double>& ts) {
  std::vector<double> num(ts.size());
  std::vector<double> den(ts.size());
  RatioScan out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    num[i] = a(2.0 * ts[i]);
    den[i] = a(ts[i]);
    if ((den[i] == 0.0 && num[i] > 0.0) || (num[i] == kInf && den[i] < kInf)) {
      return {kInf, ts[i]};
    }
    if (den[i] == kInf) den[i] = 0.0;
  }
  out.max_ratio = kernels::max_ratio(num.data(), den.data(), ts.size());
  return out;
}

}  // namespace

Verdict delta2(const YoungFn& a, Regime regime, const Grid& grid) {
  auto end = [&](Regime e) -> std::optional<bool> {
    const auto& d = a.descriptor(e);
    switch (d.cls) {
      case GrowthClass::PowerLog: return true;
      case GrowthClass::Exponential:
      case GrowthClass::InfiniteBeyond:
        if (e == Regime::NearInfinity) return false;
        return std::nullopt;
      case GrowthClass::ZeroOnInterval:
        if (e == Regime::NearZero) return true;
        return std::nullopt;
      case GrowthClass::NumericOnly: return std::nullopt;
    }
    return std::nullopt;
  };
  std::optional<bool> symbolic = combine_ends(end, regime);
  if (regime == Regime::Global && a.zero_threshold() > 0.0) symbolic = false;
  const auto ts = regime_window(grid, regime);
  const RatioScan scan = doubling_scan(a, ts);
  if (symbolic) {
    if (*symbolic) {
      return Verdict::holds("doubling from descriptors",
                            scan.max_ratio < kInf ? std::optional<double>(scan.max_ratio) : std::nullopt);
    }
    return Verdict::fails("descriptor growth is not doubling", scan.max_ratio == kInf ? std::optional<double>(scan.at)
                                                                                      : std::nullopt);
  }
  if (scan.max_ratio == kInf) return Verdict::fails("A(2t)/A(t) is infinite on the window", scan.at);
  // Trend check between the inner and outer decades of the window.
  const std::size_t n = ts.size();
  const std::size_t cut = std::max<std::size_t>(1, n / 2);
  std::vector<double> inner(ts.begin(), ts.begin() + static_cast<long>(cut));
  std::vector<double> outer(ts.begin() + static_cast<long>(cut), ts.end());
  if (regime == Regime::NearZero) std::swap(inner, outer);
  if (regime != Regime::Global && !outer.empty()) {
    const double r_in = doubling_scan(a, inner).max_ratio;
    const double r_out = doubling_scan(a, outer).max_ratio;
    if (r_out > 1.5 * r_in) return Verdict::undecided("A(2t)/A(t) keeps growing across the window");
  }
  return Verdict::holds("bounded doubling ratio on the grid", scan.max_ratio);
}

Verdict nabla2(const YoungFn& a, Regime regime, const Grid& grid) {
  auto end = [&](Regime e) -> std::optional<bool> {
    const auto& d = a.descriptor(e);
    switch (d.cls) {
      case GrowthClass::PowerLog: return d.p > 1.0;
      case GrowthClass::Exponential:
      case GrowthClass::InfiniteBeyond:
        if (e == Regime::NearInfinity) return true;
        return std::nullopt;
      case GrowthClass::ZeroOnInterval:
        if (e == Regime::NearZero) return true;
        return std::nullopt;
      case GrowthClass::NumericOnly: return std::nullopt;
    }
    return std::nullopt;
  };
  const std::optional<bool> symbolic = combine_ends(end, regime);
  const auto ts = regime_window(grid, regime);
  std::vector<double> base(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) base[i] = a(ts[i]);
  std::optional<double> witness;
  std::vector<double> lhs(ts.size());
  std::vector<double> rhs(ts.size());
  for (int k = 1; k <= 30 && !witness; ++k) {
    const double c = std::ldexp(1.0, k);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      lhs[i] = 2.0 * c * base[i];
      rhs[i] = a(c * ts[i]);
    }
    if (kernels::first_exceeding(lhs.data(), rhs.data(), ts.size()) == ts.size()) witness = c;
  }
  if (symbolic) {
    if (*symbolic) return Verdict::holds("reverse doubling from descriptors", witness);
    return Verdict::fails("descriptor growth is at most linear");
  }
  if (witness) return Verdict::holds("reverse doubling found on the grid", witness);
  return Verdict::undecided("no dilation c <= 2^30 satisfies A(ct) >= 2c A(t) on the window");
}

Verdict dominates(const YoungFn& a, const YoungFn& b, Regime regime, const Grid& grid) {
  auto end = [&](Regime e) { return symbolic_dominates(a.descriptor(e), b.descriptor(e), e); };
  const std::optional<bool> symbolic = combine_ends(end, regime);
  const auto ts = regime_window(grid, regime);
  std::vector<double> lhs(ts.size());
  std::vector<double> rhs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) lhs[i] = b(ts[i]);
  std::optional<double> witness;
  std::optional<double> violation;
  for (int k = 0; k <= 40 && !witness; ++k) {
    const double K = std::ldexp(1.0, k);
    for (std::size_t i = 0; i < ts.size(); ++i) rhs[i] = a(K * ts[i]);
    const std::size_t bad = kernels::first_exceeding(lhs.data(), rhs.data(), ts.size());
    if (bad == ts.size()) {
      witness = K;
    } else {
      violation = ts[bad];
    }
  }
  if (symbolic) {
    if (*symbolic) return Verdict::holds("descriptor comparison", witness);
    return Verdict::fails("descriptor comparison", violation);
  }
  if (witness) return Verdict::holds("B(t) <= A(Kt) on the window", witness);
  return Verdict::undecided("no K <= 2^40 found on the window");
}

}  // namespace orlicz
