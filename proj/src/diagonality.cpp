#include "orlicz/diagonality.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/quadrature.hpp"

namespace orlicz {

namespace {

using D = AsymptoticDescriptor;

bool flat_between(const MonotoneFn& m, double l, double r) {
  double mid;
  if (r == kInf) {
    mid = l == 0.0 ? 1.0 : 2.0 * l;
  } else {
    mid = 0.5 * (l + r);
  }
  const auto& vs = m.vertices();
  const auto& es = m.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (vs[i].t <= mid && mid < vs[i + 1].t) return es[i].kind == EdgeKind::Flat || vs[i].v == vs[i + 1].v;
  }
  return false;
}

// Integral of F over (0, inf), segment by segment between the knots. Segments flagged
// as flat contribute value * length exactly.
double segmented_integral(const std::function<double(double)>& f, const std::vector<double>& knots,
                          const std::function<bool(double, double)>& constant_on) {
  std::vector<double> cuts{0.0};
  for (double k : knots) {
    if (k > cuts.back() && k < kInf) cuts.push_back(k);
  }
  cuts.push_back(kInf);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double l = cuts[i];
    const double r = cuts[i + 1];
    double part;
    if (constant_on(l, r)) {
      const double at = r == kInf ? (l == 0.0 ? 1.0 : 2.0 * l) : 0.5 * (l + r);
      part = mul0(f(at), r - l);
    } else if (l == 0.0 || r == kInf) {
      part = quad::integrate_half_line(f, l, r);
    } else {
      part = quad::integrate(f, l, r, 1e-10);
    }
    if (!(part < kInf)) return kInf;
    total += part;
  }
  return total;
}

void require_bounded(const SampledFn& f, const char* what) {
  if (f.tail()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a bounded step function");
}

double pow2(int k) { return std::ldexp(1.0, k); }

}  // namespace

double LorentzWeightData::weight(double tau) const {
  if (tau <= 0.0) return kInf;
  const double x = inverse(tau);
  if (x == kInf) return 0.0;
  return recip(g(x));
}

LorentzWeightData build_lorentz_weight(const QuasiConvexFn& e) {
  const MonotoneFn sharp = e.base().correlative();
  YoungFn gy = youngify(QuasiConvexFn(sharp));
  LorentzWeightData data{e, gy, gy.zero_threshold(), gy.infinity_threshold()};
  const Grid grid;
  for (double s : grid.points()) {
    const double a = sharp.left_inverse_at(s);
    const double b = sharp.right_inverse_at(s);
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double gi = data.inverse(s);
    if (lo == kInf) continue;
    if (gi < lo * (1.0 - 1e-9) || gi > 2.0 * hi * (1.0 + 1e-9)) {
      throw Error(ErrorKind::ConditionViolated,
                  "inverse sandwich fails at s = " + format_number(s) + ": G^{-1} = " + format_number(gi));
    }
  }
  return data;
}

MonotoneFn step_chain(const std::vector<double>& knots, const std::vector<double>& values) {
  if (values.size() != knots.size() + 1) throw Error(ErrorKind::InvalidInput, "step chain needs one value per interval");
  if (values.front() == kInf) throw Error(ErrorKind::InvalidInput, "step chain cannot start at infinity");
  Edge flat;
  Edge jump;
  jump.kind = EdgeKind::Jump;
  jump.top = true;
  std::vector<Vertex> vs{{0.0, values.front()}};
  std::vector<Edge> es;
  double current = values.front();
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const double next = values[i + 1];
    if (next < current) throw Error(ErrorKind::InvalidInput, "step values must be non-decreasing");
    if (!(knots[i] > vs.back().t) || knots[i] == kInf) throw Error(ErrorKind::InvalidInput, "step knots must increase");
    if (next == current) continue;
    vs.push_back({knots[i], current});
    es.push_back(flat);
    vs.push_back({knots[i], next});
    es.push_back(jump);
    current = next;
  }
  vs.push_back({kInf, current});
  es.push_back(flat);
  D zero = values.front() > 0.0 ? D::power_log(0.0) : D::zero_on_interval(knots.empty() ? kInf : knots.front());
  if (values.front() == 0.0) {
    for (std::size_t i = 0; i < knots.size(); ++i) {
      if (values[i + 1] > 0.0) {
        zero = D::zero_on_interval(knots[i]);
        break;
      }
    }
  }
  D inf = current == kInf ? D::infinite_beyond(vs[vs.size() - 2].t) : D::power_log(0.0);
  return MonotoneFn::from_chain(std::move(vs), std::move(es), zero, inf);
}

YoungFn flatten_near_zero(const YoungFn& a, double t) {
  if (!(t > 0.0) || t == kInf) throw Error(ErrorKind::InvalidInput, "flattening point must be finite positive");
  if (a.derivative_at(t) == 0.0) t = std::max(t, 2.0 * a.zero_threshold());
  const MonotoneFn& m = a.derivative();
  const double c = m(t);
  if (c == kInf || c == 0.0) return a;
  const auto& vs = m.vertices();
  const auto& es = m.edges();
  std::size_t i = 0;
  while (vs[i].t <= t) ++i;
  std::vector<Vertex> nv{{0.0, c}, {t, c}};
  std::vector<Edge> ne{Edge{}, es[i - 1]};
  for (std::size_t j = i; j < es.size(); ++j) {
    nv.push_back(vs[j]);
    ne.push_back(es[j]);
  }
  nv.push_back(vs.back());
  auto chain = MonotoneFn::from_chain(std::move(nv), std::move(ne), D::power_log(0.0), m.infinity_descriptor());
  return YoungFn::from_derivative(std::move(chain), D::power_log(1.0), a.infinity_descriptor());
}

OlGap ol_inequality_gap(const YoungFn& a, const YoungFn& g, const SampledFn& v, const SampledFn& f, double lambda) {
  require_bounded(f, "f");
  require_bounded(v, "v");
  if (!(lambda > 0.0) || lambda == kInf) throw Error(ErrorKind::InvalidInput, "lambda must be finite positive");

  std::vector<double> starts{0.0};
  for (const Piece& p : v.pieces()) starts.push_back(starts.back() + p.width);
  const DistributionFn dist = distribution(f);
  const auto& levels = dist.levels();
  const auto& measures = dist.measures();

  OlGap gap;
  for (std::size_t i = 0; i < v.pieces().size(); ++i) {
    const double vi = v.pieces()[i].value;
    const double l = starts[i];
    const double r = starts[i + 1];
    if (vi == 0.0 || !(r > l)) continue;
    // f_* equals measures[j] on [levels[j + 1], levels[j]) and 0 above levels[0].
    for (std::size_t j = 0; j < measures.size(); ++j) {
      const double lo = std::max(l, levels[j + 1]);
      const double hi = std::min(r, levels[j]);
      if (hi > lo) gap.lhs += g.left_inverse_at(measures[j]) * vi * (hi - lo);
    }
    const MonotoneFn& ad = a.derivative();
    auto integrand = [&](double t) { return g.derivative().left_inverse_at(vi / (lambda * ad(t))) * vi; };
    std::vector<double> cuts{l};
    for (double k : ad.knots()) {
      if (k > l && k < r) cuts.push_back(k);
    }
    cuts.push_back(r);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double cl = cuts[c];
      const double cr = cuts[c + 1];
      double part;
      if (flat_between(ad, cl, cr)) {
        part = integrand(0.5 * (cl + cr)) * (cr - cl);
      } else if (cl == 0.0) {
        part = quad::integrate_half_line(integrand, cl, cr);
      } else {
        part = quad::integrate(integrand, cl, cr, 1e-10);
      }
      gap.weight_term = part < kInf ? gap.weight_term + part : kInf;
    }
  }
  gap.modular_term = lambda * modular(f, a);
  return gap;
}

double orlicz_lambda_embedding_integral(const YoungFn& a, const QuasiConvexFn& e, double lambda) {
  if (!(lambda > 0.0) || lambda == kInf) throw Error(ErrorKind::InvalidInput, "lambda must be finite positive");
  const YoungFn gy = youngify(QuasiConvexFn(e.base().correlative()));
  const MonotoneFn& g = gy.derivative();
  const MonotoneFn& ad = a.derivative();
  auto f = [&](double t) { return g.left_inverse_at(recip(lambda * ad(t))); };
  return segmented_integral(f, ad.knots(), [&ad](double l, double r) { return flat_between(ad, l, r); });
}

double classical_lorentz_embedding_integral(const YoungFn& a, const SampledFn& w, double q, double lambda) {
  if (!(q >= 1.0) || q == kInf) throw Error(ErrorKind::InvalidInput, "q must lie in [1, inf)");
  if (!(lambda > 0.0) || lambda == kInf) throw Error(ErrorKind::InvalidInput, "lambda must be finite positive");
  const DecreasingFn ws = rearrange(w);
  const DistributionFn wd(ws);
  const MonotoneFn& ad = a.derivative();
  auto f = [&](double t) {
    const double s = lambda * ad(t) * std::pow(t, 1.0 - q);
    const double level = s == kInf ? 0.0 : wd(s);
    const double big_w = ws.integral_to(level);
    return mul0(big_w, std::pow(t, q - 1.0));
  };
  std::vector<double> knots = ad.knots();
  if (q == 1.0) {
    for (double level : wd.levels()) {
      for (double t : {ad.left_inverse_at(level / lambda), ad.right_inverse_at(level / lambda)}) {
        if (t > 0.0 && t < kInf) knots.push_back(t);
      }
    }
    std::sort(knots.begin(), knots.end());
  }
  return segmented_integral(f, knots,
                            [&ad, q](double l, double r) { return q == 1.0 && flat_between(ad, l, r); });
}

Witness construct_witness_young(const SampledFn& f, const QuasiConvexFn& e) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "witness requires a nonzero function");
  require_bounded(f, "f");
  const double ln = lambda_norm(f, e);
  if (!(ln < kInf)) throw Error(ErrorKind::NotInSpace, "function is not in Lambda^E");
  const double lam = 2.0 * ln;
  const SampledFn h = f.scaled(1.0 / lam);
  const LorentzWeightData data = build_lorentz_weight(e);

  const DistributionFn dist = distribution(h);
  const auto& levels = dist.levels();
  const auto& measures = dist.measures();
  const std::size_t k = measures.size();
  std::vector<double> knots;
  std::vector<double> values;
  for (std::size_t j = k; j-- > 0;) values.push_back(data.weight(measures[j]));
  for (std::size_t j = k; j-- > 0;) knots.push_back(levels[j]);
  values.push_back(kInf);

  YoungFn a = YoungFn::from_derivative(step_chain(knots, values));
  Witness out{a, ln, luxemburg_norm(f, a), modular(f, a, 1.0 / lam), orlicz_lambda_embedding_integral(a, e, 1.0)};
  if (out.modular_at_h > 1.0 + 1e-12) {
    throw Error(ErrorKind::ConditionViolated, "witness modular exceeds 1: " + format_number(out.modular_at_h));
  }
  if (out.n1 > 1.0 + 1e-9) {
    throw Error(ErrorKind::ConditionViolated, "witness embedding integral exceeds 1: " + format_number(out.n1));
  }
  return out;
}

Verdict ac_embedding_check(const YoungFn& a, const QuasiConvexFn& e) {
  if (e.base().infinity_threshold() < kInf) return Verdict::fails("E is not finite-valued");
  const D& ad = a.infinity_descriptor();
  const D& ed = e.infinity_descriptor();
  if (ad.cls == GrowthClass::InfiniteBeyond) return Verdict::holds("L^A is L^inf on (0,1)");

  if (ed.cls == GrowthClass::PowerLog) {
    const double p = ed.p;
    if (p == 1.0 && ed.alpha == 0.0 && ad.cls == GrowthClass::PowerLog) {
      if (ad.p > 1.0 || ad.alpha > 0.0) return Verdict::holds("a is unbounded while s E(1/s) stays bounded");
      return Verdict::fails("a is bounded", 0.0);
    }
    if (p > 1.0) {
      if (ad.cls == GrowthClass::Exponential) return Verdict::holds("exponential A against power-log E");
      if (ad.cls == GrowthClass::PowerLog) {
        const double r = ad.p;
        if (r == 1.0) return Verdict::fails("inverse of a grows exponentially", 0.0);
        if (r > p) return Verdict::holds("power of A exceeds power of E");
        if (r < p) return Verdict::fails("power of A below power of E", 0.0);
        if (ad.alpha - ed.alpha > p - 1.0) return Verdict::holds("equal powers with log gap above p - 1");
        return Verdict::fails("equal powers with log gap at most p - 1", 0.0);
      }
    }
  }
  if (ed.cls == GrowthClass::Exponential) {
    if (ad.cls == GrowthClass::PowerLog) return Verdict::fails("power-log A against exponential E", 0.0);
    if (ad.cls == GrowthClass::Exponential) {
      if (ed.gamma < ad.gamma) return Verdict::holds("exponent of E below exponent of A");
      return Verdict::fails("exponent of E not below exponent of A", 0.0);
    }
  }

  const MonotoneFn& am = a.derivative();
  const MonotoneFn& eb = e.base();
  for (int k = -10; k <= 10; ++k) {
    const double lam = pow2(k);
    auto f = [&](double s) { return am.left_inverse_at(lam * s * eb(1.0 / s)); };
    const double v = quad::integrate_half_line(f, 0.0, 1.0);
    if (!(v < kInf)) {
      Verdict out = Verdict::fails("integral diverges at a sampled lambda", 0.0);
      out.constant = lam;
      return out;
    }
  }
  return Verdict::undecided("finite at every sampled lambda; the quantifier over all lambda is not confirmed");
}

std::string to_string(Diagonality d) {
  switch (d) {
    case Diagonality::SubDiagonal: return "sub-diagonal";
    case Diagonality::UniformlySubDiagonal: return "uniformly sub-diagonal";
    case Diagonality::NotSubDiagonal: return "not sub-diagonal";
    case Diagonality::Unknown: return "sub-diagonal (uniformity unknown)";
  }
  return "unknown";
}

DiagonalityStatus subdiagonality_status(const SpaceDescriptor& x) {
  using S = Diagonality;
  if (x.interval != Interval::Unit) throw Error(ErrorKind::InvalidInput, "diagonality is classified over (0,1)");
  switch (x.family) {
    case Family::Lebesgue:
      if (x.p < kInf) return {S::UniformlySubDiagonal, "L^p with p < inf"};
      return {S::SubDiagonal, "L^inf"};
    case Family::Orlicz: {
      const Verdict d2 = delta2(*x.young, Regime::NearInfinity);
      if (d2.holds_p()) return {S::UniformlySubDiagonal, "Delta2 near infinity"};
      if (d2.fails_p()) return {S::SubDiagonal, "Delta2 fails near infinity"};
      return {S::Unknown, "Delta2 near infinity undecided"};
    }
    case Family::Lorentz:
      if (x.p == kInf) return {S::SubDiagonal, "L^{inf,inf}"};
      if (x.q <= x.p) return {S::UniformlySubDiagonal, "q <= p"};
      return {S::NotSubDiagonal, "q > p"};
    case Family::Lambda: {
      const QuasiConvexFn& e = *x.generator;
      const D& d = e.infinity_descriptor();
      if (d.is_pure_power() && d.p == 1.0) return {S::UniformlySubDiagonal, "E(t) = t"};
      const Verdict n2 = nabla2(youngify(e), Regime::NearInfinity);
      if (n2.holds_p()) return {S::UniformlySubDiagonal, "Nabla2 near infinity"};
      return {S::Unknown, "Nabla2 near infinity not established"};
    }
    case Family::ClassicalLorentz: {
      const DecreasingFn w = rearrange(*x.weight);
      const Grid grid;
      const std::vector<double> ts = grid.points_between(grid.lo(), 1.0);
      for (int k = 1; k <= 30; ++k) {
        const double c = pow2(k);
        bool ok = true;
        for (double t : ts) {
          if (w(t) > 0.0 && 2.0 * w(c * t) > w(t)) {
            ok = false;
            break;
          }
        }
        if (ok) return {S::UniformlySubDiagonal, "2 w(c t) <= w(t) with c = " + format_number(c)};
      }
      return {S::Unknown, "no dilation constant found for 2 w(c t) <= w(t)"};
    }
    case Family::LorentzZygmund:
    case Family::Marcinkiewicz: break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "no diagonality rule for " + to_string(x.family));
}

double lifted_norm(const YoungFn& f_outer, const SpaceDescriptor& x, const SampledFn& f) {
  require_bounded(f, "f");
  if (f.is_zero()) return 0.0;
  auto functional = [&](double scale) {
    std::vector<Piece> ps;
    ps.reserve(f.pieces().size());
    for (const Piece& p : f.pieces()) {
      const double v = f_outer(std::abs(p.value) * scale);
      if (v == kInf) return kInf;
      ps.push_back({v, p.width});
    }
    return norm(x, SampledFn(std::move(ps), f.domain_length()));
  };
  return gauge(functional);
}

}  // namespace orlicz
