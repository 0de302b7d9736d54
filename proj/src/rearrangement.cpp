#include "orlicz/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orlicz/kernels.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

double PowerTail::at(double t) const {
  if (t <= 0.0) return kInf;
  return coefficient * std::pow(t, -exponent);
}

double PowerTail::integral_to(double t) const {
  const double x = std::min(std::max(t, 0.0), length);
  return coefficient * std::pow(x, 1.0 - exponent) / (1.0 - exponent);
}

SampledFn::SampledFn(std::vector<Piece> pieces, double domain_length, std::optional<PowerTail> tail)
    : pieces_(std::move(pieces)), tail_(tail), domain_length_(domain_length) {
  if (!(domain_length_ > 0.0)) throw Error(ErrorKind::InvalidInput, "domain length must be positive");
  double total = 0.0;
  for (const Piece& p : pieces_) {
    if (!is_finite_positive(p.width)) throw Error(ErrorKind::InvalidInput, "piece widths must be finite positive");
    if (!(p.value >= 0.0) || p.value == kInf) {
      throw Error(ErrorKind::InvalidInput, "piece values must be finite and non-negative");
    }
    total += p.width;
  }
  if (tail_) {
    const PowerTail& t = *tail_;
    if (!is_finite_positive(t.coefficient) || !(t.exponent > 0.0 && t.exponent < 1.0) ||
        !is_finite_positive(t.length)) {
      throw Error(ErrorKind::InvalidInput, "power tail needs c > 0, 0 < e < 1 and a finite length");
    }
    for (const Piece& p : pieces_) {
      if (p.value > t.floor() * (1.0 + 1e-12)) {
        throw Error(ErrorKind::InvalidInput, "power tail must dominate every step value");
      }
    }
    total += t.length;
  }
  if (total > domain_length_ * (1.0 + 1e-12)) {
    throw Error(ErrorKind::InvalidInput, "pieces exceed the domain length");
  }
}

SampledFn SampledFn::characteristic(double measure, double value, double domain_length) {
  return SampledFn({{value, measure}}, domain_length);
}

bool SampledFn::is_zero() const {
  if (tail_) return false;
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.value == 0.0; });
}

SampledFn SampledFn::scaled(double c) const {
  if (!(c >= 0.0) || c == kInf) throw Error(ErrorKind::InvalidInput, "scale must be finite non-negative");
  std::vector<Piece> out = pieces_;
  for (Piece& p : out) p.value *= c;
  std::optional<PowerTail> tail = tail_;
  if (tail && c == 0.0) tail.reset();
  if (tail) tail->coefficient *= c;
  return SampledFn(std::move(out), domain_length_, tail);
}

double SampledFn::support() const {
  double s = tail_ ? tail_->length : 0.0;
  for (const Piece& p : pieces_) {
    if (p.value > 0.0) s += p.width;
  }
  return s;
}

// ---------------------------------------------------------------------------

DecreasingFn rearrange(const SampledFn& f) {
  std::vector<Piece> steps;
  for (const Piece& p : f.pieces()) {
    if (p.value > 0.0) steps.push_back(p);
  }
  std::stable_sort(steps.begin(), steps.end(), [](const Piece& a, const Piece& b) { return a.value > b.value; });
  DecreasingFn out;
  for (const Piece& p : steps) {
    if (!out.steps_.empty() && out.steps_.back().value == p.value) {
      out.steps_.back().width += p.width;
    } else {
      out.steps_.push_back(p);
    }
  }
  out.tail_ = f.tail();
  out.domain_length_ = f.domain_length();
  double s = out.tail_ ? out.tail_->length : 0.0;
  double area = out.tail_ ? out.tail_->integral_to(out.tail_->length) : 0.0;
  for (const Piece& p : out.steps_) {
    out.starts_.push_back(s);
    out.prefix_.push_back(area);
    s += p.width;
    area += p.value * p.width;
  }
  out.support_ = s;
  return out;
}

double DecreasingFn::sup() const {
  if (tail_) return kInf;
  return steps_.empty() ? 0.0 : steps_.front().value;
}

double DecreasingFn::operator()(double t) const {
  if (t < 0.0) return sup();
  if (tail_ && t < tail_->length) return tail_->at(t);
  if (t >= support_) return 0.0;
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), t);
  return steps_[static_cast<std::size_t>(it - starts_.begin()) - 1].value;
}

double DecreasingFn::integral_to(double t) const {
  if (!(t > 0.0)) return 0.0;
  if (tail_ && t <= tail_->length) return tail_->integral_to(t);
  if (steps_.empty()) return tail_ ? tail_->integral_to(t) : 0.0;
  if (t < starts_.front()) return tail_ ? tail_->integral_to(t) : 0.0;
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - starts_.begin()) - 1;
  return prefix_[j] + steps_[j].value * std::min(t - starts_[j], steps_[j].width);
}

std::vector<double> DecreasingFn::breakpoints() const {
  std::vector<double> out{0.0};
  if (tail_) out.push_back(tail_->length);
  for (std::size_t j = 0; j < steps_.size(); ++j) {
    const double end = starts_[j] + steps_[j].width;
    if (starts_[j] > out.back()) out.push_back(starts_[j]);
    out.push_back(end);
  }
  return out;
}

DistributionFn::DistributionFn(const DecreasingFn& fstar) : tail_(fstar.tail()) {
  const auto& steps = fstar.steps();
  for (std::size_t j = 0; j < steps.size(); ++j) {
    levels_.push_back(steps[j].value);
    measures_.push_back(fstar.starts()[j] + steps[j].width);
  }
  levels_.push_back(0.0);
}

double DistributionFn::operator()(double lambda) const {
  if (lambda < 0.0) lambda = 0.0;
  if (lambda >= levels_.front()) {
    if (!tail_) return 0.0;
    if (lambda == 0.0) return tail_->length;
    return std::min(tail_->length, std::pow(tail_->coefficient / lambda, 1.0 / tail_->exponent));
  }
  // Largest j with lambda < v_j; then lambda in [v_{j+1}, v_j).
  std::size_t j = 0;
  while (j + 1 < levels_.size() && lambda < levels_[j + 1]) ++j;
  return measures_[j];
}

MaximalFn::MaximalFn(const DecreasingFn& fstar) : tail_(fstar.tail()) {
  if (tail_) segments_.push_back({0.0, tail_->length, 0.0, 0.0, true});
  const auto& steps = fstar.steps();
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const double a = fstar.starts()[j];
    const double v = steps[j].value;
    segments_.push_back({a, a + steps[j].width, v, fstar.integral_to(a) - v * a, false});
  }
  segments_.push_back({fstar.support(), kInf, 0.0, fstar.integral_to(fstar.support()), false});
}

double MaximalFn::operator()(double t) const {
  if (t <= 0.0) {
    if (tail_) return kInf;
    return segments_.front().c1;
  }
  for (const MaximalSegment& s : segments_) {
    if (t < s.b || s.b == kInf) {
      if (s.tail) return tail_->at(t) / (1.0 - tail_->exponent);
      return s.c1 + s.c2 / t;
    }
  }
  return 0.0;
}

DistributionFn distribution(const SampledFn& f) { return DistributionFn(rearrange(f)); }
MaximalFn maximal(const SampledFn& f) { return MaximalFn(rearrange(f)); }

// ---------------------------------------------------------------------------
// Norms

double modular(const SampledFn& f, const YoungFn& a, double scale) {
  const auto& pieces = f.pieces();
  std::vector<double> values;
  std::vector<double> widths;
  values.reserve(pieces.size());
  widths.reserve(pieces.size());
  for (const Piece& p : pieces) {
    const double v = a(scale * p.value);
    if (v == 0.0) continue;
    if (v == kInf) return kInf;
    values.push_back(v);
    widths.push_back(p.width);
  }
  double total = kernels::dot(values.data(), widths.data(), values.size());
  if (f.tail() && scale > 0.0) {
    if (a.infinity_threshold() < kInf) return kInf;
    const PowerTail tail = *f.tail();
    total += quad::integrate_half_line([&](double t) { return a(scale * tail.at(t)); }, 0.0, tail.length);
  }
  return total;
}

double gauge(const std::function<double(double)>& functional_of_scale, double guess) {
  auto ok = [&](double lambda) { return functional_of_scale(1.0 / lambda) <= 1.0; };
  double lambda = is_finite_positive(guess) ? guess : 1.0;
  double lo = 0.0;
  double hi = kInf;
  if (ok(lambda)) {
    hi = lambda;
    for (int i = 0; i < 1000 && lo == 0.0; ++i) {
      const double next = hi / 2.0;
      if (next == 0.0) return 0.0;
      if (ok(next)) {
        hi = next;
      } else {
        lo = next;
      }
    }
    if (lo == 0.0) return 0.0;
  } else {
    lo = lambda;
    for (int i = 0; i < 1000 && hi == kInf; ++i) {
      const double next = lo * 2.0;
      if (next == kInf) return kInf;
      if (ok(next)) {
        hi = next;
      } else {
        lo = next;
      }
    }
    if (hi == kInf) return kInf;
  }
  while (hi / lo > 1.0 + 1e-13) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (mid <= lo || mid >= hi) break;
    if (ok(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double luxemburg_norm(const SampledFn& f, const YoungFn& a) {
  if (f.is_zero()) return 0.0;
  double guess = 1.0;
  for (const Piece& p : f.pieces()) guess = std::max(guess, p.value);
  return gauge([&](double scale) { return modular(f, a, scale); }, guess);
}

double lambda_norm_level(const SampledFn& f, const MonotoneFn& phi) {
  if (f.is_zero()) return 0.0;
  const DistributionFn dist = distribution(f);
  const auto& lv = dist.levels();
  const auto& mu = dist.measures();
  std::vector<double> weights;
  std::vector<double> gaps;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const double w = phi(mu[j]);
    const double gap = lv[j] - lv[j + 1];
    if (gap == 0.0 || w == 0.0) continue;
    if (w == kInf) return kInf;
    weights.push_back(w);
    gaps.push_back(gap);
  }
  double total = kernels::dot(weights.data(), gaps.data(), weights.size());
  if (dist.tail()) {
    const PowerTail tail = *dist.tail();
    const double floor = tail.floor();
    const double plateau = phi(tail.length);
    if (plateau == kInf) return kInf;
    total += plateau * (floor - lv.front());
    total += quad::integrate_half_line(
        [&](double lambda) { return phi(std::pow(tail.coefficient / lambda, 1.0 / tail.exponent)); }, floor, kInf);
  }
  return total;
}

double lambda_norm(const SampledFn& f, const QuasiConvexFn& e) { return lambda_norm_level(f, e.fundamental()); }

namespace {

// lim_{t -> 0+} phi(t) t^{-e} for a chain phi vanishing at the origin.
double tail_origin_limit(const MonotoneFn& phi, double e) {
  const auto& vs = phi.vertices();
  const auto& es = phi.edges();
  std::size_t i = 0;
  while (i < es.size() && vs[i + 1].t == 0.0) {
    if (vs[i + 1].v > 0.0) return kInf;
    ++i;
  }
  if (i >= es.size()) return 0.0;
  const Edge& edge = es[i];
  if (edge.kind == EdgeKind::Flat) return vs[i].v > 0.0 ? kInf : 0.0;
  if (edge.kind == EdgeKind::Power) {
    if (std::abs(edge.k - e) < 1e-12) return edge.anchor_v * std::pow(edge.anchor_t, -edge.k);
    return edge.k < e ? kInf : 0.0;
  }
  return 0.0;
}

}  // namespace

double marcinkiewicz_norm_level(const SampledFn& f, const MonotoneFn& phi) {
  if (f.is_zero()) return 0.0;
  const MaximalFn fss = maximal(f);
  const double length = f.domain_length();
  double best = 0.0;
  auto consider = [&](double value) { best = std::max(best, value); };
  const auto& vs = phi.vertices();
  for (const MaximalSegment& s : fss.segments()) {
    const double a = s.a;
    const double b = std::min(s.b, length);
    if (!(b > a) && !(s.b == kInf && a < length)) continue;
    if (s.tail) {
      const double e = fss.tail()->exponent;
      consider(tail_origin_limit(phi, e) * fss.tail()->coefficient / (1.0 - e));
    }
    if (a > 0.0) consider(phi(a) * fss(a));
    if (b < kInf && b > 0.0) consider(phi(b) * fss(b));
    for (const Vertex& v : vs) {
      if (v.t > a && v.t < b && v.t < kInf) consider(mul0(v.v, fss(v.t)));
    }
    // Chains from user tables may carry convex power pieces; scan those interiors.
    const auto& es = phi.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (es[i].kind != EdgeKind::Power || es[i].k <= 1.0 + 1e-9) continue;
      const double lo = std::max(a, vs[i].t);
      const double hi = std::min(b, vs[i + 1].t);
      if (lo > 0.0 && hi < kInf && hi > lo) {
        consider(quad::maximize_log([&](double t) { return phi(t) * fss(t); }, lo, hi).value);
      }
    }
    if (best == kInf) return kInf;
  }
  return best;
}

double marcinkiewicz_norm(const SampledFn& f, const QuasiConvexFn& e) {
  return marcinkiewicz_norm_level(f, e.fundamental());
}

double classical_lorentz_norm(const SampledFn& f, const SampledFn& w, double q) {
  if (!(q > 0.0) || q == kInf) throw Error(ErrorKind::InvalidInput, "classical Lorentz exponent must be finite positive");
  const DecreasingFn fs = rearrange(f);
  const DecreasingFn ws = rearrange(w);
  std::vector<double> powers;
  std::vector<double> masses;
  const auto& steps = fs.steps();
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const double a = fs.starts()[j];
    const double mass = ws.integral_to(a + steps[j].width) - ws.integral_to(a);
    powers.push_back(std::pow(steps[j].value, q));
    masses.push_back(mass);
  }
  double total = kernels::dot(powers.data(), masses.data(), powers.size());
  if (fs.tail()) {
    total += quad::integrate_half_line([&](double t) { return std::pow(fs(t), q) * ws(t); }, 0.0, fs.tail()->length);
  }
  return std::pow(total, 1.0 / q);
}

double lorentz_functional(const SampledFn& f, double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) throw Error(ErrorKind::InvalidInput, "Lorentz exponents must be positive");
  if (f.is_zero()) return 0.0;
  const DecreasingFn fs = rearrange(f);
  const double r = 1.0 / p;  // 0 when p = inf
  const auto& steps = fs.steps();
  if (q == kInf) {
    double best = 0.0;
    if (fs.tail()) {
      const PowerTail& t = *fs.tail();
      if (r < t.exponent) return kInf;
      best = t.coefficient * std::pow(t.length, r - t.exponent);
    }
    for (std::size_t j = 0; j < steps.size(); ++j) {
      best = std::max(best, steps[j].value * std::pow(fs.starts()[j] + steps[j].width, r));
    }
    return best;
  }
  if (p == kInf) return kInf;
  std::vector<double> powers;
  std::vector<double> masses;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const double u1 = fs.starts()[j];
    const double u2 = u1 + steps[j].width;
    powers.push_back(std::pow(steps[j].value, q));
    masses.push_back((p / q) * (std::pow(u2, q / p) - std::pow(u1, q / p)));
  }
  double total = kernels::dot(powers.data(), masses.data(), powers.size());
  if (fs.tail()) {
    const PowerTail& t = *fs.tail();
    const double s = q / p - t.exponent * q;
    if (s <= 0.0) return kInf;
    total += std::pow(t.coefficient, q) * std::pow(t.length, s) / s;
  }
  return std::pow(total, 1.0 / q);
}

namespace {

constexpr double kLogSpan = 690.0;  // e^{-690} is still a normal double

// integral over u in [u0, u1] of g(u), split into unit-length-ish pieces.
double integrate_u(const std::function<double(double)>& g, double u0, double u1) {
  double total = 0.0;
  const double step = std::log(10.0);
  for (double u = u0; u < u1; u += step) total += quad::integrate(g, u, std::min(u + step, u1), 1e-10);
  return total;
}

// Tail of the integral of g beyond |u| = U, from a power fit of g in |u|.
double u_tail(const std::function<double(double)>& g, double u_edge, double u_inner) {
  const double g1 = g(u_inner);
  const double g2 = g(u_edge);
  if (g2 == 0.0) return 0.0;
  if (!(g1 > 0.0)) return 0.0;
  const double k = std::log(g2 / g1) / std::log(std::abs(u_edge) / std::abs(u_inner));
  if (k >= -1.0 - 1e-3) return kInf;
  return g2 * std::abs(u_edge) / (-k - 1.0);
}

}  // namespace

double lorentz_zygmund_functional(const SampledFn& f, double p, double q, double alpha) {
  if (!(p > 0.0) || !(q > 0.0)) throw Error(ErrorKind::InvalidInput, "Lorentz-Zygmund exponents must be positive");
  if (f.is_zero()) return 0.0;
  const MaximalFn fss = maximal(f);
  const double r = 1.0 / p;
  const double length = f.domain_length();
  auto weight = [&](double t) { return std::pow(t, r) * std::pow(1.0 + std::abs(std::log(t)), alpha); };
  if (q == kInf) {
    double best = 0.0;
    for (const MaximalSegment& s : fss.segments()) {
      const double a = std::max(s.a, std::exp(-kLogSpan));
      const double b = std::min({s.b, length, std::exp(kLogSpan)});
      if (!(b > a)) continue;
      best = std::max(best, quad::maximize_log([&](double t) { return weight(t) * fss(t); }, a, b).value);
    }
    return best;
  }
  // In u = log t the integrand is (w(e^u) f**(e^u))^q.
  auto g = [&](double u) {
    const double t = std::exp(u);
    const double v = weight(t) * fss(t);
    return v == 0.0 ? 0.0 : std::pow(v, q);
  };
  const double u_lo = -kLogSpan;
  const double u_hi = length == kInf ? kLogSpan : std::log(length);
  double total = u_tail(g, u_lo, u_lo / 2.0);
  if (length == kInf) total += u_tail(g, u_hi, u_hi / 2.0);
  if (total == kInf) return kInf;
  std::vector<double> cuts{u_lo};
  if (u_hi > 0.0) cuts.push_back(0.0);
  for (const MaximalSegment& s : fss.segments()) {
    if (s.a > 0.0 && std::log(s.a) > u_lo && std::log(s.a) < u_hi) cuts.push_back(std::log(s.a));
  }
  cuts.push_back(u_hi);
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate_u(g, cuts[i], cuts[i + 1]);
  return std::pow(total, 1.0 / q);
}

}  // namespace orlicz
