#include "orlicz/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orlicz {

std::vector<double> Grid::points() const {
  std::vector<double> out;
  const int lo_i = static_cast<int>(std::lround(lo_decade * per_decade));
  const int hi_i = static_cast<int>(std::lround(hi_decade * per_decade));
  out.reserve(static_cast<std::size_t>(hi_i - lo_i + 1));
  for (int i = lo_i; i <= hi_i; ++i) {
    out.push_back(std::pow(10.0, static_cast<double>(i) / per_decade));
  }
  return out;
}

double Grid::lo() const { return std::pow(10.0, lo_decade); }
double Grid::hi() const { return std::pow(10.0, hi_decade); }

std::vector<double> Grid::points_between(double a, double b) const {
  std::vector<double> out;
  for (double t : points()) {
    if (t >= a && t <= b) out.push_back(t);
  }
  return out;
}

namespace {

constexpr double kRelSlack = 1e-9;

double power_value(const Edge& e, double t) {
  if (t == 0.0) return 0.0;
  if (t == kInf) return kInf;
  return e.anchor_v * std::pow(t / e.anchor_t, e.k);
}

Edge flat_edge() { return Edge{}; }

Edge jump_edge(bool top) {
  Edge e;
  e.kind = EdgeKind::Jump;
  e.top = top;
  return e;
}

Edge power_edge(double k, double anchor_t, double anchor_v) {
  Edge e;
  e.kind = EdgeKind::Power;
  e.k = k;
  e.anchor_t = anchor_t;
  e.anchor_v = anchor_v;
  return e;
}

Edge linear_edge() {
  Edge e;
  e.kind = EdgeKind::Linear;
  return e;
}

Edge power_between(const Vertex& a, const Vertex& b) {
  return power_edge(std::log(b.v / a.v) / std::log(b.t / a.t), a.t, a.v);
}

// A finite positive abscissa inside [a, b].
double interior_point(double a, double b) {
  if (a > 0.0 && b < kInf) return std::sqrt(a) * std::sqrt(b);
  if (a > 0.0) return a;
  if (b < kInf) return b;
  return 1.0;
}

// Replace every Linear edge by a fine chain of Power edges (and a vanishing jump at a
// zero endpoint) so that coordinate transforms stay within the power primitives.
void expand_linear(std::vector<Vertex>& vertices, std::vector<Edge>& edges) {
  bool any = false;
  for (const Edge& e : edges) any = any || e.kind == EdgeKind::Linear;
  if (!any) return;
  std::vector<Vertex> nv{vertices.front()};
  std::vector<Edge> ne;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Vertex a = vertices[i];
    const Vertex b = vertices[i + 1];
    if (edges[i].kind != EdgeKind::Linear) {
      ne.push_back(edges[i]);
      nv.push_back(b);
      continue;
    }
    const double slope = (b.v - a.v) / (b.t - a.t);
    constexpr int kSteps = 240;
    std::vector<Vertex> pts;
    for (int j = kSteps; j >= 0; --j) {
      const double t = a.t + (b.t - a.t) * std::exp2(-j / 8.0);
      pts.push_back({t, a.v + slope * (t - a.t)});
    }
    pts.back() = b;
    if (a.v == 0.0) {
      ne.push_back(flat_edge());
      nv.push_back({pts.front().t, 0.0});
      ne.push_back(jump_edge(true));
      nv.push_back(pts.front());
    } else {
      ne.push_back(power_between(a, pts.front()));
      nv.push_back(pts.front());
    }
    for (std::size_t j = 1; j < pts.size(); ++j) {
      ne.push_back(pts[j].v == pts[j - 1].v ? flat_edge() : power_between(pts[j - 1], pts[j]));
      nv.push_back(pts[j]);
    }
  }
  vertices = std::move(nv);
  edges = std::move(ne);
}

}  // namespace

MonotoneFn::MonotoneFn()
    : MonotoneFn({{0.0, 0.0}, {kInf, 0.0}}, {flat_edge()}, AsymptoticDescriptor::numeric(),
                 AsymptoticDescriptor::numeric()) {}

MonotoneFn::MonotoneFn(std::vector<Vertex> vertices, std::vector<Edge> edges,
                       AsymptoticDescriptor zero, AsymptoticDescriptor infinity)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      zero_(zero),
      infinity_(infinity) {
  canonicalize();
}

MonotoneFn MonotoneFn::from_chain(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                  AsymptoticDescriptor zero, AsymptoticDescriptor infinity) {
  return MonotoneFn(std::move(vertices), std::move(edges), zero, infinity);
}

MonotoneFn MonotoneFn::power(double c, double k) {
  if (!(c > 0.0) || c == kInf) throw Error(ErrorKind::InvalidInput, "power coefficient must be positive");
  if (k == 0.0) return constant(c);
  if (!(k > 0.0)) throw Error(ErrorKind::InvalidInput, "power exponent must be non-negative");
  const auto d = AsymptoticDescriptor::power_log(k, 0.0);
  return MonotoneFn({{0.0, 0.0}, {kInf, kInf}}, {power_edge(k, 1.0, c)}, d, d);
}

MonotoneFn MonotoneFn::constant(double c) {
  if (!(c >= 0.0)) throw Error(ErrorKind::InvalidInput, "constant must be non-negative");
  const auto d = AsymptoticDescriptor::power_log(0.0, 0.0);
  return MonotoneFn({{0.0, c}, {kInf, c}}, {flat_edge()}, d, d);
}

void MonotoneFn::canonicalize() {
  if (vertices_.size() != edges_.size() + 1 || edges_.empty()) {
    throw Error(ErrorKind::InvalidInput, "chain needs one more vertex than edges");
  }
  if (vertices_.front().t != 0.0 || vertices_.back().t != kInf) {
    throw Error(ErrorKind::InvalidInput, "chain must span [0, inf]");
  }
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    Vertex& cur = vertices_[i];
    const Vertex& prev = vertices_[i - 1];
    if (std::isnan(cur.t) || std::isnan(cur.v) || cur.v < 0.0) {
      throw Error(ErrorKind::InvalidInput, "chain vertex is NaN or negative");
    }
    if (cur.t < prev.t) throw Error(ErrorKind::InvalidInput, "chain abscissae decrease");
    if (cur.v < prev.v) {
      if (prev.v - cur.v <= kRelSlack * prev.v) {
        cur.v = prev.v;
      } else {
        throw Error(ErrorKind::InvalidInput, "function is not non-decreasing");
      }
    }
  }
  std::vector<Vertex> nv{vertices_.front()};
  std::vector<Edge> ne;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Vertex b = vertices_[i + 1];
    Edge e = edges_[i];
    const Vertex a = nv.back();
    if (b.t == a.t) {
      if (b.v == a.v) continue;
      if (e.kind != EdgeKind::Jump) e = jump_edge(false);
    } else if (e.kind == EdgeKind::Jump) {
      throw Error(ErrorKind::InvalidInput, "jump edge with distinct abscissae");
    } else if (b.v == a.v) {
      e = flat_edge();
    } else if (e.kind == EdgeKind::Flat) {
      throw Error(ErrorKind::InvalidInput, "flat edge with distinct values");
    } else if (e.kind == EdgeKind::Power && !(e.k > 0.0)) {
      throw Error(ErrorKind::InvalidInput, "power edge needs a positive exponent");
    } else if (e.kind == EdgeKind::Linear && (a.t == 0.0 || b.t == kInf || b.v == kInf)) {
      throw Error(ErrorKind::InvalidInput, "linear edge needs finite endpoints");
    }
    if (!ne.empty()) {
      Edge& last = ne.back();
      if (last.kind == EdgeKind::Flat && e.kind == EdgeKind::Flat) {
        nv.back() = b;
        continue;
      }
      if (last.kind == EdgeKind::Jump && e.kind == EdgeKind::Jump) {
        nv.back() = b;
        last.top = e.top;
        continue;
      }
    }
    ne.push_back(e);
    nv.push_back(b);
  }
  if (ne.empty()) {
    ne.push_back(flat_edge());
    nv.push_back({kInf, nv.front().v});
  }
  vertices_ = std::move(nv);
  edges_ = std::move(ne);
}

MonotoneFn MonotoneFn::from_samples(std::span<const double> ts, std::span<const double> vs,
                                    AsymptoticDescriptor zero, AsymptoticDescriptor infinity) {
  const std::size_t n = ts.size();
  if (n == 0 || vs.size() != n) throw Error(ErrorKind::InvalidInput, "sample arrays differ in size");
  std::vector<double> v(vs.begin(), vs.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(ts[i] > 0.0) || ts[i] == kInf) throw Error(ErrorKind::InvalidInput, "sample abscissae must be finite positive");
    if (i > 0 && !(ts[i] > ts[i - 1])) throw Error(ErrorKind::InvalidInput, "sample abscissae must increase");
    if (std::isnan(v[i]) || v[i] < 0.0) throw Error(ErrorKind::InvalidInput, "sample values must be non-negative");
    if (i > 0 && v[i] < v[i - 1]) {
      if (v[i - 1] - v[i] <= kRelSlack * v[i - 1]) {
        v[i] = v[i - 1];
      } else {
        throw Error(ErrorKind::InvalidInput, "sample values must be non-decreasing");
      }
    }
  }

  std::vector<Vertex> vert;
  std::vector<Edge> edges;
  std::vector<Edge> interior;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Vertex a{ts[i], v[i]};
    const Vertex b{ts[i + 1], v[i + 1]};
    if (a.v == b.v) {
      interior.push_back(flat_edge());
    } else if (b.v == kInf) {
      interior.push_back(jump_edge(false));  // marker, expanded below
    } else if (a.v == 0.0) {
      interior.push_back(linear_edge());
    } else {
      interior.push_back(power_between(a, b));
    }
  }

  // Zero-side tail.
  const Vertex first{ts[0], v[0]};
  if (first.v == 0.0) {
    vert.push_back({0.0, 0.0});
    edges.push_back(flat_edge());
  } else if (zero.cls == GrowthClass::ZeroOnInterval) {
    vert.push_back({0.0, 0.0});
    edges.push_back(flat_edge());
    vert.push_back({first.t, 0.0});
    edges.push_back(jump_edge(true));
  } else {
    double k = 0.0;
    if (zero.cls == GrowthClass::PowerLog && zero.p > 0.0) {
      k = zero.p;
    } else if (!zero.symbolic() || zero.cls == GrowthClass::PowerLog) {
      if (!interior.empty() && interior.front().kind == EdgeKind::Power) k = interior.front().k;
    }
    if (k > 0.0 && first.v < kInf) {
      vert.push_back({0.0, 0.0});
      edges.push_back(power_edge(k, first.t, first.v));
    } else {
      vert.push_back({0.0, first.v});
      edges.push_back(flat_edge());
    }
  }
  vert.push_back(first);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Vertex b{ts[i + 1], v[i + 1]};
    if (interior[i].kind == EdgeKind::Jump) {
      edges.push_back(jump_edge(false));
      vert.push_back({ts[i], kInf});
      edges.push_back(flat_edge());
      vert.push_back({b.t, kInf});
    } else {
      edges.push_back(interior[i]);
      vert.push_back(b);
    }
  }

  // Infinity-side tail.
  const Vertex last{ts[n - 1], v[n - 1]};
  if (last.v == kInf) {
    edges.push_back(flat_edge());
    vert.push_back({kInf, kInf});
  } else if (infinity.cls == GrowthClass::Exponential || infinity.cls == GrowthClass::InfiniteBeyond) {
    edges.push_back(jump_edge(false));
    vert.push_back({last.t, kInf});
    edges.push_back(flat_edge());
    vert.push_back({kInf, kInf});
  } else {
    double k = 0.0;
    if (infinity.cls == GrowthClass::PowerLog && infinity.p > 0.0) {
      k = infinity.p;
    } else if (!infinity.symbolic() || infinity.cls == GrowthClass::PowerLog) {
      if (!interior.empty() && interior.back().kind == EdgeKind::Power) k = interior.back().k;
    }
    if (k > 0.0 && last.v > 0.0) {
      edges.push_back(power_edge(k, last.t, last.v));
      vert.push_back({kInf, kInf});
    } else {
      edges.push_back(flat_edge());
      vert.push_back({kInf, last.v});
    }
  }
  return MonotoneFn(std::move(vert), std::move(edges), zero, infinity);
}

MonotoneFn MonotoneFn::sample(const Grid& grid, const std::function<double(double)>& f,
                              AsymptoticDescriptor zero, AsymptoticDescriptor infinity) {
  const auto ts = grid.points();
  std::vector<double> vs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = f(ts[i]);
  return from_samples(ts, vs, zero, infinity);
}

double MonotoneFn::edge_value(std::size_t i, double t) const {
  const Edge& e = edges_[i];
  const Vertex& a = vertices_[i];
  const Vertex& b = vertices_[i + 1];
  switch (e.kind) {
    case EdgeKind::Flat: return a.v;
    case EdgeKind::Power: {
      if (t <= a.t) return a.v;
      if (t >= b.t) return b.v;
      return power_value(e, t);
    }
    case EdgeKind::Linear: return a.v + (b.v - a.v) * ((t - a.t) / (b.t - a.t));
    case EdgeKind::Jump: return e.top ? b.v : a.v;
  }
  return a.v;
}

double MonotoneFn::operator()(double t) const {
  if (!(t > 0.0)) t = 0.0;
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t,
                                   [](const Vertex& v, double x) { return v.t < x; });
  const std::size_t i = static_cast<std::size_t>(it - vertices_.begin());
  if (i < vertices_.size() && vertices_[i].t == t) {
    std::size_t j = i;
    while (j + 1 < vertices_.size() && vertices_[j + 1].t == t) ++j;
    if (i == j) return vertices_[i].v;
    return edges_[i].top ? vertices_[j].v : vertices_[i].v;
  }
  return edge_value(i - 1, t);
}

double MonotoneFn::right_inverse_at(double s) const {
  if (std::isnan(s)) return 0.0;
  const auto it = std::upper_bound(vertices_.begin(), vertices_.end(), s,
                                   [](double x, const Vertex& v) { return x < v.v; });
  if (it == vertices_.begin()) return 0.0;
  const std::size_t j = static_cast<std::size_t>(it - vertices_.begin()) - 1;
  if (j + 1 == vertices_.size()) return kInf;
  const Edge& e = edges_[j];
  const Vertex& a = vertices_[j];
  const Vertex& b = vertices_[j + 1];
  switch (e.kind) {
    case EdgeKind::Power: {
      if (s <= a.v) return a.t;
      const double x = e.anchor_t * std::pow(s / e.anchor_v, 1.0 / e.k);
      return std::clamp(x, a.t, b.t);
    }
    case EdgeKind::Linear: {
      const double x = a.t + (s - a.v) * (b.t - a.t) / (b.v - a.v);
      return std::clamp(x, a.t, b.t);
    }
    default: return a.t;
  }
}

double MonotoneFn::left_inverse_at(double s) const {
  if (std::isnan(s)) return 0.0;
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s,
                                   [](const Vertex& v, double x) { return v.v < x; });
  if (it == vertices_.begin()) return 0.0;
  if (it == vertices_.end()) return kInf;
  const std::size_t i = static_cast<std::size_t>(it - vertices_.begin());
  const Edge& e = edges_[i - 1];
  const Vertex& a = vertices_[i - 1];
  const Vertex& b = vertices_[i];
  switch (e.kind) {
    case EdgeKind::Power: {
      if (s >= b.v) return b.t;
      const double x = e.anchor_t * std::pow(s / e.anchor_v, 1.0 / e.k);
      return std::clamp(x, a.t, b.t);
    }
    case EdgeKind::Linear: {
      const double x = a.t + (s - a.v) * (b.t - a.t) / (b.v - a.v);
      return std::clamp(x, a.t, b.t);
    }
    default: return b.t;
  }
}

MonotoneFn MonotoneFn::swapped(bool right) const {
  std::vector<Vertex> nv;
  std::vector<Edge> ne;
  if (vertices_.front().v > 0.0) {
    nv.push_back({0.0, 0.0});
    ne.push_back(flat_edge());
  }
  nv.push_back({vertices_.front().v, vertices_.front().t});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    switch (e.kind) {
      case EdgeKind::Flat: ne.push_back(jump_edge(right)); break;
      case EdgeKind::Jump: ne.push_back(flat_edge()); break;
      case EdgeKind::Power: ne.push_back(power_edge(1.0 / e.k, e.anchor_v, e.anchor_t)); break;
      case EdgeKind::Linear: ne.push_back(linear_edge()); break;
    }
    nv.push_back({vertices_[i + 1].v, vertices_[i + 1].t});
  }
  if (vertices_.back().v < kInf) {
    ne.push_back(flat_edge());
    nv.push_back({kInf, kInf});
  }
  return MonotoneFn(std::move(nv), std::move(ne), inverse_descriptor(zero_, Regime::NearZero),
                    inverse_descriptor(infinity_, Regime::NearInfinity));
}

MonotoneFn MonotoneFn::right_inverse() const { return swapped(true); }
MonotoneFn MonotoneFn::left_inverse() const { return swapped(false); }

MonotoneFn MonotoneFn::correlative() const {
  std::vector<Vertex> vert = vertices_;
  std::vector<Edge> edges = edges_;
  expand_linear(vert, edges);
  std::vector<Vertex> nv;
  std::vector<Edge> ne;
  for (std::size_t i = vert.size(); i-- > 0;) nv.push_back({recip(vert[i].t), recip(vert[i].v)});
  for (std::size_t i = edges.size(); i-- > 0;) {
    Edge e = edges[i];
    if (e.kind == EdgeKind::Jump) {
      e.top = !e.top;
    } else if (e.kind == EdgeKind::Power) {
      e.anchor_t = 1.0 / e.anchor_t;
      e.anchor_v = 1.0 / e.anchor_v;
    }
    ne.push_back(e);
  }
  return MonotoneFn(std::move(nv), std::move(ne), correlative_descriptor(infinity_, Regime::NearInfinity),
                    correlative_descriptor(zero_, Regime::NearZero));
}

MonotoneFn MonotoneFn::multiply_power(double m) const {
  if (m == 0.0) return *this;
  std::vector<Vertex> vert = vertices_;
  std::vector<Edge> edges = edges_;
  expand_linear(vert, edges);
  auto scaled = [m](double t, double v) {
    if (v == 0.0) return 0.0;
    if (t == 0.0) {
      if (v == kInf) throw Error(ErrorKind::InvalidInput, "indeterminate product at zero");
      return m > 0.0 ? 0.0 : kInf;
    }
    if (t == kInf) {
      if (m > 0.0) return kInf;
      if (v == kInf) throw Error(ErrorKind::InvalidInput, "indeterminate product at infinity");
      return 0.0;
    }
    return v * std::pow(t, m);
  };
  std::vector<Vertex> nv;
  std::vector<Edge> ne;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Vertex a = vert[i];
    const Vertex b = vert[i + 1];
    const Edge& e = edges[i];
    Edge out = e;
    double va = 0.0;
    double vb = 0.0;
    if (e.kind == EdgeKind::Flat) {
      if (a.v == 0.0 || a.v == kInf) {
        va = vb = a.v;
      } else {
        if (m < 0.0 && b.t - a.t <= 1e-9 * b.t) {
          va = vb = nv.empty() ? a.v * std::pow(a.t, m) : nv.back().v;
        } else {
          if (m < 0.0) throw Error(ErrorKind::InvalidInput, "product with t^m is decreasing on a flat piece");
          const double tm = interior_point(a.t, b.t);
          out = power_edge(m, tm, a.v * std::pow(tm, m));
          va = power_value(out, a.t);
          vb = power_value(out, b.t);
        }
      }
    } else if (e.kind == EdgeKind::Power) {
      const double k = e.k + m;
      const double av = e.anchor_v * std::pow(e.anchor_t, m);
      if (k < -1e-12) throw Error(ErrorKind::InvalidInput, "product with t^m is decreasing on a power piece");
      if (k <= 1e-12) {
        out = flat_edge();
        va = vb = av;
      } else {
        out = power_edge(k, e.anchor_t, av);
        va = power_value(out, a.t);
        vb = power_value(out, b.t);
      }
    } else {
      if (a.t == 0.0 || a.t == kInf) {
        va = vb = scaled(a.t, a.v == 0.0 ? b.v : a.v);
        out = flat_edge();
      } else {
        va = scaled(a.t, a.v);
        vb = scaled(b.t, b.v);
      }
    }
    if (nv.empty()) nv.push_back({a.t, va});
    const double start = nv.back().v;
    if (out.kind == EdgeKind::Flat && va == vb && start != va && std::abs(start - va) <= 1e-9 * std::max(start, va)) {
      vb = start;
    }
    nv.push_back({b.t, vb});
    ne.push_back(out);
  }
  return MonotoneFn(std::move(nv), std::move(ne), multiply_power_descriptor(zero_, m),
                    multiply_power_descriptor(infinity_, m));
}

MonotoneFn MonotoneFn::scale_argument(double c) const {
  if (!is_finite_positive(c)) throw Error(ErrorKind::InvalidInput, "argument scale must be finite positive");
  std::vector<Vertex> nv = vertices_;
  std::vector<Edge> ne = edges_;
  for (Vertex& v : nv) v.t = v.t / c;
  for (Edge& e : ne) {
    if (e.kind == EdgeKind::Power) e.anchor_t /= c;
  }
  return MonotoneFn(std::move(nv), std::move(ne), zero_, infinity_);
}

MonotoneFn MonotoneFn::scale_value(double c) const {
  if (!is_finite_positive(c)) throw Error(ErrorKind::InvalidInput, "value scale must be finite positive");
  std::vector<Vertex> nv = vertices_;
  std::vector<Edge> ne = edges_;
  for (Vertex& v : nv) v.v = v.v * c;
  for (Edge& e : ne) {
    if (e.kind == EdgeKind::Power) e.anchor_v *= c;
  }
  return MonotoneFn(std::move(nv), std::move(ne), zero_, infinity_);
}

double MonotoneFn::edge_integral(std::size_t i, double x0, double x1) const {
  if (!(x1 > x0)) return 0.0;
  const Edge& e = edges_[i];
  const Vertex& a = vertices_[i];
  const Vertex& b = vertices_[i + 1];
  switch (e.kind) {
    case EdgeKind::Flat:
      if (a.v == 0.0) return 0.0;
      return a.v * (x1 - x0);
    case EdgeKind::Power: {
      if (x1 == kInf) return kInf;
      const double f1 = power_value(e, x1);
      const double kp1 = e.k + 1.0;
      if (x0 == 0.0) return x1 * f1 / kp1;
      return x1 * f1 / kp1 * -std::expm1(kp1 * std::log(x0 / x1));
    }
    case EdgeKind::Linear: {
      const double s = (b.v - a.v) / (b.t - a.t);
      const double v0 = a.v + s * (x0 - a.t);
      const double v1 = a.v + s * (x1 - a.t);
      return 0.5 * (v0 + v1) * (x1 - x0);
    }
    case EdgeKind::Jump: return 0.0;
  }
  return 0.0;
}

double MonotoneFn::edge_integral_inverse(std::size_t i, double r) const {
  const Edge& e = edges_[i];
  const Vertex& a = vertices_[i];
  const Vertex& b = vertices_[i + 1];
  if (r <= 0.0) return a.t;
  double x = b.t;
  switch (e.kind) {
    case EdgeKind::Flat:
      if (a.v == kInf) return a.t;
      if (a.v == 0.0) return b.t;
      x = a.t + r / a.v;
      break;
    case EdgeKind::Power: {
      const double kp1 = e.k + 1.0;
      const double u = r * kp1 / (e.anchor_v * e.anchor_t) + std::pow(a.t / e.anchor_t, kp1);
      x = e.anchor_t * std::pow(u, 1.0 / kp1);
      break;
    }
    case EdgeKind::Linear: {
      const double s = (b.v - a.v) / (b.t - a.t);
      x = a.t + 2.0 * r / (a.v + std::sqrt(a.v * a.v + 2.0 * s * r));
      break;
    }
    case EdgeKind::Jump: return a.t;
  }
  return std::clamp(x, a.t, b.t);
}

double MonotoneFn::integral(double x0, double x1) const {
  if (!(x1 > x0)) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const double lo = std::max(x0, vertices_[i].t);
    const double hi = std::min(x1, vertices_[i + 1].t);
    if (hi > lo) total += edge_integral(i, lo, hi);
    if (total == kInf) return kInf;
  }
  return total;
}

double MonotoneFn::zero_threshold() const {
  if (vertices_.front().v > 0.0) return 0.0;
  double t = 0.0;
  for (const Vertex& v : vertices_) {
    if (v.v > 0.0) break;
    t = v.t;
  }
  return t;
}

double MonotoneFn::infinity_threshold() const {
  for (const Vertex& v : vertices_) {
    if (v.v == kInf) return v.t;
  }
  return kInf;
}

MonotoneFn MonotoneFn::with_descriptors(AsymptoticDescriptor zero, AsymptoticDescriptor infinity) const {
  MonotoneFn out = *this;
  out.zero_ = zero;
  out.infinity_ = infinity;
  return out;
}

std::vector<double> MonotoneFn::knots() const {
  std::vector<double> out;
  for (const Vertex& v : vertices_) {
    if (v.t > 0.0 && v.t < kInf && (out.empty() || out.back() != v.t)) out.push_back(v.t);
  }
  return out;
}

std::vector<double> MonotoneFn::evaluation_points(const Grid& grid) const {
  std::vector<double> out = grid.points();
  const double lo = grid.lo();
  const double hi = grid.hi();
  for (double t : knots()) {
    if (t >= lo && t <= hi) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double loglog_slope(const std::function<double(double)>& f, double a, double b) {
  const double fa = f(a);
  const double fb = f(b);
  if (!is_finite_positive(fa) || !is_finite_positive(fb)) return std::numeric_limits<double>::quiet_NaN();
  return std::log(fb / fa) / std::log(b / a);
}

}  // namespace orlicz
