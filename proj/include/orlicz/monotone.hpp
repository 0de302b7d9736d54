#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "orlicz/descriptor.hpp"

namespace orlicz {

// Geometric sample grid 10^lo_decade .. 10^hi_decade with `per_decade` points per decade.
struct Grid {
  double lo_decade = -8.0;
  double hi_decade = 8.0;
  int per_decade = 64;

  std::vector<double> points() const;
  double lo() const;
  double hi() const;
  // Grid points inside [a, b].
  std::vector<double> points_between(double a, double b) const;
};

enum class EdgeKind : std::uint8_t { Flat, Power, Linear, Jump };

struct Vertex {
  double t;
  double v;
};

// Edge i joins vertex i to vertex i + 1.
//   Flat:   constant value.
//   Power:  v = anchor_v * (t / anchor_t)^k with k > 0; may start at (0,0) or end at (inf,inf).
//   Linear: affine in t between two finite vertices (used next to zero values).
//   Jump:   vertical segment; `top` selects which endpoint is the value at that abscissa.
struct Edge {
  EdgeKind kind = EdgeKind::Flat;
  double k = 0.0;
  double anchor_t = 1.0;
  double anchor_v = 1.0;
  bool top = false;
};

// Non-decreasing map [0, inf] -> [0, inf] stored as a chain of vertices joined by
// exact edge primitives. The chain always runs from t = 0 to t = inf, so inverses and
// correlatives are obtained by swapping or reciprocating coordinates.
class MonotoneFn {
 public:
  MonotoneFn();  // identically zero

  static MonotoneFn from_chain(std::vector<Vertex> vertices, std::vector<Edge> edges,
                               AsymptoticDescriptor zero = {}, AsymptoticDescriptor infinity = {});
  // c * t^k on the whole half-line (k > 0), or the constant c when k == 0.
  static MonotoneFn power(double c, double k);
  static MonotoneFn constant(double c);
  // Log-log interpolation of samples at strictly increasing abscissae, with tails
  // extended according to the descriptors (or the adjacent sampled slope).
  static MonotoneFn from_samples(std::span<const double> ts, std::span<const double> vs,
                                 AsymptoticDescriptor zero = {}, AsymptoticDescriptor infinity = {});
  static MonotoneFn sample(const Grid& grid, const std::function<double(double)>& f,
                           AsymptoticDescriptor zero = {}, AsymptoticDescriptor infinity = {});

  double operator()(double t) const;
  double value_at_zero() const { return (*this)(0.0); }

  // sup{tau : F(tau) <= s} and inf{tau : F(tau) >= s}, pointwise and as chains.
  double right_inverse_at(double s) const;
  double left_inverse_at(double s) const;
  MonotoneFn right_inverse() const;
  MonotoneFn left_inverse() const;

  // t -> 1 / F(1 / t).
  MonotoneFn correlative() const;
  // t -> F(t) t^m; throws InvalidInput if the product is not non-decreasing.
  MonotoneFn multiply_power(double m) const;
  // t -> F(c t) and t -> c F(t), c > 0.
  MonotoneFn scale_argument(double c) const;
  MonotoneFn scale_value(double c) const;

  // Exact integral of F over [a, b].
  double integral(double a, double b) const;
  // Integral over one edge restricted to [a, b] inside it.
  double edge_integral(std::size_t edge, double a, double b) const;
  // Solves integral_{t_i}^{x} F = r on edge i (r >= 0) for x.
  double edge_integral_inverse(std::size_t edge, double r) const;
  double edge_value(std::size_t edge, double t) const;

  // sup{t : F(t) = 0} and inf{t : F(t) = inf}.
  double zero_threshold() const;
  double infinity_threshold() const;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const AsymptoticDescriptor& zero_descriptor() const { return zero_; }
  const AsymptoticDescriptor& infinity_descriptor() const { return infinity_; }
  MonotoneFn with_descriptors(AsymptoticDescriptor zero, AsymptoticDescriptor infinity) const;

  // Distinct finite positive vertex abscissae.
  std::vector<double> knots() const;
  // Grid points merged with the knots inside the grid range.
  std::vector<double> evaluation_points(const Grid& grid) const;

 private:
  MonotoneFn(std::vector<Vertex> vertices, std::vector<Edge> edges, AsymptoticDescriptor zero,
             AsymptoticDescriptor infinity);
  void canonicalize();
  MonotoneFn swapped(bool right) const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  AsymptoticDescriptor zero_;
  AsymptoticDescriptor infinity_;
};

// Log-log slope of f between a and b (NaN when either value is 0 or inf).
double loglog_slope(const std::function<double(double)>& f, double a, double b);

}  // namespace orlicz
