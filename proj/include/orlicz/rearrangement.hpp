#pragma once

#include <optional>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz {

struct Piece {
  double value;
  double width;
};

// Unbounded profile c t^{-e} on (0, length), 0 < e < 1.
struct PowerTail {
  double coefficient;
  double exponent;
  double length;

  double at(double t) const;
  double floor() const { return at(length); }  // smallest value taken
  double integral_to(double t) const;          // integral over (0, min(t, length))
};

class DecreasingFn;

// Simple function on (0, L): finitely many (value, width) pieces and optionally one
// unbounded power-tail piece sitting above every step.
class SampledFn {
 public:
  SampledFn() = default;
  explicit SampledFn(std::vector<Piece> pieces, double domain_length = kInf,
                     std::optional<PowerTail> tail = std::nullopt);
  static SampledFn characteristic(double measure, double value = 1.0, double domain_length = kInf);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::optional<PowerTail>& tail() const { return tail_; }
  double domain_length() const { return domain_length_; }
  bool is_zero() const;
  SampledFn scaled(double c) const;
  // Support measure |{f > 0}|.
  double support() const;

 private:
  std::vector<Piece> pieces_;
  std::optional<PowerTail> tail_;
  double domain_length_ = kInf;
};

// Right-continuous non-increasing rearrangement: the tail (if any) on (0, T), then the
// steps in strictly decreasing order, then 0.
class DecreasingFn {
 public:
  const std::vector<Piece>& steps() const { return steps_; }
  const std::vector<double>& starts() const { return starts_; }
  const std::optional<PowerTail>& tail() const { return tail_; }
  double domain_length() const { return domain_length_; }
  double support() const { return support_; }
  double sup() const;

  double operator()(double t) const;
  double integral_to(double t) const;
  // Breakpoints 0 = b_0 < ... < b_k = support.
  std::vector<double> breakpoints() const;

 private:
  friend DecreasingFn rearrange(const SampledFn& f);
  std::vector<Piece> steps_;
  std::vector<double> starts_;
  std::vector<double> prefix_;  // integral of f* over (0, starts_[j])
  std::optional<PowerTail> tail_;
  double domain_length_ = kInf;
  double support_ = 0.0;
};

// lambda -> |{|f| > lambda}| as a right-continuous non-increasing step function
// (with a power profile above the tail floor).
class DistributionFn {
 public:
  explicit DistributionFn(const DecreasingFn& fstar);
  double operator()(double lambda) const;
  // Levels v_0 > v_1 > ... > v_{k-1} > v_k = 0 and measures mu_j = f_*(lambda) for
  // lambda in [v_{j+1}, v_j); the region above v_0 is the tail region.
  const std::vector<double>& levels() const { return levels_; }
  const std::vector<double>& measures() const { return measures_; }
  const std::optional<PowerTail>& tail() const { return tail_; }

 private:
  std::vector<double> levels_;
  std::vector<double> measures_;
  std::optional<PowerTail> tail_;
};

// f**(t) = c1 + c2 / t on each segment; the tail segment is c t^{-e} / (1 - e).
struct MaximalSegment {
  double a;
  double b;
  double c1;
  double c2;
  bool tail;
};

class MaximalFn {
 public:
  explicit MaximalFn(const DecreasingFn& fstar);
  double operator()(double t) const;
  const std::vector<MaximalSegment>& segments() const { return segments_; }
  const std::optional<PowerTail>& tail() const { return tail_; }

 private:
  std::vector<MaximalSegment> segments_;
  std::optional<PowerTail> tail_;
};

DistributionFn distribution(const SampledFn& f);
DecreasingFn rearrange(const SampledFn& f);
MaximalFn maximal(const SampledFn& f);

// Orlicz modular sum of A(c |f|) over the pieces, with 0 * inf = 0.
double modular(const SampledFn& f, const YoungFn& a, double scale = 1.0);
double luxemburg_norm(const SampledFn& f, const YoungFn& a);
// Generic Luxemburg-type gauge inf{lambda > 0 : functional(1 / lambda) <= 1} for a
// functional non-decreasing in its scale argument.
double gauge(const std::function<double(double)>& functional_of_scale, double guess = 1.0);

double lambda_norm(const SampledFn& f, const QuasiConvexFn& e);
double marcinkiewicz_norm(const SampledFn& f, const QuasiConvexFn& e);
// Same evaluators with the level function phi = (F_#)^{-1} given directly.
double lambda_norm_level(const SampledFn& f, const MonotoneFn& phi);
double marcinkiewicz_norm_level(const SampledFn& f, const MonotoneFn& phi);

// (integral f*^q w*)^{1/q}, exact on step x step products.
double classical_lorentz_norm(const SampledFn& f, const SampledFn& w, double q);
// (integral (t^{1/p} f*(t))^q dt / t)^{1/q}, sup form for q = inf; p may be inf.
double lorentz_functional(const SampledFn& f, double p, double q);
// Lorentz-Zygmund functional built on f**: (integral (t^{1/p} l(t)^alpha f**(t))^q dt/t)^{1/q}
// over (0, L), with l(t) = 1 + |log t|.
double lorentz_zygmund_functional(const SampledFn& f, double p, double q, double alpha);

}  // namespace orlicz
