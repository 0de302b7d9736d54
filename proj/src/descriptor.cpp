#include "orlicz/descriptor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace orlicz {

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::IntegralDiverges: return "IntegralDiverges";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::QuadratureNonConvergent: return "QuadratureNonConvergent";
    case ErrorKind::NotInSpace: return "NotInSpace";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
  }
  return "Error";
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::NearZero: return "near-zero";
    case Regime::NearInfinity: return "near-infinity";
    case Regime::Global: return "global";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Undecided: return "Undecided";
  }
  return "?";
}

AsymptoticDescriptor AsymptoticDescriptor::power_log(double p, double alpha) {
  AsymptoticDescriptor d;
  d.cls = GrowthClass::PowerLog;
  d.p = p;
  d.alpha = alpha;
  return d;
}

AsymptoticDescriptor AsymptoticDescriptor::exponential(double gamma) {
  AsymptoticDescriptor d;
  d.cls = GrowthClass::Exponential;
  d.gamma = gamma;
  return d;
}

AsymptoticDescriptor AsymptoticDescriptor::zero_on_interval(double threshold) {
  AsymptoticDescriptor d;
  d.cls = GrowthClass::ZeroOnInterval;
  d.threshold = threshold;
  return d;
}

AsymptoticDescriptor AsymptoticDescriptor::infinite_beyond(double threshold) {
  AsymptoticDescriptor d;
  d.cls = GrowthClass::InfiniteBeyond;
  d.threshold = threshold;
  return d;
}

AsymptoticDescriptor AsymptoticDescriptor::numeric() { return {}; }

std::string describe(const AsymptoticDescriptor& d, Regime end) {
  std::ostringstream os;
  switch (d.cls) {
    case GrowthClass::PowerLog:
      os << "t^" << format_number(d.p);
      if (d.alpha != 0.0) os << (end == Regime::NearZero ? " log(1/t)^" : " log(t)^") << format_number(d.alpha);
      break;
    case GrowthClass::Exponential: os << "exp(t^" << format_number(d.gamma) << ")"; break;
    case GrowthClass::ZeroOnInterval: os << "0 below " << d.threshold; break;
    case GrowthClass::InfiniteBeyond: os << "inf beyond " << d.threshold; break;
    case GrowthClass::NumericOnly: os << "numeric"; break;
  }
  return os.str();
}

std::string format_number(double x) {
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  const double r = std::round(x);
  if (std::abs(x - r) < 1e-12 * std::max(1.0, std::abs(x))) return std::to_string(static_cast<long long>(r));
  for (int den = 2; den <= 12; ++den) {
    const double num = std::round(x * den);
    if (std::abs(x * den - num) < 1e-9 && std::gcd(static_cast<long long>(std::abs(num)), static_cast<long long>(den)) == 1) {
      return std::to_string(static_cast<long long>(num)) + "/" + std::to_string(den);
    }
  }
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

AsymptoticDescriptor inverse_descriptor(const AsymptoticDescriptor& d, Regime end) {
  using D = AsymptoticDescriptor;
  switch (d.cls) {
    case GrowthClass::PowerLog:
      if (d.p > 0.0) return D::power_log(1.0 / d.p, -d.alpha / d.p);
      if (d.alpha == 0.0) {
        return end == Regime::NearZero ? D::zero_on_interval(0.0) : D::infinite_beyond(0.0);
      }
      if (end == Regime::NearInfinity && d.alpha > 0.0) return D::exponential(1.0 / d.alpha);
      return D::numeric();
    case GrowthClass::Exponential: return D::power_log(0.0, 1.0 / d.gamma);
    case GrowthClass::ZeroOnInterval:
    case GrowthClass::InfiniteBeyond: return D::power_log(0.0, 0.0);
    case GrowthClass::NumericOnly: return D::numeric();
  }
  return D::numeric();
}

AsymptoticDescriptor correlative_descriptor(const AsymptoticDescriptor& d, Regime) {
  using D = AsymptoticDescriptor;
  switch (d.cls) {
    case GrowthClass::PowerLog: return D::power_log(d.p, -d.alpha);
    case GrowthClass::ZeroOnInterval: return D::infinite_beyond(recip(d.threshold));
    case GrowthClass::InfiniteBeyond: return D::zero_on_interval(recip(d.threshold));
    default: return D::numeric();
  }
}

AsymptoticDescriptor conjugate_descriptor(const AsymptoticDescriptor& d, Regime end) {
  using D = AsymptoticDescriptor;
  switch (d.cls) {
    case GrowthClass::PowerLog:
      if (d.p > 1.0) return D::power_log(d.p / (d.p - 1.0), -d.alpha / (d.p - 1.0));
      if (d.p == 1.0) {
        if (d.alpha == 0.0) {
          return end == Regime::NearZero ? D::zero_on_interval(0.0) : D::infinite_beyond(0.0);
        }
        if (end == Regime::NearInfinity && d.alpha > 0.0) return D::exponential(1.0 / d.alpha);
      }
      return D::numeric();
    case GrowthClass::Exponential: return D::power_log(1.0, 1.0 / d.gamma);
    case GrowthClass::ZeroOnInterval:
    case GrowthClass::InfiniteBeyond: return D::power_log(1.0, 0.0);
    case GrowthClass::NumericOnly: return D::numeric();
  }
  return D::numeric();
}

AsymptoticDescriptor multiply_power_descriptor(const AsymptoticDescriptor& d, double m) {
  if (d.cls == GrowthClass::PowerLog) return AsymptoticDescriptor::power_log(d.p + m, d.alpha);
  return d;
}

AsymptoticDescriptor primitive_descriptor(const AsymptoticDescriptor& d) {
  if (d.cls == GrowthClass::PowerLog) return AsymptoticDescriptor::power_log(d.p + 1.0, d.alpha);
  return d;
}

AsymptoticDescriptor derivative_descriptor(const AsymptoticDescriptor& d) {
  if (d.cls == GrowthClass::PowerLog) {
    if (d.p < 1.0) return AsymptoticDescriptor::numeric();
    return AsymptoticDescriptor::power_log(d.p - 1.0, d.alpha);
  }
  return d;
}

AsymptoticDescriptor youngify_descriptor(const AsymptoticDescriptor& d, Regime) {
  if (d.cls == GrowthClass::PowerLog && d.p <= 0.0) return AsymptoticDescriptor::numeric();
  return d;
}

namespace {

int infinity_rank(GrowthClass c) {
  switch (c) {
    case GrowthClass::PowerLog: return 1;
    case GrowthClass::Exponential: return 2;
    case GrowthClass::InfiniteBeyond: return 3;
    default: return -1;
  }
}

}  // namespace

std::optional<bool> symbolic_dominates(const AsymptoticDescriptor& a, const AsymptoticDescriptor& b,
                                       Regime end) {
  if (!a.symbolic() || !b.symbolic()) return std::nullopt;
  if (end == Regime::NearInfinity) {
    const int ra = infinity_rank(a.cls);
    const int rb = infinity_rank(b.cls);
    if (ra < 0 || rb < 0) return std::nullopt;
    if (ra != rb) return rb < ra;
    if (a.cls == GrowthClass::PowerLog) return b.p < a.p || (b.p == a.p && b.alpha <= a.alpha);
    if (a.cls == GrowthClass::Exponential) return b.gamma <= a.gamma;
    return true;
  }
  if (end == Regime::NearZero) {
    if (b.cls == GrowthClass::ZeroOnInterval) return true;
    if (a.cls == GrowthClass::ZeroOnInterval) return false;
    if (a.cls == GrowthClass::PowerLog && b.cls == GrowthClass::PowerLog) {
      return b.p > a.p || (b.p == a.p && b.alpha <= a.alpha);
    }
    return std::nullopt;
  }
  return std::nullopt;
}

Verdict Verdict::holds(std::string note, std::optional<double> constant) {
  Verdict v;
  v.status = Status::Holds;
  v.note = std::move(note);
  v.constant = constant;
  return v;
}

Verdict Verdict::fails(std::string note, std::optional<double> point) {
  Verdict v;
  v.status = Status::Fails;
  v.note = std::move(note);
  v.point = point;
  return v;
}

Verdict Verdict::undecided(std::string note) {
  Verdict v;
  v.status = Status::Undecided;
  v.note = std::move(note);
  return v;
}

}  // namespace orlicz
