// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [path-to-orlicz-cli]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "orlicz/diagonality.hpp"
#include "orlicz/json_io.hpp"
#include "orlicz/operators.hpp"
#include "support/generators.hpp"

using namespace orlicz;

namespace {

// Tolerances.
constexpr double kSandwichSlack = 1e-9;
constexpr double kSandwichMillis = 10.0;
constexpr double kFundamentalRel = 1e-9;
constexpr double kLevelRatio = 4.0;
constexpr double kMaximalRel = 0.02;
constexpr double kDomainRel = 1e-6;
constexpr double kSlopeTol = 0.02;
constexpr double kWitnessLux = 1e-12;
constexpr double kWitnessN1 = 1e-9;
constexpr double kOlRel = 1e-9;
constexpr double kBoydBand = 0.05;

struct Result {
  bool pass = true;
  std::string detail;
};

std::string g_cli_path;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

// ---------------------------------------------------------------------------

Result inverse_sandwich() {
  testgen::Rng rng(1001);
  int violations = 0;
  double slowest = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const YoungFn a = testgen::random_young(rng);
    const YoungFn c = a.conjugate();
    for (double t = 1e-6; t <= 1e6 * (1.0 + 1e-12); t *= std::pow(10.0, 0.125)) {
      const double prod = a.right_inverse_at(t) * c.right_inverse_at(t);
      if (!(prod >= t * (1.0 - kSandwichSlack) && prod <= 2.0 * t * (1.0 + kSandwichSlack))) ++violations;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    slowest = std::max(slowest, ms);
  }
  return {violations == 0 && slowest < kSandwichMillis,
          std::to_string(violations) + " violations, slowest function " + fmt(slowest) + " ms"};
}

Result fundamental_relation() {
  double worst = 0.0;
  for (double p : {1.0, 1.5, 2.0, 5.0}) {
    const YoungFn a = young_power(p);
    const QuasiConvexFn e = make_quasi_convex(GeneratorSpec::power(p));
    for (double m = 1e-4; m <= 1e2 * (1.0 + 1e-12); m *= 10.0) {
      const double expected = std::pow(m, 1.0 / p);
      const SampledFn chi = SampledFn::characteristic(m);
      for (double v : {a.fundamental_at(m), luxemburg_norm(chi, a), lambda_norm(chi, e), marcinkiewicz_norm(chi, e)}) {
        worst = std::max(worst, std::abs(v / expected - 1.0));
      }
    }
  }
  return {worst <= kFundamentalRel, "max relative deviation " + fmt(worst)};
}

Result quartet() {
  std::vector<std::string> failures;
  for (int n : {3, 4}) {
    const double p = 2.0;
    const double ps = n * p / (n - p);
    auto expect = [&](const std::string& label, const AlternativeOutcome& o, const std::string& want) {
      if (o.summary() != want) failures.push_back("n=" + std::to_string(n) + " " + label + ": " + o.summary());
    };
    expect("(a)", principal_alternative_target(SpaceDescriptor::lorentz(ps, p)),
           "Optimal(" + SpaceDescriptor::lebesgue(ps).name() + ")");
    expect("(b)", principal_alternative_target(SpaceDescriptor::lorentz_zygmund(kInf, n, -1.0)),
           "Optimal(" + SpaceDescriptor::orlicz(GeneratorSpec::exponential(n / (n - 1.0))).name() + ")");
    expect("(c)", principal_alternative_domain(SpaceDescriptor::lorentz(p, ps)),
           "Optimal(" + SpaceDescriptor::lebesgue(p).name() + ")");
    expect("(d)", principal_alternative_domain(SpaceDescriptor::lorentz(n, 1.0)), "NoOptimal");
  }
  std::string detail = failures.empty() ? "8/8 outcomes as expected" : failures.front();
  return {failures.empty(), detail};
}

Result marcinkiewicz_route() {
  const std::string target = R"({"family":"lorentz-zygmund","params":{"p":"inf","q":3,"alpha":-1}})";
  if (g_cli_path.empty()) {
    const AlternativeOutcome o =
        sobolev_no_largest_on_level(io::parse_space(io::Json::parse(target)), SobolevContext(1, 3));
    const bool ok = o.kind == OutcomeKind::NoOptimal && o.reason.find("Marcinkiewicz") != std::string::npos &&
                    o.reason.find("exp L^{3/2}") != std::string::npos;
    return {ok, "library call (no CLI path given): " + o.summary() + " " + o.reason};
  }
  const std::string cmd = "'" + g_cli_path + "' sobolev domain --target '" + target + "' --m 1 --n 3";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {false, "could not start the CLI"};
  std::string out;
  std::array<char, 256> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe.get())) out += buf.data();
  const int status = pclose(pipe.release());
  const std::string first = out.substr(0, out.find('\n'));
  const bool ok = status == 0 && first.rfind("NoOptimal", 0) == 0 &&
                  first.find("Marcinkiewicz") != std::string::npos && first.find("exp L^{3/2}") != std::string::npos;
  return {ok, first};
}

Result fundamental_levels() {
  const int n = 3;
  const int m = 1;
  double lo = kInf;
  double hi = 0.0;
  for (double q : {1.0, 2.0, kInf}) {
    const SpaceDescriptor dual = associate(SpaceDescriptor::lorentz(static_cast<double>(n) / m, q));
    for (double t = 1e-6; t <= 1e-1 * (1.0 + 1e-12); t *= 10.0) {
      std::vector<Piece> pieces;
      for (double s = t; s < 1.0; s *= 1.02) {
        const double right = std::min(1.0, s * 1.02);
        pieces.push_back({std::pow(s, static_cast<double>(m) / n - 1.0), right - s});
      }
      const double value = t * norm(dual, SampledFn(std::move(pieces), 1.0));
      const double model = t * std::pow(1.0 - std::log(t), q == kInf ? 1.0 : 1.0 - 1.0 / q);
      lo = std::min(lo, value / model);
      hi = std::max(hi, value / model);
    }
  }
  return {lo >= 1.0 / kLevelRatio && hi <= kLevelRatio, "ratio range [" + fmt(lo) + ", " + fmt(hi) + "]"};
}

Result maximal_target() {
  double worst = 0.0;
  std::vector<std::string> bad;
  for (double p : {1.5, 2.0, 3.0}) {
    const double pc = p / (p - 1.0);
    const YoungFn a = young_power(pc).conjugate();
    const MaximalTarget mt = maximal_optimal_target(a);
    if (mt.outcome.summary() != "Optimal(" + SpaceDescriptor::lebesgue(p).name() + ")") {
      bad.push_back("p=" + fmt(p) + ": " + mt.outcome.summary());
    }
    if (!mt.conjugate_target) {
      bad.push_back("p=" + fmt(p) + ": no auxiliary function");
      continue;
    }
    for (double t = 1e-2; t <= 1e2 * (1.0 + 1e-12); t *= std::sqrt(10.0)) {
      const double expected = std::tgamma(pc + 1.0) * std::pow(t, pc);
      worst = std::max(worst, std::abs((*mt.conjugate_target)(t) / expected - 1.0));
    }
  }
  const MaximalTarget one = maximal_optimal_target(young_power(1.0));
  const bool converse = one.gate.fails_p() && one.outcome.kind == OutcomeKind::NoOptimal &&
                        one.outcome.reason.find("no Orlicz target exists") != std::string::npos;
  if (!converse) bad.push_back("p=1: " + one.outcome.summary());
  return {bad.empty() && worst <= kMaximalRel,
          "max relative deviation " + fmt(worst) + (bad.empty() ? "; p=1 takes the no-target path" : "; " + bad.front())};
}

Result maximal_domain() {
  double worst = 0.0;
  bool all = true;
  for (double p : {1.5, 2.0, 3.0}) {
    const MaximalDomain md = maximal_optimal_domain(young_power(p));
    if (!md.domain) {
      all = false;
      continue;
    }
    for (double t = 1e-3; t <= 1e3 * (1.0 + 1e-12); t *= 10.0) {
      worst = std::max(worst, std::abs((*md.domain)(t) / (std::pow(t, p) / (p - 1.0)) - 1.0));
    }
  }
  const MaximalDomain lin = maximal_optimal_domain(young_power(1.0));
  const bool diverges = !lin.domain && lin.gate.fails_p();
  return {all && worst <= kDomainRel && diverges,
          "max relative deviation " + fmt(worst) + (diverges ? "; B=t diverges" : "; B=t not rejected")};
}

Result laplace() {
  std::string detail;
  bool ok = true;
  for (double p : {1.0, 1.5, 2.0, 2.5, 3.0}) {
    const LaplaceTarget lt = laplace_optimal_target(young_power(p));
    const bool optimal = lt.outcome.kind == OutcomeKind::Optimal;
    if (optimal != (p <= 2.0)) ok = false;
    if (p == 1.0) {
      const bool finite_threshold = lt.averaged && lt.averaged->infinity_threshold() < kInf;
      if (!finite_threshold) ok = false;
      detail += "p=1 " + lt.outcome.summary() + (finite_threshold ? " (bounded)" : " (threshold missing)");
      continue;
    }
    if (!lt.averaged) {
      ok = false;
      continue;
    }
    const double pc = p / (p - 1.0);
    const double t0 = 1e-3;
    const double t1 = 1e3;
    const double slope = std::log((*lt.averaged)(t1) / (*lt.averaged)(t0)) / std::log(t1 / t0);
    if (std::abs(slope - pc) > kSlopeTol) ok = false;
    detail += "; p=" + fmt(p) + " slope " + fmt(slope) + " " + lt.outcome.summary();
  }
  return {ok, detail};
}

Result witness() {
  testgen::Rng rng(9001);
  int bad = 0;
  double worst_n1 = 0.0;
  for (int i = 0; i < 200; ++i) {
    const QuasiConvexFn e = testgen::random_power_generator(rng);
    const SampledFn f = testgen::random_step(rng, 1.0, 10);
    try {
      const Witness w = construct_witness_young(f, e);
      worst_n1 = std::max(worst_n1, w.n1);
      if (!(w.modular_at_h <= 1.0 + kWitnessLux && w.luxemburg <= 2.0 * w.lambda_norm * (1.0 + kWitnessLux) &&
            w.n1 <= 1.0 + kWitnessN1)) {
        ++bad;
      }
    } catch (const Error&) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + " failures in 200 pairs, max N_1 " + fmt(worst_n1)};
}

Result ol_fuzz() {
  testgen::Rng rng(4242);
  int violations = 0;
  for (int i = 0; i < 500; ++i) {
    const QuasiConvexFn e = testgen::random_power_generator(rng);
    const LorentzWeightData d = build_lorentz_weight(e);
    const YoungFn a = testgen::random_young(rng);
    const SampledFn v = testgen::random_step(rng, kInf, 6);
    const SampledFn f = testgen::random_step(rng, 1.0, 10);
    const double lambda = testgen::log_uniform(rng, 1e-2, 1e2);
    const OlGap gap = ol_inequality_gap(a, d.g_young, v, f, lambda);
    if (!(gap.lhs <= gap.rhs() * (1.0 + kOlRel))) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations in 500 tuples"};
}

Result diagonality_table() {
  std::vector<std::string> bad;
  for (double p : {1.5, 2.0, 4.0}) {
    if (!subdiagonality_status(SpaceDescriptor::lebesgue(p)).uniform()) bad.push_back("L^" + fmt(p));
    for (double q : {1.0, 2.0, 4.0, kInf}) {
      const DiagonalityStatus s = subdiagonality_status(SpaceDescriptor::lorentz(p, q));
      const bool ok = q <= p ? s.uniform() : s.status == Diagonality::NotSubDiagonal;
      if (!ok) bad.push_back("L^{" + fmt(p) + "," + fmt(q) + "} " + to_string(s.status));
    }
  }
  const DiagonalityStatus lam = subdiagonality_status(SpaceDescriptor::lambda(GeneratorSpec::exponential(1.0)));
  const DiagonalityStatus orl = subdiagonality_status(SpaceDescriptor::orlicz(GeneratorSpec::exponential(1.0)));
  if (!lam.uniform()) bad.push_back("Lambda^exp " + to_string(lam.status));
  if (orl.uniform() || !orl.sub_diagonal()) bad.push_back("L^exp " + to_string(orl.status));
  return {bad.empty(), bad.empty() ? "15 sweep rows and the exponential contrast as expected" : bad.front()};
}

Result boyd_dichotomy() {
  const SobolevContext ctx(1, 3);
  std::string detail;
  bool ok = true;
  for (double p : {1.5, 2.0, 2.5, 2.9, 2.96, 3.0}) {
    const double q = p < 3.0 ? 3.0 * p / (3.0 - p) : kInf;
    const SpaceDescriptor target = SpaceDescriptor::lebesgue(q);
    const AlternativeOutcome sym = sobolev_orlicz_domain(target, ctx, kBoydBand);
    const YoungFn bn = sobolev_reduced_young(q < kInf ? young_power(q) : young_linfty(), ctx);
    const BoydEstimate est = boyd_upper_index(bn, false);
    const OutcomeKind num = boyd_decision(est, ctx.limiting(), kBoydBand);
    const OutcomeKind want = p < 3.0 ? OutcomeKind::Optimal : OutcomeKind::NoOptimal;
    const bool in_band = std::abs(p - 3.0) <= kBoydBand;
    for (OutcomeKind got : {sym.kind, num}) {
      if (got != want && !(got == OutcomeKind::Undecided && in_band)) ok = false;
    }
    detail += (detail.empty() ? "" : "; ") + std::string("p=") + fmt(p) + " " + to_string(sym.kind) + "/" +
              to_string(num) + " (I=" + fmt(est.upper_index) + ")";
  }
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"C1 inverse-product sandwich", inverse_sandwich},
      {"C2 norms of characteristic functions", fundamental_relation},
      {"C3 principal alternative quartet", quartet},
      {"C4 limiting Lorentz-Zygmund target via Marcinkiewicz", marcinkiewicz_route},
      {"C5 distinct target levels", fundamental_levels},
      {"C6 maximal operator target", maximal_target},
      {"C7 maximal operator domain", maximal_domain},
      {"C8 Laplace transform target", laplace},
      {"C9 witness Young functions", witness},
      {"C10 weighted Young-type inequality fuzz", ol_fuzz},
      {"C11 diagonality table", diagonality_table},
      {"C12 Boyd index dichotomy", boyd_dichotomy},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.pass) ++failed;
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << " [" << fmt(secs) << " s]: " << r.detail << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
