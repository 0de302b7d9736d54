#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orlicz/diagonality.hpp"
#include "orlicz/json_io.hpp"
#include "orlicz/operators.hpp"

using namespace orlicz;
using io::Json;

namespace {

constexpr int kDecided = 0;
constexpr int kInputError = 1;
constexpr int kUndecided = 2;

struct Report {
  Json json;
  std::string text;
  int code = kDecided;
};

struct Settings {
  bool json = false;
  double grid_decades = 8.0;
  double tol = 0.05;
  std::string samples;

  Grid grid() const {
    Grid g;
    g.lo_decade = -grid_decades;
    g.hi_decade = grid_decades;
    return g;
  }
};

std::string fmt(double x) {
  if (x == kInf) return "inf";
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

int code_for(Status s) { return s == Status::Undecided ? kUndecided : kDecided; }
int code_for(OutcomeKind k) { return k == OutcomeKind::Undecided ? kUndecided : kDecided; }

std::string verdict_line(const Verdict& v) {
  std::string line = to_string(v.status);
  if (v.constant) line += " K=" + fmt(*v.constant);
  if (v.point) line += " at " + fmt(*v.point);
  if (!v.note.empty()) line += " " + v.note;
  return line;
}

Report outcome_report(const AlternativeOutcome& o, Json query) {
  Report r;
  r.json = {{"query", std::move(query)}, {"result", io::to_json(o)}};
  std::string first = o.summary();
  if (!o.reason.empty()) {
    first += " " + o.reason;
  } else if (!o.relation.empty()) {
    first += " " + o.relation;
  }
  std::ostringstream os;
  os << first << "\n";
  os << "  evidence: " << verdict_line(o.evidence) << "\n";
  if (!o.relation.empty()) os << "  relation: " << o.relation << "\n";
  for (const auto& [k, v] : o.details) os << "  " << k << ": " << v << "\n";
  r.text = os.str();
  r.code = code_for(o.kind);
  return r;
}

Report verdict_report(const Verdict& v, Json query, const std::string& label) {
  Report r;
  r.json = {{"query", std::move(query)}, {"result", io::to_json(v)}};
  r.text = label + ": " + verdict_line(v) + "\n";
  r.code = code_for(v.status);
  return r;
}

Json parse_arg(const std::string& text, const std::string& flag) { return io::parse_document(text, flag); }

SampledFn load_function(const Settings& s, const std::string& f_json, double length) {
  if (!f_json.empty()) return io::parse_sampled(parse_arg(f_json, "--f"));
  if (s.samples.empty()) throw Error(ErrorKind::InvalidInput, "a function is required: pass --f or --samples");
  std::ifstream in(s.samples);
  if (!in) throw Error(ErrorKind::InvalidInput, "--samples: cannot open '" + s.samples + "'");
  return io::read_samples_csv(in, length);
}

std::vector<double> sample_points(const std::vector<double>& at) {
  if (!at.empty()) return at;
  std::vector<double> out;
  for (int k = -4; k <= 4; k += 2) out.push_back(std::pow(10.0, k));
  return out;
}

// ---------------------------------------------------------------------------

struct Args {
  std::string young;
  std::string young_b;
  std::string space;
  std::string generator;
  std::string target;
  std::string domain;
  std::string f;
  std::string regime = "global";
  std::string side;
  std::vector<double> at;
  int m = 1;
  int n = 3;
  bool ac = false;
};

Report cmd_conj(const Settings& s, const Args& a) {
  const YoungFn y = io::parse_young(parse_arg(a.young, "--young"), s.grid());
  const YoungFn c = y.conjugate();
  Report r;
  Json values = Json::array();
  std::ostringstream os;
  os << "conjugate " << c.describe() << "\n";
  for (double t : sample_points(a.at)) {
    values.push_back(Json::array({t, io::number_json(c(t))}));
    os << "  conj(A)(" << fmt(t) << ") = " << fmt(c(t)) << "\n";
  }
  r.json = {{"query", {{"young", parse_arg(a.young, "--young")}}},
            {"result", {{"conjugate", io::to_json(c)}, {"describe", c.describe()}, {"values", values}}}};
  r.text = os.str();
  return r;
}

Report cmd_inverse(const Settings& s, const Args& a) {
  const YoungFn y = io::parse_young(parse_arg(a.young, "--young"), s.grid());
  const YoungFn c = y.conjugate();
  Report r;
  Json rows = Json::array();
  std::ostringstream os;
  bool sandwich = true;
  for (double t : sample_points(a.at)) {
    const double ai = y.right_inverse_at(t);
    const double ci = c.right_inverse_at(t);
    const double ratio = ai * ci / t;
    const bool ok = ratio >= 1.0 - 1e-9 && ratio <= 2.0 + 1e-9;
    sandwich = sandwich && ok;
    rows.push_back({{"t", t}, {"inverse", io::number_json(ai)}, {"conjugate_inverse", io::number_json(ci)},
                    {"product_over_t", io::number_json(ratio)}});
    os << "  t=" << fmt(t) << " A^{-1}=" << fmt(ai) << " conj^{-1}=" << fmt(ci) << " product/t=" << fmt(ratio)
       << (ok ? "" : "  (outside [1,2])") << "\n";
  }
  r.json = {{"query", {{"young", parse_arg(a.young, "--young")}}}, {"result", {{"rows", rows}, {"sandwich", sandwich}}}};
  r.text = std::string(sandwich ? "Holds" : "Fails") + " t <= A^{-1}(t) conj(A)^{-1}(t) <= 2t at every sampled t\n" +
           os.str();
  return r;
}

Regime parse_regime(const std::string& r) {
  if (r == "zero") return Regime::NearZero;
  if (r == "infinity") return Regime::NearInfinity;
  return Regime::Global;
}

Report cmd_dominates(const Settings& s, const Args& a) {
  const YoungFn ya = io::parse_young(parse_arg(a.young, "--a"), s.grid(), "--a");
  const YoungFn yb = io::parse_young(parse_arg(a.young_b, "--b"), s.grid(), "--b");
  const Verdict v = dominates(ya, yb, parse_regime(a.regime), s.grid());
  return verdict_report(v, {{"a", parse_arg(a.young, "--a")}, {"b", parse_arg(a.young_b, "--b")}, {"regime", a.regime}},
                        "B < A (" + a.regime + ")");
}

Report cmd_norm(const Settings& s, const Args& a) {
  const SpaceDescriptor x = io::parse_space(parse_arg(a.space, "--space"), s.grid());
  const SampledFn f = load_function(s, a.f, x.domain_length());
  const double v = norm(x, f);
  Report r;
  r.json = {{"query", {{"space", io::to_json(x)}, {"f", io::to_json(f)}}}, {"result", {{"norm", io::number_json(v)}}}};
  r.text = "norm in " + x.name() + " = " + fmt(v) + "\n";
  return r;
}

Report cmd_fundamental(const Settings& s, const Args& a) {
  const SpaceDescriptor x = io::parse_space(parse_arg(a.space, "--space"), s.grid());
  const FundamentalFn phi = fundamental_function(x);
  const Companions c = companions(x);
  Report r;
  Json values = Json::array();
  std::ostringstream os;
  os << "phi of " << x.name() << ": near 0 " << describe(phi.near_zero(), Regime::NearZero) << "; near inf "
     << describe(phi.near_infinity(), Regime::NearInfinity) << "\n";
  os << "  Lambda(X) = " << c.lorentz_end.name() << ", L(X) = " << c.orlicz.name()
     << ", M(X) = " << c.marcinkiewicz_end.name() << "\n";
  for (double t : sample_points(a.at)) {
    values.push_back(Json::array({t, io::number_json(phi(t))}));
    os << "  phi(" << fmt(t) << ") = " << fmt(phi(t)) << "\n";
  }
  r.json = {{"query", {{"space", io::to_json(x)}}},
            {"result",
             {{"values", values},
              {"near_zero", io::to_json(phi.near_zero())},
              {"near_infinity", io::to_json(phi.near_infinity())},
              {"lorentz_end", c.lorentz_end.name()},
              {"orlicz", c.orlicz.name()},
              {"marcinkiewicz_end", c.marcinkiewicz_end.name()}}}};
  r.text = os.str();
  return r;
}

Report cmd_alternative(const Settings& s, const Args& a) {
  const SpaceDescriptor x = io::parse_space(parse_arg(a.space, "--space"), s.grid());
  const AlternativeOutcome o = a.side == "target" ? principal_alternative_target(x) : principal_alternative_domain(x);
  return outcome_report(o, {{"side", a.side}, {"space", io::to_json(x)}});
}

Report sobolev_target(const SobolevContext& ctx, const SpaceDescriptor& x, Json query) {
  const Verdict cond = sobolev_target_condition(fundamental_function(x), ctx);
  AlternativeOutcome o;
  o.side = Side::Target;
  o.relation = "W^m " + x.name() + " -> Y";
  if (!cond.holds_p()) {
    o.kind = cond.fails_p() ? OutcomeKind::NoOptimal : OutcomeKind::Undecided;
    o.evidence = cond;
    o.reason = "no r.i. target: " + cond.note;
    return outcome_report(o, std::move(query));
  }
  const double lim = ctx.limiting();
  const bool lorentz_like = x.family == Family::Lebesgue || x.family == Family::Lorentz;
  if (lorentz_like && x.p < lim) {
    const double q = x.family == Family::Lebesgue ? x.p : x.q;
    const double ps = 1.0 / (1.0 / x.p - ctx.alpha());
    const SpaceDescriptor y = q == ps ? SpaceDescriptor::lebesgue(ps) : SpaceDescriptor::lorentz(ps, q);
    AlternativeOutcome alt = principal_alternative_target(y);
    alt.details.emplace_back("optimal_target", y.name());
    return outcome_report(alt, std::move(query));
  }
  if (lorentz_like && x.p == lim && (x.family == Family::Lorentz ? x.q : x.p) == 1.0) {
    const SpaceDescriptor y = SpaceDescriptor::lebesgue(kInf);
    return outcome_report(outcome_from(Side::Target, y, Verdict::holds("optimal target is L^inf"), o.relation),
                          std::move(query));
  }
  const FundamentalFn phi_y = sobolev_optimal_target_fundamental(fundamental_function(x), ctx);
  o.kind = OutcomeKind::Undecided;
  o.evidence = Verdict::undecided("optimal target outside the catalog");
  o.reason = "optimal target level phi_Y ~ " + describe(phi_y.near_zero(), Regime::NearZero);
  return outcome_report(o, std::move(query));
}

Report cmd_sobolev(const Settings& s, const Args& a) {
  const SobolevContext ctx(a.m, a.n);
  if (a.side == "domain") {
    if (a.target.empty()) throw Error(ErrorKind::InvalidInput, "sobolev domain needs --target");
    const SpaceDescriptor y = io::parse_space(parse_arg(a.target, "--target"), s.grid());
    const AlternativeOutcome o = sobolev_no_largest_on_level(y, ctx, s.tol);
    return outcome_report(o, {{"side", "domain"}, {"target", io::to_json(y)}, {"m", a.m}, {"n", a.n}});
  }
  if (a.domain.empty()) throw Error(ErrorKind::InvalidInput, "sobolev target needs --domain");
  const SpaceDescriptor x = io::parse_space(parse_arg(a.domain, "--domain"), s.grid());
  return sobolev_target(ctx, x, {{"side", "target"}, {"domain", io::to_json(x)}, {"m", a.m}, {"n", a.n}});
}

Report cmd_maximal(const Settings& s, const Args& a) {
  const Json q = parse_arg(a.young, "--young");
  const YoungFn y = io::parse_young(q, s.grid());
  if (a.side == "target") {
    const MaximalTarget t = maximal_optimal_target(y);
    return outcome_report(t.outcome, {{"side", "target"}, {"young", q}});
  }
  const MaximalDomain d = maximal_optimal_domain(y);
  return outcome_report(d.outcome, {{"side", "domain"}, {"young", q}});
}

Report cmd_laplace(const Settings& s, const Args& a) {
  const Json q = parse_arg(a.young, "--young");
  const LaplaceTarget t = laplace_optimal_target(io::parse_young(q, s.grid()));
  return outcome_report(t.outcome, {{"side", "target"}, {"young", q}});
}

Report cmd_diag(const Settings& s, const Args& a) {
  if (a.ac) {
    const Json qa = parse_arg(a.young, "--young");
    const Json qe = parse_arg(a.generator, "--generator");
    const Verdict v = ac_embedding_check(io::parse_young(qa, s.grid()), io::parse_quasi_convex(qe, s.grid(), "--generator"));
    return verdict_report(v, {{"young", qa}, {"generator", qe}}, "L^A ->* Lambda^E");
  }
  const SpaceDescriptor x = io::parse_space(parse_arg(a.space, "--space"), s.grid());
  const DiagonalityStatus st = subdiagonality_status(x);
  Report r;
  r.json = {{"query", {{"space", io::to_json(x)}}},
            {"result", {{"status", to_string(st.status)}, {"rule", st.rule}, {"sub_diagonal", st.sub_diagonal()},
                        {"uniform", st.uniform()}}}};
  r.text = x.name() + " is " + to_string(st.status) + " (" + st.rule + ")\n";
  r.code = st.status == Diagonality::Unknown ? kUndecided : kDecided;
  return r;
}

Report cmd_witness(const Settings& s, const Args& a) {
  const Json qe = parse_arg(a.generator, "--generator");
  const QuasiConvexFn e = io::parse_quasi_convex(qe, s.grid(), "--generator");
  const SampledFn f = load_function(s, a.f, 1.0);
  const Witness w = construct_witness_young(f, e);
  Report r;
  r.json = {{"query", {{"generator", qe}, {"f", io::to_json(f)}}},
            {"result",
             {{"young", io::to_json(w.a)},
              {"lambda_norm", w.lambda_norm},
              {"luxemburg", w.luxemburg},
              {"modular", w.modular_at_h},
              {"N1", w.n1}}}};
  std::ostringstream os;
  os << "witness A with ||f||_{L^A} = " << fmt(w.luxemburg) << " <= 2 ||f||_Lambda = " << fmt(2.0 * w.lambda_norm)
     << ", N_1 = " << fmt(w.n1) << "\n";
  os << "  modular at f/(2||f||): " << fmt(w.modular_at_h) << "\n";
  os << "  A = " << w.a.describe() << "\n";
  r.text = os.str();
  return r;
}

Report cmd_lift(const Settings& s, const Args& a) {
  const Json qf = parse_arg(a.young, "--outer");
  const YoungFn outer = io::parse_young(qf, s.grid(), "--outer");
  const SpaceDescriptor x = io::parse_space(parse_arg(a.space, "--space"), s.grid());
  const SampledFn f = load_function(s, a.f, x.domain_length());
  const double v = lifted_norm(outer, x, f);
  Report r;
  r.json = {{"query", {{"outer", qf}, {"space", io::to_json(x)}, {"f", io::to_json(f)}}},
            {"result", {{"norm", io::number_json(v)}}}};
  r.text = "norm in " + x.name() + "^F = " + fmt(v) + "\n";
  return r;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false;
  char quote = 0;
  for (char c : line) {
    if (quote) {
      if (c == quote) {
        quote = 0;
      } else {
        cur.push_back(c);
      }
    } else if (c == '\'' || c == '"') {
      quote = c;
      in_token = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_token) out.push_back(cur);
      cur.clear();
      in_token = false;
    } else {
      cur.push_back(c);
      in_token = true;
    }
  }
  if (quote) throw Error(ErrorKind::InvalidInput, "unterminated quote in batch line: " + line);
  if (in_token) out.push_back(cur);
  return out;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

int run_batch(const std::string& path, const Settings& s, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: --batch: cannot open '" << path << "'\n";
    return kInputError;
  }
  int worst = kDecided;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    std::vector<std::string> args{"orlicz"};
    try {
      for (auto& tok : split_line(line)) args.push_back(std::move(tok));
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      worst = kInputError;
      continue;
    }
    if (s.json) args.insert(args.begin() + 1, "--json");
    const int code = run(args, out, err);
    if (code == kInputError || worst == kInputError) {
      worst = kInputError;
    } else {
      worst = std::max(worst, code);
    }
  }
  return worst;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Young functions, rearrangement-invariant norms and optimal Orlicz spaces"};
  app.require_subcommand(0, 1);
  Settings s;
  Args a;
  std::string batch;
  app.add_flag("--json", s.json, "Emit JSON reports");
  app.add_option("--grid-decades", s.grid_decades, "Sample grid spans 10^-N .. 10^N")->check(CLI::Range(1.0, 12.0));
  app.add_option("--tol", s.tol, "Undecided band around thresholds for numeric index estimates")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--samples", s.samples, "CSV file with value,width rows describing f");
  app.add_option("--batch", batch, "File with one query per line");

  const std::vector<std::string> sides{"target", "domain"};
  auto* conj = app.add_subcommand("conj", "Complementary Young function");
  conj->add_option("--young", a.young, "Young function JSON")->required();
  conj->add_option("--at", a.at, "Evaluation points");

  auto* inverse = app.add_subcommand("inverse", "Inverse of A and of its complement, with the product sandwich");
  inverse->add_option("--young", a.young, "Young function JSON")->required();
  inverse->add_option("--at", a.at, "Evaluation points");

  auto* dom = app.add_subcommand("dominates", "Decide B < A");
  dom->add_option("--a", a.young, "Young function A")->required();
  dom->add_option("--b", a.young_b, "Young function B")->required();
  dom->add_option("--regime", a.regime, "global, zero or infinity")
      ->check(CLI::IsMember({"global", "zero", "infinity"}));

  auto* nrm = app.add_subcommand("norm", "Norm of a step function");
  nrm->add_option("--space", a.space, "Space JSON")->required();
  nrm->add_option("--f", a.f, "Step function JSON");

  auto* fund = app.add_subcommand("fundamental", "Fundamental function and companion spaces");
  fund->add_option("--space", a.space, "Space JSON")->required();
  fund->add_option("--at", a.at, "Evaluation points");

  auto* alt = app.add_subcommand("alternative", "Principal alternative for an r.i. space");
  alt->add_option("side", a.side, "target or domain")->required()->check(CLI::IsMember(sides));
  alt->add_option("--space", a.space, "Space JSON")->required();

  auto* sob = app.add_subcommand("sobolev", "Optimal Orlicz spaces for Sobolev embeddings");
  sob->add_option("side", a.side, "target or domain")->required()->check(CLI::IsMember(sides));
  sob->add_option("--target", a.target, "Target space JSON (domain side)");
  sob->add_option("--domain", a.domain, "Domain space JSON (target side)");
  sob->add_option("--m", a.m, "Order of derivatives");
  sob->add_option("--n", a.n, "Dimension");

  auto* mx = app.add_subcommand("maximal", "Optimal Orlicz spaces for the maximal operator");
  mx->add_option("side", a.side, "target or domain")->required()->check(CLI::IsMember(sides));
  mx->add_option("--young", a.young, "Young function JSON")->required();

  auto* lap = app.add_subcommand("laplace", "Optimal Orlicz target for the Laplace transform");
  lap->add_option("side", a.side, "target")->required()->check(CLI::IsMember({"target"}));
  lap->add_option("--young", a.young, "Young function JSON")->required();

  auto* diag = app.add_subcommand("diag", "Sub-diagonality, or almost-compact embedding with --ac");
  diag->add_option("--space", a.space, "Space JSON");
  diag->add_flag("--ac", a.ac, "Decide L^A ->* Lambda^E instead");
  diag->add_option("--young", a.young, "Young function A (with --ac)");
  diag->add_option("--generator", a.generator, "Generator E (with --ac)");

  auto* wit = app.add_subcommand("witness", "Young function witnessing f in Lambda^E");
  wit->add_option("--generator", a.generator, "Generator E")->required();
  wit->add_option("--f", a.f, "Step function JSON on (0,1)");

  auto* lift = app.add_subcommand("lift", "Norm of the Young lifting X^F");
  lift->add_option("--outer", a.young, "Young function F")->required();
  lift->add_option("--space", a.space, "Space JSON")->required();
  lift->add_option("--f", a.f, "Step function JSON");

  std::vector<const char*> cargv;
  for (const auto& s_ : argv) cargv.push_back(s_.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kDecided;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  }

  if (!batch.empty()) return run_batch(batch, s, out, err);
  if (app.get_subcommands().empty()) {
    err << "usage error: a subcommand is required\n" << app.help();
    return kInputError;
  }
  const std::string name = app.get_subcommands().front()->get_name();

  try {
    Report r;
    if (name == "conj") r = cmd_conj(s, a);
    else if (name == "inverse") r = cmd_inverse(s, a);
    else if (name == "dominates") r = cmd_dominates(s, a);
    else if (name == "norm") r = cmd_norm(s, a);
    else if (name == "fundamental") r = cmd_fundamental(s, a);
    else if (name == "alternative") r = cmd_alternative(s, a);
    else if (name == "sobolev") r = cmd_sobolev(s, a);
    else if (name == "maximal") r = cmd_maximal(s, a);
    else if (name == "laplace") r = cmd_laplace(s, a);
    else if (name == "diag") r = cmd_diag(s, a);
    else if (name == "witness") r = cmd_witness(s, a);
    else r = cmd_lift(s, a);
    if (s.json) {
      r.json["command"] = name;
      r.json["exit_code"] = r.code;
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::QuadratureNonConvergent ? kUndecided : kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}
