#include "orlicz/json_io.hpp"

#include <cmath>
#include <istream>
#include <sstream>

namespace orlicz::io {

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, (pointer.empty() ? std::string("/") : pointer) + ": " + msg);
}

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped.push_back(c);
    }
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

// Parameters live either under "params" or next to the discriminating key.
const Json& params_of(const Json& j, std::string& pointer) {
  if (j.contains("params")) {
    pointer = child(pointer, "params");
    const Json& p = j.at("params");
    if (!p.is_object()) schema_error(pointer, "expected an object");
    return p;
  }
  return j;
}

double number_or(const Json& obj, const std::string& key, double fallback, const std::string& pointer) {
  if (!obj.contains(key)) return fallback;
  return parse_number(obj.at(key), child(pointer, key));
}

double required_number(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.contains(key)) schema_error(pointer, "missing \"" + key + "\"");
  return parse_number(obj.at(key), child(pointer, key));
}

std::string required_string(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.contains(key)) schema_error(pointer, "missing \"" + key + "\"");
  const Json& v = obj.at(key);
  if (!v.is_string()) schema_error(child(pointer, key), "expected a string");
  return v.get<std::string>();
}

AsymptoticDescriptor parse_descriptor(const Json& j, const std::string& pointer) {
  if (!j.is_object()) schema_error(pointer, "expected a descriptor object");
  const std::string cls = required_string(j, "class", pointer);
  if (cls == "power-log") {
    return AsymptoticDescriptor::power_log(required_number(j, "p", pointer), number_or(j, "alpha", 0.0, pointer));
  }
  if (cls == "exponential") return AsymptoticDescriptor::exponential(required_number(j, "gamma", pointer));
  if (cls == "zero-on-interval") {
    return AsymptoticDescriptor::zero_on_interval(required_number(j, "threshold", pointer));
  }
  if (cls == "infinite-beyond") {
    return AsymptoticDescriptor::infinite_beyond(required_number(j, "threshold", pointer));
  }
  if (cls == "numeric") return AsymptoticDescriptor::numeric();
  schema_error(child(pointer, "class"), "unknown descriptor class \"" + cls + "\"");
}

// Re-throws library errors raised while building a value with the pointer prepended.
template <class F>
auto at_pointer(const std::string& pointer, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    std::string msg = e.what();
    const std::string prefix = to_string(e.kind()) + ": ";
    if (msg.starts_with(prefix)) msg.erase(0, prefix.size());
    if (msg.starts_with("/")) throw;
    throw Error(e.kind(), (pointer.empty() ? std::string("/") : pointer) + ": " + msg);
  }
}

Interval parse_interval(const Json& j, const std::string& pointer) {
  if (!j.contains("interval")) return Interval::Unit;
  const std::string s = required_string(j, "interval", pointer);
  if (s == "unit") return Interval::Unit;
  if (s == "halfline") return Interval::HalfLine;
  schema_error(child(pointer, "interval"), "expected \"unit\" or \"halfline\", got \"" + s + "\"");
}

// Generator of an Orlicz, Lambda or Marcinkiewicz space: under `key` or inline.
const Json& generator_json(const Json& params, const std::string& key, std::string& pointer) {
  if (params.contains(key)) {
    pointer = child(pointer, key);
    return params.at(key);
  }
  if (params.contains("class")) return params;
  schema_error(pointer, "missing \"" + key + "\"");
}

std::string interval_name(Interval i) { return i == Interval::Unit ? "unit" : "halfline"; }

Json table_json(const MonotoneFn& values, const AsymptoticDescriptor& zero, const AsymptoticDescriptor& inf) {
  Grid coarse;
  coarse.per_decade = 8;
  Json grid = Json::array();
  for (double t : values.evaluation_points(coarse)) grid.push_back(Json::array({t, number_json(values(t))}));
  return Json{{"class", "table"}, {"grid", grid}, {"zero", to_json(zero)}, {"infinity", to_json(inf)}};
}

}  // namespace

Json parse_document(std::string_view text, std::string_view what) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "linfty") return Json("linfty");
  try {
    return Json::parse(trimmed);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput,
                std::string(what) + ": malformed JSON at byte " + std::to_string(e.byte) + " in '" + std::string(text) + "'");
  }
}

double parse_number(const Json& j, const std::string& pointer) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "+inf") return kInf;
    schema_error(pointer, "expected a number or \"inf\", got \"" + s + "\"");
  }
  schema_error(pointer, "expected a number or \"inf\"");
}

GeneratorSpec parse_generator(const Json& j, const std::string& pointer) {
  if (j.is_string()) {
    if (j.get<std::string>() == "linfty") return GeneratorSpec::linfty();
    schema_error(pointer, "unknown generator shorthand \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object()) schema_error(pointer, "expected a generator object");
  const std::string cls = required_string(j, "class", pointer);
  std::string pp = pointer;
  const Json& params = params_of(j, pp);
  if (cls == "power-log") {
    const double p = required_number(params, "p", pp);
    const double alpha = number_or(params, "alpha", 0.0, pp);
    GeneratorSpec s = GeneratorSpec::power_log(p, alpha, number_or(params, "p0", p, pp),
                                               number_or(params, "alpha0", params.contains("p0") ? 0.0 : alpha, pp));
    s.coefficient = number_or(params, "coefficient", 1.0, pp);
    return s;
  }
  if (cls == "exponential") return GeneratorSpec::exponential(number_or(params, "gamma", 1.0, pp));
  if (cls == "linfty") return GeneratorSpec::linfty(number_or(params, "threshold", 1.0, pp));
  if (cls == "table") {
    const std::string gp = child(pp, "grid");
    if (!params.contains("grid") || !params.at("grid").is_array()) schema_error(gp, "expected an array of [t, value] pairs");
    std::vector<std::pair<double, double>> pts;
    const Json& grid = params.at("grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Json& row = grid[i];
      const std::string rp = child(gp, i);
      if (!row.is_array() || row.size() != 2) schema_error(rp, "expected a [t, value] pair");
      pts.emplace_back(parse_number(row[0], child(rp, 0)), parse_number(row[1], child(rp, 1)));
    }
    AsymptoticDescriptor zero;
    AsymptoticDescriptor inf;
    if (params.contains("zero")) zero = parse_descriptor(params.at("zero"), child(pp, "zero"));
    if (params.contains("infinity")) inf = parse_descriptor(params.at("infinity"), child(pp, "infinity"));
    return GeneratorSpec::tabulated(std::move(pts), zero, inf);
  }
  schema_error(child(pointer, "class"), "unknown generator class \"" + cls + "\"");
}

YoungFn parse_young(const Json& j, const Grid& grid, const std::string& pointer) {
  const GeneratorSpec spec = parse_generator(j, pointer);
  return at_pointer(pointer, [&] { return make_young(spec, grid); });
}

QuasiConvexFn parse_quasi_convex(const Json& j, const Grid& grid, const std::string& pointer) {
  const GeneratorSpec spec = parse_generator(j, pointer);
  return at_pointer(pointer, [&] { return make_quasi_convex(spec, grid); });
}

SpaceDescriptor parse_space(const Json& j, const Grid& grid, const std::string& pointer) {
  if (j.is_string()) {
    if (j.get<std::string>() == "linfty") return SpaceDescriptor::lebesgue(kInf);
    schema_error(pointer, "unknown space shorthand \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object()) schema_error(pointer, "expected a space object");
  const std::string family = required_string(j, "family", pointer);
  const Interval interval = parse_interval(j, pointer);
  std::string pp = pointer;
  const Json& params = params_of(j, pp);
  auto build = [&](auto&& f) { return at_pointer(pp, f); };

  if (family == "lebesgue") {
    const double p = required_number(params, "p", pp);
    return at_pointer(child(pp, "p"), [&] { return SpaceDescriptor::lebesgue(p, interval); });
  }
  if (family == "lorentz") {
    const double p = required_number(params, "p", pp);
    const double q = required_number(params, "q", pp);
    return build([&] { return SpaceDescriptor::lorentz(p, q, interval); });
  }
  if (family == "lorentz-zygmund") {
    const double p = required_number(params, "p", pp);
    const double q = required_number(params, "q", pp);
    const double alpha = number_or(params, "alpha", 0.0, pp);
    return build([&] { return SpaceDescriptor::lorentz_zygmund(p, q, alpha, interval); });
  }
  if (family == "orlicz" || family == "lambda" || family == "marcinkiewicz") {
    std::string gp = pp;
    const Json& gen = generator_json(params, family == "orlicz" ? "young" : "generator", gp);
    const GeneratorSpec spec = parse_generator(gen, gp);
    if (family == "orlicz") {
      YoungFn a = at_pointer(gp, [&] { return make_young(spec, grid); });
      return SpaceDescriptor::orlicz(std::move(a), interval, spec);
    }
    QuasiConvexFn e = at_pointer(gp, [&] { return make_quasi_convex(spec, grid); });
    if (family == "lambda") return SpaceDescriptor::lambda(std::move(e), interval, spec);
    return SpaceDescriptor::marcinkiewicz(std::move(e), interval, spec);
  }
  if (family == "classical-lorentz") {
    const double q = required_number(params, "q", pp);
    if (!params.contains("weight")) schema_error(pp, "missing \"weight\"");
    SampledFn w = parse_sampled(params.at("weight"), child(pp, "weight"));
    return build([&] { return SpaceDescriptor::classical_lorentz(std::move(w), q, interval); });
  }
  schema_error(child(pointer, "family"), "unknown family \"" + family + "\"");
}

SampledFn parse_sampled(const Json& j, const std::string& pointer) {
  const Json* pieces_json = &j;
  std::string pp = pointer;
  double length = kInf;
  std::optional<PowerTail> tail;
  if (j.is_object()) {
    if (!j.contains("pieces")) schema_error(pointer, "missing \"pieces\"");
    pieces_json = &j.at("pieces");
    pp = child(pointer, "pieces");
    length = number_or(j, "length", kInf, pointer);
    if (j.contains("tail")) {
      const Json& t = j.at("tail");
      const std::string tp = child(pointer, "tail");
      if (!t.is_object()) schema_error(tp, "expected an object");
      tail = PowerTail{required_number(t, "coefficient", tp), required_number(t, "exponent", tp),
                       required_number(t, "length", tp)};
    }
  }
  if (!pieces_json->is_array()) schema_error(pp, "expected an array of [value, width] pairs");
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < pieces_json->size(); ++i) {
    const Json& row = (*pieces_json)[i];
    const std::string rp = child(pp, i);
    if (!row.is_array() || row.size() != 2) schema_error(rp, "expected a [value, width] pair");
    pieces.push_back({parse_number(row[0], child(rp, 0)), parse_number(row[1], child(rp, 1))});
  }
  return at_pointer(pointer, [&] { return SampledFn(std::move(pieces), length, tail); });
}

SampledFn read_samples_csv(std::istream& in, double domain_length) {
  std::vector<Piece> pieces;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::InvalidInput, "CSV line " + std::to_string(lineno) + ": expected value,width");
    }
    const std::string a = line.substr(0, comma);
    const std::string b = line.substr(comma + 1);
    auto to_number = [&](const std::string& s, bool& ok) {
      std::string t;
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
      }
      if (t == "inf") return kInf;
      std::istringstream is(t);
      double v = 0.0;
      is >> v;
      ok = !is.fail() && is.eof();
      return v;
    };
    bool ok_a = true;
    bool ok_b = true;
    const double value = to_number(a, ok_a);
    const double width = to_number(b, ok_b);
    if (!ok_a || !ok_b) {
      if (pieces.empty() && lineno == 1) continue;  // header
      throw Error(ErrorKind::InvalidInput, "CSV line " + std::to_string(lineno) + ": '" + line + "' is not numeric");
    }
    pieces.push_back({value, width});
  }
  return SampledFn(std::move(pieces), domain_length);
}

Json number_json(double x) {
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  if (std::isnan(x)) return nullptr;
  return x;
}

Json to_json(const AsymptoticDescriptor& d) {
  switch (d.cls) {
    case GrowthClass::PowerLog: return {{"class", "power-log"}, {"p", number_json(d.p)}, {"alpha", d.alpha}};
    case GrowthClass::Exponential: return {{"class", "exponential"}, {"gamma", d.gamma}};
    case GrowthClass::ZeroOnInterval: return {{"class", "zero-on-interval"}, {"threshold", number_json(d.threshold)}};
    case GrowthClass::InfiniteBeyond: return {{"class", "infinite-beyond"}, {"threshold", number_json(d.threshold)}};
    case GrowthClass::NumericOnly: break;
  }
  return {{"class", "numeric"}};
}

Json to_json(const GeneratorSpec& s) {
  switch (s.kind) {
    case GeneratorSpec::Kind::PowerLog: {
      Json j{{"class", "power-log"}, {"p", s.p}, {"alpha", s.alpha}, {"p0", s.p0}, {"alpha0", s.alpha0}};
      if (s.coefficient != 1.0) j["coefficient"] = s.coefficient;
      return j;
    }
    case GeneratorSpec::Kind::Exponential: return {{"class", "exponential"}, {"gamma", s.gamma}};
    case GeneratorSpec::Kind::Linfty: return {{"class", "linfty"}, {"threshold", s.threshold}};
    case GeneratorSpec::Kind::Table: {
      Json grid = Json::array();
      for (const auto& [t, v] : s.table) grid.push_back(Json::array({t, number_json(v)}));
      return {{"class", "table"}, {"grid", grid}, {"zero", to_json(s.table_zero)}, {"infinity", to_json(s.table_infinity)}};
    }
  }
  return nullptr;
}

Json to_json(const YoungFn& a) {
  const Grid grid;
  return table_json(a.values(grid), a.zero_descriptor(), a.infinity_descriptor());
}

Json to_json(const QuasiConvexFn& e) { return table_json(e.base(), e.zero_descriptor(), e.infinity_descriptor()); }

Json to_json(const SpaceDescriptor& x) {
  Json params = Json::object();
  std::string family = to_string(x.family);
  switch (x.family) {
    case Family::Lebesgue: params["p"] = number_json(x.p); break;
    case Family::Lorentz:
      params["p"] = number_json(x.p);
      params["q"] = number_json(x.q);
      break;
    case Family::LorentzZygmund:
      params["p"] = number_json(x.p);
      params["q"] = number_json(x.q);
      params["alpha"] = x.alpha;
      break;
    case Family::Orlicz: params["young"] = x.spec ? to_json(*x.spec) : to_json(*x.young); break;
    case Family::Lambda:
    case Family::Marcinkiewicz: params["generator"] = x.spec ? to_json(*x.spec) : to_json(*x.generator); break;
    case Family::ClassicalLorentz:
      params["q"] = number_json(x.q);
      params["weight"] = to_json(*x.weight);
      break;
  }
  return {{"family", family}, {"params", params}, {"interval", interval_name(x.interval)}, {"name", x.name()}};
}

Json to_json(const SampledFn& f) {
  Json pieces = Json::array();
  for (const Piece& p : f.pieces()) pieces.push_back(Json::array({number_json(p.value), number_json(p.width)}));
  Json j{{"pieces", pieces}, {"length", number_json(f.domain_length())}};
  if (f.tail()) {
    j["tail"] = {{"coefficient", f.tail()->coefficient}, {"exponent", f.tail()->exponent}, {"length", f.tail()->length}};
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j{{"status", to_string(v.status)}, {"note", v.note}};
  if (v.constant) j["constant"] = number_json(*v.constant);
  if (v.point) j["point"] = number_json(*v.point);
  return j;
}

Json to_json(const AlternativeOutcome& o) {
  Json j{{"side", to_string(o.side)},
         {"outcome", to_string(o.kind)},
         {"summary", o.summary()},
         {"relation", o.relation},
         {"evidence", to_json(o.evidence)}};
  if (o.space) j["space"] = to_json(*o.space);
  if (!o.reason.empty()) j["reason"] = o.reason;
  Json details = Json::object();
  for (const auto& [k, v] : o.details) details[k] = v;
  if (!details.empty()) j["details"] = details;
  return j;
}

}  // namespace orlicz::io
