#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "orlicz/alternative.hpp"

namespace orlicz::io {

using Json = nlohmann::json;

// Parses a JSON document; syntax errors become InvalidInput naming `what`.
// The bare word linfty is accepted as the string "linfty".
Json parse_document(std::string_view text, std::string_view what);

// Numbers, or the strings "inf"/"infinity". `pointer` is the JSON pointer of `j`,
// used in error messages.
double parse_number(const Json& j, const std::string& pointer);

// Young and quasi-convex generators: {"class": ..., parameters} (parameters may also sit
// under "params"), or the string "linfty".
GeneratorSpec parse_generator(const Json& j, const std::string& pointer = "");
YoungFn parse_young(const Json& j, const Grid& grid = {}, const std::string& pointer = "");
QuasiConvexFn parse_quasi_convex(const Json& j, const Grid& grid = {}, const std::string& pointer = "");

// {"family": ..., "params": {...}, "interval": "unit" | "halfline"}, or "linfty".
SpaceDescriptor parse_space(const Json& j, const Grid& grid = {}, const std::string& pointer = "");

// {"pieces": [[value, width], ...], "length": number | "inf",
//  "tail": {"coefficient": c, "exponent": e, "length": l}}.
SampledFn parse_sampled(const Json& j, const std::string& pointer = "");
// Rows "value,width"; an optional header line and blank lines are skipped.
SampledFn read_samples_csv(std::istream& in, double domain_length = kInf);

Json number_json(double x);
Json to_json(const AsymptoticDescriptor& d);
Json to_json(const GeneratorSpec& s);
// Symbolic generator when known, otherwise a table of values on a coarse grid.
Json to_json(const YoungFn& a);
Json to_json(const QuasiConvexFn& e);
Json to_json(const SpaceDescriptor& x);
Json to_json(const SampledFn& f);
Json to_json(const Verdict& v);
Json to_json(const AlternativeOutcome& o);

}  // namespace orlicz::io
