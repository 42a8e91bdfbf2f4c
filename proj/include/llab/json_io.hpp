#pragma once

#include <string>

#include "json.hpp"
#include "llab/bivar_poly.hpp"
#include "llab/limitseries.hpp"
#include "llab/mat.hpp"
#include "llab/rat.hpp"

namespace llab {

// nlohmann::json keeps object keys sorted, so dumps are byte-stable.
using Json = nlohmann::json;

inline constexpr const char* kFormatTag = "llab/1";

// Parse with input errors instead of library exceptions.
Json parse_text(const std::string& text);
Json load_file(const std::string& path);

// Canonical dump: two-space indent, trailing newline.
std::string dump_report(const Json& j);

Json json_of(const Rat& v);   // "p/q", "/q" omitted when q = 1
Json json_of(const Int& v);   // decimal string
Json json_of(const Mat& m);   // {rows, cols, entries: flat row-major strings}
Json json_of(const Subspace& s); // {ambient_dim, basis}
Json json_of(const BivarPoly& p); // sorted [i, j, "coeff"] triples
Json json_of(const ExplicitLimitSeries& ls); // {format, kind: "series", ...}

Rat rat_of_json(const Json& j);
Mat mat_of_json(const Json& j);
Subspace subspace_of_json(const Json& j); // re-canonicalizes the basis
BivarPoly poly_of_json(const Json& j);
ExplicitLimitSeries series_of_json(const Json& j);

} // namespace llab
