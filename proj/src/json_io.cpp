#include "llab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "llab/error.hpp"

namespace llab {

namespace {

const Json& field(const Json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw input_error(std::string("missing field '") + key + "'");
    return *it;
}

long long_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw input_error(std::string("field '") + key + "' must be an integer");
    return v.get<long>();
}

} // namespace

Json parse_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    return j;
}

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

Json json_of(const Rat& v) { return v.to_string(); }

Json json_of(const Int& v) { return v.str(); }

Json json_of(const Mat& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j).to_string());
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json json_of(const Subspace& s) {
    return Json{{"ambient_dim", s.ambient_dim()}, {"basis", json_of(s.basis())}};
}

Json json_of(const BivarPoly& p) {
    Json terms = Json::array();
    for (const auto& [key, coeff] : p.terms())
        terms.push_back(Json::array({key.first, key.second, coeff.to_string()}));
    return terms;
}

Json json_of(const ExplicitLimitSeries& ls) {
    Json j;
    j["format"] = kFormatTag;
    j["kind"] = "series";
    j["d"] = ls.d;
    j["r"] = ls.r;
    j["ambient"] = ls.ambient;
    auto mats = [](const std::vector<Mat>& v) {
        Json arr = Json::array();
        for (const auto& m : v) arr.push_back(json_of(m));
        return arr;
    };
    auto subs = [](const std::vector<Subspace>& v) {
        Json arr = Json::array();
        for (const auto& s : v) arr.push_back(json_of(s));
        return arr;
    };
    j["up"] = mats(ls.up);
    j["down"] = mats(ls.down);
    j["Y0"] = subs(ls.Y0);
    j["Z0"] = subs(ls.Z0);
    j["V"] = subs(ls.V);
    return j;
}

Rat rat_of_json(const Json& j) {
    if (!j.is_string()) throw input_error("rational values must be strings like \"p/q\"");
    return Rat::parse(j.get<std::string>());
}

Mat mat_of_json(const Json& j) {
    if (!j.is_object()) throw input_error("matrix must be an object");
    const long rows = long_field(j, "rows");
    const long cols = long_field(j, "cols");
    if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be nonnegative");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || static_cast<long>(entries.size()) != rows * cols)
        throw input_error("matrix entries must hold rows*cols values");
    Mat m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t jj = 0; jj < m.cols(); ++jj) m.at(i, jj) = rat_of_json(entries[idx++]);
    return m;
}

Subspace subspace_of_json(const Json& j) {
    if (!j.is_object()) throw input_error("subspace must be an object");
    const long ambient = long_field(j, "ambient_dim");
    if (ambient < 0) throw input_error("ambient dimension must be nonnegative");
    const Mat basis = mat_of_json(field(j, "basis"));
    if (basis.rows() != 0 && basis.cols() != static_cast<std::size_t>(ambient))
        throw input_error("subspace basis does not match its ambient dimension");
    return Subspace::span(static_cast<std::size_t>(ambient), basis);
}

BivarPoly poly_of_json(const Json& j) {
    if (!j.is_array()) throw input_error("polynomial must be an array of [i, j, coeff]");
    BivarPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3)
            throw input_error("polynomial terms must be [i, j, coeff] triples");
        if (!term[0].is_number_integer() || !term[1].is_number_integer())
            throw input_error("polynomial exponents must be integers");
        p.add_term(term[0].get<long>(), term[1].get<long>(), rat_of_json(term[2]));
    }
    return p;
}

ExplicitLimitSeries series_of_json(const Json& j) {
    if (!j.is_object()) throw input_error("series must be a JSON object");
    if (field(j, "format").get<std::string>() != kFormatTag)
        throw input_error("unsupported format tag");
    if (field(j, "kind").get<std::string>() != "series")
        throw input_error("expected a series document");
    ExplicitLimitSeries ls;
    ls.d = long_field(j, "d");
    ls.r = long_field(j, "r");
    const Json& amb = field(j, "ambient");
    if (!amb.is_array()) throw input_error("ambient must be an array");
    for (const auto& v : amb) {
        if (!v.is_number_integer()) throw input_error("ambient dimensions must be integers");
        ls.ambient.push_back(v.get<long>());
    }
    auto mats = [&](const char* key) {
        const Json& arr = field(j, key);
        if (!arr.is_array()) throw input_error(std::string(key) + " must be an array");
        std::vector<Mat> out;
        for (const auto& m : arr) out.push_back(mat_of_json(m));
        return out;
    };
    auto subs = [&](const char* key) {
        const Json& arr = field(j, key);
        if (!arr.is_array()) throw input_error(std::string(key) + " must be an array");
        std::vector<Subspace> out;
        for (const auto& s : arr) out.push_back(subspace_of_json(s));
        return out;
    };
    ls.up = mats("up");
    ls.down = mats("down");
    ls.Y0 = subs("Y0");
    ls.Z0 = subs("Z0");
    ls.V = subs("V");
    return ls;
}

} // namespace llab
