#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "f1/cc_triple.hpp"
#include "f1/fzoo.hpp"

namespace f1::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

/// A malformed input. `line`/`column` locate syntax errors; `path` is the JSON pointer of the
/// offending entry for semantic errors.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column, std::string path)
        : ValidationError(what), line(line), column(column), path(std::move(path)) {}
    std::size_t line, column;
    std::string path;
};

inline json parse_text(const std::string& text, const std::string& source = "<input>") {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string msg = e.what();
        auto colon = msg.rfind(": ");
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": syntax error: " +
                             (colon == std::string::npos ? msg : msg.substr(colon + 2)),
                         line, column, "");
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& why) {
    throw ParseError((path.empty() ? std::string("/") : path) + ": " + why, 0, 0, path);
}

inline const json& field(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

inline Int to_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+');
        if (s.size() > start && std::all_of(s.begin() + start, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return Int(s);
    }
    fail(path, "expected an integer");
}

inline std::size_t to_index(const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) fail(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

inline json from_int(const Int& v) {
    if (v >= Int(INT64_MIN) && v <= Int(INT64_MAX)) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline const json& array_at(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

inline IntVector vector_of(const json& j, const std::string& path, std::optional<std::size_t> length = std::nullopt) {
    array_at(j, path);
    if (length && j.size() != *length)
        fail(path, "expected " + std::to_string(*length) + " entries, found " + std::to_string(j.size()));
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_int(j[i], path + "/" + std::to_string(i)));
    return v;
}

inline std::vector<std::size_t> indices_of(const json& j, const std::string& path) {
    array_at(j, path);
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_index(j[i], path + "/" + std::to_string(i)));
    return v;
}

inline json from_vector(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(from_int(x));
    return a;
}

template <class F>
auto semantic(const std::string& path, F&& build) {
    try {
        return build();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

}  // namespace detail

inline std::string kind_of(const json& j) {
    const json& k = detail::field(j, "", "kind");
    if (!k.is_string()) detail::fail("/kind", "expected a string");
    if (j.contains("schema") && j["schema"] != schema_version)
        detail::fail("/schema", "unsupported schema " + j["schema"].dump() + " (expected 1)");
    return k.get<std::string>();
}

inline void expect_kind(const json& j, const std::string& kind) {
    if (kind_of(j) != kind) detail::fail("/kind", "expected '" + kind + "', found '" + j["kind"].get<std::string>() + "'");
}

inline json header(const std::string& kind) { return json{{"kind", kind}, {"schema", schema_version}}; }

// --- fans -------------------------------------------------------------------

inline Fan fan_from_json(const json& j) {
    expect_kind(j, "fan");
    if (j.contains("standard")) {
        const json& s = j["standard"];
        if (!s.is_string()) detail::fail("/standard", "expected a string");
        long param = j.contains("param") ? static_cast<long>(detail::to_int(j["param"], "/param")) : 0;
        return detail::semantic("/standard", [&] { return standard_fan(s.get<std::string>(), param); });
    }
    std::size_t rank = detail::to_index(detail::field(j, "", "rank"), "/rank");
    std::vector<IntVector> rays;
    const json& jr = detail::array_at(detail::field(j, "", "rays"), "/rays");
    for (std::size_t i = 0; i < jr.size(); ++i) rays.push_back(detail::vector_of(jr[i], "/rays/" + std::to_string(i), rank));
    std::vector<std::vector<std::size_t>> cones;
    const json& jc = detail::array_at(detail::field(j, "", "cones"), "/cones");
    for (std::size_t i = 0; i < jc.size(); ++i) {
        std::string path = "/cones/" + std::to_string(i);
        cones.push_back(detail::indices_of(jc[i], path));
        for (std::size_t k = 0; k < cones.back().size(); ++k)
            if (cones.back()[k] >= rays.size()) detail::fail(path + "/" + std::to_string(k), "no such ray");
    }
    return detail::semantic("/cones", [&] { return Fan(rank, rays, cones); });
}

inline json to_json(const Fan& F) {
    json j = header("fan");
    j["rank"] = F.rank();
    j["rays"] = json::array();
    for (const auto& r : F.rays()) j["rays"].push_back(detail::from_vector(r));
    j["cones"] = json::array();
    for (auto c : F.maximal_cones()) j["cones"].push_back(F.cones()[c]);
    return j;
}

// --- monoids ----------------------------------------------------------------

inline AffineMonoid monoid_from_json(const json& j, const std::string& at = "") {
    if (at.empty()) expect_kind(j, "monoid");
    std::size_t rank = detail::to_index(detail::field(j, at, "rank"), at + "/rank");
    AmbientGroup G{rank, {}};
    if (j.contains("torsion")) G.torsion = detail::vector_of(j["torsion"], at + "/torsion");
    std::vector<IntVector> gens;
    const json& jg = detail::array_at(detail::field(j, at, "generators"), at + "/generators");
    for (std::size_t i = 0; i < jg.size(); ++i)
        gens.push_back(detail::vector_of(jg[i], at + "/generators/" + std::to_string(i), G.width()));
    bool pointed = false;
    if (j.contains("pointed")) {
        if (!j["pointed"].is_boolean()) detail::fail(at + "/pointed", "expected true or false");
        pointed = j["pointed"].get<bool>();
    }
    return detail::semantic(at, [&] { return AffineMonoid(G, gens, pointed); });
}

inline json to_json(const AffineMonoid& A) {
    json j = header("monoid");
    j["rank"] = A.ambient().rank;
    j["torsion"] = detail::from_vector(A.ambient().torsion);
    j["generators"] = json::array();
    for (const auto& g : A.generators()) j["generators"].push_back(detail::from_vector(g));
    j["pointed"] = A.pointed();
    return j;
}

inline TableMonoid table_monoid_from_json(const json& j) {
    expect_kind(j, "table_monoid");
    const json& jn = detail::array_at(detail::field(j, "", "names"), "/names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < jn.size(); ++i) {
        if (!jn[i].is_string()) detail::fail("/names/" + std::to_string(i), "expected a string");
        names.push_back(jn[i].get<std::string>());
    }
    const json& jt = detail::array_at(detail::field(j, "", "table"), "/table");
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t i = 0; i < jt.size(); ++i) table.push_back(detail::indices_of(jt[i], "/table/" + std::to_string(i)));
    std::optional<std::size_t> zero;
    if (j.contains("zero") && !j["zero"].is_null()) zero = detail::to_index(j["zero"], "/zero");
    return detail::semantic("", [&] { return TableMonoid(names, table, zero); });
}

inline json to_json(const TableMonoid& M) {
    json j = header("table_monoid");
    j["names"] = M.names();
    j["table"] = M.table();
    j["zero"] = M.zero() ? json(*M.zero()) : json(nullptr);
    return j;
}

// --- schemes ----------------------------------------------------------------

inline MScheme scheme_from_json(const json& j) {
    expect_kind(j, "scheme");
    std::vector<AffineMonoid> charts;
    const json& jc = detail::array_at(detail::field(j, "", "charts"), "/charts");
    for (std::size_t i = 0; i < jc.size(); ++i) charts.push_back(monoid_from_json(jc[i], "/charts/" + std::to_string(i)));
    std::vector<GluingRecord> gluings;
    if (j.contains("gluings")) {
        const json& jg = detail::array_at(j["gluings"], "/gluings");
        for (std::size_t i = 0; i < jg.size(); ++i) {
            std::string at = "/gluings/" + std::to_string(i);
            GluingRecord g;
            g.chart_a = detail::to_index(detail::field(jg[i], at, "chart_a"), at + "/chart_a");
            g.chart_b = detail::to_index(detail::field(jg[i], at, "chart_b"), at + "/chart_b");
            for (auto c : {g.chart_a, g.chart_b})
                if (c >= charts.size()) detail::fail(at, "no chart " + std::to_string(c));
            g.face_a = detail::indices_of(detail::field(jg[i], at, "face_a"), at + "/face_a");
            g.face_b = detail::indices_of(detail::field(jg[i], at, "face_b"), at + "/face_b");
            const json& ji = detail::array_at(detail::field(jg[i], at, "iso"), at + "/iso");
            std::size_t wa = charts[g.chart_a].ambient().width(), wb = charts[g.chart_b].ambient().width();
            if (ji.size() != wb) detail::fail(at + "/iso", "expected " + std::to_string(wb) + " rows");
            std::vector<IntVector> rows;
            for (std::size_t r = 0; r < ji.size(); ++r) rows.push_back(detail::vector_of(ji[r], at + "/iso/" + std::to_string(r), wa));
            g.iso = IntMatrix::from_rows(rows, wa);
            gluings.push_back(std::move(g));
        }
    }
    return detail::semantic("", [&] { return MScheme(charts, gluings); });
}

inline json to_json(const MScheme& X) {
    json j = header("scheme");
    j["charts"] = json::array();
    for (const auto& c : X.charts()) {
        json m = to_json(c);
        m.erase("kind");
        m.erase("schema");
        j["charts"].push_back(m);
    }
    j["gluings"] = json::array();
    for (const auto& g : X.gluings()) {
        json iso = json::array();
        for (std::size_t r = 0; r < g.iso.rows(); ++r) {
            IntVector row;
            for (std::size_t c = 0; c < g.iso.cols(); ++c) row.push_back(g.iso(r, c));
            iso.push_back(detail::from_vector(row));
        }
        j["gluings"].push_back(
            {{"chart_a", g.chart_a}, {"face_a", g.face_a}, {"chart_b", g.chart_b}, {"face_b", g.face_b}, {"iso", iso}});
    }
    return j;
}

/// Any input that names an M-scheme: a scheme, a monoid (its spectrum) or a fan (through kato).
inline MScheme any_scheme_from_json(const json& j) {
    std::string k = kind_of(j);
    if (k == "scheme") return scheme_from_json(j);
    if (k == "monoid") return MScheme::affine(monoid_from_json(j));
    if (k == "fan") return kato(fan_from_json(j)).scheme;
    detail::fail("/kind", "expected a scheme, monoid or fan, found '" + k + "'");
}

// --- counting, zeta, torifications ------------------------------------------

inline json to_json(const CountingPolynomial& N) {
    json a = json::array();
    for (const auto& c : N.coeffs()) a.push_back(detail::from_int(c));
    return a;
}

inline CountingPolynomial polynomial_from_json(const json& j, const std::string& path) {
    if (j.is_string())
        return detail::semantic(path, [&] { return CountingPolynomial::parse(j.get<std::string>()); });
    return CountingPolynomial(detail::vector_of(j, path));
}

inline std::vector<CountSample> counts_from_json(const json& j) {
    expect_kind(j, "counts");
    const json& js = detail::array_at(detail::field(j, "", "samples"), "/samples");
    std::vector<CountSample> out;
    for (std::size_t i = 0; i < js.size(); ++i) {
        std::string at = "/samples/" + std::to_string(i);
        out.push_back({detail::to_int(detail::field(js[i], at, "q"), at + "/q"),
                       detail::to_int(detail::field(js[i], at, "count"), at + "/count")});
    }
    return out;
}

inline json to_json(const std::vector<CountSample>& samples) {
    json j = header("counts");
    j["samples"] = json::array();
    for (const auto& s : samples) j["samples"].push_back({{"q", detail::from_int(s.q)}, {"count", detail::from_int(s.count)}});
    return j;
}

inline json to_json(const CountRecord& r) {
    return {{"q", detail::from_int(r.q)}, {"count", detail::from_int(r.count)}, {"method", r.method}};
}

inline json to_json(const ZetaFunction& Z) {
    json roots = json::array();
    for (const auto& r : Z.roots()) roots.push_back({{"root", r.k}, {"multiplicity", detail::from_int(r.multiplicity)}});
    return {{"zeta", Z.canonical()}, {"pretty", Z.pretty()}, {"roots", roots}};
}

inline Torification torification_from_json(const json& j) {
    expect_kind(j, "torification");
    Torification T;
    T.ranks = detail::indices_of(detail::field(j, "", "ranks"), "/ranks");
    if (j.contains("labels")) {
        const json& jl = detail::array_at(j["labels"], "/labels");
        if (jl.size() != T.ranks.size()) detail::fail("/labels", "expected one label per torus");
        for (std::size_t i = 0; i < jl.size(); ++i) {
            if (!jl[i].is_string()) detail::fail("/labels/" + std::to_string(i), "expected a string");
            T.labels.push_back(jl[i].get<std::string>());
        }
    }
    if (j.contains("charts") && !j["charts"].is_null()) {
        const json& jc = detail::array_at(j["charts"], "/charts");
        std::vector<std::vector<std::size_t>> charts;
        for (std::size_t i = 0; i < jc.size(); ++i) {
            std::string at = "/charts/" + std::to_string(i);
            charts.push_back(detail::indices_of(detail::field(jc[i], at, "tori"), at + "/tori"));
            for (std::size_t k = 0; k < charts.back().size(); ++k)
                if (charts.back()[k] >= T.ranks.size()) detail::fail(at + "/tori/" + std::to_string(k), "no such torus");
            T.chart_counts.push_back(polynomial_from_json(detail::field(jc[i], at, "counting"), at + "/counting"));
        }
        T.chart_tori = std::move(charts);
    }
    return T;
}

/// The counting polynomial a torification file declares, if any.
inline std::optional<CountingPolynomial> declared_counting(const json& j) {
    if (!j.contains("counting")) return std::nullopt;
    return polynomial_from_json(j["counting"], "/counting");
}

inline json to_json(const Torification& T, const std::optional<CountingPolynomial>& N = std::nullopt) {
    json j = header("torification");
    j["ranks"] = T.ranks;
    if (!T.labels.empty()) j["labels"] = T.labels;
    if (T.chart_tori) {
        j["charts"] = json::array();
        for (std::size_t c = 0; c < T.chart_tori->size(); ++c)
            j["charts"].push_back({{"tori", (*T.chart_tori)[c]}, {"counting", to_json(T.chart_counts[c])}});
    }
    if (N) j["counting"] = to_json(*N);
    return j;
}

/// {"kind": "cells", "k": 2, "n": 4, "partitions": [[0,0], [1,0], ...]} for Schubert cells, or
/// {"kind": "cells", "dims": [...], "base": r} for cells over a torus.
inline CellComplex cells_from_json(const json& j) {
    expect_kind(j, "cells");
    if (j.contains("partitions")) {
        std::size_t k = detail::to_index(detail::field(j, "", "k"), "/k");
        std::size_t n = detail::to_index(detail::field(j, "", "n"), "/n");
        const json& jp = detail::array_at(j["partitions"], "/partitions");
        std::vector<std::vector<std::size_t>> parts;
        for (std::size_t i = 0; i < jp.size(); ++i) parts.push_back(detail::indices_of(jp[i], "/partitions/" + std::to_string(i)));
        for (std::size_t i = 0; i < parts.size(); ++i)
            detail::semantic("/partitions/" + std::to_string(i), [&] { return schubert_complex(k, n, {parts[i]}); });
        return detail::semantic("/partitions", [&] { return schubert_complex(k, n, parts); });
    }
    CellComplex C;
    C.dims = detail::indices_of(detail::field(j, "", "dims"), "/dims");
    if (j.contains("base")) C.base = detail::to_index(j["base"], "/base");
    return C;
}

inline json to_json(const CellComplex& C) {
    json j = header("cells");
    j["dims"] = C.dims;
    j["base"] = C.base;
    return j;
}

// --- reports ----------------------------------------------------------------

inline json to_json(const SchemeFlags& f) {
    return {{"connected", f.connected}, {"integral", f.integral}, {"finite_type", f.finite_type}, {"exponent_one", f.exponent_one}};
}

inline json to_json(const LawReport& r) {
    json laws = json::array();
    for (const auto& l : r.laws) {
        json e{{"law", l.law}, {"passed", l.passed}, {"checked", l.checked}};
        if (!l.passed) e["counterexample"] = l.counterexample;
        laws.push_back(e);
    }
    return {{"monoid", r.monoid}, {"passed", r.passed()}, {"laws", laws}};
}

inline json to_json(const CCRecord& r) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.source.size(); ++i)
        rows.push_back({{"q", detail::from_int(r.source[i].q)},
                        {"tilde", detail::from_int(r.source[i].count)},
                        {"target", detail::from_int(r.target[i].count)}});
    return {{"evaluation", r.evaluation}, {"verified", r.verified}, {"fields", rows}, {"mismatches", r.mismatches}};
}

}  // namespace f1::io
