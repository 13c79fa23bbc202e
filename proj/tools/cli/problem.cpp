#include "problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "arcstab/errors.hpp"

namespace arcstab::cli {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

// Re-anchor a literal error at the literal's position in the document.
[[noreturn]] void relocate(const ParseError& e, const std::string& doc, const std::string& literal,
                           const std::string& where)
{
    const std::size_t at = doc.find("\"" + literal + "\"");
    if (at == std::string::npos) {
        throw ParseError(where + ": " + e.message(), 0, e.column(), e.token());
    }
    const auto [line, col] = line_col(doc, at + 1 + (e.column() - 1));
    throw ParseError(where + ": " + e.message(), line, col, e.token());
}

const json& require(const json& obj, const char* key)
{
    if (!obj.contains(key)) {
        throw InvalidArgument(std::string("problem file is missing '") + key + "'");
    }
    return obj.at(key);
}

std::vector<std::pair<std::string, std::string>> read_vector(const json& j, const char* what)
{
    if (!j.is_object()) {
        throw InvalidArgument(std::string(what) + " must be an object mapping basis names to values");
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, v] : j.items()) {
        if (v.is_string()) {
            out.emplace_back(k, v.get<std::string>());
        } else if (v.is_number_integer()) {
            out.emplace_back(k, std::to_string(v.get<long long>()));
        } else {
            throw InvalidArgument(std::string(what) + "['" + k + "'] must be a string literal or an integer");
        }
    }
    return out;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    const GaussianRational g = parse_gaussian_rational(text);
    if (!g.is_real()) {
        throw InvalidArgument("expected a real rational, got '" + text + "'");
    }
    return g.re();
}

TorusData Problem::torus_or_trivial() const
{
    return torus ? *torus : TorusData::trivial(group_dim);
}

std::vector<NamedArc> Problem::select(const std::optional<std::string>& name) const
{
    if (!name) {
        return arcs;
    }
    for (const auto& a : arcs) {
        if (a.name == *name) {
            return {a};
        }
    }
    throw InvalidArgument("unknown arc '" + *name + "'");
}

Problem parse_problem(const std::string& text, int working_precision)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
        throw ParseError("malformed JSON", line, col, text.substr(std::min(at, text.size()), 12));
    }
    if (!doc.is_object()) {
        throw InvalidArgument("problem file must be a JSON object");
    }
    static const std::set<std::string> known = {"group_dim", "V", "W", "v", "w", "torus", "arcs", "params", "scan"};
    for (const auto& [k, _] : doc.items()) {
        if (!known.count(k)) {
            throw InvalidArgument("unknown problem-file key '" + k + "'");
        }
    }

    Problem p;
    p.group_dim = require(doc, "group_dim").get<std::size_t>();
    if (p.group_dim == 0) {
        throw InvalidArgument("group_dim must be at least 1");
    }
    p.V_text = require(doc, "V").get<std::string>();
    p.W_text = require(doc, "W").get<std::string>();
    p.v_entries = read_vector(require(doc, "v"), "v");
    p.w_entries = read_vector(require(doc, "w"), "w");

    auto rep = [&](const std::string& t, const char* where) {
        try {
            RepExpr r = parse_rep(t);
            if (r.ambient() && *r.ambient() != p.group_dim) {
                throw DimensionMismatch(std::string(where) + " = " + t + " is not a representation of GL(" +
                                        std::to_string(p.group_dim) + ")");
            }
            return r;
        } catch (const ParseError& e) {
            relocate(e, text, t, where);
        }
    };
    const RepExpr V = rep(p.V_text, "V");
    const RepExpr W = rep(p.W_text, "W");
    auto vec = [&](const RepExpr& r, const std::vector<std::pair<std::string, std::string>>& e, const char* where) {
        for (const auto& [name, lit] : e) {
            try {
                parse_gaussian_rational(lit);
            } catch (const ParseError& err) {
                relocate(err, text, lit, std::string(where) + "['" + name + "']");
            }
        }
        return RepVector::from_named(r, e);
    };
    p.pair.emplace(vec(V, p.v_entries, "v"), vec(W, p.w_entries, "w"));

    if (doc.contains("torus")) {
        const json& t = doc.at("torus");
        TorusData td;
        td.rank = require(t, "rank").get<std::size_t>();
        td.ambient = require(t, "weights").get<std::vector<WeightVector>>();
        td.validate(p.group_dim);
        p.torus = td;
    }

    if (doc.contains("arcs")) {
        std::set<std::string> names;
        for (const auto& a : doc.at("arcs")) {
            const std::string name = require(a, "name").get<std::string>();
            if (!names.insert(name).second) {
                throw InvalidArgument("duplicate arc name '" + name + "'");
            }
            const auto rows = require(a, "matrix").get<std::vector<std::vector<std::string>>>();
            std::vector<std::vector<LaurentSeries>> m;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                m.emplace_back();
                for (std::size_t j = 0; j < rows[i].size(); ++j) {
                    try {
                        m.back().push_back(parse_series(rows[i][j]));
                    } catch (const ParseError& e) {
                        relocate(e, text, rows[i][j],
                                 "arc '" + name + "' entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                    }
                }
            }
            if (m.size() != p.group_dim) {
                throw DimensionMismatch("arc '" + name + "' is not " + std::to_string(p.group_dim) + "x" +
                                        std::to_string(p.group_dim));
            }
            p.arcs.push_back(NamedArc{name, ArcMatrix(std::move(m), working_precision)});
            p.arc_text.emplace_back(name, rows);
        }
    }

    if (doc.contains("params")) {
        const json& q = doc.at("params");
        if (q.contains("k")) {
            p.params.k = q.at("k").get<std::int64_t>();
        }
        if (q.contains("epsilon")) {
            p.params.epsilon = parse_rational(q.at("epsilon").get<std::string>());
        }
        if (q.contains("precision")) {
            p.params.precision = q.at("precision").get<int>();
        }
        if (q.contains("z_samples")) {
            p.params.z_samples = q.at("z_samples").get<std::vector<double>>();
        }
    }
    if (doc.contains("scan")) {
        p.trace_zero = doc.at("scan").value("trace_zero", false);
    }
    return p;
}

Problem load_problem(const std::string& path, int working_precision)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot open problem file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str(), working_precision);
}

json to_json(const Problem& p)
{
    json doc;
    doc["group_dim"] = p.group_dim;
    doc["V"] = p.V_text;
    doc["W"] = p.W_text;
    doc["v"] = json::object();
    for (const auto& [k, v] : p.v_entries) {
        doc["v"][k] = v;
    }
    doc["w"] = json::object();
    for (const auto& [k, v] : p.w_entries) {
        doc["w"][k] = v;
    }
    if (p.torus) {
        doc["torus"] = {{"rank", p.torus->rank}, {"weights", p.torus->ambient}};
    }
    if (!p.arc_text.empty()) {
        doc["arcs"] = json::array();
        for (const auto& [name, rows] : p.arc_text) {
            doc["arcs"].push_back({{"name", name}, {"matrix", rows}});
        }
    }
    json params = json::object();
    if (p.params.k) {
        params["k"] = *p.params.k;
    }
    if (p.params.epsilon) {
        params["epsilon"] = to_fraction_string(*p.params.epsilon);
    }
    if (p.params.precision) {
        params["precision"] = *p.params.precision;
    }
    if (!p.params.z_samples.empty()) {
        params["z_samples"] = p.params.z_samples;
    }
    if (!params.empty()) {
        doc["params"] = params;
    }
    if (p.trace_zero) {
        doc["scan"] = {{"trace_zero", true}};
    }
    return doc;
}

} // namespace arcstab::cli
