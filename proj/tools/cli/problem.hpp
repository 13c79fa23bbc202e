#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arcstab/stability.hpp"

namespace arcstab::cli {

struct Params {
    std::optional<std::int64_t> k;
    std::optional<Rational> epsilon;
    std::optional<int> precision;
    std::vector<double> z_samples;
};

struct Problem {
    std::size_t group_dim = 0;
    std::string V_text;
    std::string W_text;
    std::vector<std::pair<std::string, std::string>> v_entries;
    std::vector<std::pair<std::string, std::string>> w_entries;
    std::optional<TorusData> torus;
    std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> arc_text;
    Params params;
    bool trace_zero = false;

    // Derived at load.
    std::optional<Pair> pair;
    std::vector<NamedArc> arcs;

    /// Torus from the file, or the rank-0 torus.
    TorusData torus_or_trivial() const;
    /// Arcs restricted to one name, or all of them.
    std::vector<NamedArc> select(const std::optional<std::string>& name) const;
};

/// Parse and validate a problem document. JSON syntax errors and series or
/// representation literal errors surface as ParseError with a line and
/// column in the document.
Problem parse_problem(const std::string& text, int working_precision = kDefaultPrecision);
Problem load_problem(const std::string& path, int working_precision = kDefaultPrecision);

/// Canonical serialization; parse_problem(serialize(p)) reproduces p.
nlohmann::json to_json(const Problem& p);

/// "p/q" or "p" parsed as a rational.
Rational parse_rational(const std::string& text);

} // namespace arcstab::cli
