#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arcstab/stability.hpp"
#include "arcstab/slope.hpp"
#include "arcstab/snf.hpp"

namespace arcstab::cli {

/// Rationals are written as "p/q" strings so that reports stay exact.
nlohmann::json rational(const Rational& q);
nlohmann::json rationals(const std::vector<Rational>& qs);

nlohmann::json series_matrix(const ArcMatrix& a);

nlohmann::json record(const ArcRecord& r);
nlohmann::json stability(const StabilityReport& r);
nlohmann::json fit(const SlopeFit& f);
nlohmann::json decomposition(const SnfDecomposition& d);

const char* kind_name(CheckKind k);
const char* order_name(SlotOrder o);

/// Keys are sorted (nlohmann's default object is an ordered map), so both
/// renderings are byte-stable. Text mode prints one "path: value" per leaf.
std::string render(const nlohmann::json& report, bool as_json);

} // namespace arcstab::cli
