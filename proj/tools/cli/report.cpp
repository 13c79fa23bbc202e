#include "report.hpp"

#include <algorithm>
#include <cstdio>

namespace arcstab::cli {

using nlohmann::json;

json rational(const Rational& q)
{
    return to_fraction_string(q);
}

json rationals(const std::vector<Rational>& qs)
{
    json out = json::array();
    for (const auto& q : qs) {
        out.push_back(rational(q));
    }
    return out;
}

json series_matrix(const ArcMatrix& a)
{
    json out = json::array();
    for (const auto& row : a.rows()) {
        json r = json::array();
        for (const auto& e : row) {
            r.push_back(e.to_string());
        }
        out.push_back(r);
    }
    return out;
}

const char* kind_name(CheckKind k)
{
    switch (k) {
    case CheckKind::semistable:
        return "semistable";
    case CheckKind::stable:
        return "stable";
    case CheckKind::polystable:
        return "polystable";
    }
    return "?";
}

const char* order_name(SlotOrder o)
{
    return o == SlotOrder::paper ? "paper" : "analytic";
}

json record(const ArcRecord& r)
{
    json out = {
        {"arc", r.arc},
        {"weight", r.weight},
        {"m_v", r.m_v},
        {"m_w", r.m_w},
        {"lhs", rational(r.lhs)},
        {"rhs", rational(r.rhs)},
        {"violation", r.violation},
    };
    if (r.norm) {
        out["norm"] = *r.norm;
    }
    if (r.reduced) {
        out["reduced_norm"] = {
            {"value", rational(r.reduced->value)},
            {"minimizer", rationals(r.reduced->minimizer)},
            {"attained", r.reduced->attained},
            {"proper", r.reduced->proper},
        };
    }
    return out;
}

json stability(const StabilityReport& r)
{
    json records = json::array();
    for (const auto& rec : r.records) {
        records.push_back(record(rec));
    }
    json out = {
        {"check", kind_name(r.kind)},
        {"epsilon", rational(r.epsilon)},
        {"records", records},
        {"violation", r.violation},
        {"verdict", r.verdict},
    };
    if (r.kind == CheckKind::stable) {
        out["slot_order"] = order_name(r.order);
    }
    if (r.kind == CheckKind::polystable) {
        out["override_proper"] = r.override_proper;
    }
    if (r.destabilizer) {
        out["destabilizer"] = record(r.records[*r.destabilizer]);
    }
    return out;
}

json fit(const SlopeFit& f)
{
    return {
        {"samples", f.magnitudes},
        {"values", f.values},
        {"slope", f.slope},
        {"intercept", f.intercept},
        {"residual", f.residual},
    };
}

json decomposition(const SnfDecomposition& d)
{
    return {
        {"exponents", d.exponents},
        {"U", series_matrix(d.U)},
        {"Uprime", series_matrix(d.Uprime)},
    };
}

namespace {

std::string scalar(const json& j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", j.get<double>());
        return buf;
    }
    return j.dump();
}

void flatten(const json& j, const std::string& path, std::string& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            flatten(v, path.empty() ? k : path + "." + k, out);
        }
        return;
    }
    if (j.is_array()) {
        const bool leaves = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
        if (leaves) {
            std::string line = "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                line += (i ? ", " : "") + scalar(j[i]);
            }
            out += path + ": " + line + "]\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], path + "[" + std::to_string(i) + "]", out);
        }
        return;
    }
    out += path + ": " + scalar(j) + "\n";
}

} // namespace

std::string render(const json& report, bool as_json)
{
    if (as_json) {
        return report.dump(2) + "\n";
    }
    std::string out;
    flatten(report, "", out);
    return out;
}

} // namespace arcstab::cli
