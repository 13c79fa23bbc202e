#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "arcstab/errors.hpp"
#include "problem.hpp"
#include "report.hpp"

namespace arcstab::cli {

using nlohmann::json;

namespace {

constexpr const char* kScanNote =
    "a nonnegative scan over one-parameter subgroups does not certify semistability";

struct Options {
    std::string file;
    std::optional<int> precision;
    bool as_json = false;
    std::optional<std::string> arc;
    std::string slot_order = "analytic";
    std::optional<std::int64_t> k;
    std::optional<std::string> epsilon;
    std::int64_t box = 0;
    bool trace_zero = false;
    bool override_proper = false;
    std::string check_kind;
    std::string quantity = "weight";
    std::optional<std::string> plot_data;
};

int resolve_precision(const Options& o, const Problem& p)
{
    if (o.precision) {
        return *o.precision;
    }
    if (p.params.precision) {
        return *p.params.precision;
    }
    if (const char* env = std::getenv("ARC_STAB_PRECISION")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw InvalidArgument(std::string("ARC_STAB_PRECISION is not an integer: '") + env + "'");
        }
    }
    return kDefaultPrecision;
}

SlotOrder resolve_order(const Options& o)
{
    return o.slot_order == "paper" ? SlotOrder::paper : SlotOrder::analytic;
}

Rational resolve_epsilon(const Options& o, const Problem& p)
{
    if (o.epsilon) {
        return parse_rational(*o.epsilon);
    }
    if (o.k) {
        return epsilon_from_k(*o.k);
    }
    if (p.params.epsilon) {
        return *p.params.epsilon;
    }
    if (p.params.k) {
        return epsilon_from_k(*p.params.k);
    }
    throw InvalidArgument("this check needs --epsilon, --k or params.k / params.epsilon in the problem file");
}

std::vector<NamedArc> require_arcs(const Problem& p, const Options& o)
{
    auto arcs = p.select(o.arc);
    if (arcs.empty()) {
        throw InvalidArgument("the problem file declares no arcs");
    }
    return arcs;
}

struct Outcome {
    json report;
    bool violation = false;
};

Outcome cmd_weight(const Problem& p, const Options& o, int wp)
{
    json records = json::array();
    for (const auto& a : require_arcs(p, o)) {
        const WeightDetails d = weight_details(a.arc, *p.pair, wp);
        const std::int64_t via_spec = weight_via_specialization(a.arc, *p.pair, wp);
        records.push_back({
            {"arc", a.name},
            {"weight", d.nu},
            {"m_v", d.m_v},
            {"m_w", d.m_w},
            {"specialization_weight", via_spec},
            {"specialization_agrees", via_spec == d.nu},
        });
    }
    return {{{"command", "weight"}, {"records", records}}, false};
}

Outcome cmd_scan(const Problem& p, const Options& o, int wp)
{
    if (o.box < 1) {
        throw InvalidArgument("--box must be at least 1");
    }
    const bool trace_zero = o.trace_zero || p.trace_zero;
    const std::size_t m = p.group_dim;
    std::vector<std::int64_t> lambda(m, -o.box);
    std::size_t points = 0;
    std::optional<std::int64_t> best;
    std::vector<std::int64_t> argmin;
    while (true) {
        std::int64_t trace = 0;
        for (auto x : lambda) {
            trace += x;
        }
        if (!trace_zero || trace == 0) {
            ++points;
            const std::int64_t nu = weight(from_cocharacter(lambda), *p.pair, wp);
            if (!best || nu < *best) {
                best = nu;
                argmin = lambda;
            }
        }
        // Lexicographic successor in [-B, B]^m.
        std::size_t i = m;
        while (i > 0 && lambda[i - 1] == o.box) {
            lambda[i - 1] = -o.box;
            --i;
        }
        if (i == 0) {
            break;
        }
        ++lambda[i - 1];
    }
    json report = {
        {"command", "scan-1ps"},
        {"box", o.box},
        {"trace_zero", trace_zero},
        {"points", points},
        {"note", kScanNote},
    };
    const bool violation = best && *best < 0;
    if (best) {
        report["min_weight"] = *best;
        report["argmin"] = argmin;
    }
    report["verdict"] = violation ? kDestabilizer : kNoViolation;
    return {report, violation};
}

Outcome cmd_snf(const Problem& p, const Options& o, int wp)
{
    json records = json::array();
    for (const auto& a : require_arcs(p, o)) {
        const SnfDecomposition d = snf(a.arc, wp);
        json r = decomposition(d);
        r["arc"] = a.name;
        r["reconstructs"] = reconstruct(d).agrees_with(a.arc);
        records.push_back(r);
    }
    return {{{"command", "snf"}, {"records", records}}, false};
}

Outcome cmd_norm(const Problem& p, const Options& o, int wp)
{
    const SlotOrder order = resolve_order(o);
    json records = json::array();
    for (const auto& a : require_arcs(p, o)) {
        const NormDetails d = norm_details(a.arc, *p.pair, order, wp);
        records.push_back({
            {"arc", a.name},
            {"norm", d.value},
            {"m_e", d.m_e},
            {"m_v", d.m_v},
            {"degV", d.degV},
        });
    }
    return {{{"command", "norm"}, {"slot_order", order_name(order)}, {"records", records}}, false};
}

Outcome cmd_reduced(const Problem& p, const Options& o, int wp)
{
    const TorusData torus = p.torus_or_trivial();
    json records = json::array();
    for (const auto& a : require_arcs(p, o)) {
        const NormData data = norm_data(a.arc, *p.pair, torus, wp);
        const Properness prop = is_proper(data);
        json r = {{"arc", a.name}, {"proper", prop.proper}};
        if (!prop.proper) {
            r["witness"] = rationals(prop.witness);
        }
        const ReducedNorm red = reduced_norm(data);
        r["value"] = rational(red.value);
        r["minimizer"] = rationals(red.minimizer);
        r["attained"] = red.attained;
        records.push_back(r);
    }
    return {{{"command", "reduced-norm"}, {"torus_rank", torus.rank}, {"records", records}}, false};
}

Outcome cmd_check(const Problem& p, const Options& o, int wp)
{
    const auto arcs = require_arcs(p, o);
    StabilityReport r;
    if (o.check_kind == "semistable") {
        r = check_semistable(*p.pair, arcs, wp);
    } else if (o.check_kind == "stable") {
        r = check_stable(*p.pair, arcs, resolve_epsilon(o, p), resolve_order(o), wp);
    } else {
        r = check_polystable(*p.pair, arcs, resolve_epsilon(o, p), p.torus_or_trivial(), o.override_proper, wp);
    }
    json report = stability(r);
    report["command"] = "check";
    return {report, r.violation};
}

Outcome cmd_slope(const Problem& p, const Options& o, int wp)
{
    const std::vector<double> zs = p.params.z_samples.empty() ? default_samples() : p.params.z_samples;
    std::ofstream plot;
    if (o.plot_data) {
        plot.open(*o.plot_data, std::ios::binary);
        if (!plot) {
            throw InvalidArgument("cannot write plot data to '" + *o.plot_data + "'");
        }
    }
    json records = json::array();
    for (const auto& a : require_arcs(p, o)) {
        json r = {{"arc", a.name}};
        SlopeFit f;
        double exact = 0.0;
        if (o.quantity == "weight") {
            f = fit_slope(a.arc, *p.pair, zs);
            const std::int64_t nu = weight(a.arc, *p.pair, wp);
            r["exact"] = nu;
            exact = static_cast<double>(nu);
        } else if (o.quantity == "norm") {
            f = fit_norm_slope(a.arc, *p.pair, zs);
            const std::int64_t n = norm(a.arc, *p.pair, SlotOrder::analytic, wp);
            r["exact"] = n;
            exact = static_cast<double>(n);
        } else if (o.quantity == "matrix") {
            f = fit_matrix_slope(a.arc, zs);
            const std::int64_t n = -min_entry_ord(a.arc);
            r["exact"] = n;
            exact = static_cast<double>(n);
        } else {
            const ReducedSlopeCheck c = verify_reduced_slope(a.arc, *p.pair, p.torus_or_trivial(), zs);
            f = c.fit;
            r["exact"] = rational(c.exact);
            r["max_offset_deviation"] = c.max_offset_deviation;
            r["max_relative_deviation"] = c.max_relative_deviation;
            exact = c.exact.get_d();
        }
        r["fit"] = fit(f);
        r["slope_error"] = std::abs(f.slope - exact);
        records.push_back(r);
        if (plot) {
            plot << "# " << a.name << "\n";
            write_plot_data(plot, f);
        }
    }
    return {{{"command", "slope"}, {"quantity", o.quantity}, {"records", records}}, false};
}

void add_common(CLI::App* sub, Options& o, bool with_arc)
{
    sub->add_option("file", o.file, "Problem file (JSON)")->required();
    sub->add_option("--precision", o.precision, "Working precision in relative series terms")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.as_json, "Emit the report as JSON");
    if (with_arc) {
        sub->add_option("--arc", o.arc, "Restrict to the named arc");
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Numerical stability invariants of arcs acting on pairs of vectors", "arcstab"};
    app.require_subcommand(1);
    Options o;
    std::function<Outcome(const Problem&, const Options&, int)> action;

    auto* weight_cmd = app.add_subcommand("weight", "Weight of each arc on the pair");
    add_common(weight_cmd, o, true);
    weight_cmd->callback([&] { action = cmd_weight; });

    auto* scan = app.add_subcommand("scan-1ps", "Minimum weight over cocharacters in a box");
    add_common(scan, o, false);
    scan->add_option("--box", o.box, "Box radius B >= 1")->required();
    scan->add_flag("--trace-zero", o.trace_zero, "Only trace-zero cocharacters");
    scan->callback([&] { action = cmd_scan; });

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form over the valuation ring");
    add_common(snf_cmd, o, true);
    snf_cmd->callback([&] { action = cmd_snf; });

    auto* norm_cmd = app.add_subcommand("norm", "Stability norm of each arc");
    add_common(norm_cmd, o, true);
    norm_cmd->add_option("--slot-order", o.slot_order, "paper or analytic")->check(CLI::IsMember({"paper", "analytic"}));
    norm_cmd->callback([&] { action = cmd_norm; });

    auto* red = app.add_subcommand("reduced-norm", "Infimum of the norm over torus twists");
    add_common(red, o, true);
    red->callback([&] { action = cmd_reduced; });

    auto* check = app.add_subcommand("check", "Numerical semistability, stability or polystability test");
    check->add_option("kind", o.check_kind, "semistable, stable or polystable")
        ->required()
        ->check(CLI::IsMember({"semistable", "stable", "polystable"}));
    add_common(check, o, true);
    check->add_option("--k", o.k, "Use epsilon = 1/(k+1)");
    check->add_option("--epsilon", o.epsilon, "Rational epsilon p/q");
    check->add_option("--slot-order", o.slot_order, "paper or analytic")->check(CLI::IsMember({"paper", "analytic"}));
    check->add_flag("--override-proper", o.override_proper, "Run polystability on non-proper arcs");
    check->callback([&] { action = cmd_check; });

    auto* slope = app.add_subcommand("slope", "Fit log-norm slopes and compare with the exact invariant");
    add_common(slope, o, true);
    slope->add_option("--quantity", o.quantity, "weight, norm, matrix or reduced")
        ->check(CLI::IsMember({"weight", "norm", "matrix", "reduced"}));
    slope->add_option("--plot-data", o.plot_data, "Write log(1/|z|) and values to PATH");
    slope->callback([&] { action = cmd_slope; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitClean : kExitError;
    }

    try {
        Problem p = load_problem(o.file);
        const int wp = resolve_precision(o, p);
        if (wp < 1) {
            throw InvalidArgument("precision must be at least 1");
        }
        const Outcome r = action(p, o, wp);
        out << render(r.report, o.as_json);
        return r.violation ? kExitViolation : kExitClean;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace arcstab::cli
