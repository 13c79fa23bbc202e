#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "arcstab/errors.hpp"
#include "commands.hpp"
#include "problem.hpp"

using namespace arcstab;
using namespace arcstab::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "arcstab");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name)
{
    return std::string(ARCSTAB_FIXTURE_DIR) + "/" + name;
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code)
{
    args.push_back("--json");
    const auto r = run_cli(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return nlohmann::json::parse(r.out);
}

const char* kMinimal = R"json({
  "group_dim": 2,
  "V": "triv",
  "W": "sym(2,std(2))",
  "v": {"1": "1"},
  "w": {"e1^2": "1", "e2^2": "1/2"},
  "arcs": [{"name": "a", "matrix": [["z", "0"], ["0", "z^-1 + 3*z"]]}]
})json";

} // namespace

TEST(Problem, RoundTrip)
{
    for (const char* name : {"binary_quadratic_unstable.json", "binary_quadratic_semistable.json", "unipotent.json",
                             "diag_slope.json", "reduced_norm_rank2.json", "reduced_norm_rank1.json", "pss_shell.json"}) {
        const auto p = load_problem(fixture(name));
        const auto j = to_json(p);
        const auto q = parse_problem(j.dump());
        EXPECT_EQ(to_json(q), j) << name;
        ASSERT_EQ(q.arcs.size(), p.arcs.size());
        for (std::size_t i = 0; i < p.arcs.size(); ++i) {
            EXPECT_EQ(q.arcs[i].arc, p.arcs[i].arc);
        }
        EXPECT_EQ(q.pair->v(), p.pair->v());
        EXPECT_EQ(q.pair->w(), p.pair->w());
    }
}

TEST(Problem, ParseErrorsCarryDocumentPositions)
{
    const std::string text = "{\n  \"group_dim\": 2,\n  \"V\": \"triv\",\n  \"W\": \"triv\",\n  \"v\": {\"1\": \"1\"},\n"
                             "  \"w\": {\"1\": \"1\"},\n  \"arcs\": [{\"name\": \"a\", \"matrix\": [[\"1 + z^^2\", \"0\"], "
                             "[\"0\", \"1\"]]}]\n}";
    try {
        parse_problem(text);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 7);
        EXPECT_GT(e.column(), 0);
        EXPECT_EQ(e.token(), "^2");
    }
    try {
        parse_problem("{\n  \"group_dim\": 2,\n  oops\n}");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Problem, Validation)
{
    auto doc = nlohmann::json::parse(kMinimal);
    EXPECT_NO_THROW(parse_problem(doc.dump()));
    auto bad = doc;
    bad["extra"] = 1;
    EXPECT_THROW(parse_problem(bad.dump()), InvalidArgument);
    bad = doc;
    bad["group_dim"] = 3;
    EXPECT_THROW(parse_problem(bad.dump()), DimensionMismatch);
    bad = doc;
    bad["arcs"].push_back(doc["arcs"][0]);
    EXPECT_THROW(parse_problem(bad.dump()), InvalidArgument);
    bad = doc;
    bad["w"] = nlohmann::json::object({{"e3^2", "1"}});
    EXPECT_THROW(parse_problem(bad.dump()), Error);
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_THROW(parse_rational("1+i"), Error);
}

TEST(Cli, WeightOnTheUnstableQuadratic)
{
    const auto j = run_json({"weight", fixture("binary_quadratic_unstable.json")}, kExitClean);
    EXPECT_EQ(j["records"][0]["arc"], "lambda");
    EXPECT_EQ(j["records"][0]["weight"], -2);
    EXPECT_EQ(j["records"][0]["specialization_agrees"], true);
    EXPECT_EQ(j["records"][1]["weight"], 0);
}

TEST(Cli, ScanMinima)
{
    auto j = run_json({"scan-1ps", fixture("binary_quadratic_unstable.json"), "--box", "1"}, kExitViolation);
    EXPECT_EQ(j["min_weight"], -2);
    EXPECT_EQ(j["argmin"], nlohmann::json::array({-1, 1}));
    j = run_json({"scan-1ps", fixture("binary_quadratic_semistable.json"), "--box", "3"}, kExitClean);
    EXPECT_EQ(j["min_weight"], 0);
    EXPECT_EQ(j["points"], 7);
    EXPECT_FALSE(j["note"].get<std::string>().empty());
    EXPECT_EQ(run_cli({"scan-1ps", fixture("binary_quadratic_semistable.json"), "--box", "0"}).code, kExitError);
    EXPECT_EQ(run_cli({"scan-1ps", fixture("binary_quadratic_semistable.json")}).code, kExitError);
}

TEST(Cli, SnfOfTheUnipotentArc)
{
    const auto j = run_json({"snf", fixture("unipotent.json")}, kExitClean);
    EXPECT_EQ(j["records"][0]["exponents"], nlohmann::json::array({-1, 1}));
    EXPECT_EQ(j["records"][0]["reconstructs"], true);
}

TEST(Cli, NormAndChecks)
{
    auto j = run_json({"norm", fixture("unipotent.json")}, kExitClean);
    EXPECT_EQ(j["records"][0]["norm"], 2);
    j = run_json({"norm", fixture("unipotent.json"), "--slot-order", "paper"}, kExitClean);
    EXPECT_EQ(j["records"][0]["norm"], -2);

    j = run_json({"check", "stable", fixture("unipotent.json")}, kExitViolation);
    EXPECT_EQ(j["violation"], true);
    EXPECT_EQ(j["destabilizer"]["arc"], "unipotent");
    EXPECT_EQ(j["epsilon"], "1/2");
    j = run_json({"check", "stable", fixture("unipotent.json"), "--epsilon", "0"}, kExitClean);
    EXPECT_EQ(j["violation"], false);

    j = run_json({"check", "semistable", fixture("binary_quadratic_unstable.json")}, kExitViolation);
    EXPECT_EQ(j["destabilizer"]["arc"], "lambda");
    run_json({"check", "semistable", fixture("binary_quadratic_semistable.json"), "--arc", "lambda"}, kExitClean);
    // The diagonal scan is nonnegative, but the shear arc destabilizes.
    j = run_json({"check", "semistable", fixture("binary_quadratic_semistable.json")}, kExitViolation);
    EXPECT_EQ(j["destabilizer"]["arc"], "shear");
    EXPECT_EQ(j["destabilizer"]["weight"], -1);

    run_json({"check", "polystable", fixture("reduced_norm_rank1.json")}, kExitClean);
    EXPECT_EQ(run_cli({"check", "polystable", fixture("reduced_norm_rank2.json")}).code, kExitError);
    j = run_json({"check", "polystable", fixture("reduced_norm_rank2.json"), "--override-proper"}, kExitClean);
    EXPECT_EQ(j["override_proper"], true);
}

TEST(Cli, ReducedNorm)
{
    const auto j = run_json({"reduced-norm", fixture("reduced_norm_rank2.json")}, kExitClean);
    EXPECT_EQ(j["torus_rank"], 2);
    for (const auto& r : j["records"]) {
        EXPECT_EQ(r["value"], "0/1");
        EXPECT_EQ(r["proper"], false);
        EXPECT_EQ(r["minimizer"][0], r["minimizer"][1]) << "only the identity arc has a diagonal minimizer";
        break;
    }
}

TEST(Cli, Slope)
{
    const auto j = run_json({"slope", fixture("diag_slope.json")}, kExitClean);
    EXPECT_NEAR(j["records"][0]["fit"]["slope"].get<double>(), -2.0, 0.05);
    const auto m = run_json({"slope", fixture("unipotent.json"), "--quantity", "matrix"}, kExitClean);
    EXPECT_NEAR(m["records"][0]["fit"]["slope"].get<double>(), 1.0, 0.05);
    const auto r = run_json({"slope", fixture("reduced_norm_rank1.json"), "--quantity", "reduced"}, kExitClean);
    for (const auto& rec : r["records"]) {
        EXPECT_LT(rec["slope_error"].get<double>(), 0.05);
    }
}

TEST(Cli, PlotData)
{
    const std::string path = ::testing::TempDir() + "arcstab_plot.dat";
    const auto r = run_cli({"slope", fixture("diag_slope.json"), "--plot-data", path});
    EXPECT_EQ(r.code, kExitClean) << r.err;
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("# ", 0), 0u);
    int rows = 0;
    while (std::getline(in, line)) {
        rows += line.empty() || line[0] == '#' ? 0 : 1;
    }
    EXPECT_EQ(rows, 7);
}

TEST(Cli, DeterministicOutput)
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"weight", fixture("binary_quadratic_unstable.json")},
             {"scan-1ps", fixture("pss_shell.json"), "--box", "2"},
             {"check", "stable", fixture("unipotent.json"), "--json"},
             {"slope", fixture("reduced_norm_rank1.json"), "--quantity", "reduced", "--json"}}) {
        const auto first = run_cli(args);
        for (int i = 0; i < 2; ++i) {
            const auto again = run_cli(args);
            EXPECT_EQ(again.out, first.out);
            EXPECT_EQ(again.code, first.code);
        }
    }
}

TEST(Cli, Errors)
{
    EXPECT_EQ(run_cli({}).code, kExitError);
    EXPECT_EQ(run_cli({"weight", fixture("missing.json")}).code, kExitError);
    EXPECT_EQ(run_cli({"weight", fixture("unipotent.json"), "--arc", "nope"}).code, kExitError);
    EXPECT_EQ(run_cli({"check", "stable", fixture("binary_quadratic_unstable.json"), "--epsilon", "x"}).code,
              kExitError);
    EXPECT_EQ(run_cli({"weight", fixture("unipotent.json"), "--precision", "0"}).code, kExitError);
    EXPECT_EQ(run_cli({"--help"}).code, kExitClean);
    const auto r = run_cli({"weight", fixture("unipotent.json"), "--arc", "nope"});
    EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, PrecisionFromEnvironment)
{
    ::setenv("ARC_STAB_PRECISION", "24", 1);
    const auto a = run_cli({"snf", fixture("unipotent.json")});
    ::setenv("ARC_STAB_PRECISION", "bogus", 1);
    const auto b = run_cli({"snf", fixture("unipotent.json")});
    ::unsetenv("ARC_STAB_PRECISION");
    EXPECT_EQ(a.code, kExitClean);
    EXPECT_EQ(b.code, kExitError);
}
