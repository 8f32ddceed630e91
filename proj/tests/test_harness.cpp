#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "bcfrac/errors.hpp"
#include "bcfrac/harness.hpp"

using namespace bcfrac;

namespace {

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

std::vector<ResultRow> sample_rows() {
    ResultRow a{"bbpf", 0, 0.1, 1e-3, std::nullopt, std::nullopt, std::nullopt, 0.0};
    ResultRow b{"bbpf", 1, 0.05, 2.5e-4, std::nullopt, Complex(0.1, -0.25), std::nullopt, 12.5};
    ResultRow c{"bbpf", 2, 0.025, 0.0, std::numeric_limits<double>::infinity(), Complex(1.0 / 3.0, 2e-300),
                Complex(-0.0, 1e300), 0.0};
    return {a, b, c};
}

}  // namespace

TEST_CASE("scenario registry") {
    const auto& list = list_scenarios();
    REQUIRE(list.size() == 12);
    CHECK(list.front().name == "frac1d-fundamental");
    CHECK(list.back().name == "reductions");
    CHECK(scenario_exists("bbpf"));
    CHECK(scenario_exists("frac-bp"));
    CHECK_FALSE(scenario_exists("unknown-name"));
    for (const auto& s : list) CHECK_FALSE(s.description.empty());
    CHECK_THROWS_AS(default_config("unknown-name"), ConfigError);
}

TEST_CASE("config parsing") {
    const auto cfg = parse_config(R"({
        "scenario": "di-factorization",
        "weights": {"theta1": [1, 0], "phi1": [0, 1]},
        "alpha": [0.25, 0.5, 0.5, 0.75],
        "rect": [0, 2, 0, 1, 0, 1, -1, 1],
        "grids": {"n_line": 64},
        "testfield": "mixed",
        "refine_levels": 2,
        "tolerance": 0.5,
        "anchor": [[0.5, 0.5], [0.5, 0.0]],
        "point": [[1.5, 0.25], [0.5, -0.5]]
    })");
    CHECK(cfg.scenario == "di-factorization");
    CHECK(cfg.weights[0] == Complex(1.0));
    CHECK(cfg.weights[1] == Complex(0.5));
    CHECK(cfg.weights[2] == Complex(0.0, 1.0));
    CHECK(cfg.alpha[0] == 0.25);
    CHECK(cfg.alpha[3] == 0.75);
    CHECK(cfg.rect.b1 == 2.0);
    CHECK(cfg.rect.c2 == -1.0);
    CHECK(cfg.grids.n_line == 64);
    CHECK(cfg.grids.n_theta == GridSpec{}.n_theta);
    CHECK(cfg.testfield == "mixed");
    CHECK(cfg.point.z1 == Complex(1.5, 0.25));
    CHECK_NOTHROW(validate_config(cfg));

    CHECK(parse_config(R"({"scenario": "bbpf"})", "bc-gauss").scenario == "bc-gauss");
    CHECK(parse_config(R"({"alpha": 0.3})", "frac1d-constant").alpha[2] == 0.3);

    const auto bp = parse_config(R"({"scenario": "frac-bp", "ball": {"center": [[0.3, 0.3], [0.3, 0.3]], "radius": [0.3, 0.3]}})");
    CHECK(bp.point == bp.ball.center);

    CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
    CHECK_THROWS_AS(parse_config("[]"), ConfigError);
    CHECK_THROWS_AS(parse_config("{}"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"scenario": "bbpf", "extra": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"scenario": "bbpf", "grids": {"n_z": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"scenario": "bbpf", "grids": {"n_r": 1.5}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"scenario": "bbpf", "alpha": [0.5, 0.5]})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"scenario": "bbpf", "weights": {"theta1": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"scenario": "nope"})"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), IoError);
}

TEST_CASE("config validation") {
    auto cfg = default_config("frac-bp");
    CHECK_NOTHROW(validate_config(cfg));
    cfg.ball.radius = {0.5, 0.4};
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    auto bad = default_config("bbpf");
    bad.testfield = "cosh";
    CHECK_THROWS_AS(validate_config(bad), ConfigError);
    bad = default_config("bbpf");
    bad.alpha = AlphaVec::uniform(1.5);
    CHECK_THROWS_AS(validate_config(bad), ConfigError);
    bad = default_config("bbpf");
    bad.grids.n_theta = 30;
    CHECK_THROWS_AS(validate_config(bad), ConfigError);
    bad = default_config("di-factorization");
    bad.point = Bicomplex(Complex(2.0, 0.5), 0.5);
    CHECK_THROWS_AS(validate_config(bad), ConfigError);
}

TEST_CASE("running scenarios") {
    const auto rows = run_scenario(default_config("bbpf"));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].residual <= 1e-8);
    CHECK(rows_pass(rows, 1e-8));

    const auto constant = run_scenario(default_config("frac1d-constant"));
    REQUIRE(constant.size() == 3);
    CHECK(constant.back().h == doctest::Approx(1.0 / 4096));
    CHECK(constant.back().residual <= 1e-2);
    CHECK(constant.back().order_estimate.has_value());
    CHECK_FALSE(constant[1].order_estimate.has_value());

    RunOptions two;
    two.refine = 2;
    CHECK(run_scenario(default_config("complex-gauss"), two).size() == 2);
    RunOptions zero;
    zero.refine = 0;
    CHECK_THROWS_AS(run_scenario(default_config("bbpf"), zero), ConfigError);

    const auto cp = run_scenario(default_config("complex-cp"), two);
    REQUIRE(cp.back().c_empirical1.has_value());
    CHECK(std::abs(*cp.back().c_empirical1 - Complex(0.0, -1.0)) < 1e-10);
    CHECK_FALSE(cp.back().c_empirical2.has_value());

    auto failing = default_config("bc-orthogonality");
    failing.weights = {1.0, 1.0, 1.0, 1.0};
    CHECK_FALSE(rows_pass(run_scenario(failing), failing.tolerance));
}

TEST_CASE("reruns are bit-identical, also in parallel") {
    auto cfg = default_config("bc-gauss");
    const std::string first = to_csv(run_scenario(cfg));
    CHECK(to_csv(run_scenario(cfg)) == first);
    RunOptions parallel;
    parallel.parallel = true;
    CHECK(to_csv(run_scenario(cfg, parallel)) == first);
}

TEST_CASE("notes report the c_psi formula value") {
    const auto notes = scenario_notes(default_config("complex-cp"));
    REQUIRE_FALSE(notes.empty());
    CHECK(notes.front().find("6.283185307179586") != std::string::npos);
    CHECK(scenario_notes(default_config("bbpf")).empty());
}

TEST_CASE("csv output") {
    CHECK(to_csv({}) == std::string(kCsvHeader) + "\n");
    const std::string csv = to_csv(sample_rows());
    CHECK(line_count(csv) == 4);
    std::istringstream in(csv);
    std::string header, row0, row1;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    CHECK(header == kCsvHeader);
    CHECK(row0 == "bbpf,0,0.10000000000000001,0.001,,,,,,0");
    CHECK(row1 == "bbpf,1,0.050000000000000003,0.00025000000000000001,,0.10000000000000001,-0.25,,,12.5");
    CHECK(csv.find(",inf,") != std::string::npos);
}

TEST_CASE("json round trip") {
    const auto rows = sample_rows();
    CHECK(parse_results_json(to_json(rows)) == rows);
    CHECK(parse_results_json(to_json({})).empty());
    CHECK_THROWS_AS(parse_results_json("{}"), ConfigError);
}

TEST_CASE("emitting results") {
    const auto dir = std::filesystem::temp_directory_path() / "bcfrac_harness_test";
    std::filesystem::create_directories(dir);
    const std::string csv_path = (dir / "rows.csv").string(), json_path = (dir / "rows.json").string();
    CHECK(format_for_path(csv_path) == OutputFormat::csv);
    CHECK(format_for_path(json_path) == OutputFormat::json);
    emit_results(sample_rows(), OutputFormat::json, json_path);
    std::ifstream in(json_path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(parse_results_json(text.str()) == sample_rows());
    CHECK_THROWS_AS(emit_results(sample_rows(), OutputFormat::csv, (dir / "missing" / "rows.csv").string()), IoError);
    std::filesystem::remove_all(dir);
}
