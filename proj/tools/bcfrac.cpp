// bcfrac: scenario runner for the bicomplex fractional identities.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bcfrac/errors.hpp"
#include "bcfrac/harness.hpp"

namespace {

enum Exit : int { kPass = 0, kFail = 1, kConfig = 2, kIo = 3 };

void print_table(const std::vector<bcfrac::ResultRow>& rows) {
    std::printf("%-20s %5s %12s %12s %10s\n", "scenario", "level", "h", "residual", "order");
    for (const auto& r : rows) {
        std::printf("%-20s %5d %12.4e %12.4e ", r.scenario.c_str(), r.level, r.h, r.residual);
        if (r.order_estimate)
            std::printf("%10.3f\n", *r.order_estimate);
        else
            std::printf("%10s\n", "-");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification runner for weighted bicomplex fractional identities"};
    app.require_subcommand(1);

    std::string scenario, config_path, out_path;
    std::optional<int> refine;
    bool parallel = false, timing = false;

    auto* run = app.add_subcommand("run", "Run a scenario across refinement levels");
    run->add_option("--scenario", scenario, "Scenario name (see `bcfrac list`)")->required();
    run->add_option("--config", config_path, "JSON configuration; omitted keys take scenario defaults");
    run->add_option("--out", out_path, "Output table (.csv or .json)")->required();
    run->add_option("--refine", refine, "Number of refinement levels");
    run->add_flag("--parallel", parallel, "Run levels concurrently");
    run->add_flag("--timing", timing, "Record wall time per level (output is then not reproducible)");

    app.add_subcommand("list", "List scenarios");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a configuration file without running it");
    validate->add_option("--config", validate_path, "JSON configuration")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("list")) {
            for (const auto& s : bcfrac::list_scenarios()) std::printf("%-20s %s\n", s.name.c_str(), s.description.c_str());
            return kPass;
        }
        if (app.got_subcommand("validate")) {
            const auto cfg = bcfrac::load_config(validate_path);
            bcfrac::validate_config(cfg);
            std::printf("%s: ok (scenario %s)\n", validate_path.c_str(), cfg.scenario.c_str());
            return kPass;
        }

        if (!bcfrac::scenario_exists(scenario)) throw bcfrac::ConfigError("unknown scenario '" + scenario + "'");
        const auto cfg = config_path.empty() ? bcfrac::default_config(scenario) : bcfrac::load_config(config_path, scenario);
        if (refine && *refine < 1) throw bcfrac::ConfigError("--refine must be >= 1");

        bcfrac::RunOptions options;
        options.refine = refine;
        options.parallel = parallel;
        options.timing = timing;
        const auto rows = bcfrac::run_scenario(cfg, options);
        bcfrac::emit_results(rows, bcfrac::format_for_path(out_path), out_path);

        print_table(rows);
        for (const auto& note : bcfrac::scenario_notes(cfg)) std::printf("note: %s\n", note.c_str());
        const bool ok = bcfrac::rows_pass(rows, cfg.tolerance);
        std::printf("%s: finest residual %.6e, tolerance %.3e\n", ok ? "PASS" : "FAIL", rows.back().residual,
                    cfg.tolerance);
        return ok ? kPass : kFail;
    } catch (const bcfrac::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kIo;
    } catch (const bcfrac::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const bcfrac::DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const bcfrac::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kFail;
    }
}
