#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcfrac/frac_bicomplex.hpp"

namespace bcfrac {

struct GridSpec {
    int n_line = 1024;   ///< line nodes for the fractional operators
    int n_theta = 64;    ///< angular nodes (disks, circles)
    int n_r = 16;        ///< radial nodes; box nodes per axis for frac-gauss
    int n_kernel = 256;  ///< line nodes for P applied to the kernel
};

/// One verification run. Keys absent from the JSON document take the
/// scenario's defaults.
struct ScenarioConfig {
    std::string scenario;
    std::array<Complex, 4> weights{};  ///< theta1, theta2, phi1, phi2 (constants)
    AlphaVec alpha;
    Rect4 rect;
    BCBall ball;
    GridSpec grids;
    std::string testfield = "z";
    int refine_levels = 3;
    double tolerance = 1e-2;
    Bicomplex anchor;  ///< W, held fixed
    Bicomplex point;   ///< Q or Z, depending on the scenario

    WeightPairBC weight_pair() const;
};

struct ScenarioInfo {
    std::string name;
    std::string description;
};

/// The twelve scenarios in their stable listing order.
const std::vector<ScenarioInfo>& list_scenarios();
bool scenario_exists(std::string_view name);

/// Defaults for a scenario; throws ConfigError for an unknown name.
ScenarioConfig default_config(std::string_view scenario);

/// Parses a flat JSON document. `scenario_override`, when nonempty, takes
/// precedence over the document's "scenario" key. Throws ConfigError on
/// malformed input, unknown keys or wrong types.
ScenarioConfig parse_config(std::string_view json_text, std::string_view scenario_override = {});

/// Reads and parses a config file; IoError if it cannot be read.
ScenarioConfig load_config(const std::string& path, std::string_view scenario_override = {});

/// Range and containment checks; throws ConfigError.
void validate_config(const ScenarioConfig& cfg);

struct ResultRow {
    std::string scenario;
    int level = 0;
    double h = 0.0;
    double residual = 0.0;
    std::optional<double> order_estimate;  ///< from levels 0..level, once three exist
    std::optional<Complex> c_empirical1;
    std::optional<Complex> c_empirical2;
    double elapsed_ms = 0.0;

    bool operator==(const ResultRow&) const = default;
};

struct RunOptions {
    std::optional<int> refine;  ///< overrides cfg.refine_levels
    bool parallel = false;      ///< run levels on separate threads
    bool timing = false;        ///< record elapsed_ms (otherwise 0 for reproducible output)
};

/// Runs every refinement level; rows are ordered by level.
std::vector<ResultRow> run_scenario(const ScenarioConfig& cfg, const RunOptions& options = {});

/// Informational lines printed next to the table (e.g. the c_psi formula value).
std::vector<std::string> scenario_notes(const ScenarioConfig& cfg);

/// True when the finest level's residual is finite and within tolerance.
bool rows_pass(const std::vector<ResultRow>& rows, double tolerance);

enum class OutputFormat { csv, json };

/// By extension: ".json" selects JSON, anything else CSV.
OutputFormat format_for_path(std::string_view path);

inline constexpr std::string_view kCsvHeader =
    "scenario,level,h,residual,order_estimate,c_empirical_re1,c_empirical_im1,c_empirical_re2,c_empirical_im2,"
    "elapsed_ms";

std::string to_csv(const std::vector<ResultRow>& rows);
std::string to_json(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_results_json(std::string_view text);

/// Writes the rows; throws IoError on failure.
void emit_results(const std::vector<ResultRow>& rows, OutputFormat format, const std::string& path);

}  // namespace bcfrac
