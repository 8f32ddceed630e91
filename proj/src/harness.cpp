#include "bcfrac/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bcfrac/errors.hpp"
#include "bcfrac/registry.hpp"

namespace bcfrac {

namespace {

using json = nlohmann::json;

const Complex kI(0.0, 1.0);

struct LevelResult {
    double h = 0.0;
    double residual = 0.0;
    std::optional<Complex> c1;
    std::optional<Complex> c2;
};

using LevelRunner = std::function<LevelResult(const ScenarioConfig&, int level)>;

int scaled(int n, int level) { return n << level; }

// Five fixed interior points per component, as fractions of the radius.
const std::array<Complex, 5> kOffsets1{Complex(0.3, 0.1), Complex(-0.2, 0.35), Complex(0.1, -0.4),
                                       Complex(-0.45, -0.2), Complex(0.05, 0.5)};
const std::array<Complex, 5> kOffsets2{Complex(0.2, -0.4), Complex(0.35, 0.25), Complex(-0.3, -0.1),
                                       Complex(0.15, 0.45), Complex(-0.4, 0.2)};

std::array<Bicomplex, 5> interior_points(const BCBall& ball) {
    std::array<Bicomplex, 5> out;
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = {ball.center.z1 + ball.radius.l1 * kOffsets1[j], ball.center.z2 + ball.radius.l2 * kOffsets2[j]};
    return out;
}

std::string companion_field(const std::string& testfield) { return testfield == "z_plus_3" ? "one" : "z_plus_3"; }

double relative_spread(const std::vector<Complex>& values) {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    Complex mean = 0.0;
    for (const auto& v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double spread = 0.0;
    for (const auto& v : values) spread = std::max(spread, std::abs(v - mean));
    return spread / std::abs(mean);
}

Complex mean_of(const std::vector<Complex>& values) {
    Complex mean = 0.0;
    for (const auto& v : values) mean += v;
    return values.empty() ? mean : mean / static_cast<double>(values.size());
}

double relative_error(Complex got, Complex want) {
    const double err = std::abs(got - want);
    return std::abs(want) > 0.0 ? err / std::abs(want) : err;
}

LineFunction real_line(const ComplexField& f) {
    return [f](double t) { return f(Complex(t, 0.0)); };
}

LevelResult run_frac1d_fundamental(const ScenarioConfig& cfg, int level) {
    const int n = scaled(cfg.grids.n_line, level);
    const FracScheme scheme{n, 1.0};
    const Segment seg(0.0, 1.0);
    const double alpha = cfg.alpha[0];
    const LineFunction f = real_line(registry_component(cfg.testfield, 1));
    const LineFunction integral = [&](double t) { return rl_integral(f, seg, alpha, t, Side::left, scheme); };
    double worst = 0.0;
    for (int j = 1; j <= 9; ++j) {
        const double x = 0.1 * j;
        worst = std::max(worst, std::abs(rl_derivative(integral, seg, alpha, x, Side::left, scheme) - f(x)));
    }
    return {1.0 / n, worst, std::nullopt, std::nullopt};
}

LevelResult run_frac1d_constant(const ScenarioConfig& cfg, int level) {
    const int n = scaled(cfg.grids.n_line, level);
    const FracScheme scheme{n, 1.0};
    const Segment seg(0.0, 1.0);
    const double alpha = cfg.alpha[0];
    const LineFunction one = [](double) { return Complex(1.0); };
    double worst = 0.0;
    for (int j = 1; j <= 10; ++j) {
        const double x = 0.1 * j;
        worst = std::max(worst, relative_error(rl_derivative(one, seg, alpha, x, Side::left, scheme),
                                               rl_power_oracle(0.0, alpha, 0.0, x)));
    }
    return {1.0 / n, worst, std::nullopt, std::nullopt};
}

LevelResult run_complex_gauss(const ScenarioConfig& cfg, int level) {
    const Disk disk = cfg.ball.disk(1, scaled(cfg.grids.n_r, level), scaled(cfg.grids.n_theta, level));
    const auto balance =
        gauss_residual_complex(registry_component(cfg.testfield, 1), cfg.weight_pair().component(1), disk);
    return {disk.boundary().spacing(), balance.residual(), std::nullopt, std::nullopt};
}

LevelResult run_complex_cp(const ScenarioConfig& cfg, int level) {
    const Disk disk = cfg.ball.disk(1, scaled(cfg.grids.n_r, level), scaled(cfg.grids.n_theta, level));
    const PsiPair psi = cfg.weight_pair().component(1);
    std::vector<Complex> cs;
    for (const auto& name : {cfg.testfield, companion_field(cfg.testfield)}) {
        const ComplexField f = registry_component(name, 1);
        for (const auto& p : interior_points(cfg.ball)) {
            const auto r = cauchy_pompeiu_reconstruct(f, psi, disk, p.z1);
            if (r.c_empirical) cs.push_back(*r.c_empirical);
        }
    }
    return {disk.boundary().spacing(), relative_spread(cs), mean_of(cs), std::nullopt};
}

LevelResult run_bbpf(const ScenarioConfig& cfg, int level) {
    const BallGrid grid{scaled(cfg.grids.n_r, level), scaled(cfg.grids.n_theta, level)};
    const BCProductField f = registry_field(cfg.testfield);
    double worst = 0.0;
    for (const auto& p : interior_points(cfg.ball)) {
        const auto r = bbpf_reconstruct(f, cfg.ball, p, grid);
        const Bicomplex want = f(p);
        worst = std::max({worst, relative_error(r.value.z1, want.z1), relative_error(r.value.z2, want.z2)});
    }
    return {cfg.ball.disk(1, grid.nr, grid.nth).boundary().spacing(), worst, std::nullopt, std::nullopt};
}

LevelResult run_bc_orthogonality(const ScenarioConfig& cfg, int) {
    std::mt19937_64 rng(20221017);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Bicomplex> probes(100);
    for (auto& p : probes) {
        p = {cfg.ball.center.z1 + cfg.ball.radius.l1 * Complex(unit(rng), unit(rng)),
             cfg.ball.center.z2 + cfg.ball.radius.l2 * Complex(unit(rng), unit(rng))};
    }
    const auto report = bc_weights_orthogonal(cfg.weight_pair(), probes);
    double residual = std::max(report.max_inner, report.max_form_gap);
    if (report.inner_form != report.proposition_form) residual = std::numeric_limits<double>::infinity();
    return {0.0, residual, std::nullopt, std::nullopt};
}

LevelResult run_bc_gauss(const ScenarioConfig& cfg, int level) {
    const BallGrid grid{scaled(cfg.grids.n_r, level), scaled(cfg.grids.n_theta, level)};
    const auto balance = bc_gauss_residual(registry_field(cfg.testfield), cfg.weight_pair(), cfg.ball, grid);
    return {cfg.ball.disk(1, grid.nr, grid.nth).boundary().spacing(), balance.residual(), std::nullopt, std::nullopt};
}

LevelResult run_bc_weighted_bp(const ScenarioConfig& cfg, int level) {
    const BallGrid grid{scaled(cfg.grids.n_r, level), scaled(cfg.grids.n_theta, level)};
    const WeightPairBC w = cfg.weight_pair();
    std::vector<Complex> c1, c2;
    for (const auto& name : {cfg.testfield, companion_field(cfg.testfield)}) {
        const BCProductField f = registry_field(name);
        for (const auto& p : interior_points(cfg.ball)) {
            const auto r = bc_weighted_bp_reconstruct(f, w, cfg.ball, p, grid);
            if (!r.c_empirical) continue;
            c1.push_back(r.c_empirical->z1);
            c2.push_back(r.c_empirical->z2);
        }
    }
    return {cfg.ball.disk(1, grid.nr, grid.nth).boundary().spacing(),
            std::max(relative_spread(c1), relative_spread(c2)), mean_of(c1), mean_of(c2)};
}

LevelResult run_di(const ScenarioConfig& cfg, int level) {
    const FracScheme scheme{scaled(cfg.grids.n_line, level), 1.0};
    const auto r = di_residuals(registry_field(cfg.testfield), {cfg.anchor, cfg.point}, cfg.alpha,
                                cfg.weight_pair(), cfg.rect, scheme);
    return {1.0 / scheme.n, std::max(r.r1, r.r2), std::nullopt, std::nullopt};
}

LevelResult run_frac_gauss(const ScenarioConfig& cfg, int level) {
    const FracScheme scheme{scaled(cfg.grids.n_line, level), 1.0};
    const int nb = scaled(cfg.grids.n_r, level);
    const auto balance = frac_gauss_residual(registry_field(cfg.testfield), cfg.anchor, cfg.alpha, cfg.weight_pair(),
                                             cfg.rect, scheme, nb);
    return {(cfg.rect.b1 - cfg.rect.a1) / nb, balance.residual(), std::nullopt, std::nullopt};
}

LevelResult run_frac_bp(const ScenarioConfig& cfg, int level) {
    const FracScheme scheme{scaled(cfg.grids.n_line, level), 1.0};
    const FracBPGrid grid{scaled(cfg.grids.n_r, level), scaled(cfg.grids.n_theta, level),
                          scaled(cfg.grids.n_kernel, level)};
    const auto r = frac_bp_reconstruct(registry_field(cfg.testfield), cfg.anchor, cfg.point, cfg.ball, cfg.alpha,
                                       cfg.weight_pair(), cfg.rect, scheme, grid);
    return {cfg.ball.disk(1, grid.nr, grid.nth).boundary().spacing(), r.residual, r.c_hat.z1, r.c_hat.z2};
}

LevelResult run_reductions(const ScenarioConfig& cfg, int level) {
    const Complex half(0.5), ih(0.0, 0.5);
    struct Case {
        WeightPairBC w;
        bool conj1, conj2;  // true: d/dzbar on that component, false: d/dz
    };
    const std::array<Case, 4> cases{
        Case{WeightPairBC::constant(half, half, ih, ih), true, true},
        Case{WeightPairBC::constant(half, half, -ih, -ih), false, false},
        Case{WeightPairBC::constant(half, half, ih, -ih), true, false},
        Case{WeightPairBC::constant(half, half, -ih, ih), false, true},
    };
    double worst = 0.0;
    for (const auto& name : registry_names()) {
        const BCProductField f = registry_field(name);
        for (const auto& p : interior_points(cfg.ball)) {
            for (const auto& c : cases) {
                const Bicomplex got = apply_D_thetaphi(f, c.w, p);
                const Complex want1 = c.conj1 ? wirtinger_dzbar(f.f1, p.z1) : wirtinger_dz(f.f1, p.z1);
                const Complex want2 = c.conj2 ? wirtinger_dzbar(f.f2, p.z2) : wirtinger_dz(f.f2, p.z2);
                worst = std::max({worst, std::abs(got.z1 - want1), std::abs(got.z2 - want2)});
            }
        }
    }
    // Fractional derivative with theta = 1, phi = i assembles the two axis derivatives.
    const FracScheme scheme{scaled(cfg.grids.n_line, level), 1.0};
    const FracEvalPoint fp{cfg.anchor, cfg.point};
    for (const auto& name : registry_names()) {
        const BCProductField f = registry_field(name);
        const Bicomplex holo = frac_D(f, fp, cfg.alpha, WeightPairBC::constant(1.0, kI), cfg.rect, FracSide::a_plus, scheme);
        const Bicomplex dx = frac_D(f, fp, cfg.alpha, WeightPairBC::constant(1.0, 0.0), cfg.rect, FracSide::a_plus, scheme);
        const Bicomplex dy = frac_D(f, fp, cfg.alpha, WeightPairBC::constant(0.0, 1.0), cfg.rect, FracSide::a_plus, scheme);
        const Bicomplex gap = holo - (dx + Bicomplex::unit_i() * dy);
        worst = std::max({worst, std::abs(gap.z1), std::abs(gap.z2)});
    }
    return {0.0, worst, std::nullopt, std::nullopt};
}

struct ScenarioEntry {
    ScenarioInfo info;
    LevelRunner runner;
};

const std::vector<ScenarioEntry>& entries() {
    static const std::vector<ScenarioEntry> table{
        {{"frac1d-fundamental", "D^a I^a f = f for the Riemann-Liouville operators on [0,1]"}, run_frac1d_fundamental},
        {{"frac1d-constant", "D^a 1 = (x-a)^-a / Gamma(1-a)"}, run_frac1d_constant},
        {{"complex-gauss", "psi-weighted Gauss theorem on a disk"}, run_complex_gauss},
        {{"complex-cp", "psi-weighted Cauchy-Pompeiu formula, c_empirical invariance"}, run_complex_cp},
        {{"bbpf", "bicomplex Borel-Pompeiu reconstruction of F(W)"}, run_bbpf},
        {{"bc-orthogonality", "<theta, phi>_k = 0 and its componentwise equivalent form"}, run_bc_orthogonality},
        {{"bc-gauss", "(theta,phi)-weighted bicomplex Gauss theorem"}, run_bc_gauss},
        {{"bc-weighted-bp", "(theta,phi)-weighted bicomplex Borel-Pompeiu, c_empirical invariance"},
         run_bc_weighted_bp},
        {{"di-factorization", "D = d/dZ_theta,phi o I and P o I = mixed sum + T"}, run_di},
        {{"frac-gauss", "Gauss theorem for the fractional operator on the box"}, run_frac_gauss},
        {{"frac-bp", "fractional Borel-Pompeiu formula with calibrated normalization"}, run_frac_bp},
        {{"reductions", "special weights reduce to d/dZ*, d/dZ and the mixed operators"}, run_reductions},
    };
    return table;
}

const ScenarioEntry& entry_for(std::string_view name) {
    for (const auto& e : entries())
        if (e.info.name == name) return e;
    throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

// ---- JSON helpers ----

Complex read_complex(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError(what + ": expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Bicomplex read_bicomplex(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) throw ConfigError(what + ": expected [[re, im], [re, im]]");
    return {read_complex(j[0], what), read_complex(j[1], what)};
}

double read_number(const json& j, const std::string& what) {
    if (!j.is_number()) throw ConfigError(what + ": expected a number");
    return j.get<double>();
}

int read_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ConfigError(what + ": expected an integer");
    return j.get<int>();
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_number(double v) {
    return std::isfinite(v) ? format_double(v) : "\"" + format_double(v) + "\"";
}

std::string json_optional(const std::optional<double>& v) { return v ? json_number(*v) : "null"; }

std::string csv_optional(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::optional<double> part(const std::optional<Complex>& c, bool imag) {
    if (!c) return std::nullopt;
    return imag ? c->imag() : c->real();
}

double json_to_double(const json& j, const std::string& key) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw ConfigError("results: bad value for '" + key + "'");
}

std::optional<double> json_to_optional(const json& j, const std::string& key) {
    if (j.is_null()) return std::nullopt;
    return json_to_double(j, key);
}

std::optional<Complex> join(const std::optional<double>& re, const std::optional<double>& im) {
    if (!re && !im) return std::nullopt;
    return Complex(re.value_or(0.0), im.value_or(0.0));
}

}  // namespace

WeightPairBC ScenarioConfig::weight_pair() const {
    return WeightPairBC::constant(weights[0], weights[1], weights[2], weights[3]);
}

const std::vector<ScenarioInfo>& list_scenarios() {
    static const std::vector<ScenarioInfo> infos = [] {
        std::vector<ScenarioInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

bool scenario_exists(std::string_view name) {
    const auto& list = list_scenarios();
    return std::any_of(list.begin(), list.end(), [&](const ScenarioInfo& s) { return s.name == name; });
}

ScenarioConfig default_config(std::string_view scenario) {
    entry_for(scenario);
    const Complex half(0.5), ih(0.0, 0.5);
    ScenarioConfig c;
    c.scenario = std::string(scenario);
    c.weights = {half, half, ih, ih};
    c.alpha = AlphaVec::uniform(0.5);
    c.ball = {Bicomplex(0.0, 0.0), {1.0, 1.0}};
    c.anchor = {Complex(0.5, 0.5), Complex(0.5, 0.5)};
    c.point = {Complex(0.6, 0.4), Complex(0.3, 0.7)};

    if (scenario == "frac1d-fundamental") {
        c.testfield = "z2";
    } else if (scenario == "frac1d-constant") {
        c.testfield = "one";
    } else if (scenario == "complex-gauss") {
        c.weights = {1.0, 1.0, kI, kI};
        c.testfield = "zbar";
        c.tolerance = 1e-8;
    } else if (scenario == "complex-cp") {
        c.weights = {1.0, 1.0, kI, kI};
        c.testfield = "one";
        c.grids.n_r = 32;
        c.grids.n_theta = 128;
        c.tolerance = 1e-3;
    } else if (scenario == "bbpf") {
        c.testfield = "z2";
        c.grids.n_theta = 512;
        c.refine_levels = 1;
        c.tolerance = 1e-8;
    } else if (scenario == "bc-orthogonality") {
        c.refine_levels = 1;
        c.tolerance = 1e-12;
    } else if (scenario == "bc-gauss") {
        c.testfield = "zbar";
        c.tolerance = 1e-5;
    } else if (scenario == "bc-weighted-bp") {
        c.testfield = "one";
        c.grids.n_r = 32;
        c.grids.n_theta = 128;
        c.refine_levels = 2;
        c.tolerance = 1e-3;
    } else if (scenario == "di-factorization") {
        c.testfield = "z";
    } else if (scenario == "frac-gauss") {
        c.testfield = "one";
        c.grids.n_line = 512;
        c.tolerance = 5e-2;
    } else if (scenario == "frac-bp") {
        c.testfield = "z";
        c.ball = {Bicomplex(Complex(0.4, 0.4), Complex(0.4, 0.4)), {0.4, 0.4}};
        c.point = c.ball.center;
        c.grids.n_line = 128;
        c.tolerance = 5e-2;
    } else if (scenario == "reductions") {
        c.grids.n_line = 256;
        c.refine_levels = 1;
        c.tolerance = 1e-8;
    }
    return c;
}

ScenarioConfig parse_config(std::string_view json_text, std::string_view scenario_override) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(doc,
                   {"scenario", "weights", "alpha", "rect", "ball", "grids", "testfield", "refine_levels",
                    "tolerance", "anchor", "point"},
                   "config");

    std::string scenario(scenario_override);
    if (doc.contains("scenario")) {
        if (!doc["scenario"].is_string()) throw ConfigError("scenario: expected a string");
        if (scenario.empty()) scenario = doc["scenario"].get<std::string>();
    }
    if (scenario.empty()) throw ConfigError("no scenario given");
    ScenarioConfig c = default_config(scenario);

    if (doc.contains("weights")) {
        const json& w = doc["weights"];
        if (!w.is_object()) throw ConfigError("weights: expected an object");
        reject_unknown(w, {"theta1", "theta2", "phi1", "phi2"}, "weights");
        const std::array<const char*, 4> keys{"theta1", "theta2", "phi1", "phi2"};
        for (std::size_t k = 0; k < keys.size(); ++k)
            if (w.contains(keys[k])) c.weights[k] = read_complex(w[keys[k]], std::string("weights.") + keys[k]);
    }
    if (doc.contains("alpha")) {
        const json& a = doc["alpha"];
        if (a.is_number()) {
            c.alpha = AlphaVec::uniform(a.get<double>());
        } else {
            if (!a.is_array() || a.size() != 4) throw ConfigError("alpha: expected a number or 4 numbers");
            for (std::size_t k = 0; k < 4; ++k) c.alpha.a[k] = read_number(a[k], "alpha");
        }
    }
    if (doc.contains("rect")) {
        const json& r = doc["rect"];
        if (!r.is_array() || r.size() != 8) throw ConfigError("rect: expected 8 numbers a1,b1,c1,d1,a2,b2,c2,d2");
        std::array<double, 8> v{};
        for (std::size_t k = 0; k < 8; ++k) v[k] = read_number(r[k], "rect");
        c.rect = {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
    }
    bool point_given = doc.contains("point");
    if (doc.contains("ball")) {
        const json& b = doc["ball"];
        if (!b.is_object()) throw ConfigError("ball: expected an object");
        reject_unknown(b, {"center", "radius"}, "ball");
        if (b.contains("center")) c.ball.center = read_bicomplex(b["center"], "ball.center");
        if (b.contains("radius")) {
            const json& r = b["radius"];
            if (!r.is_array() || r.size() != 2) throw ConfigError("ball.radius: expected [r1, r2]");
            c.ball.radius = {read_number(r[0], "ball.radius"), read_number(r[1], "ball.radius")};
        }
        if (c.scenario == "frac-bp" && !point_given) c.point = c.ball.center;
    }
    if (doc.contains("grids")) {
        const json& g = doc["grids"];
        if (!g.is_object()) throw ConfigError("grids: expected an object");
        reject_unknown(g, {"n_line", "n_theta", "n_r", "n_kernel"}, "grids");
        if (g.contains("n_line")) c.grids.n_line = read_int(g["n_line"], "grids.n_line");
        if (g.contains("n_theta")) c.grids.n_theta = read_int(g["n_theta"], "grids.n_theta");
        if (g.contains("n_r")) c.grids.n_r = read_int(g["n_r"], "grids.n_r");
        if (g.contains("n_kernel")) c.grids.n_kernel = read_int(g["n_kernel"], "grids.n_kernel");
    }
    if (doc.contains("testfield")) {
        if (!doc["testfield"].is_string()) throw ConfigError("testfield: expected a string");
        c.testfield = doc["testfield"].get<std::string>();
    }
    if (doc.contains("refine_levels")) c.refine_levels = read_int(doc["refine_levels"], "refine_levels");
    if (doc.contains("tolerance")) c.tolerance = read_number(doc["tolerance"], "tolerance");
    if (doc.contains("anchor")) c.anchor = read_bicomplex(doc["anchor"], "anchor");
    if (point_given) c.point = read_bicomplex(doc["point"], "point");
    return c;
}

ScenarioConfig load_config(const std::string& path, std::string_view scenario_override) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), scenario_override);
}

void validate_config(const ScenarioConfig& c) {
    const auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (!scenario_exists(c.scenario)) fail("unknown scenario '" + c.scenario + "'");
    for (const auto& w : c.weights)
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) fail("weights must be finite");
    for (double a : c.alpha.a)
        if (!(a > 0.0 && a < 1.0)) fail("alpha entries must lie in (0,1)");
    const Rect4& r = c.rect;
    if (!(r.a1 < r.b1 && r.c1 < r.d1 && r.a2 < r.b2 && r.c2 < r.d2)) fail("rect: each lower bound must be below its upper bound");
    if (!c.ball.center.is_finite() || !c.ball.radius.positive()) fail("ball: finite center and positive radii required");
    if (c.grids.n_line < 16) fail("grids.n_line must be >= 16");
    if (c.grids.n_theta < 16 || c.grids.n_theta % 4 != 0) fail("grids.n_theta must be >= 16 and a multiple of 4");
    if (c.grids.n_r < 8) fail("grids.n_r must be >= 8");
    if (c.grids.n_kernel < 16) fail("grids.n_kernel must be >= 16");
    if (!registry_contains(c.testfield)) fail("unknown test field '" + c.testfield + "'");
    if (c.refine_levels < 1 || c.refine_levels > 6) fail("refine_levels must lie in 1..6");
    if (!(c.tolerance > 0.0)) fail("tolerance must be positive");

    const bool uses_box = c.scenario == "di-factorization" || c.scenario == "frac-gauss" || c.scenario == "frac-bp" ||
                          c.scenario == "reductions";
    if (uses_box) {
        if (!r.contains(c.anchor)) fail("anchor must lie in rect");
        if (c.scenario != "frac-gauss" && !r.contains(c.point)) fail("point must lie in rect");
    }
    if (c.scenario == "frac-bp") {
        if (!r.contains(c.ball)) fail("ball closure must lie in rect");
        if (!c.ball.contains(c.point)) fail("point must lie inside the ball");
    }
}

std::vector<ResultRow> run_scenario(const ScenarioConfig& cfg, const RunOptions& options) {
    validate_config(cfg);
    const auto& entry = entry_for(cfg.scenario);
    const int levels = options.refine.value_or(cfg.refine_levels);
    if (levels < 1) throw ConfigError("refine must be >= 1");

    std::vector<ResultRow> rows(static_cast<std::size_t>(levels));
    const auto run_level = [&](int level) {
        const auto start = std::chrono::steady_clock::now();
        const LevelResult r = entry.runner(cfg, level);
        const auto stop = std::chrono::steady_clock::now();
        ResultRow& row = rows[static_cast<std::size_t>(level)];
        row.scenario = cfg.scenario;
        row.level = level;
        row.h = r.h;
        row.residual = r.residual;
        row.c_empirical1 = r.c1;
        row.c_empirical2 = r.c2;
        row.elapsed_ms = options.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
    };

    if (options.parallel && levels > 1) {
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(levels));
        std::vector<std::thread> threads;
        for (int level = 0; level < levels; ++level) {
            threads.emplace_back([&, level] {
                try {
                    run_level(level);
                } catch (...) {
                    errors[static_cast<std::size_t>(level)] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    } else {
        for (int level = 0; level < levels; ++level) run_level(level);
    }

    for (std::size_t k = 2; k < rows.size(); ++k) {
        std::vector<ResidualSample> samples;
        for (std::size_t j = 0; j <= k; ++j) samples.push_back({rows[j].h, rows[j].residual});
        try {
            rows[k].order_estimate = estimate_order(samples);
        } catch (const DomainError&) {
            // gridless scenarios or non-finite residuals have no order
        }
    }
    return rows;
}

std::vector<std::string> scenario_notes(const ScenarioConfig& cfg) {
    std::vector<std::string> notes;
    if (cfg.scenario == "complex-cp" || cfg.scenario == "bc-weighted-bp") {
        const int components = cfg.scenario == "complex-cp" ? 1 : 2;
        for (int l = 1; l <= components; ++l) {
            const PsiPair psi = cfg.weight_pair().component(l);
            const double radius = l == 1 ? cfg.ball.radius.l1 : cfg.ball.radius.l2;
            try {
                const Complex c = compute_c_psi(*psi.psi0.constant_value, *psi.psi1.constant_value, radius, radius,
                                                std::numbers::pi / 2.0, 256);
                notes.push_back("c_psi formula, component " + std::to_string(l) + " (r0 = r1 = " +
                                format_double(radius) + ", angle = pi/2): " + format_double(c.real()) + " + " +
                                format_double(c.imag()) + "i");
            } catch (const NumericError& e) {
                notes.push_back("c_psi formula, component " + std::to_string(l) + ": " + e.what());
            }
        }
        notes.emplace_back("c_empirical columns hold the mean of (boundary - area) / f(z) over the sample points");
    }
    if (cfg.scenario == "frac-bp")
        notes.emplace_back("c_empirical columns hold the normalization calibrated on F = 1 at each level");
    return notes;
}

bool rows_pass(const std::vector<ResultRow>& rows, double tolerance) {
    if (rows.empty()) return false;
    const double r = rows.back().residual;
    return std::isfinite(r) && r <= tolerance;
}

OutputFormat format_for_path(std::string_view path) {
    return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? OutputFormat::json : OutputFormat::csv;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += r.scenario + ',' + std::to_string(r.level) + ',' + format_double(r.h) + ',' + format_double(r.residual) +
               ',' + csv_optional(r.order_estimate) + ',' + csv_optional(part(r.c_empirical1, false)) + ',' +
               csv_optional(part(r.c_empirical1, true)) + ',' + csv_optional(part(r.c_empirical2, false)) + ',' +
               csv_optional(part(r.c_empirical2, true)) + ',' + format_double(r.elapsed_ms) + '\n';
    }
    return out;
}

std::string to_json(const std::vector<ResultRow>& rows) {
    std::string out = "[";
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        out += k == 0 ? "\n  {" : ",\n  {";
        out += "\"scenario\": " + json(r.scenario).dump();
        out += ", \"level\": " + std::to_string(r.level);
        out += ", \"h\": " + json_number(r.h);
        out += ", \"residual\": " + json_number(r.residual);
        out += ", \"order_estimate\": " + json_optional(r.order_estimate);
        out += ", \"c_empirical_re1\": " + json_optional(part(r.c_empirical1, false));
        out += ", \"c_empirical_im1\": " + json_optional(part(r.c_empirical1, true));
        out += ", \"c_empirical_re2\": " + json_optional(part(r.c_empirical2, false));
        out += ", \"c_empirical_im2\": " + json_optional(part(r.c_empirical2, true));
        out += ", \"elapsed_ms\": " + json_number(r.elapsed_ms) + "}";
    }
    out += rows.empty() ? "]\n" : "\n]\n";
    return out;
}

std::vector<ResultRow> parse_results_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("results are not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ConfigError("results: expected an array");
    std::vector<ResultRow> rows;
    for (const auto& o : doc) {
        ResultRow r;
        r.scenario = o.at("scenario").get<std::string>();
        r.level = o.at("level").get<int>();
        r.h = json_to_double(o.at("h"), "h");
        r.residual = json_to_double(o.at("residual"), "residual");
        r.order_estimate = json_to_optional(o.at("order_estimate"), "order_estimate");
        r.c_empirical1 = join(json_to_optional(o.at("c_empirical_re1"), "c_empirical_re1"),
                              json_to_optional(o.at("c_empirical_im1"), "c_empirical_im1"));
        r.c_empirical2 = join(json_to_optional(o.at("c_empirical_re2"), "c_empirical_re2"),
                              json_to_optional(o.at("c_empirical_im2"), "c_empirical_im2"));
        r.elapsed_ms = json_to_double(o.at("elapsed_ms"), "elapsed_ms");
        rows.push_back(std::move(r));
    }
    return rows;
}

void emit_results(const std::vector<ResultRow>& rows, OutputFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << (format == OutputFormat::json ? to_json(rows) : to_csv(rows));
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace bcfrac
