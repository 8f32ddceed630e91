// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "bcfrac/errors.hpp"
#include "bcfrac/frac1d.hpp"
#include "bcfrac/harness.hpp"
#include "bcfrac/registry.hpp"
#include "support.hpp"

using namespace bcfrac;
using testing::bc_err;
using testing::rel_err;

namespace {

const Complex I(0.0, 1.0);
const double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

std::array<Bicomplex, 5> interior_points() {
    return {Bicomplex(Complex(0.3, 0.1), Complex(0.2, -0.4)), Bicomplex(Complex(-0.2, 0.35), Complex(0.35, 0.25)),
            Bicomplex(Complex(0.1, -0.4), Complex(-0.3, -0.1)), Bicomplex(Complex(-0.45, -0.2), Complex(0.15, 0.45)),
            Bicomplex(Complex(0.05, 0.5), Complex(-0.4, 0.2))};
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t k = 1; k < v.size(); ++k)
        if (!(v[k] < v[k - 1])) return false;
    return true;
}

Outcome algebra() {
    testing::Rng rng(1);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Bicomplex a = rng.bicomplex(3), b = rng.bicomplex(3), c = rng.bicomplex(3);
        const auto rel = [](const Bicomplex& x, const Bicomplex& y) {
            return bc_err(x, y) / std::max(1.0, bc_err(y, {}));
        };
        worst = std::max(worst, rel(a + b, b + a));
        worst = std::max(worst, rel(a * b, b * a));
        worst = std::max(worst, rel((a * b) * c, a * (b * c)));
        worst = std::max(worst, rel(a * (b + c), a * b + a * c));
        // Cartesian product w = w1 + j w2 against the idempotent product.
        const auto [a1, a2] = bc_to_cartesian(a);
        const auto [b1, b2] = bc_to_cartesian(b);
        worst = std::max(worst, rel(a * b, bc_from_cartesian(a1 * b1 - a2 * b2, a1 * b2 + a2 * b1)));
        worst = std::max(worst, rel(Bicomplex::e() * a + Bicomplex::e_dagger() * a, a));
        worst = std::max(worst, rel(Bicomplex::e() * Bicomplex::e_dagger() * a, Bicomplex()));
        const Hyperbolic m = bc_modulus_k(a);
        const Bicomplex sq(m.l1 * m.l1, m.l2 * m.l2);
        worst = std::max(worst, rel(a * bc_conj_star(a), sq));
        worst = std::max(worst, rel(bc_conj_star(a) * a, sq));
        worst = std::max(worst, rel(bc_inner_k(a, a), sq));
    }
    return {worst <= 1e-12, fmt("1000 randomized identities, max rel err %.2e (tol 1e-12)", worst)};
}

Outcome constant_derivative() {
    const Segment seg(0.0, 1.0);
    const FracScheme scheme{4096, 1.0};
    const LineFunction one = [](double) { return Complex(1.0); };
    double worst = 0.0;
    for (double alpha : {0.25, 0.5, 0.75})
        for (int j = 1; j <= 10; ++j) {
            const double x = 0.1 * j;
            worst = std::max(worst, rel_err(rl_derivative(one, seg, alpha, x, Side::left, scheme),
                                            std::pow(x, -alpha) / std::tgamma(1.0 - alpha)));
        }
    return {worst <= 1e-2, fmt("L1 derivative of 1, n = 4096, max rel err %.2e (tol 1e-2)", worst)};
}

Outcome fundamental_theorem() {
    const Segment seg(0.0, 1.0);
    double worst = 0.0, min_order = std::numeric_limits<double>::infinity();
    for (double beta : {0.0, 1.0, 2.0}) {
        const LineFunction f = [beta](double t) { return Complex(std::pow(t, beta)); };
        for (double alpha : {0.25, 0.5, 0.75}) {
            std::vector<ResidualSample> samples;
            for (int n : {1024, 2048, 4096}) {
                const FracScheme scheme{n, 1.0};
                const LineFunction inner = [&](double t) { return rl_integral(f, seg, alpha, t, Side::left, scheme); };
                double r = 0.0;
                for (int j = 1; j <= 9; ++j) {
                    const double x = 0.1 * j;
                    r = std::max(r, std::abs(rl_derivative(inner, seg, alpha, x, Side::left, scheme) - f(x)));
                }
                samples.push_back({1.0 / n, r});
            }
            worst = std::max(worst, samples.back().r);
            min_order = std::min(min_order, estimate_order(samples));
        }
    }
    return {worst <= 1e-2 && min_order >= 1.0,
            fmt("sup error %.2e at n = 4096 (tol 1e-2), min observed order %.2f (need >= 1)", worst, min_order)};
}

Outcome power_rule() {
    const Segment seg(0.0, 1.0);
    const FracScheme scheme{4096, 1.0};
    double worst = 0.0;
    for (double beta : {0.0, 1.0, 2.0}) {
        const LineFunction f = [beta](double t) { return Complex(std::pow(t, beta)); };
        for (double alpha : {0.25, 0.5, 0.75})
            for (int j = 1; j <= 10; ++j) {
                const double x = 0.1 * j;
                worst = std::max(worst, rel_err(rl_derivative(f, seg, alpha, x, Side::left, scheme),
                                                rl_power_oracle(beta, alpha, 0.0, x)));
            }
    }
    return {worst <= 1e-2, fmt("9 (beta, alpha) pairs, n = 4096, max rel err %.2e (tol 1e-2)", worst)};
}

Outcome classical_bp() {
    const BCBall unit{Bicomplex(), {1.0, 1.0}};
    const BCProductField sq = registry_field("z2"), star = registry_field("zbar");
    double holo = 0.0, area = 0.0, anti = 0.0;
    for (const auto& w : interior_points()) {
        const auto r = bbpf_reconstruct(sq, unit, w, {16, 512});
        holo = std::max({holo, rel_err(r.value.z1, sq(w).z1), rel_err(r.value.z2, sq(w).z2)});
        area = std::max(area, bc_err(r.area, {}));
        const auto s = bbpf_reconstruct(star, unit, w, {200, 256});
        anti = std::max({anti, rel_err(s.value.z1, star(w).z1), rel_err(s.value.z2, star(w).z2)});
    }
    return {holo <= 1e-8 && area <= 1e-10 && anti <= 1e-3,
            fmt("Z^2 rel err %.2e (tol 1e-8), area %.2e (tol 1e-10); Z* rel err %.2e (tol 1e-3)", holo, area, anti)};
}

Outcome reductions() {
    // Analytic Wirtinger derivatives (d/dz, d/dzbar) per registry entry and component.
    struct Wirtinger {
        std::function<Complex(Complex)> dz, dzbar;
    };
    const auto zero = [](Complex) { return Complex(0.0); };
    const auto unit = [](Complex) { return Complex(1.0); };
    const std::vector<std::pair<std::string, std::array<Wirtinger, 2>>> table{
        {"one", {Wirtinger{zero, zero}, Wirtinger{zero, zero}}},
        {"z", {Wirtinger{unit, zero}, Wirtinger{unit, zero}}},
        {"z2", {Wirtinger{[](Complex z) { return 2.0 * z; }, zero}, Wirtinger{[](Complex z) { return 2.0 * z; }, zero}}},
        {"zbar", {Wirtinger{zero, unit}, Wirtinger{zero, unit}}},
        {"z_plus_3", {Wirtinger{unit, zero}, Wirtinger{unit, zero}}},
        {"mixed", {Wirtinger{zero, unit}, Wirtinger{unit, zero}}},
    };
    const Complex h(0.5), ih(0.0, 0.5);
    struct Case {
        WeightPairBC w;
        bool bar1, bar2;
    };
    const std::array<Case, 4> cases{Case{WeightPairBC::constant(h, h, ih, ih), true, true},
                                    Case{WeightPairBC::constant(h, h, -ih, -ih), false, false},
                                    Case{WeightPairBC::constant(h, h, ih, -ih), true, false},
                                    Case{WeightPairBC::constant(h, h, -ih, ih), false, true}};
    double worst = 0.0;
    std::size_t checked = 0;
    for (const auto& [name, wirt] : table) {
        const BCProductField f = registry_field(name);
        for (const auto& z : interior_points())
            for (const auto& c : cases) {
                const Bicomplex got = apply_D_thetaphi(f, c.w, z);
                const Complex want1 = c.bar1 ? wirt[0].dzbar(z.z1) : wirt[0].dz(z.z1);
                const Complex want2 = c.bar2 ? wirt[1].dzbar(z.z2) : wirt[1].dz(z.z2);
                worst = std::max({worst, std::abs(got.z1 - want1), std::abs(got.z2 - want2)});
                ++checked;
            }
    }
    const bool covered = checked == registry_names().size() * 5 * cases.size();
    return {covered && worst <= 1e-8,
            fmt("4 weight choices x %.0f fields x 5 points, max err %.2e (tol 1e-8)",
                static_cast<double>(registry_names().size()), worst)};
}

Outcome normalization() {
    auto cp = default_config("complex-cp");
    cp.refine_levels = 1;
    const double complex_spread = run_scenario(cp).back().residual;
    auto bp = default_config("bc-weighted-bp");
    bp.refine_levels = 1;
    const double bc_spread = run_scenario(bp).back().residual;
    const double cpsi = std::abs(compute_c_psi(1.0, I, 1.0, 1.0, kPi / 2.0, 256) - 2.0 * kPi);
    return {complex_spread <= 1e-3 && bc_spread <= 1e-3 && cpsi <= 1e-10,
            fmt("c_empirical spread: complex %.2e, bicomplex %.2e (tol 1e-3); |c_psi - 2 pi| = %.2e (tol 1e-10)",
                complex_spread, bc_spread, cpsi)};
}

Outcome factorization() {
    const FracEvalPoint p{Bicomplex(Complex(0.5, 0.5), Complex(0.5, 0.5)), Bicomplex(Complex(0.6, 0.4), Complex(0.3, 0.7))};
    const WeightPairBC w = WeightPairBC::constant(0.5, Complex(0.0, 0.5));
    double finest = 0.0;
    bool monotone = true;
    for (const char* name : {"one", "z"}) {
        std::vector<double> r1, r2;
        for (int n : {1024, 2048, 4096}) {
            const auto r = di_residuals(registry_field(name), p, AlphaVec::uniform(0.5), w, Rect4{}, {n, 1.0});
            r1.push_back(r.r1);
            r2.push_back(r.r2);
        }
        monotone = monotone && strictly_decreasing(r1) && strictly_decreasing(r2);
        finest = std::max({finest, r1.back(), r2.back()});
    }
    return {monotone && finest <= 1e-2,
            fmt("max(r1, r2) at n = 4096: %.2e (tol 1e-2), monotone over 3 levels: ", finest) +
                (monotone ? "yes" : "no")};
}

Outcome levels_check(const char* scenario, double tol, const char* label) {
    const auto rows = run_scenario(default_config(scenario));
    std::vector<double> r;
    for (const auto& row : rows) r.push_back(row.residual);
    const bool ok = rows.size() == 3 && strictly_decreasing(r) && r.back() <= tol;
    std::string detail = std::string(label) + " residuals";
    for (double v : r) detail += fmt(" %.2e", v);
    detail += fmt(" (tol %.0e, strictly decreasing: ", tol) + (strictly_decreasing(r) ? "yes)" : "no)");
    if (rows.back().c_empirical1) detail += fmt(", c_hat = %.4f%+.4fi", rows.back().c_empirical1->real(), rows.back().c_empirical1->imag());
    return {ok, detail};
}

Outcome determinism() {
    std::size_t identical = 0;
    RunOptions once;
    once.refine = 1;
    for (const auto& s : list_scenarios()) {
        const auto cfg = default_config(s.name);
        if (to_csv(run_scenario(cfg, once)) == to_csv(run_scenario(cfg, once))) ++identical;
    }
    return {identical == list_scenarios().size(),
            fmt("%.0f of %.0f scenarios rerun to byte-identical CSV", static_cast<double>(identical),
                static_cast<double>(list_scenarios().size()))};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"algebra suite", algebra},
        {"derivative of a constant", constant_derivative},
        {"fundamental theorem", fundamental_theorem},
        {"power-rule oracle", power_rule},
        {"classical bicomplex Borel-Pompeiu", classical_bp},
        {"special weight reductions", reductions},
        {"normalization invariance", normalization},
        {"derivative-integral factorization", factorization},
        {"fractional Gauss theorem", [] { return levels_check("frac-gauss", 5e-2, "F = 1"); }},
        {"fractional Borel-Pompeiu", [] { return levels_check("frac-bp", 5e-2, "f_l(z) = z"); }},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[k].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%2zu] %s: %s [%.1f s]\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                    out.detail.c_str(), secs);
        std::fflush(stdout);
        failures += out.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
