#include "bcfrac/frac1d.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <tuple>
#include <string>
#include <vector>

#include "bcfrac/errors.hpp"
#include "bcfrac/gamma.hpp"

namespace bcfrac {

namespace {

void require_order(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError(std::string(who) + ": order must lie in (0,1), got " + std::to_string(alpha));
}

// Normalized weights on the unit mesh sigma_k = 1 - (k/n)^grading. Every
// weight scales with a power of the segment length, so one table per
// (n, grading, alpha) serves all evaluation points.
struct UnitWeights {
    std::vector<double> sigma;       // unit distances, sigma_0 = 1, sigma_n = 0
    std::vector<double> integral;    // product-trapezoid weights for I^alpha (times Gamma(alpha))
    std::vector<double> l1;          // L1 difference coefficients for D^alpha
    double inv_gamma_alpha;          // 1/Gamma(alpha)
    double inv_gamma_1m;             // 1/Gamma(1-alpha)
    double inv_gamma_2m;             // 1/Gamma(2-alpha)
};

UnitWeights build_weights(int n, double grading, double alpha) {
    UnitWeights w;
    w.sigma.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const double u = static_cast<double>(k) / n;
        w.sigma[k] = grading == 1.0 ? 1.0 - u : 1.0 - std::pow(u, grading);
    }
    w.sigma[n] = 0.0;

    std::vector<double> p(w.sigma.size()), q(w.sigma.size());
    for (std::size_t k = 0; k < w.sigma.size(); ++k) {
        p[k] = std::pow(w.sigma[k], alpha);
        q[k] = std::pow(w.sigma[k], 1.0 - alpha);
    }
    w.integral.assign(w.sigma.size(), 0.0);
    w.l1.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double A = w.sigma[k], B = w.sigma[k + 1], h = A - B;
        const double m0 = (p[k] - p[k + 1]) / alpha;
        const double m1 = (A * p[k] - B * p[k + 1]) / (alpha + 1.0);
        w.integral[k] += (m1 - B * m0) / h;
        w.integral[k + 1] += (A * m0 - m1) / h;
        w.l1[k] = (q[k] - q[k + 1]) / h;
    }
    w.inv_gamma_alpha = 1.0 / special::gamma(alpha);
    w.inv_gamma_1m = 1.0 / special::gamma(1.0 - alpha);
    w.inv_gamma_2m = 1.0 / special::gamma(2.0 - alpha);
    return w;
}

const UnitWeights& unit_weights(const FracScheme& scheme, double alpha) {
    using Key = std::tuple<int, double, double>;
    thread_local std::map<Key, std::shared_ptr<const UnitWeights>> cache;
    const Key key{scheme.n, scheme.grading, alpha};
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
    if (cache.size() > 64) cache.clear();
    auto entry = std::make_shared<const UnitWeights>(build_weights(scheme.n, scheme.grading, alpha));
    return *cache.emplace(key, std::move(entry)).first->second;
}

void require_finite_result(Complex c, const char* who) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw NumericError(std::string(who) + ": non-finite result");
}

Complex left_integral(const LineFunction& f, double base, double alpha, double x, const FracScheme& scheme) {
    const double length = x - base;
    if (length == 0.0) return 0.0;
    const auto& w = unit_weights(scheme, alpha);
    const int n = scheme.n;
    Complex acc = w.integral[0] * f(base);
    for (int k = 1; k < n; ++k) acc += w.integral[k] * f(x - length * w.sigma[k]);
    acc += w.integral[n] * f(x);
    const Complex out = acc * (std::pow(length, alpha) * w.inv_gamma_alpha);
    require_finite_result(out, "rl_integral");
    return out;
}

Complex left_derivative(const LineFunction& f, double base, double alpha, double x, const FracScheme& scheme) {
    const double length = x - base;
    const auto& w = unit_weights(scheme, alpha);
    const int n = scheme.n;
    Complex f_lo = f(base);
    const Complex head = f_lo * w.inv_gamma_1m;
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const Complex f_hi = f(k + 1 == n ? x : x - length * w.sigma[k + 1]);
        acc += (f_hi - f_lo) * w.l1[k];
        f_lo = f_hi;
    }
    const Complex out = (head + acc * w.inv_gamma_2m) * std::pow(length, -alpha);
    require_finite_result(out, "rl_derivative");
    return out;
}

}  // namespace

Segment::Segment(double lo, double hi) : a(lo), b(hi) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw DomainError("Segment: require finite a < b");
}

void FracScheme::validate() const {
    if (n < 16) throw DomainError("FracScheme: n must be >= 16");
    if (!(grading >= 1.0 && grading <= 4.0)) throw DomainError("FracScheme: grading must lie in [1, 4]");
}

Complex rl_integral(const LineFunction& f, const Segment& seg, double alpha, double x, Side side,
                    const FracScheme& scheme) {
    require_order(alpha, "rl_integral");
    scheme.validate();
    if (!seg.contains(x)) throw DomainError("rl_integral: x outside the segment");
    if (side == Side::left) return left_integral(f, seg.a, alpha, x, scheme);
    LineFunction mirrored = [&](double t) { return f(seg.mirror(t)); };
    return left_integral(mirrored, seg.a, alpha, seg.mirror(x), scheme);
}

Complex rl_derivative(const LineFunction& f, const Segment& seg, double alpha, double x, Side side,
                      const FracScheme& scheme) {
    require_order(alpha, "rl_derivative");
    scheme.validate();
    if (!seg.contains(x)) throw DomainError("rl_derivative: x outside the segment");
    const double base = side == Side::left ? seg.a : seg.b;
    if (x == base) throw DomainError("rl_derivative: evaluation at the singular endpoint");
    if (side == Side::left) return left_derivative(f, seg.a, alpha, x, scheme);
    LineFunction mirrored = [&](double t) { return f(seg.mirror(t)); };
    return left_derivative(mirrored, seg.a, alpha, seg.mirror(x), scheme);
}

Complex rl_power_oracle(double beta, double alpha, double a, double x) {
    require_order(alpha, "rl_power_oracle");
    if (!(beta >= 0.0)) throw DomainError("rl_power_oracle: beta must be >= 0");
    if (!(x > a)) throw DomainError("rl_power_oracle: require x > a");
    const double denom_arg = beta - alpha + 1.0;
    if (denom_arg <= 0.0 && denom_arg == std::floor(denom_arg))
        throw DomainError("rl_power_oracle: Gamma pole in denominator");
    return special::gamma(beta + 1.0) / special::gamma(denom_arg) * std::pow(x - a, beta - alpha);
}

double rl_power_integral(double beta, double mu, double a, double x) {
    if (!(mu > 0.0) || !(beta >= 0.0)) throw DomainError("rl_power_integral: require mu > 0, beta >= 0");
    if (x < a) throw DomainError("rl_power_integral: require x >= a");
    if (x == a) return 0.0;
    return special::gamma(beta + 1.0) / special::gamma(beta + mu + 1.0) * std::pow(x - a, beta + mu);
}

}  // namespace bcfrac
