#include "bcfrac/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <string>

#include "bcfrac/errors.hpp"

namespace bcfrac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI(0.0, 1.0);

Complex checked_sample(const ComplexFn& g, Complex z, std::size_t index, const char* who) {
    const Complex v = g(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NumericError(std::string(who) + ": non-finite integrand at node " + std::to_string(index));
    return v;
}

GaussRule build_gauss(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

void Circle::validate() const {
    if (!(radius > 0.0)) throw DomainError("Circle: radius must be positive");
    if (n < 16 || n % 2 != 0) throw DomainError("Circle: node count must be even and >= 16");
}

double Circle::spacing() const { return kTwoPi * radius / n; }

double Circle::angle(int k) const { return (k + offset) * kTwoPi / n; }

Complex Circle::node(int k) const { return center + std::polar(radius, angle(k)); }

void Disk::validate() const {
    if (!(radius > 0.0)) throw DomainError("Disk: radius must be positive");
    if (nr < 8) throw DomainError("Disk: nr must be >= 8");
    if (nth < 16) throw DomainError("Disk: nth must be >= 16");
}

bool Disk::contains(Complex z) const { return std::abs(z - center) < radius; }

void Box::validate() const {
    if (!(x0 < x1 && y0 < y1)) throw DomainError("Box: require x0 < x1 and y0 < y1");
    if (nx < 2 || ny < 2) throw DomainError("Box: at least two nodes per axis");
}

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    thread_local std::map<int, std::unique_ptr<GaussRule>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussRule>(build_gauss(n));
    return *slot;
}

Complex pairwise_sum(std::span<const Complex> values) {
    if (values.size() <= 8) {
        Complex s = 0.0;
        for (const auto& v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Complex integrate_circle(const ComplexFn& g, const Circle& c) {
    c.validate();
    std::vector<Complex> terms(c.n);
    const double dtheta = kTwoPi / c.n;
    for (int k = 0; k < c.n; ++k) {
        const Complex u = std::polar(1.0, c.angle(k));
        const Complex z = c.center + c.radius * u;
        // dz = i R e^{i theta} d theta
        terms[k] = checked_sample(g, z, k, "integrate_circle") * (kI * c.radius * u);
    }
    return pairwise_sum(terms) * dtheta;
}

Complex integrate_circle_form(const ComplexFn& p, const ComplexFn& q, const Circle& c) {
    c.validate();
    std::vector<Complex> terms(c.n);
    const double dtheta = kTwoPi / c.n;
    for (int k = 0; k < c.n; ++k) {
        const double theta = c.angle(k);
        const Complex z = c.center + std::polar(c.radius, theta);
        const double dx = -c.radius * std::sin(theta);
        const double dy = c.radius * std::cos(theta);
        terms[k] = checked_sample(p, z, k, "integrate_circle_form") * dx +
                   checked_sample(q, z, k, "integrate_circle_form") * dy;
    }
    return pairwise_sum(terms) * dtheta;
}

Complex integrate_disk_area(const ComplexFn& g, const Disk& d) {
    d.validate();
    const auto& rule = gauss_legendre(d.nr);
    const double dtheta = kTwoPi / d.nth;
    std::vector<Complex> terms(static_cast<std::size_t>(d.nr) * d.nth);
    std::size_t idx = 0;
    for (int j = 0; j < d.nth; ++j) {
        const Complex u = std::polar(1.0, (j + 0.5) * dtheta);
        for (int i = 0; i < d.nr; ++i, ++idx) {
            const double r = 0.5 * d.radius * (rule.nodes[i] + 1.0);
            const double w = 0.5 * d.radius * rule.weights[i] * r;
            terms[idx] = checked_sample(g, d.center + r * u, idx, "integrate_disk_area") * w;
        }
    }
    return pairwise_sum(terms) * dtheta;
}

Complex integrate_disk_area_about(const ComplexFn& g, const Disk& d, Complex q) {
    d.validate();
    const Complex offset = q - d.center;
    if (!(std::abs(offset) < d.radius)) throw DomainError("integrate_disk_area_about: point not inside the disk");
    const auto& rule = gauss_legendre(d.nr);
    const double dtheta = kTwoPi / d.nth;
    std::vector<Complex> terms(static_cast<std::size_t>(d.nr) * d.nth);
    std::size_t idx = 0;
    for (int j = 0; j < d.nth; ++j) {
        const Complex u = std::polar(1.0, (j + 0.5) * dtheta);
        const Complex rotated = offset * std::conj(u);
        const double reach = -rotated.real() + std::sqrt(d.radius * d.radius - rotated.imag() * rotated.imag());
        for (int i = 0; i < d.nr; ++i, ++idx) {
            const double rho = 0.5 * reach * (rule.nodes[i] + 1.0);
            const double w = 0.5 * reach * rule.weights[i] * rho;
            terms[idx] = checked_sample(g, q + rho * u, idx, "integrate_disk_area_about") * w;
        }
    }
    return pairwise_sum(terms) * dtheta;
}

Complex integrate_disk_dzdzbar(const ComplexFn& g, const Disk& d) {
    return Complex(0.0, -2.0) * integrate_disk_area(g, d);
}

Complex integrate_box_area(const ComplexFn& g, const Box& b) {
    b.validate();
    const auto& rx = gauss_legendre(b.nx);
    const auto& ry = gauss_legendre(b.ny);
    const double hx = 0.5 * (b.x1 - b.x0), hy = 0.5 * (b.y1 - b.y0);
    std::vector<Complex> terms(static_cast<std::size_t>(b.nx) * b.ny);
    std::size_t idx = 0;
    for (int j = 0; j < b.ny; ++j) {
        const double y = b.y0 + hy * (ry.nodes[j] + 1.0);
        for (int i = 0; i < b.nx; ++i, ++idx) {
            const double x = b.x0 + hx * (rx.nodes[i] + 1.0);
            terms[idx] = checked_sample(g, Complex(x, y), idx, "integrate_box_area") * (rx.weights[i] * ry.weights[j]);
        }
    }
    return pairwise_sum(terms) * (hx * hy);
}

Complex integrate_box_form(const ComplexFn& p, const ComplexFn& q, const Box& b) {
    b.validate();
    const auto& rx = gauss_legendre(b.nx);
    const auto& ry = gauss_legendre(b.ny);
    const double hx = 0.5 * (b.x1 - b.x0), hy = 0.5 * (b.y1 - b.y0);
    std::vector<Complex> terms;
    terms.reserve(2 * (b.nx + b.ny));
    std::size_t idx = 0;
    // bottom (left to right), top (right to left): p dx
    for (int i = 0; i < b.nx; ++i, ++idx) {
        const double x = b.x0 + hx * (rx.nodes[i] + 1.0);
        terms.push_back(checked_sample(p, Complex(x, b.y0), idx, "integrate_box_form") * (hx * rx.weights[i]));
    }
    for (int i = 0; i < b.nx; ++i, ++idx) {
        const double x = b.x0 + hx * (rx.nodes[i] + 1.0);
        terms.push_back(checked_sample(p, Complex(x, b.y1), idx, "integrate_box_form") * (-hx * rx.weights[i]));
    }
    // right (upwards), left (downwards): q dy
    for (int j = 0; j < b.ny; ++j, ++idx) {
        const double y = b.y0 + hy * (ry.nodes[j] + 1.0);
        terms.push_back(checked_sample(q, Complex(b.x1, y), idx, "integrate_box_form") * (hy * ry.weights[j]));
    }
    for (int j = 0; j < b.ny; ++j, ++idx) {
        const double y = b.y0 + hy * (ry.nodes[j] + 1.0);
        terms.push_back(checked_sample(q, Complex(b.x0, y), idx, "integrate_box_form") * (-hy * ry.weights[j]));
    }
    return pairwise_sum(terms);
}

double estimate_order(std::span<const ResidualSample> samples) {
    for (const auto& s : samples) {
        if (!(s.r >= 0.0)) throw DomainError("estimate_order: residuals must be nonnegative");
        if (s.r == 0.0) return std::numeric_limits<double>::infinity();
    }
    if (samples.size() < 3) throw DomainError("estimate_order: need at least three samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].h < samples[i - 1].h)) throw DomainError("estimate_order: h must strictly decrease");
    double mx = 0.0, my = 0.0;
    for (const auto& s : samples) {
        mx += std::log(s.h);
        my += std::log(s.r);
    }
    const double m = static_cast<double>(samples.size());
    mx /= m;
    my /= m;
    double sxy = 0.0, sxx = 0.0;
    for (const auto& s : samples) {
        const double dx = std::log(s.h) - mx;
        sxy += dx * (std::log(s.r) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace bcfrac
