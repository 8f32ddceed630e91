#include "bcfrac/frac_bicomplex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "bcfrac/errors.hpp"
#include "bcfrac/gamma.hpp"
#include "bcfrac/registry.hpp"

namespace bcfrac {

namespace {

const Complex kI(0.0, 1.0);

// Axis k in 0..3 is (x1, y1, x2, y2); component l = k / 2 + 1.
int component_of(int k) { return k / 2 + 1; }
bool is_x_axis(int k) { return k % 2 == 0; }

double coordinate(Complex z, int k) { return is_x_axis(k) ? z.real() : z.imag(); }

Complex with_coordinate(Complex z, int k, double t) { return is_x_axis(k) ? Complex(t, z.imag()) : Complex(z.real(), t); }

LineFunction restriction(const ComplexField& fl, Complex wl, int k) {
    if (is_x_axis(k)) return [&fl, wl](double t) { return fl(Complex(t, wl.imag())); };
    return [&fl, wl](double t) { return fl(Complex(wl.real(), t)); };
}

void check_point(const Rect4& rect, const Bicomplex& z, const char* who) {
    if (!rect.contains(z)) throw DomainError(std::string(who) + ": point outside the box");
}

// I^{1 - alpha_k} of the axis-k restriction, evaluated at the axis-k coordinate of z.
Complex axis_integral(const BCProductField& f, const Bicomplex& w, Complex zl, const AlphaVec& alpha,
                      const Rect4& rect, int k, const FracScheme& scheme) {
    const int l = component_of(k);
    return rl_integral(restriction(f.component(l), w[l - 1], k), rect.axis_segment(k), 1.0 - alpha[k],
                       coordinate(zl, k), Side::left, scheme);
}

Complex axis_derivative(const BCProductField& f, const Bicomplex& w, Complex zl, const AlphaVec& alpha,
                        const Rect4& rect, int k, FracSide side, const FracScheme& scheme) {
    const int l = component_of(k);
    return rl_derivative(restriction(f.component(l), w[l - 1], k), rect.axis_segment(k), alpha[k],
                         coordinate(zl, k), side == FracSide::a_plus ? Side::left : Side::right, scheme);
}

// Prefactor multiplying the crossed integral in T for axis k at coordinate t.
double t_prefactor(double t, double base, double alpha, TConvention convention) {
    const double s = t - base;
    if (!(s > 0.0)) throw DomainError("frac_T: evaluation on a base hyperplane");
    if (convention == TConvention::order_consistent) return std::pow(s, alpha - 1.0) / special::gamma(alpha);
    return std::pow(s, -alpha) / special::gamma(1.0 - alpha);
}

Complex component_value(const Bicomplex& z, int l) { return z[l - 1]; }

void set_component(Bicomplex& z, int l, Complex v) { z[l - 1] = v; }

double component_max(const Bicomplex& z) { return std::max(std::abs(z.z1), std::abs(z.z2)); }

}  // namespace

void AlphaVec::validate() const {
    for (double v : a)
        if (!(v > 0.0 && v < 1.0)) throw DomainError("AlphaVec: every order must lie in (0,1), got " + std::to_string(v));
}

void Rect4::validate() const {
    if (!(a1 < b1 && c1 < d1 && a2 < b2 && c2 < d2)) throw DomainError("Rect4: each lower bound must be below its upper bound");
}

Segment Rect4::axis_segment(int k) const {
    if (k < 0 || k > 3) throw DomainError("Rect4: axis index must lie in 0..3");
    return Segment(base()[static_cast<std::size_t>(k)], top()[static_cast<std::size_t>(k)]);
}

Box Rect4::box(int l, int nx, int ny) const {
    Box b = l == 1 ? Box{a1, b1, c1, d1, nx, ny} : Box{a2, b2, c2, d2, nx, ny};
    b.validate();
    return b;
}

bool Rect4::contains(const Bicomplex& z) const {
    const auto inside = [](Complex v, double x0, double x1, double y0, double y1) {
        return v.real() >= x0 && v.real() <= x1 && v.imag() >= y0 && v.imag() <= y1;
    };
    return inside(z.z1, a1, b1, c1, d1) && inside(z.z2, a2, b2, c2, d2);
}

bool Rect4::contains(const BCBall& ball) const {
    const auto inside = [](Complex c, double r, double x0, double x1, double y0, double y1) {
        return c.real() - r >= x0 && c.real() + r <= x1 && c.imag() - r >= y0 && c.imag() + r <= y1;
    };
    return inside(ball.center.z1, ball.radius.l1, a1, b1, c1, d1) &&
           inside(ball.center.z2, ball.radius.l2, a2, b2, c2, d2);
}

Bicomplex frac_D(const BCProductField& f, const FracEvalPoint& p, const AlphaVec& alpha, const WeightPairBC& w,
                 const Rect4& rect, FracSide side, const FracScheme& scheme) {
    alpha.validate();
    rect.validate();
    check_point(rect, p.W, "frac_D");
    check_point(rect, p.Z, "frac_D");
    Bicomplex out;
    for (int l = 1; l <= 2; ++l) {
        const Complex zl = p.Z[l - 1];
        const PsiPair psi = w.component(l);
        const int kx = 2 * (l - 1), ky = kx + 1;
        set_component(out, l,
                      psi.psi0(zl) * axis_derivative(f, p.W, zl, alpha, rect, kx, side, scheme) +
                          psi.psi1(zl) * axis_derivative(f, p.W, zl, alpha, rect, ky, side, scheme));
    }
    return out;
}

Bicomplex frac_I(const BCProductField& f, const FracEvalPoint& p, const AlphaVec& alpha, const Rect4& rect,
                 const FracScheme& scheme) {
    alpha.validate();
    rect.validate();
    check_point(rect, p.W, "frac_I");
    check_point(rect, p.Z, "frac_I");
    Bicomplex out;
    for (int l = 1; l <= 2; ++l) {
        const Complex zl = p.Z[l - 1];
        const int kx = 2 * (l - 1), ky = kx + 1;
        set_component(out, l,
                      axis_integral(f, p.W, zl, alpha, rect, kx, scheme) +
                          axis_integral(f, p.W, zl, alpha, rect, ky, scheme));
    }
    return out;
}

Bicomplex frac_P(const ComponentMap& g, const Bicomplex& q, const AlphaVec& alpha, const Rect4& rect,
                 const FracScheme& scheme) {
    alpha.validate();
    rect.validate();
    check_point(rect, q, "frac_P");
    Bicomplex out;
    for (int k = 0; k < 4; ++k) {
        const int l = component_of(k);
        const Complex ql = q[l - 1];
        const LineFunction line = [&](double t) { return g(l, with_coordinate(ql, k, t)); };
        const Complex term =
            rl_derivative(line, rect.axis_segment(k), 1.0 - alpha[k], coordinate(ql, k), Side::left, scheme);
        set_component(out, l, component_value(out, l) + term);
    }
    return out;
}

Bicomplex frac_T(const BCProductField& f, const FracEvalPoint& p, const AlphaVec& alpha, const Rect4& rect,
                 const FracScheme& scheme, TConvention convention) {
    alpha.validate();
    rect.validate();
    check_point(rect, p.W, "frac_T");
    check_point(rect, p.Z, "frac_T");
    const auto base = rect.base();
    Bicomplex out;
    for (int l = 1; l <= 2; ++l) {
        const Complex zl = p.Z[l - 1];
        const int kx = 2 * (l - 1), ky = kx + 1;
        const double px = t_prefactor(zl.real(), base[kx], alpha[kx], convention);
        const double py = t_prefactor(zl.imag(), base[ky], alpha[ky], convention);
        set_component(out, l,
                      px * axis_integral(f, p.W, zl, alpha, rect, ky, scheme) +
                          py * axis_integral(f, p.W, zl, alpha, rect, kx, scheme));
    }
    return out;
}

Bicomplex mixed_sum(const BCProductField& f, const Bicomplex& w, const Bicomplex& z) {
    Bicomplex out;
    for (int l = 1; l <= 2; ++l) {
        const ComplexField& fl = f.component(l);
        const Complex zl = z[l - 1], wl = w[l - 1];
        set_component(out, l, fl(Complex(zl.real(), wl.imag())) + fl(Complex(wl.real(), zl.imag())));
    }
    return out;
}

DIResiduals di_residuals(const BCProductField& f, const FracEvalPoint& p, const AlphaVec& alpha,
                         const WeightPairBC& w, const Rect4& rect, const FracScheme& scheme,
                         TConvention convention) {
    const Bicomplex d = frac_D(f, p, alpha, w, rect, FracSide::a_plus, scheme);
    const auto base = rect.base();

    // d/dZ_theta,phi of Z -> I F(W, Z); each component is a sum of an x part and a y part.
    Bicomplex dz_of_i;
    for (int l = 1; l <= 2; ++l) {
        const Complex zl = p.Z[l - 1];
        const PsiPair psi = w.component(l);
        Complex acc = 0.0;
        for (int k = 2 * (l - 1); k < 2 * l; ++k) {
            const double t = coordinate(zl, k);
            const double h = (t - base[k]) / scheme.n;
            const Complex up = axis_integral(f, p.W, with_coordinate(zl, k, t + h), alpha, rect, k, scheme);
            const Complex dn = axis_integral(f, p.W, with_coordinate(zl, k, t - h), alpha, rect, k, scheme);
            acc += (is_x_axis(k) ? psi.psi0(zl) : psi.psi1(zl)) * (up - dn) / (2.0 * h);
        }
        set_component(dz_of_i, l, acc);
    }

    const ComponentMap integral = [&](int l, Complex z) {
        Bicomplex moved = p.Z;
        set_component(moved, l, z);
        const int kx = 2 * (l - 1);
        return axis_integral(f, p.W, z, alpha, rect, kx, scheme) + axis_integral(f, p.W, z, alpha, rect, kx + 1, scheme);
    };
    const Bicomplex pi = frac_P(integral, p.Z, alpha, rect, scheme);
    const Bicomplex expected = mixed_sum(f, p.W, p.Z) + frac_T(f, p, alpha, rect, scheme, convention);
    return {component_max(d - dz_of_i), component_max(pi - expected)};
}

double FracGaussBalance::residual() const { return component_max(area - boundary); }

FracGaussBalance frac_gauss_residual(const BCProductField& f, const Bicomplex& w, const AlphaVec& alpha,
                                     const WeightPairBC& weights, const Rect4& rect, const FracScheme& scheme,
                                     int nb) {
    alpha.validate();
    rect.validate();
    check_point(rect, w, "frac_gauss_residual");
    FracGaussBalance out;
    for (int l = 1; l <= 2; ++l) {
        const Box box = rect.box(l, nb, nb);
        const PsiPair psi = weights.component(l);
        const int kx = 2 * (l - 1), ky = kx + 1;
        // The integrand separates into x and y parts; memoize them per coordinate.
        std::map<double, Complex> ix, iy, dx, dy;
        const auto memo = [](std::map<double, Complex>& cache, double t, const auto& compute) {
            auto it = cache.find(t);
            if (it == cache.end()) it = cache.emplace(t, compute(t)).first;
            return it->second;
        };
        const auto integral = [&](Complex z) {
            return memo(ix, z.real(), [&](double) { return axis_integral(f, w, z, alpha, rect, kx, scheme); }) +
                   memo(iy, z.imag(), [&](double) { return axis_integral(f, w, z, alpha, rect, ky, scheme); });
        };
        const auto area_integrand = [&](Complex z) {
            const Complex d_x = memo(dx, z.real(), [&](double) {
                return axis_derivative(f, w, z, alpha, rect, kx, FracSide::a_plus, scheme);
            });
            const Complex d_y = memo(dy, z.imag(), [&](double) {
                return axis_derivative(f, w, z, alpha, rect, ky, FracSide::a_plus, scheme);
            });
            const Complex i_f = integral(z);
            const Complex a0 = psi.psi0.dx(z), a1 = psi.psi1.dy(z);
            return psi.psi0(z) * d_x + psi.psi1(z) * d_y + (a0.real() + a1.real()) * i_f +
                   (a0.imag() + a1.imag()) * kI * i_f;
        };
        set_component(out.area, l, integrate_box_area(area_integrand, box));
        set_component(out.boundary, l,
                      integrate_box_form([&](Complex z) { return -integral(z) * psi.psi1(z); },
                                         [&](Complex z) { return integral(z) * psi.psi0(z); }, box));
    }
    return out;
}

FracBPResult frac_bp_reconstruct(const BCProductField& f, const Bicomplex& w, const Bicomplex& q, const BCBall& ball,
                                 const AlphaVec& alpha, const WeightPairBC& weights, const Rect4& rect,
                                 const FracScheme& scheme, const FracBPGrid& grid, std::optional<Bicomplex> c_hat,
                                 TConvention convention) {
    alpha.validate();
    rect.validate();
    ball.validate();
    scheme.validate();
    if (!weights.is_constant()) throw DomainError("frac_bp_reconstruct: requires constant weights");
    if (!rect.contains(ball)) throw DomainError("frac_bp_reconstruct: ball closure not inside the box");
    if (grid.nth % 4 != 0) throw DomainError("frac_bp_reconstruct: nth must be a multiple of 4");
    check_point(rect, w, "frac_bp_reconstruct");
    const FracScheme kernel_scheme{grid.n_kernel, 1.0};
    kernel_scheme.validate();

    if (!c_hat) {
        const FracBPResult calib = frac_bp_reconstruct(registry_field("one"), w, q, ball, alpha, weights, rect, scheme, grid,
                                                       Bicomplex::one(), convention);
        const Bicomplex raw = calib.boundary - calib.area;
        const Bicomplex norm = calib.lhs + calib.t_term;
        c_hat = Bicomplex{raw.z1 / norm.z1, raw.z2 / norm.z2};
    }

    FracBPResult out;
    out.c_hat = *c_hat;
    out.lhs = mixed_sum(f, w, q);
    out.t_term = frac_T(f, {w, q}, alpha, rect, scheme, convention);
    const auto base = rect.base();
    const auto top = rect.top();

    for (int l = 1; l <= 2; ++l) {
        const Disk disk = ball.disk(l, grid.nr, grid.nth);
        const Complex ql = q[l - 1];
        require_interior(disk, ql, "frac_bp_reconstruct");
        const PsiPair psi = weights.component(l);
        const WeightedKernel kernel(psi);
        const Complex p0 = *psi.psi0.constant_value, p1 = *psi.psi1.constant_value;
        const int kx = 2 * (l - 1), ky = kx + 1;

        // P applied to Q -> E(z, Q) along the two axis lines through Q.
        const auto kernel_p = [&](Complex z) {
            const LineFunction along_x = [&](double t) { return kernel(z, Complex(t, ql.imag())); };
            const LineFunction along_y = [&](double s) { return kernel(z, Complex(ql.real(), s)); };
            return rl_derivative(along_x, Segment(base[kx], top[kx]), 1.0 - alpha[kx], ql.real(), Side::left,
                                 kernel_scheme) +
                   rl_derivative(along_y, Segment(base[ky], top[ky]), 1.0 - alpha[ky], ql.imag(), Side::left,
                                 kernel_scheme);
        };
        const auto integral = [&](Complex z) {
            return axis_integral(f, w, z, alpha, rect, kx, scheme) + axis_integral(f, w, z, alpha, rect, ky, scheme);
        };
        const auto derivative = [&](Complex z) {
            return p0 * axis_derivative(f, w, z, alpha, rect, kx, FracSide::a_plus, scheme) +
                   p1 * axis_derivative(f, w, z, alpha, rect, ky, FracSide::a_plus, scheme);
        };

        // Boundary nodes sit half a spacing off the axis directions, so no node
        // lies on the lines from the base to Q.
        const Circle circle = disk.boundary(0.5);
        const Complex boundary = integrate_circle_form(
            [&](Complex z) { return -integral(z) * kernel_p(z) * p1; },
            [&](Complex z) { return integral(z) * kernel_p(z) * p0; }, circle);
        const Complex area =
            integrate_disk_area_about([&](Complex z) { return kernel_p(z) * derivative(z); }, disk, ql);
        set_component(out.boundary, l, boundary);
        set_component(out.area, l, area);
    }

    out.rhs = out.boundary - out.area - out.c_hat * out.t_term;
    out.residual = component_max(out.c_hat * out.lhs - out.rhs);
    return out;
}

}  // namespace bcfrac
