#include "bcfrac/weighted_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bcfrac/errors.hpp"

namespace bcfrac {

namespace {

const Complex kI(0.0, 1.0);
const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

Complex central_difference(const ComplexField& f, Complex z, Complex direction) {
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    const Complex zp = z + h * direction, zm = z - h * direction;
    if (f.domain && (!f.domain(zp) || !f.domain(zm)))
        throw DomainError("partial derivative: difference stencil leaves the field's domain");
    return (f.value(zp) - f.value(zm)) / (2.0 * h);
}

void require_constant(const PsiPair& psi, const char* who) {
    if (!psi.is_constant()) throw DomainError(std::string(who) + ": requires constant weights");
}

}  // namespace

Complex partial_x(const ComplexField& f, Complex z) {
    return f.dx ? f.dx(z) : central_difference(f, z, 1.0);
}

Complex partial_y(const ComplexField& f, Complex z) {
    return f.dy ? f.dy(z) : central_difference(f, z, kI);
}

Complex wirtinger_dz(const ComplexField& f, Complex z) {
    return 0.5 * (partial_x(f, z) - kI * partial_y(f, z));
}

Complex wirtinger_dzbar(const ComplexField& f, Complex z) {
    return 0.5 * (partial_x(f, z) + kI * partial_y(f, z));
}

Weight Weight::constant(Complex c) {
    Weight w;
    w.field.value = [c](Complex) { return c; };
    w.field.dx = [](Complex) { return Complex(0.0); };
    w.field.dy = [](Complex) { return Complex(0.0); };
    w.constant_value = c;
    return w;
}

bool psi_orthogonal(const PsiPair& psi, std::span<const Complex> probes) {
    if (probes.empty()) throw DomainError("psi_orthogonal: no probe points");
    return std::all_of(probes.begin(), probes.end(), [&](Complex z) {
        const Complex p0 = psi.psi0(z), p1 = psi.psi1(z);
        const double inner = p0.real() * p1.real() + p0.imag() * p1.imag();
        return std::abs(inner) <= 1e-12 * std::max(1.0, std::abs(p0) * std::abs(p1));
    });
}

Complex apply_D_psi(const ComplexField& f, const PsiPair& psi, Complex z) {
    return psi.psi0(z) * partial_x(f, z) + psi.psi1(z) * partial_y(f, z);
}

TransformT solve_transform_T(const PsiPair& psi) {
    require_constant(psi, "solve_transform_T");
    const Complex p0 = *psi.psi0.constant_value, p1 = *psi.psi1.constant_value;
    // Columns of M are (Re, Im) of psi0 and psi1; (a, b) = M^-1 (1, 0), (c, d) = M^-1 (0, 1).
    const double m00 = p0.real(), m01 = p1.real(), m10 = p0.imag(), m11 = p1.imag();
    const double det = m00 * m11 - m01 * m10;
    const double scale = std::max(1e-300, std::abs(p0) * std::abs(p1));
    if (std::abs(det) <= 1e-14 * scale)
        throw DegeneracyError("solve_transform_T: weights are linearly dependent over R");
    return {m11 / det, -m10 / det, -m01 / det, m00 / det};
}

WeightedKernel::WeightedKernel(const PsiPair& psi) : t_(solve_transform_T(psi)) {}

Complex WeightedKernel::operator()(Complex w, Complex z) const {
    const Complex diff = t_.apply(w) - t_.apply(z);
    if (diff == Complex(0.0)) throw SingularityError("E_psi: coincident transformed points");
    return 1.0 / (kTwoPiI * diff);
}

Complex WeightedKernel::series(Complex w, Complex z, int terms, Complex center) const {
    if (terms < 1) throw DomainError("E_psi series: need at least one term");
    const Complex tc = t_.apply(center);
    const Complex u = t_.apply(z) - tc, v = t_.apply(w) - tc;
    if (u == v) throw SingularityError("E_psi series: coincident transformed points");
    if (!(std::abs(u) < std::abs(v))) throw DivergenceError("E_psi series: |T(z)-T(a)| >= |T(w)-T(a)|");
    const Complex ratio = u / v;
    Complex term = 1.0 / v, sum = 0.0;
    for (int n = 0; n < terms; ++n) {
        sum += term;
        term *= ratio;
    }
    return sum / kTwoPiI;
}

Complex eval_kernel_E_psi(const PsiPair& psi, Complex w, Complex z, const KernelOptions& options) {
    const WeightedKernel kernel(psi);
    return options.mode == KernelMode::closed ? kernel(w, z) : kernel.series(w, z, options.terms, options.center);
}

Complex compute_c_psi(Complex psi0, Complex psi1, double r0, double r1, double angle, int n) {
    if (!(r0 > 0.0 && r1 > 0.0)) throw DomainError("compute_c_psi: radii must be positive");
    if (!(angle > 0.0 && angle < std::numbers::pi)) throw DomainError("compute_c_psi: angle must lie in (0, pi)");
    if (n < 16) throw DomainError("compute_c_psi: need at least 16 nodes");
    const double ca = std::cos(angle);
    const double scale = (std::abs(psi0) + std::abs(psi1)) * std::max(1.0 / (r0 * r0), 1.0 / (r1 * r1));
    Complex sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / n;
        const double c = std::cos(t), s = std::sin(t);
        const Complex num = psi0 * c + psi1 * s;
        const Complex den = (c / (r0 * r0) - s * ca / (r0 * r1)) * psi0 + (s / (r1 * r1) - c * ca / (r0 * r1)) * psi1;
        if (std::abs(den) <= 1e-14 * scale)
            throw SingularityError("compute_c_psi: vanishing denominator at theta = " + std::to_string(t));
        sum += num / den;
    }
    const double sa = std::sin(angle);
    return sa * sa * sum * (2.0 * std::numbers::pi / n);
}

Complex weighted_monomial(const PsiPair& psi, Complex z, int n) {
    require_constant(psi, "weighted_monomial");
    if (n < 0) throw DomainError("weighted_monomial: degree must be nonnegative");
    const Complex p1 = *psi.psi1.constant_value;
    if (p1 == Complex(0.0)) throw DegeneracyError("weighted_monomial: psi1 = 0");
    const Complex base = z.real() - (*psi.psi0.constant_value / p1) * z.imag();
    Complex out = 1.0;
    for (int k = 0; k < n; ++k) out *= base;
    return out;
}

GaussBalance gauss_residual_complex(const ComplexField& f, const PsiPair& psi, const Disk& disk) {
    const auto area_integrand = [&](Complex z) {
        const Complex fz = f(z);
        const Complex d0x = psi.psi0.dx(z), d1y = psi.psi1.dy(z);
        // (d p0/dx + d q0/dy) f + (d p1/dx + d q1/dy) i f
        const double real_div = d0x.real() + d1y.real();
        const double imag_div = d0x.imag() + d1y.imag();
        return apply_D_psi(f, psi, z) + real_div * fz + imag_div * kI * fz;
    };
    const Complex area = integrate_disk_area(area_integrand, disk);
    const Complex boundary = integrate_circle_form([&](Complex z) { return -f(z) * psi.psi1(z); },
                                                   [&](Complex z) { return f(z) * psi.psi0(z); }, disk.boundary());
    return {area, boundary};
}

void require_interior(const Disk& disk, Complex z, const char* who) {
    const double gap = disk.radius - std::abs(z - disk.center);
    if (gap < 3.0 * disk.boundary().spacing())
        throw IllConditionedError(std::string(who) + ": point within three node spacings of the boundary");
}

CauchyPompeiuResult cauchy_pompeiu_reconstruct(const ComplexField& f, const PsiPair& psi, const Disk& disk,
                                               Complex z) {
    require_constant(psi, "cauchy_pompeiu_reconstruct");
    disk.validate();
    require_interior(disk, z, "cauchy_pompeiu_reconstruct");
    const WeightedKernel kernel(psi);
    const Complex p0 = *psi.psi0.constant_value, p1 = *psi.psi1.constant_value;

    const Complex boundary = integrate_circle_form([&](Complex w) { return -f(w) * kernel(w, z) * p1; },
                                                   [&](Complex w) { return f(w) * kernel(w, z) * p0; },
                                                   disk.boundary());
    const Complex area =
        integrate_disk_area_about([&](Complex w) { return kernel(w, z) * apply_D_psi(f, psi, w); }, disk, z);

    CauchyPompeiuResult out{boundary - area, boundary, area, std::nullopt};
    const Complex fz = f(z);
    if (fz != Complex(0.0)) out.c_empirical = out.value / fz;
    return out;
}

}  // namespace bcfrac
