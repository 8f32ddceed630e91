#include "bcfrac/weighted_bicomplex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bcfrac/errors.hpp"

namespace bcfrac {

namespace {

const Complex kI(0.0, 1.0);
const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

void require_component(int l) {
    if (l != 1 && l != 2) throw DomainError("idempotent component index must be 1 or 2");
}

}  // namespace

WeightPairBC WeightPairBC::constant(Complex t1, Complex t2, Complex p1, Complex p2) {
    return {Weight::constant(t1), Weight::constant(t2), Weight::constant(p1), Weight::constant(p2)};
}

PsiPair WeightPairBC::component(int l) const {
    require_component(l);
    return l == 1 ? PsiPair{theta1, phi1} : PsiPair{theta2, phi2};
}

bool WeightPairBC::is_constant() const {
    return theta1.is_constant() && theta2.is_constant() && phi1.is_constant() && phi2.is_constant();
}

const ComplexField& BCProductField::component(int l) const {
    require_component(l);
    return l == 1 ? f1 : f2;
}

void BCBall::validate() const {
    if (!center.is_finite()) throw DomainError("BCBall: non-finite center");
    if (!radius.positive()) throw DomainError("BCBall: radius must lie in the open positive cone");
}

Disk BCBall::disk(int l, int nr, int nth) const {
    require_component(l);
    Disk d{l == 1 ? center.z1 : center.z2, l == 1 ? radius.l1 : radius.l2, nr, nth};
    d.validate();
    return d;
}

bool BCBall::contains(const Bicomplex& z) const {
    return std::abs(z.z1 - center.z1) < radius.l1 && std::abs(z.z2 - center.z2) < radius.l2;
}

OrthogonalityReport bc_weights_orthogonal(const WeightPairBC& w, std::span<const Bicomplex> probes) {
    if (probes.empty()) throw DomainError("bc_weights_orthogonal: no probe points");
    OrthogonalityReport report;
    report.inner_form = true;
    report.proposition_form = true;
    for (const auto& z : probes) {
        for (int l = 1; l <= 2; ++l) {
            const PsiPair psi = w.component(l);
            const Complex zl = z[l - 1];
            const Complex th = psi.psi0(zl), ph = psi.psi1(zl);
            const double scale = std::max(1.0, std::abs(th) * std::abs(ph));
            const double inner = std::abs(th.real() * ph.real() + th.imag() * ph.imag());
            // p_l2 phi_l = -i q_l1 theta_l
            const double gap = std::abs(th.imag() * ph + kI * ph.real() * th);
            report.max_inner = std::max(report.max_inner, inner);
            report.max_form_gap = std::max(report.max_form_gap, gap);
            if (inner > 1e-12 * scale) report.inner_form = false;
            if (gap > 1e-12 * scale) report.proposition_form = false;
        }
    }
    return report;
}

Bicomplex apply_D_thetaphi(const BCProductField& f, const WeightPairBC& w, const Bicomplex& z) {
    return {apply_D_psi(f.f1, w.component(1), z.z1), apply_D_psi(f.f2, w.component(2), z.z2)};
}

ZeroOrderFields fields_A_B(const WeightPairBC& w, const Bicomplex& z) {
    ZeroOrderFields out;
    for (int l = 1; l <= 2; ++l) {
        const PsiPair psi = w.component(l);
        const Complex d0 = psi.psi0.dx(z[l - 1]), d1 = psi.psi1.dy(z[l - 1]);
        (l == 1 ? out.A.z1 : out.A.z2) = d0.real() + d1.real();
        (l == 1 ? out.B.z1 : out.B.z2) = d0.imag() + d1.imag();
    }
    return out;
}

double BCGaussBalance::residual() const {
    return std::max(std::abs(area.z1 - boundary.z1), std::abs(area.z2 - boundary.z2));
}

BCGaussBalance bc_gauss_residual(const BCProductField& f, const WeightPairBC& w, const BCBall& ball,
                                 const BallGrid& grid) {
    ball.validate();
    const GaussBalance g1 = gauss_residual_complex(f.f1, w.component(1), ball.disk(1, grid.nr, grid.nth));
    const GaussBalance g2 = gauss_residual_complex(f.f2, w.component(2), ball.disk(2, grid.nr, grid.nth));
    return {{g1.area, g2.area}, {g1.boundary, g2.boundary}};
}

BBPFResult bbpf_reconstruct(const BCProductField& f, const BCBall& ball, const Bicomplex& w, const BallGrid& grid) {
    ball.validate();
    BBPFResult out;
    for (int l = 1; l <= 2; ++l) {
        const Disk disk = ball.disk(l, grid.nr, grid.nth);
        const Complex wl = w[l - 1];
        require_interior(disk, wl, "bbpf_reconstruct");
        const ComplexField& fl = f.component(l);
        const Complex boundary =
            integrate_circle([&](Complex z) { return fl(z) / (z - wl); }, disk.boundary()) / kTwoPiI;
        const Complex area = Complex(0.0, -2.0) / kTwoPiI *
                             integrate_disk_area_about([&](Complex z) { return wirtinger_dzbar(fl, z) / (z - wl); },
                                                       disk, wl);
        (l == 1 ? out.boundary.z1 : out.boundary.z2) = boundary;
        (l == 1 ? out.area.z1 : out.area.z2) = area;
    }
    out.value = out.boundary + out.area;
    return out;
}

WeightedBPResult bc_weighted_bp_reconstruct(const BCProductField& f, const WeightPairBC& w, const BCBall& ball,
                                            const Bicomplex& z, const BallGrid& grid, AreaMeasure measure) {
    ball.validate();
    const Complex factor = measure == AreaMeasure::dxdy ? Complex(1.0) : Complex(0.0, -2.0);
    WeightedBPResult out;
    for (int l = 1; l <= 2; ++l) {
        const auto cp = cauchy_pompeiu_reconstruct(f.component(l), w.component(l), ball.disk(l, grid.nr, grid.nth),
                                                   z[l - 1]);
        (l == 1 ? out.boundary.z1 : out.boundary.z2) = cp.boundary;
        (l == 1 ? out.area.z1 : out.area.z2) = factor * cp.area;
    }
    out.value = out.boundary - out.area;
    const Bicomplex fz = f(z);
    if (bc_invertible(fz)) out.c_empirical = Bicomplex{out.value.z1 / fz.z1, out.value.z2 / fz.z2};
    return out;
}

}  // namespace bcfrac
