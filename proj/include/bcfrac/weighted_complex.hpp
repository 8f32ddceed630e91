#pragma once

#include <functional>
#include <optional>
#include <span>

#include "bcfrac/bicomplex.hpp"
#include "bcfrac/quadrature.hpp"

namespace bcfrac {

/// A complex field of one complex variable with optional analytic partials.
/// Missing partials fall back to central differences with step
/// 1e-6 * max(1, |z|); if `domain` is set, a difference stencil leaving it
/// raises DomainError.
struct ComplexField {
    ComplexFn value;
    ComplexFn dx;
    ComplexFn dy;
    std::function<bool(Complex)> domain;

    Complex operator()(Complex z) const { return value(z); }
};

Complex partial_x(const ComplexField& f, Complex z);
Complex partial_y(const ComplexField& f, Complex z);
/// (d/dx - i d/dy) / 2
Complex wirtinger_dz(const ComplexField& f, Complex z);
/// (d/dx + i d/dy) / 2
Complex wirtinger_dzbar(const ComplexField& f, Complex z);

/// A complex weight function psi = p + i q with partials, or a constant.
struct Weight {
    ComplexField field;
    std::optional<Complex> constant_value;

    static Weight constant(Complex c);
    static Weight variable(ComplexField f) { return {std::move(f), std::nullopt}; }

    bool is_constant() const { return constant_value.has_value(); }
    Complex operator()(Complex z) const { return constant_value ? *constant_value : field.value(z); }
    Complex dx(Complex z) const { return constant_value ? Complex(0.0) : partial_x(field, z); }
    Complex dy(Complex z) const { return constant_value ? Complex(0.0) : partial_y(field, z); }
};

/// The weight pair (psi0, psi1) of D_psi = psi0 d/dx + psi1 d/dy.
struct PsiPair {
    Weight psi0;
    Weight psi1;

    static PsiPair constant(Complex p0, Complex p1) { return {Weight::constant(p0), Weight::constant(p1)}; }
    bool is_constant() const { return psi0.is_constant() && psi1.is_constant(); }
};

/// <psi0, psi1>_C = Re(conj(psi0) psi1) vanishes (to 1e-12, scaled by
/// max(1, |psi0||psi1|)) at every probe.
bool psi_orthogonal(const PsiPair& psi, std::span<const Complex> probes);

/// psi0(z) df/dx + psi1(z) df/dy.
Complex apply_D_psi(const ComplexField& f, const PsiPair& psi, Complex z);

/// Real-linear map (x, y) -> (a x + b y, c x + d y) with
/// a psi0 + b psi1 = 1 and c psi0 + d psi1 = i.
struct TransformT {
    double a, b, c, d;

    Complex apply(Complex z) const {
        return {a * z.real() + b * z.imag(), c * z.real() + d * z.imag()};
    }
    double determinant() const { return a * d - b * c; }
};

TransformT solve_transform_T(const PsiPair& psi);

/// Weighted Cauchy kernel E_psi(w, z) = 1 / (2 pi i (T(w) - T(z))) for a
/// constant weight pair; built once and evaluated many times.
class WeightedKernel {
public:
    explicit WeightedKernel(const PsiPair& psi);

    Complex operator()(Complex w, Complex z) const;
    /// Truncated expansion (1/2 pi i) sum_{n<terms} U_n(z) V_n(w) about
    /// `center`, with U_n = (T(z) - T(center))^n, V_n = (T(w) - T(center))^-(n+1).
    Complex series(Complex w, Complex z, int terms, Complex center) const;

    const TransformT& transform() const { return t_; }

private:
    TransformT t_;
};

enum class KernelMode { closed, series };

struct KernelOptions {
    KernelMode mode = KernelMode::closed;
    int terms = 32;
    Complex center{};
};

Complex eval_kernel_E_psi(const PsiPair& psi, Complex w, Complex z, const KernelOptions& options = {});

/// sin^2(angle) * trapezoid quadrature over [0, 2pi) of
/// (psi0 cos t + psi1 sin t) / ((cos t / r0^2 - sin t cos(angle)/(r0 r1)) psi0
///                               + (sin t / r1^2 - cos t cos(angle)/(r0 r1)) psi1).
Complex compute_c_psi(Complex psi0, Complex psi1, double r0, double r1, double angle, int n);

/// (x - (psi0/psi1) y)^n for z = x + i y; lies in the kernel of D_psi.
Complex weighted_monomial(const PsiPair& psi, Complex z, int n);

/// Both sides of the weighted Gauss theorem on a disk.
struct GaussBalance {
    Complex area;      ///< ∬ (D_psi f + (p0_x + q0_y) f + (p1_x + q1_y) i f) dx dy
    Complex boundary;  ///< ∮ f dsigma_psi, dsigma_psi = psi0 dy - psi1 dx
    double residual() const { return std::abs(area - boundary); }
};

GaussBalance gauss_residual_complex(const ComplexField& f, const PsiPair& psi, const Disk& disk);

struct CauchyPompeiuResult {
    Complex value;     ///< boundary - area
    Complex boundary;  ///< ∮ f(w) E_psi(w, z) dsigma_psi(w)
    Complex area;      ///< ∬ E_psi(w, z) D_psi f(w) dx dy
    std::optional<Complex> c_empirical;  ///< value / f(z), absent when f(z) = 0
};

/// Weighted Cauchy-Pompeiu reconstruction at an interior point z. The area
/// integral uses polar coordinates centred at z. Throws IllConditionedError
/// when z lies within three boundary node spacings of the circle.
CauchyPompeiuResult cauchy_pompeiu_reconstruct(const ComplexField& f, const PsiPair& psi, const Disk& disk,
                                               Complex z);

/// Throws IllConditionedError unless z is at least three boundary node
/// spacings inside the disk.
void require_interior(const Disk& disk, Complex z, const char* who);

}  // namespace bcfrac
