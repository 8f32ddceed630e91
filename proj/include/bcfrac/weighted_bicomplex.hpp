#pragma once

#include <optional>
#include <span>

#include "bcfrac/bicomplex.hpp"
#include "bcfrac/quadrature.hpp"
#include "bcfrac/weighted_complex.hpp"

namespace bcfrac {

/// theta = theta1 e + theta2 e†, phi = phi1 e + phi2 e†.
struct WeightPairBC {
    Weight theta1, theta2, phi1, phi2;

    static WeightPairBC constant(Complex t1, Complex t2, Complex p1, Complex p2);
    /// Same theta and phi on both idempotent components.
    static WeightPairBC constant(Complex theta, Complex phi) { return constant(theta, theta, phi, phi); }

    /// The complex pair (theta_l, phi_l) acting on component l in {1, 2}.
    PsiPair component(int l) const;
    bool is_constant() const;
};

/// F(Z) = f1(z1) e + f2(z2) e†.
struct BCProductField {
    ComplexField f1, f2;

    const ComplexField& component(int l) const;
    Bicomplex operator()(const Bicomplex& z) const { return {f1(z.z1), f2(z.z2)}; }
};

/// Bicomplex ball B(A, r): the product of disks |z_l - A_l| < r_l.
struct BCBall {
    Bicomplex center;
    Hyperbolic radius{1.0, 1.0};

    void validate() const;
    Disk disk(int l, int nr, int nth) const;
    bool contains(const Bicomplex& z) const;
};

struct BallGrid {
    int nr = 16;
    int nth = 64;
};

struct OrthogonalityReport {
    bool inner_form = false;        ///< <theta_l, phi_l>_C = 0 for l = 1, 2
    bool proposition_form = false;  ///< (p12 e + p22 e†) phi = -i (q11 e + q21 e†) theta
    double max_inner = 0.0;
    double max_form_gap = 0.0;

    bool holds() const { return inner_form && proposition_form; }
};

OrthogonalityReport bc_weights_orthogonal(const WeightPairBC& w, std::span<const Bicomplex> probes);

/// (theta1 d/dx1 + phi1 d/dy1) f1 e + (theta2 d/dx2 + phi2 d/dy2) f2 e†.
Bicomplex apply_D_thetaphi(const BCProductField& f, const WeightPairBC& w, const Bicomplex& z);

struct ZeroOrderFields {
    Bicomplex A;
    Bicomplex B;
};

/// A = (d p_l1/dx_l + d q_l1/dy_l) per component, B likewise with p_l2, q_l2.
ZeroOrderFields fields_A_B(const WeightPairBC& w, const Bicomplex& z);

struct BCGaussBalance {
    Bicomplex area;
    Bicomplex boundary;
    double residual() const;  ///< max over components of |area - boundary|
};

/// Weighted Gauss theorem on the distinguished boundary of the ball, area
/// measured in dx_l dy_l per component.
BCGaussBalance bc_gauss_residual(const BCProductField& f, const WeightPairBC& w, const BCBall& ball,
                                 const BallGrid& grid);

struct BBPFResult {
    Bicomplex value;     ///< boundary + area, should equal F(W)
    Bicomplex boundary;  ///< (1/2 pi i) ∮ F/(Z-W) dZ
    Bicomplex area;      ///< (1/2 pi i) ∬ (dF/dZ*)/(Z-W) dZ ∧ dZ*
};

/// Classical bicomplex Borel-Pompeiu reconstruction of F(W). Throws
/// IllConditionedError when W is within three boundary node spacings of
/// either circle.
BBPFResult bbpf_reconstruct(const BCProductField& f, const BCBall& ball, const Bicomplex& w, const BallGrid& grid);

enum class AreaMeasure {
    dxdy,     ///< dx_l dy_l per component
    dzdzbar,  ///< dz_l ∧ d(conj z_l) = -2i dx_l dy_l
};

struct WeightedBPResult {
    Bicomplex value;
    Bicomplex boundary;
    Bicomplex area;
    std::optional<Bicomplex> c_empirical;  ///< value / F(W), absent unless F(W) is invertible
};

/// Weighted bicomplex Borel-Pompeiu: ∮ F E dsigma - ∬ E dF/dZ_theta,phi, per component.
WeightedBPResult bc_weighted_bp_reconstruct(const BCProductField& f, const WeightPairBC& w, const BCBall& ball,
                                            const Bicomplex& z, const BallGrid& grid,
                                            AreaMeasure measure = AreaMeasure::dxdy);

}  // namespace bcfrac
