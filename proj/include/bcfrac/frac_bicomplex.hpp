#pragma once

#include <array>
#include <functional>
#include <optional>

#include "bcfrac/frac1d.hpp"
#include "bcfrac/weighted_bicomplex.hpp"

namespace bcfrac {

/// Orders (alpha0, alpha1, alpha2, alpha3) for the axes (x1, y1, x2, y2).
struct AlphaVec {
    std::array<double, 4> a{0.5, 0.5, 0.5, 0.5};

    static AlphaVec uniform(double alpha) { return {{alpha, alpha, alpha, alpha}}; }
    void validate() const;
    double operator[](int k) const { return a[static_cast<std::size_t>(k)]; }
};

/// The box J_U^V: Re z_l in [a_l, b_l], Im z_l in [c_l, d_l].
struct Rect4 {
    double a1 = 0.0, b1 = 1.0, c1 = 0.0, d1 = 1.0;
    double a2 = 0.0, b2 = 1.0, c2 = 0.0, d2 = 1.0;

    void validate() const;
    /// (a1, c1, a2, c2), paired with axes (x1, y1, x2, y2).
    std::array<double, 4> base() const { return {a1, c1, a2, c2}; }
    std::array<double, 4> top() const { return {b1, d1, b2, d2}; }
    Segment axis_segment(int k) const;
    Box box(int l, int nx, int ny) const;
    bool contains(const Bicomplex& z) const;
    /// Closure of the ball inside the box, componentwise.
    bool contains(const BCBall& ball) const;
};

struct FracEvalPoint {
    Bicomplex W;  ///< anchor fixing the line restrictions
    Bicomplex Z;  ///< evaluation point
};

enum class FracSide { a_plus, b_minus };

/// Prefactor used by the T operator. `order_consistent` uses
/// (x - a)^(alpha-1) / Gamma(alpha), which is what D^(1-alpha) of a constant
/// produces; `as_displayed` uses (x - a)^(-alpha) / Gamma(1 - alpha). The two
/// agree only at alpha = 1/2.
enum class TConvention { order_consistent, as_displayed };

/// Weighted fractional derivative: per component l,
/// theta_l D^{alpha}[x -> f_l(x + i Im w_l)](Re z_l) + phi_l D^{alpha}[y -> f_l(Re w_l + i y)](Im z_l).
Bicomplex frac_D(const BCProductField& f, const FracEvalPoint& p, const AlphaVec& alpha, const WeightPairBC& w,
                 const Rect4& rect, FracSide side, const FracScheme& scheme);

/// Sum of the two line integrals of order 1 - alpha per component, left side.
Bicomplex frac_I(const BCProductField& f, const FracEvalPoint& p, const AlphaVec& alpha, const Rect4& rect,
                 const FracScheme& scheme);

/// g(l, z) is component l of a field evaluated with z_l = z and the other
/// component held fixed.
using ComponentMap = std::function<Complex(int l, Complex z)>;

/// Sum of the two left fractional partial derivatives of order 1 - alpha per
/// component, applied to g along the axis-parallel lines through q.
Bicomplex frac_P(const ComponentMap& g, const Bicomplex& q, const AlphaVec& alpha, const Rect4& rect,
                 const FracScheme& scheme);

Bicomplex frac_T(const BCProductField& f, const FracEvalPoint& p, const AlphaVec& alpha, const Rect4& rect,
                 const FracScheme& scheme, TConvention convention = TConvention::order_consistent);

/// (f1(x1 + i Im w1) + f1(Re w1 + i y1)) e + (f2(x2 + i Im w2) + f2(Re w2 + i y2)) e†.
Bicomplex mixed_sum(const BCProductField& f, const Bicomplex& w, const Bicomplex& z);

struct DIResiduals {
    double r1 = 0.0;  ///< |D F - d/dZ_theta,phi (I F)|, derivative by central differences
    double r2 = 0.0;  ///< |P (I F) - mixed_sum - T F|
};

/// The central-difference step on each axis is (coordinate - base) / scheme.n.
DIResiduals di_residuals(const BCProductField& f, const FracEvalPoint& p, const AlphaVec& alpha,
                         const WeightPairBC& w, const Rect4& rect, const FracScheme& scheme,
                         TConvention convention = TConvention::order_consistent);

struct FracGaussBalance {
    Bicomplex area;      ///< ∬ (D F + A I F + B i I F) dx_l dy_l
    Bicomplex boundary;  ///< ∮ I F dsigma over the box boundaries
    double residual() const;
};

/// Gauss balance over the box, nb x nb Gauss-Legendre nodes per component.
FracGaussBalance frac_gauss_residual(const BCProductField& f, const Bicomplex& w, const AlphaVec& alpha,
                                     const WeightPairBC& weights, const Rect4& rect, const FracScheme& scheme,
                                     int nb);

struct FracBPGrid {
    int nr = 16;
    int nth = 64;        ///< angular nodes on the disks and the boundary circles, multiple of 4
    int n_kernel = 256;  ///< line nodes for P applied to the kernel
};

struct FracBPResult {
    Bicomplex lhs;       ///< mixed_sum(F, W, Q)
    Bicomplex boundary;  ///< ∮ I F (P E) dsigma
    Bicomplex area;      ///< ∬ (P E) D F dx dy
    Bicomplex t_term;    ///< T F(W, Q)
    Bicomplex c_hat;     ///< normalization calibrated on F = 1
    Bicomplex rhs;       ///< boundary - area - c_hat T
    double residual = 0.0;  ///< max_l |c_hat_l lhs_l - rhs_l|
};

/// Fractional Borel-Pompeiu check at Q. P is applied to Q -> E(Z, Q) by the
/// L1 scheme at every quadrature node Z; the area rule is polar about Q. When
/// `c_hat` is absent it is calibrated by a run on F = 1 with the same grids.
/// The identity needs the segments from the base point to Q to stay in the
/// closed ball.
FracBPResult frac_bp_reconstruct(const BCProductField& f, const Bicomplex& w, const Bicomplex& q, const BCBall& ball,
                                 const AlphaVec& alpha, const WeightPairBC& weights, const Rect4& rect,
                                 const FracScheme& scheme, const FracBPGrid& grid,
                                 std::optional<Bicomplex> c_hat = std::nullopt,
                                 TConvention convention = TConvention::order_consistent);

}  // namespace bcfrac
