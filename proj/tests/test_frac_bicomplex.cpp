#include <doctest.h>

#include <cmath>

#include "bcfrac/errors.hpp"
#include "bcfrac/frac_bicomplex.hpp"
#include "bcfrac/registry.hpp"
#include "support.hpp"

using namespace bcfrac;
using testing::bc_err;

namespace {

const Complex I(0.0, 1.0);
const WeightPairBC kStar = WeightPairBC::constant(0.5, Complex(0.0, 0.5));
const Rect4 kUnit{};

double g(double x) { return std::tgamma(x); }

BCProductField scaled(const BCProductField& f, Complex s) {
    const auto scale = [s](const ComplexField& c) {
        return wirtinger_field([c, s](Complex z) { return s * c(z); }, [c, s](Complex z) { return s * wirtinger_dz(c, z); },
                               [c, s](Complex z) { return s * wirtinger_dzbar(c, z); });
    };
    return {scale(f.f1), scale(f.f2)};
}

BCProductField zero_field() { return scaled(registry_field("one"), 0.0); }

}  // namespace

TEST_CASE("fractional derivative of constants and linear fields") {
    const AlphaVec alpha{{0.3, 0.5, 0.6, 0.7}};
    const Bicomplex w(Complex(0.2, 0.9), Complex(0.5, 0.5));
    const Bicomplex z(Complex(0.3, 0.6), Complex(0.7, 0.2));
    const WeightPairBC weights = WeightPairBC::constant(Complex(1, 2), Complex(-1, 0.5), Complex(0.5, -1), 3.0);
    const FracScheme scheme{256, 1.0};

    const Bicomplex d = frac_D(registry_field("one"), {w, z}, alpha, weights, kUnit, FracSide::a_plus, scheme);
    const Complex want1 = Complex(1, 2) * std::pow(0.3, -0.3) / g(0.7) + Complex(0.5, -1) * std::pow(0.6, -0.5) / g(0.5);
    const Complex want2 = Complex(-1, 0.5) * std::pow(0.7, -0.6) / g(0.4) + 3.0 * std::pow(0.2, -0.7) / g(0.3);
    CHECK(std::abs(d.z1 - want1) < 1e-12);
    CHECK(std::abs(d.z2 - want2) < 1e-12);

    // f(z) = z restricted to x -> x + i Im w and y -> Re w + i y: a linear part plus a constant.
    const Bicomplex half(Complex(0.5, 0.5), Complex(0.5, 0.5));
    const Bicomplex dz = frac_D(registry_field("z"), {half, half}, AlphaVec::uniform(0.5), WeightPairBC::constant(1.0, 0.0),
                                kUnit, FracSide::a_plus, scheme);
    const Bicomplex dy = frac_D(registry_field("z"), {half, half}, AlphaVec::uniform(0.5), WeightPairBC::constant(0.0, 1.0),
                                kUnit, FracSide::a_plus, scheme);
    const double lin = std::sqrt(0.5) / g(1.5), cst = 0.5 * std::pow(0.5, -0.5) / g(0.5);
    CHECK(std::abs(dz.z1 - (lin + I * cst)) < 1e-12);
    CHECK(std::abs(dy.z1 - (cst + I * lin)) < 1e-12);

    const Bicomplex d2 = frac_D(scaled(registry_field("z2"), 2.0), {w, z}, alpha, weights, kUnit, FracSide::a_plus, scheme);
    const Bicomplex d1 = frac_D(registry_field("z2"), {w, z}, alpha, weights, kUnit, FracSide::a_plus, scheme);
    CHECK(bc_err(d2, Complex(2.0) * d1) < 1e-12);

    CHECK_THROWS_AS(frac_D(registry_field("one"), {w, Bicomplex(2.0, 0.5)}, alpha, weights, kUnit, FracSide::a_plus, scheme),
                    DomainError);
    CHECK_THROWS_AS(frac_D(registry_field("one"), {w, z}, AlphaVec::uniform(1.0), weights, kUnit, FracSide::a_plus, scheme),
                    DomainError);
}

TEST_CASE("right-sided derivative mirrors the box") {
    const Bicomplex z(Complex(0.3, 0.6), Complex(0.7, 0.2));
    const Bicomplex d = frac_D(registry_field("one"), {z, z}, AlphaVec::uniform(0.5), WeightPairBC::constant(1.0, 1.0),
                               kUnit, FracSide::b_minus, {256, 1.0});
    CHECK(std::abs(d.z1 - (std::pow(0.7, -0.5) + std::pow(0.4, -0.5)) / g(0.5)) < 1e-12);
}

TEST_CASE("fractional integral") {
    const AlphaVec alpha{{0.3, 0.5, 0.6, 0.7}};
    const Bicomplex w(Complex(0.2, 0.9), Complex(0.5, 0.5));
    const Bicomplex z(Complex(0.3, 0.6), Complex(0.7, 0.2));
    const FracScheme scheme{256, 1.0};
    const Bicomplex i1 = frac_I(registry_field("one"), {w, z}, alpha, kUnit, scheme);
    CHECK(std::abs(i1.z1 - (std::pow(0.3, 0.7) / g(1.7) + std::pow(0.6, 0.5) / g(1.5))) < 1e-12);
    CHECK(std::abs(i1.z2 - (std::pow(0.7, 0.4) / g(1.4) + std::pow(0.2, 0.3) / g(1.3))) < 1e-12);
    CHECK(bc_err(frac_I(registry_field("z2"), {w, Bicomplex()}, alpha, kUnit, scheme), Bicomplex()) == 0.0);

    const Bicomplex a = frac_I(registry_field("mixed"), {w, z}, alpha, kUnit, scheme);
    const Bicomplex b = frac_I(scaled(registry_field("mixed"), Complex(0, 3)), {w, z}, alpha, kUnit, scheme);
    CHECK(bc_err(b, Complex(0, 3) * a) < 1e-12);
}

TEST_CASE("fractional P and T") {
    const AlphaVec alpha{{0.3, 0.5, 0.6, 0.7}};
    const Bicomplex q(Complex(0.3, 0.6), Complex(0.7, 0.2));
    const FracScheme scheme{256, 1.0};
    const Bicomplex p = frac_P([](int, Complex) { return Complex(1.0); }, q, alpha, kUnit, scheme);
    CHECK(std::abs(p.z1 - (std::pow(0.3, -0.7) / g(0.3) + std::pow(0.6, -0.5) / g(0.5))) < 1e-12);
    CHECK(std::abs(p.z2 - (std::pow(0.7, -0.4) / g(0.6) + std::pow(0.2, -0.3) / g(0.7))) < 1e-12);

    // A function of x1 alone: the y1 term is the constant contribution.
    const Bicomplex px = frac_P([](int l, Complex z) { return l == 1 ? Complex(z.real()) : Complex(0.0); }, q,
                                AlphaVec::uniform(0.5), kUnit, scheme);
    CHECK(std::abs(px.z1 - (std::pow(0.3, 0.5) / g(1.5) + 0.3 * std::pow(0.6, -0.5) / g(0.5))) < 1e-12);
    CHECK(px.z2 == Complex(0.0));

    const FracEvalPoint at{q, q};
    const Bicomplex t = frac_T(registry_field("one"), at, alpha, kUnit, scheme, TConvention::as_displayed);
    const double x = 0.3, y = 0.6;
    CHECK(std::abs(t.z1 - (std::pow(x, -0.3) * std::pow(y, 0.5) / (g(0.7) * g(1.5)) +
                           std::pow(y, -0.5) * std::pow(x, 0.7) / (g(0.5) * g(1.7)))) < 1e-12);

    const Bicomplex t2 = frac_T(scaled(registry_field("one"), 2.0), at, alpha, kUnit, scheme);
    CHECK(bc_err(t2, Complex(2.0) * frac_T(registry_field("one"), at, alpha, kUnit, scheme)) < 1e-12);

    const Bicomplex swap_a(Complex(0.3, 0.6), Complex(0.5, 0.5)), swap_b(Complex(0.6, 0.3), Complex(0.5, 0.5));
    const Bicomplex ta = frac_T(registry_field("one"), {swap_a, swap_a}, AlphaVec::uniform(0.4), kUnit, scheme);
    const Bicomplex tb = frac_T(registry_field("one"), {swap_b, swap_b}, AlphaVec::uniform(0.4), kUnit, scheme);
    CHECK(std::abs(ta.z1 - tb.z1) < 1e-12);

    const Bicomplex half_a = frac_T(registry_field("z"), at, AlphaVec::uniform(0.5), kUnit, scheme);
    const Bicomplex half_b =
        frac_T(registry_field("z"), at, AlphaVec::uniform(0.5), kUnit, scheme, TConvention::as_displayed);
    CHECK(bc_err(half_a, half_b) < 1e-14);
    const Bicomplex skew_a = frac_T(registry_field("one"), at, AlphaVec::uniform(0.3), kUnit, scheme);
    const Bicomplex skew_b =
        frac_T(registry_field("one"), at, AlphaVec::uniform(0.3), kUnit, scheme, TConvention::as_displayed);
    CHECK(bc_err(skew_a, skew_b) > 1e-2);
}

TEST_CASE("derivative-integral factorization residuals") {
    const FracEvalPoint p{Bicomplex(Complex(0.5, 0.5), Complex(0.5, 0.5)), Bicomplex(Complex(0.6, 0.4), Complex(0.3, 0.7))};
    const AlphaVec alpha = AlphaVec::uniform(0.5);

    const auto zero = di_residuals(zero_field(), p, alpha, kStar, kUnit, {1024, 1.0});
    CHECK(zero.r1 == 0.0);
    CHECK(zero.r2 == 0.0);

    const auto one = di_residuals(registry_field("one"), p, alpha, kStar, kUnit, {4096, 1.0});
    CHECK(one.r1 <= 5e-3);
    CHECK(one.r2 <= 1e-2);

    const auto coarse = di_residuals(registry_field("z"), p, alpha, kStar, kUnit, {1024, 1.0});
    const auto fine = di_residuals(registry_field("z"), p, alpha, kStar, kUnit, {2048, 1.0});
    CHECK(fine.r1 < coarse.r1);
    CHECK(fine.r2 < coarse.r2);
    CHECK(fine.r1 <= 1e-2);
    CHECK(fine.r2 <= 1e-2);
}

TEST_CASE("fractional Gauss balance") {
    const Bicomplex w(Complex(0.5, 0.5), Complex(0.5, 0.5));
    const AlphaVec alpha = AlphaVec::uniform(0.5);
    const auto zero = frac_gauss_residual(zero_field(), w, alpha, kStar, kUnit, {256, 1.0}, 16);
    CHECK(zero.residual() == 0.0);

    const double coarse = frac_gauss_residual(registry_field("one"), w, alpha, kStar, kUnit, {256, 1.0}, 16).residual();
    const double fine = frac_gauss_residual(registry_field("one"), w, alpha, kStar, kUnit, {256, 1.0}, 32).residual();
    CHECK(coarse <= 5e-2);
    CHECK(fine < coarse);
}

TEST_CASE("fractional Borel-Pompeiu with calibrated normalization") {
    const Bicomplex w(Complex(0.5, 0.5), Complex(0.5, 0.5));
    const BCBall ball{Bicomplex(Complex(0.4, 0.4), Complex(0.4, 0.4)), {0.4, 0.4}};
    const AlphaVec alpha = AlphaVec::uniform(0.5);
    const FracScheme scheme{128, 1.0};
    const FracBPGrid grid{16, 64, 256};

    const auto zero = frac_bp_reconstruct(zero_field(), w, ball.center, ball, alpha, kStar, kUnit, scheme, grid,
                                          Bicomplex::one());
    CHECK(zero.lhs == Bicomplex());
    CHECK(zero.rhs == Bicomplex());

    const auto one = frac_bp_reconstruct(registry_field("one"), w, ball.center, ball, alpha, kStar, kUnit, scheme, grid);
    CHECK(one.residual <= 1e-12);
    CHECK(std::abs(one.c_hat.z1 + 0.25 * I) < 1e-2);

    const auto linear = frac_bp_reconstruct(registry_field("z"), w, ball.center, ball, alpha, kStar, kUnit, scheme, grid);
    CHECK(linear.residual <= 5e-2);
    CHECK(bc_err(linear.c_hat, one.c_hat) == 0.0);

    CHECK_THROWS_AS(frac_bp_reconstruct(registry_field("z"), w, ball.center, ball, alpha, kStar, kUnit, scheme, {16, 62, 256}),
                    DomainError);
    const BCBall outside{Bicomplex(Complex(0.8, 0.5), Complex(0.5, 0.5)), {0.3, 0.3}};
    CHECK_THROWS_AS(frac_bp_reconstruct(registry_field("z"), w, outside.center, outside, alpha, kStar, kUnit, scheme, grid),
                    DomainError);
    const WeightPairBC variable{Weight::variable(registry_component("z", 1)), Weight::constant(0.5),
                                Weight::constant(Complex(0, 0.5)), Weight::constant(Complex(0, 0.5))};
    CHECK_THROWS_AS(frac_bp_reconstruct(registry_field("z"), w, ball.center, ball, alpha, variable, kUnit, scheme, grid),
                    DomainError);
}

TEST_CASE("fractional Borel-Pompeiu stalls when the base segments leave the ball") {
    // Ball centred at (0.5, 0.5) with radius 0.3 leaves the lines from the base to Q partly outside.
    const Bicomplex w(Complex(0.5, 0.5), Complex(0.5, 0.5));
    const BCBall ball{w, {0.3, 0.3}};
    const AlphaVec alpha = AlphaVec::uniform(0.5);
    const auto level0 = frac_bp_reconstruct(registry_field("z"), w, w, ball, alpha, kStar, kUnit, {128, 1.0}, {16, 64, 256});
    const auto level1 = frac_bp_reconstruct(registry_field("z"), w, w, ball, alpha, kStar, kUnit, {256, 1.0}, {32, 128, 512});
    CHECK(level1.residual > 0.5 * level0.residual);
    CHECK(std::abs(level1.c_hat.z1 + 0.25 * I) > 2e-2);
}
