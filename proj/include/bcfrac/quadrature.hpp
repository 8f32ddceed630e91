#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "bcfrac/bicomplex.hpp"

namespace bcfrac {

using ComplexFn = std::function<Complex(Complex)>;

/// Circle |z - center| = radius sampled at n equispaced angles
/// theta_k = (k + offset) * 2pi/n, counterclockwise.
struct Circle {
    Complex center{};
    double radius = 1.0;
    int n = 64;
    double offset = 0.0;

    void validate() const;
    double spacing() const;  ///< arc length between neighbouring nodes
    double angle(int k) const;
    Complex node(int k) const;
};

/// Disk |z - center| < radius with a polar tensor grid: nr Gauss-Legendre
/// radii, nth trapezoid angles (offset by half a spacing).
struct Disk {
    Complex center{};
    double radius = 1.0;
    int nr = 16;
    int nth = 64;

    void validate() const;
    Circle boundary(double offset = 0.5) const { return {center, radius, nth, offset}; }
    bool contains(Complex z) const;
};

/// Axis-aligned rectangle [x0,x1] x [y0,y1] with nx x ny Gauss-Legendre nodes.
struct Box {
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    int nx = 32;
    int ny = 32;

    void validate() const;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n). Cached per thread.
const GaussRule& gauss_legendre(int n);

/// Order-deterministic pairwise summation.
Complex pairwise_sum(std::span<const Complex> values);

/// Contour integral of g(z) dz over the circle, periodic trapezoid rule.
Complex integrate_circle(const ComplexFn& g, const Circle& c);

/// Contour integral of the 1-form p dx + q dy over the circle.
Complex integrate_circle_form(const ComplexFn& p, const ComplexFn& q, const Circle& c);

/// Area integral of g dx dy over the disk.
Complex integrate_disk_area(const ComplexFn& g, const Disk& d);

/// Area integral of g dx dy over the disk in polar coordinates centred at an
/// interior point q: rho in [0, rho_max(phi)], with nr Gauss-Legendre radii
/// and nth trapezoid angles. No node lands on q, and an integrand with a
/// 1/|z - q| singularity becomes bounded in (rho, phi).
Complex integrate_disk_area_about(const ComplexFn& g, const Disk& d, Complex q);

/// Area integral of g dz ∧ d(conj z) = -2i g dx dy.
Complex integrate_disk_dzdzbar(const ComplexFn& g, const Disk& d);

/// Area integral of g dx dy over the box, tensor Gauss-Legendre.
Complex integrate_box_area(const ComplexFn& g, const Box& b);

/// Counterclockwise integral of p dx + q dy around the box boundary,
/// Gauss-Legendre on each edge (nx nodes on horizontal, ny on vertical edges).
Complex integrate_box_form(const ComplexFn& p, const ComplexFn& q, const Box& b);

struct ResidualSample {
    double h;
    double r;
};

/// Least-squares slope of log r against log h. Returns +infinity (the "exact"
/// sentinel) if any residual is zero. Throws DomainError for fewer than three
/// samples or h not strictly decreasing.
double estimate_order(std::span<const ResidualSample> samples);

inline bool order_is_exact(double order) { return order == std::numeric_limits<double>::infinity(); }

}  // namespace bcfrac
