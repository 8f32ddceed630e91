#pragma once

#include <functional>

#include "bcfrac/bicomplex.hpp"

namespace bcfrac {

/// Closed segment [a, b] with a < b.
struct Segment {
    double a;
    double b;

    Segment(double lo, double hi);
    double length() const { return b - a; }
    bool contains(double x) const { return x >= a && x <= b; }
    /// The reflection x -> a + b - x.
    double mirror(double x) const { return a + b - x; }
};

/// A complex-valued function of one real variable. Must be reentrant; it is
/// only evaluated inside the segment it is integrated over.
using LineFunction = std::function<Complex(double)>;

enum class Side { left, right };

/// Discretization of the Riemann-Liouville operators. Nodes on [base, x] are
/// base + (x - base) * (k/n)^grading, so grading > 1 clusters them at the
/// base (singular) endpoint.
struct FracScheme {
    int n = 1024;
    double grading = 1.0;

    void validate() const;
};

/// Riemann-Liouville integral of order alpha in (0,1) at x, left (base a)
/// or right (base b). Product-trapezoidal rule: the kernel is integrated
/// exactly against the piecewise-linear interpolant of f. Evaluation at the
/// base point itself returns 0.
Complex rl_integral(const LineFunction& f, const Segment& seg, double alpha, double x, Side side,
                    const FracScheme& scheme);

/// Riemann-Liouville derivative of order alpha in (0,1) at x, the L1 scheme:
/// the exact RL derivative of the piecewise-linear interpolant of f, i.e.
///   f(a) (x-a)^-alpha / Gamma(1-alpha)
///   + sum_k (f_{k+1}-f_k)/h_k [(x-t_k)^{1-alpha} - (x-t_{k+1})^{1-alpha}] / Gamma(2-alpha).
/// The right-sided derivative is evaluated through the reflection x -> a+b-x.
Complex rl_derivative(const LineFunction& f, const Segment& seg, double alpha, double x, Side side,
                      const FracScheme& scheme);

/// Exact left RL derivative of (t - a)^beta at x:
/// Gamma(beta+1) / Gamma(beta-alpha+1) * (x-a)^(beta-alpha).
Complex rl_power_oracle(double beta, double alpha, double a, double x);

/// Exact left RL integral of (t - a)^beta of order mu > 0 at x:
/// Gamma(beta+1) / Gamma(beta+mu+1) * (x-a)^(beta+mu).
double rl_power_integral(double beta, double mu, double a, double x);

}  // namespace bcfrac
