#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "bcfrac/bicomplex.hpp"

namespace testing {

using bcfrac::Bicomplex;
using bcfrac::Complex;

inline double rel_err(Complex got, Complex want) {
    const double scale = std::abs(want);
    return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got);
}

inline double bc_err(const Bicomplex& a, const Bicomplex& b) {
    return std::max(std::abs(a.z1 - b.z1), std::abs(a.z2 - b.z2));
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(unsigned long long seed) : engine(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
    Complex complex(double r = 1.0) { return {uniform(-r, r), uniform(-r, r)}; }
    Bicomplex bicomplex(double r = 1.0) { return {complex(r), complex(r)}; }
};

}  // namespace testing
