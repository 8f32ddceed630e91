#pragma once

#include <complex>
#include <utility>

namespace bcfrac {

using Complex = std::complex<double>;

/// Hyperbolic number l1*e + l2*e† (real idempotent components).
struct Hyperbolic {
    double l1 = 0.0;
    double l2 = 0.0;

    /// Member of the closed nonnegative cone D+.
    bool nonnegative() const { return l1 >= 0.0 && l2 >= 0.0; }
    /// Member of the open cone (both components strictly positive).
    bool positive() const { return l1 > 0.0 && l2 > 0.0; }

    friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

/// Bicomplex number stored in the idempotent basis: Z = z1*e + z2*e†,
/// with e = (1 + ij)/2 and e† = (1 - ij)/2. Sum and product act componentwise.
///
/// Arithmetic operators throw NumericError if a result component is not finite.
struct Bicomplex {
    Complex z1{};
    Complex z2{};

    constexpr Bicomplex() = default;
    constexpr Bicomplex(Complex a, Complex b) : z1(a), z2(b) {}
    /// Embeds a complex scalar c as c*e + c*e†.
    constexpr explicit Bicomplex(Complex c) : z1(c), z2(c) {}

    static constexpr Bicomplex e() { return {1.0, 0.0}; }
    static constexpr Bicomplex e_dagger() { return {0.0, 1.0}; }
    static constexpr Bicomplex one() { return {1.0, 1.0}; }
    static constexpr Bicomplex unit_i() { return {Complex(0, 1), Complex(0, 1)}; }
    static constexpr Bicomplex unit_j() { return {Complex(0, -1), Complex(0, 1)}; }
    /// k = ij = e - e†.
    static constexpr Bicomplex unit_k() { return {1.0, -1.0}; }

    const Complex& operator[](int l) const { return l == 0 ? z1 : z2; }
    Complex& operator[](int l) { return l == 0 ? z1 : z2; }

    bool is_finite() const;
    /// Both idempotent components are real.
    bool is_hyperbolic() const { return z1.imag() == 0.0 && z2.imag() == 0.0; }

    Bicomplex& operator+=(const Bicomplex& w);
    Bicomplex& operator-=(const Bicomplex& w);
    Bicomplex& operator*=(const Bicomplex& w);

    friend bool operator==(const Bicomplex&, const Bicomplex&) = default;
};

Bicomplex operator+(Bicomplex z, const Bicomplex& w);
Bicomplex operator-(Bicomplex z, const Bicomplex& w);
Bicomplex operator*(Bicomplex z, const Bicomplex& w);
Bicomplex operator-(const Bicomplex& z);
Bicomplex operator*(Complex c, const Bicomplex& z);

inline Bicomplex bc_add(const Bicomplex& z, const Bicomplex& w) { return z + w; }
inline Bicomplex bc_sub(const Bicomplex& z, const Bicomplex& w) { return z - w; }
inline Bicomplex bc_mul(const Bicomplex& z, const Bicomplex& w) { return z * w; }

/// Z = w1 + j*w2  ->  z1 = w1 - i*w2, z2 = w1 + i*w2.
Bicomplex bc_from_cartesian(Complex w1, Complex w2);
/// Inverse of bc_from_cartesian: returns (w1, w2).
std::pair<Complex, Complex> bc_to_cartesian(const Bicomplex& z);

/// Z* = conj(z1) e + conj(z2) e†.
Bicomplex bc_conj_star(const Bicomplex& z);
/// |Z|_k = |z1| e + |z2| e†.
Hyperbolic bc_modulus_k(const Bicomplex& z);
/// <Z,W>_k = (Z*W + W*Z)/2, real idempotent components.
Bicomplex bc_inner_k(const Bicomplex& z, const Bicomplex& w);
/// X ⪯ Y iff Y - X lies in D+. Throws DomainError unless both are hyperbolic.
bool bc_preceq(const Bicomplex& x, const Bicomplex& y);
/// Exact test: neither idempotent component is zero.
bool bc_invertible(const Bicomplex& z);

inline Bicomplex to_bicomplex(const Hyperbolic& h) { return {h.l1, h.l2}; }

}  // namespace bcfrac
