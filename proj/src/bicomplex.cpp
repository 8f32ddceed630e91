#include "bcfrac/bicomplex.hpp"

#include <cmath>

#include "bcfrac/errors.hpp"

namespace bcfrac {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

const Bicomplex& checked(const Bicomplex& z, const char* what) {
    if (!z.is_finite()) throw NumericError(std::string("bicomplex ") + what + " produced a non-finite value");
    return z;
}

void require_finite(const Bicomplex& z, const char* what) {
    if (!z.is_finite()) throw DomainError(std::string(what) + ": non-finite operand");
}

}  // namespace

bool Bicomplex::is_finite() const { return finite(z1) && finite(z2); }

Bicomplex& Bicomplex::operator+=(const Bicomplex& w) {
    z1 += w.z1;
    z2 += w.z2;
    checked(*this, "sum");
    return *this;
}

Bicomplex& Bicomplex::operator-=(const Bicomplex& w) {
    z1 -= w.z1;
    z2 -= w.z2;
    checked(*this, "difference");
    return *this;
}

Bicomplex& Bicomplex::operator*=(const Bicomplex& w) {
    z1 *= w.z1;
    z2 *= w.z2;
    checked(*this, "product");
    return *this;
}

Bicomplex operator+(Bicomplex z, const Bicomplex& w) { return z += w; }
Bicomplex operator-(Bicomplex z, const Bicomplex& w) { return z -= w; }
Bicomplex operator*(Bicomplex z, const Bicomplex& w) { return z *= w; }
Bicomplex operator-(const Bicomplex& z) { return {-z.z1, -z.z2}; }
Bicomplex operator*(Complex c, const Bicomplex& z) { return Bicomplex(c) * z; }

Bicomplex bc_from_cartesian(Complex w1, Complex w2) {
    if (!finite(w1) || !finite(w2)) throw DomainError("bc_from_cartesian: non-finite input");
    const Complex i(0.0, 1.0);
    return {w1 - i * w2, w1 + i * w2};
}

std::pair<Complex, Complex> bc_to_cartesian(const Bicomplex& z) {
    require_finite(z, "bc_to_cartesian");
    const Complex i(0.0, 1.0);
    return {0.5 * (z.z1 + z.z2), 0.5 * i * (z.z1 - z.z2)};
}

Bicomplex bc_conj_star(const Bicomplex& z) {
    require_finite(z, "bc_conj_star");
    return {std::conj(z.z1), std::conj(z.z2)};
}

Hyperbolic bc_modulus_k(const Bicomplex& z) {
    require_finite(z, "bc_modulus_k");
    return {std::abs(z.z1), std::abs(z.z2)};
}

Bicomplex bc_inner_k(const Bicomplex& z, const Bicomplex& w) {
    require_finite(z, "bc_inner_k");
    require_finite(w, "bc_inner_k");
    // Re(conj(z) w) is symmetric in (z, w) bit for bit.
    auto inner = [](Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); };
    return {inner(z.z1, w.z1), inner(z.z2, w.z2)};
}

bool bc_preceq(const Bicomplex& x, const Bicomplex& y) {
    require_finite(x, "bc_preceq");
    require_finite(y, "bc_preceq");
    if (!x.is_hyperbolic() || !y.is_hyperbolic())
        throw DomainError("bc_preceq: operands must be hyperbolic numbers");
    return y.z1.real() - x.z1.real() >= 0.0 && y.z2.real() - x.z2.real() >= 0.0;
}

bool bc_invertible(const Bicomplex& z) {
    require_finite(z, "bc_invertible");
    return z.z1 != Complex(0.0) && z.z2 != Complex(0.0);
}

}  // namespace bcfrac
