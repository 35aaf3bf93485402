#pragma once
// Minimal complex type over either scalar. std::complex is only specified for
// the built-in floating types, so the sweeps use this instead.

namespace tridiag_hira {

template <class Real>
struct Complex {
    Real re{};
    Real im{};

    Complex() = default;
    Complex(Real r, Real i = Real(0)) : re(r), im(i) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(const Real& s, const Complex& a) { return {a.re * s, a.im * s}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

    Complex conj() const { return {re, -im}; }
    // Squared modulus.
    Real norm() const { return re * re + im * im; }
};

}  // namespace tridiag_hira
