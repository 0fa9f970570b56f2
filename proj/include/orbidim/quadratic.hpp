#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

#include "orbidim/rational.hpp"

namespace orbidim {

// Element a + b sqrt(D) of a quadratic field, D a squarefree non-square.
// For D < 0, sqrt(D) means i sqrt(|D|). Exact arithmetic over Rational.
template <int D>
struct Quad {
    static_assert(D != 0 && D != 1, "D must be a squarefree non-square");

    Rational a;
    Rational b;

    constexpr Quad() = default;
    constexpr Quad(std::int64_t n) : a(n) {}
    Quad(Rational ra, Rational rb) : a(ra), b(rb) {}

    static Quad root() { return Quad(Rational(0), Rational(1)); }

    Quad conj() const { return Quad(a, -b); }

    bool is_zero() const { return a == Rational(0) && b == Rational(0); }

    friend Quad operator+(const Quad& x, const Quad& y) { return Quad(x.a + y.a, x.b + y.b); }
    friend Quad operator-(const Quad& x, const Quad& y) { return Quad(x.a - y.a, x.b - y.b); }
    Quad operator-() const { return Quad(-a, -b); }

    friend Quad operator*(const Quad& x, const Quad& y) {
        return Quad(x.a * y.a + Rational(D) * x.b * y.b, x.a * y.b + x.b * y.a);
    }

    // a^2 - D b^2, the field norm.
    Rational norm() const { return a * a - Rational(D) * b * b; }

    Quad inverse() const {
        Rational n = norm();
        if (n == Rational(0)) throw value_error("inverse of zero in quadratic field");
        return Quad(a / n, -b / n);
    }

    friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inverse(); }

    friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

    std::complex<double> to_complex() const {
        double av = static_cast<double>(a.num()) / static_cast<double>(a.den());
        double bv = static_cast<double>(b.num()) / static_cast<double>(b.den());
        if (D >= 0) return {av + bv * std::sqrt(static_cast<double>(D)), 0.0};
        return {av, bv * std::sqrt(static_cast<double>(-D))};
    }

    std::string str() const {
        std::string root_name = D >= 0 ? "sqrt(" + std::to_string(D) + ")"
                                       : "i*sqrt(" + std::to_string(-D) + ")";
        return a.str() + " + " + b.str() + "*" + root_name;
    }
};

}  // namespace orbidim
