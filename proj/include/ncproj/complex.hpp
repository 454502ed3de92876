#pragma once

#include <complex>

#include "ncproj/scalar.hpp"

namespace ncproj {

struct Complex {
    std::complex<double> v;

    Complex() = default;
    Complex(double re, double im = 0.0) : v(re, im) {}
    explicit Complex(std::complex<double> c) : v(c) {}

    friend bool operator==(const Complex&, const Complex&) = default;
    friend Complex operator+(const Complex& a, const Complex& b) { return Complex(a.v + b.v); }
    friend Complex operator-(const Complex& a, const Complex& b) { return Complex(a.v - b.v); }
    friend Complex operator-(const Complex& a) { return Complex(-a.v); }
    friend Complex operator*(const Complex& a, const Complex& b) { return Complex(a.v * b.v); }
};

inline double norm(const Complex& a) { return std::abs(a.v); }
Complex inverse(const Complex& a, double eps_inv = 1e-12);
inline Complex zero_like(const Complex&) { return {}; }
inline Complex one_like(const Complex&) { return Complex(1.0); }
inline Complex scaled(const Complex& a, double s) { return Complex(a.v * s); }
inline Complex from_ratio(const Complex&, std::int64_t num, std::int64_t den) {
    return Complex(static_cast<double>(num) / static_cast<double>(den));
}

template <>
struct ScalarTraits<Complex> {
    static constexpr std::string_view name = "complex";
    static constexpr bool commutative = true;
    static constexpr bool exact = false;
};

inline bool similar(const Complex& a, const Complex& b, double tol) {
    return approx_eq(a, b, {tol, tol});
}

}  // namespace ncproj
