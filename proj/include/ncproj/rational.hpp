#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ncproj/scalar.hpp"

namespace ncproj {

using BigRational = boost::multiprecision::cpp_rational;

struct Rational {
    BigRational v;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : v(n, d) {}
    explicit Rational(BigRational r) : v(std::move(r)) {}

    friend bool operator==(const Rational&, const Rational&) = default;
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(BigRational(a.v + b.v)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(BigRational(a.v - b.v)); }
    friend Rational operator-(const Rational& a) { return Rational(BigRational(-a.v)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(BigRational(a.v * b.v)); }
};

double to_double(const Rational& a);
inline double norm(const Rational& a) { return std::abs(to_double(a)); }
Rational inverse(const Rational& a);
inline Rational zero_like(const Rational&) { return {}; }
inline Rational one_like(const Rational&) { return Rational(1); }
// Exact: every finite double is a dyadic rational.
Rational scaled(const Rational& a, double s);
inline Rational from_ratio(const Rational&, std::int64_t num, std::int64_t den) { return Rational(num, den); }

template <>
struct ScalarTraits<Rational> {
    static constexpr std::string_view name = "rational";
    static constexpr bool commutative = true;
    static constexpr bool exact = true;
};

inline bool similar(const Rational& a, const Rational& b, double tol) { return approx_eq(a, b, {tol, tol}); }

}  // namespace ncproj
