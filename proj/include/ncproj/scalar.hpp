#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string_view>

#include "ncproj/error.hpp"

namespace ncproj {

struct Tolerance {
    double atol = 1e-9;
    double rtol = 1e-9;
};

// Specialized per concrete ring: name, commutative, exact.
template <class T>
struct ScalarTraits;

template <class T>
concept Scalar = requires(const T& a, const T& b, double s, std::int64_t n) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { inverse(a) } -> std::convertible_to<T>;
    { norm(a) } -> std::convertible_to<double>;
    { zero_like(a) } -> std::convertible_to<T>;
    { one_like(a) } -> std::convertible_to<T>;
    { scaled(a, s) } -> std::convertible_to<T>;
    { from_ratio(a, n, n) } -> std::convertible_to<T>;
    { ScalarTraits<T>::name } -> std::convertible_to<std::string_view>;
    { ScalarTraits<T>::commutative } -> std::convertible_to<bool>;
};

template <class T>
inline constexpr bool is_commutative_v = ScalarTraits<T>::commutative;

// |a - b| scaled so that residual <= tol matches approx_eq with atol = rtol = tol.
template <Scalar T>
double residual(const T& a, const T& b) {
    return norm(a - b) / (1.0 + std::max(norm(a), norm(b)));
}

template <Scalar T>
bool approx_eq(const T& a, const T& b, Tolerance tol = {}) {
    return norm(a - b) <= tol.atol + tol.rtol * std::max(norm(a), norm(b));
}

template <Scalar T>
T conjugate_by(const T& a, const T& mu) {
    return mu * a * inverse(mu);
}

template <Scalar T>
bool is_invertible(const T& a) {
    try {
        (void)inverse(a);
        return true;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotInvertible) return false;
        throw;
    }
}

}  // namespace ncproj
