#pragma once

#include <cmath>

#include "ncproj/scalar.hpp"

namespace ncproj {

struct Quaternion {
    double w = 0, x = 0, y = 0, z = 0;

    friend bool operator==(const Quaternion&, const Quaternion&) = default;

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
};

inline constexpr double default_eps_inv = 1e-12;

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline double norm(const Quaternion& q) { return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z); }

Quaternion inverse(const Quaternion& q, double eps_inv = default_eps_inv);

inline Quaternion zero_like(const Quaternion&) { return {}; }
inline Quaternion one_like(const Quaternion&) { return {1, 0, 0, 0}; }
inline Quaternion scaled(const Quaternion& q, double s) { return {q.w * s, q.x * s, q.y * s, q.z * s}; }
inline Quaternion from_ratio(const Quaternion&, std::int64_t num, std::int64_t den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0, 0, 0};
}

// Quaternions are conjugate iff real parts and norms agree.
bool similar(const Quaternion& a, const Quaternion& b, double tol);

template <>
struct ScalarTraits<Quaternion> {
    static constexpr std::string_view name = "quaternion";
    static constexpr bool commutative = false;
    static constexpr bool exact = false;
};

}  // namespace ncproj
