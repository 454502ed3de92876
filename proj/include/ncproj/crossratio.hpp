#pragma once

#include "ncproj/plucker.hpp"

namespace ncproj {

// κ(x,y,z,t) = q^y_{zt} · q^x_{tz} on the 2×4 matrix (x y z t).
template <Scalar T>
T cross_ratio(const Vec2<T>& x, const Vec2<T>& y, const Vec2<T>& z, const Vec2<T>& t, Tolerance tol = {}) {
    const ColumnTuple<T> a{x, y, z, t};
    return qp_left(a, 2, 3, 1, tol) * qp_left(a, 3, 2, 0, tol);
}

template <Scalar T>
T cross_ratio_bar(const Vec2<T>& i, const Vec2<T>& j, const Vec2<T>& k, const Vec2<T>& l, Tolerance tol = {}) {
    return cross_ratio(j, i, k, l, tol);
}

// x_ij = a_1j − a_1i a_2i⁻¹ a_2j
template <Scalar T>
T angle_x(const Vec2<T>& ai, const Vec2<T>& aj) {
    return aj.x1 - ai.x1 * inverse(ai.x2) * aj.x2;
}

// T_i^{jk} = x_ji⁻¹ x_jk x_ik⁻¹. Swapping j and k flips the sign; the swapped
// value is computed whenever it is defined and compared.
template <Scalar T>
T nc_angle(const Vec2<T>& ai, const Vec2<T>& aj, const Vec2<T>& ak, Tolerance tol = {}) {
    auto angle = [](const Vec2<T>& i, const Vec2<T>& j, const Vec2<T>& k) {
        return T(inverse(angle_x(j, i)) * angle_x(j, k) * inverse(angle_x(i, k)));
    };
    const T tjk = defined_or_throw([&] { return angle(ai, aj, ak); }, "nc_angle");
    if (auto tkj = detail::try_defined([&] { return angle(ai, ak, aj); })) {
        const T sum = tjk + *tkj;
        if (norm(sum) > 100.0 * (tol.atol + tol.rtol * std::max(norm(tjk), norm(*tkj))))
            throw Error(ErrorKind::SymmetryViolation, "nc_angle: T_i^{kj} != -T_i^{jk}");
    }
    return tjk;
}

template <Scalar T>
struct TripleRatio {
    T value;    // closed form from the intersection point P
    T paired;   // p1 p2⁻¹ a2 a1⁻¹
    T negated;  // the same expression with a leading minus
    T a2;
    T p1;
    T p2;
};

// Triangle O(0,0), X(x,0), Y(0,y); A = (a1, a2) on XY; B(b,0), C(0,c);
// P = XC ∩ YB in the right module, i.e. x⁻¹p1 + c⁻¹p2 = 1 and b⁻¹p1 + y⁻¹p2 = 1.
template <Scalar T>
TripleRatio<T> triple_ratio(const T& x, const T& y, const T& a1, const T& b, const T& c, Tolerance tol = {}) {
    return defined_or_throw(
        [&] {
            const T one = one_like(x);
            const T xi = inverse(x), yi = inverse(y), bi = inverse(b), ci = inverse(c), a1i = inverse(a1);
            const T d = y * bi - c * xi;
            const T di = inverse(d);
            const T a2 = y * (one - xi * a1);
            const T p1 = di * (y - c);
            const T p2 = inverse(x * ci - b * yi) * (x - b);
            const T tail = x * ci * d * b * xi * (x - a1) * a1i;
            const T value = di * (y - c) * inverse(x - b) * tail;
            const T paired = p1 * inverse(p2) * a2 * a1i;
            const T negated = -((y - c) * di * inverse(x - b) * tail);
            if (norm(value - paired) > 100.0 * (tol.atol + tol.rtol * std::max(norm(value), norm(paired))))
                throw Error(ErrorKind::PairMismatch, "triple_ratio: closed form and p1 p2^-1 a2 a1^-1 disagree");
            return TripleRatio<T>{value, paired, negated, a2, p1, p2};
        },
        "triple_ratio");
}

template <Scalar T>
struct PolarizationQuad {
    T P1, P2, Q1, Q2;
};

// (A−B)⁻¹(B−C)(C−D)⁻¹(D−A)
template <Scalar T>
T dv(const T& a, const T& b, const T& c, const T& d) {
    return inverse(a - b) * (b - c) * inverse(c - d) * (d - a);
}

template <Scalar T>
T dv(const PolarizationQuad<T>& q) {
    return dv(q.P1, q.P2, q.Q1, q.Q2);
}

// Graph representative (1, P).
template <Scalar T>
Vec2<T> graph_vector(const T& p) {
    return {one_like(p), p};
}

}  // namespace ncproj
