#pragma once

#include <array>

#include "ncproj/crossratio.hpp"

namespace ncproj {

namespace detail {
// [u v] must be invertible; throws SubmatrixNotInvertible otherwise.
template <Scalar T>
void require_independent(const Vec2<T>& u, const Vec2<T>& v) {
    RingMatrix<T> m{{u.x1, v.x1}, {u.x2, v.x2}};
    (void)left_solve(m, {u.x1, u.x2});
}
}  // namespace detail

template <Scalar T>
struct ClassicalPentagram {
    std::array<T, 5> y;
    std::array<double, 5> residuals;  // |y_i y_{i+1} − 1 − y_{i+3}|
};

template <Scalar T>
ClassicalPentagram<T> classical_pentagram(const std::array<T, 5>& p) {
    static_assert(is_commutative_v<T>, "classical_pentagram needs a commutative ring");
    for (int i = 0; i < 5; ++i)
        if (p[i] == p[(i + 1) % 5] || norm(p[i] - p[(i + 1) % 5]) == 0.0)
            throw Error(ErrorKind::ConsecutiveCoincidence, "consecutive points coincide");
    auto at = [&](int i) -> const T& { return p[static_cast<std::size_t>(i % 5)]; };
    ClassicalPentagram<T> out{};
    for (int i = 0; i < 5; ++i) {
        const T num = (at(i + 4) - at(i + 1)) * (at(i + 3) - at(i + 2));
        const T den = (at(i + 4) - at(i + 3)) * (at(i + 2) - at(i + 1));
        out.y[i] = num * inverse(den);
    }
    for (int i = 0; i < 5; ++i) {
        const T lhs = out.y[i] * out.y[(i + 1) % 5];
        out.residuals[i] = norm(lhs - one_like(lhs) - out.y[(i + 3) % 5]);
    }
    return out;
}

template <Scalar T>
using Pentad = std::array<Vec2<T>, 5>;

// The bar used by the pentagramma relations: both pairs swapped, κ(j, i, l, k).
template <Scalar T>
T pentagram_bar(const Vec2<T>& i, const Vec2<T>& j, const Vec2<T>& k, const Vec2<T>& l, Tolerance tol = {}) {
    return cross_ratio(j, i, l, k, tol);
}

// x1 = −κ(1,2,3,4), x2 = −κ(5,2,3,1), x3 = −κ(5,4,2,1), x4 = −κ(3,4,2,5), x5 = −κ(3,1,4,5).
template <Scalar T>
std::array<T, 5> pentagram_invariants(const Pentad<T>& v, Tolerance tol = {}) {
    return defined_or_throw(
        [&] {
            for (std::size_t i = 0; i < 5; ++i) detail::require_independent(v[i], v[(i + 1) % 5]);
            auto k = [&](int a, int b, int c, int d) { return -cross_ratio(v[a - 1], v[b - 1], v[c - 1], v[d - 1], tol); };
            return std::array<T, 5>{k(1, 2, 3, 4), k(5, 2, 3, 1), k(5, 4, 2, 1), k(3, 4, 2, 5), k(3, 1, 4, 5)};
        },
        "pentagram_invariants");
}

template <Scalar T>
struct PentagramRelations {
    std::array<T, 7> x;                  // x6, x7 from pentagram_bar
    std::array<double, 5> residuals;     // relations 1..5
    double odd_max;                      // relations 1, 3, 5
    double even_max;                     // relations 2, 4
    std::array<double, 2> single_swap;   // relations 4, 5 with x6, x7 built from κ(j, i, k, l)
    double relation4_alt;                // relation 4 with x3 in place of x6
};

template <Scalar T>
PentagramRelations<T> pentagram_relations_check(const Pentad<T>& v, Tolerance tol = {}) {
    return defined_or_throw(
        [&] {
            const ColumnTuple<T> cols(v.begin(), v.end());
            auto q = [&](int k, int i, int j) { return qp_left(cols, i - 1, j - 1, k - 1, tol); };
            auto kap = [&](int a, int b, int c, int d) { return cross_ratio(v[a - 1], v[b - 1], v[c - 1], v[d - 1], tol); };
            const auto x5 = pentagram_invariants(v, tol);
            PentagramRelations<T> out{};
            for (int i = 0; i < 5; ++i) out.x[i] = x5[i];
            out.x[5] = -kap(2, 1, 4, 3);
            out.x[6] = -kap(2, 5, 1, 3);
            const auto& x = out.x;
            const T one = one_like(x[0]);
            auto rel = [&](const T& a, int k, int i, int j, const T& b, const T& rhs) {
                return residual(T(a * q(k, i, j) * b * q(k, j, i)), T(one + rhs));
            };
            out.residuals = {rel(x[0], 1, 3, 2, x[2], x[1]), rel(x[3], 5, 2, 3, x[1], x[2]),
                             rel(x[2], 5, 2, 4, x[4], x[3]), rel(x[5], 3, 4, 2, x[3], x[4]),
                             rel(x[4], 3, 4, 1, x[6], x[5])};
            out.odd_max = std::max({out.residuals[0], out.residuals[2], out.residuals[4]});
            out.even_max = std::max(out.residuals[1], out.residuals[3]);
            const T x6s = -kap(2, 1, 3, 4), x7s = -kap(2, 5, 3, 1);
            out.single_swap = {rel(x6s, 3, 4, 2, x[3], x[4]), rel(x[4], 3, 4, 1, x7s, x6s)};
            out.relation4_alt = rel(x[2], 3, 4, 2, x[3], x[4]);
            return out;
        },
        "pentagram_relations_check");
}

struct MultiplicativeRelations {
    std::array<double, 2> residuals;
    std::array<double, 2> single_swap;  // same displays with the bar κ(j, i, k, l)
};

template <Scalar T>
MultiplicativeRelations multiplicative_relations_check(const Vec2<T>& i, const Vec2<T>& j, const Vec2<T>& k,
                                                       const Vec2<T>& l, const Vec2<T>& m, Tolerance tol = {}) {
    return defined_or_throw(
        [&] {
            const ColumnTuple<T> cols{i, j, k, l, m};
            for (std::size_t a = 0; a < cols.size(); ++a)
                for (std::size_t b = a + 1; b < cols.size(); ++b) detail::require_independent(cols[a], cols[b]);
            enum { I, J, K, L, M };
            auto q = [&](int top, int a, int b) { return qp_left(cols, a, b, top, tol); };
            auto kap = [&](int a, int b, int c, int d) { return cross_ratio(cols[a], cols[b], cols[c], cols[d], tol); };
            auto eval = [&](auto bar) {
                const T lhs1 = kap(I, J, K, L) * q(I, K, M) * kap(I, K, M, L) * q(I, M, K);
                const T rhs1 = q(J, K, L) * bar(I, K, M, L) * bar(I, J, K, L) * q(J, L, K);
                const T lhs2 = q(L, M, K) * kap(I, J, K, L) * q(L, K, I) * kap(L, K, I, M) * q(L, I, M);
                const T rhs2 = bar(L, K, I, M) * q(K, M, L) * bar(I, J, K, L) * q(K, L, M);
                return std::array<double, 2>{residual(lhs1, rhs1), residual(lhs2, rhs2)};
            };
            const auto fixed = eval([&](int a, int b, int c, int d) { return kap(b, a, d, c); });
            const auto single = eval([&](int a, int b, int c, int d) { return kap(b, a, c, d); });
            return MultiplicativeRelations{fixed, single};
        },
        "multiplicative_relations_check");
}

template <Scalar T>
struct Leapfrog {
    T L;
    T R;
    bool compatible;
};

template <Scalar T>
Leapfrog<T> leapfrog_compatible(const T& sm1, const T& s, const T& sp1, const T& sminus, const T& splus, double tol) {
    return defined_or_throw(
        [&] {
            (void)inverse(sp1 - sm1);
            const T l = inverse(sp1 - s) * (sminus - s) * inverse(sminus - sm1) * (sp1 - sm1);
            const T r = inverse(sm1 - s) * (splus - s) * inverse(splus - sp1) * (sm1 - sp1);
            return Leapfrog<T>{l, r, similar(l, r, tol)};
        },
        "leapfrog_compatible");
}

// S⁺ with R(S⁺) = target: (S⁺ − S)(S⁺ − S_{+1})⁻¹ = W := (S_{−1} − S)·target·(S_{−1} − S_{+1})⁻¹.
template <Scalar T>
T leapfrog_solve_splus(const T& sm1, const T& s, const T& sp1, const T& target) {
    return defined_or_throw(
        [&] {
            const T w = (sm1 - s) * target * inverse(sm1 - sp1);
            return T(inverse(one_like(s) - w) * (s - w * sp1));
        },
        "leapfrog_solve_splus");
}

}  // namespace ncproj
