#pragma once

#include <optional>
#include <string>

#include "ncproj/plucker.hpp"

namespace ncproj {

template <Scalar T>
struct Point2 {
    T x1;
    T x2;

    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
    // Right-module action: point times scalar.
    friend Point2 operator*(const Point2& a, const T& s) { return {a.x1 * s, a.x2 * s}; }
};

template <Scalar T>
struct Barycentric {
    T t, u, v;
};

template <Scalar T>
const T& coord(const Point2<T>& p, int c) {
    return c == 0 ? p.x1 : p.x2;
}

template <Scalar T>
double point_distance(const Point2<T>& a, const Point2<T>& b) {
    return std::max(norm(a.x1 - b.x1), norm(a.x2 - b.x2));
}

// p ∈ line(a, b) with a ≠ b: p − a = (b − a)λ, λ solved from an invertible
// coordinate of b − a and checked on both.
template <Scalar T>
bool lies_on_line(const Point2<T>& p, const Point2<T>& a, const Point2<T>& b, double tol) {
    const Point2<T> d = b - a;
    const int c = norm(d.x1) >= norm(d.x2) ? 0 : 1;
    const T lambda = defined_or_throw([&] { return T(inverse(coord(d, c)) * (coord(p, c) - coord(a, c))); },
                                      "lies_on_line: a and b coincide");
    const Point2<T> back = a + d * lambda;
    const double scale = 1.0 + std::max({norm(p.x1), norm(p.x2), norm(back.x1), norm(back.x2)});
    return point_distance(back, p) <= tol * scale;
}

// Collinearity without a genericity requirement on any pair.
template <Scalar T>
bool points_collinear(const Point2<T>& x, const Point2<T>& y, const Point2<T>& z, double tol) {
    const double scale = 1.0 + std::max({norm(x.x1), norm(x.x2), norm(y.x1), norm(y.x2)});
    if (point_distance(x, y) <= tol * scale) return true;
    return lies_on_line(z, x, y, tol);
}

template <Scalar T>
struct Collinearity {
    bool collinear;
    T quasidet;                          // boxed bottom-right entry of [[x1 y1 z1],[x2 y2 z2],[1 1 1]]
    std::optional<double> ratio_gap;     // |(y1−x1)⁻¹(z1−x1) − (y2−x2)⁻¹(z2−x2)| when defined
    bool criteria_agree;
};

template <Scalar T>
Collinearity<T> collinearity(const Point2<T>& x, const Point2<T>& y, const Point2<T>& z, double tol) {
    const T one = one_like(x.x1);
    RingMatrix<T> m{{x.x1, y.x1, z.x1}, {x.x2, y.x2, z.x2}, {one, one, one}};
    T q = one;
    try {
        q = quasidet(m, 2, 2);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SubmatrixNotInvertible) throw;
        throw Error(ErrorKind::DegeneratePair, "X and Y are not in generic position");
    }
    const bool by_quasidet = norm(q) <= tol;
    std::optional<double> gap;
    try {
        const T r1 = inverse(y.x1 - x.x1) * (z.x1 - x.x1);
        const T r2 = inverse(y.x2 - x.x2) * (z.x2 - x.x2);
        gap = norm(r1 - r2);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInvertible) throw;
    }
    const bool agree = !gap || ((*gap <= tol) == by_quasidet);
    return {by_quasidet, q, gap, agree};
}

template <Scalar T>
bool collinear(const Point2<T>& x, const Point2<T>& y, const Point2<T>& z, double tol) {
    return collinearity(x, y, z, tol).collinear;
}

namespace detail {

// (p − f)⁻¹(q − f) style ratio for three points on one line, from whichever
// coordinate is invertible; both coordinates must agree when both exist.
template <Scalar T>
T side_ratio(const Point2<T>& num_a, const Point2<T>& f, const Point2<T>& num_b, double tol, const char* what) {
    std::optional<T> r[2];
    for (int c = 0; c < 2; ++c)
        r[c] = try_defined([&] { return T(inverse(coord(num_a, c) - coord(f, c)) * (coord(num_b, c) - coord(f, c))); });
    if (r[0] && r[1] && !approx_eq(*r[0], *r[1], {tol, tol}))
        throw Error(ErrorKind::SideConditionViolated, std::string(what) + ": coordinates give different ratios");
    if (r[0]) return *r[0];
    if (r[1]) return *r[1];
    throw Error(ErrorKind::UndefinedExpression, std::string(what) + ": ratio undefined in both coordinates");
}

template <Scalar T>
void require_on_line(const Point2<T>& p, const Point2<T>& a, const Point2<T>& b, double tol, const char* what) {
    if (!points_collinear(a, b, p, tol)) throw Error(ErrorKind::SideConditionViolated, what);
}

}  // namespace detail

// (a−f)⁻¹(b−f)·(c−e)⁻¹(a−e)·(b−d)⁻¹(c−d) with D on BC, E on CA, F on AB.
template <Scalar T>
T menelaus_commutative(const Point2<T>& a, const Point2<T>& b, const Point2<T>& c, const Point2<T>& d,
                       const Point2<T>& e, const Point2<T>& f, double tol = 1e-9) {
    static_assert(is_commutative_v<T>, "menelaus_commutative needs a commutative ring");
    detail::require_on_line(d, b, c, tol, "D must lie on BC");
    detail::require_on_line(e, c, a, tol, "E must lie on CA");
    detail::require_on_line(f, a, b, tol, "F must lie on AB");
    return detail::side_ratio(a, f, b, tol, "menelaus F") * detail::side_ratio(c, e, a, tol, "menelaus E") *
           detail::side_ratio(b, d, c, tol, "menelaus D");
}

// (e−a)⁻¹(e−c)·(f−b)⁻¹(f−a)·(d−c)⁻¹(d−b) with D on BC, E on CA, F on AB.
template <Scalar T>
T ceva_commutative(const Point2<T>& a, const Point2<T>& b, const Point2<T>& c, const Point2<T>& d,
                   const Point2<T>& e, const Point2<T>& f, double tol = 1e-9) {
    static_assert(is_commutative_v<T>, "ceva_commutative needs a commutative ring");
    detail::require_on_line(d, b, c, tol, "D must lie on BC");
    detail::require_on_line(e, c, a, tol, "E must lie on CA");
    detail::require_on_line(f, a, b, tol, "F must lie on AB");
    auto ratio = [&](const Point2<T>& p, const Point2<T>& q, const Point2<T>& r, const char* what) {
        // (p−q)⁻¹(p−r) = (q−p)⁻¹(r−p)
        return detail::side_ratio(q, p, r, tol, what);
    };
    return ratio(e, a, c, "ceva E") * ratio(f, b, a, "ceva F") * ratio(d, c, b, "ceva D");
}

// P = A t + B u + C v with t + u + v = 1.
template <Scalar T>
Barycentric<T> barycentric(const Point2<T>& p, const Point2<T>& a, const Point2<T>& b, const Point2<T>& c) {
    RingMatrix<T> m{{a.x1 - c.x1, b.x1 - c.x1}, {a.x2 - c.x2, b.x2 - c.x2}};
    std::vector<T> sol;
    try {
        sol = left_solve(m, {p.x1 - c.x1, p.x2 - c.x2});
    } catch (const Error& e) {
        if (!e.is_undefined()) throw;
        throw Error(ErrorKind::CollinearFrame, "A, B, C do not span the plane");
    }
    return {sol[0], sol[1], one_like(p.x1) - sol[0] - sol[1]};
}

template <Scalar T>
Point2<T> from_barycentric(const Barycentric<T>& w, const Point2<T>& a, const Point2<T>& b, const Point2<T>& c) {
    return a * w.t + b * w.u + c * w.v;
}

enum class CollinearityCriterion { Quasidet, Points };

struct BarycentricCollinearity {
    bool collinear;
    CollinearityCriterion criterion;
    std::optional<bool> cross_check_agrees;  // set when both criteria were evaluated
};

// Quasideterminant of the (t, u, v) columns with t3 boxed; falls back to the
// reconstructed points when that quasideterminant is undefined.
template <Scalar T>
BarycentricCollinearity barycentric_collinear(const Point2<T>& a, const Point2<T>& b, const Point2<T>& c,
                                              const Barycentric<T>& p1, const Barycentric<T>& p2,
                                              const Barycentric<T>& p3, double tol) {
    const bool by_points = points_collinear(from_barycentric(p1, a, b, c), from_barycentric(p2, a, b, c),
                                            from_barycentric(p3, a, b, c), tol);
    RingMatrix<T> m{{p1.t, p2.t, p3.t}, {p1.u, p2.u, p3.u}, {p1.v, p2.v, p3.v}};
    try {
        const bool by_qd = norm(quasidet(m, 0, 2)) <= tol;
        return {by_qd, CollinearityCriterion::Quasidet, by_qd == by_points};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SubmatrixNotInvertible) throw;
        return {by_points, CollinearityCriterion::Points, std::nullopt};
    }
}

template <Scalar T>
struct MenelausNC {
    T product;  // q^Q_{AC} q^P_{CB} q^R_{BA}
    T kaplansky;  // u(1−u)⁻¹ t(1−t)⁻¹ v(1−v)⁻¹
    Point2<T> P, Q, R;
    int coordinate;  // affine coordinate used for the (p, 1) lift: 0, 1, or 2 for the mixed one
};

template <Scalar T>
MenelausNC<T> menelaus_nc(const Point2<T>& a, const Point2<T>& b, const Point2<T>& c, const T& t, const T& u,
                          const T& v, Tolerance tol = {}) {
    const T one = one_like(t);
    const Point2<T> p = b * (one - t) + c * t;
    const Point2<T> q = c * (one - u) + a * u;
    const Point2<T> r = a * (one - v) + b * v;

    // coordinate 2 is the real combination x1 + g·x2, used when both axes are degenerate
    auto with_coordinate = [&](int k) {
        auto affine = [&](const Point2<T>& x) { return k < 2 ? coord(x, k) : T(x.x1 + scaled(x.x2, 0.6180339887498949)); };
        auto lift = [&](const Point2<T>& x) { return Vec2<T>{affine(x), one}; };
        const T qq = qp_left(ColumnTuple<T>{lift(a), lift(c), lift(q)}, 0, 1, 2, tol);
        const T qpp = qp_left(ColumnTuple<T>{lift(c), lift(b), lift(p)}, 0, 1, 2, tol);
        const T qr = qp_left(ColumnTuple<T>{lift(b), lift(a), lift(r)}, 0, 1, 2, tol);
        return std::array<T, 3>{qq, qpp, qr};
    };
    int used = 0;
    auto qs = detail::try_defined([&] { return with_coordinate(0); });
    if (!qs) qs = detail::try_defined([&] { return with_coordinate(used = 1); });
    if (!qs) qs = defined_or_throw([&] { return with_coordinate(used = 2); }, "menelaus_nc");
    const auto& [q_q, q_p, q_r] = *qs;

    const T kt = defined_or_throw([&] { return T(t * inverse(one - t)); }, "menelaus_nc t");
    const T ku = defined_or_throw([&] { return T(u * inverse(one - u)); }, "menelaus_nc u");
    const T kv = defined_or_throw([&] { return T(v * inverse(one - v)); }, "menelaus_nc v");
    auto check = [&](const T& lhs, const T& qval, const char* what) {
        if (norm(lhs + qval) > 100.0 * (tol.atol + tol.rtol * std::max(norm(lhs), norm(qval))))
            throw Error(ErrorKind::PairMismatch, what);
    };
    check(kt, q_p, "t(1-t)^-1 != -q^P_CB");
    check(ku, q_q, "u(1-u)^-1 != -q^Q_AC");
    check(kv, q_r, "v(1-v)^-1 != -q^R_BA");
    return {q_q * q_p * q_r, ku * kt * kv, p, q, r, used};
}

template <Scalar T>
struct Konopelchenko {
    T theta;     // f12⁻¹ + f23⁻¹ + f31⁻¹
    T quasidet;  // collinearity quasideterminant of F12, F23, F31 (equals theta·f31)
    bool collinear;
    bool points_collinear;
    Point2<T> f12_point, f23_point, f31_point;
};

template <Scalar T>
Konopelchenko<T> konopelchenko(const Point2<T>& p1, const Point2<T>& p2, const Point2<T>& p3, const T& f12,
                               const T& f23, const T& f31, double tol) {
    return defined_or_throw(
        [&] {
            const T theta = inverse(f12) + inverse(f23) + inverse(f31);
            const Point2<T> a = (p2 - p1) * f12;
            const Point2<T> b = (p3 - p2) * f23;
            const Point2<T> c = (p1 - p3) * f31;
            const T one = one_like(f12);
            RingMatrix<T> m{{a.x1, b.x1, c.x1}, {a.x2, b.x2, c.x2}, {one, one, one}};
            const T qd = quasidet(m, 2, 2);
            return Konopelchenko<T>{theta, qd, norm(theta) <= tol, points_collinear(a, b, c, tol), a, b, c};
        },
        "konopelchenko");
}

}  // namespace ncproj
