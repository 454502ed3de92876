#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "ncproj/jet.hpp"
#include "ncproj/plucker.hpp"

namespace ncproj {

// (z')⁻¹z''' − (3/2)((z')⁻¹z'')²
template <Scalar T>
T nc_schwarzian(const Jet<T>& z) {
    if (z.order() < 3) throw Error(ErrorKind::DimensionMismatch, "nc_schwarzian needs order >= 3");
    const T zi = inverse(z[1]);
    const T u = zi * z[2];
    return zi * z[3] - scaled(u * u, 1.5);
}

// (h')⁻¹h''' − (3/2)(h')⁻¹h''(h')⁻¹h''
template <Scalar T>
T ncsch(const Jet<T>& h) {
    if (h.order() < 3) throw Error(ErrorKind::DimensionMismatch, "ncsch needs order >= 3");
    const T hi = inverse(h[1]);
    return hi * h[3] - scaled(hi * h[2] * hi * h[2], 1.5);
}

template <Scalar T>
struct ExpansionCheck {
    T lhs;
    T rhs;
    double residual;
};

// Cross-ratio (z(t2)−z(t1))⁻¹(z(t1)−z(t))(z(t)−z(t3))⁻¹(z(t3)−z(t2)) of the Taylor
// curve against its second-order expansion with kernel (1/6)(z')⁻¹z''' − (1/4)((z')⁻¹z'')².
template <Scalar T>
ExpansionCheck<T> expansion_check(const Jet<T>& z, double t, double t1, double t2, double t3,
                                  double eps_inv = 1e-12) {
    if (z.order() < 3) throw Error(ErrorKind::DimensionMismatch, "expansion_check needs order >= 3");
    const double pts[4] = {t, t1, t2, t3};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(pts[i] - pts[j]) < eps_inv)
                throw Error(ErrorKind::PointsTooClose, "expansion_check sample points coincide");
    const T z0 = evaluate(z, t), z1 = evaluate(z, t1), z2 = evaluate(z, t2), z3 = evaluate(z, t3);
    const T lhs = inverse(z2 - z1) * (z1 - z0) * inverse(z0 - z3) * (z3 - z2);
    const T zi = inverse(z[1]);
    const T u = zi * z[2];
    const T kernel = scaled(zi * z[3], 1.0 / 6.0) - scaled(u * u, 0.25);
    const double classical = (t1 - t) * (t3 - t2) / ((t2 - t1) * (t - t3));
    const T rhs = scaled(one_like(z[0]) + scaled(kernel, (t2 - t) * (t3 - t1)), classical);
    return {lhs, rhs, norm(lhs - rhs)};
}

struct SlopeFit {
    std::vector<double> eps;
    std::vector<double> residuals;
    double slope;     // log2 of the residual ratio over the finest halving
    double ls_slope;  // least-squares fit over every ε, pre-asymptotic points included
};

inline double fit_log2_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log2(x[i]), ly = std::log2(y[i]);
        sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Residual of expansion_check at t_i = ε·{0,1,2,3} for ε = 2⁻³ … 2⁻⁷.
template <Scalar T>
SlopeFit expansion_slope(const Jet<T>& z) {
    SlopeFit fit{{}, {}, 0.0, 0.0};
    for (int e = 3; e <= 7; ++e) {
        const double eps = std::ldexp(1.0, -e);
        fit.eps.push_back(eps);
        fit.residuals.push_back(expansion_check(z, 0.0, eps, 2 * eps, 3 * eps).residual);
    }
    const std::size_t n = fit.residuals.size();
    fit.slope = std::log2(fit.residuals[n - 2] / fit.residuals[n - 1]);
    fit.ls_slope = fit_log2_slope(fit.eps, fit.residuals);
    return fit;
}

template <Scalar T>
struct OdeCoeffs {
    T a;
    T b;
};

// f'' + a f' + b f = 0 for f = f1, f2, with a, b acting from the left.
template <Scalar T>
OdeCoeffs<T> recover_ode_coeffs(const Jet<T>& f1, const Jet<T>& f2, Tolerance tol = {}) {
    if (f1.order() < 2 || f2.order() < 2) throw Error(ErrorKind::DimensionMismatch, "recover_ode_coeffs needs order >= 2");
    return defined_or_throw(
        [&] {
            const T f1i = inverse(f1[0]), f2i = inverse(f2[0]);
            const T a = -((f1[2] * f1i - f2[2] * f2i) * inverse(f1[1] * f1i - f2[1] * f2i));
            const T b = -((a * f1[1] + f1[2]) * f1i);

            auto mismatch = [&](const T& x, const T& y, const char* what) {
                if (norm(x - y) > 100.0 * (tol.atol + tol.rtol * std::max(norm(x), norm(y))))
                    throw Error(ErrorKind::PairMismatch, what);
            };
            const T res2 = f2[2] + a * f2[1] + b * f2[0];
            mismatch(res2, zero_like(res2), "recover_ode_coeffs: second solution not annihilated");

            RingMatrix<T> rows{{f1[0], f2[0]}, {f1[1], f2[1]}, {f1[2], f2[2]}};
            if (auto qa = detail::try_defined([&] { return qp_right(rows, 2, 1, 0, tol); }))
                mismatch(-*qa, a, "recover_ode_coeffs: a != -q^1_32");
            if (auto qb = detail::try_defined([&] { return qp_right(rows, 2, 0, 1, tol); }))
                mismatch(-*qb, b, "recover_ode_coeffs: b != -q^2_31");
            return OdeCoeffs<T>{a, b};
        },
        "recover_ode_coeffs");
}

// f^(n+2) = −Σ C(n,k)(a^(k) f^(n+1−k) + b^(k) f^(n−k)), result of order min(a,b)+2.
template <Scalar T>
Jet<T> propagate_left(const Jet<T>& a, const Jet<T>& b, const T& f0, const T& f1) {
    const int k_max = std::min(a.order(), b.order()) + 2;
    std::vector<T> f{f0, f1};
    for (int n = 0; n + 2 <= k_max; ++n) {
        T acc = zero_like(f0);
        for (int k = 0; k <= n; ++k)
            acc = acc + scaled(a[k] * f[static_cast<std::size_t>(n + 1 - k)] + b[k] * f[static_cast<std::size_t>(n - k)],
                               binomial(n, k));
        f.push_back(-acc);
    }
    return Jet<T>(std::move(f));
}

// f'' = f r (coefficient on the right).
template <Scalar T>
Jet<T> propagate_right(const Jet<T>& r, const T& f0, const T& f1) {
    std::vector<T> f{f0, f1};
    for (int n = 0; n <= r.order(); ++n) {
        T acc = zero_like(f0);
        for (int k = 0; k <= n; ++k) acc = acc + scaled(f[static_cast<std::size_t>(k)] * r[n - k], binomial(n, k));
        f.push_back(acc);
    }
    return Jet<T>(std::move(f));
}

// h' = ½ h a with h(0) = 1.
template <Scalar T>
Jet<T> propagate_gauge(const Jet<T>& a) {
    std::vector<T> h{one_like(a[0])};
    for (int n = 0; n <= a.order(); ++n) {
        T acc = zero_like(a[0]);
        for (int k = 0; k <= n; ++k) acc = acc + scaled(h[static_cast<std::size_t>(k)] * a[n - k], binomial(n, k));
        h.push_back(scaled(acc, 0.5));
    }
    return Jet<T>(std::move(h));
}

// ã = −2h'h⁻¹ + h a h⁻¹
template <Scalar T>
Jet<T> gauge_transform_a(const Jet<T>& a, const Jet<T>& h) {
    const Jet<T> hi = jet_inv(h);
    return scaled(derivative(h) * hi, -2.0) + h * a * hi;
}

template <Scalar T>
struct GaugeReport {
    double a_tilde_residual;   // max |ã^(n)| of the transformed coefficient
    double direct_a_residual;  // |ã| recovered from the gauged solutions
    double prop63_residual;    // |f̃1' + ½ f̃1 θ| (head)
    T b_direct;
    T b_candidate_a;  // ½ f̃1 (θ' − ½θ) f̃1⁻¹
    T b_candidate_b;  // ½ f̃1 (θ' − ½θ²) f̃1⁻¹
    double residual_a;
    double residual_b;
    bool matches_a;
    bool matches_b;
    T schwarzian_phi;  // θ' − ½θ², θ = φ''(φ')⁻¹, φ = f1⁻¹f2
};

template <Scalar T>
GaugeReport<T> gauge_theorem_check(const Jet<T>& f1, const Jet<T>& f2, const Jet<T>& a, double match_tol = 1e-8) {
    return defined_or_throw(
        [&] {
            const Jet<T> h = propagate_gauge(a);
            const Jet<T> at = gauge_transform_a(a, h);
            const Jet<T> g1 = h * f1;
            const Jet<T> g2 = h * f2;
            const auto direct = recover_ode_coeffs(g1, g2, {1e-7, 1e-7});

            const Jet<T> phi = jet_inv(f1) * f2;
            const Jet<T> dphi = derivative(phi);
            const Jet<T> theta = derivative(dphi) * jet_inv(dphi);
            const T th = theta[0];
            const T dth = theta[1];
            const T prop63 = g1[1] + scaled(g1[0] * th, 0.5);

            const T g1i = inverse(g1[0]);
            const T cand_a = scaled(g1[0] * (dth - scaled(th, 0.5)) * g1i, 0.5);
            const T sch = dth - scaled(th * th, 0.5);
            const T cand_b = scaled(g1[0] * sch * g1i, 0.5);
            const double ra = residual(cand_a, direct.b);
            const double rb = residual(cand_b, direct.b);
            return GaugeReport<T>{max_norm(at), norm(direct.a), norm(prop63), direct.b, cand_a, cand_b, ra, rb,
                                  ra <= match_tol, rb <= match_tol, sch};
        },
        "gauge_theorem_check");
}

template <Scalar T>
struct SchwarzianEquationReport {
    double residual;       // head of h''' − (3/2)h''(h')⁻¹h'' + 2h'F, relative to its largest term
    double max_residual;   // absolute, over every coefficient available
    T ncsch_h;
    T F;
};

template <Scalar T>
SchwarzianEquationReport<T> schwarzian_equation_check(const Jet<T>& g, const T& f0, const T& f1) {
    return defined_or_throw(
        [&] {
            const Jet<T> gi = jet_inv(g);
            const Jet<T> g2 = derivative(derivative(g));
            const Jet<T> r = gi * g2;
            const Jet<T> F = g2 * gi;
            const Jet<T> f = propagate_right(r, f0, f1);
            const Jet<T> h = f * gi;
            const Jet<T> d1 = derivative(h), d2 = derivative(d1), d3 = derivative(d2);
            const Jet<T> drift = scaled(d1 * F, 2.0);
            Jet<T> res = d3 + drift;
            double scale = std::max(norm(d3[0]), norm(drift[0]));
            T sch = zero_like(f0);
            try {
                const Jet<T> mid = scaled(d2 * jet_inv(d1) * d2, 1.5);
                res = res - mid;
                scale = std::max(scale, norm(mid[0]));
                sch = ncsch(h);
            } catch (const Error& e) {
                // h constant: the middle term is 0·(h')⁻¹·0.
                if (e.kind() != ErrorKind::NotInvertible || max_norm(d2) > 1e-12) throw;
            }
            return SchwarzianEquationReport<T>{norm(res[0]) / (1.0 + scale), max_norm(res), sch, F[0]};
        },
        "schwarzian_equation_check");
}

// (a h + b)(c h + d)⁻¹ with constant coefficients.
template <Scalar T>
Jet<T> moebius(const Jet<T>& h, const T& a, const T& b, const T& c, const T& d) {
    const int k = h.order();
    return (a * h + Jet<T>::constant(b, k)) * jet_inv(c * h + Jet<T>::constant(d, k));
}

}  // namespace ncproj
