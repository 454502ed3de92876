#include "ncproj/infinitesimal_ceva.hpp"

#include <cmath>

#include "ncproj/error.hpp"

namespace ncproj {

const std::vector<KappaField>& kappa_fields() {
    static const std::vector<KappaField> fields{
        {"const1", [](double, double) { return 1.0; }, [](double, double) { return Hessian{0, 0, 0}; }},
        {"exp_y", [](double, double y) { return std::exp(y); },
         [](double, double y) { return Hessian{0, 0, std::exp(y)}; }},
        {"gauss", [](double x, double y) { return std::exp(-(x * x + y * y) / 2); },
         [](double x, double y) {
             const double g = std::exp(-(x * x + y * y) / 2);
             return Hessian{(x * x - 1) * g, x * y * g, (y * y - 1) * g};
         }},
        {"poly", [](double x, double y) { return 1 + x * x + 2 * y * y; },
         [](double, double) { return Hessian{2, 0, 4}; }},
    };
    return fields;
}

const KappaField& kappa_field(const std::string& name) {
    for (const auto& f : kappa_fields())
        if (f.name == name) return f;
    throw Error(ErrorKind::UnknownOperation, "unknown kappa field '" + name + "'");
}

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    int max_depth;
};

double simpson_step(SimpsonState& st, double a, double b, double fa, double fm, double fb, double whole,
                    double atol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = st.f(lm), frm = st.f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15 * atol) return left + right + delta / 15;
    if (depth >= st.max_depth) throw Error(ErrorKind::QuadratureFailure, "adaptive Simpson exceeded recursion depth");
    return simpson_step(st, a, m, fa, flm, fm, left, atol / 2, depth + 1) +
           simpson_step(st, m, b, fm, frm, fb, right, atol / 2, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double atol, int max_depth) {
    SimpsonState st{f, max_depth};
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    const double r = simpson_step(st, a, b, fa, fm, fb, whole, atol, 0);
    if (!std::isfinite(r)) throw Error(ErrorKind::QuadratureFailure, "non-finite integral");
    return r;
}

InfinitesimalCeva infinitesimal_ceva(const VectorFieldPair& vf, Vec2d x, double eps) {
    const auto& kappa = vf.kappa.value;
    auto segment = [&](Vec2d p, Vec2d dir, double s0, double s1) {
        return adaptive_simpson(
            [&](double s) {
                const double k = kappa(p[0] + s * dir[0], p[1] + s * dir[1]);
                if (!(k > 0)) throw Error(ErrorKind::NonPositiveKappa, "kappa field not positive on a flow segment");
                return k;
            },
            s0, s1);
    };
    const Vec2d xi = vf.xi, eta = vf.eta;
    const Vec2d zeta{eta[0] - xi[0], eta[1] - xi[1]};
    const Vec2d b{x[0] + 2 * eps * xi[0], x[1] + 2 * eps * xi[1]};
    const Vec2d l{b[0] + eps * zeta[0], b[1] + eps * zeta[1]};

    CevaSegments s{};
    s.ak = segment(x, xi, 0, eps);
    s.kb = segment(x, xi, eps, 2 * eps);
    s.bl = segment(b, zeta, 0, eps);
    s.lc = segment(l, zeta, 0, eps);
    s.cm = segment(x, eta, eps, 2 * eps);
    s.ma = segment(x, eta, 0, eps);
    const double c = (s.ak / s.kb) * (s.bl / s.lc) * (s.cm / s.ma);
    return {c - 1.0, ceva_s3(vf, x), s};
}

double ceva_s3(const VectorFieldPair& vf, Vec2d x) {
    const double k = vf.kappa.value(x[0], x[1]);
    if (!(k > 0)) throw Error(ErrorKind::NonPositiveKappa, "kappa field not positive at the base point");
    const Hessian h = vf.kappa.hessian(x[0], x[1]);
    auto second = [&](Vec2d v) { return h[0] * v[0] * v[0] + 2 * h[1] * v[0] * v[1] + h[2] * v[1] * v[1]; };
    return 5.0 / 6.0 * (second(vf.eta) - second(vf.xi)) / k;
}

CevaLimit ceva_limit(const VectorFieldPair& vf, Vec2d x, double eps0, int levels) {
    CevaLimit out;
    for (int k = 0; k < levels; ++k) {
        const double eps = std::ldexp(eps0, -k);
        out.eps.push_back(eps);
        out.scaled.push_back(infinitesimal_ceva(vf, x, eps).c_minus_1 / (eps * eps));
    }
    // Error expansion in powers of ε, step ratio 2.
    std::vector<double> t = out.scaled;
    for (int j = 1; j < levels; ++j)
        for (int i = levels - 1; i >= j; --i) {
            const double f = std::ldexp(1.0, j);
            t[i] = (f * t[i] - t[i - 1]) / (f - 1);
        }
    out.extrapolated = t.back();
    return out;
}

}  // namespace ncproj
