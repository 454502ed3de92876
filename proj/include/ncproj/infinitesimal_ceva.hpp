#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace ncproj {

using Vec2d = std::array<double, 2>;

// Second derivatives (κ_xx, κ_xy, κ_yy).
using Hessian = std::array<double, 3>;

struct KappaField {
    std::string name;
    std::function<double(double, double)> value;
    std::function<Hessian(double, double)> hessian;
};

// Registered closed-form fields: const1, exp_y, gauss, poly.
const std::vector<KappaField>& kappa_fields();
const KappaField& kappa_field(const std::string& name);

struct VectorFieldPair {
    Vec2d xi;
    Vec2d eta;
    KappaField kappa;
};

struct CevaSegments {
    double ak, kb, bl, lc, cm, ma;
};

struct InfinitesimalCeva {
    double c_minus_1;
    double s3;
    CevaSegments segments;
};

// Image lengths are integrals of κ along the straight flow segments of the
// triangle A = x, B = x + 2εξ, C = x + 2εη with midpoints K, L, M.
InfinitesimalCeva infinitesimal_ceva(const VectorFieldPair& vf, Vec2d x, double eps);

// (5/6)(κ_ηη − κ_ξξ)/κ at x.
double ceva_s3(const VectorFieldPair& vf, Vec2d x);

struct CevaLimit {
    std::vector<double> eps;
    std::vector<double> scaled;  // (c − 1)/ε²
    double extrapolated;
};

// Richardson extrapolation of (c − 1)/ε² over ε = eps0 / 2^k, k < levels.
CevaLimit ceva_limit(const VectorFieldPair& vf, Vec2d x, double eps0 = 0.05, int levels = 5);

// Adaptive Simpson on [a, b] with absolute tolerance atol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double atol = 1e-12,
                        int max_depth = 50);

}  // namespace ncproj
