#include <cmath>
#include <random>

#include "ncproj/sampling.hpp"

namespace ncproj {

Quaternion inverse(const Quaternion& q, double eps_inv) {
    const double n = norm(q);
    if (!(n >= eps_inv)) throw Error(ErrorKind::NotInvertible, "quaternion norm below eps_inv");
    return scaled(conj(q), 1.0 / (n * n));
}

bool similar(const Quaternion& a, const Quaternion& b, double tol) {
    return std::abs(a.w - b.w) <= tol && std::abs(norm(a) - norm(b)) <= tol;
}

Complex inverse(const Complex& a, double eps_inv) {
    if (!(std::abs(a.v) >= eps_inv)) throw Error(ErrorKind::NotInvertible, "complex modulus below eps_inv");
    return Complex(1.0 / a.v);
}

double to_double(const Rational& a) { return a.v.convert_to<double>(); }

Rational inverse(const Rational& a) {
    if (a.v == 0) throw Error(ErrorKind::NotInvertible, "rational zero");
    return Rational(BigRational(1 / a.v));
}

Rational scaled(const Rational& a, double s) { return Rational(BigRational(a.v * BigRational(s))); }

MatScalar::MatScalar(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw Error(ErrorKind::DimensionMismatch, "MatScalar must be square");
}

MatScalar MatScalar::zero(int dim) { return MatScalar(Matrix::Zero(dim, dim)); }
MatScalar MatScalar::identity(int dim) { return MatScalar(Matrix::Identity(dim, dim)); }

MatScalar MatScalar::from_real(int dim, const std::vector<double>& row_major) {
    if (row_major.size() != static_cast<std::size_t>(dim) * dim)
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match dim");
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = row_major[r * dim + c];
    return MatScalar(std::move(m));
}

bool MatScalar::is_real(double tol) const { return m_.imag().cwiseAbs().maxCoeff() <= tol; }

namespace {
void require_same_dim(const MatScalar& a, const MatScalar& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix scalars of dim " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}
}  // namespace

MatScalar operator+(const MatScalar& a, const MatScalar& b) {
    require_same_dim(a, b);
    return MatScalar(a.m_ + b.m_);
}
MatScalar operator-(const MatScalar& a, const MatScalar& b) {
    require_same_dim(a, b);
    return MatScalar(a.m_ - b.m_);
}
MatScalar operator-(const MatScalar& a) { return MatScalar(-a.m_); }
MatScalar operator*(const MatScalar& a, const MatScalar& b) {
    require_same_dim(a, b);
    return MatScalar(a.m_ * b.m_);
}

double norm(const MatScalar& a) { return a.matrix().norm(); }

double condition_number(const MatScalar& a) {
    if (a.dim() == 0) return 1.0;
    Eigen::JacobiSVD<MatScalar::Matrix> svd(a.matrix());
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

MatScalar inverse(const MatScalar& a, MatInverseGuard guard) {
    const double cond = condition_number(a);
    if (!(cond <= guard.cond_max))
        throw Error(ErrorKind::NotInvertible, "matrix condition number " + std::to_string(cond) + " exceeds cond_max");
    MatScalar::Matrix x = a.matrix().partialPivLu().inverse();
    const auto eye = MatScalar::Matrix::Identity(a.dim(), a.dim());
    const double res = (a.matrix() * x - eye).norm();
    if (!(res <= guard.residual_tol))
        throw Error(ErrorKind::NotInvertible, "matrix solve residual " + std::to_string(res));
    return MatScalar(std::move(x));
}

MatScalar scaled(const MatScalar& a, double s) { return MatScalar(a.matrix() * s); }

MatScalar from_ratio(const MatScalar& like, std::int64_t num, std::int64_t den) {
    return scaled(one_like(like), static_cast<double>(num) / static_cast<double>(den));
}

std::vector<std::complex<double>> characteristic_polynomial(const MatScalar& a) {
    // Faddeev–LeVerrier.
    const int n = a.dim();
    const auto& A = a.matrix();
    const auto eye = MatScalar::Matrix::Identity(n, n);
    std::vector<std::complex<double>> c(n + 1);
    c[n] = 1.0;
    MatScalar::Matrix m = MatScalar::Matrix::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        m = A * m + c[n - k + 1] * eye;
        c[n - k] = -(A * m).trace() / static_cast<double>(k);
    }
    return c;
}

bool similar(const MatScalar& a, const MatScalar& b, double tol) {
    require_same_dim(a, b);
    const auto ca = characteristic_polynomial(a);
    const auto cb = characteristic_polynomial(b);
    // coefficient c[d−k] is homogeneous of degree k in the entries
    const double size = std::max(norm(a), norm(b));
    double scale = 1.0;
    for (std::size_t k = ca.size(); k-- > 0;) {
        if (std::abs(ca[k] - cb[k]) > tol + tol * scale) return false;
        scale *= size;
    }
    return true;
}

// ---- sampling ----

namespace {
std::mt19937_64 engine_for(const Seed& s) {
    std::seed_seq seq{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                      static_cast<std::uint32_t>(s.counter), static_cast<std::uint32_t>(s.counter >> 32)};
    return std::mt19937_64(seq);
}

// Portable mapping of a 64-bit word to [0, 1).
double unit(std::uint64_t w) { return static_cast<double>(w >> 11) * 0x1.0p-53; }

std::vector<double> uniforms(Seed& s, std::size_t n) {
    auto gen = engine_for(s);
    ++s.counter;
    std::vector<double> out(n);
    for (auto& v : out) v = 2.0 * unit(gen()) - 1.0;
    return out;
}

[[noreturn]] void resample_exhausted(std::string_view ring) {
    throw Error(ErrorKind::ResampleLimitExceeded, std::string(ring) + " sampling guard failed 1000 times");
}
}  // namespace

double uniform(Seed& s, double lo, double hi) {
    const double u = uniforms(s, 1)[0];
    return lo + (hi - lo) * (u + 1.0) * 0.5;
}

Quaternion sample(const Quaternion&, Seed& s) {
    for (int i = 0; i < resample_limit; ++i) {
        const auto c = uniforms(s, 4);
        Quaternion q{c[0], c[1], c[2], c[3]};
        if (norm(q) >= sample_min_norm) return q;
    }
    resample_exhausted("quaternion");
}

Complex sample(const Complex&, Seed& s) {
    for (int i = 0; i < resample_limit; ++i) {
        const auto c = uniforms(s, 2);
        Complex z(c[0], c[1]);
        if (norm(z) >= sample_min_norm) return z;
    }
    resample_exhausted("complex");
}

Rational sample(const Rational&, Seed& s) {
    constexpr std::int64_t max_den = 64;
    for (int i = 0; i < resample_limit; ++i) {
        const auto c = uniforms(s, 2);
        const auto den = 1 + static_cast<std::int64_t>((c[0] + 1.0) * 0.5 * max_den) % max_den;
        const auto num = static_cast<std::int64_t>(std::lround(c[1] * static_cast<double>(den)));
        Rational r(num, den);
        if (norm(r) >= sample_min_norm) return r;
    }
    resample_exhausted("rational");
}

MatScalar sample(const MatScalar& like, Seed& s) {
    const int d = like.dim();
    for (int i = 0; i < resample_limit; ++i) {
        auto m = MatScalar::from_real(d, uniforms(s, static_cast<std::size_t>(d) * d));
        if (norm(m) >= sample_min_norm && condition_number(m) <= sample_max_cond) return m;
    }
    resample_exhausted("matrix");
}

}  // namespace ncproj
