#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ncproj/scalar.hpp"

namespace ncproj {

// d×d complex matrix used as a noncommutative scalar.
class MatScalar {
public:
    using Matrix = Eigen::MatrixXcd;

    MatScalar() = default;
    explicit MatScalar(Matrix m);
    static MatScalar zero(int dim);
    static MatScalar identity(int dim);
    static MatScalar from_real(int dim, const std::vector<double>& row_major);

    int dim() const noexcept { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const noexcept { return m_; }
    bool is_real(double tol = 0.0) const;

    friend bool operator==(const MatScalar& a, const MatScalar& b) {
        return a.dim() == b.dim() && a.m_ == b.m_;
    }
    friend MatScalar operator+(const MatScalar& a, const MatScalar& b);
    friend MatScalar operator-(const MatScalar& a, const MatScalar& b);
    friend MatScalar operator-(const MatScalar& a);
    friend MatScalar operator*(const MatScalar& a, const MatScalar& b);

private:
    Matrix m_;
};

struct MatInverseGuard {
    double cond_max = 1e8;
    double residual_tol = 1e-9;
};

double norm(const MatScalar& a);
double condition_number(const MatScalar& a);
MatScalar inverse(const MatScalar& a, MatInverseGuard guard = {});
inline MatScalar zero_like(const MatScalar& a) { return MatScalar::zero(a.dim()); }
inline MatScalar one_like(const MatScalar& a) { return MatScalar::identity(a.dim()); }
MatScalar scaled(const MatScalar& a, double s);
MatScalar from_ratio(const MatScalar& like, std::int64_t num, std::int64_t den);

// Coefficients c_0..c_d of det(λI − A), c_d = 1.
std::vector<std::complex<double>> characteristic_polynomial(const MatScalar& a);

// Characteristic-polynomial comparison: necessary for similarity, sufficient
// only for diagonalizable matrices.
bool similar(const MatScalar& a, const MatScalar& b, double tol);

template <>
struct ScalarTraits<MatScalar> {
    static constexpr std::string_view name = "matrix";
    static constexpr bool commutative = false;
    static constexpr bool exact = false;
};

}  // namespace ncproj
