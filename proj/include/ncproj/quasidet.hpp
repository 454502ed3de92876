#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncproj/scalar.hpp"

namespace ncproj {

template <Scalar T>
class RingMatrix {
public:
    RingMatrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows < 1 || cols < 1) throw Error(ErrorKind::DimensionMismatch, "matrix must be at least 1x1");
    }
    RingMatrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        if (rows_ < 1 || cols_ < 1) throw Error(ErrorKind::DimensionMismatch, "matrix must be at least 1x1");
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    T& operator()(int r, int c) { return data_.at(static_cast<std::size_t>(r * cols_ + c)); }
    const T& operator()(int r, int c) const { return data_.at(static_cast<std::size_t>(r * cols_ + c)); }

    RingMatrix without(int r, int c) const {
        RingMatrix out(rows_ - 1, cols_ - 1, data_.front());
        for (int i = 0, oi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (int j = 0, oj = 0; j < cols_; ++j) {
                if (j == c) continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

// Solves M·X = rhs for X by elimination with complete max-norm pivoting.
// Row operations multiply on the left, so factor order is preserved.
template <Scalar T>
std::vector<T> left_solve(RingMatrix<T> m, std::vector<T> rhs) {
    const int n = m.rows();
    if (m.cols() != n || static_cast<int>(rhs.size()) != n)
        throw Error(ErrorKind::DimensionMismatch, "left_solve needs a square system");
    std::vector<int> col_of(n);
    for (int i = 0; i < n; ++i) col_of[i] = i;

    for (int k = 0; k < n; ++k) {
        int pr = k, pc = k;
        double best = -1.0;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j)
                if (const double v = norm(m(i, j)); v > best) best = v, pr = i, pc = j;
        if (pr != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pr, j));
            std::swap(rhs[k], rhs[pr]);
        }
        if (pc != k) {
            for (int i = 0; i < n; ++i) std::swap(m(i, k), m(i, pc));
            std::swap(col_of[k], col_of[pc]);
        }
        T pinv = m(k, k);
        try {
            pinv = inverse(m(k, k));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotInvertible)
                throw Error(ErrorKind::SubmatrixNotInvertible, "pivot not invertible: " + e.detail());
            throw;
        }
        for (int i = k + 1; i < n; ++i) {
            const T f = m(i, k) * pinv;
            for (int j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
            rhs[i] = rhs[i] - f * rhs[k];
        }
    }
    std::vector<T> y(rhs);
    for (int k = n - 1; k >= 0; --k) {
        T acc = rhs[k];
        for (int j = k + 1; j < n; ++j) acc = acc - m(k, j) * y[j];
        y[k] = inverse(m(k, k)) * acc;
    }
    std::vector<T> x(y);
    for (int k = 0; k < n; ++k) x[col_of[k]] = y[k];
    return x;
}

// |A|_pq = a_pq − r_p (A^{pq})⁻¹ c_q, 0-based indices.
template <Scalar T>
T quasidet(const RingMatrix<T>& a, int p, int q) {
    const int n = a.rows();
    if (a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "quasidet needs a square matrix");
    if (p < 0 || p >= n || q < 0 || q >= n)
        throw Error(ErrorKind::IndexOutOfRange, "quasidet position outside matrix");
    if (n == 1) return a(0, 0);

    std::vector<T> cq, rp;
    for (int i = 0; i < n; ++i)
        if (i != p) cq.push_back(a(i, q));
    for (int j = 0; j < n; ++j)
        if (j != q) rp.push_back(a(p, j));
    const auto x = left_solve(a.without(p, q), std::move(cq));
    T acc = a(p, q);
    for (int k = 0; k < n - 1; ++k) acc = acc - rp[k] * x[k];
    return acc;
}

template <Scalar T>
struct QuasidetEntry {
    std::optional<T> value;
    std::string error;  // empty when defined
};

// Positions in row-major order: (1,1), (1,2), (2,1), (2,2).
template <Scalar T>
std::array<QuasidetEntry<T>, 4> quasidet_2x2_all(const RingMatrix<T>& a) {
    if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a 2x2 matrix");
    std::array<QuasidetEntry<T>, 4> out;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            auto& e = out[static_cast<std::size_t>(2 * p + q)];
            try {
                e.value = quasidet(a, p, q);
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::SubmatrixNotInvertible) throw;
                e.error = err.what();
            }
        }
    return out;
}

}  // namespace ncproj
