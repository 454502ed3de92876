#pragma once

#include <optional>
#include <string>

#include "ncproj/quasidet.hpp"
#include "ncproj/vec2.hpp"

namespace ncproj {

namespace detail {

template <class F>
auto try_defined(F&& f) -> std::optional<decltype(f())> {
    try {
        return f();
    } catch (const Error& e) {
        if (!e.is_undefined()) throw;
        return std::nullopt;
    }
}

// Returns the first form, falling back to the second; when both exist they must agree.
template <Scalar T>
T reconcile_forms(const std::optional<T>& first, const std::optional<T>& second, Tolerance tol,
                  const char* what) {
    if (first && second) {
        if (norm(*first - *second) > 100.0 * (tol.atol + tol.rtol * std::max(norm(*first), norm(*second))))
            throw Error(ErrorKind::RowFormMismatch, std::string(what) + ": the two forms disagree");
        return *first;
    }
    if (first) return *first;
    if (second) return *second;
    throw Error(ErrorKind::UndefinedExpression, std::string(what) + ": required inverse fails");
}

inline void check_index(int idx, std::size_t n) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= n)
        throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(idx) + " outside 0.." + std::to_string(n - 1));
}

}  // namespace detail

// Left quasi-Plücker coordinate q^k_{ij} of the 2×n matrix with the given columns (0-based).
template <Scalar T>
T qp_left(const ColumnTuple<T>& a, int i, int j, int k, Tolerance tol = {}) {
    detail::check_index(i, a.size());
    detail::check_index(j, a.size());
    detail::check_index(k, a.size());
    if (i == k) throw Error(ErrorKind::IndexOutOfRange, "qp_left needs i != k");
    const auto& ai = a[i];
    const auto& aj = a[j];
    const auto& ak = a[k];
    if (j == k) return zero_like(ai.x1);
    if (j == i) return one_like(ai.x1);

    auto row1 = detail::try_defined([&] {
        const T s = ak.x1 * inverse(ak.x2);
        return T(inverse(ai.x1 - s * ai.x2) * (aj.x1 - s * aj.x2));
    });
    auto row2 = detail::try_defined([&] {
        const T s = ak.x2 * inverse(ak.x1);
        return T(inverse(ai.x2 - s * ai.x1) * (aj.x2 - s * aj.x1));
    });
    return detail::reconcile_forms(row1, row2, tol, "qp_left");
}

// Right quasi-Plücker coordinate of the n×2 matrix b (0-based rows):
// (b_i1 − b_i2 b_k2⁻¹ b_k1)(b_j1 − b_j2 b_k2⁻¹ b_k1)⁻¹.
template <Scalar T>
T qp_right(const RingMatrix<T>& b, int i, int j, int k, Tolerance tol = {}) {
    if (b.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "qp_right needs an n x 2 matrix");
    const auto n = static_cast<std::size_t>(b.rows());
    detail::check_index(i, n);
    detail::check_index(j, n);
    detail::check_index(k, n);
    if (j == k) throw Error(ErrorKind::IndexOutOfRange, "qp_right needs j != k");
    if (i == k) return zero_like(b(0, 0));
    if (j == i) return one_like(b(0, 0));

    auto col1 = detail::try_defined([&] {
        const T s = inverse(b(k, 1)) * b(k, 0);
        return T((b(i, 0) - b(i, 1) * s) * inverse(b(j, 0) - b(j, 1) * s));
    });
    auto col2 = detail::try_defined([&] {
        const T s = inverse(b(k, 0)) * b(k, 1);
        return T((b(i, 1) - b(i, 0) * s) * inverse(b(j, 1) - b(j, 0) * s));
    });
    return detail::reconcile_forms(col1, col2, tol, "qp_right");
}

}  // namespace ncproj
