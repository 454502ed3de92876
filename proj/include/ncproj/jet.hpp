#pragma once

#include <algorithm>
#include <vector>

#include "ncproj/scalar.hpp"

namespace ncproj {

inline constexpr int default_jet_order = 6;

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Raw derivatives (f(0), f'(0), ..., f^(K)(0)).
template <Scalar T>
class Jet {
public:
    explicit Jet(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error(ErrorKind::DimensionMismatch, "jet needs at least one coefficient");
    }

    static Jet constant(const T& value, int order) {
        std::vector<T> c(static_cast<std::size_t>(order) + 1, zero_like(value));
        c[0] = value;
        return Jet(std::move(c));
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& head() const { return c_.front(); }

    Jet truncated(int order) const {
        return Jet(std::vector<T>(c_.begin(), c_.begin() + std::min(order, this->order()) + 1));
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        const int k = std::min(a.order(), b.order());
        std::vector<T> c;
        for (int n = 0; n <= k; ++n) c.push_back(a[n] + b[n]);
        return Jet(std::move(c));
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        const int k = std::min(a.order(), b.order());
        std::vector<T> c;
        for (int n = 0; n <= k; ++n) c.push_back(a[n] - b[n]);
        return Jet(std::move(c));
    }
    friend Jet operator-(const Jet& a) {
        std::vector<T> c;
        for (const auto& x : a.c_) c.push_back(-x);
        return Jet(std::move(c));
    }
    // Leibniz rule with factor order preserved.
    friend Jet operator*(const Jet& a, const Jet& b) {
        const int k = std::min(a.order(), b.order());
        std::vector<T> c;
        for (int n = 0; n <= k; ++n) {
            T acc = a[0] * b[n];
            for (int j = 1; j <= n; ++j) acc = acc + scaled(a[j] * b[n - j], binomial(n, j));
            c.push_back(acc);
        }
        return Jet(std::move(c));
    }
    friend Jet operator*(const T& s, const Jet& a) {
        std::vector<T> c;
        for (const auto& x : a.c_) c.push_back(s * x);
        return Jet(std::move(c));
    }
    friend Jet operator*(const Jet& a, const T& s) {
        std::vector<T> c;
        for (const auto& x : a.c_) c.push_back(x * s);
        return Jet(std::move(c));
    }

private:
    std::vector<T> c_;
};

template <Scalar T>
Jet<T> scaled(const Jet<T>& a, double s) {
    std::vector<T> c;
    for (const auto& x : a.coeffs()) c.push_back(scaled(x, s));
    return Jet<T>(std::move(c));
}

template <Scalar T>
Jet<T> derivative(const Jet<T>& f) {
    if (f.order() < 1) throw Error(ErrorKind::DimensionMismatch, "cannot differentiate an order-0 jet");
    return Jet<T>(std::vector<T>(f.coeffs().begin() + 1, f.coeffs().end()));
}

// (f⁻¹)^(n) = −f(0)⁻¹ Σ_{k=1..n} C(n,k) f^(k) (f⁻¹)^(n−k)
template <Scalar T>
Jet<T> jet_inv(const Jet<T>& f) {
    const T f0i = inverse(f[0]);
    std::vector<T> g{f0i};
    for (int n = 1; n <= f.order(); ++n) {
        T acc = zero_like(f0i);
        for (int k = 1; k <= n; ++k) acc = acc + scaled(f[k] * g[static_cast<std::size_t>(n - k)], binomial(n, k));
        g.push_back(-(f0i * acc));
    }
    return Jet<T>(std::move(g));
}

// Taylor polynomial of the jet at real offset s.
template <Scalar T>
T evaluate(const Jet<T>& f, double s) {
    T acc = f[0];
    double w = 1.0;
    for (int n = 1; n <= f.order(); ++n) {
        w *= s / n;
        acc = acc + scaled(f[n], w);
    }
    return acc;
}

template <Scalar T>
double max_norm(const Jet<T>& f) {
    double m = 0.0;
    for (const auto& x : f.coeffs()) m = std::max(m, norm(x));
    return m;
}

}  // namespace ncproj
