#include <algorithm>
#include <numeric>

#include "ncproj/quasidet.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("quasidet examples") {
    RingMatrix<Rational> id{{rat(1), rat(0)}, {rat(0), rat(1)}};
    CHECK(quasidet(id, 0, 0) == rat(1));

    RingMatrix<Rational> a{{rat(1), rat(2)}, {rat(3), rat(4)}};
    CHECK(quasidet(a, 0, 0) == rat(-1, 2));

    RingMatrix<Quaternion> q{{qi, qj}, {qk, q1}};
    CHECK(norm(quasidet(q, 0, 0)) == 0.0);

    RingMatrix<Rational> one{{rat(7)}};
    CHECK(quasidet(one, 0, 0) == rat(7));
    CHECK_THROWS_AS(quasidet(a, 2, 0), Error);
}

TEST_CASE("quasidet_2x2_all") {
    RingMatrix<Rational> id{{rat(1), rat(0)}, {rat(0), rat(1)}};
    const auto all = quasidet_2x2_all(id);
    CHECK(*all[0].value == rat(1));
    CHECK(*all[3].value == rat(1));
    CHECK_FALSE(all[1].value.has_value());
    CHECK_FALSE(all[2].value.has_value());

    RingMatrix<Rational> m{{rat(2), rat(3)}, {rat(5), rat(7)}};
    const auto v = quasidet_2x2_all(m);
    CHECK(*v[0].value == rat(2) - rat(3) * rat(1, 7) * rat(5));
    CHECK(*v[1].value == rat(3) - rat(2) * rat(1, 5) * rat(7));
    CHECK(*v[2].value == rat(5) - rat(7) * rat(1, 3) * rat(2));
    CHECK(*v[3].value == rat(7) - rat(5) * rat(1, 2) * rat(3));

    Seed s{5, 0};
    for (int n = 0; n < 50; ++n) {
        RingMatrix<Quaternion> r{{sample(q1, s), sample(q1, s)}, {sample(q1, s), sample(q1, s)}};
        const auto all_q = quasidet_2x2_all(r);
        for (int p = 0; p < 2; ++p)
            for (int c = 0; c < 2; ++c)
                CHECK(approx_eq(*all_q[2 * p + c].value, quasidet(r, p, c)));
    }
}

namespace {
Eigen::MatrixXcd to_eigen(const RingMatrix<Complex>& a) {
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c).v;
    return m;
}
}  // namespace

TEST_CASE("commutative reduction to determinant ratios") {
    Seed s{17, 0};
    for (int n : {3, 4}) {
        for (int trial = 0; trial < 100; ++trial) {
            RingMatrix<Complex> a(n, n, Complex(0));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) a(r, c) = sample(Complex{}, s);
            const auto det = to_eigen(a).determinant();
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const auto minor = to_eigen(a.without(p, q)).determinant();
                    const Complex expected(((p + q) % 2 ? -1.0 : 1.0) * det / minor);
                    CHECK(residual(quasidet(a, p, q), expected) <= 1e-10);
                }
        }
    }
}

TEST_CASE("rational quasidet is exact") {
    Seed s{21, 0};
    for (int trial = 0; trial < 20; ++trial) {
        RingMatrix<Rational> a(3, 3, rat(0));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) a(r, c) = sample(Rational{}, s);
        // 3x3 determinant by cofactors.
        auto det2 = [](const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
            return a * d - b * c;
        };
        const Rational det = a(0, 0) * det2(a(1, 1), a(1, 2), a(2, 1), a(2, 2)) -
                             a(0, 1) * det2(a(1, 0), a(1, 2), a(2, 0), a(2, 2)) +
                             a(0, 2) * det2(a(1, 0), a(1, 1), a(2, 0), a(2, 1));
        const Rational minor = det2(a(1, 1), a(1, 2), a(2, 1), a(2, 2));
        CHECK(quasidet(a, 0, 0) == det * inverse(minor));
    }
}

TEST_CASE("quasidet invariant under permutations away from the boxed row and column") {
    Seed s{23, 0};
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4;
        RingMatrix<Quaternion> a(n, n, q1);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a(r, c) = sample(q1, s);
        const int p = trial % n, q = (trial / n) % n;
        std::vector<int> rows, cols;
        for (int i = 0; i < n; ++i) {
            if (i != p) rows.push_back(i);
            if (i != q) cols.push_back(i);
        }
        std::rotate(rows.begin(), rows.begin() + 1, rows.end());
        std::reverse(cols.begin(), cols.end());
        RingMatrix<Quaternion> b = a;
        for (int i = 0, k = 0; i < n; ++i) {
            if (i == p) continue;
            for (int j = 0; j < n; ++j) b(i, j) = a(rows[k], j);
            ++k;
        }
        RingMatrix<Quaternion> c = b;
        for (int j = 0, k = 0; j < n; ++j) {
            if (j == q) continue;
            for (int i = 0; i < n; ++i) c(i, j) = b(i, cols[k]);
            ++k;
        }
        CHECK(approx_eq(quasidet(a, p, q), quasidet(c, p, q)));
    }
}
