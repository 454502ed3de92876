#include <cmath>

#include "ncproj/plucker.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("qp_left special indices") {
    Seed s{1, 0};
    const ColumnTuple<Quaternion> a{rand_vec2(q1, s), rand_vec2(q1, s), rand_vec2(q1, s)};
    CHECK(qp_left(a, 0, 2, 2) == Quaternion{});
    CHECK(qp_left(a, 0, 0, 2) == q1);
    CHECK_THROWS_AS(qp_left(a, 1, 2, 1), Error);
    CHECK_THROWS_AS(qp_left(a, 0, 1, 3), Error);
}

TEST_CASE("qp_left commutative minor ratio") {
    // [[1,2,3],[1,1,1]]: q^1_{23} = p_31 / p_21 = 2
    const ColumnTuple<Rational> a{{rat(1), rat(1)}, {rat(2), rat(1)}, {rat(3), rat(1)}};
    CHECK(qp_left(a, 1, 2, 0) == rat(2));

    Seed s{2, 0};
    for (int trial = 0; trial < 200; ++trial) {
        ColumnTuple<Complex> c;
        for (int n = 0; n < 4; ++n) c.push_back(rand_vec2(Complex{}, s));
        auto p = [&](int x, int y) { return c[x].x1 * c[y].x2 - c[y].x1 * c[x].x2; };
        const int i = trial % 4, k = (i + 1 + trial / 4 % 3) % 4;
        const int j = (k + 1) % 4 == i ? (k + 2) % 4 : (k + 1) % 4;
        CHECK(residual(qp_left(c, i, j, k), p(j, k) * inverse(p(i, k))) <= 1e-10);
    }
}

TEST_CASE("quasi-Plucker properties on quaternions") {
    double worst = 0;
    const int skipped = for_trials(300, 77, [&](Seed& s) {
        ColumnTuple<Quaternion> a;
        for (int n = 0; n < 4; ++n) a.push_back(rand_vec2(q1, s));
        const int i = 0, j = 1, k = 2, l = 3;
        // P1: left multiplication by an invertible 2x2 matrix
        const Quaternion g11 = sample(q1, s), g12 = sample(q1, s), g21 = sample(q1, s), g22 = sample(q1, s);
        ColumnTuple<Quaternion> ga;
        for (const auto& v : a) ga.push_back({g11 * v.x1 + g12 * v.x2, g21 * v.x1 + g22 * v.x2});
        worst = std::max(worst, residual(qp_left(ga, i, j, k), qp_left(a, i, j, k)));
        // P2: right diagonal scaling
        ColumnTuple<Quaternion> al = a;
        std::vector<Quaternion> lam;
        for (auto& v : al) {
            lam.push_back(sample(q1, s));
            v = {v.x1 * lam.back(), v.x2 * lam.back()};
        }
        worst = std::max(worst, residual(qp_left(al, i, j, k), inverse(lam[i]) * qp_left(a, i, j, k) * lam[j]));
        // P4
        worst = std::max(worst, residual(qp_left(a, i, j, k) * qp_left(a, j, i, k), q1));
        worst = std::max(worst, residual(qp_left(a, i, j, k) * qp_left(a, j, l, k), qp_left(a, i, l, k)));
        // P5
        worst = std::max(worst, residual(qp_left(a, i, j, k) * qp_left(a, j, k, i) * qp_left(a, k, i, j), -q1));
        // P6
        worst = std::max(worst, residual(qp_left(a, i, j, k) * qp_left(a, j, i, l) +
                                             qp_left(a, i, l, k) * qp_left(a, l, i, j),
                                         q1));
    });
    CHECK(worst <= 1e-9);
    CHECK(skipped <= 15);
}

TEST_CASE("qp_right") {
    const double r3 = std::sqrt(3.0);
    // rows (f, f', f'') for f1 = sin, f2 = cos at π/6
    RingMatrix<Complex> b{{Complex(0.5), Complex(r3 / 2)}, {Complex(r3 / 2), Complex(-0.5)}, {Complex(-0.5), Complex(-r3 / 2)}};
    CHECK(norm(-qp_right(b, 2, 1, 0)) <= 1e-12);
    CHECK(norm(-qp_right(b, 2, 0, 1) - Complex(1)) <= 1e-12);

    RingMatrix<Rational> dep{{rat(1), rat(2)}, {rat(2), rat(4)}, {rat(3), rat(5)}};
    CHECK_THROWS_AS(qp_right(dep, 2, 1, 0), Error);

    Seed s{9, 0};
    for (int trial = 0; trial < 100; ++trial) {
        RingMatrix<Complex> m(3, 2, Complex(0));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 2; ++c) m(r, c) = sample(Complex{}, s);
        auto p = [&](int x, int y) { return m(x, 0) * m(y, 1) - m(x, 1) * m(y, 0); };
        CHECK(residual(qp_right(m, 2, 1, 0), p(2, 0) * inverse(p(1, 0))) <= 1e-10);
    }
}
