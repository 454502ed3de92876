#include "support.hpp"

using namespace testing;

TEST_CASE("quaternion multiplication table") {
    CHECK(qi * qj == qk);
    CHECK(qj * qk == qi);
    CHECK(qk * qi == qj);
    CHECK(qi * qi == -q1);
    CHECK(qj * qj == -q1);
    CHECK(qk * qk == -q1);
    CHECK(qj * qi == -qk);
}

TEST_CASE("invert examples") {
    CHECK(inverse(q1) == q1);
    CHECK(inverse(qi) == -qi);
    CHECK_THROWS_AS(inverse(Quaternion{1e-13, 0, 0, 0}), Error);

    const auto m = MatScalar::from_real(2, {1, 2, 3, 4});
    const auto expected = MatScalar::from_real(2, {-2, 1, 1.5, -0.5});
    CHECK(approx_eq(inverse(m), expected, {1e-14, 1e-14}));
    CHECK_THROWS_AS(inverse(MatScalar::from_real(2, {1, 2, 2, 4})), Error);

    CHECK(inverse(rat(3, 7)) == rat(7, 3));
    CHECK_THROWS_AS(inverse(rat(0)), Error);
    CHECK(approx_eq(inverse(Complex(0, 2)), Complex(0, -0.5)));
}

TEST_CASE("conjugate_by examples") {
    const Quaternion a{0.3, -0.2, 0.9, 0.4};
    CHECK(approx_eq(conjugate_by(a, q1), a));
    CHECK(approx_eq(conjugate_by(qj, qi), -qj));
    CHECK(conjugate_by(rat(5), rat(3)) == rat(5));
}

TEST_CASE("similar examples") {
    CHECK(similar(qi, qj, 1e-12));
    CHECK_FALSE(similar(rat(2), rat(3), 1e-12));
    CHECK_FALSE(similar(Quaternion{0.5, 1, 0, 0}, Quaternion{0.4, 1, 0, 0}, 1e-9));
    Seed s{7, 0};
    for (int n = 0; n < 50; ++n) {
        const auto b = sample(Quaternion{}, s);
        const auto mu = sample(Quaternion{}, s);
        CHECK(similar(conjugate_by(b, mu), b, 1e-9));
    }
    const MatScalar like = MatScalar::identity(3);
    for (int n = 0; n < 20; ++n) {
        const auto b = sample(like, s);
        const auto mu = sample(like, s);
        CHECK(similar(conjugate_by(b, mu), b, 1e-9));
    }
    CHECK_FALSE(similar(MatScalar::from_real(2, {1, 0, 0, 2}), MatScalar::from_real(2, {1, 0, 0, 3}), 1e-9));
    CHECK_THROWS_AS(similar(MatScalar::identity(2), MatScalar::identity(3), 1e-9), Error);
}

TEST_CASE("sampling is deterministic and guarded") {
    Seed a{99, 5}, b{99, 5};
    const auto qa = sample(Quaternion{}, a);
    const auto qb = sample(Quaternion{}, b);
    CHECK(qa == qb);
    CHECK(a.counter == b.counter);
    Seed c{99, 6};
    CHECK_FALSE(sample(Quaternion{}, c) == qa);

    Seed m{3, 0};
    const MatScalar like = MatScalar::identity(3);
    for (int n = 0; n < 100; ++n) {
        const auto x = sample(like, m);
        CHECK(condition_number(x) <= 1e4);
        CHECK(norm(x) >= 0.1);
        CHECK(x.is_real());
    }
    Seed r{4, 0};
    for (int n = 0; n < 100; ++n) {
        const auto x = sample(Rational{}, r);
        CHECK(norm(x) >= 0.1);
        CHECK(norm(x) <= 1.0);
    }
}

TEST_CASE("quaternion ring axioms on 1000 random triples") {
    Seed s{2024, 0};
    double worst = 0, inv_worst = 0, sub_worst = 0;
    for (int n = 0; n < 1000; ++n) {
        const auto a = sample(Quaternion{}, s), b = sample(Quaternion{}, s), c = sample(Quaternion{}, s);
        worst = std::max({worst, norm((a * b) * c - a * (b * c)), norm(a * (b + c) - (a * b + a * c)),
                          norm((a + b) * c - (a * c + b * c))});
        inv_worst = std::max({inv_worst, norm(inverse(inverse(a)) - a), norm(a * inverse(a) - q1),
                              norm(inverse(a) * a - q1)});
        sub_worst = std::max(sub_worst, norm(a * b) - (1 + 1e-12) * norm(a) * norm(b));
        const auto m1 = sample(Quaternion{}, s), m2 = sample(Quaternion{}, s);
        CHECK(approx_eq(conjugate_by(a, m1 * m2), conjugate_by(conjugate_by(a, m2), m1)));
        CHECK(similar(a, a, 1e-12));
        CHECK(similar(a, b, 1e-9) == similar(b, a, 1e-9));
    }
    CHECK(worst <= 1e-12);
    CHECK(inv_worst <= 1e-12);
    CHECK(sub_worst <= 0.0);
}

TEST_CASE("matrix scalar axioms") {
    Seed s{11, 0};
    const MatScalar like = MatScalar::identity(3);
    for (int n = 0; n < 200; ++n) {
        const auto a = sample(like, s), b = sample(like, s), c = sample(like, s);
        CHECK(approx_eq((a * b) * c, a * (b * c)));
        CHECK(approx_eq(a * (b + c), a * b + a * c));
        CHECK(approx_eq(a * inverse(a), one_like(a)));
        CHECK(norm(a * b) <= (1 + 1e-12) * norm(a) * norm(b));
    }
    CHECK_THROWS_AS(MatScalar::identity(2) + MatScalar::identity(3), Error);
}

TEST_CASE("characteristic polynomial") {
    // [[2,1],[0,3]]: λ² − 5λ + 6
    const auto p = characteristic_polynomial(MatScalar::from_real(2, {2, 1, 0, 3}));
    CHECK(std::abs(p[0] - 6.0) < 1e-12);
    CHECK(std::abs(p[1] + 5.0) < 1e-12);
    CHECK(std::abs(p[2] - 1.0) < 1e-12);
}

TEST_CASE("rational scaling is exact") {
    CHECK(scaled(rat(1, 3), 0.5) == rat(1, 6));
    CHECK(scaled(rat(2), 1.5) == rat(3));
    CHECK(from_ratio(rat(0), 3, 2) == rat(3, 2));
}
