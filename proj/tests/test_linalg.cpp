#include <doctest.h>

#include <random>

#include "homcat/linalg.hpp"

using namespace homcat;

namespace {

template <class F>
Matrix<F> from_rows(std::vector<std::vector<long long>> rows) {
    Matrix<F> m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = F(rows[i][j]);
    return m;
}

template <class F>
Matrix<F> random_matrix(std::mt19937& rng, int r, int c, int range = 9) {
    Matrix<F> m(r, c);
    std::uniform_int_distribution<int> d(-range, range);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = F(d(rng));
    return m;
}

}  // namespace

TEST_CASE("rref of identity is identity") {
    auto m = Matrix<Rational>::identity(2);
    auto r = rref(m);
    CHECK(r.mat == m);
    CHECK(r.pivots == std::vector<int>{0, 1});
}

TEST_CASE("rref of rank-1 2x2 over Q") {
    auto m = from_rows<Rational>({{1, 2}, {2, 4}});
    auto r = rref(m);
    CHECK(r.mat == from_rows<Rational>({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<int>{0});
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937 rng(7);
    Gfp::set_modulus(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix<Gfp>(rng, 20, 20);
        auto r1 = rref(m);
        auto r2 = rref(r1.mat);
        CHECK(r1.mat == r2.mat);
        CHECK(r1.pivots == r2.pivots);
    }
    Gfp::set_modulus(32003);
}

TEST_CASE("kernel dimensions") {
    Matrix<Rational> z(3, 3);
    CHECK(kernel_basis(z).cols() == 3);
    CHECK(kernel_basis(Matrix<Rational>::identity(3)).cols() == 0);

    Gfp::set_modulus(5);
    auto m = from_rows<Gfp>({{1, 1}});
    auto k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    // up to scalar: (1, 4)^t over GF(5)
    Gfp s = k(0, 0).is_zero() ? k(1, 0) : k(0, 0);
    REQUIRE_FALSE(s.is_zero());
    Gfp inv = s.inverse();
    CHECK(k(0, 0) * inv == Gfp(1));
    CHECK(k(1, 0) * inv == Gfp(4));
    Gfp::set_modulus(32003);
}

TEST_CASE("solve basics") {
    auto id = Matrix<Rational>::identity(2);
    std::vector<Rational> b{Rational(3), Rational(5)};
    auto x = solve_vec(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Matrix<Rational> z(2, 2);
    CHECK_FALSE(solve_vec(z, b).has_value());

    auto a = from_rows<Rational>({{1, 2}, {0, 1}});
    auto y = solve_vec(a, {Rational(3), Rational(1)});
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("rank + nullity = cols (random)") {
    std::mt19937 rng(11);
    Gfp::set_modulus(32003);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + (int)(rng() % 8), c = 1 + (int)(rng() % 8);
        auto m = random_matrix<Gfp>(rng, r, c);
        CHECK(rank(m) + kernel_basis(m).cols() == c);
        // kernel columns are actually in the kernel
        auto k = kernel_basis(m);
        CHECK((m * k).is_zero());
    }
}

TEST_CASE("solve against random consistent systems") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + (int)(rng() % 6), c = 1 + (int)(rng() % 6);
        auto a = random_matrix<Rational>(rng, r, c, 5);
        auto x0 = random_matrix<Rational>(rng, c, 2, 5);
        auto b = a * x0;
        auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
}

TEST_CASE("quotient space: K^3 by span{(1,1,0)}") {
    Matrix<Rational> sub(3, 1);
    sub(0, 0) = Rational(1);
    sub(1, 0) = Rational(1);
    auto q = quotient_space(sub, 3);
    CHECK(q.dim == 2);
    // e0 and e1 have the same image
    std::vector<Rational> e0{Rational(1), Rational(0), Rational(0)};
    std::vector<Rational> e1{Rational(0), Rational(1), Rational(0)};
    CHECK(q.project(e0) == scaled(q.project(e1), -Rational::one()));
    // project . lift = id
    for (int i = 0; i < q.dim; ++i) {
        std::vector<Rational> u(q.dim, Rational::zero());
        u[i] = Rational::one();
        CHECK(q.project(q.lift(u)) == u);
    }
    // projection matrix kills the subspace
    auto p = q.projection_matrix();
    CHECK((p * sub).is_zero());
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(17);
    Gfp::set_modulus(101);
    std::uniform_int_distribution<long long> d(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        long long a = d(rng), b = d(rng), c = d(rng);
        {
            Rational x(a), y(b), z(c);
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == Rational::one());
        }
        {
            Gfp x(a), y(b), z(c);
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == Gfp::one());
        }
    }
    Gfp::set_modulus(32003);
    CHECK_THROWS_AS(Gfp::set_modulus(32004), std::domain_error);
    CHECK(Gfp::modulus() == 32003);
}

TEST_CASE("rational normalization and field mismatch") {
    CHECK(Rational(bigint(2), bigint(4)) == Rational(bigint(1), bigint(2)));
    CHECK(Rational(bigint(3), bigint(-6)).str() == "-1/2");
    Gfp::set_modulus(5);
    CHECK(Gfp::from_rational(Rational(bigint(1), bigint(3))) == Gfp(2));
    CHECK_THROWS_AS(Gfp::from_rational(Rational(bigint(1), bigint(5))), FieldMismatch);
    Gfp::set_modulus(32003);
}
