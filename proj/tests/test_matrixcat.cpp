#include <doctest.h>

#include "homcat/matrixcat.hpp"

using namespace homcat;

namespace {

/* A_n: vertices 1..n, arrows a1..a(n-1) with ai : i -> i+1. */
QuiverSpec an_spec(int n) {
    std::string s = "field q; vertices";
    for (int i = 1; i <= n; ++i) s += " " + std::to_string(i);
    s += ";";
    for (int i = 1; i < n; ++i)
        s += " arrow a" + std::to_string(i) + " : " + std::to_string(i) + " -> " + std::to_string(i + 1) + ";";
    return parse_spec(s);
}

/* The module (0, K, K, ..., K) over A_n with identity structure maps. */
template <class F>
Rep<F> truncated_module(const PresentedCategory<F>& U) {
    Rep<F> M;
    std::vector<int> d(U.n(), 1);
    d[0] = 0;
    M.init(U, d);
    for (int x = 0; x < U.n(); ++x)
        for (int y = 0; y < U.n(); ++y)
            for (int k = 0; k < U.dim(x, y); ++k) {
                Matrix<F> m(d[y], d[x]);
                if (d[x] == 1 && d[y] == 1) m(0, 0) = F::one();
                M.act[x][y][k] = std::move(m);
            }
    return M;
}

/* The extended quiver: vertex 0 plus A_n, arrows bi : 0 -> i+1, with
   relations a(i+1) b(i) - b(i+1). */
QuiverSpec qbar_spec(int n) {
    std::string s = "field q; vertices";
    for (int i = 0; i <= n; ++i) s += " " + std::to_string(i);
    s += ";";
    for (int i = 1; i < n; ++i)
        s += " arrow a" + std::to_string(i) + " : " + std::to_string(i) + " -> " + std::to_string(i + 1) + ";";
    for (int i = 1; i < n; ++i)
        s += " arrow b" + std::to_string(i) + " : 0 -> " + std::to_string(i + 1) + ";";
    return parse_spec(s);
}

template <class F>
std::vector<RawRelation<F>> qbar_relations(int n) {
    // arrow ids: a_i -> i-1, b_i -> (n-1) + (i-1)
    std::vector<RawRelation<F>> rels;
    for (int i = 1; i <= n - 2; ++i) {
        RawRelation<F> r;
        r.src = 0;
        r.tgt = i + 2;
        r.terms.push_back({F::one(), {(n - 1) + (i - 1), i}});  // a(i+1) after b(i)
        r.terms.push_back({-F::one(), {(n - 1) + i}});          // b(i+1)
        rels.push_back(std::move(r));
    }
    return rels;
}

}  // namespace

TEST_CASE("M = 0 gives the disjoint union of T and U") {
    auto T = build_category<Rational>(an_spec(2));
    auto U = build_category<Rational>(an_spec(2));
    auto E = tensor_category(opposite(T), U);
    auto L = triangular_matrix_category(T, U, zero_rep(E));
    L.cat.validate();
    CHECK(L.cat.n() == 4);
    for (int t = 0; t < 2; ++t)
        for (int u = 0; u < 2; ++u) {
            CHECK(L.cat.dim(L.t_obj(t), L.u_obj(u)) == 0);
            CHECK(L.cat.dim(L.u_obj(u), L.t_obj(t)) == 0);
        }
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            CHECK(L.cat.dim(x, y) == T.dim(x, y));
            CHECK(L.cat.dim(2 + x, 2 + y) == U.dim(x, y));
        }
}

TEST_CASE("one-point extension of A_1 by K is A_2") {
    auto U = build_category<Rational>(an_spec(1));
    Rep<Rational> M;
    M.init(U, {1});
    M.act[0][0][0] = Matrix<Rational>::identity(1);
    auto L = one_point_extension(U, M);
    CHECK(L.one_point);
    CHECK(L.cat.n() == 2);
    CHECK(L.cat.dim(0, 0) == 1);
    CHECK(L.cat.dim(0, 1) == 1);
    CHECK(L.cat.dim(1, 0) == 0);
    CHECK(L.cat.dim(1, 1) == 1);

    auto A2 = build_category<Rational>(an_spec(2));
    CHECK(functor_is_isomorphism(A2, L.cat, {0, 1}, {L.cat.unit(0, 1, 0)}));
}

TEST_CASE("hom-dimension formula for the truncated one-point example, n = 2") {
    auto U = build_category<Rational>(an_spec(2));
    auto M = truncated_module(U);
    auto L = one_point_extension(U, M);
    // dim L(N, u') = M(u'), dim L(N, N) = 1
    CHECK(L.cat.dim(0, 0) == 1);
    CHECK(L.cat.dim(0, L.u_obj(0)) == 0);  // M(1) = 0
    CHECK(L.cat.dim(0, L.u_obj(1)) == 1);  // M(2) = K
    for (int u = 0; u < 2; ++u)
        for (int u2 = 0; u2 < 2; ++u2) CHECK(L.cat.dim(L.u_obj(u), L.u_obj(u2)) == U.dim(u, u2));
}

TEST_CASE("the extended quiver presents the one-point extension, n = 2..4") {
    for (int n = 2; n <= 4; ++n) {
        auto U = build_category<Rational>(an_spec(n));
        auto M = truncated_module(U);
        auto L = one_point_extension(U, M);
        L.cat.validate();

        auto qb = qbar_spec(n);
        auto B = build_category<Rational>(qb, qbar_relations<Rational>(n));
        REQUIRE(B.n() == L.cat.n());

        // objects: 0 -> the extension vertex, i -> u_obj(i-1)
        std::vector<int> objmap(n + 1);
        objmap[0] = 0;
        for (int i = 1; i <= n; ++i) objmap[i] = L.u_obj(i - 1);
        // arrow images: a_i -> the U-part arrow, b_i -> the M-part basis elt
        std::vector<std::vector<Rational>> imgs;
        for (int i = 1; i < n; ++i) imgs.push_back(L.cat.unit(L.u_obj(i - 1), L.u_obj(i), 0));
        for (int i = 1; i < n; ++i) imgs.push_back(L.cat.unit(0, L.u_obj(i), 0));
        CHECK(functor_is_isomorphism(B, L.cat, objmap, imgs));
    }
}

TEST_CASE("kernel ideal of the one-point extension") {
    auto U = build_category<Rational>(an_spec(3));
    auto M = truncated_module(U);
    auto L = one_point_extension(U, M);
    auto K = kernel_ideal(L);
    CHECK(K.saturated);
    CHECK(K.exact);
    CHECK(K.quotient_is_U);
    CHECK(K.ok());
    // displayed formula: I(N, N) = K, I(N, u') = M(u'), zero out of U-objects
    CHECK(K.I.dim(0, 0) == 1);
    CHECK(K.I.dim(0, L.u_obj(0)) == 0);
    CHECK(K.I.dim(0, L.u_obj(1)) == 1);
    CHECK(K.I.dim(0, L.u_obj(2)) == 1);
    for (int u = 0; u < 3; ++u)
        for (int y = 0; y < L.cat.n(); ++y) CHECK(K.I.dim(L.u_obj(u), y) == 0);
}

TEST_CASE("kernel ideal for M = 0 with a point T") {
    auto T = build_category<Rational>(an_spec(1));
    auto U = build_category<Rational>(an_spec(2));
    auto E = tensor_category(opposite(T), U);
    auto L = triangular_matrix_category(T, U, zero_rep(E));
    CHECK(L.one_point);
    auto K = kernel_ideal(L);
    CHECK(K.ok());
    CHECK(K.I.dim(0, 0) == 1);
    CHECK(K.I.dim(0, L.u_obj(0)) == 0);
    CHECK(K.I.dim(0, L.u_obj(1)) == 0);
}

TEST_CASE("representable slices of the kernel ideal are projective") {
    for (int n = 2; n <= 4; ++n) {
        auto U = build_category<Rational>(an_spec(n));
        auto M = truncated_module(U);
        auto L = one_point_extension(U, M);
        auto K = kernel_ideal(L);
        auto v = verify_representable_slices(L, K.I);
        CHECK(v.ok);
        CHECK(v.representable[0]);  // I(N,-) = Lambda(N,-)
        for (int x = 0; x < L.cat.n(); ++x) CHECK(v.projective[x]);
    }
}

TEST_CASE("kernel ideal is a projective bimodule for one-point extensions") {
    auto U = build_category<Rational>(an_spec(3));
    auto M = truncated_module(U);
    auto L = one_point_extension(U, M);
    auto K = kernel_ideal(L);
    auto v = verify_bimodule_projectivity(L, K.I);
    CHECK(v.dims_match);
    CHECK(v.natural_iso);
    CHECK(v.pd == 0);
    CHECK(v.ok());
}

TEST_CASE("bimodule projectivity check refuses non-one-point extensions") {
    auto T = build_category<Rational>(an_spec(2));
    auto U = build_category<Rational>(an_spec(2));
    auto E = tensor_category(opposite(T), U);
    auto L = triangular_matrix_category(T, U, zero_rep(E));
    CHECK_FALSE(L.one_point);
    auto K = kernel_ideal(L);
    CHECK(K.ok());
    CHECK_THROWS_AS(verify_bimodule_projectivity(L, K.I), NotOnePointExtension);
}
