#pragma once

#include "homcat/modcat.hpp"

namespace homcat {

/* Bimodules over C are reps of the enveloping category E = C^op (x) C.
   Pair objects are flattened as a * n + b, matching tensor_category. */
template <class F>
struct BimodContext {
    const PresentedCategory<F>* C = nullptr;
    PresentedCategory<F> op;
    PresentedCategory<F> E;

    int n() const { return C->n(); }
    int pair(int a, int b) const { return a * C->n() + b; }
};

template <class F>
BimodContext<F> make_bimod_context(const PresentedCategory<F>& C) {
    BimodContext<F> ctx;
    ctx.C = &C;
    ctx.op = opposite(C);
    ctx.E = tensor_category(ctx.op, C);
    return ctx;
}

/* C as a module over C^e: value C(a,b) at (a,b), action m -> g . m . f. */
template <class F>
Rep<F> regular_bimodule(const BimodContext<F>& ctx) {
    const auto& C = *ctx.C;
    const auto& E = ctx.E;
    int n = C.n();
    Rep<F> R;
    std::vector<int> dims(E.n());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) dims[ctx.pair(a, b)] = C.dim(a, b);
    R.init(E, dims);

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int a2 = 0; a2 < n; ++a2)
                for (int b2 = 0; b2 < n; ++b2) {
                    int x = ctx.pair(a, b), y = ctx.pair(a2, b2);
                    int dA = C.dim(a2, a), dB = C.dim(b, b2);
                    for (int ia = 0; ia < dA; ++ia)
                        for (int ib = 0; ib < dB; ++ib) {
                            Matrix<F> A(C.dim(a2, b2), C.dim(a, b));
                            for (int m = 0; m < C.dim(a, b); ++m) {
                                // f: a2 -> a, then m: a -> b, then g: b -> b2
                                auto mf = C.compose_basis(a2, a, b, ia, m);
                                auto gmf = C.compose(a2, b, b2, mf, C.unit(b, b2, ib));
                                A.set_col(m, gmf);
                            }
                            R.act[x][y][ia * dB + ib] = std::move(A);
                        }
                }
    return R;
}

/* A two-sided ideal I of C as a sub-bimodule of the regular bimodule. */
template <class F>
SubRep<F> ideal_bimodule(const BimodContext<F>& ctx, const Rep<F>& reg, const CatIdeal<F>& I) {
    const auto& E = ctx.E;
    int n = ctx.n();
    SubRep<F> B;
    std::vector<int> dims(E.n(), 0);
    RepMap<F> incl(E.n());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int x = ctx.pair(a, b);
            incl[x] = I.span[a][b].as_columns();
            dims[x] = incl[x].cols();
        }
    B.rep.init(E, dims);
    for (int x = 0; x < E.n(); ++x)
        for (int y = 0; y < E.n(); ++y)
            for (int i = 0; i < E.dim(x, y); ++i) {
                auto img = reg.act[x][y][i] * incl[x];
                auto sol = solve(incl[y], img);
                if (!sol) throw std::logic_error("ideal is not closed under the bimodule action");
                B.rep.act[x][y][i] = *sol;
            }
    B.incl = std::move(incl);
    return B;
}

/* 0 -> I -> C -> C/I -> 0 in bimodules. */
template <class F>
struct CanonicalSequence {
    Rep<F> reg;       // C
    SubRep<F> ideal;  // I with its inclusion
    QuotRep<F> quot;  // C/I with its projection
};

template <class F>
CanonicalSequence<F> canonical_sequence(const BimodContext<F>& ctx, const CatIdeal<F>& I) {
    CanonicalSequence<F> s;
    s.reg = regular_bimodule(ctx);
    s.ideal = ideal_bimodule(ctx, s.reg, I);
    s.quot = cokernel_rep(s.reg, s.ideal.incl);
    return s;
}

/* Left slice B(c, -): a rep of C, b -> B at pair (c, b). */
template <class F>
Rep<F> left_slice(const BimodContext<F>& ctx, const Rep<F>& B, int c) {
    const auto& C = *ctx.C;
    int n = ctx.n();
    Rep<F> S;
    std::vector<int> dims(n);
    for (int b = 0; b < n; ++b) dims[b] = B.dims[ctx.pair(c, b)];
    S.init(C, dims);
    for (int b = 0; b < n; ++b)
        for (int b2 = 0; b2 < n; ++b2)
            for (int g = 0; g < C.dim(b, b2); ++g) {
                // coords of (id_c)^op (x) g in E
                int dA = C.dim(c, c), dB = C.dim(b, b2);
                std::vector<F> v((size_t)dA * dB, F::zero());
                for (int ia = 0; ia < dA; ++ia) v[ia * dB + g] = C.id_coords[c][ia];
                S.act[b][b2][g] = B.act_vec(ctx.pair(c, b), ctx.pair(c, b2), v);
            }
    return S;
}

/* Right slice B(-, c): a rep of C^op, a -> B at pair (a, c). */
template <class F>
Rep<F> right_slice(const BimodContext<F>& ctx, const Rep<F>& B, int c) {
    const auto& C = *ctx.C;
    int n = ctx.n();
    Rep<F> S;
    std::vector<int> dims(n);
    for (int a = 0; a < n; ++a) dims[a] = B.dims[ctx.pair(a, c)];
    S.init(ctx.op, dims);
    for (int a = 0; a < n; ++a)
        for (int a2 = 0; a2 < n; ++a2)
            for (int f = 0; f < ctx.op.dim(a, a2); ++f) {
                // f indexes C(a2, a); coords of f^op (x) id_c in E
                int dA = C.dim(a2, a), dB = C.dim(c, c);
                std::vector<F> v((size_t)dA * dB, F::zero());
                for (int ib = 0; ib < dB; ++ib) v[f * dB + ib] = C.id_coords[c][ib];
                S.act[a][a2][f] = B.act_vec(ctx.pair(a, c), ctx.pair(a2, c), v);
            }
    return S;
}

/* True iff every left slice B(c, -) is a projective rep of C. Reports the
   first failing object if asked. */
template <class F>
bool all_left_slices_projective(const BimodContext<F>& ctx, const Rep<F>& B, int* witness = nullptr) {
    for (int c = 0; c < ctx.n(); ++c) {
        if (!is_projective(left_slice(ctx, B, c))) {
            if (witness) *witness = c;
            return false;
        }
    }
    return true;
}

template <class F>
bool all_right_slices_projective(const BimodContext<F>& ctx, const Rep<F>& B, int* witness = nullptr) {
    for (int c = 0; c < ctx.n(); ++c) {
        if (!is_projective(right_slice(ctx, B, c))) {
            if (witness) *witness = c;
            return false;
        }
    }
    return true;
}

/* Exact pd of a bimodule over C^e up to cap (nullopt = exceeds cap). */
template <class F>
std::optional<int> bimodule_pd(const Rep<F>& B, int cap) {
    return projective_dimension(B, cap);
}

}  // namespace homcat
