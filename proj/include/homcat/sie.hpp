#pragma once

#include <numeric>

#include "homcat/modcat.hpp"

namespace homcat {

struct LiftFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Everything the strongly-idempotent-ideal machinery needs about one pair
   (C, I). Owns the derived categories, so keep it alive while reps built
   over them are in use. */
template <class F>
struct SIEContext {
    const PresentedCategory<F>* C = nullptr;
    CatIdeal<F> I;
    Quotient<F> Q;             // C/I with projection data
    PresentedCategory<F> Cop;  // C^op
    PresentedCategory<F> Qop;  // (C/I)^op

    int n() const { return C->n(); }
};

template <class F>
SIEContext<F> make_sie_context(const PresentedCategory<F>& C, CatIdeal<F> I) {
    SIEContext<F> ctx;
    ctx.C = &C;
    ctx.I = std::move(I);
    ctx.Q = quotient_category(C, ctx.I);
    ctx.Cop = opposite(C);
    ctx.Qop = opposite(ctx.Q.cat);
    return ctx;
}

/* pi_* : Mod(C/I) -> Mod(C), identity on underlying spaces. */
template <class F>
Rep<F> pullback(const SIEContext<F>& ctx, const Rep<F>& Fq) {
    const auto& C = *ctx.C;
    Rep<F> M;
    M.init(C, Fq.dims);
    for (int x = 0; x < C.n(); ++x)
        for (int y = 0; y < C.n(); ++y)
            for (int i = 0; i < C.dim(x, y); ++i)
                M.act[x][y][i] = Fq.act_vec(x, y, ctx.Q.project(x, y, C.unit(x, y, i)));
    return M;
}

/* pi_2^* : Mod((C/I)^op) -> Mod(C^op). */
template <class F>
Rep<F> pullback_op(const SIEContext<F>& ctx, const Rep<F>& Gq) {
    const auto& Cop = ctx.Cop;
    Rep<F> M;
    M.init(Cop, Gq.dims);
    for (int x = 0; x < Cop.n(); ++x)
        for (int y = 0; y < Cop.n(); ++y)
            for (int i = 0; i < Cop.dim(x, y); ++i)
                M.act[x][y][i] = Gq.act_vec(x, y, ctx.Q.project(y, x, ctx.C->unit(y, x, i)));
    return M;
}

/* I(c,-) as a subfunctor of C(c,-). */
template <class F>
Rep<F> ideal_left_slice(const SIEContext<F>& ctx, int c) {
    return ideal_slice_rep(*ctx.C, ctx.I, c);
}

/* (C/I (x)_C M)(c) = (C(-,c)/I(-,c)) (x)_C M, assembled into a C/I-module. */
template <class F>
Rep<F> quotient_tensor(const SIEContext<F>& ctx, const Rep<F>& M) {
    const auto& C = *ctx.C;
    const auto& Qc = ctx.Q.cat;
    int n = C.n();

    // right-slice quotient modules R_c = (C/I)(-,c) over C^op, in Q-coords
    std::vector<Rep<F>> R(n);
    std::vector<TensorSpace<F>> T(n);
    for (int c = 0; c < n; ++c) {
        R[c] = pullback_op(ctx, yoneda_projective(ctx.Qop, c).rep);
        T[c] = tensor_over_cat(C, R[c], M);
    }

    Rep<F> out;
    std::vector<int> dims(n);
    for (int c = 0; c < n; ++c) dims[c] = T[c].dim();
    out.init(Qc, dims);

    for (int c = 0; c < n; ++c)
        for (int c2 = 0; c2 < n; ++c2)
            for (int u = 0; u < Qc.dim(c, c2); ++u) {
                // ambient map +_x (C/I)(x,c) (x) M(x) -> same with c2: postcompose with u
                Matrix<F> amb(T[c2].ambient, T[c].ambient);
                for (int x = 0; x < n; ++x) {
                    // column block at object x
                    for (int a = 0; a < Qc.dim(x, c); ++a) {
                        auto ua = Qc.compose(x, c, c2, Qc.unit(x, c, a), Qc.unit(c, c2, u));
                        for (int b = 0; b < M.dims[x]; ++b) {
                            int col = T[c].off[x] + a * M.dims[x] + b;
                            for (int a2 = 0; a2 < Qc.dim(x, c2); ++a2)
                                amb(T[c2].off[x] + a2 * M.dims[x] + b, col) = ua[a2];
                        }
                    }
                }
                // descend to the coequalizers
                Matrix<F> mat(dims[c2], dims[c]);
                for (int j = 0; j < dims[c]; ++j) {
                    std::vector<F> h(dims[c], F::zero());
                    h[j] = F::one();
                    mat.set_col(j, T[c2].q.project(amb.apply(T[c].q.lift(h))));
                }
                out.act[c][c2][u] = std::move(mat);
            }
    return out;
}

// -- chain complexes from resolutions --

/* Cochain data of Hom(P_., N): dims per degree and D[j] : deg j-1 -> deg j. */
template <class F>
struct HomComplexData {
    std::vector<int> dims;
    std::vector<Matrix<F>> D;  // D[0] unused

    Subquotient<F> at(int i) const {
        if (i >= (int)dims.size()) return make_subquotient<F>(0, nullptr, nullptr);
        const Matrix<F>* in = (i >= 1) ? &D[i] : nullptr;
        const Matrix<F>* out = (i + 1 < (int)dims.size()) ? &D[i + 1] : nullptr;
        return make_subquotient(dims[i], in, out);
    }
};

template <class F>
HomComplexData<F> hom_complex(const Resolution<F>& R, const Rep<F>& N) {
    HomComplexData<F> c;
    int top = (int)R.P.size() - 1;
    c.dims.resize(top + 1);
    for (int j = 0; j <= top; ++j) {
        int d = 0;
        for (int k = 0; k < R.P[j].count(); ++k) d += N.dims[R.P[j].summands[k]];
        c.dims[j] = d;
    }
    c.D.resize(top + 1);
    for (int j = 1; j <= top; ++j) c.D[j] = hom_differential(R, j, N);
    return c;
}

/* Chain data of Gop (x) P_.: dims per degree and E[j] : deg j -> deg j-1. */
template <class F>
struct TorComplexData {
    std::vector<int> dims;
    std::vector<Matrix<F>> E;  // E[0] unused

    Subquotient<F> at(int i) const {
        if (i >= (int)dims.size()) return make_subquotient<F>(0, nullptr, nullptr);
        const Matrix<F>* in = (i + 1 < (int)dims.size()) ? &E[i + 1] : nullptr;
        const Matrix<F>* out = (i >= 1) ? &E[i] : nullptr;
        return make_subquotient(dims[i], in, out);
    }
};

template <class F>
TorComplexData<F> tor_complex(const Resolution<F>& R, const Rep<F>& Gop) {
    TorComplexData<F> c;
    int top = (int)R.P.size() - 1;
    c.dims.resize(top + 1);
    for (int j = 0; j <= top; ++j) {
        int d = 0;
        for (int k = 0; k < R.P[j].count(); ++k) d += Gop.dims[R.P[j].summands[k]];
        c.dims[j] = d;
    }
    c.E.resize(top + 1);
    for (int j = 1; j <= top; ++j) {
        const ProjectiveRep<F>& Pj = R.P[j];
        const ProjectiveRep<F>& Pp = R.P[j - 1];
        std::vector<int> roff(Pp.count() + 1, 0), coff(Pj.count() + 1, 0);
        for (int k = 0; k < Pp.count(); ++k) roff[k + 1] = roff[k] + Gop.dims[Pp.summands[k]];
        for (int l = 0; l < Pj.count(); ++l) coff[l + 1] = coff[l] + Gop.dims[Pj.summands[l]];
        Matrix<F> E(roff.back(), coff.back());
        for (int l = 0; l < Pj.count(); ++l) {
            int cl = Pj.summands[l];
            auto img = R.d[j - 1][cl].apply(embed_unit(Pj, l));
            for (int k = 0; k < Pp.count(); ++k) {
                auto u = Pp.block(k, cl, img);
                Matrix<F> blk = Gop.act_vec(cl, Pp.summands[k], u);
                for (int r = 0; r < blk.rows(); ++r)
                    for (int cc = 0; cc < blk.cols(); ++cc) E(roff[k] + r, coff[l] + cc) = blk(r, cc);
            }
        }
        c.E[j] = std::move(E);
    }
    return c;
}

// -- chain-map lifting (comparison theorem, made effective) --

/* An exact complex ... -> T1 -> T0 -> (target module) -> 0. */
template <class F>
struct ExactTarget {
    std::vector<Rep<F>> mods;
    std::vector<RepMap<F>> d;  // d[j-1] : T_j -> T_{j-1}
    RepMap<F> aug;             // T_0 -> target module
};

/* Lifts f (a map from the module resolved by R to the module resolved by T)
   to a chain map R.P[j] -> T.mods[j] for j = 0..upto. Degrees past either
   end are zero maps. */
template <class F>
std::vector<RepMap<F>> lift_chain(const Resolution<F>& R, const ExactTarget<F>& T, const RepMap<F>& f, int upto) {
    const auto& C = *R.P[0].rep.C;
    int n = C.n();
    std::vector<RepMap<F>> phi(upto + 1);
    int rtop = (int)R.P.size() - 1;
    int ttop = (int)T.mods.size() - 1;

    for (int j = 0; j <= upto; ++j) {
        phi[j].resize(n);
        if (j > rtop) {
            for (int x = 0; x < n; ++x)
                phi[j][x] = Matrix<F>(j <= ttop ? T.mods[j].dims[x] : 0, 0);
            continue;
        }
        const ProjectiveRep<F>& P = R.P[j];
        std::vector<std::vector<F>> xi(P.count());
        for (int k = 0; k < P.count(); ++k) {
            int c = P.summands[k];
            // the element phi_{j-1}(d_j unit_k) that xi_k must hit
            std::vector<F> t;
            if (j == 0)
                t = f[c].apply(R.aug[c].apply(embed_unit(P, k)));
            else
                t = phi[j - 1][c].apply(R.d[j - 1][c].apply(embed_unit(P, k)));
            if (j > ttop) {
                if (!is_zero_vec(t)) throw LiftFailure("target complex too short for a nonzero lift");
                xi[k] = {};
                continue;
            }
            const Matrix<F>& solver = (j == 0) ? T.aug[c] : T.d[j - 1][c];
            auto sol = solve_vec(solver, t);
            if (!sol) throw LiftFailure("comparison lift has no solution (target not exact?)");
            xi[k] = *sol;
        }
        if (j > ttop) {
            for (int x = 0; x < n; ++x) phi[j][x] = Matrix<F>(0, P.rep.dims[x]);
            continue;
        }
        // phi_j is the map of projectives determined by the xi
        phi[j] = projective_map(P, T.mods[j], xi);
    }
    return phi;
}

/* Turns a resolution over the quotient category into an exact target of
   C-modules (pi_* keeps all underlying matrices). */
template <class F>
ExactTarget<F> pulled_back_target(const SIEContext<F>& ctx, const Resolution<F>& RQ) {
    ExactTarget<F> T;
    for (const auto& P : RQ.P) T.mods.push_back(pullback(ctx, P.rep));
    T.d = RQ.d;
    T.aug = RQ.aug;
    return T;
}

/* Cochain transport along a chain map phi_i: P_i -> (pullback of) QP_i:
   Hom(QP_i, N) -> Hom(P_i, pulled-back N) in Yoneda coordinates. N lives
   over QP_i's category; object indices are shared. */
template <class F>
Matrix<F> hom_transport(const ProjectiveRep<F>& Pi, const ProjectiveRep<F>& QPi, const RepMap<F>& phi_i,
                        const Rep<F>& N) {
    std::vector<int> roff(Pi.count() + 1, 0), coff(QPi.count() + 1, 0);
    for (int k = 0; k < Pi.count(); ++k) roff[k + 1] = roff[k] + N.dims[Pi.summands[k]];
    for (int l = 0; l < QPi.count(); ++l) coff[l + 1] = coff[l] + N.dims[QPi.summands[l]];
    Matrix<F> T(roff.back(), coff.back());
    for (int k = 0; k < Pi.count(); ++k) {
        int c = Pi.summands[k];
        auto img = phi_i[c].apply(embed_unit(Pi, k));  // in QP_i(c)
        for (int l = 0; l < QPi.count(); ++l) {
            auto u = QPi.block(l, c, img);
            Matrix<F> blk = N.act_vec(QPi.summands[l], c, u);
            for (int r = 0; r < blk.rows(); ++r)
                for (int cc = 0; cc < blk.cols(); ++cc) T(roff[k] + r, coff[l] + cc) = blk(r, cc);
        }
    }
    return T;
}

/* Chain transport on the Tor side: (Gop (x) P_i) -> (Gop (x) QP_i). Gop is a
   right module over QP_i's category. */
template <class F>
Matrix<F> tor_transport(const ProjectiveRep<F>& Pi, const ProjectiveRep<F>& QPi, const RepMap<F>& phi_i,
                        const Rep<F>& Gop) {
    std::vector<int> roff(QPi.count() + 1, 0), coff(Pi.count() + 1, 0);
    for (int l = 0; l < QPi.count(); ++l) roff[l + 1] = roff[l] + Gop.dims[QPi.summands[l]];
    for (int k = 0; k < Pi.count(); ++k) coff[k + 1] = coff[k] + Gop.dims[Pi.summands[k]];
    Matrix<F> T(roff.back(), coff.back());
    for (int k = 0; k < Pi.count(); ++k) {
        int c = Pi.summands[k];
        auto img = phi_i[c].apply(embed_unit(Pi, k));
        for (int l = 0; l < QPi.count(); ++l) {
            auto u = QPi.block(l, c, img);
            Matrix<F> blk = Gop.act_vec(c, QPi.summands[l], u);  // Gop(c) -> Gop(c_l)
            for (int r = 0; r < blk.rows(); ++r)
                for (int cc = 0; cc < blk.cols(); ++cc) T(roff[l] + r, coff[k] + cc) = blk(r, cc);
        }
    }
    return T;
}

/* Induced map on (co)homology classes: H_src -> H_tgt through an ambient
   chain-level matrix (columns of the result are classes in tgt coords). */
template <class F>
Matrix<F> induced_map(const Subquotient<F>& src, const Subquotient<F>& tgt, const Matrix<F>& chain_level) {
    Matrix<F> out(tgt.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
        std::vector<F> h(src.dim(), F::zero());
        h[j] = F::one();
        auto v = chain_level.apply(src.rep(h));
        out.set_col(j, tgt.cls(v));
    }
    return out;
}

template <class F>
bool matrix_is_iso(const Matrix<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

// -- phi and psi comparison maps --

template <class F>
struct PhiResult {
    int dim_quot = 0;  // dim Ext^i over C/I
    int dim_full = 0;  // dim Ext^i over C
    Matrix<F> map;     // Ext_{C/I} -> Ext_C
    bool iso = false;
};

/* Cacheable per-F part of the phi/psi computations. */
template <class F>
struct ComparisonKit {
    Rep<F> Fc;                     // pi_* F
    Resolution<F> RQ;              // resolution of F over C/I
    Resolution<F> RC;              // resolution of pi_* F over C
    std::vector<RepMap<F>> phis;   // chain lift P_. -> pi_* Q_.
};

template <class F>
ComparisonKit<F> make_comparison_kit(const SIEContext<F>& ctx, const Rep<F>& Fq, int upto) {
    ComparisonKit<F> kit;
    kit.Fc = pullback(ctx, Fq);
    kit.RQ = resolve(Fq, upto + 1);
    kit.RC = resolve(kit.Fc, upto + 1);
    ExactTarget<F> T = pulled_back_target(ctx, kit.RQ);
    RepMap<F> id(ctx.n());
    for (int x = 0; x < ctx.n(); ++x) id[x] = Matrix<F>::identity(Fq.dims[x]);
    kit.phis = lift_chain(kit.RC, T, id, upto);
    return kit;
}

template <class F>
PhiResult<F> phi_map(const SIEContext<F>& ctx, const ComparisonKit<F>& kit, const Rep<F>& Fq2, int i) {
    Rep<F> Fc2 = pullback(ctx, Fq2);
    auto hq = hom_complex(kit.RQ, Fq2);
    auto hc = hom_complex(kit.RC, Fc2);
    auto HQ = hq.at(i);
    auto HC = hc.at(i);
    PhiResult<F> r;
    r.dim_quot = HQ.dim();
    r.dim_full = HC.dim();
    int rtop = (int)kit.RC.P.size() - 1, qtop = (int)kit.RQ.P.size() - 1;
    Matrix<F> chain(i <= rtop ? hc.dims[i] : 0, i <= qtop ? hq.dims[i] : 0);
    if (i <= rtop && i <= qtop) chain = hom_transport(kit.RC.P[i], kit.RQ.P[i], kit.phis[i], Fq2);
    r.map = induced_map(HQ, HC, chain);
    r.iso = matrix_is_iso(r.map);
    return r;
}

template <class F>
PhiResult<F> phi_map(const SIEContext<F>& ctx, const Rep<F>& Fq, const Rep<F>& Fq2, int i) {
    return phi_map(ctx, make_comparison_kit(ctx, Fq, i), Fq2, i);
}

template <class F>
struct PsiResult {
    int dim_full = 0;  // dim Tor_i over C
    int dim_quot = 0;  // dim Tor_i over C/I
    Matrix<F> map;     // Tor^C -> Tor^{C/I}
    bool iso = false;
};

template <class F>
PsiResult<F> psi_map(const SIEContext<F>& ctx, const Rep<F>& Gq, const ComparisonKit<F>& kit, int i) {
    Rep<F> Gc = pullback_op(ctx, Gq);
    auto tc = tor_complex(kit.RC, Gc);
    auto tq = tor_complex(kit.RQ, Gq);
    auto HC = tc.at(i);
    auto HQ = tq.at(i);
    PsiResult<F> r;
    r.dim_full = HC.dim();
    r.dim_quot = HQ.dim();
    int rtop = (int)kit.RC.P.size() - 1, qtop = (int)kit.RQ.P.size() - 1;
    Matrix<F> chain(i <= qtop ? tq.dims[i] : 0, i <= rtop ? tc.dims[i] : 0);
    if (i <= rtop && i <= qtop) chain = tor_transport(kit.RC.P[i], kit.RQ.P[i], kit.phis[i], Gq);
    r.map = induced_map(HC, HQ, chain);
    r.iso = matrix_is_iso(r.map);
    return r;
}

template <class F>
PsiResult<F> psi_map(const SIEContext<F>& ctx, const Rep<F>& Gq, const Rep<F>& Fq, int i) {
    return psi_map(ctx, Gq, make_comparison_kit(ctx, Fq, i), i);
}

// -- the big EXT/TOR functors on the quotient --

/* Dimensions of EXT^i_C(C/I, M) at every object: Ext^i_C(pi_*(C/I)(c,-), M). */
template <class F>
std::vector<int> big_ext_dims(const SIEContext<F>& ctx, const Rep<F>& M, int i) {
    std::vector<int> out(ctx.n());
    for (int c = 0; c < ctx.n(); ++c) {
        Rep<F> Yc = pullback(ctx, yoneda_projective(ctx.Q.cat, c).rep);
        out[c] = ext_dim(Yc, M, i);
    }
    return out;
}

/* Dimensions of TOR_i^C(C/I, M) at every object. */
template <class F>
std::vector<int> big_tor_dims(const SIEContext<F>& ctx, const Rep<F>& M, int i) {
    std::vector<int> out(ctx.n());
    for (int c = 0; c < ctx.n(); ++c) {
        Rep<F> Rc = pullback_op(ctx, yoneda_projective(ctx.Qop, c).rep);
        out[c] = tor_dim(*ctx.C, Rc, M, i);
    }
    return out;
}

/* TOR_i^C(C/I, M) as a module over C/I (functoriality through the first
   slice argument; no lifting needed on the Tor side). */
template <class F>
Rep<F> big_tor(const SIEContext<F>& ctx, const Rep<F>& M, int i) {
    const auto& Qc = ctx.Q.cat;
    int n = ctx.n();
    Resolution<F> R = resolve(M, i + 1);

    std::vector<Rep<F>> Rc(n);
    std::vector<TorComplexData<F>> data(n);
    std::vector<Subquotient<F>> H(n);
    for (int c = 0; c < n; ++c) {
        Rc[c] = pullback_op(ctx, yoneda_projective(ctx.Qop, c).rep);
        data[c] = tor_complex(R, Rc[c]);
        H[c] = data[c].at(i);
    }

    Rep<F> out;
    std::vector<int> dims(n);
    for (int c = 0; c < n; ++c) dims[c] = H[c].dim();
    out.init(Qc, dims);

    int top = (int)R.P.size() - 1;
    for (int c = 0; c < n; ++c)
        for (int c2 = 0; c2 < n; ++c2)
            for (int u = 0; u < Qc.dim(c, c2); ++u) {
                if (dims[c] == 0 || i > top) {
                    out.act[c][c2][u] = Matrix<F>(dims[c2], dims[c]);
                    continue;
                }
                // blockwise map +_k (C/I)(c_k, c) -> +_k (C/I)(c_k, c2)
                const ProjectiveRep<F>& Pi = R.P[i];
                std::vector<int> roff(Pi.count() + 1, 0), coff(Pi.count() + 1, 0);
                for (int k = 0; k < Pi.count(); ++k) {
                    roff[k + 1] = roff[k] + Qc.dim(Pi.summands[k], c2);
                    coff[k + 1] = coff[k] + Qc.dim(Pi.summands[k], c);
                }
                Matrix<F> chain(roff.back(), coff.back());
                for (int k = 0; k < Pi.count(); ++k) {
                    int x = Pi.summands[k];
                    for (int a = 0; a < Qc.dim(x, c); ++a) {
                        auto ua = Qc.compose(x, c, c2, Qc.unit(x, c, a), Qc.unit(c, c2, u));
                        for (int r = 0; r < (int)ua.size(); ++r) chain(roff[k] + r, coff[k] + a) = ua[r];
                    }
                }
                out.act[c][c2][u] = induced_map(H[c], H[c2], chain);
            }
    return out;
}

/* EXT^i_C(C/I, M) as a module over C/I (functoriality via chain lifts). */
template <class F>
Rep<F> big_ext(const SIEContext<F>& ctx, const Rep<F>& M, int i) {
    const auto& Qc = ctx.Q.cat;
    int n = ctx.n();

    std::vector<Rep<F>> Y(n);
    std::vector<Resolution<F>> R(n);
    std::vector<HomComplexData<F>> data(n);
    std::vector<Subquotient<F>> H(n);
    for (int c = 0; c < n; ++c) {
        Y[c] = pullback(ctx, yoneda_projective(ctx.Q.cat, c).rep);
        R[c] = resolve(Y[c], i + 1);
        data[c] = hom_complex(R[c], M);
        H[c] = data[c].at(i);
    }

    Rep<F> out;
    std::vector<int> dims(n);
    for (int c = 0; c < n; ++c) dims[c] = H[c].dim();
    out.init(Qc, dims);

    for (int c = 0; c < n; ++c)
        for (int c2 = 0; c2 < n; ++c2)
            for (int u = 0; u < Qc.dim(c, c2); ++u) {
                if (dims[c] == 0 && dims[c2] == 0) {
                    out.act[c][c2][u] = Matrix<F>(0, 0);
                    continue;
                }
                // h_u : Y_{c2} -> Y_c, precomposition with u
                RepMap<F> h(n);
                for (int y = 0; y < n; ++y) {
                    h[y] = Matrix<F>(Qc.dim(c, y), Qc.dim(c2, y));
                    for (int w = 0; w < Qc.dim(c2, y); ++w)
                        h[y].set_col(w, Qc.compose(c, c2, y, Qc.unit(c, c2, u), Qc.unit(c2, y, w)));
                }
                // lift h over the resolutions: R[c2] -> R[c]
                ExactTarget<F> tgt;
                for (const auto& P : R[c].P) tgt.mods.push_back(P.rep);
                tgt.d = R[c].d;
                tgt.aug = R[c].aug;
                auto phis = lift_chain(R[c2], tgt, h, i);
                int stop = (int)R[c2].P.size() - 1, ttop = (int)R[c].P.size() - 1;
                Matrix<F> chain(i <= stop ? data[c2].dims[i] : 0, i <= ttop ? data[c].dims[i] : 0);
                if (i <= stop && i <= ttop) chain = hom_transport(R[c2].P[i], R[c].P[i], phis[i], M);
                out.act[c][c2][u] = induced_map(H[c], H[c2], chain);
            }
    return out;
}

// -- the multi-criterion checker --

struct CriterionResult {
    std::string name;     // idempotency | shortcut | b | c | d | e | f
    std::string verdict;  // pass | fail | not-evaluated
    std::string witness;  // empty when passing
    int module_idx = -1;  // which test module (or -1)
    int object = -1;      // object where the failure shows
    int degree = -1;
    int dim = 0;          // offending nonzero dimension
};

struct SIECertificate {
    bool idempotent = false;
    std::string idempotency_witness;
    bool shortcut = false;
    int degree = 0;
    bool pass = false;
    std::vector<CriterionResult> criteria;

    const CriterionResult* find(const std::string& name) const {
        for (const auto& c : criteria)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/* Labels for the default test modules: representables first, then simples. */
template <class F>
std::vector<Rep<F>> default_test_modules(const PresentedCategory<F>& Qc) {
    std::vector<Rep<F>> mods;
    for (int c = 0; c < Qc.n(); ++c) mods.push_back(yoneda_projective(Qc, c).rep);
    for (auto& s : simples(Qc)) mods.push_back(std::move(s));
    return mods;
}

template <class F>
SIECertificate check_strongly_idempotent(const SIEContext<F>& ctx, int n,
                                         const std::vector<Rep<F>>* extra_modules = nullptr) {
    const auto& C = *ctx.C;
    SIECertificate cert;
    cert.degree = n;

    // (0) idempotency with witness
    cert.idempotent = ideal_is_idempotent(C, ctx.I);
    {
        CriterionResult r{"idempotency", cert.idempotent ? "pass" : "fail", "", -1, -1, -1, 0};
        if (!cert.idempotent) {
            // find a generator of I surviving modulo I^2
            CatIdeal<F> sq;
            sq.span.resize(C.n());
            for (int x = 0; x < C.n(); ++x)
                for (int y = 0; y < C.n(); ++y) sq.span[x].push_back(IncSpan<F>(C.dim(x, y)));
            for (int x = 0; x < C.n(); ++x)
                for (int y = 0; y < C.n(); ++y) {
                    auto a = ctx.I.span[x][y].as_columns();
                    for (int z = 0; z < C.n(); ++z) {
                        auto b = ctx.I.span[y][z].as_columns();
                        for (int i = 0; i < a.cols(); ++i)
                            for (int j = 0; j < b.cols(); ++j)
                                sq.span[x][z].add(C.compose(x, y, z, a.col(i), b.col(j)));
                    }
                }
            for (int x = 0; x < C.n() && r.witness.empty(); ++x)
                for (int y = 0; y < C.n() && r.witness.empty(); ++y) {
                    auto cols = ctx.I.span[x][y].as_columns();
                    for (int j = 0; j < cols.cols(); ++j) {
                        auto v = cols.col(j);
                        if (sq.span[x][y].contains(v)) continue;
                        for (int k = 0; k < (int)v.size(); ++k)
                            if (!v[k].is_zero()) {
                                r.witness = C.basis[x][y][k].label;
                                break;
                            }
                        r.object = x;
                        break;
                    }
                }
            cert.idempotency_witness = r.witness;
        }
        cert.criteria.push_back(r);
    }

    // shortcut: idempotent and every I(c,-) projective
    {
        CriterionResult r{"shortcut", "fail", "", -1, -1, -1, 0};
        if (cert.idempotent) {
            bool all = true;
            for (int c = 0; c < C.n(); ++c)
                if (!is_projective(ideal_left_slice(ctx, c))) {
                    all = false;
                    r.witness = "I(" + C.objects[c] + ",-) is not projective";
                    r.object = c;
                    break;
                }
            if (all) r.verdict = "pass";
        } else {
            r.witness = "ideal is not idempotent";
        }
        cert.shortcut = (r.verdict == "pass");
        cert.criteria.push_back(r);
    }

    const auto& Qc = ctx.Q.cat;
    std::vector<Rep<F>> test_modules = default_test_modules(Qc);
    int reps_count = Qc.n();  // the first reps_count test modules are representables
    if (extra_modules)
        for (const auto& m : *extra_modules) test_modules.push_back(m);

    // shared resolutions of the pulled-back quotient representables Y_c
    std::vector<Resolution<F>> RY(C.n());
    std::vector<Rep<F>> Y(C.n());
    for (int c = 0; c < C.n(); ++c) {
        Y[c] = pullback(ctx, yoneda_projective(Qc, c).rep);
        RY[c] = resolve(Y[c], n + 1);
    }
    std::vector<Rep<F>> Rop(C.n());
    for (int c = 0; c < C.n(); ++c) Rop[c] = pullback_op(ctx, yoneda_projective(ctx.Qop, c).rep);

    auto tor_vanishing = [&](const std::vector<int>& module_set, const char* name) {
        CriterionResult r{name, "pass", "", -1, -1, -1, 0};
        for (int mi : module_set) {
            Rep<F> M = pullback(ctx, test_modules[mi]);
            if (M.is_zero()) continue;
            Resolution<F> R = resolve(M, n + 1);
            for (int c = 0; c < C.n() && r.verdict == "pass"; ++c) {
                auto data = tor_complex(R, Rop[c]);
                for (int i = 1; i <= n; ++i) {
                    int d = data.at(i).dim();
                    if (d != 0) {
                        r = {name, "fail", "TOR_" + std::to_string(i) + " at object " + C.objects[c], mi, c, i, d};
                        break;
                    }
                }
            }
            if (r.verdict == "fail") break;
        }
        return r;
    };

    // (f): TOR vanishing on pulled-back projectives (representables)
    {
        std::vector<int> idx(reps_count);
        std::iota(idx.begin(), idx.end(), 0);
        cert.criteria.push_back(tor_vanishing(idx, "f"));
    }
    // (e): TOR vanishing on all test modules
    {
        std::vector<int> idx(test_modules.size());
        std::iota(idx.begin(), idx.end(), 0);
        cert.criteria.push_back(tor_vanishing(idx, "e"));
    }
    // (b): EXT vanishing on all test modules
    {
        CriterionResult r{"b", "pass", "", -1, -1, -1, 0};
        for (int mi = 0; mi < (int)test_modules.size() && r.verdict == "pass"; ++mi) {
            Rep<F> M = pullback(ctx, test_modules[mi]);
            if (M.is_zero()) continue;
            for (int c = 0; c < C.n() && r.verdict == "pass"; ++c) {
                auto data = hom_complex(RY[c], M);
                for (int i = 1; i <= n; ++i) {
                    int d = data.at(i).dim();
                    if (d != 0) {
                        r = {"b", "fail", "EXT^" + std::to_string(i) + " at object " + C.objects[c], mi, c, i, d};
                        break;
                    }
                }
            }
        }
        cert.criteria.push_back(r);
    }
    // (d): psi iso on test pairs
    {
        CriterionResult r{"d", "pass", "", -1, -1, -1, 0};
        std::vector<Rep<F>> gset = default_test_modules(ctx.Qop);
        for (int mi = 0; mi < (int)test_modules.size() && r.verdict == "pass"; ++mi) {
            if (test_modules[mi].is_zero()) continue;
            ComparisonKit<F> kit = make_comparison_kit(ctx, test_modules[mi], n);
            for (const auto& G : gset) {
                if (G.is_zero()) continue;
                for (int i = 0; i <= n; ++i) {
                    auto p = psi_map(ctx, G, kit, i);
                    if (!p.iso) {
                        r = {"d",
                             "fail",
                             "psi_" + std::to_string(i) + ": " + std::to_string(p.dim_full) + " vs " +
                                 std::to_string(p.dim_quot),
                             mi,
                             -1,
                             i,
                             p.dim_full};
                        break;
                    }
                }
                if (r.verdict == "fail") break;
            }
        }
        cert.criteria.push_back(r);
    }
    // (c): injective-based criterion, not implemented by design
    cert.criteria.push_back({"c", "not-evaluated", "", -1, -1, -1, 0});

    bool bdef = true;
    for (const char* name : {"b", "d", "e", "f"})
        if (cert.find(name)->verdict != "pass") bdef = false;
    cert.pass = cert.idempotent && bdef;
    return cert;
}

}  // namespace homcat
