#pragma once

#include <numeric>
#include <optional>

#include "homcat/pathcat.hpp"

namespace homcat {

/* A K-linear functor C -> Vect with chosen bases: dims per object and one
   action matrix per hom-basis element (dims[y] x dims[x] for m: x -> y). */
template <class F>
struct Rep {
    const PresentedCategory<F>* C = nullptr;
    std::vector<int> dims;
    std::vector<std::vector<std::vector<Matrix<F>>>> act;  // [x][y][i]

    int n() const { return (int)dims.size(); }
    int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
    bool is_zero() const { return total_dim() == 0; }

    void init(const PresentedCategory<F>& cat, std::vector<int> d) {
        C = &cat;
        dims = std::move(d);
        act.assign(n(), {});
        for (int x = 0; x < n(); ++x) {
            act[x].assign(n(), {});
            for (int y = 0; y < n(); ++y) act[x][y].assign(cat.dim(x, y), Matrix<F>(dims[y], dims[x]));
        }
    }

    Matrix<F> act_vec(int x, int y, const std::vector<F>& m) const {
        Matrix<F> out(dims[y], dims[x]);
        for (int i = 0; i < (int)m.size(); ++i)
            if (!m[i].is_zero()) out = out + scaled_mat(act[x][y][i], m[i]);
        return out;
    }

    void validate() const {
        for (int x = 0; x < n(); ++x) {
            if (act_vec(x, x, C->id_coords[x]) != Matrix<F>::identity(dims[x]))
                throw std::logic_error("rep: identity does not act as identity at " + C->objects[x]);
        }
        for (int x = 0; x < n(); ++x)
            for (int y = 0; y < n(); ++y)
                for (int z = 0; z < n(); ++z)
                    for (int f = 0; f < C->dim(x, y); ++f)
                        for (int g = 0; g < C->dim(y, z); ++g) {
                            auto lhs = act_vec(x, z, C->compose_basis(x, y, z, f, g));
                            if (lhs != act[y][z][g] * act[x][y][f])
                                throw std::logic_error("rep: action is not functorial");
                        }
    }

  private:
    static Matrix<F> scaled_mat(Matrix<F> m, const F& c) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) *= c;
        return m;
    }
};

/* Natural transformation between reps, one matrix per object. */
template <class F>
using RepMap = std::vector<Matrix<F>>;

template <class F>
bool is_natural(const Rep<F>& M, const Rep<F>& N, const RepMap<F>& phi) {
    const auto& C = *M.C;
    for (const Gen<F>& g : C.gens) {
        auto lhs = N.act_vec(g.src, g.tgt, g.coords) * phi[g.src];
        auto rhs = phi[g.tgt] * M.act_vec(g.src, g.tgt, g.coords);
        if (lhs != rhs) return false;
    }
    return true;
}

template <class F>
Rep<F> zero_rep(const PresentedCategory<F>& C) {
    Rep<F> r;
    r.init(C, std::vector<int>(C.n(), 0));
    return r;
}

/* Builds a rep of a quiver-presented category from per-arrow matrices,
   checking that the relations hold. */
template <class F>
Rep<F> rep_from_decl(const PresentedCategory<F>& C, const QuiverSpec& q, const ModuleDecl& decl) {
    validate_module_shapes(decl, q);
    Rep<F> M;
    M.init(C, decl.dims);

    std::vector<Matrix<F>> arrow_mat(q.arrows.size());
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        Matrix<F> m(decl.dims[a.tgt], decl.dims[a.src]);
        auto it = decl.maps.find(a.name);
        if (it != decl.maps.end() && it->second.rows() == m.rows() && it->second.cols() == m.cols())
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) m(i, j) = F::from_rational(it->second(i, j));
        arrow_mat[ai] = std::move(m);
    }

    auto word_mat = [&](int x, const std::vector<int>& word) {
        Matrix<F> m = Matrix<F>::identity(decl.dims[x]);
        for (int ai : word) m = arrow_mat[ai] * m;
        return m;
    };

    for (const Relation& r : q.relations) {
        Matrix<F> s(decl.dims[r.tgt], decl.dims[r.src]);
        for (const RelTerm& t : r.terms) {
            Matrix<F> w = word_mat(r.src, t.path);
            F c = F::from_rational(t.coeff);
            for (int i = 0; i < s.rows(); ++i)
                for (int j = 0; j < s.cols(); ++j) s(i, j) += c * w(i, j);
        }
        if (!s.is_zero())
            throw ValidationError(SourcePos{}, "module " + decl.name + " violates a relation");
    }

    for (int x = 0; x < C.n(); ++x)
        for (int y = 0; y < C.n(); ++y)
            for (int i = 0; i < C.dim(x, y); ++i) M.act[x][y][i] = word_mat(x, C.basis[x][y][i].path);
    return M;
}

// -- hom spaces --

/* Basis of Nat(M, N) by solving naturality over the category generators. */
template <class F>
std::vector<RepMap<F>> hom_space(const Rep<F>& M, const Rep<F>& N) {
    const auto& C = *M.C;
    int n = C.n();
    std::vector<int> off(n + 1, 0);
    for (int x = 0; x < n; ++x) off[x + 1] = off[x] + N.dims[x] * M.dims[x];
    int unknowns = off[n];

    std::vector<std::vector<F>> rows;
    auto add_block = [&](int genx, int geny, const Matrix<F>& mN, const Matrix<F>& mM) {
        // N(g) phi_x - phi_y M(g) = 0 entrywise
        for (int r = 0; r < N.dims[geny]; ++r)
            for (int c = 0; c < M.dims[genx]; ++c) {
                std::vector<F> row(unknowns, F::zero());
                for (int k = 0; k < N.dims[genx]; ++k)
                    row[off[genx] + k * M.dims[genx] + c] += mN(r, k);
                for (int k = 0; k < M.dims[geny]; ++k)
                    row[off[geny] + r * M.dims[geny] + k] -= mM(k, c);
                rows.push_back(std::move(row));
            }
    };
    for (const Gen<F>& g : C.gens)
        add_block(g.src, g.tgt, N.act_vec(g.src, g.tgt, g.coords), M.act_vec(g.src, g.tgt, g.coords));

    Matrix<F> A((int)rows.size(), unknowns);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) A(i, j) = rows[i][j];
    Matrix<F> K = kernel_basis(A);

    std::vector<RepMap<F>> out;
    for (int j = 0; j < K.cols(); ++j) {
        RepMap<F> phi(n);
        for (int x = 0; x < n; ++x) {
            phi[x] = Matrix<F>(N.dims[x], M.dims[x]);
            for (int r = 0; r < N.dims[x]; ++r)
                for (int c = 0; c < M.dims[x]; ++c) phi[x](r, c) = K(off[x] + r * M.dims[x] + c, j);
        }
        out.push_back(std::move(phi));
    }
    return out;
}

template <class F>
int hom_dim(const Rep<F>& M, const Rep<F>& N) {
    return (int)hom_space(M, N).size();
}

// -- projectives --

/* Finite direct sum of representables C(c_k, -), kept with its block
   structure: rep coords at object y are laid out block by block. */
template <class F>
struct ProjectiveRep {
    Rep<F> rep;
    std::vector<int> summands;               // objects c_k
    std::vector<std::vector<int>> offset;    // [k][y]

    int count() const { return (int)summands.size(); }

    /* Coords of the Yoneda unit of summand k inside rep at object c_k. */
    std::vector<F> unit(int k) const {
        const auto& C = *rep.C;
        int c = summands[k];
        std::vector<F> v(rep.dims[c], F::zero());
        for (int i = 0; i < C.dim(c, c); ++i) v[offset[k][c] + i] = C.id_coords[c][i];
        return v;
    }

    /* Extracts the hom(c_k, y)-block of a vector in rep coords at y. */
    std::vector<F> block(int k, int y, const std::vector<F>& v) const {
        const auto& C = *rep.C;
        int d = C.dim(summands[k], y);
        std::vector<F> out(d);
        for (int i = 0; i < d; ++i) out[i] = v[offset[k][y] + i];
        return out;
    }
};

template <class F>
ProjectiveRep<F> projective_from_summands(const PresentedCategory<F>& C, const std::vector<int>& summands) {
    ProjectiveRep<F> P;
    P.summands = summands;
    int n = C.n();
    std::vector<int> dims(n, 0);
    P.offset.assign(summands.size(), std::vector<int>(n, 0));
    for (int k = 0; k < (int)summands.size(); ++k)
        for (int y = 0; y < n; ++y) {
            P.offset[k][y] = dims[y];
            dims[y] += C.dim(summands[k], y);
        }
    P.rep.init(C, dims);
    // action of basis m: y -> z is post-composition on every block
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
            for (int i = 0; i < C.dim(y, z); ++i) {
                Matrix<F>& A = P.rep.act[y][z][i];
                for (int k = 0; k < (int)summands.size(); ++k) {
                    int c = summands[k];
                    for (int f = 0; f < C.dim(c, y); ++f) {
                        auto col = C.compose_basis(c, y, z, f, i);
                        for (int r = 0; r < (int)col.size(); ++r) A(P.offset[k][z] + r, P.offset[k][y] + f) = col[r];
                    }
                }
            }
    return P;
}

template <class F>
ProjectiveRep<F> yoneda_projective(const PresentedCategory<F>& C, int c) {
    return projective_from_summands(C, std::vector<int>{c});
}

/* The map P -> M sending the unit of summand k to elems[k] in M(c_k). */
template <class F>
RepMap<F> projective_map(const ProjectiveRep<F>& P, const Rep<F>& M, const std::vector<std::vector<F>>& elems) {
    const auto& C = *M.C;
    int n = C.n();
    RepMap<F> pi(n);
    for (int y = 0; y < n; ++y) {
        pi[y] = Matrix<F>(M.dims[y], P.rep.dims[y]);
        for (int k = 0; k < P.count(); ++k) {
            int c = P.summands[k];
            for (int f = 0; f < C.dim(c, y); ++f) {
                auto col = M.act[c][y][f].apply(elems[k]);
                for (int r = 0; r < (int)col.size(); ++r) pi[y](r, P.offset[k][y] + f) = col[r];
            }
        }
    }
    return pi;
}

/* Radical subspaces rad M(x): images of all positive-degree basis actions. */
template <class F>
std::vector<IncSpan<F>> radical_spans(const Rep<F>& M) {
    const auto& C = *M.C;
    int n = C.n();
    std::vector<IncSpan<F>> rad;
    for (int x = 0; x < n; ++x) rad.push_back(IncSpan<F>(M.dims[x]));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int i = 0; i < C.dim(x, y); ++i) {
                if (C.basis[x][y][i].degree == 0) continue;
                const Matrix<F>& A = M.act[x][y][i];
                for (int j = 0; j < A.cols(); ++j) rad[y].add(A.col(j));
            }
    return rad;
}

template <class F>
struct Cover {
    ProjectiveRep<F> P;
    RepMap<F> pi;
};

/* Projective cover step. Basic categories: top-based minimal cover.
   Otherwise: greedy generator cover (an epi, not necessarily minimal). */
template <class F>
Cover<F> cover_step(const Rep<F>& M) {
    const auto& C = *M.C;
    int n = C.n();
    std::vector<int> summands;
    std::vector<std::vector<F>> elems;

    if (C.is_basic()) {
        auto rad = radical_spans(M);
        for (int x = 0; x < n; ++x) {
            // lift a basis of top M(x) = M(x)/rad M(x)
            IncSpan<F> seen(M.dims[x]);
            auto cols = rad[x].as_columns();
            for (int j = 0; j < cols.cols(); ++j) seen.add(cols.col(j));
            for (int j = 0; j < M.dims[x]; ++j) {
                std::vector<F> e(M.dims[x], F::zero());
                e[j] = F::one();
                if (seen.add(e)) {
                    summands.push_back(x);
                    elems.push_back(e);
                }
            }
        }
    } else {
        std::vector<IncSpan<F>> image;
        for (int x = 0; x < n; ++x) image.push_back(IncSpan<F>(M.dims[x]));
        auto absorb = [&](int x, const std::vector<F>& v) {
            for (int y = 0; y < n; ++y)
                for (int i = 0; i < C.dim(x, y); ++i) image[y].add(M.act[x][y][i].apply(v));
        };
        for (int x = 0; x < n; ++x)
            for (int j = 0; j < M.dims[x]; ++j) {
                std::vector<F> e(M.dims[x], F::zero());
                e[j] = F::one();
                if (image[x].contains(e)) continue;
                summands.push_back(x);
                elems.push_back(e);
                absorb(x, e);
            }
    }

    Cover<F> c;
    c.P = projective_from_summands(C, summands);
    c.pi = projective_map(c.P, M, elems);
    return c;
}

template <class F>
struct SubRep {
    Rep<F> rep;
    RepMap<F> incl;
};

/* Kernel of a natural map phi: M -> N as a rep with its inclusion. */
template <class F>
SubRep<F> kernel_rep(const Rep<F>& M, const RepMap<F>& phi) {
    const auto& C = *M.C;
    int n = C.n();
    SubRep<F> K;
    std::vector<Matrix<F>> bases(n);
    std::vector<int> dims(n);
    for (int x = 0; x < n; ++x) {
        bases[x] = kernel_basis(phi[x]);
        dims[x] = bases[x].cols();
    }
    K.rep.init(C, dims);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int i = 0; i < C.dim(x, y); ++i) {
                auto img = M.act[x][y][i] * bases[x];
                auto sol = solve(bases[y], img);
                if (!sol) throw std::logic_error("kernel is not a subfunctor (naturality broken)");
                K.rep.act[x][y][i] = *sol;
            }
    K.incl = std::move(bases);
    return K;
}

/* Cokernel of phi: M -> N with its projection. */
template <class F>
struct QuotRep {
    Rep<F> rep;
    RepMap<F> proj;
};

template <class F>
QuotRep<F> cokernel_rep(const Rep<F>& N, const RepMap<F>& phi) {
    const auto& C = *N.C;
    int n = C.n();
    std::vector<QuotientSpace<F>> qs(n);
    std::vector<int> dims(n);
    for (int x = 0; x < n; ++x) {
        qs[x] = quotient_space(phi[x], N.dims[x]);
        dims[x] = qs[x].dim;
    }
    QuotRep<F> Q;
    Q.rep.init(C, dims);
    Q.proj.resize(n);
    for (int x = 0; x < n; ++x) Q.proj[x] = qs[x].projection_matrix();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int i = 0; i < C.dim(x, y); ++i) {
                Matrix<F> lift = Matrix<F>(N.dims[x], dims[x]);
                for (int j = 0; j < dims[x]; ++j) {
                    std::vector<F> u(dims[x], F::zero());
                    u[j] = F::one();
                    lift.set_col(j, qs[x].lift(u));
                }
                Q.rep.act[x][y][i] = Q.proj[y] * (N.act[x][y][i] * lift);
            }
    return Q;
}

// -- resolutions, Ext, Tor --

template <class F>
struct Resolution {
    std::vector<ProjectiveRep<F>> P;
    std::vector<RepMap<F>> d;   // d[j] : P[j] -> P[j-1], for j >= 1
    RepMap<F> aug;              // P[0] -> M
    int kernel_vanished = -1;   // syzygy after P[k] was zero (resolution stops)
};

template <class F>
Resolution<F> resolve(const Rep<F>& M, int length) {
    Resolution<F> R;
    Cover<F> c = cover_step(M);
    R.P.push_back(c.P);
    R.aug = c.pi;
    const Rep<F>* cur_src = &R.P.back().rep;
    RepMap<F> cur_map = R.aug;
    for (int j = 1; j <= length; ++j) {
        SubRep<F> K = kernel_rep(*cur_src, cur_map);
        if (K.rep.is_zero()) {
            R.kernel_vanished = j - 1;
            return R;
        }
        Cover<F> ck = cover_step(K.rep);
        // d_j = incl . cover
        int n = K.rep.n();
        RepMap<F> d(n);
        for (int x = 0; x < n; ++x) d[x] = K.incl[x] * ck.pi[x];
        R.P.push_back(ck.P);
        R.d.push_back(d);
        cur_src = &R.P.back().rep;
        cur_map = R.d.back();
    }
    return R;
}

template <class F>
std::vector<F> embed_unit(const ProjectiveRep<F>& P, int k) {
    std::vector<F> v(P.rep.dims[P.summands[k]], F::zero());
    auto u = P.unit(k);
    for (size_t i = 0; i < u.size(); ++i) v[i] = u[i];
    return v;
}

/* Matrix of Hom(d_j, N): Hom(P_{j-1}, N) -> Hom(P_j, N) in Yoneda
   coordinates Hom(+C(c_k,-), N) = +N(c_k). */
template <class F>
Matrix<F> hom_differential(const Resolution<F>& R, int j, const Rep<F>& N) {
    const auto& C = *N.C;
    const ProjectiveRep<F>& Pj = R.P[j];
    const ProjectiveRep<F>& Pp = R.P[j - 1];
    std::vector<int> roff(Pj.count() + 1, 0), coff(Pp.count() + 1, 0);
    for (int l = 0; l < Pj.count(); ++l) roff[l + 1] = roff[l] + N.dims[Pj.summands[l]];
    for (int k = 0; k < Pp.count(); ++k) coff[k + 1] = coff[k] + N.dims[Pp.summands[k]];
    Matrix<F> D(roff.back(), coff.back());
    for (int l = 0; l < Pj.count(); ++l) {
        int cl = Pj.summands[l];
        auto img = R.d[j - 1][cl].apply(embed_unit(Pj, l));
        for (int k = 0; k < Pp.count(); ++k) {
            auto u = Pp.block(k, cl, img);  // coords in C(c_k, c'_l)
            Matrix<F> blk = N.act_vec(Pp.summands[k], cl, u);
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c) D(roff[l] + r, coff[k] + c) = blk(r, c);
        }
    }
    return D;
}

/* dim Ext^i(M, N) from a projective resolution of M. */
template <class F>
int ext_dim(const Rep<F>& M, const Rep<F>& N, int i) {
    if (M.is_zero() || N.is_zero()) return 0;
    Resolution<F> R = resolve(M, i + 1);
    int top = (int)R.P.size() - 1;  // resolution may stop early
    auto hom_d = [&](int j) -> std::optional<Matrix<F>> {
        if (j < 1 || j > top) return std::nullopt;
        return hom_differential(R, j, N);
    };
    if (i > top) return 0;  // complex is zero beyond the stop
    int dim_i = 0;
    {
        const ProjectiveRep<F>& Pi = R.P[i];
        for (int k = 0; k < Pi.count(); ++k) dim_i += N.dims[Pi.summands[k]];
    }
    auto Din = hom_d(i);        // Hom(P_{i-1},N) -> Hom(P_i,N)
    auto Dout = hom_d(i + 1);   // Hom(P_i,N) -> Hom(P_{i+1},N)
    int z = Dout ? kernel_basis(*Dout).cols() : dim_i;
    int b = Din ? rank(*Din) : 0;
    return z - b;
}

// -- tensor over the category --

/* Coequalizer presentation of Mop (x)_C N for Mop a rep of C^op and N a rep
   of C. Ambient space is +_x Mop(x) (x) N(x); `rel` spans the coequalized
   subspace. */
template <class F>
struct TensorSpace {
    std::vector<int> off;  // per object, into the ambient space
    int ambient = 0;
    QuotientSpace<F> q;

    int dim() const { return q.dim; }
};

template <class F>
TensorSpace<F> tensor_over_cat(const PresentedCategory<F>& C, const Rep<F>& Mop, const Rep<F>& N) {
    int n = C.n();
    TensorSpace<F> T;
    T.off.assign(n + 1, 0);
    for (int x = 0; x < n; ++x) T.off[x + 1] = T.off[x] + Mop.dims[x] * N.dims[x];
    T.ambient = T.off[n];

    std::vector<std::vector<F>> rels;
    for (const Gen<F>& g : C.gens) {
        int x = g.src, y = g.tgt;
        // m (x) n with m in Mop(y), n in N(x): M(g)m (x) n - m (x) N(g)n
        Matrix<F> mg = Mop.act_vec(y, x, g.coords);  // Mop over C^op: hom_op(y,x) = C(x,y)
        Matrix<F> ng = N.act_vec(x, y, g.coords);
        for (int a = 0; a < Mop.dims[y]; ++a)
            for (int b = 0; b < N.dims[x]; ++b) {
                std::vector<F> r(T.ambient, F::zero());
                for (int c = 0; c < Mop.dims[x]; ++c) r[T.off[x] + c * N.dims[x] + b] += mg(c, a);
                for (int c = 0; c < N.dims[y]; ++c) r[T.off[y] + a * N.dims[y] + c] -= ng(c, b);
                if (!is_zero_vec(r)) rels.push_back(std::move(r));
            }
    }
    Matrix<F> sub(T.ambient, (int)rels.size());
    for (int j = 0; j < (int)rels.size(); ++j) sub.set_col(j, rels[j]);
    T.q = quotient_space(sub, T.ambient);
    return T;
}

/* dim Tor_i^C(Mop, N) computed by resolving N and applying Mop (x)_C - via
   the co-Yoneda identification Mop (x) C(c,-) = Mop(c). */
template <class F>
int tor_dim(const PresentedCategory<F>& C, const Rep<F>& Mop, const Rep<F>& N, int i) {
    if (Mop.is_zero() || N.is_zero()) return 0;
    Resolution<F> R = resolve(N, i + 1);
    int top = (int)R.P.size() - 1;
    if (i > top) return 0;

    auto ten_d = [&](int j) -> std::optional<Matrix<F>> {
        if (j < 1 || j > top) return std::nullopt;
        const ProjectiveRep<F>& Pj = R.P[j];
        const ProjectiveRep<F>& Pp = R.P[j - 1];
        std::vector<int> roff(Pp.count() + 1, 0), coff(Pj.count() + 1, 0);
        for (int k = 0; k < Pp.count(); ++k) roff[k + 1] = roff[k] + Mop.dims[Pp.summands[k]];
        for (int l = 0; l < Pj.count(); ++l) coff[l + 1] = coff[l] + Mop.dims[Pj.summands[l]];
        Matrix<F> E(roff.back(), coff.back());
        for (int l = 0; l < Pj.count(); ++l) {
            int cl = Pj.summands[l];
            auto img = R.d[j - 1][cl].apply(embed_unit(Pj, l));
            for (int k = 0; k < Pp.count(); ++k) {
                auto u = Pp.block(k, cl, img);  // coords in C(c_k, c'_l)
                // right action Mop(c'_l) -> Mop(c_k)
                Matrix<F> blk = Mop.act_vec(cl, Pp.summands[k], u);
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c) E(roff[k] + r, coff[l] + c) = blk(r, c);
            }
        }
        return E;
    };

    int dim_i = 0;
    for (int k = 0; k < R.P[i].count(); ++k) dim_i += Mop.dims[R.P[i].summands[k]];
    auto Ein = ten_d(i);        // T_i -> T_{i-1}
    auto Eout = ten_d(i + 1);   // T_{i+1} -> T_i
    int z = Ein ? kernel_basis(*Ein).cols() : dim_i;
    int b = Eout ? rank(*Eout) : 0;
    return z - b;
}

/* I(c,-) as a subfunctor of C(c,-), for a two-sided ideal I of C. */
template <class F>
Rep<F> ideal_slice_rep(const PresentedCategory<F>& C, const CatIdeal<F>& I, int c) {
    Rep<F> S;
    std::vector<int> dims(C.n());
    std::vector<Matrix<F>> incl(C.n());
    for (int y = 0; y < C.n(); ++y) {
        incl[y] = I.span[c][y].as_columns();
        dims[y] = incl[y].cols();
    }
    S.init(C, dims);
    for (int y = 0; y < C.n(); ++y)
        for (int z = 0; z < C.n(); ++z)
            for (int g = 0; g < C.dim(y, z); ++g) {
                Matrix<F> post(C.dim(c, z), dims[y]);
                for (int j = 0; j < dims[y]; ++j)
                    post.set_col(j, C.compose(c, y, z, incl[y].col(j), C.unit(y, z, g)));
                auto sol = solve(incl[z], post);
                if (!sol) throw std::logic_error("ideal slice is not closed under post-composition");
                S.act[y][z][g] = *sol;
            }
    return S;
}

// -- projectivity and projective dimension --

/* Split test: M is projective iff some greedy cover P ->> M splits. */
template <class F>
bool is_projective(const Rep<F>& M) {
    if (M.is_zero()) return true;
    const auto& C = *M.C;
    int n = C.n();
    Cover<F> c = cover_step(M);
    const Rep<F>& P = c.P.rep;

    // unknowns: s_x entries (P.dims[x] x M.dims[x])
    std::vector<int> off(n + 1, 0);
    for (int x = 0; x < n; ++x) off[x + 1] = off[x] + P.dims[x] * M.dims[x];
    int unknowns = off[n];
    std::vector<std::vector<F>> rows;
    std::vector<F> rhs;

    // naturality of s over generators: P(g) s_x - s_y M(g) = 0
    for (const Gen<F>& g : C.gens) {
        Matrix<F> pg = P.act_vec(g.src, g.tgt, g.coords);
        Matrix<F> mg = M.act_vec(g.src, g.tgt, g.coords);
        for (int r = 0; r < P.dims[g.tgt]; ++r)
            for (int cc = 0; cc < M.dims[g.src]; ++cc) {
                std::vector<F> row(unknowns, F::zero());
                for (int k = 0; k < P.dims[g.src]; ++k) row[off[g.src] + k * M.dims[g.src] + cc] += pg(r, k);
                for (int k = 0; k < M.dims[g.tgt]; ++k) row[off[g.tgt] + r * M.dims[g.tgt] + k] -= mg(k, cc);
                rows.push_back(std::move(row));
                rhs.push_back(F::zero());
            }
    }
    // pi_x s_x = id
    for (int x = 0; x < n; ++x)
        for (int r = 0; r < M.dims[x]; ++r)
            for (int cc = 0; cc < M.dims[x]; ++cc) {
                std::vector<F> row(unknowns, F::zero());
                for (int k = 0; k < P.dims[x]; ++k) row[off[x] + k * M.dims[x] + cc] = c.pi[x](r, k);
                rows.push_back(std::move(row));
                rhs.push_back(r == cc ? F::one() : F::zero());
            }

    Matrix<F> A((int)rows.size(), unknowns);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) A(i, j) = rows[i][j];
    return solve_vec(A, rhs).has_value();
}

/* Exact projective dimension by Schanuel: successive syzygies until one is
   projective. Returns nullopt if pd exceeds `cap`. Zero module: 0. */
template <class F>
std::optional<int> projective_dimension(const Rep<F>& M, int cap) {
    Rep<F> cur = M;
    for (int k = 0; k <= cap; ++k) {
        if (is_projective(cur)) return k == 0 ? 0 : k;
        Cover<F> c = cover_step(cur);
        SubRep<F> K = kernel_rep(c.P.rep, c.pi);
        cur = std::move(K.rep);
        if (cur.is_zero()) return k;  // cover was iso after all
    }
    return std::nullopt;
}

// -- subquotients (homology of a two-step complex at a fixed spot) --

/* ker(out) / im(in) inside K^ambient; either map may be absent. */
template <class F>
struct Subquotient {
    Matrix<F> Z;         // columns: basis of ker(out) (or identity if no out)
    QuotientSpace<F> q;  // K^{Z.cols()} modulo the coords of im(in)

    int dim() const { return q.dim; }

    /* Coords of a cycle's class; the vector must lie in ker(out). */
    std::vector<F> cls(const std::vector<F>& v) const {
        auto y = solve_vec(Z, v);
        if (!y) throw std::logic_error("subquotient: vector is not a cycle");
        return q.project(*y);
    }

    /* An ambient representative of a class. */
    std::vector<F> rep(const std::vector<F>& h) const { return Z.apply(q.lift(h)); }
};

template <class F>
Subquotient<F> make_subquotient(int ambient, const Matrix<F>* in, const Matrix<F>* out) {
    Subquotient<F> s;
    s.Z = out ? kernel_basis(*out) : Matrix<F>::identity(ambient);
    Matrix<F> img(s.Z.cols(), 0);
    if (in && in->cols() > 0) {
        auto y = solve(s.Z, *in);
        if (!y) throw std::logic_error("subquotient: image is not contained in the kernel");
        img = *y;
    }
    s.q = quotient_space(img, s.Z.cols());
    return s;
}

// -- simple modules --

/* The radical ideal: span of all positive-degree basis morphisms. Verifies
   closure under composition (our constructions keep degrees filtered). */
template <class F>
CatIdeal<F> radical_ideal(const PresentedCategory<F>& C) {
    int n = C.n();
    CatIdeal<F> R;
    R.span.resize(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) R.span[x].push_back(IncSpan<F>(C.dim(x, y)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int i = 0; i < C.dim(x, y); ++i)
                if (C.basis[x][y][i].degree > 0) R.span[x][y].add(C.unit(x, y, i));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int i = 0; i < C.dim(x, y); ++i) {
                if (C.basis[x][y][i].degree == 0) continue;
                for (int z = 0; z < n; ++z) {
                    for (int g = 0; g < C.dim(y, z); ++g)
                        if (!R.span[x][z].contains(C.compose_basis(x, y, z, i, g)))
                            throw std::logic_error("degree filtration is not multiplicative");
                    for (int g = 0; g < C.dim(z, x); ++g)
                        if (!R.span[z][y].contains(C.compose_basis(z, x, y, g, i)))
                            throw std::logic_error("degree filtration is not multiplicative");
                }
            }
    return R;
}

/* Simple modules of C. Requires the degree-0 basis of each End(x) to be a
   family of orthogonal primitive idempotents in the semisimple quotient
   (true for every category this engine constructs). */
template <class F>
std::vector<Rep<F>> simples(const PresentedCategory<F>& C) {
    int n = C.n();
    auto R = radical_ideal(C);
    Quotient<F> D = quotient_category(C, R);
    const auto& S = D.cat;  // semisimple quotient

    // idempotent slots (x, local index in End_S(x))
    struct Slot {
        int x, i;
        std::vector<F> e;  // in S(x,x)
    };
    std::vector<Slot> slots;
    std::vector<std::vector<int>> slot_at(n);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < S.dim(x, x); ++i) {
            auto e = S.unit(x, x, i);
            if (S.compose(x, x, x, e, e) != e)
                throw std::logic_error("degree-0 basis of End(" + C.objects[x] + ") is not idempotent");
            for (int j = 0; j < S.dim(x, x); ++j) {
                if (j == i) continue;
                if (!is_zero_vec(S.compose(x, x, x, e, S.unit(x, x, j))))
                    throw std::logic_error("degree-0 idempotents at " + C.objects[x] + " are not orthogonal");
            }
            slot_at[x].push_back((int)slots.size());
            slots.push_back({x, i, e});
        }

    // union-find; linked when e_t . S(x,y) . e_s is nonzero
    std::vector<int> parent(slots.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    auto corner = [&](const Slot& s, const Slot& t) {
        // basis of e_t . S(s.x, t.x) . e_s
        std::vector<std::vector<F>> out;
        for (int m = 0; m < S.dim(s.x, t.x); ++m) {
            auto v = S.compose(s.x, s.x, t.x, s.e, S.unit(s.x, t.x, m));
            v = S.compose(s.x, t.x, t.x, v, t.e);
            if (!is_zero_vec(v)) out.push_back(std::move(v));
        }
        return out;
    };
    for (size_t a = 0; a < slots.size(); ++a)
        for (size_t b = a + 1; b < slots.size(); ++b)
            if (!corner(slots[a], slots[b]).empty()) parent[find((int)b)] = find((int)a);

    // primitivity: corner of a slot with itself must be 1-dimensional (K e)
    for (const Slot& s : slots) {
        IncSpan<F> sp(S.dim(s.x, s.x));
        for (auto& v : corner(s, s)) sp.add(v);
        if (sp.dim() != 1) throw std::logic_error("idempotent at " + C.objects[s.x] + " is not primitive");
    }

    // group slots by class, build one simple per class
    std::map<int, std::vector<int>> classes;
    for (int a = 0; a < (int)slots.size(); ++a) classes[find(a)].push_back(a);

    std::vector<Rep<F>> out;
    for (auto& [root, members] : classes) {
        // transport isos u_a : root -> a with left inverse v_a (v_a u_a = e_root)
        const Slot& r0 = slots[root];
        std::vector<std::vector<F>> u(slots.size()), v(slots.size());
        u[root] = r0.e;
        v[root] = r0.e;
        // BFS is overkill: corners of members with the root are all nonzero
        for (int a : members) {
            if (a == root) continue;
            const Slot& sa = slots[a];
            auto cands = corner(r0, sa);  // in S(r0.x, sa.x)
            if (cands.empty()) throw std::logic_error("class member lost its linking morphism");
            u[a] = cands[0];
            // solve v . u = e_root for v in e_root S(sa.x, r0.x) e_a
            int dv = S.dim(sa.x, r0.x);
            Matrix<F> A(S.dim(r0.x, r0.x), dv);
            for (int m = 0; m < dv; ++m) A.set_col(m, S.compose(r0.x, sa.x, r0.x, u[a], S.unit(sa.x, r0.x, m)));
            auto sol = solve_vec(A, r0.e);
            if (!sol) throw std::logic_error("transport iso has no left inverse");
            v[a] = *sol;
        }

        // S_class(x): one coordinate per member slot living at x
        std::vector<std::vector<int>> here(n);  // member index list per object
        for (int a : members) here[slots[a].x].push_back(a);
        Rep<F> M;
        std::vector<int> dims(n);
        for (int x = 0; x < n; ++x) dims[x] = (int)here[x].size();
        M.init(C, dims);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int i = 0; i < C.dim(x, y); ++i) {
                    Matrix<F>& A = M.act[x][y][i];
                    auto mbar = D.project(x, y, C.unit(x, y, i));
                    if (is_zero_vec(mbar)) continue;
                    for (int cc = 0; cc < dims[x]; ++cc)
                        for (int rr = 0; rr < dims[y]; ++rr) {
                            int a = here[x][cc], b = here[y][rr];
                            // lambda with v_b . m . u_a = lambda e_root
                            auto w = S.compose(r0.x, x, y, u[a], mbar);
                            w = S.compose(r0.x, y, r0.x, w, v[b]);
                            // w lies in K e_root; extract the coefficient
                            F lam = F::zero();
                            for (int t = 0; t < (int)w.size(); ++t) {
                                if (w[t].is_zero()) continue;
                                lam = w[t] * r0.e[t].inverse();
                                break;
                            }
                            A(rr, cc) = lam;
                        }
                }
        out.push_back(std::move(M));
    }
    return out;
}

}  // namespace homcat
