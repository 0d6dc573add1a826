#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcat/linalg.hpp"
#include "homcat/quiver.hpp"

namespace homcat {

/* One basis morphism of a hom space. For categories built straight from a
   quiver, `path` holds the underlying arrow word in traversal order and
   `degree` its length; derived constructions keep degrees additive and may
   leave `path` empty. Degree 0 always means "identity component". */
struct BasisElt {
    int degree = 0;
    std::string label;
    std::vector<int> path;
};

template <class F>
struct Gen {
    int src = -1, tgt = -1;
    std::vector<F> coords;
    std::string label;
};

/* Incrementally maintained row space in reduced form. */
template <class F>
class IncSpan {
  public:
    explicit IncSpan(int ambient = 0) : ambient_(ambient) {}

    int dim() const { return (int)rows_.size(); }
    int ambient() const { return ambient_; }

    std::vector<F> reduce(std::vector<F> v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const F& f = v[lead_[i]];
            if (!f.is_zero()) add_scaled(v, rows_[i], -f);
        }
        return v;
    }

    bool contains(const std::vector<F>& v) const { return is_zero_vec(reduce(v)); }

    /* Returns true iff v enlarged the span. */
    bool add(std::vector<F> v) {
        v = reduce(std::move(v));
        int lead = -1;
        for (int j = 0; j < ambient_; ++j)
            if (!v[j].is_zero()) { lead = j; break; }
        if (lead < 0) return false;
        F inv = v[lead].inverse();
        for (F& x : v) x *= inv;
        for (size_t i = 0; i < rows_.size(); ++i) {
            const F& f = rows_[i][lead];
            if (!f.is_zero()) add_scaled(rows_[i], v, -f);
        }
        rows_.push_back(std::move(v));
        lead_.push_back(lead);
        return true;
    }

    Matrix<F> as_columns() const {
        Matrix<F> m(ambient_, (int)rows_.size());
        for (int j = 0; j < (int)rows_.size(); ++j) m.set_col(j, rows_[j]);
        return m;
    }

  private:
    int ambient_;
    std::vector<std::vector<F>> rows_;
    std::vector<int> lead_;
};

/* Finite K-linear category with chosen hom bases and full composition
   tables. Convention throughout: compose(x,y,z,f,g) is "g after f". */
template <class F>
class PresentedCategory {
  public:
    std::vector<std::string> objects;
    std::vector<std::vector<std::vector<BasisElt>>> basis;  // [x][y]
    std::vector<std::vector<F>> id_coords;                  // [x], in hom(x,x)
    std::vector<Gen<F>> gens;

    int n() const { return (int)objects.size(); }
    int dim(int x, int y) const { return (int)basis[x][y].size(); }

    int total_dim() const {
        int t = 0;
        for (int x = 0; x < n(); ++x)
            for (int y = 0; y < n(); ++y) t += dim(x, y);
        return t;
    }

    void init_shape(int nobj) {
        objects.assign(nobj, "");
        basis.assign(nobj, std::vector<std::vector<BasisElt>>(nobj));
        id_coords.assign(nobj, {});
    }

    /* g in hom(y,z) after f in hom(x,y), bilinear. */
    std::vector<F> compose(int x, int y, int z, const std::vector<F>& f, const std::vector<F>& g) const {
        std::vector<F> out(dim(x, z), F::zero());
        const Matrix<F>& t = table(x, y, z);
        int dxy = dim(x, y);
        for (int gi = 0; gi < dim(y, z); ++gi) {
            if (g[gi].is_zero()) continue;
            for (int fi = 0; fi < dxy; ++fi) {
                F c = g[gi] * f[fi];
                if (c.is_zero()) continue;
                for (int k = 0; k < (int)out.size(); ++k) out[k] += c * t(k, gi * dxy + fi);
            }
        }
        return out;
    }

    std::vector<F> compose_basis(int x, int y, int z, int f, int g) const {
        return table(x, y, z).col(g * dim(x, y) + f);
    }

    const Matrix<F>& table(int x, int y, int z) const { return comp_[idx(x, y, z)]; }

    void build_tables(const std::function<std::vector<F>(int, int, int, int, int)>& rule) {
        comp_.assign((size_t)n() * n() * n(), Matrix<F>());
        for (int x = 0; x < n(); ++x)
            for (int y = 0; y < n(); ++y)
                for (int z = 0; z < n(); ++z) {
                    Matrix<F> t(dim(x, z), dim(x, y) * dim(y, z));
                    for (int g = 0; g < dim(y, z); ++g)
                        for (int f = 0; f < dim(x, y); ++f) t.set_col(g * dim(x, y) + f, rule(x, y, z, f, g));
                    comp_[idx(x, y, z)] = std::move(t);
                }
    }

    std::vector<F> unit(int x, int y, int i) const {
        std::vector<F> v(dim(x, y), F::zero());
        v[i] = F::one();
        return v;
    }

    /* Category axioms on the stored tables; throws std::logic_error. */
    void validate() const {
        for (int x = 0; x < n(); ++x)
            for (int y = 0; y < n(); ++y)
                for (int f = 0; f < dim(x, y); ++f) {
                    auto u = unit(x, y, f);
                    if (compose(x, x, y, id_coords[x], u) != u)
                        throw std::logic_error("right identity fails at hom(" + objects[x] + "," + objects[y] + ")");
                    if (compose(x, y, y, u, id_coords[y]) != u)
                        throw std::logic_error("left identity fails at hom(" + objects[x] + "," + objects[y] + ")");
                }
        for (int x = 0; x < n(); ++x)
            for (int y = 0; y < n(); ++y)
                for (int z = 0; z < n(); ++z)
                    for (int w = 0; w < n(); ++w)
                        for (int f = 0; f < dim(x, y); ++f)
                            for (int g = 0; g < dim(y, z); ++g)
                                for (int h = 0; h < dim(z, w); ++h) {
                                    auto gf = compose_basis(x, y, z, f, g);
                                    auto hg = compose_basis(y, z, w, g, h);
                                    auto a = compose(x, z, w, gf, unit(z, w, h));
                                    auto b = compose(x, y, w, unit(x, y, f), hg);
                                    if (a != b) throw std::logic_error("associativity fails");
                                }
    }

    /* Basic: every identity is a single basis element and the degree-0 part
       of each hom space is exactly the identities. */
    bool is_basic() const {
        for (int x = 0; x < n(); ++x) {
            int ones = 0;
            for (int i = 0; i < dim(x, x); ++i)
                if (!id_coords[x][i].is_zero()) {
                    if (!(id_coords[x][i] == F::one()) || basis[x][x][i].degree != 0) return false;
                    ++ones;
                }
            if (ones > 1) return false;
            for (int y = 0; y < n(); ++y)
                for (int i = 0; i < dim(x, y); ++i)
                    if (basis[x][y][i].degree == 0) {
                        if (x != y) return false;
                        if (id_coords[x][i].is_zero() && dim(x, x) > 0) return false;
                    }
        }
        return true;
    }

  private:
    size_t idx(int x, int y, int z) const { return ((size_t)x * n() + y) * n() + z; }
    std::vector<Matrix<F>> comp_;
};

struct AdmissibilityFailure : std::runtime_error {
    AdmissibilityFailure(const std::string& witness)
        : std::runtime_error("not admissible at truncation: path '" + witness + "' survives"), witness_path(witness) {}
    std::string witness_path;
};

namespace detail {

inline std::string path_label(const QuiverSpec& q, const std::vector<int>& path) {
    std::string s;
    for (size_t i = path.size(); i-- > 0;) {
        s += q.arrows[path[i]].name;
        if (i > 0) s += "*";
    }
    return s;
}

/* All paths x -> y of length <= L, ordered by (length, discovery). Index 0
   slot per (x,y) lists global path records. */
struct PathEnum {
    struct P {
        int src, tgt, len;
        std::vector<int> arrows;
    };
    std::vector<P> paths;                            // grouped by length
    std::vector<std::vector<std::vector<int>>> at;   // [x][y] -> path ids, by (length, id)

    static PathEnum run(const QuiverSpec& q, int L) {
        PathEnum e;
        int n = (int)q.vertices.size();
        e.at.assign(n, std::vector<std::vector<int>>(n));
        std::vector<int> prev_layer;
        for (int v = 0; v < n; ++v) {
            e.paths.push_back({v, v, 0, {}});
            e.at[v][v].push_back((int)e.paths.size() - 1);
            prev_layer.push_back((int)e.paths.size() - 1);
        }
        for (int len = 1; len <= L; ++len) {
            std::vector<int> layer;
            for (int pid : prev_layer) {
                P base = e.paths[pid];
                for (int ai = 0; ai < (int)q.arrows.size(); ++ai) {
                    if (q.arrows[ai].src != base.tgt) continue;
                    P np{base.src, q.arrows[ai].tgt, len, base.arrows};
                    np.arrows.push_back(ai);
                    e.paths.push_back(np);
                    e.at[np.src][np.tgt].push_back((int)e.paths.size() - 1);
                    layer.push_back((int)e.paths.size() - 1);
                }
            }
            prev_layer = std::move(layer);
        }
        return e;
    }
};

}  // namespace detail

/* A programmatic relation: terms over arbitrary path lengths >= 1. */
template <class F>
struct RawRelation {
    int src = -1, tgt = -1;
    std::vector<std::pair<F, std::vector<int>>> terms;  // coeff, arrow word
};

template <class F>
std::vector<RawRelation<F>> lift_relations(const QuiverSpec& q) {
    std::vector<RawRelation<F>> out;
    for (const Relation& r : q.relations) {
        RawRelation<F> rr;
        rr.src = r.src;
        rr.tgt = r.tgt;
        for (const RelTerm& t : r.terms) rr.terms.push_back({F::from_rational(t.coeff), t.path});
        out.push_back(std::move(rr));
    }
    return out;
}

/* Builds the presented category K-quiver / <relations>, truncated at
   q.lmax, with the certificate that every path of full length already lies
   in the relation ideal; otherwise throws AdmissibilityFailure with a
   witness path. Extra relations may carry length-1 terms (the parser is
   stricter than the engine here on purpose). */
template <class F>
PresentedCategory<F> build_category(const QuiverSpec& q, const std::vector<RawRelation<F>>& rels) {
    const int L = q.lmax;
    const int n = (int)q.vertices.size();
    auto pe = detail::PathEnum::run(q, L);

    // local index of each path within its (x,y) list
    std::vector<int> local(pe.paths.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int i = 0; i < (int)pe.at[x][y].size(); ++i) local[pe.at[x][y][i]] = i;

    auto find_path = [&](int x, int y, const std::vector<int>& word) -> int {
        for (int pid : pe.at[x][y])
            if (pe.paths[pid].arrows == word) return local[pid];
        return -1;
    };

    // ideal span U(x,y) = trunc(z . r . w) over all framings inside length L
    std::vector<std::vector<IncSpan<F>>> U(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) U[x].push_back(IncSpan<F>((int)pe.at[x][y].size()));

    for (const RawRelation<F>& r : rels) {
        int minlen = 1 << 30;
        for (const auto& [c, w] : r.terms) minlen = std::min(minlen, (int)w.size());
        for (const auto& wrec : pe.paths) {
            if (wrec.tgt != r.src) continue;
            for (const auto& zrec : pe.paths) {
                if (zrec.src != r.tgt) continue;
                if (wrec.len + zrec.len + minlen > L) continue;
                int x = wrec.src, y = zrec.tgt;
                std::vector<F> v((int)pe.at[x][y].size(), F::zero());
                bool nonzero = false;
                for (const auto& [c, word] : r.terms) {
                    if (wrec.len + zrec.len + (int)word.size() > L) continue;  // truncated away
                    std::vector<int> full = wrec.arrows;
                    full.insert(full.end(), word.begin(), word.end());
                    full.insert(full.end(), zrec.arrows.begin(), zrec.arrows.end());
                    int li = find_path(x, y, full);
                    if (li < 0) throw std::logic_error("internal: path enumeration is incomplete");
                    v[li] += c;
                    nonzero = true;
                }
                if (nonzero) U[x][y].add(std::move(v));
            }
        }
    }

    // certificate: every path of length exactly L lies in the ideal span
    for (const auto& p : pe.paths) {
        if (p.len != L) continue;
        std::vector<F> e((int)pe.at[p.src][p.tgt].size(), F::zero());
        e[find_path(p.src, p.tgt, p.arrows)] = F::one();
        if (!U[p.src][p.tgt].contains(e)) throw AdmissibilityFailure(detail::path_label(q, p.arrows));
    }

    // quotient bases: free coordinates are single paths (all of length < L)
    PresentedCategory<F> C;
    C.init_shape(n);
    for (int x = 0; x < n; ++x) C.objects[x] = q.vertices[x];

    std::vector<std::vector<QuotientSpace<F>>> qs(n);
    for (int x = 0; x < n; ++x) {
        qs[x].resize(n);
        for (int y = 0; y < n; ++y) {
            qs[x][y] = quotient_space(U[x][y].as_columns(), (int)pe.at[x][y].size());
            for (int rc : qs[x][y].rep_coords) {
                const auto& p = pe.paths[pe.at[x][y][rc]];
                std::string lbl = p.len == 0 ? "id(" + q.vertices[x] + ")" : detail::path_label(q, p.arrows);
                C.basis[x][y].push_back({p.len, lbl, p.arrows});
            }
        }
    }

    auto project_path = [&](int x, int y, const std::vector<int>& word) -> std::vector<F> {
        if ((int)word.size() > L) return std::vector<F>((int)C.basis[x][y].size(), F::zero());
        int li = find_path(x, y, word);
        std::vector<F> e((int)pe.at[x][y].size(), F::zero());
        e[li] = F::one();
        return qs[x][y].project(e);
    };

    for (int x = 0; x < n; ++x) C.id_coords[x] = project_path(x, x, {});

    C.build_tables([&](int x, int y, int z, int f, int g) {
        std::vector<int> word = C.basis[x][y][f].path;
        const auto& tail = C.basis[y][z][g].path;
        word.insert(word.end(), tail.begin(), tail.end());
        return project_path(x, z, word);
    });

    for (int ai = 0; ai < (int)q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        C.gens.push_back({a.src, a.tgt, project_path(a.src, a.tgt, {ai}), a.name});
    }
    return C;
}

template <class F>
PresentedCategory<F> build_category(const QuiverSpec& q) {
    return build_category<F>(q, lift_relations<F>(q));
}

template <class F>
struct AdmissibilityCheck {
    bool ok = true;
    std::string witness;
};

template <class F>
AdmissibilityCheck<F> check_admissible(const QuiverSpec& q) {
    try {
        build_category<F>(q);
        return {};
    } catch (const AdmissibilityFailure& e) {
        return {false, e.witness_path};
    }
}

/* Evaluates the coset of an arrow word (traversal order) in C; C must come
   from build_category over the same QuiverSpec (gens align with arrows). */
template <class F>
std::vector<F> path_vector(const PresentedCategory<F>& C, const QuiverSpec& q, const std::vector<int>& word) {
    if (word.empty()) throw std::invalid_argument("path_vector: empty word has no single source");
    int x = q.arrows[word[0]].src;
    std::vector<F> v = C.id_coords[x];
    int at = x;
    for (int ai : word) {
        int nxt = q.arrows[ai].tgt;
        v = C.compose(x, at, nxt, v, C.gens[ai].coords);
        at = nxt;
    }
    return v;
}

// -- opposite and tensor categories --

template <class F>
PresentedCategory<F> opposite(const PresentedCategory<F>& C) {
    PresentedCategory<F> D;
    D.init_shape(C.n());
    for (int x = 0; x < C.n(); ++x) {
        D.objects[x] = C.objects[x];
        D.id_coords[x] = C.id_coords[x];
        for (int y = 0; y < C.n(); ++y) D.basis[x][y] = C.basis[y][x];
    }
    D.build_tables([&](int x, int y, int z, int f, int g) {
        // f: y->x and g: z->y in C; (g then f) in D is f o g in C
        return C.compose_basis(z, y, x, g, f);
    });
    for (const Gen<F>& g : C.gens) D.gens.push_back({g.tgt, g.src, g.coords, g.label});
    return D;
}

/* A (x) B: objects are pairs, hom((a,b),(a',b')) = A(a,a') (x) B(b,b'),
   composition componentwise. Pair (a,b) has flat index a*B.n()+b. */
template <class F>
PresentedCategory<F> tensor_category(const PresentedCategory<F>& A, const PresentedCategory<F>& B) {
    int na = A.n(), nb = B.n();
    PresentedCategory<F> T;
    T.init_shape(na * nb);
    auto oid = [&](int a, int b) { return a * nb + b; };
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) T.objects[oid(a, b)] = "(" + A.objects[a] + "," + B.objects[b] + ")";

    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2) {
                    auto& out = T.basis[oid(a, b)][oid(a2, b2)];
                    for (const BasisElt& ea : A.basis[a][a2])
                        for (const BasisElt& eb : B.basis[b][b2])
                            out.push_back({ea.degree + eb.degree, ea.label + "(x)" + eb.label, {}});
                }

    // coords of u (x) v: index i_a * dimB + i_b
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) {
            int da = A.dim(a, a), db = B.dim(b, b);
            std::vector<F> id(da * db, F::zero());
            for (int i = 0; i < da; ++i)
                for (int j = 0; j < db; ++j) id[i * db + j] = A.id_coords[a][i] * B.id_coords[b][j];
            T.id_coords[oid(a, b)] = id;
        }

    T.build_tables([&](int x, int y, int z, int f, int g) {
        int ax = x / nb, bx = x % nb, ay = y / nb, by = y % nb, az = z / nb, bz = z % nb;
        int fa = f / B.dim(bx, by), fb = f % B.dim(bx, by);
        int ga = g / B.dim(by, bz), gb = g % B.dim(by, bz);
        auto ca = A.compose_basis(ax, ay, az, fa, ga);
        auto cb = B.compose_basis(bx, by, bz, fb, gb);
        std::vector<F> out((size_t)A.dim(ax, az) * B.dim(bx, bz));
        for (int i = 0; i < A.dim(ax, az); ++i)
            for (int j = 0; j < B.dim(bx, bz); ++j) out[i * B.dim(bx, bz) + j] = ca[i] * cb[j];
        return out;
    });

    // generators: f (x) id and id (x) g
    for (const Gen<F>& g : A.gens)
        for (int b = 0; b < nb; ++b) {
            int db = B.dim(b, b);
            std::vector<F> v((size_t)g.coords.size() * db, F::zero());
            for (int i = 0; i < (int)g.coords.size(); ++i)
                for (int j = 0; j < db; ++j) v[i * db + j] = g.coords[i] * B.id_coords[b][j];
            T.gens.push_back({oid(g.src, b), oid(g.tgt, b), std::move(v), g.label + "(x)id"});
        }
    for (const Gen<F>& g : B.gens)
        for (int a = 0; a < na; ++a) {
            int da = A.dim(a, a), db = (int)g.coords.size();
            std::vector<F> v((size_t)da * db, F::zero());
            for (int i = 0; i < da; ++i)
                for (int j = 0; j < db; ++j) v[i * db + j] = A.id_coords[a][i] * g.coords[j];
            T.gens.push_back({oid(a, g.src), oid(a, g.tgt), std::move(v), "id(x)" + g.label});
        }
    return T;
}

template <class F>
PresentedCategory<F> enveloping(const PresentedCategory<F>& C) {
    return tensor_category(opposite(C), C);
}

// -- two-sided ideals and quotients --

template <class F>
struct CatIdeal {
    std::vector<std::vector<IncSpan<F>>> span;  // [x][y]

    int dim(int x, int y) const { return span[x][y].dim(); }
    bool contains(int x, int y, const std::vector<F>& v) const { return span[x][y].contains(v); }

    int total_dim() const {
        int t = 0;
        for (const auto& row : span)
            for (const auto& s : row) t += s.dim();
        return t;
    }
};

/* Saturates the span of the given morphisms (src, tgt, coords) under
   composition with category generators on both sides. */
template <class F>
CatIdeal<F> ideal_from_generators(const PresentedCategory<F>& C,
                                  const std::vector<std::tuple<int, int, std::vector<F>>>& seeds) {
    int n = C.n();
    CatIdeal<F> I;
    I.span.resize(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) I.span[x].push_back(IncSpan<F>(C.dim(x, y)));

    std::vector<std::tuple<int, int, std::vector<F>>> work;
    auto push = [&](int x, int y, std::vector<F> v) {
        if (I.span[x][y].add(v)) work.push_back({x, y, std::move(v)});
    };
    for (const auto& [x, y, v] : seeds) push(x, y, v);

    while (!work.empty()) {
        auto [x, y, v] = std::move(work.back());
        work.pop_back();
        for (const Gen<F>& g : C.gens) {
            if (g.src == y) push(x, g.tgt, C.compose(x, y, g.tgt, v, g.coords));
            if (g.tgt == x) push(g.src, y, C.compose(g.src, x, y, g.coords, v));
        }
    }
    return I;
}

/* Resolves an ideal declaration (arrow-word generators) against a category
   built from the same quiver. */
template <class F>
CatIdeal<F> ideal_from_decl(const PresentedCategory<F>& C, const QuiverSpec& q, const IdealDecl& d) {
    std::vector<std::tuple<int, int, std::vector<F>>> seeds;
    for (const IdealGen& g : d.gens) {
        if (g.is_identity) {
            seeds.push_back({g.vertex, g.vertex, C.id_coords[g.vertex]});
            continue;
        }
        std::vector<F> v(C.dim(g.src, g.tgt), F::zero());
        for (const RelTerm& t : g.terms) add_scaled(v, path_vector(C, q, t.path), F::from_rational(t.coeff));
        seeds.push_back({g.src, g.tgt, std::move(v)});
    }
    return ideal_from_generators(C, seeds);
}

template <class F>
bool ideal_is_idempotent(const PresentedCategory<F>& C, const CatIdeal<F>& I) {
    int n = C.n();
    // I^2 span
    CatIdeal<F> sq;
    sq.span.resize(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) sq.span[x].push_back(IncSpan<F>(C.dim(x, y)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto a = I.span[x][y].as_columns();
            for (int z = 0; z < n; ++z) {
                auto b = I.span[y][z].as_columns();
                for (int i = 0; i < a.cols(); ++i)
                    for (int j = 0; j < b.cols(); ++j) sq.span[x][z].add(C.compose(x, y, z, a.col(i), b.col(j)));
            }
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (sq.dim(x, y) != I.dim(x, y)) return false;
    return true;
}

/* C/I together with the per-hom projection data needed to move morphisms
   back and forth. Objects whose identity dies keep index but lose all homs. */
template <class F>
struct Quotient {
    PresentedCategory<F> cat;
    std::vector<std::vector<QuotientSpace<F>>> q;  // [x][y]

    std::vector<F> project(int x, int y, const std::vector<F>& v) const { return q[x][y].project(v); }
    std::vector<F> lift(int x, int y, const std::vector<F>& v) const { return q[x][y].lift(v); }
};

template <class F>
Quotient<F> quotient_category(const PresentedCategory<F>& C, const CatIdeal<F>& I) {
    int n = C.n();
    Quotient<F> Q;
    Q.cat.init_shape(n);
    Q.q.assign(n, std::vector<QuotientSpace<F>>(n));
    for (int x = 0; x < n; ++x) {
        Q.cat.objects[x] = C.objects[x];
        for (int y = 0; y < n; ++y) {
            Q.q[x][y] = quotient_space(I.span[x][y].as_columns(), C.dim(x, y));
            for (int rc : Q.q[x][y].rep_coords) Q.cat.basis[x][y].push_back(C.basis[x][y][rc]);
        }
    }
    for (int x = 0; x < n; ++x) Q.cat.id_coords[x] = Q.q[x][x].project(C.id_coords[x]);
    Q.cat.build_tables([&](int x, int y, int z, int f, int g) {
        auto lf = Q.q[x][y].lift(Q.cat.unit(x, y, f));
        auto lg = Q.q[y][z].lift(Q.cat.unit(y, z, g));
        return Q.q[x][z].project(C.compose(x, y, z, lf, lg));
    });
    for (const Gen<F>& g : C.gens) {
        auto v = Q.q[g.src][g.tgt].project(g.coords);
        Q.cat.gens.push_back({g.src, g.tgt, std::move(v), g.label});
    }
    return Q;
}

}  // namespace homcat
