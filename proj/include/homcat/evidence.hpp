#pragma once

#include <json.hpp>

#include "homcat/bimod.hpp"
#include "homcat/sie.hpp"

namespace homcat {

using ordered_json = nlohmann::ordered_json;

/* Printable field tag for reports: "q" or "gf:P". */
template <class F>
std::string field_tag() {
    return F::field_name();
}
template <>
inline std::string field_tag<Gfp>() {
    return "gf:" + std::to_string(Gfp::modulus());
}

/* pd of the pushed-down quotient representables over C, per object. */
struct PerfectPreservation {
    bool ok = false;  // every pd finite within the degree bound
    int max_pd = 0;
    std::vector<std::string> names;
    std::vector<std::optional<int>> pd;
};

template <class F>
PerfectPreservation check_perfect_preservation(const SIEContext<F>& ctx, int n) {
    PerfectPreservation out;
    out.ok = true;
    for (int c = 0; c < ctx.n(); ++c) {
        Rep<F> M = pullback(ctx, yoneda_projective(ctx.Q.cat, c).rep);
        auto p = projective_dimension(M, n);
        out.names.push_back(ctx.Q.cat.objects[c]);
        out.pd.push_back(p);
        if (!p)
            out.ok = false;
        else
            out.max_pd = std::max(out.max_pd, *p);
    }
    return out;
}

/* Global dimension bound from the simples: "<= bound" or "> degree". */
struct GldimBound {
    bool finite = false;
    int bound = 0;
    int degree = 0;

    std::string str() const { return finite ? "<= " + std::to_string(bound) : "> " + std::to_string(degree); }
};

template <class F>
GldimBound gldim_bound(const PresentedCategory<F>& C, int n) {
    GldimBound g;
    g.finite = true;
    g.degree = n;
    for (const Rep<F>& S : simples(C)) {
        auto p = projective_dimension(S, n);
        if (!p) {
            g.finite = false;
            g.bound = 0;
            return g;
        }
        g.bound = std::max(g.bound, *p);
    }
    return g;
}

/* One row of the Ext-comparison table. */
struct StableExtRow {
    std::string f, f2;
    int degree = 0;
    int dim_quot = 0;
    int dim_full = 0;
    bool iso = false;
};

template <class F>
std::vector<StableExtRow> stable_ext_comparison(const SIEContext<F>& ctx, const std::vector<Rep<F>>& mods,
                                                const std::vector<std::string>& names, int maxdeg) {
    std::vector<StableExtRow> rows;
    for (size_t a = 0; a < mods.size(); ++a) {
        if (mods[a].is_zero()) continue;
        ComparisonKit<F> kit = make_comparison_kit(ctx, mods[a], maxdeg);
        for (size_t b = 0; b < mods.size(); ++b) {
            if (mods[b].is_zero()) continue;
            for (int i = 0; i <= maxdeg; ++i) {
                auto p = phi_map(ctx, kit, mods[b], i);
                rows.push_back({names[a], names[b], i, p.dim_quot, p.dim_full, p.iso});
            }
        }
    }
    return rows;
}

struct EvidenceReport {
    std::string category_id;
    std::string ideal_id;
    std::string field;
    int degree = 0;
    SIECertificate sie;
    std::optional<int> bimodule_pd;
    int bimodule_pd_cap = 0;
    PerfectPreservation perfect;
    GldimBound gldim_cat;
    GldimBound gldim_quot;
    std::vector<StableExtRow> stable_ext;
    std::string verdict;  // SUPPORTED | REFUTED-HYPOTHESIS | INCONCLUSIVE(n)
};

/* Names for the simples of a category: S(x) at the object x carrying the
   first nonzero value. */
template <class F>
std::vector<std::string> simple_names(const PresentedCategory<F>& C, const std::vector<Rep<F>>& ss) {
    std::vector<std::string> names;
    for (size_t k = 0; k < ss.size(); ++k) {
        std::string at = "?";
        for (int x = 0; x < C.n(); ++x)
            if (ss[k].dims[x] > 0) {
                at = C.objects[x];
                break;
            }
        names.push_back("S(" + at + ")");
    }
    return names;
}

template <class F>
EvidenceReport build_report(const PresentedCategory<F>& C, CatIdeal<F> I, int n,
                            const std::string& category_id = "C", const std::string& ideal_id = "I") {
    EvidenceReport r;
    r.category_id = category_id;
    r.ideal_id = ideal_id;
    r.field = field_tag<F>();
    r.degree = n;

    SIEContext<F> ctx = make_sie_context(C, std::move(I));
    r.sie = check_strongly_idempotent(ctx, n);

    auto bctx = make_bimod_context(C);
    auto reg = regular_bimodule(bctx);
    auto IB = ideal_bimodule(bctx, reg, ctx.I);
    r.bimodule_pd = bimodule_pd(IB.rep, n);
    r.bimodule_pd_cap = n;

    r.perfect = check_perfect_preservation(ctx, n);
    r.gldim_cat = gldim_bound(C, n);
    r.gldim_quot = gldim_bound(ctx.Q.cat, n);

    auto ss = simples(ctx.Q.cat);
    r.stable_ext = stable_ext_comparison(ctx, ss, simple_names(ctx.Q.cat, ss), n);

    bool consequences_ok = r.perfect.ok;
    for (const auto& row : r.stable_ext)
        if (!row.iso) consequences_ok = false;

    if (!r.sie.pass)
        r.verdict = "REFUTED-HYPOTHESIS";
    else if (r.bimodule_pd.has_value() && consequences_ok)
        r.verdict = "SUPPORTED";
    else
        r.verdict = "INCONCLUSIVE(" + std::to_string(n) + ")";
    return r;
}

// -- serialization --

inline ordered_json to_json(const SIECertificate& c) {
    ordered_json j;
    j["pass"] = c.pass;
    j["idempotent"] = c.idempotent;
    j["witness"] = c.idempotency_witness;
    j["shortcut"] = c.shortcut;
    j["degree"] = c.degree;
    ordered_json arr = ordered_json::array();
    for (const auto& cr : c.criteria) {
        ordered_json e;
        e["name"] = cr.name;
        e["verdict"] = cr.verdict;
        if (!cr.witness.empty()) e["witness"] = cr.witness;
        if (cr.degree >= 0) e["degree"] = cr.degree;
        if (cr.dim > 0) e["dim"] = cr.dim;
        arr.push_back(std::move(e));
    }
    j["criteria"] = std::move(arr);
    return j;
}

inline ordered_json to_json(const EvidenceReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["category"] = r.category_id;
    j["ideal"] = r.ideal_id;
    j["field"] = r.field;
    j["degree"] = r.degree;

    ordered_json hyp;
    hyp["strongly_idempotent"] = to_json(r.sie);
    if (r.bimodule_pd)
        hyp["bimodule_pd"] = *r.bimodule_pd;
    else
        hyp["bimodule_pd"] = "> " + std::to_string(r.bimodule_pd_cap);
    j["hypothesis"] = std::move(hyp);

    ordered_json cons;
    ordered_json pp;
    pp["ok"] = r.perfect.ok;
    pp["max_pd"] = r.perfect.max_pd;
    ordered_json per;
    for (size_t k = 0; k < r.perfect.names.size(); ++k) {
        if (r.perfect.pd[k])
            per[r.perfect.names[k]] = *r.perfect.pd[k];
        else
            per[r.perfect.names[k]] = "> " + std::to_string(r.degree);
    }
    pp["per_object"] = std::move(per);
    cons["perfect_preservation"] = std::move(pp);
    cons["gldim"] = {{"category", r.gldim_cat.str()}, {"quotient", r.gldim_quot.str()}};
    ordered_json tbl = ordered_json::array();
    for (const auto& row : r.stable_ext) {
        ordered_json e;
        e["f"] = row.f;
        e["f2"] = row.f2;
        e["i"] = row.degree;
        e["dim_quotient"] = row.dim_quot;
        e["dim_category"] = row.dim_full;
        e["iso"] = row.iso;
        tbl.push_back(std::move(e));
    }
    cons["stable_ext"] = std::move(tbl);
    j["consequences"] = std::move(cons);

    j["verdict"] = r.verdict;
    return j;
}

/* Human-readable rendering of the report. */
inline std::string render_report(const EvidenceReport& r) {
    std::string s;
    s += "category: " + r.category_id + "   ideal: " + r.ideal_id + "   field: " + r.field + "   degree: " +
         std::to_string(r.degree) + "\n";
    s += "strongly idempotent: " + std::string(r.sie.pass ? "PASS" : "FAIL");
    if (r.sie.shortcut) s += " (shortcut: all I(c,-) projective)";
    if (!r.sie.idempotent) s += " (not idempotent; witness: " + r.sie.idempotency_witness + ")";
    s += "\n";
    for (const auto& cr : r.sie.criteria) {
        s += "  criterion " + cr.name + ": " + cr.verdict;
        if (!cr.witness.empty()) s += " [" + cr.witness + "]";
        s += "\n";
    }
    s += "bimodule pd: " + (r.bimodule_pd ? std::to_string(*r.bimodule_pd)
                                          : "> " + std::to_string(r.bimodule_pd_cap)) +
         "\n";
    s += "perfect preservation: " + std::string(r.perfect.ok ? "ok" : "FAILED") +
         " (max pd = " + std::to_string(r.perfect.max_pd) + ")\n";
    s += "gl.dim " + r.category_id + ": " + r.gldim_cat.str() + "\n";
    s += "gl.dim " + r.category_id + "/" + r.ideal_id + ": " + r.gldim_quot.str() + "\n";
    int mism = 0;
    for (const auto& row : r.stable_ext)
        if (!row.iso) ++mism;
    s += "ext comparison rows: " + std::to_string(r.stable_ext.size()) + ", mismatches: " + std::to_string(mism) +
         "\n";
    s += "verdict: " + r.verdict + "\n";
    return s;
}

}  // namespace homcat
