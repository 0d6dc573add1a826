#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homcat/evidence.hpp"
#include "homcat/matrixcat.hpp"

namespace {

using namespace homcat;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct Opts {
    std::string file;
    std::string field;  // "", "q", or "gf:P"
    int degree = 8;
    int truncate = 0;
    std::string format = "text";
    unsigned long seed = 0;
    std::string out;
    // per-command extras
    std::string module_name, module2_name, ideal_name;
    int index = 0;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FileSpec load_spec(Opts& o) {
    std::ifstream in(o.file);
    if (!in) throw InputError("cannot open '" + o.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    FileSpec fs = parse_file(ss.str());
    if (o.truncate > 0) fs.quiver.lmax = o.truncate;
    return fs;
}

void emit(const Opts& o, const ordered_json& j, const std::string& text) {
    std::string payload = (o.format == "json") ? j.dump(2) + "\n" : text;
    if (o.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out);
        if (!f) throw InputError("cannot write '" + o.out + "'");
        f << payload;
    }
}

ordered_json base_json(const Opts& o, const char* command) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["input"] = o.file;
    j["degree"] = o.degree;
    j["seed"] = o.seed;
    return j;
}

template <class F>
Rep<F> named_module(const PresentedCategory<F>& C, const FileSpec& fs, const std::string& name) {
    const ModuleDecl* d = fs.find_module(name);
    if (!d) throw InputError("no module named '" + name + "' in the spec");
    return rep_from_decl(C, fs.quiver, *d);
}

template <class F>
CatIdeal<F> named_ideal(const PresentedCategory<F>& C, const FileSpec& fs, const std::string& name) {
    const IdealDecl* d = fs.find_ideal(name);
    if (!d) throw InputError("no ideal named '" + name + "' in the spec");
    return ideal_from_decl(C, fs.quiver, *d);
}

int verdict_exit(const std::string& v) { return v == "SUPPORTED" ? kExitOk : kExitFailed; }

// -- commands --

template <class F>
int cmd_build(Opts& o) {
    FileSpec fs = load_spec(o);
    auto adm = check_admissible<F>(fs.quiver);
    ordered_json j = base_json(o, "build");
    j["field"] = field_tag<F>();
    j["admissible"] = adm.ok;
    if (!adm.ok) {
        j["witness"] = adm.witness;
        emit(o, j, "not admissible at lmax " + std::to_string(fs.quiver.lmax) + ": path '" + adm.witness +
                       "' survives\n");
        return kExitFailed;
    }
    auto C = build_category<F>(fs.quiver);
    j["objects"] = C.objects;
    j["total_dim"] = C.total_dim();
    ordered_json dims;
    std::string text = "objects: " + std::to_string(C.n()) + ", total hom dim: " + std::to_string(C.total_dim()) +
                       ", admissible at lmax " + std::to_string(fs.quiver.lmax) + "\n";
    for (int x = 0; x < C.n(); ++x)
        for (int y = 0; y < C.n(); ++y)
            if (C.dim(x, y) > 0) {
                std::string key = C.objects[x] + "->" + C.objects[y];
                dims[key] = C.dim(x, y);
                text += "  hom(" + C.objects[x] + "," + C.objects[y] + ") = " + std::to_string(C.dim(x, y)) + "\n";
            }
    j["hom_dims"] = std::move(dims);
    emit(o, j, text);
    return kExitOk;
}

template <class F>
int cmd_ext(Opts& o) {
    FileSpec fs = load_spec(o);
    auto C = build_category<F>(fs.quiver);
    Rep<F> M = named_module(C, fs, o.module_name);
    Rep<F> N = named_module(C, fs, o.module2_name);
    int d = ext_dim(M, N, o.index);
    ordered_json j = base_json(o, "ext");
    j["field"] = field_tag<F>();
    j["M"] = o.module_name;
    j["N"] = o.module2_name;
    j["i"] = o.index;
    j["dim"] = d;
    emit(o, j,
         "dim Ext^" + std::to_string(o.index) + "(" + o.module_name + "," + o.module2_name + ") = " +
             std::to_string(d) + "\n");
    return kExitOk;
}

template <class F>
int cmd_check_sie(Opts& o) {
    FileSpec fs = load_spec(o);
    auto C = build_category<F>(fs.quiver);
    auto ctx = make_sie_context(C, named_ideal(C, fs, o.ideal_name));
    SIECertificate cert = check_strongly_idempotent(ctx, o.degree);
    ordered_json j = base_json(o, "check-sie");
    j["field"] = field_tag<F>();
    j["ideal"] = o.ideal_name;
    j["certificate"] = to_json(cert);
    std::string text = "strongly idempotent: " + std::string(cert.pass ? "PASS" : "FAIL") + " (degree " +
                       std::to_string(cert.degree) + ")\n";
    if (!cert.idempotent) text += "  not idempotent; witness: " + cert.idempotency_witness + "\n";
    if (cert.shortcut) text += "  shortcut: every I(c,-) is projective\n";
    for (const auto& cr : cert.criteria) {
        text += "  criterion " + cr.name + ": " + cr.verdict;
        if (!cr.witness.empty()) text += " [" + cr.witness + "]";
        text += "\n";
    }
    emit(o, j, text);
    return cert.pass ? kExitOk : kExitFailed;
}

template <class F>
int cmd_report(Opts& o) {
    FileSpec fs = load_spec(o);
    auto C = build_category<F>(fs.quiver);
    EvidenceReport r = build_report(C, named_ideal(C, fs, o.ideal_name), o.degree, o.file, o.ideal_name);
    ordered_json j = base_json(o, "report");
    j["report"] = to_json(r);
    emit(o, j, render_report(r));
    return verdict_exit(r.verdict);
}

template <class F>
int cmd_one_point(Opts& o) {
    FileSpec fs = load_spec(o);
    auto U = build_category<F>(fs.quiver);
    Rep<F> M = named_module(U, fs, o.module_name);
    Triangular<F> L = one_point_extension(U, M);
    KernelIdeal<F> K = kernel_ideal(L);
    auto slices = verify_representable_slices(L, K.I);
    auto bim = verify_bimodule_projectivity(L, K.I);
    EvidenceReport r =
        build_report(L.cat, K.I, o.degree, "one-point(" + o.file + "," + o.module_name + ")", "kernel");

    ordered_json j = base_json(o, "one-point");
    j["module"] = o.module_name;
    ordered_json op;
    op["kernel_ideal_ok"] = K.ok();
    op["quotient_is_base"] = K.quotient_is_U;
    op["slices_projective"] = slices.ok;
    op["bimodule_dims_match"] = bim.dims_match;
    op["bimodule_natural_iso"] = bim.natural_iso;
    if (bim.pd)
        op["bimodule_pd"] = *bim.pd;
    else
        op["bimodule_pd"] = "> 3";
    j["one_point"] = std::move(op);
    j["report"] = to_json(r);

    std::string text = "one-point extension by '" + o.module_name + "'\n";
    text += "kernel ideal checks: " + std::string(K.ok() ? "ok" : "FAILED") + "\n";
    text += "slices projective: " + std::string(slices.ok ? "yes" : "NO") + "\n";
    text += "bimodule check: " + std::string(bim.ok() ? "ok" : "FAILED") + "\n";
    text += render_report(r);
    emit(o, j, text);

    bool extras = K.ok() && slices.ok && bim.ok();
    return (extras && r.verdict == "SUPPORTED") ? kExitOk : kExitFailed;
}

/* Pick the field from --field or the spec's field declaration. */
int dispatch(Opts& o, int (*fq)(Opts&), int (*fgf)(Opts&)) {
    std::string tag = o.field;
    if (tag.empty()) {
        // peek at the spec's own declaration
        FileSpec fs = load_spec(o);
        if (fs.quiver.field == FieldKind::Q) {
            tag = "q";
        } else {
            tag = "gf:" + std::to_string(fs.quiver.prime);
        }
    }
    if (tag == "q") return fq(o);
    if (tag.rfind("gf:", 0) == 0) {
        unsigned long long p = 0;
        try {
            p = std::stoull(tag.substr(3));
        } catch (const std::exception&) {
            throw InputError("bad field tag '" + tag + "'");
        }
        Gfp::set_modulus(p);
        return fgf(o);
    }
    throw InputError("unknown field '" + tag + "' (expected q or gf:P)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological algebra over finitely presented K-linear categories"};
    app.require_subcommand(1);

    Opts o;
    auto add_common = [&](CLI::App* c) {
        c->add_option("file", o.file, "input .quiver spec")->required();
        c->add_option("--field", o.field, "field override: q or gf:P");
        c->add_option("--degree", o.degree, "certificate degree bound")->check(CLI::PositiveNumber);
        c->add_option("--truncate", o.truncate, "override the truncation length lmax");
        c->add_option("--format", o.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        c->add_option("--seed", o.seed, "seed echoed into reports");
        c->add_option("--out", o.out, "write output to a file instead of stdout");
    };

    CLI::App* cb = app.add_subcommand("build", "build the category and print a summary");
    add_common(cb);
    CLI::App* ce = app.add_subcommand("ext", "dim Ext^i between two declared modules");
    add_common(ce);
    ce->add_option("-M,--module", o.module_name, "source module name")->required();
    ce->add_option("-N,--module2", o.module2_name, "target module name")->required();
    ce->add_option("-i,--index", o.index, "cohomological degree")->check(CLI::NonNegativeNumber);
    CLI::App* cs = app.add_subcommand("check-sie", "strongly-idempotent-ideal certificate");
    add_common(cs);
    cs->add_option("--ideal", o.ideal_name, "ideal name from the spec")->required();
    CLI::App* cp = app.add_subcommand("one-point", "one-point extension evidence report");
    add_common(cp);
    cp->add_option("-M,--module", o.module_name, "module to extend by")->required();
    CLI::App* cr = app.add_subcommand("report", "full evidence report for a declared ideal");
    add_common(cr);
    cr->add_option("--ideal", o.ideal_name, "ideal name from the spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (cb->parsed()) return dispatch(o, &cmd_build<Rational>, &cmd_build<Gfp>);
        if (ce->parsed()) return dispatch(o, &cmd_ext<Rational>, &cmd_ext<Gfp>);
        if (cs->parsed()) return dispatch(o, &cmd_check_sie<Rational>, &cmd_check_sie<Gfp>);
        if (cp->parsed()) return dispatch(o, &cmd_one_point<Rational>, &cmd_one_point<Gfp>);
        if (cr->parsed()) return dispatch(o, &cmd_report<Rational>, &cmd_report<Gfp>);
    } catch (const ParseError& e) {
        std::cerr << "error: " << o.file << ":" << e.what() << "\n";
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << o.file << ":" << e.what() << "\n";
        return kExitInput;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const FieldMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitInput;
}
