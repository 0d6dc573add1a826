#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcat/fields.hpp"
#include "homcat/linalg.hpp"

namespace homcat {

struct SourcePos {
    int line = 1;
    int col = 1;
};

struct ParseError : std::runtime_error {
    ParseError(SourcePos p, const std::string& msg)
        : std::runtime_error(std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + msg), pos(p) {}
    SourcePos pos;
};

struct ValidationError : std::runtime_error {
    ValidationError(SourcePos p, const std::string& msg)
        : std::runtime_error(std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + msg), pos(p) {}
    SourcePos pos;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string name;
    int src = -1, tgt = -1;
    bool operator==(const Arrow& o) const { return name == o.name && src == o.src && tgt == o.tgt; }
};

/* One K-linear combination of parallel paths. Paths are stored in traversal
   order: the textual path "c*b*a" (c after b after a) becomes {a,b,c}. */
struct RelTerm {
    Rational coeff;
    std::vector<int> path;  // arrow ids
    bool operator==(const RelTerm& o) const { return coeff == o.coeff && path == o.path; }
};

struct Relation {
    std::vector<RelTerm> terms;
    int src = -1, tgt = -1;
    bool operator==(const Relation& o) const { return terms == o.terms && src == o.src && tgt == o.tgt; }
};

enum class FieldKind { Gf, Q };

struct QuiverSpec {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    FieldKind field = FieldKind::Gf;
    std::uint64_t prime = 32003;
    int lmax = 0;

    bool operator==(const QuiverSpec& o) const {
        return vertices == o.vertices && arrows == o.arrows && relations == o.relations && field == o.field &&
               prime == o.prime && lmax == o.lmax;
    }

    int vertex_index(const std::string& v) const {
        auto it = std::find(vertices.begin(), vertices.end(), v);
        return it == vertices.end() ? -1 : (int)(it - vertices.begin());
    }
    int arrow_index(const std::string& a) const {
        for (int i = 0; i < (int)arrows.size(); ++i)
            if (arrows[i].name == a) return i;
        return -1;
    }

    bool has_cycle() const {
        int n = (int)vertices.size();
        std::vector<int> state(n, 0);
        std::vector<std::vector<int>> out(n);
        for (const Arrow& a : arrows) out[a.src].push_back(a.tgt);
        // iterative DFS
        for (int s = 0; s < n; ++s) {
            if (state[s]) continue;
            std::vector<std::pair<int, size_t>> stack{{s, 0}};
            state[s] = 1;
            while (!stack.empty()) {
                auto& [v, i] = stack.back();
                if (i < out[v].size()) {
                    int w = out[v][i++];
                    if (state[w] == 1) return true;
                    if (state[w] == 0) {
                        state[w] = 1;
                        stack.push_back({w, 0});
                    }
                } else {
                    state[v] = 2;
                    stack.pop_back();
                }
            }
        }
        return false;
    }
};

struct ModuleDecl {
    std::string name;
    std::vector<int> dims;                          // per vertex
    std::map<std::string, Matrix<Rational>> maps;   // per arrow name; missing = zero
    bool operator==(const ModuleDecl& o) const { return name == o.name && dims == o.dims && maps == o.maps; }
};

/* Ideal generator: either id(v) or a parallel path combination (length >= 1). */
struct IdealGen {
    bool is_identity = false;
    int vertex = -1;
    std::vector<RelTerm> terms;
    int src = -1, tgt = -1;
    bool operator==(const IdealGen& o) const {
        return is_identity == o.is_identity && vertex == o.vertex && terms == o.terms && src == o.src && tgt == o.tgt;
    }
};

struct IdealDecl {
    std::string name;
    std::vector<IdealGen> gens;
    bool operator==(const IdealDecl& o) const { return name == o.name && gens == o.gens; }
};

struct CheckDecl {
    std::string directive;
    std::vector<std::string> args;
    bool operator==(const CheckDecl& o) const { return directive == o.directive && args == o.args; }
};

struct FileSpec {
    QuiverSpec quiver;
    std::vector<ModuleDecl> modules;
    std::vector<IdealDecl> ideals;
    std::vector<CheckDecl> checks;
    bool operator==(const FileSpec& o) const {
        return quiver == o.quiver && modules == o.modules && ideals == o.ideals && checks == o.checks;
    }

    const ModuleDecl* find_module(const std::string& n) const {
        for (const auto& m : modules)
            if (m.name == n) return &m;
        return nullptr;
    }
    const IdealDecl* find_ideal(const std::string& n) const {
        for (const auto& i : ideals)
            if (i.name == n) return &i;
        return nullptr;
    }
};

namespace detail {

enum class TokKind { Ident, Int, Punct, End };

struct Token {
    TokKind kind;
    std::string text;
    SourcePos pos;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.pos = pos_;
        if (i_ >= src_.size()) {
            t.kind = TokKind::End;
            return t;
        }
        char c = src_[i_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            t.kind = TokKind::Ident;
            while (i_ < src_.size() && (std::isalnum((unsigned char)src_[i_]) || src_[i_] == '_')) t.text += take();
            return t;
        }
        if (std::isdigit((unsigned char)c)) {
            t.kind = TokKind::Int;
            while (i_ < src_.size() && std::isdigit((unsigned char)src_[i_])) t.text += take();
            return t;
        }
        if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
            t.kind = TokKind::Punct;
            t.text = "->";
            take();
            take();
            return t;
        }
        t.kind = TokKind::Punct;
        t.text = std::string(1, take());
        return t;
    }

  private:
    char take() {
        char c = src_[i_++];
        if (c == '\n') {
            pos_.line++;
            pos_.col = 1;
        } else {
            pos_.col++;
        }
        return c;
    }
    void skip_ws() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '#') {
                while (i_ < src_.size() && src_[i_] != '\n') take();
            } else if (std::isspace((unsigned char)c)) {
                take();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    size_t i_ = 0;
    SourcePos pos_;
};

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    FileSpec parse_file() {
        FileSpec fs;
        bool have_vertices = false;
        while (cur_.kind != TokKind::End) {
            Token kw = expect_ident("section keyword");
            if (kw.text == "field") {
                parse_field(fs.quiver);
            } else if (kw.text == "vertices") {
                parse_vertices(fs.quiver);
                have_vertices = true;
            } else if (kw.text == "arrow" || kw.text == "arrows") {
                require(have_vertices, kw.pos, "arrows before vertices");
                parse_arrows(fs.quiver);
            } else if (kw.text == "lmax") {
                Token n = expect_int("truncation length");
                fs.quiver.lmax = to_small_int(n, 1, 64);
                expect_punct(";");
            } else if (kw.text == "relation" || kw.text == "relations") {
                require(have_vertices, kw.pos, "relations before arrows");
                parse_relations(fs.quiver);
            } else if (kw.text == "module") {
                fs.modules.push_back(parse_module(fs.quiver));
            } else if (kw.text == "ideal") {
                fs.ideals.push_back(parse_ideal(fs.quiver));
            } else if (kw.text == "check") {
                fs.checks.push_back(parse_check());
            } else {
                throw ParseError(kw.pos, "unknown section '" + kw.text + "'");
            }
        }
        finalize(fs.quiver);
        return fs;
    }

  private:
    void parse_field(QuiverSpec& q) {
        Token t = expect_ident("field name");
        if (t.text == "q") {
            q.field = FieldKind::Q;
        } else if (t.text == "gf") {
            q.field = FieldKind::Gf;
            if (cur_.kind == TokKind::Int) {
                Token p = expect_int("modulus");
                q.prime = (std::uint64_t)to_small_int(p, 2, (1ll << 31) - 1);
                if (!Gfp::is_prime(q.prime)) throw ValidationError(p.pos, "modulus " + p.text + " is not prime");
            }
        } else {
            throw ParseError(t.pos, "field must be 'gf' or 'q'");
        }
        expect_punct(";");
    }

    void parse_vertices(QuiverSpec& q) {
        while (cur_.kind == TokKind::Ident || cur_.kind == TokKind::Int) {
            Token v = cur_;
            advance();
            if (q.vertex_index(v.text) >= 0) throw ValidationError(v.pos, "duplicate vertex '" + v.text + "'");
            q.vertices.push_back(v.text);
        }
        expect_punct(";");
    }

    void parse_arrows(QuiverSpec& q) {
        for (;;) {
            Token name = expect_name("arrow name");
            if (q.arrow_index(name.text) >= 0) throw ValidationError(name.pos, "duplicate arrow '" + name.text + "'");
            expect_punct(":");
            Token s = expect_name("source vertex");
            expect_punct("->");
            Token t = expect_name("target vertex");
            int si = q.vertex_index(s.text), ti = q.vertex_index(t.text);
            if (si < 0) throw ValidationError(s.pos, "unknown vertex '" + s.text + "'");
            if (ti < 0) throw ValidationError(t.pos, "unknown vertex '" + t.text + "'");
            q.arrows.push_back({name.text, si, ti});
            if (accept_punct(",")) continue;
            expect_punct(";");
            break;
        }
    }

    void parse_relations(QuiverSpec& q) {
        for (;;) {
            q.relations.push_back(parse_relation(q));
            if (accept_punct(",")) continue;
            expect_punct(";");
            break;
        }
    }

    Relation parse_relation(const QuiverSpec& q) {
        SourcePos at = cur_.pos;
        std::vector<RelTerm> terms = parse_lincomb(q);
        Relation r;
        r.terms = std::move(terms);
        for (const RelTerm& t : r.terms)
            if ((int)t.path.size() < 2)
                throw ValidationError(at, "relation contains a path of length < 2");
        set_endpoints(q, r.terms, r.src, r.tgt, at);
        return r;
    }

    std::vector<RelTerm> parse_lincomb(const QuiverSpec& q) {
        std::vector<RelTerm> terms;
        bool neg = accept_punct("-");
        for (;;) {
            RelTerm t = parse_term(q);
            if (neg) t.coeff = -t.coeff;
            if (!t.coeff.is_zero()) terms.push_back(std::move(t));
            if (accept_punct("+")) {
                neg = false;
            } else if (accept_punct("-")) {
                neg = true;
            } else {
                break;
            }
        }
        return terms;
    }

    RelTerm parse_term(const QuiverSpec& q) {
        RelTerm t;
        t.coeff = Rational::one();
        if (cur_.kind == TokKind::Int) {
            Token n = expect_int("coefficient");
            bigint num(n.text);
            bigint den(1);
            if (accept_punct("/")) {
                Token d = expect_int("denominator");
                den = bigint(d.text);
                if (den == 0) throw ParseError(d.pos, "zero denominator");
            }
            t.coeff = Rational(num, den);
        }
        // path: name ('*' name)*  read right-to-left
        std::vector<int> rev;
        for (;;) {
            Token a = expect_ident("arrow name");
            int ai = q.arrow_index(a.text);
            if (ai < 0) throw ValidationError(a.pos, "unknown arrow '" + a.text + "'");
            rev.push_back(ai);
            if (!accept_punct("*")) break;
        }
        t.path.assign(rev.rbegin(), rev.rend());
        return t;
    }

    void set_endpoints(const QuiverSpec& q, const std::vector<RelTerm>& terms, int& src, int& tgt, SourcePos at) {
        bool first = true;
        for (const RelTerm& t : terms) {
            int s = -1, e = -1, prev = -1;
            for (size_t i = 0; i < t.path.size(); ++i) {
                const Arrow& a = q.arrows[t.path[i]];
                if (i == 0)
                    s = a.src;
                else if (a.src != prev)
                    throw ValidationError(at, "path is not composable at arrow '" + a.name + "'");
                prev = a.tgt;
            }
            e = prev;
            if (first) {
                src = s;
                tgt = e;
                first = false;
            } else if (s != src || e != tgt) {
                throw ValidationError(at, "terms of a combination are not parallel");
            }
        }
    }

    ModuleDecl parse_module(const QuiverSpec& q) {
        ModuleDecl m;
        Token name = expect_name("module name");
        m.name = name.text;
        m.dims.assign(q.vertices.size(), 0);
        expect_punct("{");
        while (!accept_punct("}")) {
            Token kw = expect_ident("'dim' or 'map'");
            if (kw.text == "dim") {
                Token v = expect_name("vertex");
                int vi = q.vertex_index(v.text);
                if (vi < 0) throw ValidationError(v.pos, "unknown vertex '" + v.text + "'");
                expect_punct("=");
                Token d = expect_int("dimension");
                m.dims[vi] = to_small_int(d, 0, 4096);
                expect_punct(";");
            } else if (kw.text == "dims") {
                for (size_t i = 0; i < q.vertices.size(); ++i) {
                    Token d = expect_int("dimension");
                    m.dims[i] = to_small_int(d, 0, 4096);
                }
                expect_punct(";");
            } else if (kw.text == "map") {
                Token a = expect_name("arrow");
                if (q.arrow_index(a.text) < 0) throw ValidationError(a.pos, "unknown arrow '" + a.text + "'");
                expect_punct("=");
                m.maps[a.text] = parse_matrix();
                expect_punct(";");
            } else {
                throw ParseError(kw.pos, "expected 'dim', 'dims' or 'map'");
            }
        }
        return m;
    }

    Matrix<Rational> parse_matrix() {
        SourcePos at = cur_.pos;
        expect_punct("[");
        std::vector<std::vector<Rational>> rows;
        if (!accept_punct("]")) {
            for (;;) {
                rows.push_back(parse_row());
                if (accept_punct(",")) continue;
                expect_punct("]");
                break;
            }
        }
        size_t w = rows.empty() ? 0 : rows[0].size();
        for (const auto& r : rows)
            if (r.size() != w) throw ValidationError(at, "ragged matrix literal");
        Matrix<Rational> m((int)rows.size(), (int)w);
        for (int i = 0; i < (int)rows.size(); ++i)
            for (int j = 0; j < (int)w; ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::vector<Rational> parse_row() {
        expect_punct("[");
        std::vector<Rational> row;
        if (accept_punct("]")) return row;
        for (;;) {
            row.push_back(parse_scalar());
            if (accept_punct(",")) continue;
            expect_punct("]");
            break;
        }
        return row;
    }

    Rational parse_scalar() {
        bool neg = accept_punct("-");
        Token n = expect_int("number");
        bigint num(n.text);
        bigint den(1);
        if (accept_punct("/")) {
            Token d = expect_int("denominator");
            den = bigint(d.text);
            if (den == 0) throw ParseError(d.pos, "zero denominator");
        }
        Rational r(num, den);
        return neg ? -r : r;
    }

    IdealDecl parse_ideal(const QuiverSpec& q) {
        IdealDecl d;
        Token name = expect_name("ideal name");
        d.name = name.text;
        expect_punct("=");
        for (;;) {
            d.gens.push_back(parse_ideal_gen(q));
            if (accept_punct(",")) continue;
            expect_punct(";");
            break;
        }
        return d;
    }

    IdealGen parse_ideal_gen(const QuiverSpec& q) {
        IdealGen g;
        SourcePos at = cur_.pos;
        if (cur_.kind == TokKind::Ident && cur_.text == "id") {
            advance();
            expect_punct("(");
            Token v = expect_name("vertex");
            int vi = q.vertex_index(v.text);
            if (vi < 0) throw ValidationError(v.pos, "unknown vertex '" + v.text + "'");
            expect_punct(")");
            g.is_identity = true;
            g.vertex = vi;
            g.src = g.tgt = vi;
            return g;
        }
        g.terms = parse_lincomb(q);
        for (const RelTerm& t : g.terms)
            if (t.path.empty()) throw ValidationError(at, "empty path in ideal generator");
        set_endpoints(q, g.terms, g.src, g.tgt, at);
        return g;
    }

    CheckDecl parse_check() {
        CheckDecl c;
        Token d = expect_ident("check directive");
        c.directive = d.text;
        while (cur_.kind == TokKind::Ident || cur_.kind == TokKind::Int) {
            c.args.push_back(cur_.text);
            advance();
        }
        expect_punct(";");
        return c;
    }

    void finalize(QuiverSpec& q) {
        if (q.lmax == 0) {
            if (q.has_cycle())
                throw ValidationError(SourcePos{}, "quiver has a cycle: 'lmax' is mandatory");
            q.lmax = (int)q.arrows.size() + 1;
        }
    }

    // -- token plumbing --
    void advance() { cur_ = lex_.next(); }
    Token expect_ident(const std::string& what) {
        if (cur_.kind != TokKind::Ident) throw ParseError(cur_.pos, "expected " + what);
        Token t = cur_;
        advance();
        return t;
    }
    Token expect_int(const std::string& what) {
        if (cur_.kind != TokKind::Int) throw ParseError(cur_.pos, "expected " + what);
        Token t = cur_;
        advance();
        return t;
    }
    Token expect_name(const std::string& what) {
        if (cur_.kind != TokKind::Ident && cur_.kind != TokKind::Int)
            throw ParseError(cur_.pos, "expected " + what);
        Token t = cur_;
        advance();
        return t;
    }
    void expect_punct(const std::string& p) {
        if (cur_.kind != TokKind::Punct || cur_.text != p)
            throw ParseError(cur_.pos, "expected '" + p + "'");
        advance();
    }
    bool accept_punct(const std::string& p) {
        if (cur_.kind == TokKind::Punct && cur_.text == p) {
            advance();
            return true;
        }
        return false;
    }
    long long to_small_int(const Token& t, long long lo, long long hi) {
        if (t.text.size() > 12) throw ParseError(t.pos, "number out of range");
        long long v = std::stoll(t.text);
        if (v < lo || v > hi) throw ParseError(t.pos, "number out of range");
        return v;
    }
    void require(bool cond, SourcePos p, const std::string& msg) {
        if (!cond) throw ParseError(p, msg);
    }

    Lexer lex_;
    Token cur_;
};

}  // namespace detail

inline FileSpec parse_file(std::string_view text) { return detail::Parser(text).parse_file(); }

inline QuiverSpec parse_spec(std::string_view text) { return parse_file(text).quiver; }

/* Validates shapes of a module declaration against the quiver. */
inline void validate_module_shapes(const ModuleDecl& m, const QuiverSpec& q) {
    for (const auto& [name, mat] : m.maps) {
        int ai = q.arrow_index(name);
        const Arrow& a = q.arrows[ai];
        int want_r = m.dims[a.tgt], want_c = m.dims[a.src];
        bool ok = (mat.rows() == want_r && mat.cols() == want_c);
        // a 0x0 literal stands for any zero-sized map
        if (!ok && (want_r == 0 || want_c == 0) && mat.rows() == 0 && mat.cols() == 0) ok = true;
        if (!ok)
            throw ShapeError("module " + m.name + ", map " + name + ": expected " + std::to_string(want_r) + "x" +
                             std::to_string(want_c) + ", got " + std::to_string(mat.rows()) + "x" +
                             std::to_string(mat.cols()));
    }
}

// -- canonical renderer (round-trip partner of the parser) --

inline std::string render_lincomb(const std::vector<RelTerm>& terms, const QuiverSpec& q) {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        Rational c = terms[i].coeff;
        bool neg = c.num() < 0;
        if (i == 0) {
            if (neg) out += "- ";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational a = neg ? -c : c;
        if (!(a == Rational::one())) out += a.str() + " ";
        for (size_t j = terms[i].path.size(); j-- > 0;) {
            out += q.arrows[terms[i].path[j]].name;
            if (j > 0) out += "*";
        }
    }
    return out;
}

inline std::string render_spec(const FileSpec& fs) {
    const QuiverSpec& q = fs.quiver;
    std::string out;
    out += "field ";
    out += (q.field == FieldKind::Q) ? "q" : "gf " + std::to_string(q.prime);
    out += ";\n";
    out += "vertices";
    for (const auto& v : q.vertices) out += " " + v;
    out += ";\n";
    for (const Arrow& a : q.arrows)
        out += "arrow " + a.name + " : " + q.vertices[a.src] + " -> " + q.vertices[a.tgt] + ";\n";
    out += "lmax " + std::to_string(q.lmax) + ";\n";
    for (const Relation& r : q.relations) out += "relation " + render_lincomb(r.terms, q) + ";\n";
    for (const ModuleDecl& m : fs.modules) {
        out += "module " + m.name + " {\n";
        out += "  dims";
        for (int d : m.dims) out += " " + std::to_string(d);
        out += ";\n";
        for (const auto& [name, mat] : m.maps) {
            out += "  map " + name + " = [";
            for (int i = 0; i < mat.rows(); ++i) {
                out += "[";
                for (int j = 0; j < mat.cols(); ++j) {
                    out += mat(i, j).str();
                    if (j + 1 < mat.cols()) out += ",";
                }
                out += "]";
                if (i + 1 < mat.rows()) out += ",";
            }
            out += "];\n";
        }
        out += "}\n";
    }
    for (const IdealDecl& d : fs.ideals) {
        out += "ideal " + d.name + " =";
        for (size_t i = 0; i < d.gens.size(); ++i) {
            out += i ? ", " : " ";
            if (d.gens[i].is_identity)
                out += "id(" + fs.quiver.vertices[d.gens[i].vertex] + ")";
            else
                out += render_lincomb(d.gens[i].terms, q);
        }
        out += ";\n";
    }
    for (const CheckDecl& c : fs.checks) {
        out += "check " + c.directive;
        for (const auto& a : c.args) out += " " + a;
        out += ";\n";
    }
    return out;
}

}  // namespace homcat
