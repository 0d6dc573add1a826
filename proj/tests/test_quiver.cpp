#include <doctest.h>

#include <random>

#include "homcat/quiver.hpp"

using namespace homcat;

static const char* kA3 = R"(
# linear A_3 quiver
field gf 32003;
vertices 1 2 3;
arrow a : 1 -> 2;
arrow b : 2 -> 3;
)";

TEST_CASE("parse a basic acyclic quiver") {
    auto fs = parse_file(kA3);
    const auto& q = fs.quiver;
    CHECK(q.vertices == std::vector<std::string>{"1", "2", "3"});
    REQUIRE(q.arrows.size() == 2);
    CHECK(q.arrows[0].name == "a");
    CHECK(q.arrows[0].src == 0);
    CHECK(q.arrows[0].tgt == 1);
    CHECK(q.field == FieldKind::Gf);
    CHECK(q.prime == 32003);
    CHECK_FALSE(q.has_cycle());
    CHECK(q.lmax == 3);  // acyclic default: #arrows + 1
}

TEST_CASE("relations: textual path reads right-to-left") {
    auto fs = parse_file(R"(
field q;
vertices x y z;
arrow f : x -> y;
arrow g : y -> z;
relation g*f;
)");
    REQUIRE(fs.quiver.relations.size() == 1);
    const auto& r = fs.quiver.relations[0];
    REQUIRE(r.terms.size() == 1);
    // traversal order: f first, then g
    CHECK(r.terms[0].path == std::vector<int>{0, 1});
    CHECK(r.src == 0);
    CHECK(r.tgt == 2);
}

TEST_CASE("commutativity relation with coefficients") {
    auto fs = parse_file(R"(
field q;
vertices 1 2 3 4;
arrow a : 1 -> 2;  arrow b : 2 -> 4;
arrow c : 1 -> 3;  arrow d : 3 -> 4;
relation b*a - 2/3 d*c;
)");
    const auto& r = fs.quiver.relations[0];
    REQUIRE(r.terms.size() == 2);
    CHECK(r.terms[0].coeff == Rational::one());
    CHECK(r.terms[1].coeff == Rational(bigint(-2), bigint(3)));
}

TEST_CASE("cyclic quiver requires lmax") {
    CHECK_THROWS_AS(parse_file(R"(
field q;
vertices v;
arrow x : v -> v;
)"),
                    ValidationError);
    auto fs = parse_file(R"(
field q;
vertices v;
arrow x : v -> v;
lmax 4;
relation x*x;
)");
    CHECK(fs.quiver.has_cycle());
    CHECK(fs.quiver.lmax == 4);
}

TEST_CASE("diagnostics carry positions") {
    try {
        parse_file("field q;\nvertices a;\narrow f : a -> zz;\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.pos.line == 3);
        CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }
}

TEST_CASE("rejected inputs") {
    // relation with a length-1 term
    CHECK_THROWS_AS(parse_file(R"(
field q;
vertices 1 2 3;
arrow a : 1 -> 2; arrow b : 2 -> 3; arrow c : 1 -> 3;
relation b*a - c;
)"),
                    ValidationError);
    // non-parallel terms
    CHECK_THROWS_AS(parse_file(R"(
field q;
vertices 1 2 3 4;
arrow a : 1 -> 2; arrow b : 2 -> 3; arrow c : 2 -> 4;
relation b*a + c*a;
)"),
                    ValidationError);
    // non-composable path
    CHECK_THROWS_AS(parse_file(R"(
field q;
vertices 1 2 3;
arrow a : 1 -> 2; arrow b : 1 -> 3;
relation b*a;
)"),
                    ValidationError);
    // duplicate names
    CHECK_THROWS_AS(parse_file("field q;\nvertices v v;\n"), ValidationError);
    CHECK_THROWS_AS(parse_file("field q;\nvertices 1 2;\narrow a : 1 -> 2;\narrow a : 1 -> 2;\n"), ValidationError);
    // composite modulus
    CHECK_THROWS_AS(parse_file("field gf 10;\nvertices v;\n"), ValidationError);
    // junk
    CHECK_THROWS_AS(parse_file("fields q;"), ParseError);
    CHECK_THROWS_AS(parse_file("field q"), ParseError);
}

TEST_CASE("modules: dims, maps, shape validation") {
    auto fs = parse_file(R"(
field q;
vertices 1 2;
arrow a : 1 -> 2;
module M {
  dim 1 = 2;
  dim 2 = 1;
  map a = [[1, -1/2]];
}
module Z { }
)");
    REQUIRE(fs.modules.size() == 2);
    const ModuleDecl* m = fs.find_module("M");
    REQUIRE(m);
    CHECK(m->dims == std::vector<int>{2, 1});
    validate_module_shapes(*m, fs.quiver);
    CHECK(m->maps.at("a")(0, 1) == Rational(bigint(-1), bigint(2)));
    const ModuleDecl* z = fs.find_module("Z");
    REQUIRE(z);
    CHECK(z->dims == std::vector<int>{0, 0});

    auto bad = parse_file(R"(
field q;
vertices 1 2;
arrow a : 1 -> 2;
module B { dim 1 = 2; dim 2 = 1; map a = [[1],[2]]; }
)");
    CHECK_THROWS_AS(validate_module_shapes(*bad.find_module("B"), bad.quiver), ShapeError);
}

TEST_CASE("ideals and checks") {
    auto fs = parse_file(R"(
field q;
vertices 1 2 3;
arrow a : 1 -> 2; arrow b : 2 -> 3;
ideal I = b*a, id(2);
ideal J = a;
check sie I;
)");
    const IdealDecl* i = fs.find_ideal("I");
    REQUIRE(i);
    REQUIRE(i->gens.size() == 2);
    CHECK_FALSE(i->gens[0].is_identity);
    CHECK(i->gens[0].terms[0].path == std::vector<int>{0, 1});
    CHECK(i->gens[1].is_identity);
    CHECK(i->gens[1].vertex == 1);
    const IdealDecl* j = fs.find_ideal("J");
    REQUIRE(j);
    CHECK(j->gens[0].terms[0].path == std::vector<int>{0});  // length 1 is fine for ideals
    REQUIRE(fs.checks.size() == 1);
    CHECK(fs.checks[0].directive == "sie");
    CHECK(fs.checks[0].args == std::vector<std::string>{"I"});
}

TEST_CASE("render/parse round trip") {
    auto fs = parse_file(R"(
field gf 101;
vertices 1 2 3;
arrow a : 1 -> 2; arrow b : 2 -> 3; arrow c : 2 -> 3;
lmax 5;
relation b*a - 3 c*a;
module M { dim 1 = 1; dim 2 = 1; map a = [[2/7]]; }
ideal I = b*a, id(1);
check sie I;
)");
    std::string text = render_spec(fs);
    auto fs2 = parse_file(text);
    CHECK(fs == fs2);
    CHECK(render_spec(fs2) == text);
}

TEST_CASE("parser never crashes on random garbage") {
    std::mt19937 rng(99);
    const char alphabet[] = "abxyz 123*;:->=[]{}(),#/\n\t+-_\"\\~%";
    for (int i = 0; i < 20000; ++i) {
        int len = (int)(rng() % 60);
        std::string s;
        for (int j = 0; j < len; ++j) {
            if (rng() % 8 == 0)
                s += (char)(rng() % 256);
            else
                s += alphabet[rng() % (sizeof(alphabet) - 1)];
        }
        try {
            parse_file(s);
        } catch (const ParseError&) {
        } catch (const ValidationError&) {
        }
    }
}
