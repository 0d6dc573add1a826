#include <doctest.h>

#include "homcat/bimod.hpp"

using namespace homcat;

namespace {
QuiverSpec a2() { return parse_spec("field q; vertices 1 2; arrow a : 1 -> 2;"); }
QuiverSpec pt() { return parse_spec("field q; vertices v;"); }
QuiverSpec loop2() { return parse_spec("field q; vertices v; arrow x : v -> v; lmax 2; relation x*x;"); }
}  // namespace

TEST_CASE("regular bimodule of A_2") {
    auto C = build_category<Rational>(a2());
    auto ctx = make_bimod_context(C);
    auto reg = regular_bimodule(ctx);
    reg.validate();
    CHECK(reg.total_dim() == 3);
    CHECK(reg.dims[ctx.pair(0, 0)] == 1);
    CHECK(reg.dims[ctx.pair(0, 1)] == 1);
    CHECK(reg.dims[ctx.pair(1, 0)] == 0);
    CHECK(reg.dims[ctx.pair(1, 1)] == 1);

    // hereditary: the regular bimodule has pd exactly 1 over C^e
    CHECK(bimodule_pd(reg, 3) == 1);
    CHECK_FALSE(is_projective(reg));
}

TEST_CASE("regular bimodule of a point is projective") {
    auto C = build_category<Rational>(pt());
    auto ctx = make_bimod_context(C);
    auto reg = regular_bimodule(ctx);
    reg.validate();
    CHECK(reg.total_dim() == 1);
    CHECK(bimodule_pd(reg, 2) == 0);
}

TEST_CASE("canonical sequence for I = <id_2> in A_2") {
    auto C = build_category<Rational>(a2());
    auto ctx = make_bimod_context(C);
    auto I = ideal_from_generators<Rational>(C, {{1, 1, C.id_coords[1]}});
    auto seq = canonical_sequence(ctx, I);
    seq.ideal.rep.validate();
    seq.quot.rep.validate();
    CHECK(seq.ideal.rep.total_dim() == 2);  // I(1,2) and I(2,2)
    CHECK(seq.quot.rep.total_dim() == 1);   // only (C/I)(1,1) survives
    CHECK(seq.quot.rep.dims[ctx.pair(0, 0)] == 1);
    // dims are exact in the sequence
    for (int x = 0; x < ctx.E.n(); ++x)
        CHECK(seq.ideal.rep.dims[x] + seq.quot.rep.dims[x] == seq.reg.dims[x]);
}

TEST_CASE("slices of the ideal bimodule, A_2 shortcut case") {
    auto C = build_category<Rational>(a2());
    auto ctx = make_bimod_context(C);
    auto I = ideal_from_generators<Rational>(C, {{1, 1, C.id_coords[1]}});
    auto seq = canonical_sequence(ctx, I);

    auto s0 = left_slice(ctx, seq.ideal.rep, 0);
    s0.validate();
    CHECK(s0.dims == std::vector<int>{0, 1});  // I(1,-) = C(2,-)
    CHECK(is_projective(s0));
    auto s1 = left_slice(ctx, seq.ideal.rep, 1);
    s1.validate();
    CHECK(s1.dims == std::vector<int>{0, 1});
    CHECK(is_projective(s1));
    CHECK(all_left_slices_projective(ctx, seq.ideal.rep));

    // right slices of the regular bimodule are the representables of C^op
    auto r1 = right_slice(ctx, seq.reg, 1);
    r1.validate();
    CHECK(r1.dims == std::vector<int>{1, 1});
    CHECK(is_projective(r1));
}

TEST_CASE("slices for I = <x> in the dual numbers are not projective") {
    auto C = build_category<Rational>(loop2());
    auto ctx = make_bimod_context(C);
    const IdealDecl d{"I", {IdealGen{false, -1, {{Rational::one(), {0}}}, 0, 0}}};
    auto q = loop2();
    auto I = ideal_from_decl(C, q, d);
    auto seq = canonical_sequence(ctx, I);
    CHECK(seq.ideal.rep.total_dim() == 1);
    auto s = left_slice(ctx, seq.ideal.rep, 0);
    s.validate();
    CHECK(s.dims == std::vector<int>{1});
    int w = -1;
    CHECK_FALSE(all_left_slices_projective(ctx, seq.ideal.rep, &w));
    CHECK(w == 0);
}

TEST_CASE("left slices of the regular bimodule are representable") {
    auto q = parse_spec("field q; vertices 1 2 3; arrow a : 1 -> 2; arrow b : 2 -> 3;");
    auto C = build_category<Rational>(q);
    auto ctx = make_bimod_context(C);
    auto reg = regular_bimodule(ctx);
    for (int c = 0; c < 3; ++c) {
        auto s = left_slice(ctx, reg, c);
        s.validate();
        auto P = yoneda_projective(C, c).rep;
        CHECK(s.dims == P.dims);
        CHECK(is_projective(s));
    }
}
