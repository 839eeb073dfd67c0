#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieforge/emit.hpp"
#include "lieforge/constructions.hpp"

using namespace lieforge;

namespace {

GeneratorLabel ax(int i) { return GeneratorLabel::a(i); }
GeneratorLabel bx(int i) { return GeneratorLabel::b(i); }
GeneratorLabel xx(int i, int j) { return GeneratorLabel::x(i, j); }

}  // namespace

TEST_CASE("Iu_2 emits the golden table") {
    std::string got = emit_sc(build_Iu_direct(2), "Iu");
    std::string expected =
        "lieforge-sc v1\n"
        "algebra=Iu n=2 ring=Q\n"
        "basis = a[1] a[2] x[1,2] b[1] b[2] x[2,1]\n"
        "[a[1],x[1,2]] = x[1,2]\n"
        "[a[1],x[2,1]] = -x[2,1]\n"
        "[a[2],x[1,2]] = -x[1,2]\n"
        "[a[2],x[2,1]] = x[2,1]\n"
        "[x[1,2],x[2,1]] = 1/2*b[1] - 1/2*b[2]\n";
    CHECK(got == expected);
}

TEST_CASE("glplus_2 contains the eps dual-pair row") {
    std::string got = emit_sc(build_glpluseps_direct(2), "glplus");
    CHECK(got.find("algebra=glplus n=2 ring=Q[eps]\n") != std::string::npos);
    CHECK(got.find("[x[1,2],x[2,1]] = 1/2*b[1] - 1/2*b[2] + 1/2*eps*a[1] - 1/2*eps*a[2]\n") !=
          std::string::npos);
    CHECK(got.find("[b[1],x[2,1]] = -eps*x[2,1]\n") != std::string::npos);
}

TEST_CASE("un_1 is a header plus an empty relation section") {
    CHECK(emit_sc(build_un(1), "un") ==
          "lieforge-sc v1\n"
          "algebra=un n=1 ring=Q\n"
          "basis = a[1]\n");
}

TEST_CASE("ring strings") {
    CHECK(ring_str(build_Iu_direct(2)) == "Q");
    CHECK(ring_str(build_glpluseps_direct(2)) == "Q[eps]");
    CHECK(ring_str(build_glpluseps_direct(2).truncated(2)) == "Q[eps]/eps^3");
    CHECK(ring_str(build_glpluseps_direct(2).specialize(Rational(1, 2))) == "Q");
}

TEST_CASE("element rendering splits terms per eps degree") {
    LieAlgebra G = build_glpluseps_direct(2);
    Element e = Element::term(bx(1), EpsPoly(Rational(1, 2)));
    e.add_term(bx(2), EpsPoly(Rational(-1, 2)));
    e.add_term(ax(1), EpsPoly::monomial(Rational(1, 2), 1));
    CHECK(render_element(G, e) == "1/2*b[1] - 1/2*b[2] + 1/2*eps*a[1]");
    // a mixed coefficient on one label becomes two degree-sorted terms
    Element mixed = Element::term(xx(1, 2), EpsPoly(1) + EpsPoly::monomial(-3, 2));
    CHECK(render_element(G, mixed) == "x[1,2] - 3*eps^2*x[1,2]");
    CHECK(render_element(G, Element()) == "0");
    CHECK(render_element(G, -Element::unit(xx(1, 2))) == "-x[1,2]");
}

TEST_CASE("sc-v1 round trip is structural") {
    auto roundtrip = [](const LieAlgebra& L, const std::string& name) {
        LieAlgebra back = parse_sc(emit_sc(L, name));
        CHECK(back.same_structure(L));
        CHECK(back.name() == name);
        // and re-emission is byte-identical
        CHECK(emit_sc(back, name) == emit_sc(L, name));
    };
    roundtrip(build_Iu_direct(2), "Iu");
    roundtrip(build_Iu_direct(4), "Iu");
    roundtrip(build_glpluseps_direct(3), "glplus");
    roundtrip(build_glpluseps_direct(3).truncated(2), "glplus");
    roundtrip(build_glpluseps_direct(3).specialize(Rational(1, 2)), "glplus(eps=1/2)");
    roundtrip(build_un(3), "un");
    roundtrip(build_gln(2), "gln");
    roundtrip(sl_restrict(build_Iu_direct(3)).algebra, "sl-Iu");
    roundtrip(diamond().algebra, "diamond");
}

TEST_CASE("emission is deterministic") {
    for (int run = 0; run < 3; ++run)
        CHECK(emit_sc(build_glpluseps_direct(3), "glplus") ==
              emit_sc(build_glpluseps_direct(3), "glplus"));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_WITH(parse_sc("nonsense\n"), doctest::Contains("magic"));
    CHECK_THROWS_AS(parse_sc("lieforge-sc v1\nalgebra=x n=1 ring=R\nbasis = a[1]\n"), Error);
    CHECK_THROWS_AS(
        parse_sc("lieforge-sc v1\nalgebra=x n=2 ring=Q\nbasis = a[1] a[2]\n[a[1],a[3]] = a[1]\n"),
        Error);
}

TEST_CASE("label parsing") {
    CHECK(parse_sc_label("a[1]") == ax(1));
    CHECK(parse_sc_label("x[2,1]") == xx(2, 1));
    CHECK(parse_sc_label("b[12]") == bx(12));
    CHECK(parse_sc_label("abar1") == GeneratorLabel::named("abar1"));
    CHECK(parse_sc_label("e[1,2]") == GeneratorLabel::named("e[1,2]"));
}
