#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieforge/constructions.hpp"
#include "lieforge/linalg.hpp"
#include "lieforge/morphisms.hpp"

using namespace lieforge;

namespace {

GeneratorLabel ax(int i) { return GeneratorLabel::a(i); }
GeneratorLabel bx(int i) { return GeneratorLabel::b(i); }
GeneratorLabel xx(int i, int j) { return GeneratorLabel::x(i, j); }
GeneratorLabel en(int i, int j) {
    return GeneratorLabel::named("e[" + std::to_string(i) + "," + std::to_string(j) + "]");
}

Element unit(const GeneratorLabel& l) { return Element::unit(l); }

Element bracket_labels(const LieAlgebra& L, const GeneratorLabel& u, const GeneratorLabel& v) {
    return L.bracket(unit(u), unit(v));
}

}  // namespace

TEST_CASE("build_un is the upper-triangular commutator") {
    LieAlgebra u2 = build_un(2);
    CHECK(bracket_labels(u2, ax(1), xx(1, 2)) == unit(xx(1, 2)));
    LieAlgebra u3 = build_un(3);
    CHECK(bracket_labels(u3, xx(1, 2), xx(2, 3)) == unit(xx(1, 3)));
    CHECK(bracket_labels(u3, xx(1, 2), xx(1, 3)).is_zero());
    LieAlgebra u1 = build_un(1);
    CHECK(u1.dim() == 1);
    CHECK(u1.table().empty());
    CHECK(u3.verify_jacobi().ok());
}

TEST_CASE("build_ln_eps is the eps-scaled lower-triangular commutator") {
    LieAlgebra l2 = build_ln_eps(2);
    CHECK(bracket_labels(l2, bx(1), xx(2, 1)) == Element::term(xx(2, 1), -EpsPoly::eps()));
    LieAlgebra l3 = build_ln_eps(3);
    CHECK(bracket_labels(l3, xx(2, 1), xx(3, 2)) == Element::term(xx(3, 1), -EpsPoly::eps()));
    CHECK(build_ln_eps(1).table().empty());
    CHECK(l3.verify_jacobi().ok());
    CHECK(build_ln_abelian(3).table().empty());
}

TEST_CASE("build_gln is the full matrix commutator") {
    LieAlgebra g = build_gln(3);
    Element e11_e22 = unit(en(1, 1)) - unit(en(2, 2));
    CHECK(bracket_labels(g, en(1, 2), en(2, 1)) == e11_e22);
    CHECK(bracket_labels(g, en(1, 1), en(1, 2)) == unit(en(1, 2)));
    CHECK(g.verify_jacobi().ok());
}

TEST_CASE("coadjoint semidirect product reproduces the direct Iu table") {
    for (int n = 1; n <= 4; ++n) {
        LieAlgebra built = coadjoint_semidirect(build_un(n), standard_duality(n));
        CHECK(built.same_structure(build_Iu_direct(n)));
    }
}

TEST_CASE("the 1/2 comes from the pairing weight 2") {
    LieAlgebra with2 = coadjoint_semidirect(build_un(3), standard_duality(3));
    Element got = bracket_labels(with2, xx(1, 2), xx(2, 1));
    Element half = Element::term(bx(1), EpsPoly(Rational(1, 2)));
    half.add_term(bx(2), EpsPoly(Rational(-1, 2)));
    CHECK(got == half);

    // removing the factor removes the 1/2
    LieAlgebra with1 = coadjoint_semidirect(build_un(3), standard_duality(3, 1));
    CHECK(bracket_labels(with1, xx(1, 2), xx(2, 1)) == unit(bx(1)) - unit(bx(2)));
    CHECK(with1.verify_jacobi().ok());
}

TEST_CASE("coadjoint semidirect of an abelian algebra is abelian") {
    std::vector<GeneratorLabel> basis{GeneratorLabel::named("u1"), GeneratorLabel::named("u2")};
    LieAlgebra A("flat", 0, basis);
    DualityConvention d;
    for (const auto& l : basis) {
        d.dual[l] = GeneratorLabel::named("f" + l.name.substr(1));
        d.weight[l] = 1;
    }
    LieAlgebra built = coadjoint_semidirect(A, d);
    CHECK(built.dim() == 4);
    CHECK(built.table().empty());
}

TEST_CASE("duality errors") {
    CHECK_THROWS_AS(standard_duality(3, 0), Error);
    DualityConvention incomplete = standard_duality(2);
    incomplete.dual.erase(ax(2));
    CHECK_THROWS_WITH(coadjoint_semidirect(build_un(2), incomplete),
                      doctest::Contains("misses label"));
}

TEST_CASE("standard pairing entries") {
    BilinearForm form = standard_pairing(3);
    CHECK(form.pairing(xx(2, 1), xx(1, 2)) == Rational(1));
    CHECK(form.pairing(xx(1, 2), xx(2, 1)) == Rational(1));  // symmetric
    CHECK(form.pairing(bx(2), ax(2)) == Rational(2));
    CHECK(form.pairing(bx(1), ax(2)) == Rational(0));
    CHECK(form.pairing(xx(1, 2), xx(1, 3)) == Rational(0));
    CHECK(form.pairing(xx(1, 2), xx(1, 2)) == Rational(0));  // isotropic
}

TEST_CASE("manin double reproduces the direct glplus table") {
    for (int n = 1; n <= 4; ++n) {
        LieAlgebra built = manin_double(build_un(n), build_ln_eps(n), standard_pairing(n));
        CHECK(built.same_structure(build_glpluseps_direct(n)));
    }
}

TEST_CASE("the double's form is invariant") {
    int n = 3;
    LieAlgebra D = manin_double(build_un(n), build_ln_eps(n), standard_pairing(n));
    BilinearForm form = standard_pairing(n);
    for (int p = 0; p < D.dim(); ++p)
        for (int q = 0; q < D.dim(); ++q)
            for (int r = 0; r < D.dim(); ++r) {
                EpsPoly lhs = form.pairing(D.bracket_positions(p, q), unit(D.label_at(r)));
                EpsPoly rhs = form.pairing(unit(D.label_at(p)), D.bracket_positions(q, r));
                REQUIRE(lhs == rhs);
            }
}

TEST_CASE("double with an abelian second leg degenerates to the semidirect product") {
    for (int n = 2; n <= 3; ++n) {
        LieAlgebra D = manin_double(build_un(n), build_ln_abelian(n), standard_pairing(n));
        LieAlgebra I = coadjoint_semidirect(build_un(n), standard_duality(n));
        CHECK(D.same_structure(I));
    }
}

TEST_CASE("degenerate or non-isotropic forms are rejected") {
    BilinearForm zero;
    CHECK_THROWS_WITH(manin_double(build_un(2), build_ln_eps(2), zero),
                      doctest::Contains("degenerate"));

    BilinearForm bad = standard_pairing(2);
    bad.set(xx(1, 2), xx(1, 2), 1);  // breaks isotropy of U
    CHECK_THROWS_WITH(manin_double(build_un(2), build_ln_eps(2), bad),
                      doctest::Contains("isotropic"));
}

TEST_CASE("a non-judicious pairing fails Jacobi loudly") {
    // crossing the diagonal pairing (b_1 with a_2 and so on) keeps the form
    // nondegenerate and isotropic but breaks the construction
    BilinearForm crossed;
    crossed.set(bx(1), ax(2), 2);
    crossed.set(bx(2), ax(1), 2);
    crossed.set(xx(2, 1), xx(1, 2), 1);
    CHECK_THROWS_WITH(manin_double(build_un(2), build_ln_eps(2), crossed),
                      doctest::Contains("Jacobi"));
}

TEST_CASE("sl restriction") {
    Subalgebra sl2 = sl_restrict(build_Iu_direct(2));
    CHECK(sl2.algebra.dim() == 4);
    CHECK(sl2.algebra.verify_jacobi().ok());
    Element got = bracket_labels(sl2.algebra, xx(1, 2), xx(2, 1));
    CHECK(got == Element::term(GeneratorLabel::named("bbar1"), EpsPoly(Rational(1, 2))));

    for (int n = 2; n <= 4; ++n) {
        Subalgebra sl = sl_restrict(build_Iu_direct(n));
        CHECK(sl.algebra.dim() == n * n + n - 2);
        CHECK(sl.algebra.verify_jacobi().ok());
        Subalgebra slg = sl_restrict(build_glpluseps_direct(n));
        CHECK(slg.algebra.verify_jacobi().ok());
    }

    CHECK_THROWS_AS(sl_restrict(build_un(2)), Error);  // no b generators
}

TEST_CASE("diamond algebra") {
    DiamondResult d = diamond();
    REQUIRE(d.algebra.dim() == 4);
    auto named = [](const char* s) { return GeneratorLabel::named(s); };
    CHECK(bracket_labels(d.algebra, named("a"), named("x")) == unit(named("x")));
    CHECK(bracket_labels(d.algebra, named("a"), named("y")) == -unit(named("y")));
    CHECK(bracket_labels(d.algebra, named("x"), named("y")) == unit(named("b")));
    for (const auto& l : d.algebra.basis())
        CHECK(bracket_labels(d.algebra, named("b"), l).is_zero());
    // exactly three stored relations: a 4-dim algebra with central b
    CHECK(d.algebra.table().size() == 3);

    // transported symmetries act as (-a,x,y,-b) and (-a,y,x,-b)
    Subalgebra sub{d.algebra, d.embedding};
    LinearMap phi = transport_map(d.parent, phi_map(2), sub);
    CHECK(phi.apply(named("a")) == -unit(named("a")));
    CHECK(phi.apply(named("x")) == unit(named("x")));
    CHECK(phi.apply(named("y")) == unit(named("y")));
    CHECK(phi.apply(named("b")) == -unit(named("b")));
    LinearMap psi = transport_map(d.parent, psi_map(2), sub);
    CHECK(psi.apply(named("a")) == -unit(named("a")));
    CHECK(psi.apply(named("x")) == unit(named("y")));
    CHECK(psi.apply(named("y")) == unit(named("x")));
    CHECK(psi.apply(named("b")) == -unit(named("b")));
}

TEST_CASE("jacobi passes on every builder output at small sizes") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(build_Iu_direct(n).verify_jacobi().ok());
        CHECK(build_glpluseps_direct(n).verify_jacobi().ok());
        for (int k = 0; k <= 2; ++k)
            CHECK(build_glpluseps_direct(n).truncated(k).verify_jacobi().ok());
    }
}
