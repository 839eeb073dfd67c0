#include "lieforge/constructions.hpp"

#include <algorithm>

#include "lieforge/analysis.hpp"
#include "lieforge/linalg.hpp"

namespace lieforge {

namespace {

// Canonical basis order used everywhere, including emission:
// a_1..a_n, x_ij (i<j) lex, b_1..b_n, x_ij (i>j) lex.
std::vector<GeneratorLabel> family_basis(int n) {
    std::vector<GeneratorLabel> basis;
    for (int i = 1; i <= n; ++i) basis.push_back(GeneratorLabel::a(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) basis.push_back(GeneratorLabel::x(i, j));
    for (int i = 1; i <= n; ++i) basis.push_back(GeneratorLabel::b(i));
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) basis.push_back(GeneratorLabel::x(i, j));
    return basis;
}

// [e_ij, e_kl] = d_jk e_il - d_li e_kj with the diagonal unit e_pp rendered
// through `diag`.
template <typename DiagLabel>
Element matrix_commutator(int i, int j, int k, int l, DiagLabel diag) {
    auto unit_label = [&](int p, int q) { return p == q ? diag(p) : GeneratorLabel::x(p, q); };
    Element r;
    if (j == k) r.add_term(unit_label(i, l), EpsPoly(1));
    if (l == i) r.add_term(unit_label(k, j), EpsPoly(-1));
    return r;
}

// Matrix coordinates of a triangular-family label: a_i and b_i sit on the
// diagonal.
std::pair<int, int> coords_of(const GeneratorLabel& l) {
    if (l.is_x()) return {l.i, l.j};
    return {l.i, l.i};
}

void require_positive(int n) {
    if (n < 1) throw Error("algebra size must be at least 1");
}

enum class Family { Iu, GlPlusEps };

// The shared relation table of Iu_n and gl_{n+}^eps. The two differ only in
// the gate value when the length condition fails (0 vs eps), the dual-pair
// row (eps/2 extra term) and the action of b_i (zero vs eps-scaled).
Element family_bracket(const GeneratorLabel& u, const GeneratorLabel& v, int n, Family fam) {
    using Kind = GeneratorLabel::Kind;
    bool eps_fam = fam == Family::GlPlusEps;
    // diagonal-vs-diagonal always commutes
    if (!u.is_x() && !v.is_x()) return {};
    // diagonal against x
    if (!u.is_x() || !v.is_x()) {
        const GeneratorLabel& d = u.is_x() ? v : u;
        const GeneratorLabel& x = u.is_x() ? u : v;
        Rational sign = u.is_x() ? -1 : 1;  // [x, d] = -[d, x]
        int c = (d.i == x.i ? 1 : 0) - (d.i == x.j ? 1 : 0);
        if (c == 0) return {};
        if (d.kind == Kind::A)
            return Element::term(x, EpsPoly(Rational(c) * sign));
        // d is a b_i
        if (!eps_fam) return {};
        return Element::term(x, EpsPoly::monomial(Rational(c) * sign, 1));
    }
    // x against x
    int i = u.i, j = u.j, k = v.i, l = v.j;
    if (j == k && l == i) {
        // the dual pair: 1/2 (b_i - b_j), plus eps/2 (a_i - a_j) upstairs
        Element r;
        r.add_term(GeneratorLabel::b(i), EpsPoly(Rational(1, 2)));
        r.add_term(GeneratorLabel::b(j), EpsPoly(Rational(-1, 2)));
        if (eps_fam) {
            r.add_term(GeneratorLabel::a(i), EpsPoly::monomial(Rational(1, 2), 1));
            r.add_term(GeneratorLabel::a(j), EpsPoly::monomial(Rational(-1, 2), 1));
        }
        return r;
    }
    bool gate = length_of(u, n) + length_of(v, n) < n;
    if (!gate && !eps_fam) return {};
    Element r;
    if (j == k) r.add_term(GeneratorLabel::x(i, l), EpsPoly(1));
    if (l == i) r.add_term(GeneratorLabel::x(k, j), EpsPoly(-1));
    if (!gate) r = r.scaled(EpsPoly::eps());
    return r;
}

LieAlgebra build_family(int n, Family fam) {
    require_positive(n);
    bool eps_fam = fam == Family::GlPlusEps;
    LieAlgebra out(eps_fam ? "glplus" : "Iu", n, family_basis(n), std::nullopt, eps_fam);
    for (int p = 0; p < out.dim(); ++p)
        for (int q = p + 1; q < out.dim(); ++q) {
            Element e = family_bracket(out.label_at(p), out.label_at(q), n, fam);
            if (!e.is_zero()) out.set_bracket(p, q, std::move(e));
        }
    return out;
}

}  // namespace

LieAlgebra build_un(int n) {
    require_positive(n);
    std::vector<GeneratorLabel> basis;
    for (int i = 1; i <= n; ++i) basis.push_back(GeneratorLabel::a(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) basis.push_back(GeneratorLabel::x(i, j));
    LieAlgebra out("un", n, std::move(basis));
    auto diag = [](int p) { return GeneratorLabel::a(p); };
    for (int p = 0; p < out.dim(); ++p)
        for (int q = p + 1; q < out.dim(); ++q) {
            auto [i, j] = coords_of(out.label_at(p));
            auto [k, l] = coords_of(out.label_at(q));
            Element e = matrix_commutator(i, j, k, l, diag);
            if (!e.is_zero()) out.set_bracket(p, q, std::move(e));
        }
    return out;
}

namespace {

LieAlgebra build_ln(int n, bool scaled_by_eps) {
    require_positive(n);
    std::vector<GeneratorLabel> basis;
    for (int i = 1; i <= n; ++i) basis.push_back(GeneratorLabel::b(i));
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) basis.push_back(GeneratorLabel::x(i, j));
    LieAlgebra out(scaled_by_eps ? "ln_eps" : "ln0", n, std::move(basis), std::nullopt,
                   scaled_by_eps);
    if (!scaled_by_eps) return out;  // contracted endpoint: abelian
    auto diag = [](int p) { return GeneratorLabel::b(p); };
    for (int p = 0; p < out.dim(); ++p)
        for (int q = p + 1; q < out.dim(); ++q) {
            auto [i, j] = coords_of(out.label_at(p));
            auto [k, l] = coords_of(out.label_at(q));
            Element e = matrix_commutator(i, j, k, l, diag).scaled(EpsPoly::eps());
            if (!e.is_zero()) out.set_bracket(p, q, std::move(e));
        }
    return out;
}

}  // namespace

LieAlgebra build_ln_eps(int n) { return build_ln(n, true); }
LieAlgebra build_ln_abelian(int n) { return build_ln(n, false); }

LieAlgebra build_gln(int n) {
    require_positive(n);
    std::vector<GeneratorLabel> basis;
    std::vector<std::pair<int, int>> coords;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            basis.push_back(GeneratorLabel::named("e[" + std::to_string(i) + "," +
                                                  std::to_string(j) + "]"));
            coords.emplace_back(i, j);
        }
    LieAlgebra out("gln", n, std::move(basis));
    auto unit = [&](int p, int q) {
        return GeneratorLabel::named("e[" + std::to_string(p) + "," + std::to_string(q) + "]");
    };
    for (int p = 0; p < out.dim(); ++p)
        for (int q = p + 1; q < out.dim(); ++q) {
            auto [i, j] = coords[static_cast<size_t>(p)];
            auto [k, l] = coords[static_cast<size_t>(q)];
            Element e;
            if (j == k) e.add_term(unit(i, l), EpsPoly(1));
            if (l == i) e.add_term(unit(k, j), EpsPoly(-1));
            if (!e.is_zero()) out.set_bracket(p, q, std::move(e));
        }
    return out;
}

LieAlgebra build_Iu_direct(int n) { return build_family(n, Family::Iu); }
LieAlgebra build_glpluseps_direct(int n) { return build_family(n, Family::GlPlusEps); }

DualityConvention standard_duality(int n, const Rational& diag_weight) {
    require_positive(n);
    if (diag_weight.is_zero()) throw Error("degenerate duality: zero pairing weight");
    DualityConvention d;
    for (int i = 1; i <= n; ++i) {
        d.dual[GeneratorLabel::a(i)] = GeneratorLabel::b(i);
        d.weight[GeneratorLabel::a(i)] = diag_weight;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            d.dual[GeneratorLabel::x(i, j)] = GeneratorLabel::x(j, i);
            d.weight[GeneratorLabel::x(i, j)] = 1;
        }
    return d;
}

LieAlgebra coadjoint_semidirect(const LieAlgebra& A, const DualityConvention& d) {
    if (A.trunc()) throw Error("coadjoint_semidirect needs untruncated scalars");
    int m = A.dim();
    std::vector<GeneratorLabel> basis = A.basis();
    for (int p = 0; p < m; ++p) {
        auto it = d.dual.find(A.label_at(p));
        if (it == d.dual.end())
            throw Error("duality convention misses label " + A.label_at(p).str());
        basis.push_back(it->second);
        auto wt = d.weight.find(A.label_at(p));
        if (wt == d.weight.end() || wt->second.is_zero())
            throw Error("degenerate duality: zero or missing pairing weight for " +
                        A.label_at(p).str());
    }
    LieAlgebra out("I" + A.name(), A.n(), std::move(basis), std::nullopt, A.symbolic_eps());
    // the subalgebra copy of A
    for (const auto& [pq, e] : A.table()) out.set_bracket(pq.first, pq.second, e);
    // [e_p, dual_q] = sum_v (w_q / w_v) coeff_{e_q}([e_v, e_p]) dual_v,
    // from (x.f)(v) = f([v, x]) with dual_q standing for w_q (e_q)^*.
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            Rational wq = d.weight.at(A.label_at(q));
            Element img;
            for (int v = 0; v < m; ++v) {
                EpsPoly c = A.bracket_positions(v, p).coeff(A.label_at(q));
                if (c.is_zero()) continue;
                Rational wv = d.weight.at(A.label_at(v));
                img.add_term(out.label_at(m + v), c.scaled(wq / wv));
            }
            if (!img.is_zero()) out.set_bracket(p, m + q, std::move(img));
        }
    return out;
}

void BilinearForm::set(const GeneratorLabel& u, const GeneratorLabel& v, const Rational& c) {
    auto key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (c.is_zero())
        entries_.erase(key);
    else
        entries_[key] = c;
}

Rational BilinearForm::pairing(const GeneratorLabel& u, const GeneratorLabel& v) const {
    auto key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
    auto it = entries_.find(key);
    return it == entries_.end() ? Rational(0) : it->second;
}

EpsPoly BilinearForm::pairing(const Element& x, const Element& y) const {
    EpsPoly acc;
    for (const auto& [lx, cx] : x.terms())
        for (const auto& [ly, cy] : y.terms()) {
            Rational g = pairing(lx, ly);
            if (!g.is_zero()) acc += (cx * cy).scaled(g);
        }
    return acc;
}

BilinearForm standard_pairing(int n) {
    require_positive(n);
    BilinearForm form;
    for (int i = 1; i <= n; ++i) form.set(GeneratorLabel::b(i), GeneratorLabel::a(i), 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            form.set(GeneratorLabel::x(j, i), GeneratorLabel::x(i, j), 1);
    return form;
}

LieAlgebra manin_double(const LieAlgebra& U, const LieAlgebra& L, const BilinearForm& form) {
    int mu = U.dim(), ml = L.dim();
    if (mu != ml) throw Error("manin_double: summands have different dimensions");
    auto trunc = combine_trunc(U.trunc(), L.trunc());
    // isotropy of the summands
    for (int p = 0; p < mu; ++p)
        for (int q = p; q < mu; ++q)
            if (!form.pairing(U.label_at(p), U.label_at(q)).is_zero())
                throw Error("manin_double: U is not isotropic");
    for (int p = 0; p < ml; ++p)
        for (int q = p; q < ml; ++q)
            if (!form.pairing(L.label_at(p), L.label_at(q)).is_zero())
                throw Error("manin_double: L is not isotropic");
    // cross Gram matrix and its solvers; nondegeneracy of the whole form on
    // U + L is exactly invertibility of this block
    RatMat gram_ul(static_cast<size_t>(mu), RatRow(static_cast<size_t>(ml), Rational(0)));
    for (int i = 0; i < mu; ++i)
        for (int j = 0; j < ml; ++j)
            gram_ul[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                form.pairing(U.label_at(i), L.label_at(j));
    RatMat gram_lu(static_cast<size_t>(ml), RatRow(static_cast<size_t>(mu), Rational(0)));
    for (int j = 0; j < ml; ++j)
        for (int i = 0; i < mu; ++i)
            gram_lu[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                gram_ul[static_cast<size_t>(i)][static_cast<size_t>(j)];
    SpanSolver alpha_solver(gram_ul);  // sum_i alpha_i <u_i, w> = rhs_w
    SpanSolver beta_solver(gram_lu);   // sum_j beta_j <l_j, z> = rhs_z
    if (alpha_solver.rank() != mu) throw Error("manin_double: degenerate bilinear form");

    std::vector<GeneratorLabel> basis = U.basis();
    for (const auto& l : L.basis()) basis.push_back(l);
    LieAlgebra out("D(" + U.name() + "," + L.name() + ")", std::max(U.n(), L.n()), std::move(basis),
                   trunc, U.symbolic_eps() || L.symbolic_eps());
    for (const auto& [pq, e] : U.table()) out.set_bracket(pq.first, pq.second, e);
    for (const auto& [pq, e] : L.table()) out.set_bracket(mu + pq.first, mu + pq.second, e);

    // mixed bracket, forced by invariance:
    //   <[u,l], z> = <l, [z,u]>  (z in U) fixes the L-component,
    //   <[u,l], w> = <u, [l,w]>  (w in L) fixes the U-component.
    for (int p = 0; p < mu; ++p) {
        Element u_unit = Element::unit(U.label_at(p));
        for (int q = 0; q < ml; ++q) {
            Element l_unit = Element::unit(L.label_at(q));
            std::vector<EpsPoly> rhs_beta(static_cast<size_t>(mu));
            for (int z = 0; z < mu; ++z)
                rhs_beta[static_cast<size_t>(z)] = form.pairing(l_unit, U.bracket_positions(z, p));
            std::vector<EpsPoly> rhs_alpha(static_cast<size_t>(ml));
            for (int w = 0; w < ml; ++w)
                rhs_alpha[static_cast<size_t>(w)] = form.pairing(u_unit, L.bracket_positions(q, w));
            auto beta = beta_solver.coordinates(rhs_beta);
            auto alpha = alpha_solver.coordinates(rhs_alpha);
            if (!beta || !alpha) throw Error("manin_double: degenerate bilinear form");
            Element img;
            for (int j = 0; j < ml; ++j) img.add_term(out.label_at(mu + j), (*beta)[static_cast<size_t>(j)]);
            for (int i = 0; i < mu; ++i) img.add_term(out.label_at(i), (*alpha)[static_cast<size_t>(i)]);
            if (!img.is_zero()) out.set_bracket(p, mu + q, std::move(img));
        }
    }

    JacobiReport jac = out.verify_jacobi();
    if (!jac.ok())
        throw Error("manin_double: Jacobi identity fails for the supplied form; " +
                    jac.witness());
    return out;
}

Subalgebra subalgebra_on(const LieAlgebra& L, const std::string& name,
                         std::vector<std::pair<GeneratorLabel, Element>> embedding) {
    RatMat rows;
    rows.reserve(embedding.size());
    for (const auto& [lab, e] : embedding) rows.push_back(to_dense(L, e));
    SpanSolver solver(rows);
    if (solver.rank() != static_cast<int>(embedding.size()))
        throw Error("subalgebra generators are not independent");
    std::vector<GeneratorLabel> labels;
    labels.reserve(embedding.size());
    for (const auto& [lab, e] : embedding) labels.push_back(lab);
    LieAlgebra out(name, L.n(), labels, L.trunc(), L.symbolic_eps());
    for (int p = 0; p < out.dim(); ++p)
        for (int q = p + 1; q < out.dim(); ++q) {
            Element w = L.bracket(embedding[static_cast<size_t>(p)].second,
                                  embedding[static_cast<size_t>(q)].second);
            auto coords = solver.coordinates(L, w);
            if (!coords)
                throw Error("subalgebra is not closed under bracket: [" + labels[static_cast<size_t>(p)].str() +
                            "," + labels[static_cast<size_t>(q)].str() + "] = " + w.str());
            Element e;
            for (size_t i = 0; i < coords->size(); ++i) e.add_term(labels[i], (*coords)[i]);
            out.set_bracket(p, q, std::move(e));
        }
    return {std::move(out), std::move(embedding)};
}

Subalgebra sl_restrict(const LieAlgebra& L) {
    int n = L.n();
    for (int i = 1; i <= n; ++i)
        if (!L.has_label(GeneratorLabel::a(i)) || !L.has_label(GeneratorLabel::b(i)))
            throw Error("sl_restrict needs the a/b/x basis family");
    std::vector<std::pair<GeneratorLabel, Element>> embedding;
    auto diff = [](const GeneratorLabel& u, const GeneratorLabel& v) {
        Element e = Element::unit(u);
        e.add_term(v, EpsPoly(-1));
        return e;
    };
    for (int i = 1; i < n; ++i)
        embedding.emplace_back(GeneratorLabel::named("abar" + std::to_string(i)),
                               diff(GeneratorLabel::a(i), GeneratorLabel::a(i + 1)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            embedding.emplace_back(GeneratorLabel::x(i, j), Element::unit(GeneratorLabel::x(i, j)));
    for (int i = 1; i < n; ++i)
        embedding.emplace_back(GeneratorLabel::named("bbar" + std::to_string(i)),
                               diff(GeneratorLabel::b(i), GeneratorLabel::b(i + 1)));
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            embedding.emplace_back(GeneratorLabel::x(i, j), Element::unit(GeneratorLabel::x(i, j)));
    return subalgebra_on(L, "sl-" + L.name(), std::move(embedding));
}

DiamondResult diamond() {
    LieAlgebra parent = build_Iu_direct(2);
    Subalgebra sl = sl_restrict(parent);
    std::vector<std::pair<std::string, Element>> nb;
    nb.emplace_back("a", Element::term(GeneratorLabel::named("abar1"), EpsPoly(Rational(1, 2))));
    nb.emplace_back("x", Element::unit(GeneratorLabel::x(1, 2)));
    nb.emplace_back("y", Element::unit(GeneratorLabel::x(2, 1)));
    nb.emplace_back("b", Element::term(GeneratorLabel::named("bbar1"), EpsPoly(Rational(1, 2))));
    LieAlgebra alg = change_of_basis(sl.algebra, nb);
    // compose the change of basis with the sl embedding to land in Iu_2
    std::vector<std::pair<GeneratorLabel, Element>> embedding;
    for (const auto& [name, el] : nb) {
        Element in_parent;
        for (const auto& [lab, c] : el.terms()) {
            int p = sl.algebra.position(lab);
            in_parent += sl.embedding[static_cast<size_t>(p)].second.scaled(c);
        }
        embedding.emplace_back(GeneratorLabel::named(name), std::move(in_parent));
    }
    return {std::move(alg), std::move(embedding), std::move(parent)};
}

}  // namespace lieforge
