#include "lieforge/algebra.hpp"

#include <algorithm>

#include "lieforge/linalg.hpp"

namespace lieforge {

std::string JacobiReport::witness() const {
    if (violations.empty()) return "";
    const auto& v = violations.front();
    return "triple (" + std::to_string(v.p) + "," + std::to_string(v.q) + "," +
           std::to_string(v.r) + ") defect " + v.defect.str() +
           (violations.size() > 1 ? " (+" + std::to_string(violations.size() - 1) + " more)" : "");
}

LieAlgebra::LieAlgebra(std::string name, int n, std::vector<GeneratorLabel> basis,
                       std::optional<int> trunc, bool symbolic_eps)
    : name_(std::move(name)), n_(n), basis_(std::move(basis)), trunc_(trunc),
      symbolic_eps_(symbolic_eps) {
    if (n_ < 0) throw Error("negative algebra size");
    if (trunc_ && *trunc_ < 0) throw Error("negative truncation order");
    for (int p = 0; p < dim(); ++p) {
        const auto& l = basis_[static_cast<size_t>(p)];
        if (l.kind != GeneratorLabel::Kind::Named) {
            if (l.i < 1 || l.i > n_ || (l.is_x() && (l.j < 1 || l.j > n_)))
                throw Error("label " + l.str() + " out of range for n=" + std::to_string(n_));
        }
        if (!pos_.emplace(l, p).second) throw Error("duplicate basis label " + l.str());
    }
}

int LieAlgebra::position(const GeneratorLabel& l) const {
    auto it = pos_.find(l);
    if (it == pos_.end()) throw Error("unknown generator " + l.str() + " in algebra " + name_);
    return it->second;
}

void LieAlgebra::set_bracket(int p, int q, Element e) {
    if (p < 0 || q >= dim() || p >= q) throw Error("set_bracket needs basis positions p < q");
    Element coerced;
    for (const auto& [l, c] : e.terms()) {
        position(l);  // reject foreign labels
        if (c.trunc() && c.trunc() != trunc_)
            throw Error("coefficient truncation does not match the algebra's scalar ring");
        if (!symbolic_eps_ && !c.is_constant())
            throw Error("eps coefficient in an algebra over Q");
        coerced.add_term(l, trunc_ && !c.trunc() ? c.truncated(*trunc_) : c);
    }
    if (coerced.is_zero())
        table_.erase({p, q});
    else
        table_[{p, q}] = std::move(coerced);
}

Element LieAlgebra::bracket_positions(int p, int q) const {
    if (p < 0 || p >= dim() || q < 0 || q >= dim())
        throw Error("basis position out of range");
    if (p == q) return {};
    bool flip = p > q;
    auto it = table_.find(flip ? std::make_pair(q, p) : std::make_pair(p, q));
    if (it == table_.end()) return {};
    return flip ? -it->second : it->second;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
    Element r;
    for (const auto& [lx, cx] : x.terms()) {
        int p = position(lx);
        for (const auto& [ly, cy] : y.terms()) {
            int q = position(ly);
            if (p == q) continue;
            Element w = bracket_positions(p, q);
            if (w.is_zero()) continue;
            r += w.scaled(cx * cy);
        }
    }
    return r;
}

Element LieAlgebra::jacobi_defect(int p, int q, int r) const {
    Element ep = Element::unit(label_at(p));
    Element eq = Element::unit(label_at(q));
    Element er = Element::unit(label_at(r));
    return bracket(bracket_positions(p, q), er) + bracket(bracket_positions(q, r), ep) +
           bracket(bracket_positions(r, p), eq);
}

JacobiReport LieAlgebra::verify_jacobi() const {
    JacobiReport report;
    for (int p = 0; p < dim(); ++p)
        for (int q = p + 1; q < dim(); ++q)
            for (int r = q + 1; r < dim(); ++r) {
                Element d = jacobi_defect(p, q, r);
                if (!d.is_zero()) report.violations.push_back({p, q, r, std::move(d)});
            }
    return report;
}

LieAlgebra LieAlgebra::specialize(const Rational& v) const {
    if (trunc_) throw Error("cannot specialize a truncated algebra");
    LieAlgebra out(name_ + "@" + v.str(), n_, basis_, std::nullopt, false);
    for (const auto& [pq, e] : table_) {
        Element se;
        for (const auto& [l, c] : e.terms()) se.add_term(l, EpsPoly(c.specialize(v)));
        out.set_bracket(pq.first, pq.second, std::move(se));
    }
    return out;
}

LieAlgebra LieAlgebra::truncated(int k) const {
    if (trunc_ && *trunc_ < k) throw Error("cannot relax an existing truncation");
    LieAlgebra out(name_ + " mod eps^" + std::to_string(k + 1), n_, basis_, k, symbolic_eps_);
    for (const auto& [pq, e] : table_) {
        Element te;
        for (const auto& [l, c] : e.terms()) te.add_term(l, c.truncated(k));
        out.set_bracket(pq.first, pq.second, std::move(te));
    }
    return out;
}

bool LieAlgebra::same_structure(const LieAlgebra& o) const {
    return basis_ == o.basis_ && trunc_ == o.trunc_ && table_ == o.table_;
}

bool LieAlgebra::same_table_values(const LieAlgebra& o) const {
    if (basis_ != o.basis_) return false;
    auto it = table_.begin();
    auto jt = o.table_.begin();
    for (; it != table_.end() && jt != o.table_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        const auto& a = it->second.terms();
        const auto& b = jt->second.terms();
        if (a.size() != b.size()) return false;
        auto at = a.begin();
        auto bt = b.begin();
        for (; at != a.end(); ++at, ++bt)
            if (at->first != bt->first || at->second.coeffs() != bt->second.coeffs()) return false;
    }
    return it == table_.end() && jt == o.table_.end();
}

LieAlgebra change_of_basis(const LieAlgebra& L,
                           const std::vector<std::pair<std::string, Element>>& new_basis) {
    if (static_cast<int>(new_basis.size()) != L.dim())
        throw Error("change_of_basis needs exactly dim(" + std::to_string(L.dim()) +
                    ") basis elements");
    RatMat rows;
    rows.reserve(new_basis.size());
    for (const auto& [name, e] : new_basis) rows.push_back(to_dense(L, e));
    SpanSolver solver(rows);
    if (solver.rank() != L.dim()) throw Error("proposed basis is not invertible");

    std::vector<GeneratorLabel> labels;
    labels.reserve(new_basis.size());
    for (const auto& [name, e] : new_basis) labels.push_back(GeneratorLabel::named(name));
    LieAlgebra out(L.name() + "'", L.n(), labels, L.trunc(), L.symbolic_eps());

    for (int p = 0; p < out.dim(); ++p)
        for (int q = p + 1; q < out.dim(); ++q) {
            Element w = L.bracket(new_basis[static_cast<size_t>(p)].second,
                                  new_basis[static_cast<size_t>(q)].second);
            auto coords = solver.coordinates(L, w);
            if (!coords) throw Error("change_of_basis: bracket escapes the span");  // unreachable at full rank
            Element e;
            for (size_t i = 0; i < coords->size(); ++i) e.add_term(labels[i], (*coords)[i]);
            out.set_bracket(p, q, std::move(e));
        }
    return out;
}

}  // namespace lieforge
