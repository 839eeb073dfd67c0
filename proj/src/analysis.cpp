#include "lieforge/analysis.hpp"

#include <algorithm>

#include "lieforge/linalg.hpp"

namespace lieforge {

int length_of(const GeneratorLabel& l, int n) {
    if (!l.is_x()) throw Error("length is defined for x labels only (use layer)");
    if (l.i < 1 || l.i > n || l.j < 1 || l.j > n)
        throw Error("label " + l.str() + " out of range for n=" + std::to_string(n));
    return l.i < l.j ? l.j - l.i : n - (l.i - l.j);
}

int layer_of(const GeneratorLabel& l, int n) {
    switch (l.kind) {
        case GeneratorLabel::Kind::A:
            if (l.i < 1 || l.i > n) throw Error("label out of range");
            return 0;
        case GeneratorLabel::Kind::B:
            if (l.i < 1 || l.i > n) throw Error("label out of range");
            return n;
        case GeneratorLabel::Kind::X:
            return length_of(l, n);
        case GeneratorLabel::Kind::Named:
            break;
    }
    throw Error("layer is defined on the a/b/x label family only");
}

std::vector<GeneratorLabel> listed_generators(int n, int p) {
    if (p < 0 || p > n) throw Error("layer index out of range");
    std::vector<GeneratorLabel> out;
    out.reserve(static_cast<size_t>(n));
    if (p == 0) {
        for (int i = 1; i <= n; ++i) out.push_back(GeneratorLabel::a(i));
    } else if (p == n) {
        for (int i = 1; i <= n; ++i) out.push_back(GeneratorLabel::b(i));
    } else {
        // the psi-orbit of x_{1,1+p}: wraps from u_n into its dual part
        int i = 1, j = 1 + p;
        for (int t = 0; t < n; ++t) {
            out.push_back(GeneratorLabel::x(i, j));
            i = i % n + 1;
            j = j % n + 1;
        }
    }
    return out;
}

std::string CheckReport::summary() const {
    if (witnesses.empty()) return "";
    return witnesses.front() +
           (witnesses.size() > 1 ? " (+" + std::to_string(witnesses.size() - 1) + " more)" : "");
}

CheckReport length_invariance(int n, const LinearMap& m) {
    CheckReport report;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            GeneratorLabel src = GeneratorLabel::x(i, j);
            Element img = m.apply(src);
            for (const auto& [l, c] : img.terms()) {
                if (!l.is_x()) {
                    report.witnesses.push_back(src.str() + " -> non-x term " + l.str());
                    continue;
                }
                if (length_of(l, n) != length_of(src, n))
                    report.witnesses.push_back(src.str() + " -> " + l.str() + ": length " +
                                               std::to_string(length_of(src, n)) + " vs " +
                                               std::to_string(length_of(l, n)));
            }
        }
    return report;
}

CheckReport psi_preserves_length(int n) {
    if (n < 2) throw Error("length invariance needs n >= 2");
    return length_invariance(n, psi_map(n));
}

LayerTableReport verify_layer_table(int n) {
    if (n < 1) throw Error("verify_layer_table needs n >= 1");
    LayerTableReport report;
    LieAlgebra L = build_Iu_direct(n);
    LinearMap psi = psi_map(n);

    std::vector<std::vector<GeneratorLabel>> listed;
    listed.reserve(static_cast<size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) listed.push_back(listed_generators(n, p));

    // (a) the layer series recursion against the nested listed-generator spans
    auto series = layer_series(L);
    for (int p = 0; p <= n; ++p) {
        std::vector<Element> gens;
        for (int r = p; r <= n; ++r)
            for (const auto& l : listed[static_cast<size_t>(r)]) gens.push_back(Element::unit(l));
        Subspace span = subspace_reduce(L, gens);
        if (p >= static_cast<int>(series.size())) {
            report.filtration.witnesses.push_back(
                "layer " + std::to_string(p) + ": series already stabilized, listed span has dim " +
                std::to_string(span.dimension()));
            continue;
        }
        const Subspace& term = series[static_cast<size_t>(p)];
        if (!(term == span))
            report.filtration.witnesses.push_back(
                "layer " + std::to_string(p) + ": series term has dim " +
                std::to_string(term.dimension()) + ", listed span has dim " +
                std::to_string(span.dimension()));
    }

    // (b) grading and (c) vanishing on all basis pairs
    for (int p = 0; p < L.dim(); ++p)
        for (int q = p + 1; q < L.dim(); ++q) {
            int sum = layer_of(L.label_at(p), n) + layer_of(L.label_at(q), n);
            Element w = L.bracket_positions(p, q);
            for (const auto& [l, c] : w.terms())
                if (layer_of(l, n) != sum)
                    report.grading.witnesses.push_back(
                        "[" + L.label_at(p).str() + "," + L.label_at(q).str() + "] has term " +
                        l.str() + " in layer " + std::to_string(layer_of(l, n)) +
                        ", expected " + std::to_string(sum));
            if (sum > n && !w.is_zero())
                report.vanishing.witnesses.push_back("[" + L.label_at(p).str() + "," +
                                                     L.label_at(q).str() + "] nonzero with p+q=" +
                                                     std::to_string(sum) + " > n");
        }

    // (d) each deeper listed generator is a bracket of a layer-1 and a
    // layer-(p-1) listed generator, on the nose
    for (int p = 2; p <= n; ++p) {
        for (const auto& g : listed[static_cast<size_t>(p)]) {
            Element target = Element::unit(g);
            bool found = false;
            for (const auto& u : listed[1])
                for (const auto& v : listed[static_cast<size_t>(p - 1)])
                    if (L.bracket(Element::unit(u), Element::unit(v)) == target) found = true;
            if (!found)
                report.generation.witnesses.push_back(
                    g.str() + " is not a bracket of listed layer-1 and layer-" +
                    std::to_string(p - 1) + " generators");
        }
    }

    // (e) membership: the dual part overtakes the row one slot per layer
    for (int p = 0; p <= n; ++p) {
        const auto& row = listed[static_cast<size_t>(p)];
        for (int t = 0; t < n; ++t) {
            const auto& l = row[static_cast<size_t>(t)];
            bool in_un = l.kind == GeneratorLabel::Kind::A || l.is_upper_x();
            bool expect_un = t < n - p;
            if (in_un != expect_un)
                report.membership.witnesses.push_back(
                    "layer " + std::to_string(p) + " slot " + std::to_string(t) + ": " + l.str() +
                    (in_un ? " lies in u_n" : " lies in the dual") + " but should not");
        }
    }

    // (f) psi shifts each row one step to the right, cyclically
    for (int p = 0; p <= n; ++p) {
        const auto& row = listed[static_cast<size_t>(p)];
        for (int t = 0; t < n; ++t) {
            Element img = psi.apply(row[static_cast<size_t>(t)]);
            Element next = Element::unit(row[static_cast<size_t>((t + 1) % n)]);
            if (img != next)
                report.psi_shift.witnesses.push_back("psi(" + row[static_cast<size_t>(t)].str() +
                                                     ") != " +
                                                     row[static_cast<size_t>((t + 1) % n)].str());
        }
    }
    return report;
}

MetricReport verify_metric_layers(int n) {
    if (n < 1) throw Error("verify_metric_layers needs n >= 1");
    MetricReport report;
    LieAlgebra L = build_Iu_direct(n);
    BilinearForm form = standard_pairing(n);

    for (int p = 0; p < L.dim(); ++p)
        for (int q = p; q < L.dim(); ++q) {
            Rational g = form.pairing(L.label_at(p), L.label_at(q));
            if (g.is_zero()) continue;
            int lp = layer_of(L.label_at(p), n), lq = layer_of(L.label_at(q), n);
            if (lp + lq != n)
                report.layer_pairing.witnesses.push_back(
                    "<" + L.label_at(p).str() + "," + L.label_at(q).str() + "> = " + g.str() +
                    " pairs layers " + std::to_string(lp) + " and " + std::to_string(lq));
        }

    for (int p = 0; p < L.dim(); ++p)
        for (int q = 0; q < L.dim(); ++q)
            for (int r = 0; r < L.dim(); ++r) {
                EpsPoly lhs = form.pairing(L.bracket_positions(p, q),
                                           Element::unit(L.label_at(r)));
                EpsPoly rhs = form.pairing(Element::unit(L.label_at(p)),
                                           L.bracket_positions(q, r));
                if (lhs != rhs)
                    report.invariance.witnesses.push_back(
                        "<[" + L.label_at(p).str() + "," + L.label_at(q).str() + "]," +
                        L.label_at(r).str() + "> = " + lhs.str() + " but <" +
                        L.label_at(p).str() + ",[" + L.label_at(q).str() + "," +
                        L.label_at(r).str() + "]> = " + rhs.str());
            }
    return report;
}

}  // namespace lieforge
