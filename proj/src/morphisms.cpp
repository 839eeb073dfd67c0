#include "lieforge/morphisms.hpp"

#include <algorithm>
#include <numeric>

#include "lieforge/linalg.hpp"

namespace lieforge {

Element LinearMap::apply(const GeneratorLabel& l) const {
    auto it = images.find(l);
    if (it == images.end()) throw Error("map is not defined on " + l.str());
    return it->second;
}

Element LinearMap::apply(const Element& x) const {
    Element r;
    for (const auto& [l, c] : x.terms()) r += apply(l).scaled(c);
    return r;
}

LinearMap identity_map(const LieAlgebra& L) {
    LinearMap m;
    for (const auto& l : L.basis()) m.images.emplace(l, Element::unit(l));
    return m;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    LinearMap r;
    for (const auto& [l, e] : g.images) r.images.emplace(l, f.apply(e));
    return r;
}

LinearMap map_power(const LinearMap& m, int k) {
    if (k < 0) throw Error("map_power needs k >= 0");
    LinearMap acc;
    for (const auto& [l, e] : m.images) acc.images.emplace(l, Element::unit(l));
    for (int s = 0; s < k; ++s) acc = compose(m, acc);
    return acc;
}

std::optional<int> order_of(const LinearMap& m, int bound) {
    LinearMap id;
    for (const auto& [l, e] : m.images) id.images.emplace(l, Element::unit(l));
    LinearMap acc = m;
    for (int k = 1; k <= bound; ++k) {
        if (acc == id) return k;
        acc = compose(m, acc);
    }
    return std::nullopt;
}

std::string perm_str(const Permutation& s) {
    std::string out;
    for (int v : s) out += std::to_string(v);
    return out;
}

LinearMap perm_map(const Permutation& sigma, Orientation o) {
    int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw Error("not a permutation: " + perm_str(sigma));
        seen[static_cast<size_t>(v - 1)] = true;
    }
    auto s = [&](int i) { return sigma[static_cast<size_t>(i - 1)]; };
    LinearMap m;
    for (int i = 1; i <= n; ++i) {
        m.images.emplace(GeneratorLabel::a(i), Element::unit(GeneratorLabel::a(s(i))));
        m.images.emplace(GeneratorLabel::b(i), Element::unit(GeneratorLabel::b(s(i))));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            GeneratorLabel img = o == Orientation::Auto ? GeneratorLabel::x(s(i), s(j))
                                                        : GeneratorLabel::x(s(j), s(i));
            m.images.emplace(GeneratorLabel::x(i, j), Element::unit(img));
        }
    return m;
}

LinearMap psi_map(int n) {
    if (n < 1) throw Error("psi needs n >= 1");
    Permutation s(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) s[static_cast<size_t>(i - 1)] = i % n + 1;
    return perm_map(s, Orientation::Auto);
}

LinearMap phi_map(int n) {
    if (n < 1) throw Error("phi needs n >= 1");
    Permutation s(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) s[static_cast<size_t>(i - 1)] = n + 1 - i;
    return perm_map(s, Orientation::Anti);
}

std::string MorphismReport::witness(const LieAlgebra& L) const {
    if (!invertible) return "map is not invertible";
    if (failures.empty()) return "";
    const auto& f = failures.front();
    return "pair (" + L.label_at(f.p).str() + "," + L.label_at(f.q).str() + ") differs by " +
           f.difference.str() +
           (failures.size() > 1 ? " (+" + std::to_string(failures.size() - 1) + " more)" : "");
}

namespace {

// Permutation-like maps (every image a single +-1 term, labels a bijection)
// are invertible by inspection.
bool label_bijection(const LieAlgebra& dst, const LinearMap& m) {
    std::vector<bool> hit(static_cast<size_t>(dst.dim()), false);
    for (const auto& [l, e] : m.images) {
        if (e.size() != 1) return false;
        const auto& [tl, c] = *e.terms().begin();
        if (!c.is_constant() || !(c.constant_term().abs().is_one())) return false;
        if (!dst.has_label(tl)) return false;
        size_t p = static_cast<size_t>(dst.position(tl));
        if (hit[p]) return false;
        hit[p] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// Fraction-free Bareiss determinant over Q[eps] (an integral domain).
EpsPoly bareiss_det(std::vector<std::vector<EpsPoly>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return EpsPoly(1);
    EpsPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return EpsPoly();
        if (piv != k) {
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (m[static_cast<size_t>(k)][static_cast<size_t>(k)] * m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                     m[static_cast<size_t>(i)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)])
                        .divexact(prev);
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = EpsPoly();
        }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    EpsPoly det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign < 0 ? -det : det;
}

}  // namespace

bool map_invertible(const LieAlgebra& src, const LieAlgebra& dst, const LinearMap& m) {
    if (src.dim() != dst.dim()) return false;
    if (static_cast<int>(m.images.size()) != src.dim()) return false;
    for (const auto& l : src.basis())
        if (!m.images.count(l)) return false;
    if (label_bijection(dst, m)) return true;

    bool all_rational = true;
    for (const auto& [l, e] : m.images)
        for (const auto& [tl, c] : e.terms())
            if (!c.is_constant()) all_rational = false;

    if (all_rational || src.trunc()) {
        // Over Q, or over a truncated ring where a unit determinant is
        // decided by its constant term: rank of the eps=0 matrix.
        RatMat mat(static_cast<size_t>(src.dim()), RatRow(static_cast<size_t>(dst.dim()), Rational(0)));
        for (int p = 0; p < src.dim(); ++p) {
            Element e = m.apply(src.label_at(p));
            for (const auto& [tl, c] : e.terms())
                mat[static_cast<size_t>(p)][static_cast<size_t>(dst.position(tl))] = c.constant_term();
        }
        return rref(mat) == src.dim();
    }
    // Symbolic eps, untruncated: a unit of Q[eps] is a nonzero constant.
    std::vector<std::vector<EpsPoly>> mat(static_cast<size_t>(src.dim()),
                                          std::vector<EpsPoly>(static_cast<size_t>(dst.dim())));
    for (int p = 0; p < src.dim(); ++p) {
        Element e = m.apply(src.label_at(p));
        for (const auto& [tl, c] : e.terms())
            mat[static_cast<size_t>(p)][static_cast<size_t>(dst.position(tl))] = c;
    }
    EpsPoly det = bareiss_det(std::move(mat));
    return det.is_constant() && !det.is_zero();
}

MorphismReport is_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const LinearMap& m,
                               Orientation o) {
    MorphismReport report;
    std::vector<Element> img(static_cast<size_t>(src.dim()));
    for (int p = 0; p < src.dim(); ++p) img[static_cast<size_t>(p)] = m.apply(src.label_at(p));
    for (int p = 0; p < src.dim(); ++p)
        for (int q = p + 1; q < src.dim(); ++q) {
            Element lhs = m.apply(src.bracket_positions(p, q));
            Element rhs = o == Orientation::Auto
                              ? dst.bracket(img[static_cast<size_t>(p)], img[static_cast<size_t>(q)])
                              : dst.bracket(img[static_cast<size_t>(q)], img[static_cast<size_t>(p)]);
            Element diff = lhs - rhs;
            if (!diff.is_zero()) report.failures.push_back({p, q, std::move(diff)});
        }
    return report;
}

MorphismReport is_automorphism(const LieAlgebra& L, const LinearMap& m) {
    MorphismReport report = is_homomorphism(L, L, m, Orientation::Auto);
    report.invertible = map_invertible(L, L, m);
    return report;
}

MorphismReport is_antiautomorphism(const LieAlgebra& L, const LinearMap& m) {
    MorphismReport report = is_homomorphism(L, L, m, Orientation::Anti);
    report.invertible = map_invertible(L, L, m);
    return report;
}

LinearMap exp_ad(const LieAlgebra& L, const Element& x) {
    LinearMap m;
    int bound = L.dim() + 1;
    for (const auto& l : L.basis()) {
        Element acc = Element::unit(l);
        Element power = acc;
        BigInt factorial = 1;
        int steps = 0;
        for (;;) {
            power = L.bracket(x, power);
            if (power.is_zero()) break;
            if (++steps > bound)
                throw Error("exp_ad: ad_x is not nilpotent (power survives past dim steps)");
            factorial *= steps;
            acc += power.scaled(Rational(1, factorial));
        }
        m.images.emplace(l, std::move(acc));
    }
    return m;
}

SymmetrySearch enumerate_symmetries(const LieAlgebra& L, int n, int guard) {
    if (n > guard)
        throw Error("enumeration guard exceeded: n = " + std::to_string(n) + " with guard " +
                    std::to_string(guard));
    if (n < 1) throw Error("enumeration needs n >= 1");
    SymmetrySearch result;
    Permutation sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        if (is_automorphism(L, perm_map(sigma, Orientation::Auto)).ok())
            result.autos.push_back(sigma);
        if (is_antiautomorphism(L, perm_map(sigma, Orientation::Anti)).ok())
            result.antis.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    // closure of the composed set under (sigma,o)(tau,p) = (sigma o tau, o.p)
    auto contains = [](const std::vector<Permutation>& v, const Permutation& s) {
        return std::binary_search(v.begin(), v.end(), s);
    };
    auto compose_perm = [](const Permutation& s, const Permutation& t) {
        Permutation r(s.size());
        for (size_t i = 0; i < s.size(); ++i) r[i] = s[static_cast<size_t>(t[i] - 1)];
        return r;
    };
    result.closed = true;
    std::vector<std::pair<Permutation, bool>> all;  // bool: anti?
    for (const auto& s : result.autos) all.emplace_back(s, false);
    for (const auto& s : result.antis) all.emplace_back(s, true);
    for (const auto& [s, sa] : all)
        for (const auto& [t, ta] : all) {
            Permutation prod = compose_perm(s, t);
            bool anti = sa != ta;
            if (!contains(anti ? result.antis : result.autos, prod)) result.closed = false;
        }
    return result;
}

LinearMap transport_map(const LieAlgebra& parent, const LinearMap& m, const Subalgebra& sub) {
    RatMat rows;
    rows.reserve(sub.embedding.size());
    for (const auto& [lab, e] : sub.embedding) rows.push_back(to_dense(parent, e));
    SpanSolver solver(rows);
    LinearMap out;
    for (size_t p = 0; p < sub.embedding.size(); ++p) {
        Element img = m.apply(sub.embedding[p].second);
        auto coords = solver.coordinates(parent, img);
        if (!coords)
            throw Error("map does not preserve the subalgebra span at " +
                        sub.embedding[p].first.str());
        Element e;
        for (size_t i = 0; i < coords->size(); ++i)
            e.add_term(sub.algebra.label_at(static_cast<int>(i)), (*coords)[i]);
        out.images.emplace(sub.embedding[p].first, std::move(e));
    }
    return out;
}

}  // namespace lieforge
