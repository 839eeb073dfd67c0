#include "lieforge/linalg.hpp"

#include <algorithm>

namespace lieforge {

namespace {

// RREF restricted to the first lead_cols columns; keeps zero rows (the tail
// columns ride along, which is how SpanSolver records its row operations).
std::vector<int> rref_partial(RatMat& m, int lead_cols) {
    std::vector<int> pivots;
    int rows = static_cast<int>(m.size());
    int rank = 0;
    for (int c = 0; c < lead_cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(piv)]);
        auto& prow = m[static_cast<size_t>(rank)];
        Rational d = prow[static_cast<size_t>(c)];
        if (!d.is_one())
            for (auto& x : prow) x /= d;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            auto& row = m[static_cast<size_t>(r)];
            for (size_t cc = 0; cc < row.size(); ++cc)
                if (!prow[cc].is_zero()) row[cc] -= f * prow[cc];
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

}  // namespace

int rref(RatMat& m) {
    if (m.empty()) return 0;
    int cols = static_cast<int>(m[0].size());
    auto pivots = rref_partial(m, cols);
    m.resize(pivots.size());
    return static_cast<int>(pivots.size());
}

RatMat kernel_basis(const RatMat& m, int cols) {
    RatMat red = m;
    for (const auto& row : red)
        if (static_cast<int>(row.size()) != cols) throw Error("kernel_basis: ragged matrix");
    auto pivots = rref_partial(red, cols);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    RatMat out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        RatRow v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(f)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -red[r][static_cast<size_t>(f)];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<RatRow> solve_exact(const RatMat& a, const RatRow& b) {
    int rows = static_cast<int>(a.size());
    if (rows != static_cast<int>(b.size())) throw Error("solve_exact: size mismatch");
    int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    RatMat aug(static_cast<size_t>(rows), RatRow(static_cast<size_t>(cols) + 1, Rational(0)));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) aug[static_cast<size_t>(r)][static_cast<size_t>(c)] = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
        aug[static_cast<size_t>(r)][static_cast<size_t>(cols)] = b[static_cast<size_t>(r)];
    }
    auto pivots = rref_partial(aug, cols);
    if (static_cast<int>(pivots.size()) != cols)
        throw Error("solve_exact: matrix does not have full column rank");
    for (size_t r = pivots.size(); r < aug.size(); ++r)
        if (!aug[r][static_cast<size_t>(cols)].is_zero()) return std::nullopt;
    RatRow y(static_cast<size_t>(cols), Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        y[static_cast<size_t>(pivots[r])] = aug[r][static_cast<size_t>(cols)];
    return y;
}

SpanSolver::SpanSolver(const RatMat& rows) {
    int m = static_cast<int>(rows.size());
    cols_ = m == 0 ? 0 : static_cast<int>(rows[0].size());
    // Solve y * rows = v as rows^T y = v: RREF the transpose augmented with
    // the identity so repeated right-hand sides reuse the row operations.
    RatMat aug(static_cast<size_t>(cols_),
               RatRow(static_cast<size_t>(m + cols_), Rational(0)));
    for (int r = 0; r < cols_; ++r) {
        for (int c = 0; c < m; ++c)
            aug[static_cast<size_t>(r)][static_cast<size_t>(c)] = rows[static_cast<size_t>(c)][static_cast<size_t>(r)];
        aug[static_cast<size_t>(r)][static_cast<size_t>(m + r)] = 1;
    }
    pivot_of_row_ = rref_partial(aug, m);
    rref_.assign(aug.size(), {});
    transform_.assign(aug.size(), {});
    for (size_t r = 0; r < aug.size(); ++r) {
        rref_[r].assign(aug[r].begin(), aug[r].begin() + m);
        transform_[r].assign(aug[r].begin() + m, aug[r].end());
    }
}

std::optional<RatRow> SpanSolver::coordinates(const RatRow& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("SpanSolver: vector size mismatch");
    size_t m = rref_.empty() ? 0 : rref_[0].size();
    RatRow y(m, Rational(0));
    for (size_t r = 0; r < rref_.size(); ++r) {
        Rational acc(0);
        for (int c = 0; c < cols_; ++c)
            if (!transform_[r][static_cast<size_t>(c)].is_zero())
                acc += transform_[r][static_cast<size_t>(c)] * v[static_cast<size_t>(c)];
        if (r < pivot_of_row_.size())
            y[static_cast<size_t>(pivot_of_row_[r])] = acc;
        else if (!acc.is_zero())
            return std::nullopt;  // outside the span
    }
    return y;
}

std::optional<std::vector<EpsPoly>> SpanSolver::coordinates(const std::vector<EpsPoly>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("SpanSolver: vector size mismatch");
    int max_deg = 0;
    std::optional<int> tr;
    for (const auto& c : v) {
        max_deg = std::max(max_deg, c.degree());
        tr = combine_trunc(tr, c.trunc());
    }
    size_t m = rref_.empty() ? 0 : rref_[0].size();
    std::vector<EpsPoly> out(m);
    for (int d = 0; d <= max_deg; ++d) {
        RatRow vd(v.size(), Rational(0));
        for (size_t i = 0; i < v.size(); ++i) vd[i] = v[i].coeff(d);
        auto yd = coordinates(vd);
        if (!yd) return std::nullopt;
        for (size_t i = 0; i < m; ++i)
            if (!(*yd)[i].is_zero()) out[i] += EpsPoly::monomial((*yd)[i], d);
    }
    if (tr)
        for (auto& p : out) p = p.truncated(*tr);
    return out;
}

std::optional<std::vector<EpsPoly>> SpanSolver::coordinates(const LieAlgebra& ambient,
                                                            const Element& v) const {
    std::vector<EpsPoly> dense(static_cast<size_t>(ambient.dim()));
    for (const auto& [l, c] : v.terms()) dense[static_cast<size_t>(ambient.position(l))] = c;
    return coordinates(dense);
}

Subspace::Subspace(int ambient_dim, RatMat rows) : ambient_dim_(ambient_dim), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (static_cast<int>(r.size()) != ambient_dim_)
            throw Error("subspace row has wrong ambient dimension");
    rref(rows_);
}

bool Subspace::contains(const RatRow& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_) throw Error("vector has wrong ambient dimension");
    RatRow w = v;
    for (const auto& row : rows_) {
        size_t pc = 0;
        while (pc < row.size() && row[pc].is_zero()) ++pc;
        if (pc == row.size()) continue;
        if (w[pc].is_zero()) continue;
        Rational f = w[pc];
        for (size_t c = pc; c < w.size(); ++c)
            if (!row[c].is_zero()) w[c] -= f * row[c];
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Subspace::contains(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(),
                       [this](const RatRow& r) { return contains(r); });
}

RatRow to_dense(const LieAlgebra& L, const Element& e) {
    RatRow v(static_cast<size_t>(L.dim()), Rational(0));
    for (const auto& [l, c] : e.terms()) {
        if (!c.is_constant() || c.trunc())
            throw Error("element has eps-polynomial coefficients: specialize eps first");
        v[static_cast<size_t>(L.position(l))] = c.constant_term();
    }
    return v;
}

Element from_dense(const LieAlgebra& L, const RatRow& v) {
    if (static_cast<int>(v.size()) != L.dim()) throw Error("vector has wrong ambient dimension");
    Element e;
    for (size_t p = 0; p < v.size(); ++p)
        if (!v[p].is_zero()) e.add_term(L.label_at(static_cast<int>(p)), EpsPoly(v[p]));
    return e;
}

namespace {

void require_rational(const LieAlgebra& L, const char* op) {
    if (!L.rational_scalars())
        throw Error(std::string(op) + " needs rational scalars: specialize eps first");
}

Subspace whole_space(const LieAlgebra& L) {
    RatMat rows(static_cast<size_t>(L.dim()), RatRow(static_cast<size_t>(L.dim()), Rational(0)));
    for (size_t p = 0; p < rows.size(); ++p) rows[p][p] = 1;
    return Subspace(L.dim(), std::move(rows));
}

}  // namespace

Subspace subspace_reduce(const LieAlgebra& L, const std::vector<Element>& gens) {
    require_rational(L, "subspace_reduce");
    RatMat rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(to_dense(L, g));
    return Subspace(L.dim(), std::move(rows));
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& u, const Subspace& v) {
    require_rational(L, "bracket_span");
    if (u.ambient_dim() != L.dim() || v.ambient_dim() != L.dim())
        throw Error("subspace does not live in this algebra");
    RatMat rows;
    for (const auto& ur : u.rows())
        for (const auto& vr : v.rows()) {
            Element w = L.bracket(from_dense(L, ur), from_dense(L, vr));
            if (!w.is_zero()) rows.push_back(to_dense(L, w));
        }
    return Subspace(L.dim(), std::move(rows));
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
    require_rational(L, "derived_series");
    std::vector<Subspace> chain{whole_space(L)};
    for (;;) {
        Subspace next = bracket_span(L, chain.back(), chain.back());
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

std::vector<Subspace> layer_series(const LieAlgebra& L) {
    require_rational(L, "layer_series");
    std::vector<Subspace> chain{whole_space(L)};
    Subspace g1 = bracket_span(L, chain.back(), chain.back());
    if (g1 == chain.back()) return chain;
    chain.push_back(g1);
    for (;;) {
        Subspace next = bracket_span(L, g1, chain.back());
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

Subspace center(const LieAlgebra& L) {
    require_rational(L, "center");
    int d = L.dim();
    // v central iff sum_i v_i [e_i, e_j] = 0 for all j: stack the adjoint.
    RatMat constraints;
    constraints.reserve(static_cast<size_t>(d) * static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        RatMat block(static_cast<size_t>(d), RatRow(static_cast<size_t>(d), Rational(0)));
        for (int i = 0; i < d; ++i) {
            Element w = L.bracket_positions(i, j);
            if (w.is_zero()) continue;
            RatRow wd = to_dense(L, w);
            for (int k = 0; k < d; ++k) block[static_cast<size_t>(k)][static_cast<size_t>(i)] = wd[static_cast<size_t>(k)];
        }
        for (auto& row : block) constraints.push_back(std::move(row));
    }
    return Subspace(d, kernel_basis(constraints, d));
}

LieAlgebra expand_truncated(const LieAlgebra& L) {
    if (!L.trunc()) throw Error("expand_truncated needs a truncated algebra");
    int k = *L.trunc();
    int d = L.dim();
    std::vector<GeneratorLabel> basis;
    basis.reserve(static_cast<size_t>(d) * static_cast<size_t>(k + 1));
    for (int deg = 0; deg <= k; ++deg)
        for (int p = 0; p < d; ++p)
            basis.push_back(GeneratorLabel::named(L.label_at(p).str() + "@" + std::to_string(deg)));
    auto idx = [d](int p, int deg) { return deg * d + p; };
    LieAlgebra out(L.name() + " over Q", L.n(), std::move(basis));
    for (const auto& [pq, e] : L.table()) {
        for (int dg = 0; dg <= k; ++dg)
            for (int eg = 0; dg + eg <= k; ++eg) {
                Element img;
                for (const auto& [l, c] : e.terms()) {
                    int lp = L.position(l);
                    for (int f = 0; dg + eg + f <= k; ++f) {
                        Rational cf = c.coeff(f);
                        if (!cf.is_zero())
                            img.add_term(out.label_at(idx(lp, dg + eg + f)), EpsPoly(cf));
                    }
                }
                if (img.is_zero()) continue;
                int a = idx(pq.first, dg), b = idx(pq.second, eg);
                if (a < b)
                    out.set_bracket(a, b, img);
                else
                    out.set_bracket(b, a, -img);
            }
    }
    return out;
}

bool is_solvable(const LieAlgebra& L) {
    const LieAlgebra* target = &L;
    LieAlgebra expanded = L.trunc() ? expand_truncated(L) : L;
    if (L.trunc()) target = &expanded;
    if (!target->rational_scalars())
        throw Error("is_solvable needs specialized or truncated scalars");
    auto chain = derived_series(*target);
    return chain.back().dimension() == 0;
}

}  // namespace lieforge
