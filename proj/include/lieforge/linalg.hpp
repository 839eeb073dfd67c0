#pragma once

#include <optional>
#include <vector>

#include "lieforge/algebra.hpp"

namespace lieforge {

using RatRow = std::vector<Rational>;
using RatMat = std::vector<RatRow>;

/// In-place reduced row echelon form with pivots normalized to 1 and zero
/// rows dropped; rows end up sorted by pivot column. Returns the rank.
int rref(RatMat& m);
/// Basis of { x : m x = 0 }, returned in reduced echelon form.
RatMat kernel_basis(const RatMat& m, int cols);
/// Exact solution of A y = b for A with full column rank; nullopt when the
/// system is inconsistent.
std::optional<RatRow> solve_exact(const RatMat& a, const RatRow& b);

/// Solves y * M = v repeatedly against a fixed matrix M of independent rows
/// (coordinates of vectors with respect to a given spanning set). Built once,
/// then queried per vector; eps-polynomial vectors are solved degree by degree.
class SpanSolver {
public:
    explicit SpanSolver(const RatMat& rows);
    int ambient_dim() const { return cols_; }
    int rank() const { return static_cast<int>(pivot_of_row_.size()); }
    std::optional<RatRow> coordinates(const RatRow& v) const;
    /// Eps-polynomial right-hand sides are solved degree by degree.
    std::optional<std::vector<EpsPoly>> coordinates(const std::vector<EpsPoly>& v) const;
    /// Coordinates of an algebra element over the spanning rows; each
    /// coordinate is an EpsPoly. nullopt when v is outside the span.
    std::optional<std::vector<EpsPoly>> coordinates(const LieAlgebra& ambient,
                                                    const Element& v) const;

private:
    RatMat rref_;            // RREF of the row matrix
    RatMat transform_;       // E with E * rows = rref_ (row-operation record)
    std::vector<int> pivot_of_row_;
    int cols_;
};

/// Subspace of an algebra's underlying vector space in canonical reduced
/// row echelon form; two subspaces are equal iff their rows are identical.
class Subspace {
public:
    Subspace(int ambient_dim, RatMat rows);

    int ambient_dim() const { return ambient_dim_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const RatMat& rows() const { return rows_; }
    bool contains(const RatRow& v) const;
    bool contains(const Subspace& o) const;
    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    int ambient_dim_;
    RatMat rows_;
};

/// Dense rational coordinates of an element; requires eps-free coefficients.
RatRow to_dense(const LieAlgebra& L, const Element& e);
Element from_dense(const LieAlgebra& L, const RatRow& v);

/// Canonical echelon basis of the span. Requires plain rational scalars;
/// symbolic or truncated inputs are refused (specialize eps first).
Subspace subspace_reduce(const LieAlgebra& L, const std::vector<Element>& gens);
/// Span of all pairwise brackets of the two bases, reduced.
Subspace bracket_span(const LieAlgebra& L, const Subspace& u, const Subspace& v);
/// D_0 = whole space, D_{m+1} = [D_m, D_m], until stabilization.
std::vector<Subspace> derived_series(const LieAlgebra& L);
/// g'_1 = [g,g], g'_p = [g'_1, g'_{p-1}]; returns [g, g'_1, ...] until
/// the chain stabilizes (reaching 0 for nilpotent-like algebras).
std::vector<Subspace> layer_series(const LieAlgebra& L);
/// Kernel of the adjoint action, computed by an exact linear solve.
Subspace center(const LieAlgebra& L);

/// Expands an algebra over Q[eps]/(eps^(k+1)) into a Q-algebra on the basis
/// { e_p * eps^d : 0 <= d <= k }. Used by is_solvable on truncated rings.
LieAlgebra expand_truncated(const LieAlgebra& L);
/// True iff the derived series terminates at 0. Accepts rational scalars
/// directly and truncated scalars via expand_truncated; refuses symbolic eps.
bool is_solvable(const LieAlgebra& L);

}  // namespace lieforge
