#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/labels.hpp"

namespace lieforge {

struct JacobiReport {
    struct Violation {
        int p, q, r;
        Element defect;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string witness() const;
};

/// Finite-dimensional Lie algebra given by an ordered basis and a sparse
/// antisymmetric bracket table over EpsPoly. Only pairs p < q (positions in
/// the basis) are stored; [e_q, e_p] is the negation of the stored entry and
/// [e_p, e_p] = 0 by construction. Immutable once built.
class LieAlgebra {
public:
    LieAlgebra(std::string name, int n, std::vector<GeneratorLabel> basis,
               std::optional<int> trunc = std::nullopt, bool symbolic_eps = false);

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<GeneratorLabel>& basis() const { return basis_; }
    const std::optional<int>& trunc() const { return trunc_; }
    /// True when the scalar ring is Q[eps] (or its quotient) rather than Q.
    bool symbolic_eps() const { return symbolic_eps_; }
    /// True when spans/kernels over Q are legal: plain rational scalars.
    bool rational_scalars() const { return !symbolic_eps_ && !trunc_; }

    bool has_label(const GeneratorLabel& l) const { return pos_.count(l) != 0; }
    int position(const GeneratorLabel& l) const;
    const GeneratorLabel& label_at(int p) const { return basis_.at(static_cast<size_t>(p)); }

    /// Builder hook: records [e_p, e_q] for p < q. Rejects foreign labels
    /// and scalars incompatible with the algebra's truncation.
    void set_bracket(int p, int q, Element e);
    const std::map<std::pair<int, int>, Element>& table() const { return table_; }

    Element bracket_positions(int p, int q) const;
    Element bracket(const Element& x, const Element& y) const;

    /// [[e_p,e_q],e_r] + [[e_q,e_r],e_p] + [[e_r,e_p],e_q]
    Element jacobi_defect(int p, int q, int r) const;
    /// Checks every triple p < q < r; antisymmetry makes the rest redundant.
    JacobiReport verify_jacobi() const;

    /// Coefficientwise evaluation at eps = v. Requires untruncated scalars.
    LieAlgebra specialize(const Rational& v) const;
    /// Coefficientwise reduction mod eps^(k+1); marks the scalar ring.
    LieAlgebra truncated(int k) const;

    /// Same basis labels and same bracket table (names are ignored).
    bool same_structure(const LieAlgebra& o) const;
    /// Like same_structure but blind to truncation markers on coefficients.
    bool same_table_values(const LieAlgebra& o) const;

private:
    std::string name_;
    int n_;
    std::vector<GeneratorLabel> basis_;
    std::map<GeneratorLabel, int> pos_;
    std::map<std::pair<int, int>, Element> table_;
    std::optional<int> trunc_;
    bool symbolic_eps_;
};

/// Rebuilds L on a proposed basis of Named generators. The transition matrix
/// must be eps-free (rational); it is inverted exactly and brackets of the
/// new basis vectors are re-expressed in the new basis.
LieAlgebra change_of_basis(const LieAlgebra& L,
                           const std::vector<std::pair<std::string, Element>>& new_basis);

}  // namespace lieforge
