#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/algebra.hpp"

namespace lieforge {

/// Upper triangular n x n matrices: basis {a_i} then {x_ij, i<j}; matrix
/// commutator table with x_ii read as a_i.
LieAlgebra build_un(int n);
/// Lower triangular matrices with every structure constant multiplied by
/// eps: basis {b_i} then {x_ij, i>j}.
LieAlgebra build_ln_eps(int n);
/// Lower triangular matrices with the zero bracket (abelian); same basis as
/// build_ln_eps. The eps = 0 end of the contraction.
LieAlgebra build_ln_abelian(int n);
/// Full n x n matrix algebra on named generators e[i,j].
LieAlgebra build_gln(int n);

/// Direct transcription of the commutation relations of Iu_n = u_n x u_n*,
/// including the length gate and the 1/2(b_i - b_j) dual-pair row.
LieAlgebra build_Iu_direct(int n);
/// Direct transcription of the relations of gl_{n+}^eps: the gate weakens to
/// eps instead of 0 and the dual-pair row gains eps/2 (a_i - a_j).
LieAlgebra build_glpluseps_direct(int n);

/// Explicit dual identification for the coadjoint semidirect product: a
/// label bijection plus the pairing weight <dual(u), u> per primal label.
/// The weight on the diagonal (2 by default) is a visible, swappable input.
struct DualityConvention {
    std::map<GeneratorLabel, GeneratorLabel> dual;
    std::map<GeneratorLabel, Rational> weight;
};
/// x_ij <-> x_ji with weight 1, a_i <-> b_i with the given diagonal weight.
DualityConvention standard_duality(int n, const Rational& diag_weight = 2);

/// A x A* with bracket [(x,f),(y,g)] = ([x,y], x.g - y.f), where the
/// coadjoint action is (x.f)(v) = f([v,x]). The supplied duality weights
/// enter the identification of functionals with dual basis vectors.
LieAlgebra coadjoint_semidirect(const LieAlgebra& A, const DualityConvention& d);

/// Symmetric bilinear form given sparsely on generator pairs.
class BilinearForm {
public:
    void set(const GeneratorLabel& u, const GeneratorLabel& v, const Rational& c);
    Rational pairing(const GeneratorLabel& u, const GeneratorLabel& v) const;
    EpsPoly pairing(const Element& x, const Element& y) const;
    const std::map<std::pair<GeneratorLabel, GeneratorLabel>, Rational>& entries() const {
        return entries_;
    }

private:
    std::map<std::pair<GeneratorLabel, GeneratorLabel>, Rational> entries_;
};

/// The form on u_n + l_n with isotropic summands, <x_kl, x_ij> = d_li d_jk
/// and <b_i, a_j> = 2 d_ij.
BilinearForm standard_pairing(int n);

/// Unique bracket on U + L extending both summands' brackets and leaving the
/// form invariant; the mixed bracket is solved componentwise through the
/// pairing. Jacobi is verified on the result, not assumed.
LieAlgebra manin_double(const LieAlgebra& U, const LieAlgebra& L, const BilinearForm& form);

/// A subalgebra re-expressed on its own basis, plus the embedding of that
/// basis into the parent (needed to transport maps).
struct Subalgebra {
    LieAlgebra algebra;
    std::vector<std::pair<GeneratorLabel, Element>> embedding;
};

/// Builds the subalgebra spanned by the given independent elements, with the
/// induced table. Fails if the span is not closed under the bracket.
Subalgebra subalgebra_on(const LieAlgebra& L, const std::string& name,
                         std::vector<std::pair<GeneratorLabel, Element>> embedding);

/// The sl variant: x_ij together with consecutive differences
/// abar_i = a_i - a_{i+1} and bbar_i = b_i - b_{i+1}.
Subalgebra sl_restrict(const LieAlgebra& L);

struct DiamondResult {
    LieAlgebra algebra;                                        // on basis {a, x, y, b}
    std::vector<std::pair<GeneratorLabel, Element>> embedding;  // into the parent
    LieAlgebra parent;                                         // Iu_2
};

/// The 4-dimensional diamond (Nappi-Witten) algebra obtained from sl of Iu_2
/// by a = (a_1-a_2)/2, x = x_12, y = x_21, b = (b_1-b_2)/2.
DiamondResult diamond();

}  // namespace lieforge
