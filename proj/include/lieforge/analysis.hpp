#pragma once

#include <string>
#include <vector>

#include "lieforge/morphisms.hpp"

namespace lieforge {

/// Length of an off-diagonal generator: j - i above the diagonal,
/// n - (i - j) below. Defined for x labels only.
int length_of(const GeneratorLabel& l, int n);
/// Filtration degree: 0 for a_i, n for b_i, the length for x_ij.
int layer_of(const GeneratorLabel& l, int n);

/// The generators marked in layer p of the table: a_1..a_n for p = 0,
/// b_1..b_n for p = n, otherwise the psi-orbit starting at x_{1,1+p}.
std::vector<GeneratorLabel> listed_generators(int n, int p);

struct CheckReport {
    std::vector<std::string> witnesses;
    bool ok() const { return witnesses.empty(); }
    std::string summary() const;
};

/// lambda(m(x_ij)) = lambda(x_ij) for every off-diagonal label: every term
/// of the image must be an x label of the same length.
CheckReport length_invariance(int n, const LinearMap& m);
CheckReport psi_preserves_length(int n);

/// The verification suite for the layers table of Iu_n, one report per bullet:
///   filtration  - layer_series terms equal the spans of the listed
///                 generators of this and all deeper layers
///   grading     - every label in a basis-pair bracket sits in layer
///                 layer(u) + layer(v) (stronger than the filtration bullet)
///   vanishing   - brackets vanish when layer(u) + layer(v) > n
///   generation  - for p >= 2, each listed layer-p generator is a bracket of
///                 a listed layer-1 generator with a listed layer-(p-1) one
///   membership  - in layer p the first n-p listed generators lie in u_n and
///                 the last p in its dual
///   psi_shift   - psi moves each listed generator one step along its row
struct LayerTableReport {
    CheckReport filtration, grading, vanishing, generation, membership, psi_shift;
    bool ok() const {
        return filtration.ok() && grading.ok() && vanishing.ok() && generation.ok() &&
               membership.ok() && psi_shift.ok();
    }
};
LayerTableReport verify_layer_table(int n);

/// The metric bullets: the pairing of the u_n summand with its dual, read on
/// Iu_n, (a) pairs layer p only with layer n-p and (b) is ad-invariant.
struct MetricReport {
    CheckReport layer_pairing, invariance;
    bool ok() const { return layer_pairing.ok() && invariance.ok(); }
};
MetricReport verify_metric_layers(int n);

}  // namespace lieforge
