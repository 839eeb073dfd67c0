#pragma once

#include <string>

#include "lieforge/algebra.hpp"

namespace lieforge {

/// Scalar-ring token for the sc-v1 header: Q, Q[eps] or Q[eps]/eps^<k+1>.
std::string ring_str(const LieAlgebra& L);

/// Inverse of GeneratorLabel::str(): "a[i]", "b[i]", "x[i,j]", else Named.
GeneratorLabel parse_sc_label(const std::string& token);

/// Canonical signed term list of an element, deterministic for a fixed
/// ambient: terms split per eps-degree and ordered by (degree, basis
/// position); unit coefficients elided. Example: "1/2*b[1] - 1/2*b[2]".
std::string render_element(const LieAlgebra& L, const Element& e);

/// Serializes the structure-constant table in the sc-v1 format, bit-exact:
///   lieforge-sc v1
///   algebra=<name> n=<n> ring=<ring>
///   basis = <labels in canonical order>
///   [<p>,<q>] = <signed term list>     (stored pairs p < q only)
std::string emit_sc(const LieAlgebra& L, const std::string& algebra_name);

/// Reconstructs a LieAlgebra from sc-v1 text; inverse of emit_sc up to the
/// algebra name.
LieAlgebra parse_sc(const std::string& text);

}  // namespace lieforge
