#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/constructions.hpp"

namespace lieforge {

/// Basis-indexed linear map given by the images of the source generators.
struct LinearMap {
    std::map<GeneratorLabel, Element> images;

    Element apply(const GeneratorLabel& l) const;
    Element apply(const Element& x) const;
    friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

LinearMap identity_map(const LieAlgebra& L);
/// f after g.
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap map_power(const LinearMap& m, int k);
/// Least k >= 1 with m^k = identity, searched up to the bound; nullopt when
/// the bound is exceeded.
std::optional<int> order_of(const LinearMap& m, int bound);

/// One-line notation, 1-based: perm[i-1] = sigma(i).
using Permutation = std::vector<int>;
std::string perm_str(const Permutation& s);
enum class Orientation { Auto, Anti };

/// Index-permutation candidate family: auto sends x_ij to x_{s(i)s(j)},
/// anti reverses the x indices; a_i and b_i follow sigma untwisted either way.
LinearMap perm_map(const Permutation& sigma, Orientation o);
/// "Increment all indices by 1 mod n": perm_map of the n-cycle, auto.
LinearMap psi_map(int n);
/// Flip along the anti-main-diagonal: x_ij -> x_{n+1-j,n+1-i}.
LinearMap phi_map(int n);

struct MorphismReport {
    struct Failure {
        int p, q;          // offending basis pair
        Element difference;  // m[x,y] - [mx,my] (or the reversed law)
    };
    bool invertible = true;
    std::vector<Failure> failures;
    bool ok() const { return invertible && failures.empty(); }
    std::string witness(const LieAlgebra& L) const;
};

/// Unit-determinant invertibility over the scalar ring: Bareiss over Q[eps]
/// for untruncated scalars (a unit determinant is a nonzero constant), the
/// constant-term determinant for truncated ones.
bool map_invertible(const LieAlgebra& src, const LieAlgebra& dst, const LinearMap& m);

/// m[x,y] = [mx,my] on all basis pairs (bilinearity covers the rest).
/// Does not require invertibility; automorphism checks add it on top.
MorphismReport is_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const LinearMap& m,
                               Orientation o = Orientation::Auto);
MorphismReport is_automorphism(const LieAlgebra& L, const LinearMap& m);
/// Reversed law m[x,y] = [my,mx], plus invertibility.
MorphismReport is_antiautomorphism(const LieAlgebra& L, const LinearMap& m);

/// Exponential of the adjoint action of an ad-nilpotent element: the finite
/// sum of ad_x^m / m!. Throws if ad_x fails to vanish within dim L steps.
LinearMap exp_ad(const LieAlgebra& L, const Element& x);

struct SymmetrySearch {
    std::vector<Permutation> autos;  // sorted one-line
    std::vector<Permutation> antis;
    bool closed = false;  // the 2n-ish map set is closed under composition
};

/// Brute force over all n! index permutations in both orientations. The
/// guard keeps runtimes at desk scale; override deliberately.
SymmetrySearch enumerate_symmetries(const LieAlgebra& L, int n, int guard = 8);

/// Restriction of a parent-algebra map along a subalgebra embedding; fails
/// when the map does not preserve the span.
LinearMap transport_map(const LieAlgebra& parent, const LinearMap& m, const Subalgebra& sub);

}  // namespace lieforge
