#pragma once

#include <map>
#include <set>
#include <vector>

#include "segdet/matrix.hpp"

namespace segdet {

// A point of Gr(k, n) presented as the row span of a k x n matrix.
struct PointConfiguration {
    int k = 0;
    int n = 0;
    ExactMatrix mat;

    PointConfiguration() = default;
    PointConfiguration(int k_, int n_, ExactMatrix m);
    static PointConfiguration from_matrix(ExactMatrix m);
};

enum class PlueckerFlavor { Dual, Primal };

// Coordinates indexed by the k-subsets of [n] in ascending order. Dual
// coordinates are maximal minors of a row-span representative; primal ones
// are maximal minors of a kernel representative, and the two determine each
// other up to sign by complementing index sets.
struct PlueckerVector {
    int k = 0;
    int n = 0;
    PlueckerFlavor flavor = PlueckerFlavor::Dual;
    std::map<std::vector<int>, Rational> coords;

    const Rational& at(const std::vector<int>& subset) const;
};

// All k-subsets of {1..n}, ascending lexicographic.
std::vector<std::vector<int>> k_subsets(int n, int k);

// epsilon(I) = sum(I) - (1 + 2 + ... + k); the complement carries the sign
// (-1)^epsilon(I) between primal and dual coordinates.
int complement_sign_exponent(const std::vector<int>& subset);

// Maximal minors of the representative matrix. Throws on rank deficiency.
PlueckerVector dual_pluecker(const PointConfiguration& a);

// Signed complement. Accepts either flavor and flips it; applying it twice
// returns the input up to one global sign depending only on (k, n).
PlueckerVector primal_from_dual(const PlueckerVector& q);

// An (n-k) x n matrix B with B * A^T = 0 and full rank: the Gale dual
// presentation of the same subspace. dual_pluecker(kernel_matrix(A)) is
// proportional to primal_from_dual(dual_pluecker(A)).
PointConfiguration kernel_matrix(const PointConfiguration& a);

struct Matroid {
    int k = 0;
    int n = 0;
    std::set<std::vector<int>> bases;
};

// Bases = supports of the nonzero dual Plücker coordinates.
Matroid matroid_of(const PointConfiguration& a);
bool is_uniform(const PointConfiguration& a);

// Canonical representative of the (row ops x column scaling) orbit of a
// uniform configuration: columns 1..k the identity, row 1 of the remaining
// block all ones, column k+1 all ones. Uniformity makes every pivot and
// scaling entry nonzero. Two uniform configurations lie in the same orbit
// iff their normal forms agree entrywise.
ExactMatrix torus_normal_form(const PointConfiguration& a);
bool torus_orbit_equivalent(const PointConfiguration& a, const PointConfiguration& b);

// Exact projective proportionality: same zero pattern, and cross products
// v_i w_j = v_j w_i throughout (division-free).
bool proportional(const std::vector<Rational>& v, const std::vector<Rational>& w);

}  // namespace segdet
