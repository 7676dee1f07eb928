#pragma once

#include <cstdint>
#include <vector>

#include "segdet/bracket.hpp"
#include "segdet/matrix.hpp"
#include "segdet/polynomial.hpp"

namespace segdet {

// Dimensions of the ambient product: points A_c x B_c with A_c in P^{k-1}
// and B_c in P^{l-1}. The Segre matrix is square exactly when r = k*l.
struct SegreShape {
    int k = 1;
    int l = 1;
    int r = 1;

    static SegreShape square(int k, int l) { return {k, l, k * l}; }
    int n() const { return k * l; }
};

// Row order of the flattened tensor: the pair (i, j), 1-based, sits at row
// (i-1)*l + j. Every formula, kernel reshaping, and file format in the
// project uses this single convention.
inline int segre_row(int i, int j, int l) { return (i - 1) * l + (j - 1); }

// Symbolic Segre matrix: entry at row (i,j), column c is a_{ic} * b_{jc}.
PolyMatrix segre_matrix_symbolic(const SegreShape& shape);

// Instantiated Segre matrix from point configurations A (k x r) and B (l x r).
ExactMatrix segre_matrix(const ExactMatrix& a, const ExactMatrix& b);

// Exact Segre determinant of k*l point pairs.
Rational segre_det(const ExactMatrix& a, const ExactMatrix& b);

// The full determinant as a polynomial in the a_{ic}, b_{jc}.
SparsePolynomial segre_det_symbolic(const SegreShape& shape);

// One term of the block Laplace expansion along the row groups that share a
// B-index j: an ordered partition (I_1, .., I_l) of [n] into k-sets, with
// block determinant [I_j] * prod_{c in I_j} b_{jc} and a permutation sign.
struct BlockLaplaceTerm {
    int sign;
    std::vector<std::vector<int>> blocks;  // blocks[j-1] = I_j, ascending

    BracketMonomial bracket_monomial() const;   // [I_1]...[I_l]
    Monomial b_monomial() const;                // prod_j prod_{c in I_j} b_{jc}
    std::uint64_t assignment_key() const;       // 4 bits per column: its B-row
};

// All n!/(k!)^l ordered partitions, ascending lexicographic in (I_1,..,I_l).
std::vector<BlockLaplaceTerm> block_laplace_dual(const SegreShape& shape);

// Segre determinant in the simultaneous standard bracket bases. `poly` is an
// exact representation of segre_det_symbolic (sign included); the reported
// sign of a comparison against an external formula is left to the caller.
struct DoubleExpansion {
    SegreShape shape;
    std::uint64_t seed;
    DoubleBracketPolynomial poly;
    std::vector<BracketMonomial> a_basis;  // standard multilinear, ascending
    std::vector<BracketMonomial> b_basis;
};

// Two-step algorithm: block Laplace into A-brackets, straighten; then for
// each standard A-monomial solve for the B-bracket coordinates of its
// b-coefficient from randomly sampled monomial constraints (seeded), and
// re-verify the candidate exactly by expansion before accepting it.
DoubleExpansion double_expansion(const SegreShape& shape, std::uint64_t seed = 0);

}  // namespace segdet
