#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "segdet/polynomial.hpp"
#include "segdet/rational.hpp"

namespace segdet {

// Maximal-minor symbol on one side: [i1 .. ik] for the A matrix, <j1 .. jk>
// for the B matrix. Indices are 1-based and strictly increasing; construction
// from unsorted input goes through normalize_bracket, which reports the sort
// sign so callers never track alternation by hand.
struct Bracket {
    Side side = Side::A;
    std::vector<int> idx;

    int size() const { return static_cast<int>(idx.size()); }
    friend auto operator<=>(const Bracket&, const Bracket&) = default;
};

struct NormalizedBracket {
    Bracket bracket;
    int sign;  // +1 / -1, or 0 when an index repeats (the symbol vanishes)
};

// Sorts the indices and reports the permutation sign; throws on indices
// outside [1, n].
NormalizedBracket normalize_bracket(Side side, std::vector<int> raw, int n);

// Product of brackets of equal side and size, stored with the factors in
// increasing lexicographic order (factors commute, so this is a plain
// canonical form with no sign).
struct BracketMonomial {
    std::vector<Bracket> factors;

    BracketMonomial() = default;
    explicit BracketMonomial(std::vector<Bracket> f);

    int degree() const { return static_cast<int>(factors.size()); }
    int bracket_size() const { return factors.empty() ? 0 : factors.front().size(); }
    Side side() const { return factors.empty() ? Side::A : factors.front().side; }

    friend auto operator<=>(const BracketMonomial&, const BracketMonomial&) = default;
};

// Convenience constructor from raw index lists; folds normalization signs
// into `sign` (0 if any bracket vanishes).
struct SignedMonomial {
    BracketMonomial monomial;
    int sign;
};
SignedMonomial monomial_from_indices(Side side, const std::vector<std::vector<int>>& lists, int n);

struct BracketPolynomial {
    std::map<BracketMonomial, Rational> terms;

    void add_term(const BracketMonomial& m, const Rational& c);
    BracketPolynomial& operator+=(const BracketPolynomial& o);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const BracketPolynomial& o) const { return terms == o.terms; }
};

// Product in the bracket algebra (factors concatenate; no straightening).
BracketPolynomial bracket_mul(const BracketPolynomial& p, const BracketPolynomial& q);

// Polynomial in simultaneous A- and B-side bracket monomials.
struct DoubleBracketPolynomial {
    std::map<std::pair<BracketMonomial, BracketMonomial>, Rational> terms;

    void add_term(const BracketMonomial& a, const BracketMonomial& b, const Rational& c);
    bool operator==(const DoubleBracketPolynomial& o) const { return terms == o.terms; }
};

// Semi-standardness of the stacked tableau: with the factors in canonical
// order, the index at each position must be non-decreasing from one factor
// to the next (the strict increase down each factor is already built in).
bool is_standard(const BracketMonomial& m);

// Rewrites every non-standard monomial through quadratic exchange relations
// until only standard monomials remain. The result expands to the same
// polynomial in the underlying matrix entries; straighten is idempotent.
BracketPolynomial straighten(const BracketPolynomial& p);
BracketPolynomial straighten_monomial(const BracketMonomial& m);

// All standard monomials of `degree` brackets of size `bracket_size` whose
// indices cover [n] exactly once (requires n == bracket_size * degree).
// Deterministic: ascending lexicographic order.
std::vector<BracketMonomial> enumerate_standard_multilinear(int bracket_size, int degree, int n,
                                                            Side side = Side::A);

// Substitutes each bracket by the corresponding minor of the symbolic
// matrix of indeterminates: [I] on side A becomes the determinant of the
// submatrix of (a_{rc}) on columns I, and likewise <J> with b_{rc}.
SparsePolynomial expand_to_variables(const Bracket& b);
SparsePolynomial expand_to_variables(const BracketMonomial& m);
SparsePolynomial expand_to_variables(const BracketPolynomial& p);
SparsePolynomial expand_to_variables(const DoubleBracketPolynomial& p);

std::string bracket_str(const Bracket& b);
std::string monomial_str(const BracketMonomial& m);

}  // namespace segdet
