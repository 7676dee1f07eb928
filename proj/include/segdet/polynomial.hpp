#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "segdet/matrix.hpp"
#include "segdet/rational.hpp"

namespace segdet {

enum class Side : std::uint8_t { A = 0, B = 1 };

inline char side_char(Side s) { return s == Side::A ? 'a' : 'b'; }

// One indeterminate a_{row,col} or b_{row,col}, 1-based indices.
// The ordering (side, row, col) is the canonical variable order used for
// monomial normal forms and printing everywhere in the library.
struct VarId {
    Side side;
    int row;
    int col;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId var_a(int row, int col) { return {Side::A, row, col}; }
inline VarId var_b(int row, int col) { return {Side::B, row, col}; }

// Sorted (VarId, exponent>0) pairs.
using Monomial = std::vector<std::pair<VarId, int>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
std::string monomial_str(const Monomial& m);

// Multivariate polynomial over Rational in canonical form: no zero
// coefficients, monomials sorted by the fixed variable order. Two
// polynomials are equal iff their term maps are equal.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(Rational constant);
    static SparsePolynomial variable(VarId v);
    static SparsePolynomial term(Rational coeff, Monomial m);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;

    void add_term(const Monomial& m, const Rational& c);

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        return a += b;
    }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        return a -= b;
    }
    SparsePolynomial operator-() const;
    SparsePolynomial scaled(const Rational& c) const;

    bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

SparsePolynomial poly_mul(const SparsePolynomial& p, const SparsePolynomial& q);

// Exact evaluation; throws DomainError("missing_variable") naming the first
// variable of p not covered by the assignment.
Rational poly_eval(const SparsePolynomial& p, const std::map<VarId, Rational>& assignment);

// Matrix with polynomial entries, row-major, 0-based.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    SparsePolynomial& at(int r, int c) {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const SparsePolynomial& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    ExactMatrix eval(const std::map<VarId, Rational>& assignment) const;

private:
    int rows_, cols_;
    std::vector<SparsePolynomial> data_;
};

// Symbolic determinant by cofactor expansion, memoized over column subsets:
// the minor on rows 0..|S|-1 and column set S is computed once and shared by
// every expansion path that reaches it.
SparsePolynomial det_symbolic(const PolyMatrix& m);

}  // namespace segdet
