#pragma once

#include <initializer_list>
#include <vector>

#include "segdet/rational.hpp"

namespace segdet {

// Dense matrix of exact rationals, row-major. Indices are 0-based here;
// the 1-based index conventions of brackets and variables live at the
// call sites that need them.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
    ExactMatrix(int rows, int cols, std::vector<Rational> entries);
    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const std::vector<Rational>& entries() const { return data_; }

    ExactMatrix transpose() const;
    ExactMatrix mul(const ExactMatrix& other) const;
    ExactMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;  // this * v

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

// Exact determinant by fraction-free Bareiss elimination (denominators are
// cleared row-wise first, so the elimination runs over integer values and
// every interior division is exact). The empty 0x0 matrix has determinant 1.
Rational det_exact(const ExactMatrix& m);

struct RrefResult {
    ExactMatrix rref;
    std::vector<int> pivot_cols;
    int rank = 0;
};

RrefResult rref(const ExactMatrix& m);

int rank(const ExactMatrix& m);

// Basis of {x : m x = 0}, one solution per row of the result
// ((cols - rank) x cols; zero rows mean a trivial kernel).
ExactMatrix nullspace(const ExactMatrix& m);

// Basis of {v : v m = 0}, one covector per row.
ExactMatrix left_nullspace(const ExactMatrix& m);

// For full-row-rank m (k x n, k <= n): an n x k matrix phi with m * phi = I.
// Rows of phi outside the chosen pivot columns are zero. `use_last_pivots`
// selects the rightmost independent column set instead of the leftmost,
// which is handy for checking that downstream results do not depend on the
// choice of partial inverse.
ExactMatrix right_inverse(const ExactMatrix& m, bool use_last_pivots = false);

}  // namespace segdet
