#include "segdet/matrix.hpp"

#include <utility>

#include "segdet/error.hpp"

namespace segdet {

ExactMatrix::ExactMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw DomainError("matrix_shape", "entry count does not match rows x cols");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw DomainError("matrix_shape", "ragged initializer");
        for (long v : row) data_.emplace_back(v);
    }
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix_shape", "inner dimensions differ");
    ExactMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (int c = 0; c < other.cols_; ++c) out.at(r, c) += at(r, k) * other.at(k, c);
        }
    return out;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& rows,
                                   const std::vector<int>& cols) const {
    ExactMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out.at(static_cast<int>(r), static_cast<int>(c)) = at(rows[r], cols[c]);
    return out;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DomainError("matrix_shape", "vector length does not match column count");
    std::vector<Rational> out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

Rational det_exact(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("non_square", "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    // Clear denominators per row so the Bareiss recurrence works on integers.
    ExactMatrix w = m;
    Rational scale = 1;
    for (int r = 0; r < n; ++r) {
        Rational lcm = 1;
        for (int c = 0; c < n; ++c) {
            const Rational& e = w.at(r, c);
            if (!e.is_zero() && !(e * lcm).is_integer()) lcm *= (e * lcm).den();
        }
        if (lcm != Rational(1)) {
            for (int c = 0; c < n; ++c) w.at(r, c) *= lcm;
            scale *= lcm;
        }
    }

    Rational sign = 1;
    Rational prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1) / scale;
}

RrefResult rref(const ExactMatrix& m) {
    RrefResult res{m, {}, 0};
    ExactMatrix& a = res.rref;
    int pivot_row = 0;
    for (int c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        int sel = -1;
        for (int r = pivot_row; r < a.rows(); ++r)
            if (!a.at(r, c).is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
        const Rational inv = Rational(1) / a.at(pivot_row, c);
        for (int j = c; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, c).is_zero()) continue;
            const Rational f = a.at(r, c);
            for (int j = c; j < a.cols(); ++j) a.at(r, j) -= f * a.at(pivot_row, j);
        }
        res.pivot_cols.push_back(c);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

int rank(const ExactMatrix& m) { return rref(m).rank; }

ExactMatrix nullspace(const ExactMatrix& m) {
    const RrefResult r = rref(m);
    const int n = m.cols();
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (int c : r.pivot_cols) is_pivot[c] = true;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    ExactMatrix basis(static_cast<int>(free_cols.size()), n);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const int fc = free_cols[i];
        basis.at(static_cast<int>(i), fc) = 1;
        for (int p = 0; p < r.rank; ++p)
            basis.at(static_cast<int>(i), r.pivot_cols[p]) = -r.rref.at(p, fc);
    }
    return basis;
}

ExactMatrix left_nullspace(const ExactMatrix& m) { return nullspace(m.transpose()); }

ExactMatrix right_inverse(const ExactMatrix& m, bool use_last_pivots) {
    const int k = m.rows(), n = m.cols();
    ExactMatrix probe = m;
    if (use_last_pivots) {
        // Reverse the columns so rref picks the rightmost independent set.
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) probe.at(r, c) = m.at(r, n - 1 - c);
    }
    const RrefResult rr = rref(probe);
    if (rr.rank != k) throw DomainError("rank_deficient", "matrix is not full row rank");
    std::vector<int> pivots;
    for (int c : rr.pivot_cols) pivots.push_back(use_last_pivots ? n - 1 - c : c);

    // Invert the k x k pivot block by solving against the identity.
    ExactMatrix block(k, 2 * k);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) block.at(r, c) = m.at(r, pivots[c]);
        block.at(r, k + r) = 1;
    }
    const RrefResult solved = rref(block);
    if (solved.rank != k) throw DomainError("rank_deficient", "pivot block not invertible");
    ExactMatrix phi(n, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) phi.at(pivots[r], c) = solved.rref.at(r, k + c);
    return phi;
}

}  // namespace segdet
