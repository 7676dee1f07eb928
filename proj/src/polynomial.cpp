#include "segdet/polynomial.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

#include "segdet/error.hpp"

namespace segdet {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            out.push_back(a[i++]);
        else if (b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m) {
        if (!first) os << "*";
        first = false;
        os << side_char(v.side) << "(" << v.row << "," << v.col << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

SparsePolynomial::SparsePolynomial(Rational constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

SparsePolynomial SparsePolynomial::variable(VarId v) {
    SparsePolynomial p;
    p.terms_.emplace(Monomial{{v, 1}}, Rational(1));
    return p;
}

SparsePolynomial SparsePolynomial::term(Rational coeff, Monomial m) {
    SparsePolynomial p;
    p.add_term(m, coeff);
    return p;
}

int SparsePolynomial::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [v, e] : m) d += e;
        if (d > deg) deg = d;
    }
    return deg;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
    SparsePolynomial p;
    if (c.is_zero()) return p;
    for (const auto& [m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
    return p;
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (m.empty()) {
            os << mag.str();
        } else {
            if (mag != Rational(1)) os << mag.str() << "*";
            os << monomial_str(m);
        }
    }
    return os.str();
}

SparsePolynomial poly_mul(const SparsePolynomial& p, const SparsePolynomial& q) {
    SparsePolynomial out;
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) out.add_term(monomial_mul(mp, mq), cp * cq);
    return out;
}

Rational poly_eval(const SparsePolynomial& p, const std::map<VarId, Rational>& assignment) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational v = c;
        for (const auto& [var, exp] : m) {
            auto it = assignment.find(var);
            if (it == assignment.end()) {
                std::ostringstream os;
                os << "no value for variable " << side_char(var.side) << "(" << var.row << ","
                   << var.col << ")";
                throw DomainError("missing_variable", os.str());
            }
            v *= it->second.pow(static_cast<unsigned>(exp));
        }
        total += v;
    }
    return total;
}

ExactMatrix PolyMatrix::eval(const std::map<VarId, Rational>& assignment) const {
    ExactMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = poly_eval(at(r, c), assignment);
    return out;
}

SparsePolynomial det_symbolic(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("non_square", "determinant of non-square matrix");
    const int n = m.rows();
    if (n > 31) throw DomainError("too_large", "symbolic determinant limited to 31 columns");

    std::unordered_map<std::uint32_t, SparsePolynomial> memo;
    memo.reserve(1u << n);

    // minor(S) = det of rows 0..|S|-1 on column set S, expanded along its
    // last row; shared sub-minors are looked up instead of recomputed.
    auto minor = [&](auto&& self, std::uint32_t cols_mask) -> const SparsePolynomial& {
        auto it = memo.find(cols_mask);
        if (it != memo.end()) return it->second;
        SparsePolynomial det;
        const int r = std::popcount(cols_mask);
        if (r == 0) {
            det = SparsePolynomial(Rational(1));
        } else {
            int pos = 0;
            for (int c = 0; c < n; ++c) {
                if (!(cols_mask & (1u << c))) continue;
                const SparsePolynomial& entry = m.at(r - 1, c);
                if (!entry.is_zero()) {
                    const SparsePolynomial& sub = self(self, cols_mask & ~(1u << c));
                    SparsePolynomial piece = poly_mul(entry, sub);
                    if (((r - 1) + pos) % 2 == 0)
                        det += piece;
                    else
                        det -= piece;
                }
                ++pos;
            }
        }
        return memo.emplace(cols_mask, std::move(det)).first->second;
    };

    const std::uint32_t full = n == 0 ? 0u : ((n == 31) ? 0x7fffffffu : ((1u << n) - 1));
    return minor(minor, full);
}

}  // namespace segdet
