#include "segdet/grassmann.hpp"

#include <algorithm>

#include "segdet/error.hpp"

namespace segdet {

PointConfiguration::PointConfiguration(int k_, int n_, ExactMatrix m)
    : k(k_), n(n_), mat(std::move(m)) {
    if (mat.rows() != k || mat.cols() != n)
        throw DomainError("shape", "configuration matrix does not match k x n");
}

PointConfiguration PointConfiguration::from_matrix(ExactMatrix m) {
    const int k = m.rows(), n = m.cols();
    return PointConfiguration(k, n, std::move(m));
}

const Rational& PlueckerVector::at(const std::vector<int>& subset) const {
    auto it = coords.find(subset);
    if (it == coords.end()) throw DomainError("bad_subset", "no such Plücker coordinate");
    return it->second;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

int complement_sign_exponent(const std::vector<int>& subset) {
    int e = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) e += subset[i] - static_cast<int>(i) - 1;
    return e;
}

PlueckerVector dual_pluecker(const PointConfiguration& a) {
    if (rank(a.mat) != a.k) throw DomainError("rank_deficient", "configuration has rank < k");
    PlueckerVector v;
    v.k = a.k;
    v.n = a.n;
    v.flavor = PlueckerFlavor::Dual;
    std::vector<int> rows(a.k);
    for (int i = 0; i < a.k; ++i) rows[i] = i;
    for (const auto& subset : k_subsets(a.n, a.k)) {
        std::vector<int> cols;
        for (int c : subset) cols.push_back(c - 1);
        v.coords[subset] = det_exact(a.mat.submatrix(rows, cols));
    }
    return v;
}

PlueckerVector primal_from_dual(const PlueckerVector& q) {
    PlueckerVector p;
    p.k = q.n - q.k;
    p.n = q.n;
    p.flavor = q.flavor == PlueckerFlavor::Dual ? PlueckerFlavor::Primal : PlueckerFlavor::Dual;
    for (const auto& subset : k_subsets(q.n, p.k)) {
        std::vector<int> complement;
        std::vector<bool> in(static_cast<std::size_t>(q.n) + 1, false);
        for (int v : subset) in[v] = true;
        for (int v = 1; v <= q.n; ++v)
            if (!in[v]) complement.push_back(v);
        const Rational& value = q.at(complement);
        p.coords[subset] = (complement_sign_exponent(subset) % 2 == 0) ? value : -value;
    }
    return p;
}

PointConfiguration kernel_matrix(const PointConfiguration& a) {
    if (rank(a.mat) != a.k) throw DomainError("rank_deficient", "configuration has rank < k");
    ExactMatrix basis = nullspace(a.mat);
    return PointConfiguration(a.n - a.k, a.n, std::move(basis));
}

Matroid matroid_of(const PointConfiguration& a) {
    Matroid m;
    m.k = a.k;
    m.n = a.n;
    std::vector<int> rows(a.k);
    for (int i = 0; i < a.k; ++i) rows[i] = i;
    for (const auto& subset : k_subsets(a.n, a.k)) {
        std::vector<int> cols;
        for (int c : subset) cols.push_back(c - 1);
        if (!det_exact(a.mat.submatrix(rows, cols)).is_zero()) m.bases.insert(subset);
    }
    return m;
}

bool is_uniform(const PointConfiguration& a) {
    std::vector<int> rows(a.k);
    for (int i = 0; i < a.k; ++i) rows[i] = i;
    for (const auto& subset : k_subsets(a.n, a.k)) {
        std::vector<int> cols;
        for (int c : subset) cols.push_back(c - 1);
        if (det_exact(a.mat.submatrix(rows, cols)).is_zero()) return false;
    }
    return true;
}

ExactMatrix torus_normal_form(const PointConfiguration& a) {
    const int k = a.k, n = a.n;
    if (n < k + 2) throw DomainError("shape", "normal form needs n >= k + 2");
    if (!is_uniform(a)) throw DomainError("non_uniform", "normal form requires a uniform matroid");

    // Row-reduce so columns 1..k are the identity.
    ExactMatrix m = rref(a.mat).rref;
    // Scale each later column so its first entry is 1.
    for (int c = k; c < n; ++c) {
        const Rational inv = Rational(1) / m.at(0, c);
        for (int r = 0; r < k; ++r) m.at(r, c) *= inv;
    }
    // Scale rows 2..k so column k+1 is all ones, then restore the identity
    // columns (each touched in a single entry) by column scaling.
    for (int r = 1; r < k; ++r) {
        const Rational inv = Rational(1) / m.at(r, k);
        for (int c = 0; c < n; ++c) m.at(r, c) *= inv;
        m.at(r, r) = 1;
    }
    return m;
}

bool torus_orbit_equivalent(const PointConfiguration& a, const PointConfiguration& b) {
    if (a.k != b.k || a.n != b.n) return false;
    return torus_normal_form(a) == torus_normal_form(b);
}

bool proportional(const std::vector<Rational>& v, const std::vector<Rational>& w) {
    if (v.size() != w.size()) return false;
    std::size_t ref = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if ((v[i].is_zero()) != (w[i].is_zero())) return false;
        if (!v[i].is_zero() && ref == v.size()) ref = i;
    }
    if (ref == v.size()) return true;  // both identically zero
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] * w[ref] != w[i] * v[ref]) return false;
    return true;
}

}  // namespace segdet
