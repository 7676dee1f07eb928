#include "segdet/segre.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "segdet/error.hpp"
#include "segdet/rng.hpp"

namespace segdet {

PolyMatrix segre_matrix_symbolic(const SegreShape& shape) {
    PolyMatrix m(shape.k * shape.l, shape.r);
    for (int i = 1; i <= shape.k; ++i)
        for (int j = 1; j <= shape.l; ++j)
            for (int c = 1; c <= shape.r; ++c) {
                Monomial mono{{var_a(i, c), 1}, {var_b(j, c), 1}};
                std::sort(mono.begin(), mono.end());
                m.at(segre_row(i, j, shape.l), c - 1) = SparsePolynomial::term(1, mono);
            }
    return m;
}

ExactMatrix segre_matrix(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols())
        throw DomainError("shape", "point configurations have different column counts");
    const int k = a.rows(), l = b.rows(), r = a.cols();
    ExactMatrix m(k * l, r);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= l; ++j)
            for (int c = 0; c < r; ++c)
                m.at(segre_row(i, j, l), c) = a.at(i - 1, c) * b.at(j - 1, c);
    return m;
}

Rational segre_det(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != a.rows() * b.rows())
        throw DomainError("shape", "Segre determinant needs r = k*l point pairs");
    return det_exact(segre_matrix(a, b));
}

SparsePolynomial segre_det_symbolic(const SegreShape& shape) {
    if (shape.r != shape.n()) throw DomainError("shape", "Segre determinant needs r = k*l");
    return det_symbolic(segre_matrix_symbolic(shape));
}

BracketMonomial BlockLaplaceTerm::bracket_monomial() const {
    std::vector<Bracket> factors;
    factors.reserve(blocks.size());
    for (const auto& block : blocks) factors.push_back(Bracket{Side::A, block});
    return BracketMonomial(std::move(factors));
}

Monomial BlockLaplaceTerm::b_monomial() const {
    Monomial m;
    for (std::size_t j = 0; j < blocks.size(); ++j)
        for (int c : blocks[j]) m.emplace_back(var_b(static_cast<int>(j) + 1, c), 1);
    std::sort(m.begin(), m.end());
    return m;
}

std::uint64_t BlockLaplaceTerm::assignment_key() const {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j)
        for (int c : blocks[j]) key |= static_cast<std::uint64_t>(j) << (4 * (c - 1));
    return key;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
    long inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

// Sign of the block term: the order-preserving bijection sending the rows of
// each B-group (rows (i-1)l+j for i = 1..k) to the columns of its block.
int block_sign(const std::vector<std::vector<int>>& blocks, int k, int l) {
    std::vector<int> perm(static_cast<std::size_t>(k) * l);
    for (int j = 1; j <= l; ++j)
        for (int i = 1; i <= k; ++i) perm[segre_row(i, j, l)] = blocks[j - 1][i - 1];
    return permutation_sign(perm);
}

}  // namespace

std::vector<BlockLaplaceTerm> block_laplace_dual(const SegreShape& shape) {
    if (shape.r != shape.n()) throw DomainError("shape", "block Laplace needs r = k*l");
    const int k = shape.k, l = shape.l, n = shape.n();
    if (n > 16) throw DomainError("too_large", "block Laplace limited to n <= 16");

    std::vector<BlockLaplaceTerm> result;
    std::vector<std::vector<int>> blocks;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

    auto pick_block = [&](auto&& self, int block_index) -> void {
        if (block_index == l) {
            result.push_back(BlockLaplaceTerm{block_sign(blocks, k, l), blocks});
            return;
        }
        std::vector<int> current;
        auto grow = [&](auto&& grow_self, int min_next) -> void {
            if (static_cast<int>(current.size()) == k) {
                blocks.push_back(current);
                self(self, block_index + 1);
                blocks.pop_back();
                return;
            }
            for (int v = min_next; v <= n; ++v) {
                if (used[v]) continue;
                used[v] = true;
                current.push_back(v);
                grow_self(grow_self, v + 1);
                current.pop_back();
                used[v] = false;
            }
        };
        grow(grow, 1);
    };
    pick_block(pick_block, 0);
    return result;
}

namespace {

// Expansion of a standard B-monomial <J_1>...<J_k> into b-variable
// assignments: every monomial maps each column to one B-row, bijectively
// within each J_s; coefficients are the permutation signs.
std::map<std::uint64_t, int> expand_b_monomial(const BracketMonomial& m, int l) {
    std::map<std::uint64_t, int> out;
    std::vector<std::pair<std::uint64_t, int>> partial{{0u, 1}};
    std::vector<int> perm(l);
    for (const Bracket& br : m.factors) {
        std::vector<std::pair<std::uint64_t, int>> next;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const int sgn = permutation_sign(perm);
            std::uint64_t mask = 0;
            for (int t = 0; t < l; ++t)
                mask |= static_cast<std::uint64_t>(perm[t]) << (4 * (br.idx[t] - 1));
            for (const auto& [key, s] : partial) next.emplace_back(key | mask, s * sgn);
        } while (std::next_permutation(perm.begin(), perm.end()));
        partial = std::move(next);
    }
    for (const auto& [key, s] : partial) out[key] += s;
    return out;
}

}  // namespace

DoubleExpansion double_expansion(const SegreShape& shape, std::uint64_t seed) {
    if (shape.r != shape.n()) throw DomainError("shape", "double expansion needs r = k*l");
    const int k = shape.k, l = shape.l, n = shape.n();

    DoubleExpansion out;
    out.shape = shape;
    out.seed = seed;
    out.a_basis = enumerate_standard_multilinear(k, l, n, Side::A);
    out.b_basis = enumerate_standard_multilinear(l, k, n, Side::B);
    const int nb = static_cast<int>(out.b_basis.size());

    // Step 1: block Laplace, then straighten each A-side product. Ordered
    // partitions that share the same unordered product reuse one straightening.
    std::map<BracketMonomial, std::map<std::uint64_t, Rational>> coeff_by_a;  // f_T
    std::vector<std::uint64_t> all_keys;
    {
        std::map<BracketMonomial, BracketPolynomial> straightened;
        for (const BlockLaplaceTerm& term : block_laplace_dual(shape)) {
            const BracketMonomial product = term.bracket_monomial();
            auto it = straightened.find(product);
            if (it == straightened.end())
                it = straightened.emplace(product, straighten_monomial(product)).first;
            const std::uint64_t key = term.assignment_key();
            all_keys.push_back(key);
            for (const auto& [t_mono, c] : it->second.terms) {
                Rational& slot = coeff_by_a[t_mono][key];
                slot += c * Rational(term.sign);
                if (slot.is_zero()) coeff_by_a[t_mono].erase(key);
            }
        }
        for (auto it = coeff_by_a.begin(); it != coeff_by_a.end();)
            it = it->second.empty() ? coeff_by_a.erase(it) : std::next(it);
    }

    // Incidence of b-variable monomials with the standard B-basis expansions.
    std::vector<std::map<std::uint64_t, int>> basis_expansion;
    basis_expansion.reserve(nb);
    std::unordered_map<std::uint64_t, std::vector<std::pair<int, int>>> incidence;
    for (int i = 0; i < nb; ++i) {
        basis_expansion.push_back(expand_b_monomial(out.b_basis[i], l));
        for (const auto& [key, s] : basis_expansion.back()) incidence[key].emplace_back(i, s);
    }

    // Step 2: per standard A-monomial, determine the B-bracket coordinates of
    // f_T from sampled monomial constraints, then verify the candidate.
    int t_index = 0;
    for (const auto& [t_mono, f_t] : coeff_by_a) {
        Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(t_index++));

        // Monomials of f_T first (they carry nonzero right-hand sides); when
        // those run out the remaining monomials of the multidegree still
        // constrain the system with zero right-hand sides.
        std::vector<std::uint64_t> draws;
        draws.reserve(f_t.size());
        for (const auto& [key, c] : f_t) draws.push_back(key);
        rng.shuffle(draws);
        {
            std::vector<std::uint64_t> rest;
            for (std::uint64_t key : all_keys)
                if (!f_t.count(key)) rest.push_back(key);
            rng.shuffle(rest);
            draws.insert(draws.end(), rest.begin(), rest.end());
        }

        // Echelon rows over Q: nb coefficient columns plus the rhs.
        std::vector<std::vector<Rational>> echelon;
        std::vector<int> pivot_of_row;
        int rank = 0;
        for (std::uint64_t key : draws) {
            if (rank == nb) break;
            std::vector<Rational> row(static_cast<std::size_t>(nb) + 1);
            auto inc = incidence.find(key);
            if (inc != incidence.end())
                for (const auto& [i, s] : inc->second) row[i] = s;
            auto rhs = f_t.find(key);
            if (rhs != f_t.end()) row[nb] = rhs->second;

            for (std::size_t r = 0; r < echelon.size(); ++r) {
                const int p = pivot_of_row[r];
                if (row[p].is_zero()) continue;
                const Rational factor = row[p];
                for (int cidx = 0; cidx <= nb; ++cidx) row[cidx] -= factor * echelon[r][cidx];
            }
            int pivot = -1;
            for (int cidx = 0; cidx < nb; ++cidx)
                if (!row[cidx].is_zero()) {
                    pivot = cidx;
                    break;
                }
            if (pivot < 0) continue;
            const Rational inv = Rational(1) / row[pivot];
            for (int cidx = 0; cidx <= nb; ++cidx) row[cidx] *= inv;
            echelon.push_back(std::move(row));
            pivot_of_row.push_back(pivot);
            ++rank;
        }
        if (rank < nb)
            throw DomainError("singular_system",
                              "coefficient system still underdetermined after exhausting "
                              "every monomial of the multidegree; this indicates an "
                              "implementation fault",
                              {{"a_monomial", monomial_str(t_mono)}});

        // Back substitution.
        std::vector<Rational> solution(nb);
        std::vector<int> order(echelon.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return pivot_of_row[x] > pivot_of_row[y]; });
        for (int r : order) {
            const int p = pivot_of_row[r];
            Rational v = echelon[r][nb];
            for (int cidx = p + 1; cidx < nb; ++cidx)
                if (!echelon[r][cidx].is_zero()) v -= echelon[r][cidx] * solution[cidx];
            solution[p] = v;
        }

        // Exact verification of the candidate against f_T, term by term.
        std::map<std::uint64_t, Rational> reconstructed;
        for (int i = 0; i < nb; ++i) {
            if (solution[i].is_zero()) continue;
            for (const auto& [key, s] : basis_expansion[i]) {
                Rational& slot = reconstructed[key];
                slot += solution[i] * Rational(s);
                if (slot.is_zero()) reconstructed.erase(key);
            }
        }
        if (reconstructed.size() != f_t.size() ||
            !std::equal(reconstructed.begin(), reconstructed.end(), f_t.begin()))
            throw DomainError("verification_failed",
                              "solved B-bracket coordinates do not reproduce the coefficient",
                              {{"a_monomial", monomial_str(t_mono)}});

        for (int i = 0; i < nb; ++i)
            if (!solution[i].is_zero()) out.poly.add_term(t_mono, out.b_basis[i], solution[i]);
    }
    return out;
}

}  // namespace segdet
