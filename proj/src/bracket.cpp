#include "segdet/bracket.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "segdet/error.hpp"

namespace segdet {

NormalizedBracket normalize_bracket(Side side, std::vector<int> raw, int n) {
    for (int v : raw) {
        if (v < 1 || v > n) {
            std::ostringstream os;
            os << "bracket index " << v << " outside [1, " << n << "]";
            throw DomainError("index_out_of_range", os.str());
        }
    }
    // Insertion sort, counting swaps for the sign.
    int swaps = 0;
    for (std::size_t i = 1; i < raw.size(); ++i) {
        int v = raw[i];
        std::size_t j = i;
        while (j > 0 && raw[j - 1] > v) {
            raw[j] = raw[j - 1];
            --j;
            ++swaps;
        }
        raw[j] = v;
    }
    for (std::size_t i = 1; i < raw.size(); ++i)
        if (raw[i] == raw[i - 1]) return {Bracket{side, {}}, 0};
    return {Bracket{side, std::move(raw)}, (swaps % 2 == 0) ? 1 : -1};
}

BracketMonomial::BracketMonomial(std::vector<Bracket> f) : factors(std::move(f)) {
    for (const Bracket& b : factors) {
        if (b.side != factors.front().side || b.size() != factors.front().size())
            throw DomainError("mixed_brackets", "monomial factors must share side and size");
    }
    std::sort(factors.begin(), factors.end());
}

SignedMonomial monomial_from_indices(Side side, const std::vector<std::vector<int>>& lists,
                                     int n) {
    std::vector<Bracket> factors;
    int sign = 1;
    for (const auto& raw : lists) {
        NormalizedBracket nb = normalize_bracket(side, raw, n);
        if (nb.sign == 0) return {BracketMonomial{}, 0};
        sign *= nb.sign;
        factors.push_back(std::move(nb.bracket));
    }
    return {BracketMonomial(std::move(factors)), sign};
}

void BracketPolynomial::add_term(const BracketMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

BracketPolynomial& BracketPolynomial::operator+=(const BracketPolynomial& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

BracketPolynomial bracket_mul(const BracketPolynomial& p, const BracketPolynomial& q) {
    BracketPolynomial out;
    for (const auto& [mp, cp] : p.terms)
        for (const auto& [mq, cq] : q.terms) {
            std::vector<Bracket> factors = mp.factors;
            factors.insert(factors.end(), mq.factors.begin(), mq.factors.end());
            out.add_term(BracketMonomial(std::move(factors)), cp * cq);
        }
    return out;
}

void DoubleBracketPolynomial::add_term(const BracketMonomial& a, const BracketMonomial& b,
                                       const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto [it, inserted] = terms.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool is_standard(const BracketMonomial& m) {
    const auto& f = m.factors;
    for (std::size_t t = 0; t + 1 < f.size(); ++t)
        for (int p = 0; p < f[t].size(); ++p)
            if (f[t].idx[p] > f[t + 1].idx[p]) return false;
    return true;
}

namespace {

// Parity of the shuffle placing `first` before `second`, both sorted,
// relative to their merged sorted order.
int shuffle_sign(const std::vector<int>& first, const std::vector<int>& second) {
    long inversions = 0;
    for (int x : first)
        for (int y : second)
            if (x > y) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

// One exchange step on the first violating adjacent factor pair of a
// non-standard monomial m. Appends to `out` a polynomial equal to m.
//
// With the violation at position p between factors I (above) and J (below),
// the quadratic relation antisymmetrizes the k+1 indices
// W = {J[0..p]} u {I[p..k-1]} over the tail of I and the head of J:
//
//   sum over splittings S of W   sign(S) [I_head, S][(W \ S), J_tail] = 0,
//
// and the splitting S = I-tail recovers m itself, so m equals minus the sum
// of the remaining terms (normalized). Each of those is strictly smaller in
// the lexicographic order on sorted factor sequences, which is what makes
// the rewriting terminate.
void exchange_once(const BracketMonomial& m, std::map<BracketMonomial, Rational>& out) {
    const auto& f = m.factors;
    const int k = m.bracket_size();
    int vt = -1, vp = -1;
    for (std::size_t t = 0; t + 1 < f.size() && vt < 0; ++t)
        for (int p = 0; p < k; ++p)
            if (f[t].idx[p] > f[t + 1].idx[p]) {
                vt = static_cast<int>(t);
                vp = p;
                break;
            }
    if (vt < 0) throw DomainError("internal", "exchange_once called on a standard monomial");

    const std::vector<int>& upper = f[vt].idx;      // I
    const std::vector<int>& lower = f[vt + 1].idx;  // J

    std::vector<int> pool;  // W, k+1 distinct values
    pool.insert(pool.end(), lower.begin(), lower.begin() + vp + 1);
    pool.insert(pool.end(), upper.begin() + vp, upper.end());
    std::sort(pool.begin(), pool.end());
    const int pick = k - vp;  // elements granted to the upper bracket's tail

    const int n_pool = static_cast<int>(pool.size());
    std::vector<int> choose(pick);
    std::iota(choose.begin(), choose.end(), 0);

    const int eps0 = ((static_cast<long>(pick) * (vp + 1)) % 2 == 0) ? 1 : -1;

    std::vector<Bracket> others;
    for (std::size_t t = 0; t < f.size(); ++t)
        if (static_cast<int>(t) != vt && static_cast<int>(t) != vt + 1) others.push_back(f[t]);

    const int n_ground = std::max(pool.back(), std::max(upper.back(), lower.back()));

    while (true) {
        std::vector<int> tail, rest;
        {
            std::size_t ci = 0;
            for (int i = 0; i < n_pool; ++i) {
                if (ci < choose.size() && choose[ci] == i) {
                    tail.push_back(pool[i]);
                    ++ci;
                } else {
                    rest.push_back(pool[i]);
                }
            }
        }
        const bool identity_split = std::equal(tail.begin(), tail.end(), upper.begin() + vp,
                                               upper.end());
        if (!identity_split) {
            std::vector<int> new_upper(upper.begin(), upper.begin() + vp);
            new_upper.insert(new_upper.end(), tail.begin(), tail.end());
            std::vector<int> new_lower = rest;
            new_lower.insert(new_lower.end(), lower.begin() + vp + 1, lower.end());

            NormalizedBracket nu = normalize_bracket(f[vt].side, new_upper, n_ground);
            if (nu.sign != 0) {
                NormalizedBracket nl = normalize_bracket(f[vt].side, new_lower, n_ground);
                if (nl.sign != 0) {
                    const int eps = shuffle_sign(tail, rest);
                    const int coeff = -eps0 * eps * nu.sign * nl.sign;
                    std::vector<Bracket> factors = others;
                    factors.push_back(std::move(nu.bracket));
                    factors.push_back(std::move(nl.bracket));
                    BracketMonomial nm(std::move(factors));
                    auto [it, inserted] = out.emplace(std::move(nm), Rational(coeff));
                    if (!inserted) {
                        it->second += Rational(coeff);
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
            }
        }
        // next combination
        int i = pick - 1;
        while (i >= 0 && choose[i] == n_pool - pick + i) --i;
        if (i < 0) break;
        ++choose[i];
        for (int j = i + 1; j < pick; ++j) choose[j] = choose[j - 1] + 1;
    }
}

}  // namespace

BracketPolynomial straighten(const BracketPolynomial& p) {
    BracketPolynomial result;
    std::map<BracketMonomial, Rational> work = p.terms;
    while (!work.empty()) {
        auto it = std::prev(work.end());  // largest in tableau order
        BracketMonomial m = it->first;
        Rational c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        if (is_standard(m)) {
            result.add_term(m, c);
            continue;
        }
        std::map<BracketMonomial, Rational> replaced;
        exchange_once(m, replaced);
        for (auto& [rm, rc] : replaced) {
            auto [wit, inserted] = work.emplace(rm, rc * c);
            if (!inserted) {
                wit->second += rc * c;
                if (wit->second.is_zero()) work.erase(wit);
            }
        }
    }
    return result;
}

BracketPolynomial straighten_monomial(const BracketMonomial& m) {
    BracketPolynomial p;
    p.add_term(m, 1);
    if (is_standard(m)) return p;
    return straighten(p);
}

std::vector<BracketMonomial> enumerate_standard_multilinear(int bracket_size, int degree, int n,
                                                            Side side) {
    if (n != bracket_size * degree)
        throw DomainError("shape", "multilinear enumeration needs n = bracket_size * degree");
    std::vector<BracketMonomial> result;
    std::vector<Bracket> stack;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

    // Each factor must start with the smallest unused index; the semi-standard
    // condition against the previous factor prunes the rest.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(stack.size()) == degree) {
            result.emplace_back(stack);
            return;
        }
        int lead = 1;
        while (used[lead]) ++lead;
        std::vector<int> current{lead};
        used[lead] = true;
        auto grow = [&](auto&& grow_self) -> void {
            if (static_cast<int>(current.size()) == bracket_size) {
                if (!stack.empty()) {
                    const auto& prev = stack.back().idx;
                    for (int p = 0; p < bracket_size; ++p)
                        if (prev[p] > current[p]) return;
                }
                stack.push_back(Bracket{side, current});
                self(self);
                stack.pop_back();
                return;
            }
            for (int v = current.back() + 1; v <= n; ++v) {
                if (used[v]) continue;
                current.push_back(v);
                used[v] = true;
                grow_self(grow_self);
                used[v] = false;
                current.pop_back();
            }
        };
        grow(grow);
        used[lead] = false;
    };
    rec(rec);
    std::sort(result.begin(), result.end());
    return result;
}

SparsePolynomial expand_to_variables(const Bracket& b) {
    const int k = b.size();
    // Leibniz expansion of the k x k minor on columns b.idx.
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    SparsePolynomial out;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Monomial m;
        for (int r = 0; r < k; ++r) m.emplace_back(VarId{b.side, r + 1, b.idx[perm[r]]}, 1);
        std::sort(m.begin(), m.end());
        out.add_term(m, (inversions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SparsePolynomial expand_to_variables(const BracketMonomial& m) {
    SparsePolynomial out(Rational(1));
    for (const Bracket& b : m.factors) out = poly_mul(out, expand_to_variables(b));
    return out;
}

SparsePolynomial expand_to_variables(const BracketPolynomial& p) {
    SparsePolynomial out;
    for (const auto& [m, c] : p.terms) out += expand_to_variables(m).scaled(c);
    return out;
}

SparsePolynomial expand_to_variables(const DoubleBracketPolynomial& p) {
    SparsePolynomial out;
    for (const auto& [key, c] : p.terms) {
        SparsePolynomial prod = poly_mul(expand_to_variables(key.first),
                                         expand_to_variables(key.second));
        out += prod.scaled(c);
    }
    return out;
}

std::string bracket_str(const Bracket& b) {
    std::ostringstream os;
    os << (b.side == Side::A ? '[' : '<');
    for (std::size_t i = 0; i < b.idx.size(); ++i) {
        if (i) os << ' ';
        os << b.idx[i];
    }
    os << (b.side == Side::A ? ']' : '>');
    return os.str();
}

std::string monomial_str(const BracketMonomial& m) {
    std::string s;
    for (const Bracket& b : m.factors) s += bracket_str(b);
    return s;
}

}  // namespace segdet
