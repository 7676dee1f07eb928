#include "segdet/coeffvar.hpp"

#include <algorithm>
#include <mutex>

#include "segdet/error.hpp"

namespace segdet {

namespace {

// The double expansion of a shape is seed-independent (always re-verified
// exactly), so one copy per shape serves every caller.
const DoubleExpansion& cached_expansion(int k, int l) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, DoubleExpansion> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(k, l);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, double_expansion(SegreShape::square(k, l))).first;
    return it->second;
}

Rational eval_a_monomial(const BracketMonomial& m, const ExactMatrix& a,
                         std::map<std::vector<int>, Rational>& minor_cache) {
    Rational value = 1;
    std::vector<int> rows(a.rows());
    for (int i = 0; i < a.rows(); ++i) rows[i] = i;
    for (const Bracket& b : m.factors) {
        auto it = minor_cache.find(b.idx);
        if (it == minor_cache.end()) {
            std::vector<int> cols;
            for (int c : b.idx) cols.push_back(c - 1);
            it = minor_cache.emplace(b.idx, det_exact(a.submatrix(rows, cols))).first;
        }
        value *= it->second;
        if (value.is_zero()) return value;
    }
    return value;
}

}  // namespace

bool CoefficientVector::proportional_to(const CoefficientVector& o) const {
    return basis == o.basis && proportional(values, o.values);
}

std::optional<std::size_t> CoefficientVector::index_of(const BracketMonomial& m) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m)) return std::nullopt;
    return static_cast<std::size_t>(it - basis.begin());
}

CoefficientVector coeff_map(const PointConfiguration& a) {
    if (a.n % a.k != 0)
        throw DomainError("shape", "coefficient map needs n divisible by k");
    const int k = a.k, l = a.n / a.k;
    const DoubleExpansion& exp = cached_expansion(k, l);

    CoefficientVector out;
    out.shape = exp.shape;
    out.basis = exp.b_basis;
    out.values.assign(out.basis.size(), Rational(0));

    std::map<std::vector<int>, Rational> minors;
    for (const auto& [key, c] : exp.poly.terms) {
        const Rational t_value = eval_a_monomial(key.first, a.mat, minors);
        if (t_value.is_zero()) continue;
        auto idx = out.index_of(key.second);
        out.values[*idx] += c * t_value;
    }
    bool any = false;
    for (const Rational& v : out.values) any = any || !v.is_zero();
    if (!any)
        throw DomainError("zero_polynomial", "Segre polynomial vanishes identically at A");
    return out;
}

int coefficient_span_rank(int k, int l) {
    if (k < 2 || l < 2) throw DomainError("parameter", "span rank needs k, l >= 2");
    const DoubleExpansion& exp = cached_expansion(k, l);
    const int na = static_cast<int>(exp.a_basis.size());
    const int nb = static_cast<int>(exp.b_basis.size());
    ExactMatrix m(nb, na);
    for (const auto& [key, c] : exp.poly.terms) {
        const auto a_it = std::lower_bound(exp.a_basis.begin(), exp.a_basis.end(), key.first);
        const auto b_it = std::lower_bound(exp.b_basis.begin(), exp.b_basis.end(), key.second);
        m.at(static_cast<int>(b_it - exp.b_basis.begin()),
             static_cast<int>(a_it - exp.a_basis.begin())) = c;
    }
    return rank(m);
}

Rational CoordinatePolynomial::eval(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [exps, c] : terms) {
        Rational v = c;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) v *= point[i].pow(static_cast<unsigned>(exps[i]));
        total += v;
    }
    return total;
}

PointConfiguration random_uniform_configuration(int k, int n, Rng& rng, int bound) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        ExactMatrix m(k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = Rational(rng.range(-bound, bound));
        PointConfiguration cfg(k, n, std::move(m));
        if (is_uniform(cfg)) return cfg;
    }
    throw DomainError("genericity", "no uniform configuration found within the attempt bound");
}

namespace {

// Exponent tuples of total degree d in `vars` variables, ascending lex.
std::vector<std::vector<int>> degree_tuples(int vars, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(vars);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == vars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (vars > 0) rec(rec, 0, d);
    return out;
}

}  // namespace

CubicInterpolation interpolate_image_cubic(int sample_count, std::uint64_t seed) {
    if (sample_count < 40)
        throw DomainError("parameter", "cubic interpolation needs at least 40 samples");
    Rng rng(seed);
    const auto monomials = degree_tuples(5, 3);  // 35 cubic monomials in P^4

    std::vector<BracketMonomial> names;
    std::vector<std::vector<Rational>> rows;
    auto add_sample = [&] {
        PointConfiguration a = random_uniform_configuration(2, 6, rng);
        CoefficientVector image = coeff_map(a);
        names = image.basis;
        std::vector<Rational> row(monomials.size());
        for (std::size_t m = 0; m < monomials.size(); ++m) {
            Rational v = 1;
            for (int i = 0; i < 5; ++i)
                if (monomials[m][i] > 0)
                    v *= image.values[i].pow(static_cast<unsigned>(monomials[m][i]));
            row[m] = v;
        }
        rows.push_back(std::move(row));
    };
    for (int s = 0; s < sample_count; ++s) add_sample();

    auto kernel_of_rows = [&] {
        ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(monomials.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < monomials.size(); ++c)
                m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
        return nullspace(m);
    };

    // A rank-deficient sample set leaves extra kernel dimensions; resample
    // (bounded) until only the genuine relation remains.
    ExactMatrix kernel = kernel_of_rows();
    for (int extra = 0; kernel.rows() > 1 && extra < 3 * sample_count; ++extra) {
        add_sample();
        kernel = kernel_of_rows();
    }
    if (kernel.rows() != 1)
        throw DomainError("rank_deficient",
                          "sample set does not determine a one-dimensional space of cubics",
                          {{"kernel_dim", std::to_string(kernel.rows())}});

    CubicInterpolation out;
    out.sample_count = static_cast<int>(rows.size());
    out.seed = seed;
    out.kernel_dimension = kernel.rows();

    // Normalize the generator: clear denominators, divide by the content,
    // make the first nonzero coefficient positive.
    std::vector<Rational> gen(monomials.size());
    for (std::size_t m = 0; m < monomials.size(); ++m) gen[m] = kernel.at(0, static_cast<int>(m));
    Rational lcm = 1;
    for (const Rational& v : gen)
        if (!v.is_zero() && !(v * lcm).is_integer()) lcm *= (v * lcm).den();
    for (Rational& v : gen) v *= lcm;
    Rational content = 0;
    for (const Rational& v : gen)
        if (!v.is_zero()) content = content.is_zero() ? v.abs() : Rational::gcd(content, v.abs());
    int lead_sign = 0;
    for (const Rational& v : gen)
        if (!v.is_zero()) {
            lead_sign = v.sign();
            break;
        }
    out.cubic.coordinate_names = names;
    for (std::size_t m = 0; m < monomials.size(); ++m) {
        if (gen[m].is_zero()) continue;
        Rational v = gen[m] / content;
        if (lead_sign < 0) v = -v;
        out.cubic.terms[monomials[m]] = v;
    }
    return out;
}

CollisionReport association_collision(const PointConfiguration& a) {
    if (a.k != 3 || a.n != 6)
        throw DomainError("shape", "association collision is defined on Gr(3,6)");
    if (!is_uniform(a)) throw DomainError("non_uniform", "configuration must be uniform");

    CollisionReport rep;
    rep.a = a;
    rep.gale_dual = kernel_matrix(a);
    if (!is_uniform(rep.gale_dual))
        throw DomainError("non_uniform", "Gale dual unexpectedly non-uniform");
    rep.image_a = coeff_map(a);
    rep.image_dual = coeff_map(rep.gale_dual);
    rep.images_projectively_equal = rep.image_a.proportional_to(rep.image_dual);
    rep.self_associated = torus_orbit_equivalent(a, rep.gale_dual);
    return rep;
}

SeparationReport separation_check_k2(int n, int trials, std::uint64_t seed) {
    if (n != 4 && n != 6 && n != 8)
        throw DomainError("parameter", "separation check supports n in {4, 6, 8}");
    Rng rng(seed);
    SeparationReport rep{n, trials, 0, true, std::nullopt};
    for (int t = 0; t < trials; ++t) {
        PointConfiguration a = random_uniform_configuration(2, n, rng);
        PointConfiguration b = random_uniform_configuration(2, n, rng);
        while (torus_orbit_equivalent(a, b)) b = random_uniform_configuration(2, n, rng);
        if (coeff_map(a).proportional_to(coeff_map(b))) {
            rep.all_separated = false;
            if (!rep.witness) rep.witness = std::make_pair(a.mat, b.mat);
        } else {
            ++rep.separated;
        }
    }
    return rep;
}

}  // namespace segdet
