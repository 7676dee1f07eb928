#include "doctest.h"
#include "segdet/error.hpp"
#include "segdet/grassmann.hpp"
#include "testutil.hpp"

using namespace segdet;

namespace {

PointConfiguration random_config(Rng& rng, int k, int n) {
    for (;;) {
        PointConfiguration c = PointConfiguration::from_matrix(testutil::random_matrix(rng, k, n));
        if (rank(c.mat) == k) return c;
    }
}

PointConfiguration random_uniform(Rng& rng, int k, int n) {
    for (;;) {
        PointConfiguration c = random_config(rng, k, n);
        if (is_uniform(c)) return c;
    }
}

}  // namespace

TEST_CASE("dual Plücker coordinates") {
    // identity block: the only unit coordinate is on columns 1..k
    ExactMatrix id_block(2, 5);
    id_block.at(0, 0) = 1;
    id_block.at(1, 1) = 1;
    id_block.at(0, 3) = 2;
    id_block.at(1, 4) = 3;
    PlueckerVector v = dual_pluecker(PointConfiguration::from_matrix(id_block));
    CHECK(v.at({1, 2}) == Rational(1));

    // the cross-ratio example matrix
    PointConfiguration a(2, 4, ExactMatrix({{1, 0, 1, 1}, {0, 1, 1, 2}}));
    PlueckerVector pa = dual_pluecker(a);
    CHECK(pa.at({1, 2}) == Rational(1));
    CHECK(pa.at({1, 3}) == Rational(1));
    CHECK(pa.at({1, 4}) == Rational(2));
    CHECK(pa.at({2, 3}) == Rational(-1));
    CHECK(pa.at({2, 4}) == Rational(-1));  // direct minor of columns (0,1),(1,2)
    CHECK(pa.at({3, 4}) == Rational(1));

    // swapping two columns relabels coordinates with the alternating sign
    ExactMatrix sw = a.mat;
    for (int r = 0; r < 2; ++r) std::swap(sw.at(r, 0), sw.at(r, 1));
    PlueckerVector ps = dual_pluecker(PointConfiguration::from_matrix(sw));
    CHECK(ps.at({1, 2}) == -pa.at({1, 2}));
    CHECK(ps.at({1, 3}) == pa.at({2, 3}));
    CHECK(ps.at({2, 3}) == pa.at({1, 3}));
    CHECK(ps.at({3, 4}) == pa.at({3, 4}));

    CHECK_THROWS_AS(dual_pluecker(PointConfiguration(2, 4, ExactMatrix(2, 4))), DomainError);
}

TEST_CASE("Plücker relations hold on sampled configurations") {
    Rng rng(301);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
        PointConfiguration c = random_config(rng, k, n);
        PlueckerVector q = dual_pluecker(c);
        // three-term relation on sampled (S; i<j<k<l)
        for (int t = 0; t < 20; ++t) {
            std::vector<int> pool;
            for (int v = 1; v <= n; ++v) pool.push_back(v);
            rng.shuffle(pool);
            std::vector<int> quad(pool.begin(), pool.begin() + 4);
            std::sort(quad.begin(), quad.end());
            std::vector<int> rest(pool.begin() + 4, pool.begin() + 4 + (k - 2));
            auto coord = [&](std::vector<int> extra) {
                std::vector<int> idx = rest;
                idx.insert(idx.end(), extra.begin(), extra.end());
                NormalizedBracket nb = normalize_bracket(Side::A, idx, n);
                if (nb.sign == 0) return Rational(0);
                return Rational(nb.sign) * q.at(nb.bracket.idx);
            };
            const int i = quad[0], j = quad[1], kk = quad[2], ll = quad[3];
            Rational lhs = coord({i, kk}) * coord({j, ll});
            Rational rhs = coord({i, j}) * coord({kk, ll}) + coord({i, ll}) * coord({j, kk});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("signed complement table for Gr(3,5)") {
    Rng rng(303);
    PointConfiguration c = random_config(rng, 3, 5);
    PlueckerVector q = dual_pluecker(c);
    PlueckerVector p = primal_from_dual(q);
    CHECK(p.flavor == PlueckerFlavor::Primal);
    CHECK(p.k == 2);

    CHECK(p.at({1, 2}) == q.at({3, 4, 5}));
    CHECK(p.at({1, 3}) == -q.at({2, 4, 5}));
    CHECK(p.at({1, 4}) == q.at({2, 3, 5}));
    CHECK(p.at({1, 5}) == -q.at({2, 3, 4}));
    CHECK(p.at({2, 3}) == q.at({1, 4, 5}));
    CHECK(p.at({2, 4}) == -q.at({1, 3, 5}));
    CHECK(p.at({2, 5}) == q.at({1, 3, 4}));
    CHECK(p.at({3, 4}) == q.at({1, 2, 5}));
    CHECK(p.at({3, 5}) == -q.at({1, 2, 4}));
    CHECK(p.at({4, 5}) == q.at({1, 2, 3}));
}

TEST_CASE("complementation twice returns the input up to one global sign") {
    Rng rng(307);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
        PointConfiguration c = random_config(rng, k, n);
        PlueckerVector q = dual_pluecker(c);
        PlueckerVector back = primal_from_dual(primal_from_dual(q));
        REQUIRE(back.k == k);
        Rational sign;
        for (const auto& [idx, v] : q.coords) {
            if (v.is_zero()) {
                CHECK(back.at(idx).is_zero());
                continue;
            }
            Rational s = back.at(idx) / v;
            if (sign.is_zero())
                sign = s;
            else
                CHECK(s == sign);
        }
        CHECK(sign.abs() == Rational(1));
    }
}

TEST_CASE("kernel matrix") {
    // block form [I | N] -> [-N^T | I]
    ExactMatrix a({{1, 0, 2, 3}, {0, 1, 4, 5}});
    PointConfiguration cfg = PointConfiguration::from_matrix(a);
    PointConfiguration ker = kernel_matrix(cfg);
    CHECK(ker.mat == ExactMatrix({{-2, -4, 1, 0}, {-3, -5, 0, 1}}));

    Rng rng(311);
    for (int t = 0; t < 50; ++t) {
        const int k = 2 + static_cast<int>(rng.below(2));
        const int n = k + 2 + static_cast<int>(rng.below(3));
        PointConfiguration c = random_config(rng, k, n);
        PointConfiguration b = kernel_matrix(c);
        CHECK(b.k == n - k);
        CHECK(rank(b.mat) == n - k);
        ExactMatrix prod = b.mat.mul(c.mat.transpose());
        for (const Rational& v : prod.entries()) CHECK(v.is_zero());

        // signed complement identity up to one global scalar
        PlueckerVector lhs = dual_pluecker(b);
        PlueckerVector rhs = primal_from_dual(dual_pluecker(c));
        std::vector<Rational> lv, rv;
        for (const auto& [idx, v] : lhs.coords) {
            lv.push_back(v);
            rv.push_back(rhs.at(idx));
        }
        CHECK(proportional(lv, rv));

        // kernel of the kernel reproduces the original row span
        PointConfiguration back = kernel_matrix(b);
        CHECK(rank(back.mat) == k);
        ExactMatrix stacked(2 * k, n);
        for (int r = 0; r < k; ++r)
            for (int col = 0; col < n; ++col) {
                stacked.at(r, col) = c.mat.at(r, col);
                stacked.at(k + r, col) = back.mat.at(r, col);
            }
        CHECK(rank(stacked) == k);
    }
}

TEST_CASE("matroids of configurations") {
    Rng rng(313);
    PointConfiguration generic = random_uniform(rng, 2, 6);
    CHECK(is_uniform(generic));
    CHECK(matroid_of(generic).bases.size() == 15);

    // parallel columns kill the corresponding basis
    ExactMatrix a({{1, 2, 0, 1}, {2, 4, 1, 1}});
    Matroid m = matroid_of(PointConfiguration::from_matrix(a));
    CHECK_FALSE(m.bases.count({1, 2}));
    CHECK(m.bases.count({1, 3}));
    CHECK_FALSE(is_uniform(PointConfiguration::from_matrix(a)));

    // basis exchange on sampled pairs
    PointConfiguration c = random_config(rng, 3, 6);
    Matroid mm = matroid_of(c);
    std::vector<std::vector<int>> bases(mm.bases.begin(), mm.bases.end());
    for (int t = 0; t < 30 && bases.size() > 1; ++t) {
        const auto& b1 = bases[rng.below(bases.size())];
        const auto& b2 = bases[rng.below(bases.size())];
        for (int x : b1) {
            if (std::find(b2.begin(), b2.end(), x) != b2.end()) continue;
            bool exchanged = false;
            for (int y : b2) {
                if (std::find(b1.begin(), b1.end(), y) != b1.end()) continue;
                std::vector<int> candidate;
                for (int v : b1)
                    if (v != x) candidate.push_back(v);
                candidate.push_back(y);
                std::sort(candidate.begin(), candidate.end());
                if (mm.bases.count(candidate)) {
                    exchanged = true;
                    break;
                }
            }
            CHECK(exchanged);
        }
    }
}

TEST_CASE("torus normal form decides orbit equivalence") {
    Rng rng(317);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {3, 6}}) {
        PointConfiguration a = random_uniform(rng, k, n);

        // reflexivity and invariance under the group action
        CHECK(torus_orbit_equivalent(a, a));
        ExactMatrix scaled = a.mat;
        for (int c = 0; c < n; ++c) {
            Rational tc = Rational(rng.range(1, 7));
            for (int r = 0; r < k; ++r) scaled.at(r, c) *= tc;
        }
        CHECK(torus_orbit_equivalent(a, PointConfiguration::from_matrix(scaled)));
        ExactMatrix g = testutil::random_unimodular(rng, k);
        CHECK(torus_orbit_equivalent(a, PointConfiguration::from_matrix(g.mul(a.mat))));

        // symmetry
        PointConfiguration b = random_uniform(rng, k, n);
        CHECK(torus_orbit_equivalent(a, b) == torus_orbit_equivalent(b, a));
    }

    // generic point and its kernel representative are not equivalent
    PointConfiguration a36 = random_uniform(rng, 3, 6);
    PointConfiguration dual = kernel_matrix(a36);
    REQUIRE(is_uniform(dual));
    CHECK_FALSE(torus_orbit_equivalent(a36, dual));

    // normal form shape: identity block, unit first row, unit column k+1
    ExactMatrix nf = torus_normal_form(a36);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(nf.at(r, c) == Rational(r == c ? 1 : 0));
    for (int c = 3; c < 6; ++c) CHECK(nf.at(0, c) == Rational(1));
    for (int r = 0; r < 3; ++r) CHECK(nf.at(r, 3) == Rational(1));

    CHECK_THROWS_AS(torus_normal_form(PointConfiguration(
                        2, 4, ExactMatrix({{1, 2, 0, 1}, {2, 4, 1, 1}}))),
                    DomainError);
}

TEST_CASE("proportionality is exact and division-free") {
    CHECK(proportional({Rational(2), Rational(4), Rational(0)},
                       {Rational(3), Rational(6), Rational(0)}));
    CHECK_FALSE(proportional({Rational(2), Rational(4), Rational(0)},
                             {Rational(3), Rational(6), Rational(1)}));
    CHECK_FALSE(proportional({Rational(1), Rational(2)}, {Rational(1), Rational(3)}));
    CHECK(proportional({Rational(0)}, {Rational(0)}));
}
