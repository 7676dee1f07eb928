#include "doctest.h"
#include "segdet/error.hpp"
#include "segdet/segre.hpp"
#include "testutil.hpp"

using namespace segdet;

namespace {

// Four point pairs on P^1 x P^1 with distinct cross-ratios; the Segre
// determinant of this configuration is a unit.
const ExactMatrix kA({{1, 0, 1, 1}, {0, 1, 1, 2}});
const ExactMatrix kB({{1, 0, 1, 1}, {0, 1, 1, 3}});

Rational bracket_at(const ExactMatrix& m, const std::vector<int>& idx) {
    std::vector<int> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows[i] = i;
    std::vector<int> cols;
    for (int c : idx) cols.push_back(c - 1);
    return det_exact(m.submatrix(rows, cols));
}

}  // namespace

TEST_CASE("symbolic Segre matrix layout") {
    PolyMatrix m = segre_matrix_symbolic(SegreShape{2, 2, 4});
    // row order (i,j) -> (i-1)*l + j: rows a1*b1, a1*b2, a2*b1, a2*b2
    for (int c = 1; c <= 4; ++c) {
        CHECK(m.at(0, c - 1).str() == "a(1," + std::to_string(c) + ")*b(1," + std::to_string(c) + ")");
        CHECK(m.at(1, c - 1).str() == "a(1," + std::to_string(c) + ")*b(2," + std::to_string(c) + ")");
        CHECK(m.at(2, c - 1).str() == "a(2," + std::to_string(c) + ")*b(1," + std::to_string(c) + ")");
        CHECK(m.at(3, c - 1).str() == "a(2," + std::to_string(c) + ")*b(2," + std::to_string(c) + ")");
    }

    PolyMatrix one = segre_matrix_symbolic(SegreShape{1, 1, 1});
    CHECK(one.at(0, 0).str() == "a(1,1)*b(1,1)");
}

TEST_CASE("columns of e-basis configurations are sparse") {
    ExactMatrix a(3, 4);
    for (int c = 0; c < 4; ++c) a.at(c % 3, c) = 1;  // columns are standard basis vectors
    Rng rng(3);
    ExactMatrix b = testutil::random_matrix(rng, 2, 4, 5, 1);
    ExactMatrix s = segre_matrix(a, b);
    for (int c = 0; c < 4; ++c) {
        int nonzero = 0;
        for (int r = 0; r < 6; ++r)
            if (!s.at(r, c).is_zero()) ++nonzero;
        CHECK(nonzero <= 2);  // exactly l when B's column has no zeros
    }
}

TEST_CASE("determinant of the cross-ratio example") {
    // value fixed by the row-order convention; the classical formula gives +1
    CHECK(segre_det(kA, kB) == Rational(-1));

    // bracket-formula oracle: [12][34]<13><24> - [13][24]<12><34> at the data
    Rational via = bracket_at(kA, {1, 2}) * bracket_at(kA, {3, 4}) * bracket_at(kB, {1, 3}) *
                       bracket_at(kB, {2, 4}) -
                   bracket_at(kA, {1, 3}) * bracket_at(kA, {2, 4}) * bracket_at(kB, {1, 2}) *
                       bracket_at(kB, {3, 4});
    CHECK(via == Rational(1));
    CHECK(segre_det(kA, kB) == -via);
}

TEST_CASE("duplicate point pairs force a zero determinant") {
    ExactMatrix a({{1, 0, 1, 1}, {0, 1, 1, 1}});
    ExactMatrix b({{1, 0, 1, 1}, {0, 1, 2, 2}});
    // columns 3 and 4 are identical pairs up to scale only if both agree; make them equal
    a.at(0, 3) = a.at(0, 2);
    a.at(1, 3) = a.at(1, 2);
    b.at(0, 3) = b.at(0, 2);
    b.at(1, 3) = b.at(1, 2);
    CHECK(segre_det(a, b).is_zero());
}

TEST_CASE("membership: pairs built from a scaled kernel are dependent") {
    Rng rng(57);
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        const int n = k * l;
        for (int t = 0; t < 10; ++t) {
            ExactMatrix a = testutil::random_matrix(rng, k, n);
            if (rank(a) != k) continue;
            ExactMatrix scaled = a;  // diag(t) * A^T built as column scaling of A
            for (int c = 0; c < n; ++c) {
                Rational tc = Rational(rng.range(1, 9));
                for (int r = 0; r < k; ++r) scaled.at(r, c) *= tc;
            }
            ExactMatrix kernel = nullspace(scaled);  // rows: vectors v with (diag(t) A^T)^T v = 0
            REQUIRE(kernel.rows() == n - k);
            // B: l random combinations of kernel rows
            ExactMatrix mix = testutil::random_matrix(rng, l, n - k, 4, 1);
            ExactMatrix b = mix.mul(kernel);
            CHECK(segre_det(a, b).is_zero());
        }
    }
}

TEST_CASE("block Laplace term counts") {
    CHECK(block_laplace_dual(SegreShape::square(2, 2)).size() == 6);
    CHECK(block_laplace_dual(SegreShape::square(2, 3)).size() == 90);
    CHECK(block_laplace_dual(SegreShape::square(2, 4)).size() == 2520);
    CHECK(block_laplace_dual(SegreShape::square(3, 3)).size() == 1680);
}

TEST_CASE("block Laplace equals the symbolic determinant") {
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        SegreShape shape = SegreShape::square(k, l);
        SparsePolynomial total;
        for (const BlockLaplaceTerm& t : block_laplace_dual(shape)) {
            SparsePolynomial piece = expand_to_variables(t.bracket_monomial());
            piece = poly_mul(piece, SparsePolynomial::term(1, t.b_monomial()));
            total += piece.scaled(t.sign);
        }
        CHECK(total == segre_det_symbolic(shape));
    }
}

TEST_CASE("double expansion matches the symbolic determinant exactly") {
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        DoubleExpansion de = double_expansion(SegreShape::square(k, l), 1);
        CHECK(expand_to_variables(de.poly) == segre_det_symbolic(SegreShape::square(k, l)));
    }
}

TEST_CASE("double expansion (3,3) agrees with the determinant at 25 random instances") {
    DoubleExpansion de = double_expansion(SegreShape::square(3, 3), 2);
    Rng rng(314159);
    for (int t = 0; t < 25; ++t) {
        ExactMatrix a = testutil::random_matrix(rng, 3, 9);
        ExactMatrix b = testutil::random_matrix(rng, 3, 9);
        Rational via = 0;
        for (const auto& [key, c] : de.poly.terms) {
            Rational term = c;
            for (const Bracket& br : key.first.factors) term *= bracket_at(a, br.idx);
            for (const Bracket& br : key.second.factors) term *= bracket_at(b, br.idx);
            via += term;
        }
        CHECK(via == segre_det(a, b));
    }
}

TEST_CASE("symbolic determinant evaluated at the cross-ratio example") {
    SparsePolynomial seg = segre_det_symbolic(SegreShape::square(2, 2));
    CHECK(poly_eval(seg, testutil::assignment_for(kA, kB)) == Rational(-1));
}

TEST_CASE("double expansion (2,2): the two standard terms") {
    DoubleExpansion de = double_expansion(SegreShape::square(2, 2), 0);
    REQUIRE(de.poly.terms.size() == 2);
    auto t1 = std::make_pair(monomial_from_indices(Side::A, {{1, 2}, {3, 4}}, 4).monomial,
                             monomial_from_indices(Side::B, {{1, 3}, {2, 4}}, 4).monomial);
    auto t2 = std::make_pair(monomial_from_indices(Side::A, {{1, 3}, {2, 4}}, 4).monomial,
                             monomial_from_indices(Side::B, {{1, 2}, {3, 4}}, 4).monomial);
    CHECK(de.poly.terms.at(t1) == Rational(-1));
    CHECK(de.poly.terms.at(t2) == Rational(1));
}

TEST_CASE("double expansion output is seed-independent") {
    DoubleExpansion a = double_expansion(SegreShape::square(2, 3), 1);
    DoubleExpansion b = double_expansion(SegreShape::square(2, 3), 99991);
    CHECK(a.poly == b.poly);
}

TEST_CASE("bidegree and torus equivariance of the double expansion") {
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        DoubleExpansion de = double_expansion(SegreShape::square(k, l), 2);
        const int n = k * l;
        for (const auto& [key, c] : de.poly.terms) {
            CHECK(key.first.degree() == l);
            CHECK(key.second.degree() == k);
            // each index multiset is [n] exactly once, on both sides
            for (const auto* side : {&key.first, &key.second}) {
                std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
                for (const Bracket& b : side->factors)
                    for (int v : b.idx) ++seen[v];
                for (int v = 1; v <= n; ++v) CHECK(seen[v] == 1);
            }
        }
    }
}

TEST_CASE("scaling and unimodular equivariance of the determinant") {
    Rng rng(71);
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        const int n = k * l;
        ExactMatrix a = testutil::random_matrix(rng, k, n);
        ExactMatrix b = testutil::random_matrix(rng, l, n);
        const Rational base = segre_det(a, b);

        // column scaling of A multiplies by the product of the scalars
        ExactMatrix scaled = a;
        Rational prod = 1;
        for (int c = 0; c < n; ++c) {
            Rational tc = Rational(rng.range(1, 5));
            prod *= tc;
            for (int r = 0; r < k; ++r) scaled.at(r, c) *= tc;
        }
        CHECK(segre_det(scaled, b) == prod * base);

        // unimodular row action leaves the determinant fixed
        ExactMatrix g = testutil::random_unimodular(rng, k);
        CHECK(segre_det(g.mul(a), b) == base);
        ExactMatrix h = testutil::random_unimodular(rng, l);
        CHECK(segre_det(a, h.mul(b)) == base);
    }
}

TEST_CASE("simultaneous column permutation acts by its sign") {
    Rng rng(73);
    ExactMatrix a = testutil::random_matrix(rng, 2, 6);
    ExactMatrix b = testutil::random_matrix(rng, 3, 6);
    const Rational base = segre_det(a, b);

    // swap columns 2 and 5 in both: one transposition, sign -1
    ExactMatrix a2 = a, b2 = b;
    for (int r = 0; r < 2; ++r) std::swap(a2.at(r, 1), a2.at(r, 4));
    for (int r = 0; r < 3; ++r) std::swap(b2.at(r, 1), b2.at(r, 4));
    CHECK(segre_det(a2, b2) == -base);
}

TEST_CASE("role exchange for square shapes has a fixed sign") {
    Rng rng(79);
    Rational sign_22, sign_33;
    for (int t = 0; t < 5; ++t) {
        ExactMatrix a = testutil::random_matrix(rng, 2, 4);
        ExactMatrix b = testutil::random_matrix(rng, 2, 4);
        Rational d1 = segre_det(a, b), d2 = segre_det(b, a);
        if (d1.is_zero()) continue;
        Rational s = d2 / d1;
        if (sign_22.is_zero())
            sign_22 = s;
        else
            CHECK(s == sign_22);
    }
    CHECK(sign_22.abs() == Rational(1));
    for (int t = 0; t < 3; ++t) {
        ExactMatrix a = testutil::random_matrix(rng, 3, 9);
        ExactMatrix b = testutil::random_matrix(rng, 3, 9);
        Rational d1 = segre_det(a, b), d2 = segre_det(b, a);
        if (d1.is_zero()) continue;
        Rational s = d2 / d1;
        if (sign_33.is_zero())
            sign_33 = s;
        else
            CHECK(s == sign_33);
    }
    CHECK(sign_33.abs() == Rational(1));
}

TEST_CASE("double expansion evaluated at random points equals the determinant") {
    DoubleExpansion de = double_expansion(SegreShape::square(2, 3), 5);
    Rng rng(83);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = testutil::random_matrix(rng, 2, 6);
        ExactMatrix b = testutil::random_matrix(rng, 3, 6);
        Rational via = 0;
        for (const auto& [key, c] : de.poly.terms) {
            Rational term = c;
            for (const Bracket& br : key.first.factors) term *= bracket_at(a, br.idx);
            for (const Bracket& br : key.second.factors) term *= bracket_at(b, br.idx);
            via += term;
        }
        CHECK(via == segre_det(a, b));
    }
}

TEST_CASE("shape violations are rejected") {
    CHECK_THROWS_AS(segre_det_symbolic(SegreShape{2, 2, 5}), DomainError);
    ExactMatrix a(2, 5), b(2, 5);
    CHECK_THROWS_AS(segre_det(a, b), DomainError);
    ExactMatrix c(2, 4), d(2, 3);
    CHECK_THROWS_AS(segre_matrix(c, d), DomainError);
}
