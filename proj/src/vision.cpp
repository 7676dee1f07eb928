#include "segdet/vision.hpp"

#include <string>

#include "segdet/error.hpp"
#include "segdet/rng.hpp"
#include "segdet/segre.hpp"

namespace segdet {

namespace {

ExactMatrix pairs_to_matrix(const std::vector<Correspondence>& pairs, bool first) {
    if (pairs.empty()) throw DomainError("shape", "no correspondences given");
    const int k = static_cast<int>(pairs.front().a.size());
    ExactMatrix m(k, static_cast<int>(pairs.size()));
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        const auto& v = first ? pairs[c].a : pairs[c].b;
        if (static_cast<int>(v.size()) != k)
            throw DomainError("shape", "correspondence coordinate lengths differ");
        bool nonzero = false;
        for (const Rational& x : v) nonzero = nonzero || !x.is_zero();
        if (!nonzero) throw DomainError("shape", "zero vector is not a projective point");
        for (int r = 0; r < k; ++r) m.at(r, static_cast<int>(c)) = v[r];
    }
    return m;
}

// v_j = (-1)^{j+1} det(R with column j removed): the generalized cross
// product, orthogonal to every row of the (k-1) x k matrix R.
std::vector<Rational> cross_generalized(const ExactMatrix& r) {
    const int k = r.cols();
    std::vector<int> rows(k - 1);
    for (int i = 0; i < k - 1; ++i) rows[i] = i;
    std::vector<Rational> v(k);
    for (int j = 0; j < k; ++j) {
        std::vector<int> cols;
        for (int c = 0; c < k; ++c)
            if (c != j) cols.push_back(c);
        Rational d = det_exact(r.submatrix(rows, cols));
        v[j] = (j % 2 == 0) ? d : -d;
    }
    return v;
}

}  // namespace

Rational epipolar_product(const FundamentalMatrix& f, const Correspondence& c) {
    Rational total = 0;
    const int k = f.f.rows();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) total += f.f.at(i, j) * c.a[i] * c.b[j];
    return total;
}

FundamentalMatrix fundamental_from_points(const std::vector<Correspondence>& pairs) {
    const int k = static_cast<int>(pairs.front().a.size());
    ExactMatrix seg = segre_matrix(pairs_to_matrix(pairs, true), pairs_to_matrix(pairs, false));
    ExactMatrix kernel = left_nullspace(seg);
    const int dim = kernel.rows();
    if (dim == 0)
        throw DomainError("kernel_empty", "Segre matrix has a trivial left kernel",
                          {{"kernel_dim", "0"}});
    if (dim > 1)
        throw DomainError("degenerate_configuration",
                          "Segre matrix kernel has dimension " + std::to_string(dim),
                          {{"kernel_dim", std::to_string(dim)}});
    ExactMatrix f(k, k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) f.at(i - 1, j - 1) = kernel.at(0, segre_row(i, j, k));
    return FundamentalMatrix{std::move(f)};
}

FundamentalMatrix fundamental_from_cameras(const Camera& p1, const Camera& p2,
                                           bool use_last_pivots) {
    const int k = p1.mat.rows();
    if (p2.mat.rows() != k || p1.mat.cols() != 2 * k - 2 || p2.mat.cols() != 2 * k - 2)
        throw DomainError("shape", "cameras must be k x (2k-2)");
    if (rank(p1.mat) != k || rank(p2.mat) != k)
        throw DomainError("rank_deficient", "camera is not full rank");

    const ExactMatrix phi = right_inverse(p1.mat, use_last_pivots);
    const ExactMatrix m = p2.mat.mul(phi);

    // V = p2(ker p1), a (k-2)-dimensional subspace of R^k.
    const ExactMatrix ker = nullspace(p1.mat);              // (k-2) x (2k-2)
    const ExactMatrix v = ker.mul(p2.mat.transpose());      // rows: images under p2
    if (rank(v) != k - 2)
        throw DomainError("degenerate_cameras", "p2(ker p1) is not (k-2)-dimensional");

    ExactMatrix f(k, k);
    for (int i = 0; i < k; ++i) {
        ExactMatrix stacked(k - 1, k);
        for (int c = 0; c < k; ++c) stacked.at(0, c) = m.at(c, i);  // M e_i as the top row
        for (int r = 0; r < k - 2; ++r)
            for (int c = 0; c < k; ++c) stacked.at(r + 1, c) = v.at(r, c);
        std::vector<Rational> w = cross_generalized(stacked);
        for (int j = 0; j < k; ++j) f.at(i, j) = w[j];
    }
    bool nonzero = false;
    for (int i = 0; i < k && !nonzero; ++i)
        for (int j = 0; j < k; ++j) nonzero = nonzero || !f.at(i, j).is_zero();
    if (!nonzero) throw DomainError("degenerate_cameras", "camera pair yields the zero matrix");
    return FundamentalMatrix{std::move(f)};
}

Rational nine_point_test(const std::vector<Correspondence>& pairs) {
    if (pairs.size() != 9 || pairs.front().a.size() != 3)
        throw DomainError("shape", "nine point pairs in P^2 x P^2 required");
    return segre_det(pairs_to_matrix(pairs, true), pairs_to_matrix(pairs, false));
}

Scene synth_scene(int k, int count, std::uint64_t seed) {
    if (k < 2) throw DomainError("parameter", "scenes need k >= 2");
    if (count < 1) throw DomainError("parameter", "count must be positive");
    Rng rng(seed);

    auto random_matrix = [&](int rows, int cols) {
        ExactMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.range(-9, 9));
        return m;
    };

    for (int attempt = 0; attempt < 200; ++attempt) {
        Scene scene;
        scene.p1.mat = random_matrix(k, 2 * k - 2);
        scene.p2.mat = random_matrix(k, 2 * k - 2);
        if (rank(scene.p1.mat) != k || rank(scene.p2.mat) != k) continue;
        if (k > 2 && rank(nullspace(scene.p1.mat).mul(scene.p2.mat.transpose())) != k - 2)
            continue;

        FundamentalMatrix f;
        try {
            f = fundamental_from_cameras(scene.p1, scene.p2);
        } catch (const DomainError&) {
            continue;
        }
        if (rank(f.f) != 2) continue;

        bool ok = true;
        scene.world.clear();
        scene.pairs.clear();
        for (int c = 0; c < count && ok; ++c) {
            std::vector<Rational> w(static_cast<std::size_t>(2 * k - 2));
            for (auto& x : w) x = Rational(rng.range(-9, 9));
            Correspondence corr{scene.p1.mat.apply(w), scene.p2.mat.apply(w)};
            bool a_zero = true, b_zero = true;
            for (const Rational& x : corr.a) a_zero = a_zero && x.is_zero();
            for (const Rational& x : corr.b) b_zero = b_zero && x.is_zero();
            if (a_zero || b_zero) {
                ok = false;
                break;
            }
            scene.world.push_back(std::move(w));
            scene.pairs.push_back(std::move(corr));
        }
        if (!ok) continue;

        if (count == k * k - 1) {
            ExactMatrix seg = segre_matrix(pairs_to_matrix(scene.pairs, true),
                                           pairs_to_matrix(scene.pairs, false));
            if (left_nullspace(seg).rows() != 1) continue;
        }
        return scene;
    }
    throw DomainError("genericity", "no generic scene found within the attempt bound");
}

}  // namespace segdet
