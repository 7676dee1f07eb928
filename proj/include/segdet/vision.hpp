#pragma once

#include <cstdint>
#include <vector>

#include "segdet/matrix.hpp"
#include "segdet/rational.hpp"

namespace segdet {

// A pair of projective points a in P^{k-1}, b in P^{k-1} given by nonzero
// coordinate vectors of equal length k.
struct Correspondence {
    std::vector<Rational> a;
    std::vector<Rational> b;
};

// Full-rank k x (2k-2) projection matrix P^{2k-3} -> P^{k-1}.
struct Camera {
    ExactMatrix mat;
};

// k x k matrix F, defined up to scale, with flatten(F) . (a (x) b) = 0 for
// every correspondence it annihilates; flatten follows the Segre row order,
// i.e. the epipolar form is sum_{i,j} F_{ij} a_i b_j.
struct FundamentalMatrix {
    ExactMatrix f;
};

Rational epipolar_product(const FundamentalMatrix& f, const Correspondence& c);

// Reshapes the one-dimensional left kernel of the k^2 x m Segre matrix of
// the pairs (m >= k^2 - 1). Errors: "kernel_empty" when the kernel is
// trivial (possible once m >= k^2), "degenerate_configuration" when it has
// dimension >= 2; both carry the kernel dimension.
FundamentalMatrix fundamental_from_points(const std::vector<Correspondence>& pairs);

// Constructive route from a camera pair: with phi a partial inverse of p1,
// M = p2 * phi and V = p2(ker p1), the matrix sends x to the maximal minors
// of [M x ; V]; its rank is at most two. `use_last_pivots` changes the
// partial inverse, which must not change F beyond scale.
FundamentalMatrix fundamental_from_cameras(const Camera& p1, const Camera& p2,
                                           bool use_last_pivots = false);

// Determinant of the 9 x 9 Segre matrix of nine point pairs in P^2 x P^2;
// vanishing is necessary for a common recovery in P^3.
Rational nine_point_test(const std::vector<Correspondence>& pairs);

struct Scene {
    Camera p1, p2;
    std::vector<std::vector<Rational>> world;  // points in P^{2k-3}
    std::vector<Correspondence> pairs;
};

// Deterministic synthetic scene: `count` points of P^{2k-3} with small
// integer coordinates projected through two random rank-k cameras. Redraws
// (bounded) until the genericity checks hold: camera ranks, dim p2(ker p1)
// = k-2, rank F = 2, and for count = k^2-1 a one-dimensional Segre kernel.
Scene synth_scene(int k, int count, std::uint64_t seed);

}  // namespace segdet
