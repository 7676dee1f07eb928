#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "segdet/bracket.hpp"
#include "segdet/grassmann.hpp"
#include "segdet/rng.hpp"
#include "segdet/segre.hpp"

namespace segdet {

// Image of a configuration under the Segre coefficient map: the vector of
// standard-basis B-coefficients of Seg(A, B), compared projectively.
struct CoefficientVector {
    SegreShape shape;
    std::vector<BracketMonomial> basis;  // standard B-monomials, ascending
    std::vector<Rational> values;

    bool proportional_to(const CoefficientVector& o) const;
    std::optional<std::size_t> index_of(const BracketMonomial& m) const;
};

// A must be k x (k*l). Throws "zero_polynomial" if every coefficient
// vanishes (cannot happen for uniform A).
CoefficientVector coeff_map(const PointConfiguration& a);

// Rank of the matrix whose rows are the B-coefficients of the symbolic
// double expansion written in the standard A-monomial basis. Full span
// means the rank equals the number of standard multilinear A-monomials.
int coefficient_span_rank(int k, int l);

// A polynomial in the coordinates of a coefficient vector, keyed by
// exponent tuples; used for the interpolated hypersurface of the image.
struct CoordinatePolynomial {
    std::vector<BracketMonomial> coordinate_names;
    std::map<std::vector<int>, Rational> terms;

    Rational eval(const std::vector<Rational>& point) const;
};

struct CubicInterpolation {
    int sample_count;
    std::uint64_t seed;
    CoordinatePolynomial cubic;   // primitive integer coefficients, first sign +
    int kernel_dimension;
};

// Samples uniform points of Gr(2,6), maps them through the (2,3) coefficient
// map, and solves exactly for all cubics vanishing on the image. The kernel
// is one-dimensional; its generator is the classical Segre cubic.
CubicInterpolation interpolate_image_cubic(int sample_count, std::uint64_t seed);

struct CollisionReport {
    PointConfiguration a;
    PointConfiguration gale_dual;
    CoefficientVector image_a;
    CoefficientVector image_dual;
    bool images_projectively_equal;
    bool self_associated;  // torus normal forms agree (reported, not an error)
};

// Gale-duality witness of non-injectivity on Gr(3,6): the kernel
// representative has the same coefficient image but (generically) a
// different torus orbit closure.
CollisionReport association_collision(const PointConfiguration& a);

struct SeparationReport {
    int n;
    int trials;
    int separated;
    bool all_separated;
    std::optional<std::pair<ExactMatrix, ExactMatrix>> witness;  // first failing pair
};

// For k = 2 the coefficient image determines the torus orbit closure of a
// uniform point: sampled pairs with different normal forms must have
// different images.
SeparationReport separation_check_k2(int n, int trials, std::uint64_t seed);

// Uniform random configuration with entries in [-bound, bound]; redraws
// until the matroid is uniform.
PointConfiguration random_uniform_configuration(int k, int n, Rng& rng, int bound = 9);

}  // namespace segdet
