#include "doctest.h"
#include "segdet/error.hpp"
#include "segdet/segre.hpp"
#include "segdet/vision.hpp"
#include "testutil.hpp"

using namespace segdet;

namespace {

bool matrices_proportional(const ExactMatrix& a, const ExactMatrix& b) {
    std::vector<Rational> va(a.entries().begin(), a.entries().end());
    std::vector<Rational> vb(b.entries().begin(), b.entries().end());
    return proportional(va, vb);
}

}  // namespace

TEST_CASE("synthetic scenes are deterministic in the seed") {
    Scene s1 = synth_scene(3, 8, 12345);
    Scene s2 = synth_scene(3, 8, 12345);
    CHECK(s1.p1.mat == s2.p1.mat);
    CHECK(s1.p2.mat == s2.p2.mat);
    REQUIRE(s1.pairs.size() == s2.pairs.size());
    for (std::size_t i = 0; i < s1.pairs.size(); ++i) {
        CHECK(s1.pairs[i].a == s2.pairs[i].a);
        CHECK(s1.pairs[i].b == s2.pairs[i].b);
    }
    Scene s3 = synth_scene(3, 8, 54321);
    CHECK(s3.p1.mat != s1.p1.mat);
}

TEST_CASE("eight synthetic correspondences give a rank-2 kernel matrix") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        Scene scene = synth_scene(3, 8, seed);
        FundamentalMatrix f = fundamental_from_points(scene.pairs);
        CHECK(rank(f.f) == 2);
        for (const Correspondence& c : scene.pairs) CHECK(epipolar_product(f, c).is_zero());
    }
}

TEST_CASE("identical configurations are degenerate (antisymmetric kernel)") {
    Rng rng(501);
    std::vector<Correspondence> pairs;
    for (int i = 0; i < 8; ++i) {
        std::vector<Rational> p{Rational(rng.range(-9, 9)), Rational(rng.range(-9, 9)),
                                Rational(rng.range(1, 9))};
        pairs.push_back({p, p});
    }
    try {
        fundamental_from_points(pairs);
        FAIL("expected a degenerate-configuration error");
    } catch (const DomainError& e) {
        CHECK(e.code() == "degenerate_configuration");
        CHECK(e.detail().at("kernel_dim") == "3");
    }
}

TEST_CASE("unrelated pairs give a full-rank matrix generically") {
    Rng rng(503);
    std::vector<Correspondence> pairs;
    for (int i = 0; i < 8; ++i) {
        Correspondence c;
        for (int t = 0; t < 3; ++t) c.a.push_back(Rational(rng.range(-9, 9)));
        for (int t = 0; t < 3; ++t) c.b.push_back(Rational(rng.range(-9, 9)));
        pairs.push_back(std::move(c));
    }
    FundamentalMatrix f = fundamental_from_points(pairs);
    CHECK(rank(f.f) == 3);
}

TEST_CASE("overconstrained unrelated pairs leave an empty kernel") {
    Rng rng(509);
    std::vector<Correspondence> pairs;
    for (int i = 0; i < 9; ++i) {
        Correspondence c;
        for (int t = 0; t < 3; ++t) c.a.push_back(Rational(rng.range(-9, 9)));
        for (int t = 0; t < 3; ++t) c.b.push_back(Rational(rng.range(-9, 9)));
        pairs.push_back(std::move(c));
    }
    try {
        fundamental_from_points(pairs);
        FAIL("expected an empty-kernel error");
    } catch (const DomainError& e) {
        CHECK(e.code() == "kernel_empty");
    }
}

TEST_CASE("camera route: rank two and epipolar annihilation") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        Scene scene = synth_scene(3, 20, seed);
        FundamentalMatrix f = fundamental_from_cameras(scene.p1, scene.p2);
        CHECK(rank(f.f) == 2);
        for (const Correspondence& c : scene.pairs) CHECK(epipolar_product(f, c).is_zero());
    }
}

TEST_CASE("camera route and point route agree up to scale") {
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        Scene scene = synth_scene(3, 8, seed);
        FundamentalMatrix fp = fundamental_from_points(scene.pairs);
        FundamentalMatrix fc = fundamental_from_cameras(scene.p1, scene.p2);
        CHECK(matrices_proportional(fp.f, fc.f));
    }
}

TEST_CASE("the partial inverse choice does not change the matrix") {
    Scene scene = synth_scene(3, 8, 31);
    FundamentalMatrix f1 = fundamental_from_cameras(scene.p1, scene.p2, false);
    FundamentalMatrix f2 = fundamental_from_cameras(scene.p1, scene.p2, true);
    CHECK(matrices_proportional(f1.f, f2.f));
}

TEST_CASE("k=2 boundary: cameras are 2x2, no V block") {
    Scene scene = synth_scene(2, 3, 41);
    FundamentalMatrix f = fundamental_from_cameras(scene.p1, scene.p2);
    CHECK(f.f.rows() == 2);
    CHECK(rank(f.f) == 2);
    for (const Correspondence& c : scene.pairs) CHECK(epipolar_product(f, c).is_zero());
}

TEST_CASE("nine-point test") {
    // projections of a common configuration: must vanish
    Scene scene = synth_scene(3, 9, 51);
    CHECK(nine_point_test(scene.pairs).is_zero());

    // generic unrelated nonuple: nonzero
    Rng rng(53);
    std::vector<Correspondence> pairs;
    for (int i = 0; i < 9; ++i) {
        Correspondence c;
        for (int t = 0; t < 3; ++t) c.a.push_back(Rational(rng.range(-9, 9)));
        for (int t = 0; t < 3; ++t) c.b.push_back(Rational(rng.range(-9, 9)));
        pairs.push_back(std::move(c));
    }
    CHECK_FALSE(nine_point_test(pairs).is_zero());

    // duplicated pairs force vanishing
    pairs[8] = pairs[0];
    CHECK(nine_point_test(pairs).is_zero());

    pairs.pop_back();
    CHECK_THROWS_AS(nine_point_test(pairs), DomainError);
}

TEST_CASE("scale equivariance of the kernel line") {
    Scene scene = synth_scene(3, 8, 61);
    FundamentalMatrix f1 = fundamental_from_points(scene.pairs);
    std::vector<Correspondence> rescaled = scene.pairs;
    for (Rational& v : rescaled[3].a) v *= Rational(5, 7);
    for (Rational& v : rescaled[6].b) v *= Rational(-2);
    FundamentalMatrix f2 = fundamental_from_points(rescaled);
    CHECK(matrices_proportional(f1.f, f2.f));
}
