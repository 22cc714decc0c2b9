#include <doctest.h>

#include <random>

#include "harmonics/enumeration.hpp"
#include "harmonics/isomorphism.hpp"
#include "matrices.hpp"
#include "oracles.hpp"

using namespace harmonics;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_one_based(images);
}

} // namespace

TEST_CASE("canonical form matches the exhaustive relabelling search") {
    for (const char* text : {testdata::kStandard4, testdata::kRelabeled4, testdata::kStandard6,
                             testdata::kAlternate6}) {
        const Grid g = testdata::grid(text);
        CHECK(grid_equal(canonical_form(g), oracle::canonical_exhaustive(g)));
    }
}

TEST_CASE("canonical form starts with the identity row") {
    const Grid c = canonical_form(testdata::grid(testdata::kStandard6));
    for (int j = 0; j < 6; ++j)
        CHECK(c(0, j) == j + 1);
}

TEST_CASE("canonical form is invariant under relabelling and row moves") {
    const Grid base = testdata::grid(testdata::kStandard6);
    const Grid canon = canonical_form(base);
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 25; ++trial) {
        const IsoWitness w{random_permutation(6, rng), random_permutation(6, rng)};
        const Grid moved = apply_witness(base, w);
        CHECK(is_harmonic(moved).harmonic);
        CHECK(grid_equal(canonical_form(moved), canon));
    }
}

TEST_CASE("canonical form rejects non-harmonic input") {
    Grid bad(2, 2);
    bad << 1, 2, 1, 2;
    CHECK_THROWS_AS(canonical_form(bad), VerificationError);
}

TEST_CASE("equivalent grids are recognized with a working witness") {
    const Grid a = testdata::grid(testdata::kStandard4);
    const Grid b = testdata::grid(testdata::kRelabeled4);
    const IsoResult r = are_isomorphic(a, b);
    REQUIRE(r.equal);
    REQUIRE(r.witness.has_value());
    CHECK(grid_equal(apply_witness(a, *r.witness), b));
}

TEST_CASE("self-equivalence yields a witness") {
    const Grid a = testdata::grid(testdata::kStandard6);
    const IsoResult r = are_isomorphic(a, a);
    REQUIRE(r.equal);
    REQUIRE(r.witness.has_value());
    CHECK(grid_equal(apply_witness(a, *r.witness), a));
}

TEST_CASE("the two published order-6 grids are inequivalent") {
    const IsoResult r =
        are_isomorphic(testdata::grid(testdata::kStandard6), testdata::grid(testdata::kAlternate6));
    CHECK_FALSE(r.equal);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("different orders never compare equivalent") {
    const IsoResult r =
        are_isomorphic(testdata::grid(testdata::kStandard4), testdata::grid(testdata::kStandard6));
    CHECK_FALSE(r.equal);
}

TEST_CASE("equivalence requires harmonic inputs") {
    Grid bad(2, 2);
    bad << 1, 2, 1, 2;
    const Grid good = testdata::grid(testdata::kStandard4);
    CHECK_THROWS_AS(are_isomorphic(bad, bad), VerificationError);
    CHECK_THROWS_AS(are_isomorphic(good, bad), VerificationError);
}

TEST_CASE("a randomly disguised grid is recovered") {
    const Grid base = testdata::grid(testdata::kStandard8);
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 10; ++trial) {
        const IsoWitness w{random_permutation(8, rng), random_permutation(8, rng)};
        const Grid disguised = apply_witness(base, w);
        const IsoResult r = are_isomorphic(base, disguised);
        REQUIRE(r.equal);
        CHECK(grid_equal(apply_witness(base, *r.witness), disguised));
    }
}

TEST_CASE("restricted relabelling search is complete at order 4") {
    // Every order-4 harmonic grid, not just first-row-normalized ones.
    const std::vector<Grid> all = enumerate_harmonic(4, false);
    for (const Grid& g : all)
        CHECK(grid_equal(canonical_form(g), oracle::canonical_exhaustive(g)));
}
