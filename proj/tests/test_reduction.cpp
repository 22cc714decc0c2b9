#include <doctest.h>

#include <algorithm>

#include "harmonics/harmonic.hpp"
#include "harmonics/reduction.hpp"
#include "matrices.hpp"

using namespace harmonics;

TEST_CASE("band cells are the three central anti-diagonals") {
    const auto cells = band_indices(4);
    const std::vector<std::pair<int, int>> expected = {{1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4},
                                                       {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}};
    CHECK(cells == expected);

    for (int n : {2, 6, 8, 20}) {
        const auto c = band_indices(n);
        CHECK(static_cast<int>(c.size()) == 3 * n - 2);
        for (const auto& [i, j] : c) {
            CHECK(i + j >= n);
            CHECK(i + j <= n + 2);
        }
    }
    CHECK_THROWS_AS(band_indices(1), DomainError);
}

TEST_CASE("band reduction collapses the published order-8 grid to order 6") {
    const Grid reduced = reduce_band(testdata::grid(testdata::kStandard8));
    CHECK(grid_equal(reduced, testdata::grid(testdata::kStandard6)));
}

TEST_CASE("band reduction steps down the standard family") {
    CHECK(grid_equal(reduce_band(testdata::grid(testdata::kStandard6)),
                     testdata::grid(testdata::kStandard4)));
    Grid two(2, 2);
    two << 1, 2, 2, 1;
    CHECK(grid_equal(reduce_band(testdata::grid(testdata::kStandard4)), two));
}

TEST_CASE("band reduction rejects unsuitable input") {
    Grid two(2, 2);
    two << 1, 2, 2, 1;
    CHECK_THROWS_AS(reduce_band(two), DomainError); // already minimal

    Grid bad(4, 4);
    bad << 1, 2, 3, 4,
           1, 2, 3, 4,
           1, 2, 3, 4,
           1, 2, 3, 4;
    CHECK_THROWS_AS(reduce_band(bad), VerificationError); // not harmonic
}

TEST_CASE("a harmonic grid without the band symmetry is refused at the seam") {
    // Swapping the middle rows of the standard order-6 grid keeps it harmonic
    // (the pair multiset is row-order independent) but breaks the seam values.
    Grid g = testdata::grid(testdata::kStandard6);
    g.row(2).swap(g.row(3));
    REQUIRE(is_harmonic(g).harmonic);
    CHECK_THROWS_AS(reduce_band(g), VerificationError);
}

TEST_CASE("nesting chain of the published order-8 grid") {
    const std::vector<Grid> chain = nesting_chain(testdata::grid(testdata::kStandard8));
    REQUIRE(chain.size() == 4);
    CHECK(chain[0].rows() == 8);
    CHECK(chain[1].rows() == 6);
    CHECK(chain[2].rows() == 4);
    CHECK(chain[3].rows() == 2);
    CHECK(grid_equal(chain[1], testdata::grid(testdata::kStandard6)));
    CHECK(grid_equal(chain[2], testdata::grid(testdata::kStandard4)));
    for (const Grid& g : chain)
        CHECK(is_harmonic(g).harmonic);
}

TEST_CASE("nesting chain on an already minimal grid") {
    Grid two(2, 2);
    two << 1, 2, 2, 1;
    const std::vector<Grid> chain = nesting_chain(two);
    REQUIRE(chain.size() == 1);
    CHECK(grid_equal(chain[0], two));
}

TEST_CASE("nesting chain reports the failing order") {
    Grid g = testdata::grid(testdata::kStandard6);
    g.row(2).swap(g.row(3));
    try {
        nesting_chain(g);
        FAIL("expected a seam failure");
    } catch (const VerificationError& e) {
        CHECK(std::string(e.what()).find("order 6") != std::string::npos);
    }
}
