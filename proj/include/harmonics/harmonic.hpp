#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "harmonics/errors.hpp"
#include "harmonics/permutation.hpp"

namespace harmonics {

// Square grid of 1-based symbols.  All free functions below take a read-only
// view so they accept matrices, blocks and other Eigen expressions alike.
using Grid = Eigen::MatrixXi;
using GridView = Eigen::Ref<const Grid>;

bool grid_equal(const GridView& a, const GridView& b);

enum class Axis { Rows, Columns };

// The multiset of ordered adjacent pairs read along one axis of a grid:
// counts(a-1, b-1) is how often symbol b immediately follows symbol a.
struct TransitionSet {
    int n = 0;
    Eigen::MatrixXi counts;

    // Number of ordered pairs (a, b), a != b, that occur at least once.
    int distinct_pairs() const;
    // Total number of adjacencies, multiplicity included.
    int total_pairs() const;
    // True when every ordered pair of distinct symbols occurs exactly once.
    bool covers_all_pairs_once() const;

    friend bool operator==(const TransitionSet& x, const TransitionSet& y) {
        return x.n == y.n && grid_equal(x.counts, y.counts);
    }
};

// A symbol that does not occur exactly once in a row.
struct RowViolation {
    int row = 0;    // 1-based
    int symbol = 0; // 1-based
    int count = 0;  // occurrences found (0 = missing)
};

// An ordered pair of adjacent symbols whose multiplicity is not one.
struct PairViolation {
    int from = 0;
    int to = 0;
    int count = 0; // occurrences found (0 = missing)
};

struct HarmonicReport {
    bool harmonic = false;
    std::vector<RowViolation> row_violations;
    std::vector<PairViolation> pair_violations;
};

// Decide whether a grid satisfies the harmonic property: every row is a
// permutation of 1..n, and across all rows every ordered pair of distinct
// symbols appears as a horizontal neighbour exactly once.  Pair violations
// are only reported when all rows are well-formed, so the counts are
// meaningful.  Throws DomainError if the grid is not square or n < 1.
HarmonicReport is_harmonic(const GridView& g);

// Adjacent-pair multiset along rows or columns.  Symbols must lie in 1..n.
TransitionSet transitions(const GridView& g, Axis axis = Axis::Rows);

struct SymmetryProfile {
    bool transpose = false;            // g equals its transpose
    bool anti_transpose = false;       // g equals its reflection in the anti-diagonal
    bool horizontal_reversal = false;  // reversing every row equals reversing every column
    bool vertical_reversal = false;    // reversing every column equals reversing every row

    bool all() const { return transpose && anti_transpose && horizontal_reversal && vertical_reversal; }
};

SymmetryProfile symmetry_profile(const GridView& g);

// True when entries mirrored across the vertical midline sum to n+1 in every
// row: g(i, j) + g(i, n+1-j) == n+1.
bool gaussian_check(const GridView& g);

enum class Family { Fundamental, FirstOrderDegenerate, SecondOrderDegenerate, Unclassified };

std::string to_string(Family f);

struct HarmonicMatrix {
    Grid grid;
    Family family = Family::Unclassified;
    int order() const { return static_cast<int>(grid.rows()); }
};

// Row i of the result is (1..n) acted on by p^i, for i = 0..n-1 — the orbit
// of the identity row under repeated application of p.
Grid build_by_powers(const Permutation& p);

// Reorder rows so their leading entries read 1..n.  Requires pairwise
// distinct leading entries.
Grid standardize(const GridView& g);

// Closed-form construction of the standard harmonic matrix of even order n,
// assembled from weighted powers of the harmonic permutator.  The result is
// verified before being returned.
HarmonicMatrix build_fundamental(int n);

// Assign a harmonic grid to its family: isomorphic to the fundamental matrix
// of its order, or else split by whether it keeps both diagonal symmetries.
// Throws VerificationError if the grid is not harmonic.
Family classify_family(const GridView& g);

} // namespace harmonics
