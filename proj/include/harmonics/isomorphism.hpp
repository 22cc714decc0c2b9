#pragma once

#include <optional>

#include "harmonics/harmonic.hpp"
#include "harmonics/permutation.hpp"

namespace harmonics {

// An explicit equivalence between two harmonic grids a and b:
//   b(row_map(i), j) == symbol_map(a(i, j))   for all i, j (1-based).
struct IsoWitness {
    Permutation symbol_map; // sigma: relabels symbols
    Permutation row_map;    // tau: moves rows
};

// Apply a witness to a grid.
Grid apply_witness(const GridView& g, const IsoWitness& w);

// Canonical representative of a harmonic grid's equivalence class under
// symbol relabelling and row reordering.  Two harmonic grids are equivalent
// exactly when their canonical forms are equal.  Throws VerificationError if
// the grid is not harmonic.
//
// The candidate relabellings are the n maps that send some row to 1..n; any
// relabelling achieving the lexicographic minimum must put the row 1..n
// first, so restricting to these n candidates loses nothing.
Grid canonical_form(const GridView& g);

struct IsoResult {
    bool equal = false;                 // same class?
    std::optional<IsoWitness> witness;  // present when equal
};

// Decide equivalence and, when equivalent, return a witness that has been
// re-checked by direct application.  Grids of different orders compare
// not-equivalent; non-harmonic grids are rejected with VerificationError.
IsoResult are_isomorphic(const GridView& a, const GridView& b);

} // namespace harmonics
