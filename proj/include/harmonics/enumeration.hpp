#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "harmonics/harmonic.hpp"

namespace harmonics {

// Exhaustively enumerate harmonic grids of even order n by depth-first
// search over rows, in lexicographic order of the row sequence.  With
// normalize_first_row the first row is pinned to 1..n, which picks one
// representative per symbol relabelling.
//
// Orders 2, 4 and 6 run in well under a second.  Orders 8 and 10 are
// combinatorially explosive and require allow_large; anything beyond 10 is
// refused outright.
void enumerate_harmonic(int n, bool normalize_first_row,
                        const std::function<void(const Grid&)>& sink,
                        bool allow_large = false);

// Convenience wrapper collecting all results.  Mind the memory at order 6+.
std::vector<Grid> enumerate_harmonic(int n, bool normalize_first_row,
                                     bool allow_large = false);

struct ClassEntry {
    Grid canonical;
    std::uint64_t members = 0;           // grids in the class (first row pinned)
    std::uint64_t symmetric_members = 0; // members symmetric in both diagonals
};

struct ClassCatalog {
    int n = 0;
    std::uint64_t total = 0; // total enumerated grids
    std::vector<ClassEntry> classes;
};

// Enumerate with the first row pinned and bucket every grid by canonical
// form.  Classes are listed in lexicographic order of their canonical grids,
// so the catalog is reproducible run to run.
ClassCatalog classify_all(int n, bool allow_large = false);

} // namespace harmonics
