#pragma once

#include <vector>

#include "harmonics/harmonic.hpp"

namespace harmonics {

// The three central anti-diagonals of an order-n grid: all 1-based cells
// (i, j) with i + j in {n, n+1, n+2}.  These 3n-2 cells are what the band
// reduction removes.
std::vector<std::pair<int, int>> band_indices(int n);

// Collapse a harmonic grid of even order n >= 4 to order n-2 by deleting the
// central band.  Output row k joins the cells of input row k left of the
// band with the cells of input row k+2 right of it; the two fragments share
// one value at the seam, which must agree on both sides.  A seam mismatch
// means the input lacks the symmetry this reduction relies on and raises
// VerificationError.  The result is checked to be harmonic.
Grid reduce_band(const GridView& g);

// Repeatedly apply reduce_band down to order 2.  The returned chain starts
// with the input and ends with the 2x2 (or the input itself when it is
// already order 2).  Errors are re-thrown with the failing order attached.
std::vector<Grid> nesting_chain(const GridView& g);

} // namespace harmonics
