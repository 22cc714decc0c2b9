#pragma once

#include "harmonics/permutation.hpp"

namespace harmonics {

// Signed displacement d(i) used by the harmonic permutator of even order n:
//   d(1) = +1, d(n) = -1, otherwise d(i) = +2 for even i and -2 for odd i.
// Position i moves to i + d(i).
int displacement(int i, int n);

// The harmonic permutator of even order n: i -> i + d(i).  It is a single
// n-cycle and its (n/2)-th power is the full reversal.
Permutation harmonic_permutator(int n);

// A second order-6 generator (5 3 1 6 4 2) whose power table standardizes to
// a harmonic matrix outside the fundamental isomorphism class.
Permutation alternate_permutator_6();

// Shrink a permutation of even order n to odd order n-1: drop position n and
// symbol n, and send the position that previously mapped to n to the symbol
// that n previously mapped to.  Requires both of those to be uniquely defined.
Permutation reduce_to_odd(const Permutation& p);

} // namespace harmonics
