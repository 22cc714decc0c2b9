#pragma once

// Reference grids, frozen from the published tables and transcribed by hand.
// Everything here is input data for tests; nothing is computed.

#include "harmonics/io.hpp"

namespace testdata {

// Standard harmonic matrices of orders 4, 6 and 8.
inline const char* kStandard4 = R"(4
1 2 3 4
2 4 1 3
3 1 4 2
4 3 2 1
)";

inline const char* kStandard6 = R"(6
1 2 3 4 5 6
2 4 1 6 3 5
3 1 5 2 6 4
4 6 2 5 1 3
5 3 6 1 4 2
6 5 4 3 2 1
)";

inline const char* kStandard8 = R"(8
1 2 3 4 5 6 7 8
2 4 1 6 3 8 5 7
3 1 5 2 7 4 8 6
4 6 2 8 1 7 3 5
5 3 7 1 8 2 6 4
6 8 4 7 2 5 1 3
7 5 8 3 6 1 4 2
8 7 6 5 4 3 2 1
)";

// The order-4 standard matrix with symbols renamed 1->1, 2->3, 3->4, 4->2
// and rows kept in place; equivalent to kStandard4 by construction.
inline const char* kRelabeled4 = R"(4
1 3 4 2
3 2 1 4
4 1 2 3
2 4 3 1
)";

// Order-6 harmonic matrix generated by (5 3 1 6 4 2); doubly symmetric but
// not equivalent to the standard one.
inline const char* kAlternate6 = R"(6
1 2 3 4 5 6
2 4 6 1 3 5
3 6 2 5 1 4
4 1 5 2 6 3
5 3 1 6 4 2
6 5 4 3 2 1
)";

// Order-8 harmonic matrix that keeps neither diagonal symmetry; its
// transpose has rows that are not permutations.
inline const char* kAsymmetric8 = R"(8
1 2 3 4 5 6 7 8
2 4 8 6 3 1 5 7
3 8 5 2 7 4 1 6
4 6 2 8 1 7 3 5
5 3 7 1 8 2 6 4
6 8 4 7 2 5 1 3
7 5 8 3 6 1 4 2
8 7 6 5 4 3 2 1
)";

// Order-8 harmonic matrix published next to the one above; doubly symmetric
// yet outside the standard class.
inline const char* kVariant8 = R"(8
1 2 3 4 5 6 7 8
2 4 8 6 3 1 5 7
3 8 5 2 7 4 1 6
4 6 2 8 1 7 3 5
5 3 7 1 8 2 6 4
6 1 4 7 2 5 8 3
7 5 1 3 6 8 4 2
8 7 6 5 4 3 2 1
)";

// Power table of the order-9 shrunk permutator (2 4 1 6 3 8 5 9 7): the
// latin square that feeds the 9x9 board below.
inline const char* kPowerTable9 = R"(9
1 2 3 4 5 6 7 8 9
3 1 5 2 7 4 9 6 8
5 3 7 1 9 2 8 4 6
7 5 9 3 8 1 6 2 4
9 7 8 5 6 3 4 1 2
8 9 6 7 4 5 2 3 1
6 8 4 9 2 7 1 5 3
4 6 2 8 1 9 3 7 5
2 4 1 6 3 8 5 9 7
)";

// The finished 9x9 board: rows of the table above interleaved across boxes.
inline const char* kBoard3 = R"(9
1 2 3 4 5 6 7 8 9
7 5 9 3 8 1 6 2 4
6 8 4 9 2 7 1 5 3
3 1 5 2 7 4 9 6 8
9 7 8 5 6 3 4 1 2
4 6 2 8 1 9 3 7 5
5 3 7 1 9 2 8 4 6
8 9 6 7 4 5 2 3 1
2 4 1 6 3 8 5 9 7
)";

inline harmonics::Grid grid(const char* text) { return harmonics::parse_grid_string(text); }

} // namespace testdata
