#pragma once

#include <vector>

#include "harmonics/harmonic.hpp"
#include "harmonics/permutation.hpp"

namespace harmonics {

// A symbol occurring the wrong number of times in one row, column or box.
struct SudokuViolation {
    int index = 0;  // 1-based row/column number, or box number in row-major order
    int symbol = 0;
    int count = 0;
};

struct SudokuReport {
    bool valid = false;
    std::vector<SudokuViolation> row_violations;
    std::vector<SudokuViolation> column_violations;
    std::vector<SudokuViolation> box_violations;
};

struct SudokuBoard {
    int k = 0;   // box edge; the board is k^2 x k^2
    Grid cells;
    int side() const { return k * k; }
};

// Reorder the rows of a k^2 x k^2 grid so that consecutive input rows land in
// consecutive boxes: output row t (0-based) is input row (t mod k)*k + t/k.
Grid interleave_blocks(const GridView& g, int k);

// Check the three sudoku constraints on a k^2 x k^2 grid of symbols 1..k^2.
SudokuReport validate_sudoku(const GridView& g, int k);

// Deterministically build a solved sudoku board for odd k >= 3: take the
// power table of the harmonic permutator of order k^2+1 shrunk to order k^2,
// then interleave its rows across boxes.  The result is fully validated.
SudokuBoard build_sudoku(int k);

// Apply a symbol relabelling to a board; the result is re-validated.
SudokuBoard relabel_board(const SudokuBoard& board, const Permutation& symbol_map);

} // namespace harmonics
