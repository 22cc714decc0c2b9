#include "harmonics/sudoku.hpp"

#include "harmonics/permutators.hpp"

namespace harmonics {

namespace {

void require_board_shape(const GridView& g, int k, const char* who) {
    if (k < 1)
        throw DomainError(std::string(who) + ": box edge must be at least 1");
    const int side = k * k;
    if (g.rows() != side || g.cols() != side)
        throw DomainError(std::string(who) + ": grid must be " + std::to_string(side) + "x" +
                          std::to_string(side) + " for box edge " + std::to_string(k));
    if (g.minCoeff() < 1 || g.maxCoeff() > side)
        throw DomainError(std::string(who) + ": entries must lie in 1.." + std::to_string(side));
}

void scan_unit(const std::vector<int>& unit, int index, int side,
               std::vector<SudokuViolation>& out) {
    std::vector<int> counts(static_cast<std::size_t>(side), 0);
    for (int v : unit)
        ++counts[static_cast<std::size_t>(v - 1)];
    for (int s = 0; s < side; ++s)
        if (counts[static_cast<std::size_t>(s)] != 1)
            out.push_back({index, s + 1, counts[static_cast<std::size_t>(s)]});
}

} // namespace

Grid interleave_blocks(const GridView& g, int k) {
    require_board_shape(g, k, "interleave_blocks");
    const int side = k * k;
    Grid out(side, side);
    for (int t = 0; t < side; ++t)
        out.row(t) = g.row((t % k) * k + t / k);
    return out;
}

SudokuReport validate_sudoku(const GridView& g, int k) {
    require_board_shape(g, k, "validate_sudoku");
    const int side = k * k;
    SudokuReport report;

    std::vector<int> unit(static_cast<std::size_t>(side));
    for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j)
            unit[static_cast<std::size_t>(j)] = g(i, j);
        scan_unit(unit, i + 1, side, report.row_violations);
    }
    for (int j = 0; j < side; ++j) {
        for (int i = 0; i < side; ++i)
            unit[static_cast<std::size_t>(i)] = g(i, j);
        scan_unit(unit, j + 1, side, report.column_violations);
    }
    for (int br = 0; br < k; ++br)
        for (int bc = 0; bc < k; ++bc) {
            int pos = 0;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    unit[static_cast<std::size_t>(pos++)] = g(br * k + i, bc * k + j);
            scan_unit(unit, br * k + bc + 1, side, report.box_violations);
        }

    report.valid = report.row_violations.empty() && report.column_violations.empty() &&
                   report.box_violations.empty();
    return report;
}

SudokuBoard build_sudoku(int k) {
    if (k < 3 || k % 2 == 0)
        throw DomainError("build_sudoku: box edge must be odd and at least 3");

    const Permutation shrunk = reduce_to_odd(harmonic_permutator(k * k + 1));
    if (!is_single_cycle(shrunk))
        throw ConstructionError("build_sudoku: shrunk permutator is not a single cycle, "
                                "so its power table cannot be a latin square");

    const Grid board = interleave_blocks(build_by_powers(shrunk), k);
    const SudokuReport report = validate_sudoku(board, k);
    if (!report.valid)
        throw ConstructionError("build_sudoku: construction produced an invalid board for k = " +
                                std::to_string(k));
    return SudokuBoard{k, board};
}

SudokuBoard relabel_board(const SudokuBoard& board, const Permutation& symbol_map) {
    const int side = board.side();
    if (symbol_map.size() != side)
        throw DomainError("relabel_board: relabelling must permute 1.." + std::to_string(side));
    Grid out(side, side);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            out(i, j) = symbol_map.image(board.cells(i, j));
    if (!validate_sudoku(out, board.k).valid)
        throw ConstructionError("relabel_board: relabelled board failed validation");
    return SudokuBoard{board.k, out};
}

} // namespace harmonics
