#include "harmonics/reduction.hpp"

namespace harmonics {

std::vector<std::pair<int, int>> band_indices(int n) {
    if (n < 2)
        throw DomainError("band_indices: order must be at least 2");
    std::vector<std::pair<int, int>> cells;
    cells.reserve(static_cast<std::size_t>(3 * n - 2));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j >= n && i + j <= n + 2)
                cells.emplace_back(i, j);
    return cells;
}

Grid reduce_band(const GridView& g) {
    const int n = static_cast<int>(g.rows());
    if (g.rows() != g.cols() || n < 4 || n % 2 != 0)
        throw DomainError("reduce_band: grid must be square of even order at least 4");
    if (!is_harmonic(g).harmonic)
        throw VerificationError("reduce_band: input grid is not harmonic");

    const int m = n - 2;
    Grid out(m, m);
    for (int k = 1; k <= m; ++k) {
        // Fragments on either side of the deleted band, 1-based:
        // row k, columns 1 .. n-1-k  and  row k+2, columns n+1-k .. n.
        // They overlap in exactly one value at the seam.
        const int upper_len = n - 1 - k;
        const int seam_upper = g(k - 1, upper_len - 1);
        const int seam_lower = g(k + 1, n - k);
        if (seam_upper != seam_lower)
            throw VerificationError(
                "reduce_band: seam mismatch at output row " + std::to_string(k) + " (" +
                std::to_string(seam_upper) + " vs " + std::to_string(seam_lower) +
                "); the grid lacks the required symmetry");
        for (int j = 1; j <= upper_len; ++j)
            out(k - 1, j - 1) = g(k - 1, j - 1);
        // Column j of the lower fragment lands at output column j-2.
        for (int j = n + 2 - k; j <= n; ++j)
            out(k - 1, j - 3) = g(k + 1, j - 1);
    }

    if (!is_harmonic(out).harmonic)
        throw ConstructionError(
            "reduce_band: result is not harmonic; the input is outside this reduction's reach");
    return out;
}

std::vector<Grid> nesting_chain(const GridView& g) {
    const int n = static_cast<int>(g.rows());
    if (g.rows() != g.cols() || n < 2 || n % 2 != 0)
        throw DomainError("nesting_chain: grid must be square of even order at least 2");
    if (!is_harmonic(g).harmonic)
        throw VerificationError("nesting_chain: input grid is not harmonic");

    std::vector<Grid> chain;
    chain.push_back(g);
    while (chain.back().rows() > 2) {
        const int order = static_cast<int>(chain.back().rows());
        try {
            chain.push_back(reduce_band(chain.back()));
        } catch (const VerificationError& e) {
            throw VerificationError("nesting_chain: stuck at order " + std::to_string(order) +
                                    ": " + e.what());
        } catch (const ConstructionError& e) {
            throw ConstructionError("nesting_chain: stuck at order " + std::to_string(order) +
                                    ": " + e.what());
        }
    }
    return chain;
}

} // namespace harmonics
