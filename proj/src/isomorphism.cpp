#include "harmonics/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace harmonics {

namespace {

std::vector<std::vector<int>> to_rows(const GridView& g) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.rows()));
    for (int i = 0; i < g.rows(); ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(g.cols()));
        for (int j = 0; j < g.cols(); ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g(i, j);
    }
    return rows;
}

Grid from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    Grid g(n, rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < g.cols(); ++j)
            g(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return g;
}

struct Canonical {
    std::vector<std::vector<int>> rows; // sorted, relabelled rows
    std::vector<int> symbol_lut;        // 1-based: symbol s -> symbol_lut[s-1]
    std::vector<int> row_position;      // 0-based: original row i lands at row_position[i]
};

// Try the n relabellings that send one row to 1..n, sort rows of each, and
// keep the lexicographically smallest outcome.  Ties cannot arise between
// distinct rows of a harmonic grid, and the first row index achieving the
// minimum wins, so the result is deterministic.
Canonical canonicalize(const GridView& g) {
    const HarmonicReport report = is_harmonic(g);
    if (!report.harmonic)
        throw VerificationError("canonical_form: grid is not harmonic");

    const int n = static_cast<int>(g.rows());
    const std::vector<std::vector<int>> rows = to_rows(g);

    Canonical best;
    bool have_best = false;
    std::vector<int> lut(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j < n; ++j)
            lut[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] - 1)] = j + 1;

        std::vector<std::vector<int>> relabelled(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            relabelled[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                relabelled[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    lut[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - 1)];
        }

        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return relabelled[static_cast<std::size_t>(x)] < relabelled[static_cast<std::size_t>(y)];
        });

        std::vector<std::vector<int>> sorted(static_cast<std::size_t>(n));
        for (int pos = 0; pos < n; ++pos)
            sorted[static_cast<std::size_t>(pos)] = relabelled[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])];

        if (!have_best || sorted < best.rows) {
            best.rows = std::move(sorted);
            best.symbol_lut = lut;
            best.row_position.assign(static_cast<std::size_t>(n), 0);
            for (int pos = 0; pos < n; ++pos)
                best.row_position[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
            have_best = true;
        }
    }
    return best;
}

} // namespace

Grid apply_witness(const GridView& g, const IsoWitness& w) {
    const int n = static_cast<int>(g.rows());
    if (g.rows() != g.cols())
        throw DomainError("apply_witness: grid must be square");
    if (w.symbol_map.size() != n || w.row_map.size() != n)
        throw DomainError("apply_witness: witness order does not match grid");
    Grid out(n, n);
    for (int i = 0; i < n; ++i) {
        const int target = w.row_map.image(i + 1) - 1;
        for (int j = 0; j < n; ++j)
            out(target, j) = w.symbol_map.image(g(i, j));
    }
    return out;
}

Grid canonical_form(const GridView& g) {
    return from_rows(canonicalize(g).rows);
}

IsoResult are_isomorphic(const GridView& a, const GridView& b) {
    // Validate both sides up front so error behaviour does not depend on
    // argument order.
    if (!is_harmonic(a).harmonic)
        throw VerificationError("are_isomorphic: first grid is not harmonic");
    if (!is_harmonic(b).harmonic)
        throw VerificationError("are_isomorphic: second grid is not harmonic");
    if (a.rows() != b.rows())
        return {};

    const Canonical ca = canonicalize(a);
    const Canonical cb = canonicalize(b);
    if (ca.rows != cb.rows)
        return {};

    const Permutation sigma_a = Permutation::from_one_based(ca.symbol_lut);
    const Permutation sigma_b = Permutation::from_one_based(cb.symbol_lut);
    std::vector<int> rho_a(ca.row_position.size());
    std::vector<int> rho_b(cb.row_position.size());
    for (std::size_t i = 0; i < ca.row_position.size(); ++i) {
        rho_a[i] = ca.row_position[i] + 1;
        rho_b[i] = cb.row_position[i] + 1;
    }

    // a's canonical map followed by the inverse of b's, on each axis.
    IsoWitness w{compose(sigma_a, inverse(sigma_b)),
                 compose(Permutation::from_one_based(rho_a),
                         inverse(Permutation::from_one_based(rho_b)))};

    if (!grid_equal(apply_witness(a, w), b))
        throw ConstructionError("are_isomorphic: witness failed re-verification");
    return {true, w};
}

} // namespace harmonics
