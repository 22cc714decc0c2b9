#pragma once

// Independent reference implementations used to cross-check the library.
// Deliberately naive: linear composition chains, full factorial scans,
// generate-and-filter enumeration.  Correct by inspection, slow by design.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "harmonics/harmonic.hpp"
#include "harmonics/permutation.hpp"

namespace oracle {

inline harmonics::Permutation power_by_chain(const harmonics::Permutation& p, unsigned k) {
    harmonics::Permutation r = harmonics::Permutation::identity(p.size());
    for (unsigned i = 0; i < k; ++i)
        r = harmonics::compose(r, p);
    return r;
}

inline unsigned order_by_chain(const harmonics::Permutation& p) {
    const harmonics::Permutation id = harmonics::Permutation::identity(p.size());
    harmonics::Permutation r = p;
    unsigned k = 1;
    while (!(r == id)) {
        r = harmonics::compose(r, p);
        ++k;
    }
    return k;
}

// The action through the explicit matrix product v * P.
inline Eigen::RowVectorXi act_by_matrix(const Eigen::RowVectorXi& v,
                                        const harmonics::Permutation& p) {
    return v * p.to_matrix();
}

// Literal reading of the defining property: every row a permutation, every
// ordered pair of distinct symbols adjacent exactly once across all rows.
inline bool is_harmonic_naive(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::map<std::pair<int, int>, int> pair_count;
    for (const std::vector<int>& row : rows) {
        if (static_cast<int>(row.size()) != n)
            return false;
        std::vector<int> sorted = row;
        std::sort(sorted.begin(), sorted.end());
        for (int j = 0; j < n; ++j)
            if (sorted[static_cast<std::size_t>(j)] != j + 1)
                return false;
        for (int j = 0; j + 1 < n; ++j)
            ++pair_count[{row[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j + 1)]}];
    }
    if (static_cast<int>(pair_count.size()) != n * (n - 1))
        return false;
    for (const auto& [pair, count] : pair_count)
        if (count != 1)
            return false;
    return true;
}

inline std::vector<std::vector<int>> grid_rows(const harmonics::Grid& g) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.rows()));
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            rows[static_cast<std::size_t>(i)].push_back(g(i, j));
    return rows;
}

// Minimum of sorted(relabelled grid) over every one of the n! relabellings —
// the unrestricted search the canonical form must agree with.
inline harmonics::Grid canonical_exhaustive(const harmonics::Grid& g) {
    const int n = static_cast<int>(g.rows());
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);

    std::vector<std::vector<int>> best;
    bool have = false;
    do {
        std::vector<std::vector<int>> cand = grid_rows(g);
        for (std::vector<int>& row : cand)
            for (int& v : row)
                v = sigma[static_cast<std::size_t>(v - 1)];
        std::sort(cand.begin(), cand.end());
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    harmonics::Grid out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = best[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

// Generate-and-filter enumeration: try every tuple of rows, no pruning.
// With pin_first_row the first row is the identity row.
inline std::vector<std::vector<std::vector<int>>> enumerate_naive(int n, bool pin_first_row) {
    std::vector<std::vector<int>> perms;
    std::vector<int> row(static_cast<std::size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    do {
        perms.push_back(row);
    } while (std::next_permutation(row.begin(), row.end()));

    std::vector<std::vector<std::vector<int>>> found;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    const int first_choices = pin_first_row ? 1 : static_cast<int>(perms.size());

    // Odometer over row indices; the full check runs on complete tuples only.
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        for (int i = 0; i < n; ++i)
            rows[static_cast<std::size_t>(i)] = perms[pick[static_cast<std::size_t>(i)]];
        if (is_harmonic_naive(rows))
            found.push_back(rows);

        int level = n - 1;
        while (level >= 0) {
            const std::size_t limit =
                (level == 0) ? static_cast<std::size_t>(first_choices) : perms.size();
            if (++pick[static_cast<std::size_t>(level)] < limit)
                break;
            pick[static_cast<std::size_t>(level)] = 0;
            --level;
        }
        if (level < 0)
            break;
    }
    return found;
}

// Row-by-row scan for the mirrored-sum property.
inline bool gaussian_naive(const harmonics::Grid& g) {
    const int n = static_cast<int>(g.rows());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g(i, j) + g(i, n - 1 - j) != n + 1)
                return false;
    return true;
}

} // namespace oracle
