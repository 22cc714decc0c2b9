#include "harmonics/enumeration.hpp"

#include "harmonics/isomorphism.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>

namespace harmonics {

namespace {

// One bit per ordered pair (a, b); n <= 10 keeps n*n within 128 bits.
using PairMask = std::bitset<128>;

int pair_bit(int a, int b, int n) {
    return (a - 1) * n + (b - 1);
}

struct RowCandidate {
    std::vector<int> row;
    PairMask mask;
};

// All n! rows in lexicographic order, each with its adjacency mask,
// grouped into buckets sharing the leading pair (row[0], row[1]).
// Lexicographic row order makes each bucket a contiguous range and sorts
// the buckets by their leading pair's bit index.
struct CandidateTable {
    std::vector<RowCandidate> rows;
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> buckets; // pair bit -> [begin, end)
};

CandidateTable build_candidates(int n) {
    CandidateTable table;
    std::vector<int> row(static_cast<std::size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    do {
        RowCandidate c;
        c.row = row;
        for (int j = 0; j + 1 < n; ++j)
            c.mask.set(static_cast<std::size_t>(pair_bit(row[static_cast<std::size_t>(j)],
                                                          row[static_cast<std::size_t>(j + 1)], n)));
        table.rows.push_back(std::move(c));
    } while (std::next_permutation(row.begin(), row.end()));

    std::size_t begin = 0;
    while (begin < table.rows.size()) {
        const int lead = pair_bit(table.rows[begin].row[0], table.rows[begin].row[1], n);
        std::size_t end = begin;
        while (end < table.rows.size() &&
               pair_bit(table.rows[end].row[0], table.rows[end].row[1], n) == lead)
            ++end;
        table.buckets.push_back({lead, {begin, end}});
        begin = end;
    }
    return table;
}

struct Search {
    int n;
    const CandidateTable& table;
    const std::function<void(const Grid&)>& sink;
    std::vector<const std::vector<int>*> chosen;
    PairMask used;

    void run(int depth) {
        if (depth == n) {
            Grid g(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    g(i, j) = (*chosen[static_cast<std::size_t>(i)])[static_cast<std::size_t>(j)];
            sink(g);
            return;
        }
        for (const auto& [lead, range] : table.buckets) {
            // Every row in the bucket starts with the same pair; one test
            // discards the whole range.
            if (used.test(static_cast<std::size_t>(lead)))
                continue;
            for (std::size_t k = range.first; k < range.second; ++k) {
                const RowCandidate& c = table.rows[k];
                if ((c.mask & used).any())
                    continue;
                chosen[static_cast<std::size_t>(depth)] = &c.row;
                used |= c.mask;
                run(depth + 1);
                used &= ~c.mask;
            }
        }
    }
};

void check_order(int n, bool allow_large) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("enumerate_harmonic: order must be even and at least 2");
    if (n > 10)
        throw DomainError("enumerate_harmonic: order " + std::to_string(n) +
                          " is out of reach; the hard cap is 10");
    if (n > 6 && !allow_large)
        throw DomainError("enumerate_harmonic: order " + std::to_string(n) +
                          " needs allow_large; expect a very long run");
}

} // namespace

void enumerate_harmonic(int n, bool normalize_first_row,
                        const std::function<void(const Grid&)>& sink,
                        bool allow_large) {
    check_order(n, allow_large);
    const CandidateTable table = build_candidates(n);

    Search search{n, table, sink, {}, {}};
    search.chosen.resize(static_cast<std::size_t>(n), nullptr);
    if (normalize_first_row) {
        // The identity row is the first candidate in lexicographic order.
        const RowCandidate& first = table.rows.front();
        search.chosen[0] = &first.row;
        search.used = first.mask;
        search.run(1);
    } else {
        search.run(0);
    }
}

std::vector<Grid> enumerate_harmonic(int n, bool normalize_first_row, bool allow_large) {
    std::vector<Grid> out;
    enumerate_harmonic(
        n, normalize_first_row, [&out](const Grid& g) { out.push_back(g); }, allow_large);
    return out;
}

ClassCatalog classify_all(int n, bool allow_large) {
    struct Accum {
        std::uint64_t members = 0;
        std::uint64_t symmetric_members = 0;
    };
    std::map<std::vector<int>, Accum> classes; // keyed, and later emitted, in lex order

    ClassCatalog catalog;
    catalog.n = n;
    enumerate_harmonic(
        n, true,
        [&](const Grid& g) {
            ++catalog.total;
            const Grid canon = canonical_form(g);
            std::vector<int> key; // row-major flatten so map order is row-by-row lex
            key.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    key.push_back(canon(i, j));
            Accum& acc = classes[key];
            ++acc.members;
            const SymmetryProfile p = symmetry_profile(g);
            if (p.transpose && p.anti_transpose)
                ++acc.symmetric_members;
        },
        allow_large);

    for (const auto& [key, acc] : classes) {
        ClassEntry entry;
        entry.canonical = Grid(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                entry.canonical(i, j) = key[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                            static_cast<std::size_t>(j)];
        entry.members = acc.members;
        entry.symmetric_members = acc.symmetric_members;
        catalog.classes.push_back(std::move(entry));
    }
    return catalog;
}

} // namespace harmonics
