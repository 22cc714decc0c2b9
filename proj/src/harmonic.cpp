#include "harmonics/harmonic.hpp"

#include "harmonics/isomorphism.hpp"
#include "harmonics/permutators.hpp"

namespace harmonics {

namespace {

void require_square(const GridView& g, const char* who) {
    if (g.rows() < 1 || g.rows() != g.cols())
        throw DomainError(std::string(who) + ": grid must be square and non-empty");
}

void require_symbol_range(const GridView& g, const char* who) {
    const int n = static_cast<int>(g.rows());
    if (g.minCoeff() < 1 || g.maxCoeff() > n)
        throw DomainError(std::string(who) + ": entries must lie in 1.." + std::to_string(n));
}

} // namespace

bool grid_equal(const GridView& a, const GridView& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

int TransitionSet::distinct_pairs() const {
    int count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && counts(a, b) > 0)
                ++count;
    return count;
}

int TransitionSet::total_pairs() const {
    return counts.sum();
}

bool TransitionSet::covers_all_pairs_once() const {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (counts(a, b) != (a == b ? 0 : 1))
                return false;
    return true;
}

TransitionSet transitions(const GridView& g, Axis axis) {
    require_square(g, "transitions");
    require_symbol_range(g, "transitions");
    const int n = static_cast<int>(g.rows());
    TransitionSet t;
    t.n = n;
    t.counts = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < n; ++j) {
            const int a = (axis == Axis::Rows) ? g(i, j) : g(j, i);
            const int b = (axis == Axis::Rows) ? g(i, j + 1) : g(j + 1, i);
            ++t.counts(a - 1, b - 1);
        }
    return t;
}

HarmonicReport is_harmonic(const GridView& g) {
    require_square(g, "is_harmonic");
    require_symbol_range(g, "is_harmonic");
    const int n = static_cast<int>(g.rows());

    HarmonicReport report;
    for (int i = 0; i < n; ++i) {
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j)
            ++seen[static_cast<std::size_t>(g(i, j) - 1)];
        for (int s = 0; s < n; ++s)
            if (seen[static_cast<std::size_t>(s)] != 1)
                report.row_violations.push_back({i + 1, s + 1, seen[static_cast<std::size_t>(s)]});
    }

    // Pair counts are only meaningful over well-formed rows.
    if (report.row_violations.empty()) {
        const TransitionSet t = transitions(g, Axis::Rows);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b)
                    continue;
                if (t.counts(a, b) != 1)
                    report.pair_violations.push_back({a + 1, b + 1, t.counts(a, b)});
            }
    }

    report.harmonic = report.row_violations.empty() && report.pair_violations.empty();
    return report;
}

SymmetryProfile symmetry_profile(const GridView& g) {
    require_square(g, "symmetry_profile");
    const Grid transposed = g.transpose();
    const Grid anti_transposed = g.transpose().reverse();
    const Grid rows_reversed = g.rowwise().reverse();
    const Grid cols_reversed = g.colwise().reverse();

    SymmetryProfile p;
    p.transpose = grid_equal(g, transposed);
    p.anti_transpose = grid_equal(g, anti_transposed);
    p.horizontal_reversal = grid_equal(rows_reversed, cols_reversed);
    p.vertical_reversal = grid_equal(cols_reversed, rows_reversed);
    return p;
}

bool gaussian_check(const GridView& g) {
    require_square(g, "gaussian_check");
    const int n = static_cast<int>(g.rows());
    const Grid mirrored = g.rowwise().reverse();
    return ((g + mirrored).array() == n + 1).all();
}

std::string to_string(Family f) {
    switch (f) {
    case Family::Fundamental: return "fundamental";
    case Family::FirstOrderDegenerate: return "first-order-degenerate";
    case Family::SecondOrderDegenerate: return "second-order-degenerate";
    case Family::Unclassified: return "unclassified";
    }
    throw DomainError("to_string: unknown family");
}

Grid build_by_powers(const Permutation& p) {
    const int n = p.size();
    Grid g(n, n);
    Eigen::RowVectorXi row = Eigen::RowVectorXi::LinSpaced(n, 1, n);
    for (int i = 0; i < n; ++i) {
        g.row(i) = row;
        row = act_on_vector(row, p);
    }
    return g;
}

Grid standardize(const GridView& g) {
    require_square(g, "standardize");
    const int n = static_cast<int>(g.rows());
    std::vector<int> source_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int head = g(i, 0);
        if (head < 1 || head > n)
            throw ConstructionError("standardize: row head " + std::to_string(head) +
                                    " out of range");
        if (source_of[static_cast<std::size_t>(head - 1)] != -1)
            throw ConstructionError("standardize: duplicate row head " + std::to_string(head));
        source_of[static_cast<std::size_t>(head - 1)] = i;
    }
    Grid out(n, n);
    for (int k = 0; k < n; ++k)
        out.row(k) = g.row(source_of[static_cast<std::size_t>(k)]);
    return out;
}

HarmonicMatrix build_fundamental(int n) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("build_fundamental: order must be even and at least 2");

    const Permutation beta = harmonic_permutator(n);

    // Accumulate sum_i (a * I + b * J) * B^e where J is the full reversal,
    // a and b walk the odd and even symbols, and e runs n/2 down to 1.
    // Row r of (a*I + b*J) * P is a * P(r, :) + b * P(n-1-r, :).  Reordering
    // the rows of this sum reproduces the published tables directly.
    Grid sum = Grid::Zero(n, n);
    Grid writes = Grid::Zero(n, n);
    for (int i = 1; i <= n / 2; ++i) {
        const int a = 2 * i - 1;
        const int b = n - 2 * i + 2;
        const Grid p = power(beta, static_cast<std::uint64_t>(n / 2 - i + 1)).to_matrix();
        for (int r = 0; r < n; ++r) {
            sum.row(r) += a * p.row(r) + b * p.row(n - 1 - r);
            writes.row(r) += p.row(r) + p.row(n - 1 - r);
        }
    }
    if (!(writes.array() == 1).all())
        throw ConstructionError("build_fundamental: summands do not tile the grid exactly once");

    const Grid standardized = standardize(sum);

    const HarmonicReport report = is_harmonic(standardized);
    if (!report.harmonic)
        throw ConstructionError("build_fundamental: result failed the harmonic check");
    return HarmonicMatrix{standardized, Family::Fundamental};
}

Family classify_family(const GridView& g) {
    const HarmonicReport report = is_harmonic(g);
    if (!report.harmonic)
        throw VerificationError("classify_family: grid is not harmonic");

    const int n = static_cast<int>(g.rows());
    if (n % 2 == 0 && are_isomorphic(g, build_fundamental(n).grid).equal)
        return Family::Fundamental;

    const SymmetryProfile p = symmetry_profile(g);
    if (p.transpose && p.anti_transpose)
        return Family::FirstOrderDegenerate;
    return Family::SecondOrderDegenerate;
}

} // namespace harmonics
