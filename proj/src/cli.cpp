#include "harmonics/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "harmonics/enumeration.hpp"
#include "harmonics/harmonic.hpp"
#include "harmonics/io.hpp"
#include "harmonics/isomorphism.hpp"
#include "harmonics/permutators.hpp"
#include "harmonics/reduction.hpp"
#include "harmonics/sudoku.hpp"

namespace harmonics {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

nlohmann::json rows_json(const GridView& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < g.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < g.cols(); ++j)
            row.push_back(g(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

nlohmann::json symmetry_json(const SymmetryProfile& p) {
    return {{"transpose", p.transpose},
            {"anti_transpose", p.anti_transpose},
            {"horizontal_reversal", p.horizontal_reversal},
            {"vertical_reversal", p.vertical_reversal}};
}

void print_symmetry_text(std::ostream& out, const SymmetryProfile& p) {
    out << "transpose symmetry: " << yes_no(p.transpose) << '\n'
        << "anti-transpose symmetry: " << yes_no(p.anti_transpose) << '\n'
        << "horizontal reversal symmetry: " << yes_no(p.horizontal_reversal) << '\n'
        << "vertical reversal symmetry: " << yes_no(p.vertical_reversal) << '\n';
}

int cmd_generate(int n, const std::string& format, std::ostream& out) {
    const HarmonicMatrix m = build_fundamental(n);
    if (format == "json")
        emit_json(out, grid_to_json(m.grid, m.family));
    else
        out << format_grid_text(m.grid);
    return kExitOk;
}

int cmd_degenerate(int n, const std::string& format, std::ostream& out) {
    if (n != 6)
        throw DomainError("degenerate: only order 6 has a published alternate generator");
    const Grid g = standardize(build_by_powers(alternate_permutator_6()));
    if (format == "json")
        emit_json(out, grid_to_json(g, classify_family(g)));
    else
        out << format_grid_text(g);
    return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& format, std::ostream& out) {
    const Grid g = load_grid(path);
    const HarmonicReport report = is_harmonic(g);
    const SymmetryProfile profile = symmetry_profile(g);
    const bool gaussian = gaussian_check(g);
    std::optional<Family> family;
    if (report.harmonic)
        family = classify_family(g);

    if (format == "json") {
        nlohmann::json j;
        j["n"] = static_cast<int>(g.rows());
        j["harmonic"] = report.harmonic;
        j["row_violations"] = nlohmann::json::array();
        for (const RowViolation& v : report.row_violations)
            j["row_violations"].push_back({{"row", v.row}, {"symbol", v.symbol}, {"count", v.count}});
        j["pair_violations"] = nlohmann::json::array();
        for (const PairViolation& v : report.pair_violations)
            j["pair_violations"].push_back({{"from", v.from}, {"to", v.to}, {"count", v.count}});
        j["symmetry"] = symmetry_json(profile);
        j["gaussian"] = gaussian;
        j["family"] = family ? nlohmann::json(to_string(*family)) : nlohmann::json(nullptr);
        emit_json(out, j);
    } else {
        out << "order: " << g.rows() << '\n';
        out << "harmonic: " << yes_no(report.harmonic) << '\n';
        for (const RowViolation& v : report.row_violations)
            out << "row " << v.row << ": symbol " << v.symbol << " occurs " << v.count
                << " times\n";
        for (const PairViolation& v : report.pair_violations)
            out << "pair (" << v.from << "," << v.to << "): occurs " << v.count << " times\n";
        print_symmetry_text(out, profile);
        out << "gaussian complement: " << yes_no(gaussian) << '\n';
        if (family)
            out << "family: " << to_string(*family) << '\n';
    }
    return report.harmonic ? kExitOk : kExitSemantic;
}

int cmd_transitions(const std::string& path, const std::string& axis_name,
                    const std::string& format, std::ostream& out) {
    const Grid g = load_grid(path);
    const Axis axis = axis_name == "columns" ? Axis::Columns : Axis::Rows;
    const TransitionSet t = transitions(g, axis);

    if (format == "json") {
        nlohmann::json pairs = nlohmann::json::array();
        for (int a = 0; a < t.n; ++a)
            for (int b = 0; b < t.n; ++b)
                if (t.counts(a, b) > 0)
                    pairs.push_back({{"from", a + 1}, {"to", b + 1}, {"count", t.counts(a, b)}});
        emit_json(out, {{"n", t.n},
                        {"axis", axis_name},
                        {"pairs", pairs},
                        {"distinct_pairs", t.distinct_pairs()},
                        {"total", t.total_pairs()},
                        {"complete_single_cover", t.covers_all_pairs_once()}});
    } else {
        out << "order: " << t.n << '\n' << "axis: " << axis_name << '\n';
        for (int a = 0; a < t.n; ++a)
            for (int b = 0; b < t.n; ++b)
                if (t.counts(a, b) > 0)
                    out << a + 1 << " -> " << b + 1 << ": " << t.counts(a, b) << '\n';
        out << "distinct pairs: " << t.distinct_pairs() << '\n';
        out << "total adjacencies: " << t.total_pairs() << '\n';
        out << "complete single cover: " << yes_no(t.covers_all_pairs_once()) << '\n';
    }
    return kExitOk;
}

int cmd_symmetry(const std::string& path, const std::string& format, std::ostream& out) {
    const Grid g = load_grid(path);
    const SymmetryProfile profile = symmetry_profile(g);
    const bool gaussian = gaussian_check(g);
    if (format == "json") {
        nlohmann::json j = symmetry_json(profile);
        j["n"] = static_cast<int>(g.rows());
        j["gaussian"] = gaussian;
        emit_json(out, j);
    } else {
        out << "order: " << g.rows() << '\n';
        print_symmetry_text(out, profile);
        out << "gaussian complement: " << yes_no(gaussian) << '\n';
    }
    return kExitOk;
}

int cmd_canon(const std::string& path, const std::string& format, std::ostream& out) {
    const Grid canon = canonical_form(load_grid(path));
    if (format == "json")
        emit_json(out, grid_to_json(canon));
    else
        out << format_grid_text(canon);
    return kExitOk;
}

int cmd_iso(const std::string& path_a, const std::string& path_b, const std::string& format,
            std::ostream& out) {
    const IsoResult result = are_isomorphic(load_grid(path_a), load_grid(path_b));
    if (format == "json") {
        nlohmann::json j;
        j["isomorphic"] = result.equal;
        if (result.witness) {
            j["symbol_map"] = result.witness->symbol_map.to_one_based();
            j["row_map"] = result.witness->row_map.to_one_based();
        }
        emit_json(out, j);
    } else {
        out << (result.equal ? "isomorphic" : "not-isomorphic") << '\n';
        if (result.witness) {
            out << "symbol-map: " << format_permutation_line(result.witness->symbol_map) << '\n';
            out << "row-map: " << format_permutation_line(result.witness->row_map) << '\n';
        }
    }
    return kExitOk;
}

int cmd_enumerate(int n, bool classes, bool allow_large, const std::string& format,
                  std::ostream& out) {
    if (classes) {
        const ClassCatalog catalog = classify_all(n, allow_large);
        if (format == "json") {
            nlohmann::json cl = nlohmann::json::array();
            for (const ClassEntry& e : catalog.classes)
                cl.push_back({{"canonical", rows_json(e.canonical)},
                              {"members", e.members},
                              {"symmetric_members", e.symmetric_members}});
            emit_json(out, {{"n", catalog.n},
                            {"class_count", catalog.classes.size()},
                            {"classes", cl},
                            {"total", catalog.total}});
        } else {
            out << "order: " << catalog.n << '\n';
            out << "total: " << catalog.total << '\n';
            out << "classes: " << catalog.classes.size() << '\n';
            for (std::size_t i = 0; i < catalog.classes.size(); ++i) {
                const ClassEntry& e = catalog.classes[i];
                out << '\n'
                    << "class " << i + 1 << ": members " << e.members << ", doubly-symmetric "
                    << e.symmetric_members << '\n';
                out << format_grid_text(e.canonical);
            }
        }
        return kExitOk;
    }

    if (format == "json") {
        nlohmann::json matrices = nlohmann::json::array();
        std::uint64_t total = 0;
        enumerate_harmonic(
            n, true,
            [&](const Grid& g) {
                ++total;
                matrices.push_back(rows_json(g));
            },
            allow_large);
        emit_json(out, {{"n", n}, {"total", total}, {"matrices", matrices}});
    } else {
        bool first = true;
        std::uint64_t total = 0;
        enumerate_harmonic(
            n, true,
            [&](const Grid& g) {
                ++total;
                if (!first)
                    out << '\n';
                first = false;
                out << format_grid_text(g);
            },
            allow_large);
        out << '\n' << "total: " << total << '\n';
    }
    return kExitOk;
}

int cmd_reduce(const std::string& path, bool chain, const std::string& format,
               std::ostream& out) {
    const Grid g = load_grid(path);
    if (chain) {
        const std::vector<Grid> grids = nesting_chain(g);
        if (format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const Grid& m : grids)
                arr.push_back(grid_to_json(m));
            emit_json(out, {{"n", static_cast<int>(g.rows())}, {"chain", arr}});
        } else {
            for (std::size_t i = 0; i < grids.size(); ++i) {
                if (i)
                    out << '\n';
                out << format_grid_text(grids[i]);
            }
        }
    } else {
        const Grid reduced = reduce_band(g);
        if (format == "json")
            emit_json(out, grid_to_json(reduced));
        else
            out << format_grid_text(reduced);
    }
    return kExitOk;
}

int cmd_sudoku(int k, const std::string& relabel_path, const std::string& format,
               std::ostream& out) {
    SudokuBoard board = build_sudoku(k);
    if (!relabel_path.empty())
        board = relabel_board(board, load_permutation(relabel_path));

    if (format == "json") {
        emit_json(out, {{"k", board.k},
                        {"n", board.side()},
                        {"rows", rows_json(board.cells)},
                        {"valid", validate_sudoku(board.cells, board.k).valid}});
    } else {
        for (int i = 0; i < board.side(); ++i) {
            for (int j = 0; j < board.side(); ++j)
                out << (j ? " " : "") << board.cells(i, j);
            out << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constructions, verification, classification and reductions "
                 "for harmonic matrices"};
    app.require_subcommand(1);

    // Shared option storage; each subcommand binds the flags it supports.
    std::string format = "text";
    std::string axis = "rows";
    std::string file_a;
    std::string file_b;
    std::string relabel_path;
    int n = 0;
    int k = 3;
    bool chain = false;
    bool classes = false;
    bool allow_large = false;

    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* generate = app.add_subcommand("generate", "Build the standard harmonic matrix of even order n");
    generate->add_option("--n", n, "Order (even, >= 2)")->required();
    add_format(generate);

    CLI::App* verify = app.add_subcommand("verify", "Check a grid for the harmonic property and report its profile");
    verify->add_option("file", file_a, "Grid file (text or JSON)")->required();
    add_format(verify);

    CLI::App* transitions_cmd = app.add_subcommand("transitions", "List adjacent-pair counts of a grid");
    transitions_cmd->add_option("file", file_a, "Grid file (text or JSON)")->required();
    transitions_cmd->add_option("--axis", axis, "Read pairs along rows or columns")
        ->check(CLI::IsMember({"rows", "columns"}))
        ->capture_default_str();
    add_format(transitions_cmd);

    CLI::App* symmetry = app.add_subcommand("symmetry", "Report a grid's symmetry profile");
    symmetry->add_option("file", file_a, "Grid file (text or JSON)")->required();
    add_format(symmetry);

    CLI::App* canon = app.add_subcommand("canon", "Print the canonical form of a harmonic grid");
    canon->add_option("file", file_a, "Grid file (text or JSON)")->required();
    add_format(canon);

    CLI::App* iso = app.add_subcommand("iso", "Decide whether two harmonic grids are equivalent");
    iso->add_option("first", file_a, "Grid file")->required();
    iso->add_option("second", file_b, "Grid file")->required();
    add_format(iso);

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustively enumerate harmonic grids of even order n");
    enumerate_cmd->add_option("--n", n, "Order (even; 2, 4 or 6 without --allow-large)")->required();
    enumerate_cmd->add_flag("--classes", classes, "Group results into equivalence classes");
    enumerate_cmd->add_flag("--allow-large", allow_large, "Permit orders 8 and 10 (very long runs)");
    add_format(enumerate_cmd);

    CLI::App* reduce = app.add_subcommand("reduce", "Collapse a harmonic grid by deleting its central band");
    reduce->add_option("file", file_a, "Grid file (text or JSON)")->required();
    reduce->add_flag("--chain", chain, "Reduce repeatedly down to order 2");
    add_format(reduce);

    CLI::App* sudoku = app.add_subcommand("sudoku", "Build a solved sudoku board deterministically");
    sudoku->add_option("--k", k, "Box edge (odd, >= 3)")->capture_default_str();
    sudoku->add_option("--relabel", relabel_path, "Apply a symbol permutation from a file");
    add_format(sudoku);

    CLI::App* degenerate = app.add_subcommand("degenerate", "Build the published non-fundamental harmonic matrix");
    degenerate->add_option("--n", n, "Order (only 6 is available)");
    add_format(degenerate);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (generate->parsed())
            return cmd_generate(n, format, out);
        if (verify->parsed())
            return cmd_verify(file_a, format, out);
        if (transitions_cmd->parsed())
            return cmd_transitions(file_a, axis, format, out);
        if (symmetry->parsed())
            return cmd_symmetry(file_a, format, out);
        if (canon->parsed())
            return cmd_canon(file_a, format, out);
        if (iso->parsed())
            return cmd_iso(file_a, file_b, format, out);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(n, classes, allow_large, format, out);
        if (reduce->parsed())
            return cmd_reduce(file_a, chain, format, out);
        if (sudoku->parsed())
            return cmd_sudoku(k, relabel_path, format, out);
        if (degenerate->parsed())
            return cmd_degenerate(degenerate->count("--n") ? n : 6, format, out);
        err << "error: no subcommand given\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSemantic;
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSemantic;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitSemantic;
    }
}

} // namespace harmonics
