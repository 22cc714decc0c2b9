#include "harmonics/io.hpp"

#include <fstream>
#include <sstream>

namespace harmonics {

namespace {

// Splits a line into ints, rejecting anything that is not whitespace-separated
// integers.  line_no is 1-based and only used for error messages.
std::vector<int> parse_int_line(const std::string& line, int line_no) {
    std::istringstream ss(line);
    std::vector<int> values;
    std::string token;
    while (ss >> token) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": '" + token +
                             "' is not an integer");
        }
        if (used != token.size())
            throw ParseError("line " + std::to_string(line_no) + ": '" + token +
                             "' is not an integer");
        values.push_back(v);
    }
    return values;
}

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return true;
    }
    return false;
}

void require_symbols(const Grid& g, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g(i, j) < 1 || g(i, j) > n)
                throw ParseError("symbol " + std::to_string(g(i, j)) + " at row " +
                                 std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                                 " is outside 1.." + std::to_string(n));
}

} // namespace

Grid parse_grid_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no))
        throw ParseError("empty input; expected a grid");

    const std::vector<int> header = parse_int_line(line, line_no);
    if (header.size() != 1 || header[0] < 1)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected a single positive order");
    const int n = header[0];

    Grid g(n, n);
    for (int i = 0; i < n; ++i) {
        if (!next_content_line(in, line, line_no))
            throw ParseError("unexpected end of input: got " + std::to_string(i) + " of " +
                             std::to_string(n) + " rows");
        const std::vector<int> row = parse_int_line(line, line_no);
        if (static_cast<int>(row.size()) != n)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n) + " entries, got " + std::to_string(row.size()));
        for (int j = 0; j < n; ++j)
            g(i, j) = row[static_cast<std::size_t>(j)];
    }
    require_symbols(g, n);
    return g;
}

Grid parse_grid_string(const std::string& text) {
    std::istringstream in(text);
    return parse_grid_text(in);
}

Grid load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("'") + path + "': " + e.what());
        }
        return grid_from_json(j);
    }
    std::istringstream ss(text);
    return parse_grid_text(ss);
}

std::string format_grid_text(const GridView& g) {
    std::ostringstream out;
    out << g.rows() << '\n';
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < g.cols(); ++j)
            out << (j ? " " : "") << g(i, j);
        out << '\n';
    }
    return out.str();
}

nlohmann::json grid_to_json(const GridView& g, std::optional<Family> family) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < g.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < g.cols(); ++j)
            row.push_back(g(i, j));
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["n"] = static_cast<int>(g.rows());
    j["rows"] = std::move(rows);
    j["family"] = family ? nlohmann::json(to_string(*family)) : nlohmann::json(nullptr);
    return j;
}

Grid grid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw ParseError("grid json must be an object with 'n' and 'rows'");
    if (!j["n"].is_number_integer())
        throw ParseError("grid json: 'n' must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1)
        throw ParseError("grid json: 'n' must be positive");
    const nlohmann::json& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("grid json: 'rows' must be an array of " + std::to_string(n) + " rows");
    Grid g(n, n);
    for (int i = 0; i < n; ++i) {
        const nlohmann::json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("grid json: row " + std::to_string(i + 1) + " must hold " +
                             std::to_string(n) + " entries");
        for (int j2 = 0; j2 < n; ++j2) {
            const nlohmann::json& cell = row[static_cast<std::size_t>(j2)];
            if (!cell.is_number_integer())
                throw ParseError("grid json: row " + std::to_string(i + 1) +
                                 " holds a non-integer entry");
            g(i, j2) = cell.get<int>();
        }
    }
    require_symbols(g, n);
    return g;
}

Permutation parse_permutation_line(const std::string& line) {
    const std::vector<int> images = parse_int_line(line, 1);
    if (images.empty())
        throw ParseError("empty permutation line");
    try {
        return Permutation::from_one_based(images);
    } catch (const DomainError& e) {
        throw ParseError(std::string("not a permutation: ") + e.what());
    }
}

Permutation load_permutation(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no))
        throw ParseError("'" + path + "': empty input; expected a permutation line");
    return parse_permutation_line(line);
}

std::string format_permutation_line(const Permutation& p) {
    std::ostringstream out;
    const std::vector<int> images = p.to_one_based();
    for (std::size_t i = 0; i < images.size(); ++i)
        out << (i ? " " : "") << images[i];
    return out.str();
}

std::string format_permutation_matrix(const Permutation& p) {
    const Eigen::MatrixXi m = p.to_matrix();
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m(i, j);
        out << '\n';
    }
    return out.str();
}

} // namespace harmonics
