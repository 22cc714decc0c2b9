#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "harmonics/harmonic.hpp"
#include "harmonics/permutation.hpp"

namespace harmonics {

// Text format for square grids: a line holding n, then n lines of n
// space-separated symbols in 1..n.  Parse errors carry the line number.
Grid parse_grid_text(std::istream& in);
Grid parse_grid_string(const std::string& text);

// Reads a grid from a file; content starting with '{' is treated as JSON.
Grid load_grid(const std::string& path);

std::string format_grid_text(const GridView& g);

// JSON object {"n": ..., "rows": [[...]], "family": string or null}.
nlohmann::json grid_to_json(const GridView& g, std::optional<Family> family = std::nullopt);
Grid grid_from_json(const nlohmann::json& j);

// Permutations travel as a single line of 1-based images.
Permutation parse_permutation_line(const std::string& line);
Permutation load_permutation(const std::string& path);
std::string format_permutation_line(const Permutation& p);

// n lines of space-separated 0/1: the permutation matrix, for debugging.
std::string format_permutation_matrix(const Permutation& p);

} // namespace harmonics
