#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <entropygraph/graph.hpp>
#include <entropygraph/rounding.hpp>

namespace entropygraph::io {

/// Degrees one per line or on a single comma-separated line; '#' lines and blanks skipped.
std::vector<int> parse_degrees(std::string_view text);
std::vector<int> read_degrees(const std::filesystem::path& path);

struct EdgeListFile {
    SimpleGraph graph;
    std::optional<std::pair<int, int>> bipartite; // (n1, n2) from "#bipartite n1 n2"
};

/// "u v" per line, 1-indexed.  The vertex count comes from a "#bipartite n1 n2" or
/// "#vertices n" header, else from the largest label.
EdgeListFile parse_edge_list(std::string_view text);
EdgeListFile read_edge_list(const std::filesystem::path& path);
std::string format_edge_list(const SimpleGraph& g, std::optional<std::pair<int, int>> bipartite = std::nullopt);

/// "#bipartite n1 n2" then "i j w" lines; labels are global and 1-indexed
/// (part A is 1..n1, part B is n1+1..n1+n2).
WeightedBipartiteGraph parse_weighted_bipartite(std::string_view text);
WeightedBipartiteGraph read_weighted_bipartite(const std::filesystem::path& path);

/// Shortest text with 17 significant digits, '.' decimal point, no locale.
std::string format_double(double x);

std::string read_file(const std::filesystem::path& path);
/// Writes bytes verbatim, creating parent directories.
void write_file(const std::filesystem::path& path, std::string_view bytes);

std::string sha256_hex(std::string_view bytes);

} // namespace entropygraph::io
