#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "ctqw/amplitudes.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/measure.hpp"

namespace ctqw {

/// {"n": int, "edges": [[i, j], ...], "origin": int}. Throws ParseError.
Graph parse_graph_json(std::string_view text);
std::string graph_to_json(const Graph& g);

/// Triplet lines "i,j,1" (one per direction or one per edge; duplicates
/// collapse). Blank lines and lines starting with '#' are skipped.
Graph parse_adjacency_csv(std::string_view text, Vertex origin = 0);
std::string adjacency_csv(const Graph& g);

/// JSON unless the extension is .csv.
Graph load_graph_file(const std::filesystem::path& path, Vertex csv_origin = 0);

/// 17 significant digits, scientific notation.
std::string format_double(double v);

/// Writes via a temporary sibling file and rename.
void write_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_text_file(const std::filesystem::path& path);

/// Columns t,k,re,im,prob; rows ordered by time then k.
std::string amplitudes_csv(const AmplitudeSeries& series);

/// node,weight for discrete measures; x,density on `grid` otherwise
/// (atoms of a continuous measure are appended as node,weight rows after a blank line).
std::string measure_csv(const SpectralMeasure& mu, std::span<const double> grid = {});

}  // namespace ctqw
