#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "erlab/graph.hpp"
#include "erlab/hypergraph.hpp"
#include "erlab/partition.hpp"

namespace erlab {

// Text formats, LF line endings throughout:
//   graph       "graph <n> <m>" then m lines "u v"
//   hypergraph  "hypergraph <n> <R> <m>" then m lines of R vertex ids
//   coloring    one "u v c" line per edge, sorted by edge
//   partition   "partition <n_ground> <s>" then one line per clique:
//               "<v> <size> <member> <part> ..."
//   vertex set  "vertices <k>" then one id per line
// Lines starting with '#' and blank lines are ignored on input.

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

void write_hypergraph(std::ostream& out, const LinearHypergraph& h);
LinearHypergraph read_hypergraph(std::istream& in);

void write_coloring(std::ostream& out, const EdgeColoring& c);
EdgeColoring read_coloring(std::istream& in);

void write_partition(std::ostream& out, const SPartition& p);
SPartition read_partition(std::istream& in);

void write_vertex_set(std::ostream& out, const VertexSet& vs);
VertexSet read_vertex_set(std::istream& in);

Graph load_graph(const std::filesystem::path& path);
LinearHypergraph load_hypergraph(const std::filesystem::path& path);
EdgeColoring load_coloring(const std::filesystem::path& path);
SPartition load_partition(const std::filesystem::path& path);

/// Writes `text` to `path`, creating parent directories.
void save_text(const std::filesystem::path& path, const std::string& text);
std::string load_text(const std::filesystem::path& path);

}  // namespace erlab
