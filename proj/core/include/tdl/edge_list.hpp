#pragma once

#include "tdl/graph.hpp"

#include <iosfwd>
#include <string>

namespace tdl {

/// Reads the edge-list format: header `directed <n>` or `undirected <n>`,
/// then one `<u> <v>` per non-empty line; `#` starts a comment line.
/// Throws ParseError (with the 1-based line number) on malformed input.
AnyGraph read_edge_list(std::istream& in);
AnyGraph read_edge_list_file(const std::string& path);

/// Canonical form: u < v per line for undirected graphs, lines sorted as
/// integer pairs. read(write(g)) == g.
void write_edge_list(const UndirectedGraph& g, std::ostream& out);
void write_edge_list(const KOutDigraph& g, std::ostream& out);
void write_edge_list(const AnyGraph& g, std::ostream& out);
std::string edge_list_string(const AnyGraph& g);

}  // namespace tdl
