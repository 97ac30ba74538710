#include "tdl/edge_list.hpp"

#include "tdl/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace tdl {

namespace {

bool parse_int(std::string_view token, int& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

AnyGraph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool directed = false;
  int n = -1;
  // header
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens.size() != 2 || (tokens[0] != "directed" && tokens[0] != "undirected") ||
        !parse_int(tokens[1], n) || n < 0)
      throw ParseError(line_no, "expected header 'directed <n>' or 'undirected <n>'");
    directed = tokens[0] == "directed";
    break;
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");

  std::vector<std::vector<int>> out_lists(n);
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    int u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
      throw ParseError(line_no, "malformed line, expected '<u> <v>'");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line_no, "label out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(line_no, "self-loop " + std::to_string(u) + " " + std::to_string(v));
    const auto key = directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw ParseError(line_no, std::string(directed ? "duplicate directed link " : "duplicate edge ") +
                                    std::to_string(u) + " " + std::to_string(v));
    if (directed)
      out_lists[u - 1].push_back(v);
    else
      edges.push_back(key);
  }
  if (directed) return KOutDigraph(n, std::move(out_lists));
  return UndirectedGraph(n, std::move(edges));
}

AnyGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(const UndirectedGraph& g, std::ostream& out) {
  out << "undirected " << g.num_nodes() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list(const KOutDigraph& g, std::ostream& out) {
  out << "directed " << g.num_nodes() << "\n";
  for (const auto& [u, v] : g.links()) out << u << " " << v << "\n";
}

void write_edge_list(const AnyGraph& g, std::ostream& out) {
  std::visit([&](const auto& inner) { write_edge_list(inner, out); }, g);
}

std::string edge_list_string(const AnyGraph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

}  // namespace tdl
