#include "tdl/census_naive.hpp"

#include <algorithm>

namespace tdl {

namespace {

// Flat n x n presence matrix, 1-based labels.
struct Matrix {
  int n = 0;
  std::vector<char> cells;

  explicit Matrix(int n_) : n(n_), cells(static_cast<std::size_t>(n_) * n_, 0) {}
  void put(int u, int v) { cells[static_cast<std::size_t>(u - 1) * n + (v - 1)] = 1; }
  bool at(int u, int v) const { return cells[static_cast<std::size_t>(u - 1) * n + (v - 1)] != 0; }
};

}  // namespace

CensusReport count_undirected_naive(const UndirectedGraph& g) {
  const int n = g.num_nodes();
  Matrix adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj.put(u, v);
    adj.put(v, u);
  }

  CensusReport r;
  r.directed = false;
  r.n = n;
  r.link_count = g.num_edges();
  r.link_endpoints = g.edges();
  r.occupancy.assign(g.edges().size(), LinkOccupancy{});
  r.anchor_total.assign(static_cast<std::size_t>(n), 0);

  auto edge_index = [&](int u, int v) {
    const auto& edges = g.edges();
    return static_cast<std::size_t>(
        std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v)) - edges.begin());
  };

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int m = j + 1; m <= n; ++m) {
        if (!(adj.at(i, j) && adj.at(i, m) && adj.at(j, m))) continue;
        ++r.t;
        ++r.anchor_total[static_cast<std::size_t>(i - 1)];
        ++r.occupancy[edge_index(i, j)].undirected;
        ++r.occupancy[edge_index(i, m)].undirected;
        ++r.occupancy[edge_index(j, m)].undirected;
        TriangleRecord rec;
        rec.corners = {i, j, m};
        rec.kind = TriangleKind::undirected;
        rec.anchor = i;
        r.records.push_back(rec);
      }

  for (const auto& occ : r.occupancy)
    if (occ.total() > 0) ++r.ell_triang;
  return r;
}

CensusReport count_kout_naive(const KOutDigraph& g) {
  const int n = g.num_nodes();
  Matrix adj(n);
  for (int u = 1; u <= n; ++u)
    for (int v : g.out(u)) adj.put(u, v);

  CensusReport r;
  r.directed = true;
  r.n = n;
  r.link_count = g.num_links();
  r.link_endpoints = g.links();
  r.occupancy.assign(g.links().size(), LinkOccupancy{});
  r.anchor_round.assign(static_cast<std::size_t>(n), 0);
  r.anchor_frustrated.assign(static_cast<std::size_t>(n), 0);
  r.anchor_total.assign(static_cast<std::size_t>(n), 0);
  r.in_degrees = g.in_degrees();

  int uniform = n > 0 ? g.out_degree(1) : 0;
  for (int i = 2; i <= n; ++i)
    if (g.out_degree(i) != uniform) uniform = 0;
  r.k_hint = uniform;

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int m = j + 1; m <= n; ++m)
        for (int ori = 0; ori < 8; ++ori) {
          // Chosen link per pair, in the fixed pair order.
          const int lows[3] = {i, i, j};
          const int highs[3] = {j, m, m};
          EdgeRef chosen[3];
          bool present = true;
          for (int p = 0; p < 3; ++p) {
            const int from = (ori >> p) & 1 ? highs[p] : lows[p];
            const int to = (ori >> p) & 1 ? lows[p] : highs[p];
            chosen[p] = EdgeRef{true, from, to};
            present = present && adj.at(from, to);
          }
          if (!present) continue;

          // A corner that originates two chosen links anchors a
          // frustrated triangle; with no such corner the links chain
          // into a cycle and the smallest corner anchors a round one.
          const int corners[3] = {i, j, m};
          int twice = 0;
          for (int c : corners) {
            int origin_count = 0;
            for (const auto& l : chosen) origin_count += (l.u == c) ? 1 : 0;
            if (origin_count == 2) twice = c;
          }

          TriangleRecord rec;
          rec.corners = {i, j, m};
          rec.orientation_index = ori;

          auto leaving = [&](int c) {
            for (const auto& l : chosen)
              if (l.u == c) return l;
            return EdgeRef{};
          };

          if (twice == 0) {
            rec.kind = TriangleKind::round;
            rec.anchor = i;
            const EdgeRef a = leaving(i);
            const EdgeRef b = leaving(a.v);
            const EdgeRef c = leaving(b.v);
            rec.roles = {a, b, c};
          } else {
            rec.kind = TriangleKind::frustrated;
            rec.anchor = twice;
            // a is the anchored link whose end originates b; the other
            // anchored link is c.
            EdgeRef a{}, b{}, c{};
            for (const auto& l : chosen)
              if (l.u != twice) b = l;
            for (const auto& l : chosen) {
              if (l.u == twice && l.v == b.u) a = l;
              if (l.u == twice && l.v == b.v) c = l;
            }
            rec.roles = {a, b, c};
          }

          ++r.t;
          if (rec.kind == TriangleKind::round) {
            ++r.round_count;
            ++r.anchor_round[static_cast<std::size_t>(rec.anchor - 1)];
          } else {
            ++r.frustrated_count;
            ++r.anchor_frustrated[static_cast<std::size_t>(rec.anchor - 1)];
          }
          ++r.anchor_total[static_cast<std::size_t>(rec.anchor - 1)];
          for (int role = 0; role < 3; ++role) {
            const EdgeRef& l = rec.roles[static_cast<std::size_t>(role)];
            auto& occ = r.occupancy[static_cast<std::size_t>(g.link_index(l.u, l.v))];
            if (rec.kind == TriangleKind::round)
              ++occ.round[static_cast<std::size_t>(role)];
            else
              ++occ.frustrated[static_cast<std::size_t>(role)];
          }
          r.records.push_back(rec);
        }

  for (const auto& occ : r.occupancy)
    if (occ.total() > 0) ++r.ell_triang;
  return r;
}

CensusReport census_of_naive(const AnyGraph& g) {
  if (std::holds_alternative<UndirectedGraph>(g))
    return count_undirected_naive(std::get<UndirectedGraph>(g));
  return count_kout_naive(std::get<KOutDigraph>(g));
}

}  // namespace tdl
