#include "tdl/census.hpp"

#include "tdl/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace tdl {

std::string_view to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::round: return "round";
    case TriangleKind::frustrated: return "frustrated";
    case TriangleKind::undirected: return "undirected";
  }
  return "?";
}

TriangleRecord classify_orientation(const std::array<int, 3>& corners, int orientation_index) {
  TriangleRecord rec;
  rec.corners = corners;
  rec.orientation_index = orientation_index;

  // One chosen link per pair; bit p set means the high-to-low link.
  const std::array<std::array<int, 2>, 3> pair_of = {{{corners[0], corners[1]},
                                                      {corners[0], corners[2]},
                                                      {corners[1], corners[2]}}};
  std::array<EdgeRef, 3> links;
  for (int p = 0; p < 3; ++p) {
    const bool reversed = (orientation_index >> p) & 1;
    links[p] = EdgeRef{true, pair_of[p][reversed ? 1 : 0], pair_of[p][reversed ? 0 : 1]};
  }

  auto out_degree = [&links](int c) {
    int d = 0;
    for (const auto& l : links) d += (l.u == c) ? 1 : 0;
    return d;
  };
  auto link_from = [&links](int u) {
    for (const auto& l : links)
      if (l.u == u) return l;
    return EdgeRef{};
  };
  auto link_between = [&links](int u, int v) {
    for (const auto& l : links)
      if (l.u == u && l.v == v) return l;
    return EdgeRef{};
  };

  // Each corner meets two of the three pairs, so its out-degree among the
  // chosen links is 0, 1 or 2, and the degrees sum to 3. Either every
  // corner has one outgoing link (a directed cycle) or exactly one corner
  // has two.
  int doubly = 0;
  for (int c : corners)
    if (out_degree(c) == 2) doubly = c;

  if (doubly == 0) {
    rec.kind = TriangleKind::round;
    rec.anchor = corners[0];
    const EdgeRef a = link_from(rec.anchor);
    const EdgeRef b = link_from(a.v);
    rec.roles = {a, b, link_from(b.v)};
  } else {
    rec.kind = TriangleKind::frustrated;
    rec.anchor = doubly;
    int target = 0;
    for (int c : corners)
      if (out_degree(c) == 0) target = c;
    int middle = 0;
    for (int c : corners)
      if (c != doubly && c != target) middle = c;
    rec.roles = {link_between(doubly, middle), link_between(middle, target),
                 link_between(doubly, target)};
  }
  return rec;
}

namespace {

// Visits common neighbors m > j of two sorted lists in ascending order.
template <typename Fn>
void for_each_common_above(const std::vector<int>& list_i, const std::vector<int>& list_j, int j,
                           Fn&& fn) {
  auto it1 = std::lower_bound(list_i.begin(), list_i.end(), j + 1);
  auto it2 = std::lower_bound(list_j.begin(), list_j.end(), j + 1);
  while (it1 != list_i.end() && it2 != list_j.end()) {
    if (*it1 < *it2) {
      ++it1;
    } else if (*it2 < *it1) {
      ++it2;
    } else {
      fn(*it1);
      ++it1;
      ++it2;
    }
  }
}

template <typename Fn>
void for_each_common_above_bits(const BitRows& bits, int i, int j, Fn&& fn) {
  const std::uint64_t* ri = bits.row(i - 1);
  const std::uint64_t* rj = bits.row(j - 1);
  const int words = bits.words_per_row();
  const int start = j / 64;  // smallest 0-based column for labels > j
  for (int w = start; w < words; ++w) {
    std::uint64_t x = ri[w] & rj[w];
    if (w == start) x &= ~0ull << (j % 64);
    while (x) {
      fn(w * 64 + std::countr_zero(x) + 1);
      x &= x - 1;
    }
  }
}

int uniform_out_degree(const KOutDigraph& g) {
  if (g.num_nodes() == 0) return 0;
  const int d = g.out_degree(1);
  for (int i = 2; i <= g.num_nodes(); ++i)
    if (g.out_degree(i) != d) return 0;
  return d;
}

}  // namespace

CensusReport count_undirected(const UndirectedGraph& g, CensusOptions options) {
  CensusReport r;
  r.directed = false;
  r.n = g.num_nodes();
  r.link_count = g.num_edges();
  r.records_kept = options.keep_records;
  r.link_endpoints = g.edges();
  r.occupancy.assign(g.edges().size(), LinkOccupancy{});
  r.anchor_total.assign(static_cast<std::size_t>(r.n), 0);

  const auto& edges = g.edges();
  auto edge_index = [&edges](int u, int v) {
    const auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    return static_cast<std::size_t>(it - edges.begin());
  };

  for (int i = 1; i <= r.n; ++i) {
    const auto& ni = g.neighbors(i);
    for (int j : ni) {
      if (j <= i) continue;
      auto visit = [&](int m) {
        ++r.t;
        ++r.anchor_total[static_cast<std::size_t>(i - 1)];
        ++r.occupancy[edge_index(i, j)].undirected;
        ++r.occupancy[edge_index(i, m)].undirected;
        ++r.occupancy[edge_index(j, m)].undirected;
        if (options.keep_records) {
          TriangleRecord rec;
          rec.corners = {i, j, m};
          rec.kind = TriangleKind::undirected;
          rec.anchor = i;
          r.records.push_back(rec);
        }
      };
      if (!g.bits().empty())
        for_each_common_above_bits(g.bits(), i, j, visit);
      else
        for_each_common_above(ni, g.neighbors(j), j, visit);
    }
  }

  for (const auto& occ : r.occupancy)
    if (occ.total() > 0) ++r.ell_triang;
  return r;
}

CensusReport count_kout(const KOutDigraph& g, CensusOptions options) {
  CensusReport r;
  r.directed = true;
  r.n = g.num_nodes();
  r.k_hint = uniform_out_degree(g);
  r.link_count = g.num_links();
  r.records_kept = options.keep_records;
  r.link_endpoints = g.links();
  r.occupancy.assign(g.links().size(), LinkOccupancy{});
  r.anchor_round.assign(static_cast<std::size_t>(r.n), 0);
  r.anchor_frustrated.assign(static_cast<std::size_t>(r.n), 0);
  r.anchor_total.assign(static_cast<std::size_t>(r.n), 0);
  r.in_degrees = g.in_degrees();

  auto expand = [&](int i, int j, int m) {
    const bool fwd[3] = {g.has_link(i, j), g.has_link(i, m), g.has_link(j, m)};
    const bool bwd[3] = {g.has_link(j, i), g.has_link(m, i), g.has_link(m, j)};
    for (int ori = 0; ori < 8; ++ori) {
      bool present = true;
      for (int p = 0; p < 3 && present; ++p) present = ((ori >> p) & 1) ? bwd[p] : fwd[p];
      if (!present) continue;

      const TriangleRecord rec = classify_orientation({i, j, m}, ori);
      ++r.t;
      const bool is_round = rec.kind == TriangleKind::round;
      if (is_round) {
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
        if (is_round)
          ++occ.round[static_cast<std::size_t>(role)];
        else
          ++occ.frustrated[static_cast<std::size_t>(role)];
      }
      if (options.keep_records) r.records.push_back(rec);
    }
  };

  for (int i = 1; i <= r.n; ++i) {
    const auto& si = g.support_neighbors(i);
    for (int j : si) {
      if (j <= i) continue;
      auto visit = [&](int m) { expand(i, j, m); };
      if (!g.support_bits().empty())
        for_each_common_above_bits(g.support_bits(), i, j, visit);
      else
        for_each_common_above(si, g.support_neighbors(j), j, visit);
    }
  }

  for (const auto& occ : r.occupancy)
    if (occ.total() > 0) ++r.ell_triang;
  return r;
}

CensusReport census_of(const AnyGraph& g, CensusOptions options) {
  if (std::holds_alternative<UndirectedGraph>(g))
    return count_undirected(std::get<UndirectedGraph>(g), options);
  return count_kout(std::get<KOutDigraph>(g), options);
}

namespace {

std::string link_label(bool directed, std::pair<int, int> e) {
  std::ostringstream os;
  os << e.first << (directed ? " -> " : " -- ") << e.second;
  return os.str();
}

std::string node_label(int i) { return "node " + std::to_string(i); }

void require(std::vector<LemmaViolation>& out, bool ok, const std::string& subject,
             const std::string& rule) {
  if (!ok) out.push_back({subject, rule});
}

}  // namespace

std::vector<LemmaViolation> occupancy_violations(const CensusReport& r, int k, Ensemble role) {
  std::vector<LemmaViolation> out;

  const bool wants_directed = role == Ensemble::k_out;
  if (r.directed != wants_directed) {
    out.push_back({"census", wants_directed ? "role expects a directed census"
                                            : "role expects an undirected census"});
    return out;
  }

  std::uint64_t anchor_sum = 0;
  for (auto v : r.anchor_total) anchor_sum += v;
  require(out, anchor_sum == r.t, "census",
          "anchor counts sum to " + std::to_string(anchor_sum) + ", census has t = " +
              std::to_string(r.t));

  std::uint64_t occupation = 0;
  for (const auto& occ : r.occupancy) occupation += occ.total();
  require(out, occupation == 3 * r.t, "census",
          "total occupation " + std::to_string(occupation) + " != 3t = " +
              std::to_string(3 * r.t));

  require(out, r.ell_triang <= static_cast<std::int64_t>(3 * r.t), "census",
          "links in triangles exceed 3t");

  if (role == Ensemble::k_out) {
    require(out, r.round_count + r.frustrated_count == r.t, "census",
            "round + frustrated != t");
    // Every triangle has an a link, and a link serves as a in at most
    // k round and k-1 frustrated triangles, so ell >= t / (2k - 1);
    // the coarser t / (2k) is the stated floor.
    if (k > 0)
      require(out, static_cast<std::uint64_t>(r.ell_triang) * 2 * static_cast<std::uint64_t>(k) >=
                       r.t,
              "census", "links in triangles fall below t / 2k");

    const auto cap_k = static_cast<std::uint32_t>(k);
    const auto cap_km1 = static_cast<std::uint32_t>(k > 0 ? k - 1 : 0);
    for (std::size_t e = 0; e < r.occupancy.size(); ++e) {
      const auto& occ = r.occupancy[e];
      const std::string subject = link_label(true, r.link_endpoints[e]);
      require(out, occ.round[0] <= cap_k, subject, "a-role round count exceeds k");
      require(out, occ.round[1] <= cap_k, subject, "b-role round count exceeds k");
      require(out, occ.round[2] <= cap_k, subject, "c-role round count exceeds k");
      require(out, occ.frustrated[0] <= cap_km1, subject,
              "a-role frustrated count exceeds k - 1");
      require(out, occ.frustrated[2] <= cap_km1, subject,
              "c-role frustrated count exceeds k - 1");
      // No cap applies to the b role of a frustrated triangle.
    }

    const auto cap_round = static_cast<std::uint32_t>(k) * static_cast<std::uint32_t>(k);
    const auto cap_frust =
        static_cast<std::uint32_t>(k) * static_cast<std::uint32_t>(k > 0 ? k - 1 : 0);
    for (int i = 1; i <= r.n; ++i) {
      require(out, r.anchor_round[static_cast<std::size_t>(i - 1)] <= cap_round, node_label(i),
              "anchored round triangles exceed k^2");
      require(out, r.anchor_frustrated[static_cast<std::size_t>(i - 1)] <= cap_frust,
              node_label(i), "anchored frustrated triangles exceed k(k-1)");
    }

    std::int64_t in_sum = 0;
    for (int v : r.in_degrees) in_sum += v;
    require(out, in_sum == r.link_count, "census", "in-degrees do not sum to the link count");
    require(out, r.link_count == static_cast<std::int64_t>(k) * r.n, "census",
            "link count != k * n");

    if (k > 0 && r.n > 0) {
      BigInt product = 1;
      for (int v : r.in_degrees) product *= (v + k);
      require(out, product <= pow(BigInt(2 * k), static_cast<unsigned>(r.n)), "census",
              "prod (v_i + k) exceeds (2k)^n");
    }
  } else if (role == Ensemble::k_regular) {
    const auto cap = static_cast<std::uint32_t>(k > 0 ? k - 1 : 0);
    for (std::size_t e = 0; e < r.occupancy.size(); ++e)
      require(out, r.occupancy[e].undirected <= cap, link_label(false, r.link_endpoints[e]),
              "edge lies in more than k - 1 triangles");
    require(out, static_cast<std::uint64_t>(r.ell_triang) * cap >= 3 * r.t, "census",
            "links in triangles fall below 3t / (k-1)");
  }
  // The general role carries no degree bound, so only the sum identities apply.

  return out;
}

ViBound product_vi_bound(const CensusReport& r, int k) {
  ViBound b;
  for (int v : r.in_degrees) b.product_log += std::log(static_cast<double>(v + k));
  b.bound_log = r.n * std::log(2.0 * k);
  return b;
}

}  // namespace tdl
