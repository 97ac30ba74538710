#pragma once

#include "tdl/graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tdl {

enum class TriangleKind { round, frustrated, undirected };

std::string_view to_string(TriangleKind kind);

/// One counted triangle. Directed triples contribute one record per
/// choice of one directed link per pair (up to 8 = 2^3); `orientation_index`
/// encodes that choice, bit p per pair in the order {i,j}, {i,m}, {j,m}
/// of the ascending corners (0 = low-to-high link chosen).
struct TriangleRecord {
  std::array<int, 3> corners{};  // ascending labels
  TriangleKind kind = TriangleKind::undirected;
  int anchor = 0;
  int orientation_index = 0;
  std::array<EdgeRef, 3> roles{};  // [a, b, c]; meaningful for directed kinds only

  friend bool operator==(const TriangleRecord&, const TriangleRecord&) = default;
};

/// Kind, anchor and a/b/c roles are a pure function of the corner triple
/// and the orientation assignment:
///  - round (the chosen links form a directed 3-cycle): the anchor is the
///    lowest corner, a leaves the anchor, b and c follow the cycle;
///  - frustrated: the anchor is the corner from which a and c originate,
///    b leaves the end of a, c runs anchor -> end of b.
TriangleRecord classify_orientation(const std::array<int, 3>& corners, int orientation_index);

/// Appearance counts of one link per (role, kind) cell.
struct LinkOccupancy {
  std::array<std::uint32_t, 3> round{};       // roles a, b, c
  std::array<std::uint32_t, 3> frustrated{};  // roles a, b, c
  std::uint32_t undirected = 0;

  std::uint64_t total() const {
    std::uint64_t s = undirected;
    for (auto v : round) s += v;
    for (auto v : frustrated) s += v;
    return s;
  }
};

struct CensusReport {
  bool directed = false;
  int n = 0;
  int k_hint = 0;  // uniform out-degree when the graph has one, else 0
  std::int64_t link_count = 0;

  std::uint64_t t = 0;
  std::uint64_t round_count = 0;
  std::uint64_t frustrated_count = 0;
  std::int64_t ell_triang = 0;  // links lying in at least one record

  bool records_kept = true;
  std::vector<TriangleRecord> records;  // sorted by (corners, orientation_index)

  std::vector<std::pair<int, int>> link_endpoints;  // canonical link order
  std::vector<LinkOccupancy> occupancy;             // parallel to link_endpoints

  std::vector<std::uint32_t> anchor_round;       // per node, directed case
  std::vector<std::uint32_t> anchor_frustrated;  // per node, directed case
  std::vector<std::uint32_t> anchor_total;       // t_i
  std::vector<int> in_degrees;                   // v_i, directed case
};

struct CensusOptions {
  bool keep_records = true;
};

/// Exact triangle census of a simple undirected graph: one record per
/// node triple with all three edges present.
CensusReport count_undirected(const UndirectedGraph& g, CensusOptions options = {});

/// Exact census under the multiplicity convention: a corner triple with
/// all three pairs connected contributes the product of pair
/// multiplicities (each 1 or 2), classified round or frustrated.
CensusReport count_kout(const KOutDigraph& g, CensusOptions options = {});

CensusReport census_of(const AnyGraph& g, CensusOptions options = {});

struct LemmaViolation {
  std::string subject;  // link "u v" or node label
  std::string rule;
};

/// Empty iff every per-link role cap, per-node anchor cap and census sum
/// identity that the role implies holds. A nonempty result would falsify
/// a counting lemma and must fail any suite loudly.
std::vector<LemmaViolation> occupancy_violations(const CensusReport& r, int k, Ensemble role);

struct ViBound {
  double product_log = 0;  // log prod (v_i + k)
  double bound_log = 0;    // n log 2k
};

/// log prod (v_i + k) <= n log 2k for any digraph with kn links.
ViBound product_vi_bound(const CensusReport& r, int k);

}  // namespace tdl
