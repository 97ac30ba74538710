#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tdl {

enum class Ensemble { general, k_out, k_regular };

std::string_view to_string(Ensemble model);
Ensemble ensemble_from_string(std::string_view name);

/// A single link: ordered (u,v) when directed, u < v otherwise.
struct EdgeRef {
  bool directed = false;
  int u = 0;
  int v = 0;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

/// Row-per-node adjacency bits for O(n/64) common-neighbor scans.
class BitRows {
 public:
  BitRows() = default;
  explicit BitRows(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_) {}

  bool empty() const { return n_ == 0; }
  void set(int r, int c) { bits_[static_cast<std::size_t>(r) * words_ + c / 64] |= 1ull << (c % 64); }
  bool get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
  }
  const std::uint64_t* row(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }
  int words_per_row() const { return words_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline constexpr int kDefaultBitsetThreshold = 4096;

/// Simple labeled graph, nodes 1..n. Immutable once constructed. Stores
/// edges as given (validation reports broken invariants as data), plus
/// sorted neighbor lists and, for n below the threshold, bit rows.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(int n, std::vector<std::pair<int, int>> edges,
                  int bitset_threshold = kDefaultBitsetThreshold);

  int num_nodes() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }

  /// Canonical order: u < v within a pair, pairs sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Sorted 1-based neighbor labels of `node` (1-based).
  const std::vector<int>& neighbors(int node) const { return adj_[node - 1]; }
  int degree(int node) const { return static_cast<int>(adj_[node - 1].size()); }
  bool has_edge(int u, int v) const;

  const BitRows& bits() const { return bits_; }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  BitRows bits_;
};

/// Labeled digraph stored as per-node out-lists, nodes 1..n. The k-out
/// role (exactly k distinct out-neighbors, no self-loops, no repeated
/// directed link) is checked by validate, not by the constructor.
class KOutDigraph {
 public:
  KOutDigraph() = default;
  KOutDigraph(int n, std::vector<std::vector<int>> out_lists,
              int bitset_threshold = kDefaultBitsetThreshold);

  int num_nodes() const { return n_; }
  std::int64_t num_links() const { return num_links_; }

  /// Sorted out-neighbors of `node` (1-based labels).
  const std::vector<int>& out(int node) const { return out_[node - 1]; }
  int out_degree(int node) const { return static_cast<int>(out_[node - 1].size()); }
  bool has_link(int u, int v) const;
  const std::vector<int>& in_degrees() const { return in_degrees_; }

  /// Unoriented support graph: pair {u,v} adjacent iff at least one of
  /// the two directed links is present.
  const std::vector<int>& support_neighbors(int node) const { return support_[node - 1]; }
  bool support_adjacent(int u, int v) const;
  /// 0, 1 or 2 directed links between u and v.
  int multiplicity(int u, int v) const { return (has_link(u, v) ? 1 : 0) + (has_link(v, u) ? 1 : 0); }
  const BitRows& support_bits() const { return support_bits_; }

  /// Dense id of directed link u->v in canonical (u,v) order; -1 if absent.
  std::int64_t link_index(int u, int v) const;
  std::pair<int, int> link_at(std::int64_t index) const { return links_[static_cast<std::size_t>(index)]; }
  const std::vector<std::pair<int, int>>& links() const { return links_; }

  friend bool operator==(const KOutDigraph& a, const KOutDigraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  std::int64_t num_links_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<int> in_degrees_;
  std::vector<std::vector<int>> support_;
  std::vector<std::pair<int, int>> links_;
  std::vector<std::int64_t> link_offset_;  // start of node i's links in links_
  BitRows support_bits_;
};

using AnyGraph = std::variant<UndirectedGraph, KOutDigraph>;

struct Violation {
  int node = 0;  // 0 when the rule is not tied to one node
  std::string rule;
};

struct ValidationResult {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks the invariants of the claimed ensemble role. Violations are
/// data, not errors.
ValidationResult validate(const UndirectedGraph& g, Ensemble role, int k);
ValidationResult validate(const KOutDigraph& g, Ensemble role, int k);
ValidationResult validate(const AnyGraph& g, Ensemble role, int k);

}  // namespace tdl
