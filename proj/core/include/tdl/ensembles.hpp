#pragma once

#include "tdl/graph.hpp"
#include "tdl/numeric.hpp"
#include "tdl/rng.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace tdl {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000ull;
inline constexpr std::uint64_t kDefaultRejectionCap = 1'000'000ull;

/// Which model, how big, and (for samplers) which stream.
struct EnsembleSpec {
  Ensemble model = Ensemble::k_out;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;

  /// Throws UsageError if the parameters cannot host the model:
  /// n, k >= 0; k-out needs k <= n-1; k-regular needs k <= n-1 and nk
  /// even; general needs kn <= C(n,2).
  void check() const;
};

/// Pairs over 1..n in colexicographic order: (1,2),(1,3),(2,3),(1,4),...
/// Index p of pair (u,v) with u < v is C(v-1,2) + u - 1.
std::pair<int, int> pair_from_index(std::int64_t p);
std::int64_t index_from_pair(int u, int v);

/// Exact cardinality: general C(C(n,2),kn); k-out C(n-1,k)^n; k-regular
/// counted by exhaustive matching enumeration when the matching workload
/// fits under `regular_cap`, otherwise a RefusalError names the workload.
BigInt count(const EnsembleSpec& spec, std::uint64_t regular_cap = kDefaultEnumerationCap);

/// One uniform draw. Deterministic per (spec, seed) within a build.
/// k-regular runs the pairing model with whole restarts; exceeding
/// `rejection_cap` attempts raises RefusalError.
AnyGraph sample(const EnsembleSpec& spec, std::uint64_t rejection_cap = kDefaultRejectionCap);

UndirectedGraph sample_general(int n, int k, Rng& rng);
KOutDigraph sample_kout(int n, int k, Rng& rng);
UndirectedGraph sample_regular(int n, int k, Rng& rng,
                               std::uint64_t rejection_cap = kDefaultRejectionCap);

/// Visits kn-subsets of the C(n,2) pair slots in colexicographic order
/// over a [begin, end) slice of ranks.
class GeneralEnumerator {
 public:
  GeneralEnumerator(int n, int k, std::uint64_t begin, std::uint64_t end);

  std::optional<UndirectedGraph> next();
  std::uint64_t position() const { return pos_; }

 private:
  int n_ = 0;
  int r_ = 0;  // subset size k*n
  std::uint64_t pos_ = 0;
  std::uint64_t end_ = 0;
  std::vector<std::int64_t> subset_;  // ascending pair indices
};

/// Visits the product of per-node k-subsets; node 1 is the outermost
/// (slowest) digit, so a rank slice fixes node 1's choice on coarse cuts.
class KOutEnumerator {
 public:
  KOutEnumerator(int n, int k, std::uint64_t begin, std::uint64_t end);

  std::optional<KOutDigraph> next();
  std::uint64_t position() const { return pos_; }

 private:
  int n_ = 0;
  int k_ = 0;
  std::uint64_t base_ = 1;  // C(n-1, k)
  std::uint64_t pos_ = 0;
  std::uint64_t end_ = 0;
  std::vector<std::vector<std::int64_t>> subsets_;  // candidate indices per node
};

/// Visits every simple k-regular graph exactly once by walking all
/// perfect matchings of the kn half-edges in lexicographic choice order,
/// rejecting non-simple ones and deduplicating by canonical edge set.
/// Sequential by nature (the dedup set is shared state).
class RegularEnumerator {
 public:
  RegularEnumerator(int n, int k);

  std::optional<UndirectedGraph> next();
  std::uint64_t matchings_visited() const { return visited_; }

 private:
  bool advance();  // to the next complete matching
  bool descend();  // greedily complete the matching from the current stack

  int n_ = 0;
  int k_ = 0;
  int points_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t visited_ = 0;
  std::vector<int> mate_;                          // -1 when free
  std::vector<std::pair<int, int>> stack_;         // (low point, chosen partner)
  std::set<std::vector<std::pair<int, int>>> seen_;
};

/// Resumable enumeration handle over a rank slice of one model.
class EnumerationCursor {
 public:
  std::optional<AnyGraph> next();

  const EnsembleSpec& spec() const { return spec_; }
  /// Graphs (general, k-out) or half-edge matchings (k-regular) in the
  /// full stream — the workload the cap is checked against.
  const BigInt& workload() const { return workload_; }

 private:
  friend EnumerationCursor enumerate(const EnsembleSpec&, std::uint64_t);
  friend EnumerationCursor enumerate_slice(const EnsembleSpec&, std::uint64_t, std::uint64_t,
                                           std::uint64_t);

  static EnumerationCursor make(const EnsembleSpec& spec, std::uint64_t begin, std::uint64_t end,
                                std::uint64_t cap, bool full_range);

  EnsembleSpec spec_;
  BigInt workload_;
  std::optional<GeneralEnumerator> general_;
  std::optional<KOutEnumerator> kout_;
  std::optional<RegularEnumerator> regular_;
};

/// The full-stream workload: graph count for general/k-out, half-edge
/// matching count for k-regular.
BigInt enumeration_workload(const EnsembleSpec& spec);

/// Full enumeration; refuses (naming the exact workload) above `cap`.
EnumerationCursor enumerate(const EnsembleSpec& spec,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// Rank slice [begin, end) for general and k-out; k-regular only accepts
/// the full range since its stream has no random access.
EnumerationCursor enumerate_slice(const EnsembleSpec& spec, std::uint64_t begin,
                                  std::uint64_t end,
                                  std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace tdl
