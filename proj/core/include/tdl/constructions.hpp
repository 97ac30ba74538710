#pragma once

#include "tdl/bounds.hpp"
#include "tdl/graph.hpp"
#include "tdl/numeric.hpp"

#include <cstdint>

namespace tdl {

/// Recipe for a graph with an exactly prescribed triangle count: dense
/// clusters carry every triangle, the leftover nodes absorb the leftover
/// link budget bipartitely (hence triangle-free), and the two parts stay
/// disjoint.
struct ConstructionPlan {
  Ensemble model = Ensemble::k_out;
  int n = 0;
  int k = 0;
  std::int64_t target_t = 0;

  int cluster_size = 0;  // k+1 per cluster; the single clique size for general
  std::int64_t cluster_count = 0;
  std::int64_t remainder = 0;  // nodes outside every cluster
  std::int64_t triangles_per_cluster = 0;
  std::int64_t predicted_t = 0;
  std::int64_t links_used_in_clusters = 0;
};

/// Sizes the clusters for an exact triangle target. Unachievable targets
/// are refused with the nearest achievable counts on both sides;
/// capacity shortfalls are refused naming the binding constraint.
ConstructionPlan plan(Ensemble model, int n, int k, std::int64_t target_t);

/// Materializes the plan: clusters on the lowest labels, remainder split
/// into two halves linked only across the split. The census of the
/// result equals predicted_t exactly.
AnyGraph build(const ConstructionPlan& p);

/// The same graph with labels shuffled by `seed` (diversity runs only;
/// the canonical build is the tested artifact).
AnyGraph permute_labels(const AnyGraph& g, std::uint64_t seed);

/// Exponent ratio the construction achieves relative to the whole
/// class: general 1; k-out 1 - 3a/(4(k^2-1)); k-regular 1 - 12a/(k^2-1).
/// Needs k >= 2 for the directed/regular forms.
RatioBound lower_bound_exponent(Ensemble model, int k, const Rational& alpha);

}  // namespace tdl
