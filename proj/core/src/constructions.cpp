#include "tdl/constructions.hpp"

#include "tdl/ensembles.hpp"
#include "tdl/errors.hpp"
#include "tdl/rng.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace tdl {

namespace {

std::int64_t choose3(std::int64_t m) { return m * (m - 1) * (m - 2) / 6; }
std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

void refuse_indivisible(std::int64_t target, std::int64_t per_cluster) {
  const std::int64_t below = target / per_cluster * per_cluster;
  throw RefusalError("target t = " + std::to_string(target) + " is not a multiple of " +
                     std::to_string(per_cluster) + " triangles per cluster; nearest achievable " +
                     "are " + std::to_string(below) + " and " + std::to_string(below + per_cluster));
}

ConstructionPlan plan_clustered(Ensemble model, int n, int k, std::int64_t target_t) {
  ConstructionPlan p;
  p.model = model;
  p.n = n;
  p.k = k;
  p.target_t = target_t;
  p.cluster_size = k + 1;
  p.triangles_per_cluster =
      model == Ensemble::k_out ? 8 * choose3(k + 1) : choose3(k + 1);

  if (p.triangles_per_cluster == 0) {
    if (target_t != 0)
      throw RefusalError("k = " + std::to_string(k) +
                         " clusters hold no triangles; only t = 0 is achievable");
    p.cluster_count = 0;
  } else {
    if (target_t % p.triangles_per_cluster != 0)
      refuse_indivisible(target_t, p.triangles_per_cluster);
    p.cluster_count = target_t / p.triangles_per_cluster;
  }

  const std::int64_t cluster_nodes = static_cast<std::int64_t>(p.cluster_size) * p.cluster_count;
  if (cluster_nodes > n)
    throw RefusalError("clusters need " + std::to_string(cluster_nodes) + " nodes, have n = " +
                       std::to_string(n));
  p.remainder = n - cluster_nodes;
  p.predicted_t = target_t;

  if (model == Ensemble::k_out) {
    p.links_used_in_clusters = cluster_nodes * k;
    if (p.remainder > 0 && k > p.remainder / 2)
      throw RefusalError("remainder half " + std::to_string(p.remainder / 2) +
                         " cannot host k = " + std::to_string(k) + " out-links per node");
  } else {
    p.links_used_in_clusters = p.cluster_count * choose2(k + 1);
    if (p.remainder % 2 != 0)
      throw RefusalError("remainder " + std::to_string(p.remainder) +
                         " nodes cannot split into two equal halves");
    if (p.remainder > 0 && k > p.remainder / 2)
      throw RefusalError("remainder half " + std::to_string(p.remainder / 2) +
                         " cannot host degree k = " + std::to_string(k));
  }
  return p;
}

ConstructionPlan plan_general(int n, int k, std::int64_t target_t) {
  ConstructionPlan p;
  p.model = Ensemble::general;
  p.n = n;
  p.k = k;
  p.target_t = target_t;

  std::int64_t m = 0;
  while (choose3(m) < target_t) ++m;
  if (choose3(m) != target_t)
    throw RefusalError("target t = " + std::to_string(target_t) +
                       " is not C(m,3) for any clique size m; nearest achievable are " +
                       std::to_string(choose3(m - 1)) + " (m = " + std::to_string(m - 1) +
                       ") and " + std::to_string(choose3(m)) + " (m = " + std::to_string(m) + ")");

  p.cluster_size = static_cast<int>(m);
  p.cluster_count = m > 0 ? 1 : 0;
  p.triangles_per_cluster = choose3(m);
  p.predicted_t = target_t;
  p.links_used_in_clusters = choose2(m);

  if (m > n)
    throw RefusalError("clique needs m = " + std::to_string(m) + " nodes, have n = " +
                       std::to_string(n));
  p.remainder = n - m;

  const std::int64_t budget = static_cast<std::int64_t>(k) * n;
  if (p.links_used_in_clusters > budget)
    throw RefusalError("clique uses C(m,2) = " + std::to_string(p.links_used_in_clusters) +
                       " links, budget is k*n = " + std::to_string(budget));
  const std::int64_t rest = budget - p.links_used_in_clusters;
  const std::int64_t high = (p.remainder + 1) / 2;
  const std::int64_t low = p.remainder / 2;
  if (rest > high * low)
    throw RefusalError("remainder cross-pair capacity " + std::to_string(high * low) +
                       " cannot hold the leftover " + std::to_string(rest) + " links");
  return p;
}

}  // namespace

ConstructionPlan plan(Ensemble model, int n, int k, std::int64_t target_t) {
  if (target_t < 0) throw UsageError("target t must be nonnegative");
  EnsembleSpec spec{model, n, k, 0};
  spec.check();
  if (model == Ensemble::general) return plan_general(n, k, target_t);
  return plan_clustered(model, n, k, target_t);
}

namespace {

KOutDigraph build_kout(const ConstructionPlan& p) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(p.n));
  const int size = p.cluster_size;
  for (std::int64_t c = 0; c < p.cluster_count; ++c) {
    const int base = static_cast<int>(c) * size;
    for (int i = 1; i <= size; ++i)
      for (int j = 1; j <= size; ++j)
        if (i != j) out[static_cast<std::size_t>(base + i - 1)].push_back(base + j);
  }
  const int start = static_cast<int>(p.n - p.remainder);  // first remainder node, 0-based
  const auto high = static_cast<int>((p.remainder + 1) / 2);
  const auto low = static_cast<int>(p.remainder / 2);
  for (int i = 0; i < high; ++i)
    for (int j = 0; j < p.k; ++j)
      out[static_cast<std::size_t>(start + i)].push_back(start + high + (i + j) % low + 1);
  for (int i = 0; i < low; ++i)
    for (int j = 0; j < p.k; ++j)
      out[static_cast<std::size_t>(start + high + i)].push_back(start + (i + j) % high + 1);
  return KOutDigraph(p.n, std::move(out));
}

UndirectedGraph build_regular(const ConstructionPlan& p) {
  std::vector<std::pair<int, int>> edges;
  const int size = p.cluster_size;
  for (std::int64_t c = 0; c < p.cluster_count; ++c) {
    const int base = static_cast<int>(c) * size;
    for (int i = 1; i <= size; ++i)
      for (int j = i + 1; j <= size; ++j) edges.emplace_back(base + i, base + j);
  }
  const int start = static_cast<int>(p.n - p.remainder);
  const auto half = static_cast<int>(p.remainder / 2);
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < p.k; ++j)
      edges.emplace_back(start + i + 1, start + half + (i + j) % half + 1);
  return UndirectedGraph(p.n, std::move(edges));
}

UndirectedGraph build_general(const ConstructionPlan& p) {
  std::vector<std::pair<int, int>> edges;
  const int m = p.cluster_size;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) edges.emplace_back(i, j);

  std::int64_t rest = static_cast<std::int64_t>(p.k) * p.n - p.links_used_in_clusters;
  const auto high = static_cast<int>((p.remainder + 1) / 2);
  const auto low = static_cast<int>(p.remainder / 2);
  for (int i = 0; i < high && rest > 0; ++i)
    for (int j = 0; j < low && rest > 0; ++j) {
      edges.emplace_back(m + i + 1, m + high + j + 1);
      --rest;
    }
  return UndirectedGraph(p.n, std::move(edges));
}

}  // namespace

AnyGraph build(const ConstructionPlan& p) {
  switch (p.model) {
    case Ensemble::k_out: return build_kout(p);
    case Ensemble::k_regular: return build_regular(p);
    case Ensemble::general: return build_general(p);
  }
  return UndirectedGraph();
}

AnyGraph permute_labels(const AnyGraph& g, std::uint64_t seed) {
  const int n = std::holds_alternative<UndirectedGraph>(g)
                    ? std::get<UndirectedGraph>(g).num_nodes()
                    : std::get<KOutDigraph>(g).num_nodes();
  std::vector<int> to(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) to[static_cast<std::size_t>(i)] = i;
  Rng rng(seed);
  for (int i = n; i > 1; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i))) + 1;
    std::swap(to[static_cast<std::size_t>(i)], to[static_cast<std::size_t>(j)]);
  }

  if (std::holds_alternative<UndirectedGraph>(g)) {
    const auto& u = std::get<UndirectedGraph>(g);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(u.edges().size());
    for (const auto& [a, b] : u.edges())
      edges.emplace_back(to[static_cast<std::size_t>(a)], to[static_cast<std::size_t>(b)]);
    return UndirectedGraph(n, std::move(edges));
  }
  const auto& d = std::get<KOutDigraph>(g);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& row = out[static_cast<std::size_t>(to[static_cast<std::size_t>(i)] - 1)];
    for (int v : d.out(i)) row.push_back(to[static_cast<std::size_t>(v)]);
  }
  return KOutDigraph(n, std::move(out));
}

RatioBound lower_bound_exponent(Ensemble model, int k, const Rational& alpha) {
  BoundQuery q;
  q.model = model;
  q.k = k;
  q.alpha = alpha;
  const BoundReport r = theorem_ratios(q);
  if (!r.lower)
    throw UsageError("lower-bound ratio undefined at k = " + std::to_string(k) +
                     " (k^2 - 1 vanishes)");
  return *r.lower;
}

}  // namespace tdl
