#include "tdl/graph.hpp"

#include "tdl/errors.hpp"

#include <algorithm>

namespace tdl {

std::string_view to_string(Ensemble model) {
  switch (model) {
    case Ensemble::general: return "general";
    case Ensemble::k_out: return "k-out";
    case Ensemble::k_regular: return "k-regular";
  }
  return "?";
}

Ensemble ensemble_from_string(std::string_view name) {
  if (name == "general") return Ensemble::general;
  if (name == "k-out" || name == "kout") return Ensemble::k_out;
  if (name == "k-regular" || name == "kregular" || name == "k-reg") return Ensemble::k_regular;
  throw UsageError("unknown model '" + std::string(name) + "' (general | k-out | k-regular)");
}

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<int, int>> edges, int bitset_threshold)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw UsageError("negative node count");
  for (auto& [u, v] : edges_)
    if (u > v) std::swap(u, v);
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(n_, {});
  const bool with_bits = n_ > 0 && n_ <= bitset_threshold;
  if (with_bits) bits_ = BitRows(n_);
  for (const auto& [u, v] : edges_) {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) continue;  // kept for validate to report
    adj_[u - 1].push_back(v);
    adj_[v - 1].push_back(u);
    if (with_bits) {
      bits_.set(u - 1, v - 1);
      bits_.set(v - 1, u - 1);
    }
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool UndirectedGraph::has_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
  if (!bits_.empty()) return bits_.get(u - 1, v - 1);
  const auto& list = adj_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

KOutDigraph::KOutDigraph(int n, std::vector<std::vector<int>> out_lists, int bitset_threshold)
    : n_(n), out_(std::move(out_lists)) {
  if (n < 0) throw UsageError("negative node count");
  out_.resize(n_);
  in_degrees_.assign(n_, 0);
  support_.assign(n_, {});
  const bool with_bits = n_ > 0 && n_ <= bitset_threshold;
  if (with_bits) support_bits_ = BitRows(n_);
  link_offset_.assign(n_ + 1, 0);
  for (int i = 1; i <= n_; ++i) {
    auto& list = out_[i - 1];
    std::sort(list.begin(), list.end());
    num_links_ += static_cast<std::int64_t>(list.size());
    link_offset_[i] = num_links_;
    for (int v : list) {
      links_.emplace_back(i, v);
      if (v < 1 || v > n_ || v == i) continue;  // reported by validate
      in_degrees_[v - 1] += 1;
      support_[i - 1].push_back(v);
      support_[v - 1].push_back(i);
      if (with_bits) {
        support_bits_.set(i - 1, v - 1);
        support_bits_.set(v - 1, i - 1);
      }
    }
  }
  for (auto& list : support_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool KOutDigraph::has_link(int u, int v) const {
  if (u < 1 || u > n_) return false;
  const auto& list = out_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

bool KOutDigraph::support_adjacent(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
  if (!support_bits_.empty()) return support_bits_.get(u - 1, v - 1);
  const auto& list = support_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

std::int64_t KOutDigraph::link_index(int u, int v) const {
  if (u < 1 || u > n_) return -1;
  const auto& list = out_[u - 1];
  const auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return -1;
  return link_offset_[u - 1] + (it - list.begin());
}

namespace {

void check_endpoints(int n, int u, int v, int line_node, std::vector<Violation>& out) {
  if (u < 1 || u > n) out.push_back({line_node, "endpoint " + std::to_string(u) + " out of range 1.." + std::to_string(n)});
  if (v < 1 || v > n) out.push_back({line_node, "endpoint " + std::to_string(v) + " out of range 1.." + std::to_string(n)});
}

}  // namespace

ValidationResult validate(const UndirectedGraph& g, Ensemble role, int k) {
  ValidationResult r;
  const int n = g.num_nodes();
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u == v) r.violations.push_back({u, "self-loop at node " + std::to_string(u)});
    check_endpoints(n, u, v, u, r.violations);
    if (i > 0 && edges[i] == edges[i - 1])
      r.violations.push_back({u, "duplicate edge " + std::to_string(u) + " " + std::to_string(v)});
  }
  if (role == Ensemble::k_out) {
    r.violations.push_back({0, "undirected graph cannot have the k-out role"});
  } else if (role == Ensemble::general) {
    const std::int64_t want = static_cast<std::int64_t>(k) * n;
    if (g.num_edges() != want)
      r.violations.push_back({0, "edge count " + std::to_string(g.num_edges()) + " != k*n = " + std::to_string(want)});
  } else {
    for (int i = 1; i <= n; ++i)
      if (g.degree(i) != k)
        r.violations.push_back({i, "degree " + std::to_string(g.degree(i)) + " != k = " + std::to_string(k) + " at node " + std::to_string(i)});
  }
  r.ok = r.violations.empty();
  return r;
}

ValidationResult validate(const KOutDigraph& g, Ensemble role, int k) {
  ValidationResult r;
  const int n = g.num_nodes();
  if (role != Ensemble::k_out) {
    r.violations.push_back({0, "directed graph carries only the k-out role"});
  }
  for (int i = 1; i <= n; ++i) {
    const auto& list = g.out(i);
    for (std::size_t j = 0; j < list.size(); ++j) {
      const int v = list[j];
      if (v == i) r.violations.push_back({i, "self-loop at node " + std::to_string(i)});
      check_endpoints(n, i, v, i, r.violations);
      if (j > 0 && list[j] == list[j - 1])
        r.violations.push_back({i, "duplicate directed link " + std::to_string(i) + " " + std::to_string(v)});
    }
    if (role == Ensemble::k_out && static_cast<int>(list.size()) != k)
      r.violations.push_back({i, "out-degree " + std::to_string(list.size()) + " != k = " + std::to_string(k) + " at node " + std::to_string(i)});
  }
  r.ok = r.violations.empty();
  return r;
}

ValidationResult validate(const AnyGraph& g, Ensemble role, int k) {
  return std::visit([&](const auto& inner) { return validate(inner, role, k); }, g);
}

}  // namespace tdl
