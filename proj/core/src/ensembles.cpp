#include "tdl/ensembles.hpp"

#include "tdl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace tdl {

std::pair<int, int> pair_from_index(std::int64_t p) {
  // largest j with j(j-1)/2 <= p gives the high endpoint j+1
  auto j = static_cast<std::int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(p))) / 2.0);
  while (j * (j - 1) / 2 > p) --j;
  while ((j + 1) * j / 2 <= p) ++j;
  const std::int64_t base = j * (j - 1) / 2;
  return {static_cast<int>(p - base + 1), static_cast<int>(j + 1)};
}

std::int64_t index_from_pair(int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::int64_t>(v - 1) * (v - 2) / 2 + (u - 1);
}

void EnsembleSpec::check() const {
  if (n < 0 || k < 0) throw UsageError("n and k must be nonnegative");
  switch (model) {
    case Ensemble::general: {
      const BigInt slots = binomial(n, 2);
      if (BigInt(k) * n > slots)
        throw UsageError("general model needs k*n <= C(n,2) = " + slots.str() + ", got k*n = " +
                         std::to_string(static_cast<std::int64_t>(k) * n));
      break;
    }
    case Ensemble::k_out:
      if (k > 0 && k > n - 1)
        throw UsageError("k-out model needs k <= n-1, got k = " + std::to_string(k) + ", n = " +
                         std::to_string(n));
      break;
    case Ensemble::k_regular:
      if (k > 0 && k > n - 1)
        throw UsageError("k-regular model needs k <= n-1, got k = " + std::to_string(k) +
                         ", n = " + std::to_string(n));
      if (static_cast<std::int64_t>(n) * k % 2 != 0)
        throw UsageError("k-regular model needs n*k even, got n = " + std::to_string(n) +
                         ", k = " + std::to_string(k));
      break;
  }
}

BigInt count(const EnsembleSpec& spec, std::uint64_t regular_cap) {
  spec.check();
  switch (spec.model) {
    case Ensemble::general:
      return binomial(static_cast<std::int64_t>(spec.n) * (spec.n - 1) / 2,
                      static_cast<std::int64_t>(spec.k) * spec.n);
    case Ensemble::k_out:
      return pow(binomial(spec.n - 1, spec.k), static_cast<std::uint64_t>(spec.n));
    case Ensemble::k_regular: {
      const BigInt work = matching_count(static_cast<std::int64_t>(spec.n) * spec.k);
      if (work > regular_cap)
        throw RefusalError("exact count unavailable: " + work.str() +
                           " half-edge matchings exceed cap " + std::to_string(regular_cap));
      RegularEnumerator en(spec.n, spec.k);
      BigInt total = 0;
      while (en.next()) ++total;
      return total;
    }
  }
  return 0;
}

namespace {

// Floyd's uniform r-subset of {0, ..., universe-1}.
std::vector<std::int64_t> floyd_subset(std::int64_t universe, std::int64_t r, Rng& rng) {
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(r));
  for (std::int64_t j = universe - r; j < universe; ++j) {
    const auto t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j + 1)));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::int64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Candidate slot c of node i (1-based) names the c-th other node.
int candidate_label(int node, std::int64_t c) {
  return static_cast<int>(c) + (c + 1 < node ? 1 : 2);
}

}  // namespace

UndirectedGraph sample_general(int n, int k, Rng& rng) {
  const std::int64_t slots = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t r = static_cast<std::int64_t>(k) * n;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(r));
  for (std::int64_t p : floyd_subset(slots, r, rng)) edges.push_back(pair_from_index(p));
  return UndirectedGraph(n, std::move(edges));
}

KOutDigraph sample_kout(int n, int k, Rng& rng) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& row = out[static_cast<std::size_t>(i - 1)];
    row.reserve(static_cast<std::size_t>(k));
    for (std::int64_t c : floyd_subset(n - 1, k, rng)) row.push_back(candidate_label(i, c));
  }
  return KOutDigraph(n, std::move(out));
}

UndirectedGraph sample_regular(int n, int k, Rng& rng, std::uint64_t rejection_cap) {
  const int points = n * k;
  std::vector<int> perm(static_cast<std::size_t>(points));
  for (std::uint64_t attempt = 0; attempt < rejection_cap; ++attempt) {
    for (int i = 0; i < points; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = points - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(points / 2));
    bool simple = true;
    for (int i = 0; simple && i + 1 < points; i += 2) {
      const int u = perm[static_cast<std::size_t>(i)] / k + 1;
      const int v = perm[static_cast<std::size_t>(i + 1)] / k + 1;
      if (u == v)
        simple = false;
      else
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return UndirectedGraph(n, std::move(edges));
  }
  throw RefusalError("rejection budget exhausted after " + std::to_string(rejection_cap) +
                     " pairing attempts (n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                     ")");
}

AnyGraph sample(const EnsembleSpec& spec, std::uint64_t rejection_cap) {
  spec.check();
  Rng rng(spec.seed);
  switch (spec.model) {
    case Ensemble::general: return sample_general(spec.n, spec.k, rng);
    case Ensemble::k_out: return sample_kout(spec.n, spec.k, rng);
    case Ensemble::k_regular: return sample_regular(spec.n, spec.k, rng, rejection_cap);
  }
  return UndirectedGraph();
}

namespace {

std::vector<std::int64_t> first_subset(int r) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) s[static_cast<std::size_t>(i)] = i;
  return s;
}

// Colexicographic successor within subsets of {0, ..., universe-1}.
bool colex_next(std::vector<std::int64_t>& s, std::int64_t universe) {
  const auto r = static_cast<int>(s.size());
  for (int i = 0; i < r; ++i) {
    const std::int64_t limit = (i + 1 < r) ? s[static_cast<std::size_t>(i + 1)] : universe;
    if (s[static_cast<std::size_t>(i)] + 1 < limit) {
      ++s[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) s[static_cast<std::size_t>(j)] = j;
      return true;
    }
  }
  return false;
}

// Subset of colexicographic rank `rank` (sum of C(s_i, i+1)).
std::vector<std::int64_t> subset_unrank(int r, BigInt rank) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(r));
  for (int i = r; i >= 1; --i) {
    std::int64_t c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    s[static_cast<std::size_t>(i - 1)] = c;
    rank -= binomial(c, i);
  }
  return s;
}

}  // namespace

GeneralEnumerator::GeneralEnumerator(int n, int k, std::uint64_t begin, std::uint64_t end)
    : n_(n), r_(n * k), pos_(begin), end_(end) {
  if (pos_ < end_) subset_ = subset_unrank(r_, BigInt(begin));
}

std::optional<UndirectedGraph> GeneralEnumerator::next() {
  if (pos_ >= end_) return std::nullopt;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(subset_.size());
  for (std::int64_t p : subset_) edges.push_back(pair_from_index(p));
  UndirectedGraph g(n_, std::move(edges));
  ++pos_;
  if (pos_ < end_) colex_next(subset_, static_cast<std::int64_t>(n_) * (n_ - 1) / 2);
  return g;
}

KOutEnumerator::KOutEnumerator(int n, int k, std::uint64_t begin, std::uint64_t end)
    : n_(n), k_(k), pos_(begin), end_(end) {
  if (n_ >= 1) {
    const BigInt b = binomial(n_ - 1, k_);
    base_ = b.convert_to<std::uint64_t>();
  }
  if (pos_ < end_) {
    subsets_.resize(static_cast<std::size_t>(n_));
    std::uint64_t rest = begin;
    for (int i = n_ - 1; i >= 0; --i) {
      subsets_[static_cast<std::size_t>(i)] = subset_unrank(k_, BigInt(rest % base_));
      rest /= base_;
    }
  }
}

std::optional<KOutDigraph> KOutEnumerator::next() {
  if (pos_ >= end_) return std::nullopt;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    auto& row = out[static_cast<std::size_t>(i - 1)];
    row.reserve(static_cast<std::size_t>(k_));
    for (std::int64_t c : subsets_[static_cast<std::size_t>(i - 1)])
      row.push_back(candidate_label(i, c));
  }
  KOutDigraph g(n_, std::move(out));
  ++pos_;
  if (pos_ < end_) {
    for (int i = n_ - 1; i >= 0; --i) {
      if (colex_next(subsets_[static_cast<std::size_t>(i)], n_ - 1)) break;
      subsets_[static_cast<std::size_t>(i)] = first_subset(k_);
    }
  }
  return g;
}

RegularEnumerator::RegularEnumerator(int n, int k)
    : n_(n), k_(k), points_(n * k), mate_(static_cast<std::size_t>(n) * k, -1) {}

bool RegularEnumerator::descend() {
  for (int p = 0; p < points_; ++p) {
    if (mate_[static_cast<std::size_t>(p)] != -1) continue;
    int q = p + 1;
    while (q < points_ && mate_[static_cast<std::size_t>(q)] != -1) ++q;
    mate_[static_cast<std::size_t>(p)] = q;
    mate_[static_cast<std::size_t>(q)] = p;
    stack_.emplace_back(p, q);
  }
  ++visited_;
  return true;
}

bool RegularEnumerator::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return descend();
  }
  while (!stack_.empty()) {
    auto [p, q] = stack_.back();
    stack_.pop_back();
    mate_[static_cast<std::size_t>(p)] = -1;
    mate_[static_cast<std::size_t>(q)] = -1;
    for (int next_q = q + 1; next_q < points_; ++next_q) {
      if (mate_[static_cast<std::size_t>(next_q)] != -1) continue;
      mate_[static_cast<std::size_t>(p)] = next_q;
      mate_[static_cast<std::size_t>(next_q)] = p;
      stack_.emplace_back(p, next_q);
      return descend();
    }
  }
  done_ = true;
  return false;
}

std::optional<UndirectedGraph> RegularEnumerator::next() {
  while (advance()) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(stack_.size());
    bool simple = true;
    for (const auto& [a, b] : stack_) {
      const int u = a / k_ + 1;
      const int v = b / k_ + 1;
      if (u == v) {
        simple = false;
        break;
      }
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    if (seen_.insert(edges).second) return UndirectedGraph(n_, std::move(edges));
  }
  return std::nullopt;
}

BigInt enumeration_workload(const EnsembleSpec& spec) {
  spec.check();
  if (spec.model == Ensemble::k_regular)
    return matching_count(static_cast<std::int64_t>(spec.n) * spec.k);
  return count(spec);
}

EnumerationCursor EnumerationCursor::make(const EnsembleSpec& spec, std::uint64_t begin,
                                          std::uint64_t end, std::uint64_t cap, bool full_range) {
  const BigInt workload = enumeration_workload(spec);
  if (workload > cap) {
    const char* unit =
        spec.model == Ensemble::k_regular ? " half-edge matchings; cap is " : " graphs; cap is ";
    throw RefusalError("enumeration requires " + workload.str() + unit + std::to_string(cap));
  }
  const auto total = workload.convert_to<std::uint64_t>();
  if (full_range) {
    begin = 0;
    end = total;
  }

  EnumerationCursor cursor;
  cursor.spec_ = spec;
  cursor.workload_ = workload;
  switch (spec.model) {
    case Ensemble::general:
      if (end > total || begin > end) throw UsageError("enumeration slice out of range");
      cursor.general_.emplace(spec.n, spec.k, begin, end);
      break;
    case Ensemble::k_out:
      if (end > total || begin > end) throw UsageError("enumeration slice out of range");
      cursor.kout_.emplace(spec.n, spec.k, begin, end);
      break;
    case Ensemble::k_regular:
      if (!full_range)
        throw UsageError("k-regular enumeration has no random access; use the full stream");
      cursor.regular_.emplace(spec.n, spec.k);
      break;
  }
  return cursor;
}

std::optional<AnyGraph> EnumerationCursor::next() {
  if (general_) {
    if (auto g = general_->next()) return AnyGraph(std::move(*g));
    return std::nullopt;
  }
  if (kout_) {
    if (auto g = kout_->next()) return AnyGraph(std::move(*g));
    return std::nullopt;
  }
  if (regular_) {
    if (auto g = regular_->next()) return AnyGraph(std::move(*g));
    return std::nullopt;
  }
  return std::nullopt;
}

EnumerationCursor enumerate(const EnsembleSpec& spec, std::uint64_t cap) {
  return EnumerationCursor::make(spec, 0, 0, cap, true);
}

EnumerationCursor enumerate_slice(const EnsembleSpec& spec, std::uint64_t begin, std::uint64_t end,
                                  std::uint64_t cap) {
  return EnumerationCursor::make(spec, begin, end, cap, false);
}

}  // namespace tdl
