#include "tdl/experiments.hpp"

#include "tdl/census.hpp"
#include "tdl/errors.hpp"
#include "tdl/parallel.hpp"
#include "tdl/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tdl {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::int64_t census_t(const AnyGraph& g) {
  const CensusReport r = census_of(g, CensusOptions{false});
  return static_cast<std::int64_t>(r.t);
}

void finish_moments(HistogramResult& h) {
  if (h.total == 0) return;
  const double total = h.total.convert_to<double>();
  double mean = 0;
  double second = 0;
  for (const auto& [t, c] : h.counts) {
    const double w = c.convert_to<double>() / total;
    mean += static_cast<double>(t) * w;
    second += static_cast<double>(t) * static_cast<double>(t) * w;
  }
  h.mean = mean;
  h.variance = std::max(0.0, second - mean * mean);
}

using Tally = std::map<std::int64_t, std::uint64_t>;

void merge_tallies(HistogramResult& h, const std::vector<Tally>& parts) {
  for (const auto& part : parts)
    for (const auto& [t, c] : part) h.counts[t] += c;
  h.total = 0;
  for (const auto& [t, c] : h.counts) h.total += c;
}

}  // namespace

HistogramResult triangle_histogram_exact(const EnsembleSpec& spec, int threads,
                                         std::uint64_t cap) {
  spec.check();
  const BigInt workload = enumeration_workload(spec);
  if (workload > cap)
    throw RefusalError("exact histogram needs a " + workload.str() +
                       "-step enumeration over cap " + std::to_string(cap) +
                       "; use Monte Carlo mode");

  HistogramResult h;
  h.spec = spec;
  h.exact = true;

  if (spec.model == Ensemble::k_regular) {
    Tally tally;
    auto cursor = enumerate(spec, cap);
    while (auto g = cursor.next()) ++tally[census_t(*g)];
    merge_tallies(h, {tally});
  } else {
    const auto total = workload.convert_to<std::uint64_t>();
    const unsigned nt = resolve_threads(threads);
    std::vector<Tally> parts(nt);
    parallel_chunks(total, nt, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
      auto cursor = enumerate_slice(spec, begin, end, cap);
      auto& tally = parts[worker];
      while (auto g = cursor.next()) ++tally[census_t(*g)];
    });
    merge_tallies(h, parts);
  }
  finish_moments(h);
  return h;
}

HistogramResult triangle_histogram_mc(const EnsembleSpec& spec, std::uint64_t samples,
                                      int threads) {
  spec.check();
  if (samples == 0) throw UsageError("Monte Carlo mode needs samples >= 1");

  HistogramResult h;
  h.spec = spec;
  h.exact = false;
  h.samples = samples;

  const unsigned nt = resolve_threads(threads);
  std::vector<Tally> parts(nt);
  parallel_chunks(samples, nt, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    auto& tally = parts[worker];
    for (std::uint64_t i = begin; i < end; ++i) {
      EnsembleSpec draw = spec;
      draw.seed = derive_seed(spec.seed, i);
      ++tally[census_t(sample(draw))];
    }
  });
  merge_tallies(h, parts);
  finish_moments(h);
  return h;
}

PoissonComparison poisson_check(const EnsembleSpec& spec, std::uint64_t samples, int threads) {
  PoissonComparison c;
  c.histogram = triangle_histogram_mc(spec, samples, threads);
  c.lambda_hat = c.histogram.mean;

  std::int64_t max_t = 0;
  for (const auto& [t, cnt] : c.histogram.counts) max_t = std::max(max_t, t);
  c.truncation = max_t + 10;

  const double lambda = c.lambda_hat;
  const double total = c.histogram.total.convert_to<double>();
  double q = std::exp(-lambda);  // Poisson pmf at t, advanced iteratively
  double q_mass = 0;
  double diff = 0;
  for (std::int64_t t = 0; t <= c.truncation; ++t) {
    const auto it = c.histogram.counts.find(t);
    const double p = it == c.histogram.counts.end() ? 0.0 : it->second.convert_to<double>() / total;
    diff += std::abs(p - q);
    q_mass += q;
    q = q * lambda / static_cast<double>(t + 1);
  }
  c.tv_distance = 0.5 * (diff + std::max(0.0, 1.0 - q_mass));
  return c;
}

std::vector<LadderPoint> mean_ladder(Ensemble model, int k, const std::vector<int>& n_values,
                                     std::uint64_t samples, std::uint64_t seed, int threads) {
  std::vector<LadderPoint> ladder;
  ladder.reserve(n_values.size());
  for (int n : n_values) {
    EnsembleSpec spec{model, n, k, derive_seed(seed, static_cast<std::uint64_t>(n))};
    const HistogramResult h = triangle_histogram_mc(spec, samples, threads);
    LadderPoint p;
    p.n = n;
    p.samples = samples;
    p.mean = h.mean;
    p.std_error = std::sqrt(h.variance / static_cast<double>(samples));
    ladder.push_back(p);
  }
  return ladder;
}

std::vector<SandwichRow> sandwich_table(Ensemble model, const std::vector<int>& n_values, int k,
                                        const Rational& alpha, int threads, std::uint64_t cap) {
  if (alpha < 0) throw UsageError("alpha must be nonnegative");
  std::vector<SandwichRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    SandwichRow row;
    row.n = n;
    const Rational target = alpha * n;
    row.t = round_half_up(target);
    row.t_rounded = !is_integer(target);

    EnsembleSpec spec{model, n, k, 0};
    const HistogramResult h = triangle_histogram_exact(spec, threads, cap);
    const auto it = h.counts.find(row.t);
    const BigInt class_size = it == h.counts.end() ? BigInt(0) : it->second;
    row.empty_class = class_size == 0;
    row.log_numerator = row.empty_class ? kNan : log_big(class_size);
    row.log_denominator = log_big(h.total);
    row.ratio = (!row.empty_class && row.log_denominator > 0)
                    ? row.log_numerator / row.log_denominator
                    : kNan;

    BoundQuery q;
    q.model = model;
    q.k = k;
    q.alpha = alpha;
    const BoundReport b = theorem_ratios(q);
    row.lower = b.lower ? to_double(b.lower->value) : kNan;
    row.lower_vacuous = b.lower && b.lower->vacuous;
    row.upper = b.upper ? to_double(*b.upper) : kNan;
    rows.push_back(row);
  }
  return rows;
}

namespace {

bool meets(const CoagulationCondition& c, std::int64_t t) {
  return c.at_least ? t >= c.t : t == c.t;
}

bool shares_a_link(const CensusReport& r) {
  for (const auto& occ : r.occupancy)
    if (occ.total() >= 2) return true;
  return false;
}

void finish_fractions(CoagulationStat& s) {
  if (s.class_size == 0)
    throw RefusalError("conditioning class is empty: no graph has " +
                       std::string(s.condition.at_least ? "t >= " : "t = ") +
                       std::to_string(s.condition.t));
  s.share_fraction = Rational(s.sharing, s.class_size).convert_to<double>();
  s.disjoint_fraction = 1.0 - s.share_fraction;
  s.predominantly_sharing = s.share_fraction > 0.5;
}

}  // namespace

CoagulationStat coagulation_exact(const EnsembleSpec& spec, CoagulationCondition condition,
                                  int threads, std::uint64_t cap) {
  spec.check();
  if (condition.t < 2) throw UsageError("coagulation needs a condition of t >= 2");

  CoagulationStat s;
  s.spec = spec;
  s.condition = condition;
  s.exact = true;

  const BigInt workload = enumeration_workload(spec);
  if (workload > cap)
    throw RefusalError("exact coagulation needs a " + workload.str() +
                       "-step enumeration over cap " + std::to_string(cap) +
                       "; use Monte Carlo mode");

  auto scan = [&](EnumerationCursor cursor, std::uint64_t& in_class, std::uint64_t& share) {
    while (auto g = cursor.next()) {
      const CensusReport r = census_of(*g, CensusOptions{false});
      if (!meets(condition, static_cast<std::int64_t>(r.t))) continue;
      ++in_class;
      if (shares_a_link(r)) ++share;
    }
  };

  if (spec.model == Ensemble::k_regular) {
    std::uint64_t in_class = 0;
    std::uint64_t share = 0;
    scan(enumerate(spec, cap), in_class, share);
    s.class_size = in_class;
    s.sharing = share;
  } else {
    const auto total = workload.convert_to<std::uint64_t>();
    const unsigned nt = resolve_threads(threads);
    std::vector<std::uint64_t> in_class(nt, 0);
    std::vector<std::uint64_t> share(nt, 0);
    parallel_chunks(total, nt, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
      scan(enumerate_slice(spec, begin, end, cap), in_class[worker], share[worker]);
    });
    for (unsigned w = 0; w < nt; ++w) {
      s.class_size += in_class[w];
      s.sharing += share[w];
    }
  }
  finish_fractions(s);
  return s;
}

CoagulationStat coagulation_mc(const EnsembleSpec& spec, CoagulationCondition condition,
                               std::uint64_t draws, int threads) {
  spec.check();
  if (condition.t < 2) throw UsageError("coagulation needs a condition of t >= 2");
  if (draws == 0) throw UsageError("Monte Carlo mode needs draws >= 1");

  CoagulationStat s;
  s.spec = spec;
  s.condition = condition;
  s.exact = false;
  s.samples_drawn = draws;

  const unsigned nt = resolve_threads(threads);
  std::vector<std::uint64_t> in_class(nt, 0);
  std::vector<std::uint64_t> share(nt, 0);
  parallel_chunks(draws, nt, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      EnsembleSpec draw = spec;
      draw.seed = derive_seed(spec.seed, i);
      const CensusReport r = census_of(sample(draw), CensusOptions{false});
      if (!meets(condition, static_cast<std::int64_t>(r.t))) continue;
      ++in_class[worker];
      if (shares_a_link(r)) ++share[worker];
    }
  });
  std::uint64_t accepted = 0;
  std::uint64_t sharing = 0;
  for (unsigned w = 0; w < nt; ++w) {
    accepted += in_class[w];
    sharing += share[w];
  }

  const double acceptance = static_cast<double>(accepted) / static_cast<double>(draws);
  if (accepted > 0 && acceptance < 1e-6)
    throw RefusalError("conditional acceptance rate " + std::to_string(acceptance) +
                       " fell below 1e-6 over " + std::to_string(draws) + " draws");
  s.class_size = accepted;
  s.sharing = sharing;
  finish_fractions(s);  // refuses when nothing was accepted
  return s;
}

}  // namespace tdl
