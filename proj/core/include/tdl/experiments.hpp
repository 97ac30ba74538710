#pragma once

#include "tdl/bounds.hpp"
#include "tdl/ensembles.hpp"
#include "tdl/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tdl {

/// Triangle-count distribution over one model. Exact mode holds class
/// sizes summing to the full cardinality; Monte Carlo holds sample
/// tallies summing to the number of draws.
struct HistogramResult {
  EnsembleSpec spec;
  bool exact = true;
  std::uint64_t samples = 0;  // Monte Carlo draws; 0 in exact mode
  std::map<std::int64_t, BigInt> counts;
  BigInt total = 0;
  double mean = 0;
  double variance = 0;
};

/// Census of every graph in the model, fanned out over enumeration
/// slices (k-regular runs sequentially). Refuses above `cap`.
HistogramResult triangle_histogram_exact(const EnsembleSpec& spec, int threads = 0,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// Census of `samples` independent draws; draw i uses the stream derived
/// from (spec.seed, i), so the tally is identical for any thread count.
HistogramResult triangle_histogram_mc(const EnsembleSpec& spec, std::uint64_t samples,
                                      int threads = 0);

struct PoissonComparison {
  HistogramResult histogram;
  double lambda_hat = 0;
  std::int64_t truncation = 0;  // max observed t + 10
  double tv_distance = 0;
};

/// Shape test against Poisson(empirical mean): total-variation distance
/// over [0, truncation], charging the reference's tail beyond it.
PoissonComparison poisson_check(const EnsembleSpec& spec, std::uint64_t samples, int threads = 0);

struct LadderPoint {
  int n = 0;
  std::uint64_t samples = 0;
  double mean = 0;
  double std_error = 0;
};

/// Mean triangle count across a ladder of n at fixed (model, k): the
/// display that the mean settles instead of growing with n.
std::vector<LadderPoint> mean_ladder(Ensemble model, int k, const std::vector<int>& n_values,
                                     std::uint64_t samples, std::uint64_t seed, int threads = 0);

struct SandwichRow {
  int n = 0;
  std::int64_t t = 0;
  bool t_rounded = false;   // alpha*n was not an integer
  bool empty_class = false;  // no graph hits t exactly
  double log_numerator = 0;
  double log_denominator = 0;
  double ratio = 0;  // NaN when undefined
  double lower = 0;  // asymptotic ratios; NaN when the formula is undefined
  double upper = 0;
  bool lower_vacuous = false;
};

/// Finite-n log-cardinality ratios of the conditioned class against the
/// whole model, side by side with the asymptotic ratios. Reported, not
/// asserted: the closed forms are limit statements.
std::vector<SandwichRow> sandwich_table(Ensemble model, const std::vector<int>& n_values, int k,
                                        const Rational& alpha, int threads = 0,
                                        std::uint64_t cap = kDefaultEnumerationCap);

struct CoagulationCondition {
  std::int64_t t = 2;
  bool at_least = false;  // condition t >= t0 instead of t == t0
};

struct CoagulationStat {
  EnsembleSpec spec;
  CoagulationCondition condition;
  bool exact = true;
  std::uint64_t samples_drawn = 0;  // Monte Carlo draws; 0 in exact mode
  BigInt class_size = 0;            // graphs meeting the condition
  BigInt sharing = 0;               // of those, graphs where some link lies in >= 2 triangles
  double share_fraction = 0;
  double disjoint_fraction = 0;
  bool predominantly_sharing = false;
};

/// Among graphs meeting the triangle condition (t0 >= 2), how often some
/// link is shared between triangles versus all triangles link-disjoint.
CoagulationStat coagulation_exact(const EnsembleSpec& spec, CoagulationCondition condition,
                                  int threads = 0, std::uint64_t cap = kDefaultEnumerationCap);

/// Rejection sampling over `draws` independent samples. Refuses when the
/// acceptance rate estimate falls below 1e-6, or nothing is accepted.
CoagulationStat coagulation_mc(const EnsembleSpec& spec, CoagulationCondition condition,
                               std::uint64_t draws, int threads = 0);

}  // namespace tdl
