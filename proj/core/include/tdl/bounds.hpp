#pragma once

#include "tdl/ensembles.hpp"
#include "tdl/graph.hpp"
#include "tdl/numeric.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace tdl {

struct BoundQuery {
  Ensemble model = Ensemble::k_out;
  std::optional<std::int64_t> n;  // enables finite-n log-cardinalities
  int k = 1;
  Rational alpha = 0;
};

/// A ratio that may sit below zero, where the statement it comes from
/// carries no content.
struct RatioBound {
  Rational value = 0;
  bool vacuous = false;
};

struct BoundReport {
  Ensemble model = Ensemble::k_out;
  int k = 0;
  Rational alpha = 0;
  Rational rho_k = 0;

  /// Exponent ratios relative to the unconditioned class. Absent when
  /// the closed form divides by zero (k = 1 caps).
  std::optional<RatioBound> lower;
  std::optional<Rational> upper;

  /// k-regular with n: the two exponent terms (kn/2, alpha n/(k-1)).
  std::optional<std::pair<Rational, Rational>> reg_exponent_terms;

  std::optional<double> finite_n_log_denominator;
  bool denominator_exponent_only = false;
};

/// rho(k) = 1 / (2k(5k+1)).
Rational rho(int k);

/// Exact ratio evaluation for one (model, k, alpha) query:
///   general    lower = upper = 1
///   k-out      lower 1 - 3a/(4(k^2-1)),  upper 1 - a/(2k^2(5k+1))
///   k-regular  lower 1 - 12a/(k^2-1),    upper 1 - 2a/(k(k-1))
/// A negative lower value is flagged vacuous, not clamped.
BoundReport theorem_ratios(const BoundQuery& q);

struct LogCardinality {
  double log_value = 0;
  bool exponent_only = false;  // k-regular above cap: (nk/2) log n
};

/// Natural-log cardinality of the model class at finite n, exact up to
/// the final float conversion. k-regular falls back to the asymptotic
/// exponent above `regular_cap` only when `allow_exponent_only` is set,
/// otherwise it refuses.
LogCardinality log_cardinality(const BoundQuery& q,
                               std::uint64_t regular_cap = kDefaultEnumerationCap,
                               bool allow_exponent_only = false);

/// Tail exponent alpha^(1/3) n^(1/2) and the counting exponent
/// (alpha n)^(2/3) log n it is compared against.
double vu_tail_exponent(std::int64_t n, const Rational& alpha);
double counter_exponent(std::int64_t n, const Rational& alpha);

/// k-out cluster accounting at finite n, as exact rationals:
/// clusters = alpha n / (8 C(k+1,3)), remainder nodes, link exponents
/// Q = k * clusters, S = k * remainder, total T = Q + S, and
/// ratio = T / (nk) — identically 1 - 3 alpha / (4(k^2-1)).
struct ClusterDecomposition {
  Rational clusters = 0;
  Rational remainder = 0;
  Rational cluster_links = 0;
  Rational remainder_links = 0;
  Rational total = 0;
  Rational ratio = 0;
};

ClusterDecomposition lower_bound_decomposition(std::int64_t n, int k, const Rational& alpha);

}  // namespace tdl
