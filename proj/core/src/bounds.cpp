#include "tdl/bounds.hpp"

#include "tdl/errors.hpp"

#include <cmath>
#include <limits>

namespace tdl {

Rational rho(int k) {
  if (k < 1) throw UsageError("rho(k) needs k >= 1");
  const auto kk = static_cast<std::int64_t>(k);
  return Rational(1, BigInt(2 * kk) * (5 * kk + 1));
}

BoundReport theorem_ratios(const BoundQuery& q) {
  if (q.k < 1) throw UsageError("bounds need k >= 1");
  if (q.alpha < 0) throw UsageError("bounds need alpha >= 0");

  BoundReport r;
  r.model = q.model;
  r.k = q.k;
  r.alpha = q.alpha;
  r.rho_k = rho(q.k);

  const auto k = static_cast<std::int64_t>(q.k);
  const Rational& a = q.alpha;

  switch (q.model) {
    case Ensemble::general:
      r.lower = RatioBound{Rational(1), false};
      r.upper = Rational(1);
      break;
    case Ensemble::k_out:
      r.upper = 1 - a / (BigInt(2 * k) * k * (5 * k + 1));
      if (k >= 2) {
        const Rational low = 1 - 3 * a / (4 * (Rational(k) * k - 1));
        r.lower = RatioBound{low, low < 0};
      }
      break;
    case Ensemble::k_regular:
      if (k >= 2) {
        r.upper = 1 - 2 * a / (Rational(k) * (k - 1));
        const Rational low = 1 - 12 * a / (Rational(k) * k - 1);
        r.lower = RatioBound{low, low < 0};
      }
      break;
  }

  if (q.n) {
    if (q.model == Ensemble::k_regular && q.k >= 2)
      r.reg_exponent_terms = {Rational(BigInt(k) * *q.n, 2), *q.n * q.alpha / (k - 1)};
    const LogCardinality card = log_cardinality(q, kDefaultEnumerationCap, true);
    r.finite_n_log_denominator = card.log_value;
    r.denominator_exponent_only = card.exponent_only;
  }
  return r;
}

LogCardinality log_cardinality(const BoundQuery& q, std::uint64_t regular_cap,
                               bool allow_exponent_only) {
  if (!q.n) throw UsageError("log-cardinality needs n");
  if (*q.n > std::numeric_limits<int>::max()) throw UsageError("n too large");
  const auto n = static_cast<int>(*q.n);

  EnsembleSpec spec{q.model, n, q.k, 0};
  spec.check();

  switch (q.model) {
    case Ensemble::general:
      return {log_big(count(spec)), false};
    case Ensemble::k_out:
      // n * log C(n-1, k), kept exact until the final conversion
      return {n == 0 ? 0.0 : n * log_big(binomial(n - 1, q.k)), false};
    case Ensemble::k_regular: {
      const BigInt work = matching_count(static_cast<std::int64_t>(n) * q.k);
      if (work <= regular_cap) return {log_big(count(spec, regular_cap)), false};
      if (!allow_exponent_only)
        throw RefusalError("exact k-regular cardinality unavailable: " + work.str() +
                           " half-edge matchings exceed cap " + std::to_string(regular_cap) +
                           "; request the exponent-only form");
      const double exponent =
          (static_cast<double>(q.k) * n / 2.0) * std::log(static_cast<double>(n));
      return {exponent, true};
    }
  }
  return {0, false};
}

double vu_tail_exponent(std::int64_t n, const Rational& alpha) {
  if (n < 1) throw UsageError("tail exponent needs n >= 1");
  return std::cbrt(to_double(alpha)) * std::sqrt(static_cast<double>(n));
}

double counter_exponent(std::int64_t n, const Rational& alpha) {
  if (n < 1) throw UsageError("counting exponent needs n >= 1");
  const double an = to_double(alpha) * static_cast<double>(n);
  return std::pow(an, 2.0 / 3.0) * std::log(static_cast<double>(n));
}

ClusterDecomposition lower_bound_decomposition(std::int64_t n, int k, const Rational& alpha) {
  if (k < 2) throw UsageError("cluster decomposition needs k >= 2");
  if (n < 1) throw UsageError("cluster decomposition needs n >= 1");
  if (alpha < 0) throw UsageError("cluster decomposition needs alpha >= 0");

  ClusterDecomposition d;
  const BigInt per_cluster = 8 * binomial(k + 1, 3);
  d.clusters = alpha * n / per_cluster;
  d.remainder = n - (k + 1) * d.clusters;
  d.cluster_links = k * d.clusters;
  d.remainder_links = k * d.remainder;
  d.total = d.cluster_links + d.remainder_links;
  d.ratio = d.total / (Rational(k) * n);
  return d;
}

}  // namespace tdl
