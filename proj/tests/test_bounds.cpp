#include "doctest.h"

#include "tdl/bounds.hpp"
#include "tdl/errors.hpp"
#include "tdl/numeric.hpp"

#include <cmath>

using tdl::BoundQuery;
using tdl::Ensemble;
using tdl::Rational;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("rho values") {
  CHECK(tdl::rho(1) == Rational(1, 12));
  CHECK(tdl::rho(2) == Rational(1, 44));
  CHECK(tdl::rho(3) == Rational(1, 96));
  CHECK(tdl::rho(10) == Rational(1, 1020));
  CHECK_THROWS_AS(tdl::rho(0), tdl::UsageError);
}

TEST_CASE("k-out ratios at k = 2, alpha = 3/10") {
  const auto r = tdl::theorem_ratios({Ensemble::k_out, {}, 2, Rational(3, 10)});
  REQUIRE(r.lower.has_value());
  REQUIRE(r.upper.has_value());
  CHECK(r.lower->value == Rational(37, 40));  // 0.925
  CHECK_FALSE(r.lower->vacuous);
  CHECK(*r.upper == Rational(877, 880));
  CHECK(r.rho_k == Rational(1, 44));
}

TEST_CASE("k-out upper bound is 1 - alpha rho(k)/k") {
  for (int k = 1; k <= 20; ++k) {
    for (const Rational& alpha : {Rational(1, 10), Rational(1, 2), Rational(2)}) {
      const auto r = tdl::theorem_ratios({Ensemble::k_out, {}, k, alpha});
      REQUIRE(r.upper.has_value());
      CHECK(*r.upper == 1 - alpha * tdl::rho(k) / k);
    }
  }
}

TEST_CASE("k-out k = 1 has an upper ratio but no lower ratio") {
  const auto r = tdl::theorem_ratios({Ensemble::k_out, {}, 1, Rational(1, 2)});
  CHECK_FALSE(r.lower.has_value());
  REQUIRE(r.upper.has_value());
  CHECK(*r.upper == Rational(23, 24));  // 1 - (1/2)/12
}

TEST_CASE("k-regular ratios") {
  const auto r = tdl::theorem_ratios({Ensemble::k_regular, {}, 3, Rational(1, 2)});
  REQUIRE(r.lower.has_value());
  REQUIRE(r.upper.has_value());
  CHECK(r.lower->value == Rational(1, 4));  // 1 - 6/8
  CHECK(*r.upper == Rational(5, 6));        // 1 - 1/6

  const auto vac = tdl::theorem_ratios({Ensemble::k_regular, {}, 2, Rational(1)});
  CHECK(vac.lower->value == Rational(-3));
  CHECK(vac.lower->vacuous);
  CHECK(*vac.upper == Rational(0));

  const auto none = tdl::theorem_ratios({Ensemble::k_regular, {}, 1, Rational(1)});
  CHECK_FALSE(none.lower.has_value());
  CHECK_FALSE(none.upper.has_value());
}

TEST_CASE("general ratios are identically one") {
  for (const Rational& alpha : {Rational(0), Rational(1, 3), Rational(10)}) {
    const auto r = tdl::theorem_ratios({Ensemble::general, {}, 4, alpha});
    CHECK(r.lower->value == Rational(1));
    CHECK(*r.upper == Rational(1));
  }
}

TEST_CASE("lower <= upper <= 1, tightening in k") {
  for (const auto model : {Ensemble::k_out, Ensemble::k_regular}) {
    for (const Rational& alpha : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
      Rational prev_lower(-1000), prev_upper(0);
      for (int k = 2; k <= 64; ++k) {
        const auto r = tdl::theorem_ratios({model, {}, k, alpha});
        REQUIRE(r.lower.has_value());
        REQUIRE(r.upper.has_value());
        CHECK(r.lower->value <= *r.upper);
        CHECK(*r.upper <= 1);
        CHECK(r.lower->vacuous == (r.lower->value < 0));
        if (k > 2) {
          CHECK(r.lower->value > prev_lower);
          CHECK(*r.upper > prev_upper);
        }
        prev_lower = r.lower->value;
        prev_upper = *r.upper;
      }
    }
  }
}

TEST_CASE("alpha = 0 collapses both ratios to one") {
  for (const auto model : {Ensemble::k_out, Ensemble::k_regular}) {
    const auto r = tdl::theorem_ratios({model, {}, 5, Rational(0)});
    CHECK(r.lower->value == Rational(1));
    CHECK(*r.upper == Rational(1));
  }
}

TEST_CASE("log-cardinalities at finite n") {
  BoundQuery q{Ensemble::general, 4, 1, Rational(0)};
  CHECK(tdl::log_cardinality(q).log_value == doctest::Approx(std::log(15.0)).epsilon(1e-12));

  q = {Ensemble::k_out, 4, 2, Rational(0)};
  CHECK(tdl::log_cardinality(q).log_value == doctest::Approx(4 * std::log(3.0)).epsilon(1e-12));

  q = {Ensemble::k_regular, 6, 2, Rational(0)};
  const auto card = tdl::log_cardinality(q);
  CHECK(card.log_value == doctest::Approx(std::log(70.0)).epsilon(1e-12));
  CHECK_FALSE(card.exponent_only);
}

TEST_CASE("k-regular log-cardinality above cap refuses or degrades explicitly") {
  const BoundQuery q{Ensemble::k_regular, 40, 3, Rational(0)};
  CHECK_THROWS_AS(tdl::log_cardinality(q), tdl::RefusalError);
  const auto fallback = tdl::log_cardinality(q, tdl::kDefaultEnumerationCap, true);
  CHECK(fallback.exponent_only);
  CHECK(fallback.log_value == doctest::Approx(60.0 * std::log(40.0)).epsilon(1e-12));
}

TEST_CASE("log-cardinality needs n") {
  CHECK_THROWS_AS(tdl::log_cardinality({Ensemble::k_out, {}, 2, Rational(0)}), tdl::UsageError);
}

TEST_CASE("finite-n report fields") {
  const auto r = tdl::theorem_ratios({Ensemble::k_regular, 6, 2, Rational(1, 2)});
  REQUIRE(r.reg_exponent_terms.has_value());
  CHECK(r.reg_exponent_terms->first == Rational(6));   // kn/2
  CHECK(r.reg_exponent_terms->second == Rational(3));  // alpha n/(k-1)
  REQUIRE(r.finite_n_log_denominator.has_value());
  CHECK(*r.finite_n_log_denominator == doctest::Approx(std::log(70.0)).epsilon(1e-12));
  CHECK_FALSE(r.denominator_exponent_only);
}

TEST_CASE("tail and counting exponents") {
  CHECK(tdl::vu_tail_exponent(100, Rational(1, 2)) ==
        doctest::Approx(std::cbrt(0.5) * 10.0).epsilon(1e-12));
  CHECK(tdl::counter_exponent(100, Rational(1, 2)) ==
        doctest::Approx(std::pow(50.0, 2.0 / 3.0) * std::log(100.0)).epsilon(1e-12));
  // the tail exponent loses to the counting exponent at scale
  CHECK(tdl::vu_tail_exponent(1000000, Rational(1, 2)) <
        tdl::counter_exponent(1000000, Rational(1, 2)));
  CHECK_THROWS_AS(tdl::vu_tail_exponent(0, Rational(1)), tdl::UsageError);
}

TEST_CASE("cluster decomposition reproduces the lower ratio exactly") {
  const auto d = tdl::lower_bound_decomposition(30, 2, Rational(3, 10));
  CHECK(d.clusters == Rational(9, 8));
  CHECK(d.remainder == Rational(213, 8));
  CHECK(d.cluster_links == Rational(9, 4));
  CHECK(d.remainder_links == Rational(213, 4));
  CHECK(d.total == Rational(111, 2));
  CHECK(d.ratio == Rational(37, 40));

  for (int k = 2; k <= 6; ++k)
    for (const Rational& alpha : {Rational(1, 10), Rational(3, 10)})
      for (std::int64_t n : {30, 100}) {
        const auto dec = tdl::lower_bound_decomposition(n, k, alpha);
        const auto r = tdl::theorem_ratios({Ensemble::k_out, {}, k, alpha});
        CHECK(dec.ratio == r.lower->value);
        CHECK(dec.cluster_links + dec.remainder_links == dec.total);
        CHECK(dec.remainder + (k + 1) * dec.clusters == n);
      }
  CHECK_THROWS_AS(tdl::lower_bound_decomposition(30, 1, Rational(1)), tdl::UsageError);
}

TEST_SUITE_END();
