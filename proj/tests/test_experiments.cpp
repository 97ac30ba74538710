#include "doctest.h"

#include "tdl/ensembles.hpp"
#include "tdl/errors.hpp"
#include "tdl/experiments.hpp"
#include "tdl/numeric.hpp"

#include <cmath>
#include <cstdlib>

using tdl::BigInt;
using tdl::Ensemble;
using tdl::EnsembleSpec;
using tdl::Rational;

TEST_SUITE_BEGIN("experiments");

TEST_CASE("exact histograms with hand-countable classes") {
  // the single complete 2-out triple
  auto h = tdl::triangle_histogram_exact({Ensemble::k_out, 3, 2, 0});
  CHECK(h.exact);
  CHECK(h.total == 1);
  REQUIRE(h.counts.size() == 1);
  CHECK(h.counts.at(8) == 1);
  CHECK(h.mean == doctest::Approx(8.0));
  CHECK(h.variance == doctest::Approx(0.0));

  // K3 is the only general graph with n = 3, k = 1
  h = tdl::triangle_histogram_exact({Ensemble::general, 3, 1, 0});
  CHECK(h.total == 1);
  CHECK(h.counts.at(1) == 1);

  // n = 4, k = 1: remove two of K4's edges; 3 disjoint pairs kill the
  // triangles, the 12 sharing pairs leave exactly one
  h = tdl::triangle_histogram_exact({Ensemble::general, 4, 1, 0});
  CHECK(h.total == 15);
  REQUIRE(h.counts.size() == 2);
  CHECK(h.counts.at(0) == 3);
  CHECK(h.counts.at(1) == 12);

  // 2-regular on six nodes: sixty hexagons, ten triangle pairs
  h = tdl::triangle_histogram_exact({Ensemble::k_regular, 6, 2, 0});
  CHECK(h.total == 70);
  REQUIRE(h.counts.size() == 2);
  CHECK(h.counts.at(0) == 60);
  CHECK(h.counts.at(2) == 10);
  CHECK(h.mean == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
  CHECK(h.variance == doctest::Approx(24.0 / 49.0).epsilon(1e-12));

  // 2-out on four nodes: the three C4 supports are the triangle-free class
  h = tdl::triangle_histogram_exact({Ensemble::k_out, 4, 2, 0});
  CHECK(h.total == 81);
  CHECK(h.counts.at(0) == 3);
  BigInt mass = 0;
  for (const auto& [t, c] : h.counts) mass += c;
  CHECK(mass == 81);
}

TEST_CASE("exact histogram is thread-count invariant") {
  const EnsembleSpec spec{Ensemble::k_out, 4, 2, 0};
  const auto one = tdl::triangle_histogram_exact(spec, 1);
  const auto three = tdl::triangle_histogram_exact(spec, 3);
  CHECK(one.counts == three.counts);
  CHECK(one.mean == three.mean);
}

TEST_CASE("exact histogram refuses oversized classes, naming the way out") {
  try {
    tdl::triangle_histogram_exact({Ensemble::general, 30, 2, 0});
    FAIL("expected refusal");
  } catch (const tdl::RefusalError& e) {
    CHECK(std::string(e.what()).find("Monte Carlo") != std::string::npos);
  }
  CHECK_THROWS_AS(tdl::triangle_histogram_exact({Ensemble::k_regular, 10, 3, 0}),
                  tdl::RefusalError);
}

TEST_CASE("Monte Carlo histogram: tallies, determinism, thread invariance") {
  const EnsembleSpec spec{Ensemble::k_out, 6, 2, 123};
  const auto a = tdl::triangle_histogram_mc(spec, 5000, 1);
  const auto b = tdl::triangle_histogram_mc(spec, 5000, 4);
  CHECK_FALSE(a.exact);
  CHECK(a.samples == 5000);
  CHECK(a.total == 5000);
  CHECK(a.counts == b.counts);

  EnsembleSpec reseeded = spec;
  reseeded.seed = 124;
  const auto c = tdl::triangle_histogram_mc(reseeded, 5000, 2);
  CHECK(a.counts != c.counts);
}

TEST_CASE("Monte Carlo tracks the exact law") {
  const EnsembleSpec spec{Ensemble::k_out, 4, 2, 2024};
  const auto exact = tdl::triangle_histogram_exact(spec);
  const std::uint64_t draws = 100000;
  const auto mc = tdl::triangle_histogram_mc(spec, draws, 2);

  double tv = 0;
  for (const auto& [t, c] : exact.counts) {
    const double p = tdl::to_double(Rational(c, exact.total));
    const auto it = mc.counts.find(t);
    const double q =
        it == mc.counts.end() ? 0.0 : tdl::to_double(Rational(it->second, BigInt(draws)));
    tv += std::abs(p - q);
  }
  for (const auto& [t, c] : mc.counts)
    if (!exact.counts.count(t)) tv += tdl::to_double(Rational(c, BigInt(draws)));
  tv /= 2;
  CHECK(tv < 0.02);
}

TEST_CASE("poisson comparison fields hang together") {
  const EnsembleSpec spec{Ensemble::k_out, 30, 2, 77};
  const auto c = tdl::poisson_check(spec, 4000, 2);
  CHECK(c.lambda_hat == doctest::Approx(c.histogram.mean));
  CHECK(c.tv_distance >= 0.0);
  CHECK(c.tv_distance <= 1.0);
  CHECK(c.truncation == c.histogram.counts.rbegin()->first + 10);

  const auto again = tdl::poisson_check(spec, 4000, 1);
  CHECK(again.tv_distance == c.tv_distance);  // thread count cannot matter
}

TEST_CASE("mean ladder rungs are deterministic and labeled") {
  const auto ladder = tdl::mean_ladder(Ensemble::k_out, 2, {20, 40, 20}, 1500, 9, 2);
  REQUIRE(ladder.size() == 3);
  CHECK(ladder[0].n == 20);
  CHECK(ladder[1].n == 40);
  CHECK(ladder[0].samples == 1500);
  CHECK(ladder[0].std_error > 0);
  // same n, same seed, same draw budget: the rung reproduces exactly
  CHECK(ladder[0].mean == ladder[2].mean);
  CHECK(ladder[0].std_error == ladder[2].std_error);
}

TEST_CASE("sandwich rows stay consistent with the exact histograms") {
  const auto rows = tdl::sandwich_table(Ensemble::k_out, {4, 5}, 2, Rational(1, 2), 2);
  REQUIRE(rows.size() == 2);

  CHECK(rows[0].n == 4);
  CHECK(rows[0].t == 2);
  CHECK_FALSE(rows[0].t_rounded);  // 1/2 * 4 is integral
  CHECK(rows[1].n == 5);
  CHECK(rows[1].t == 3);  // 5/2 rounds half-up
  CHECK(rows[1].t_rounded);

  for (const auto& row : rows) {
    const auto hist =
        tdl::triangle_histogram_exact({Ensemble::k_out, row.n, 2, 0});
    const bool has_class = hist.counts.count(row.t) != 0;
    CHECK(row.empty_class == !has_class);
    CHECK(row.log_denominator ==
          doctest::Approx(tdl::log_big(hist.total)).epsilon(1e-12));
    if (has_class) {
      CHECK(row.log_numerator == doctest::Approx(tdl::log_big(hist.counts.at(row.t))).epsilon(1e-12));
      CHECK(row.log_numerator <= row.log_denominator);
      CHECK(row.ratio == doctest::Approx(row.log_numerator / row.log_denominator));
    } else {
      CHECK(std::isnan(row.ratio));
    }
    // the asymptotic columns echo the closed forms
    CHECK(row.lower == doctest::Approx(0.875));          // 1 - 3(1/2)/12
    CHECK(row.upper == doctest::Approx(175.0 / 176.0));  // 1 - (1/2)/88
    CHECK_FALSE(row.lower_vacuous);
  }
}

TEST_CASE("sandwich table covers the general model too") {
  const auto rows = tdl::sandwich_table(Ensemble::general, {6}, 2, Rational(1, 2), 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].t == 3);
  CHECK(rows[0].log_denominator == doctest::Approx(std::log(455.0)).epsilon(1e-12));
  CHECK(rows[0].lower == doctest::Approx(1.0));
  CHECK(rows[0].upper == doctest::Approx(1.0));
  if (!rows[0].empty_class) CHECK(rows[0].log_numerator <= rows[0].log_denominator);
}

TEST_CASE("sandwich table is thread-count invariant") {
  const auto a = tdl::sandwich_table(Ensemble::k_out, {4, 5}, 2, Rational(1, 2), 1);
  const auto b = tdl::sandwich_table(Ensemble::k_out, {4, 5}, 2, Rational(1, 2), 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].empty_class == b[i].empty_class);
    if (!a[i].empty_class) CHECK(a[i].log_numerator == b[i].log_numerator);
    CHECK(a[i].log_denominator == b[i].log_denominator);
  }
}

TEST_CASE("coagulation on the forced triple: all eight triangles share links") {
  const auto s = tdl::coagulation_exact({Ensemble::k_out, 3, 2, 0}, {2, true});
  CHECK(s.exact);
  CHECK(s.class_size == 1);
  CHECK(s.sharing == 1);
  CHECK(s.share_fraction == doctest::Approx(1.0));
  CHECK(s.disjoint_fraction == doctest::Approx(0.0));
  CHECK(s.predominantly_sharing);
}

TEST_CASE("coagulation class sizes agree with the histogram") {
  const EnsembleSpec spec{Ensemble::k_out, 4, 2, 0};
  const auto hist = tdl::triangle_histogram_exact(spec);

  const auto at_least_two = tdl::coagulation_exact(spec, {2, true}, 2);
  BigInt expected = 0;
  for (const auto& [t, c] : hist.counts)
    if (t >= 2) expected += c;
  CHECK(at_least_two.class_size == expected);
  CHECK(at_least_two.share_fraction + at_least_two.disjoint_fraction ==
        doctest::Approx(1.0).epsilon(1e-12));

  const auto exactly_six = tdl::coagulation_exact(spec, {6, false}, 1);
  CHECK(exactly_six.class_size == hist.counts.at(6));
}

TEST_CASE("coagulation is recomputation-identical") {
  const EnsembleSpec spec{Ensemble::k_out, 5, 2, 0};
  const auto a = tdl::coagulation_exact(spec, {2, true}, 1);
  const auto b = tdl::coagulation_exact(spec, {2, true}, 3);
  CHECK(a.class_size == b.class_size);
  CHECK(a.sharing == b.sharing);
  CHECK(a.share_fraction == b.share_fraction);
}

TEST_CASE("Monte Carlo coagulation approaches the exact fraction") {
  const EnsembleSpec spec{Ensemble::k_out, 5, 2, 31};
  const auto exact = tdl::coagulation_exact(spec, {2, true});
  const auto mc = tdl::coagulation_mc(spec, {2, true}, 20000, 2);
  CHECK_FALSE(mc.exact);
  CHECK(mc.samples_drawn == 20000);
  CHECK(std::abs(mc.share_fraction - exact.share_fraction) < 0.05);
}

TEST_CASE("coagulation guardrails") {
  // conditioning below two triangles is meaningless here
  CHECK_THROWS_AS(tdl::coagulation_exact({Ensemble::k_out, 4, 2, 0}, {1, false}),
                  tdl::UsageError);
  // t = 2 is unreachable for n = 4, k = 2: the class is empty
  CHECK_THROWS_AS(tdl::coagulation_exact({Ensemble::k_out, 4, 2, 0}, {2, false}),
                  tdl::RefusalError);
  // same condition in MC mode: nothing is ever accepted
  CHECK_THROWS_AS(tdl::coagulation_mc({Ensemble::k_out, 4, 2, 9}, {2, false}, 3000, 1),
                  tdl::RefusalError);
}

TEST_SUITE_END();
