// Acceptance gate: each numbered check prints one [PASS]/[FAIL] line with
// its runtime; the process exits nonzero if any check fails. Tolerances
// and budgets are pinned here, in code, on purpose.

#include "tdl/bounds.hpp"
#include "tdl/census.hpp"
#include "tdl/census_naive.hpp"
#include "tdl/constructions.hpp"
#include "tdl/ensembles.hpp"
#include "tdl/errors.hpp"
#include "tdl/experiments.hpp"
#include "tdl/numeric.hpp"
#include "tdl/rng.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

namespace {

using tdl::AnyGraph;
using tdl::BigInt;
using tdl::CensusReport;
using tdl::Ensemble;
using tdl::EnsembleSpec;
using tdl::Rational;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;  // failures, plus evidence worth printing
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.notes.push_back(what);
  }
}

void note(Outcome& o, const std::string& line) { o.notes.push_back("| " + line); }

bool reports_equal(const CensusReport& a, const CensusReport& b) {
  if (a.t != b.t || a.round_count != b.round_count || a.frustrated_count != b.frustrated_count)
    return false;
  if (a.ell_triang != b.ell_triang || a.link_count != b.link_count) return false;
  if (a.records != b.records) return false;
  if (a.link_endpoints != b.link_endpoints) return false;
  if (a.occupancy.size() != b.occupancy.size()) return false;
  for (std::size_t i = 0; i < a.occupancy.size(); ++i) {
    if (a.occupancy[i].round != b.occupancy[i].round) return false;
    if (a.occupancy[i].frustrated != b.occupancy[i].frustrated) return false;
    if (a.occupancy[i].undirected != b.occupancy[i].undirected) return false;
  }
  return a.anchor_round == b.anchor_round && a.anchor_frustrated == b.anchor_frustrated &&
         a.anchor_total == b.anchor_total && a.in_degrees == b.in_degrees;
}

// --- 1. counting convention on the complete 2-out triple ------------------

void criterion_1(Outcome& o) {
  const tdl::KOutDigraph triple(3, {{2, 3}, {1, 3}, {1, 2}});
  (void)tdl::count_kout(triple);  // warm the caches before timing

  const auto start = std::chrono::steady_clock::now();
  const CensusReport r = tdl::count_kout(triple);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  expect(o, r.t == 8, "t = " + std::to_string(r.t) + ", want 8");
  expect(o, r.round_count == 2, "round = " + std::to_string(r.round_count) + ", want 2");
  expect(o, r.frustrated_count == 6, "frustrated = " + std::to_string(r.frustrated_count) + ", want 6");
  expect(o, r.ell_triang == 6, "ell_triang = " + std::to_string(r.ell_triang) + ", want 6");
  expect(o, r.link_count == 6, "link_count = " + std::to_string(r.link_count) + ", want 6");
  expect(o, ms < 1.0, "census took " + std::to_string(ms) + " ms, budget 1 ms");
}

// --- 2. fast census == naive oracle ---------------------------------------

void criterion_2(Outcome& o) {
  const std::uint64_t base = 0x5eedf00dull;
  for (int k : {2, 3, 4})
    for (int n : {10, 30}) {
      for (int i = 0; i < 1000; ++i) {
        tdl::Rng rng(tdl::derive_seed(base, (static_cast<std::uint64_t>(k) * 1000 + n) * 10000 + i));
        const tdl::KOutDigraph g = tdl::sample_kout(n, k, rng);
        const CensusReport fast = tdl::count_kout(g);
        const CensusReport naive = tdl::count_kout_naive(g);
        if (!reports_equal(fast, naive)) {
          expect(o, false,
                 "mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                     " sample " + std::to_string(i));
          return;
        }
      }
    }
}

// --- 3. lemma suite over random samples -----------------------------------

void criterion_3(Outcome& o) {
  const std::uint64_t base = 0xacce97edull;
  int skipped = 0;
  for (Ensemble model : {Ensemble::k_out, Ensemble::k_regular})
    for (int k : {2, 3, 4})
      for (int n : {50, 200}) {
        if (model == Ensemble::k_regular && (static_cast<std::int64_t>(n) * k) % 2 != 0) {
          ++skipped;  // no such ensemble: the degree sum would be odd
          continue;
        }
        for (int i = 0; i < 1000; ++i) {
          EnsembleSpec spec{model, n, k,
                            tdl::derive_seed(base, (static_cast<std::uint64_t>(k) * 1000 + n) * 100000 +
                                                       static_cast<std::uint64_t>(i) * 2 +
                                                       (model == Ensemble::k_out ? 0 : 1))};
          const AnyGraph g = tdl::sample(spec);
          const CensusReport r = tdl::census_of(g, {false});
          const auto bad = tdl::occupancy_violations(r, k, model);
          if (!bad.empty()) {
            expect(o, false, "occupancy violation (" + bad.front().subject + ": " + bad.front().rule + ")");
            return;
          }
          const auto t = static_cast<std::int64_t>(r.t);
          if (model == Ensemble::k_out) {
            if (t > 2 * k * r.ell_triang || r.ell_triang > 3 * t) {
              expect(o, false, "link sandwich broken: t=" + std::to_string(t) +
                                   " ell=" + std::to_string(r.ell_triang) + " k=" + std::to_string(k));
              return;
            }
            const auto vi = tdl::product_vi_bound(r, k);
            if (vi.product_log > vi.bound_log + 1e-9) {
              expect(o, false, "in-degree product bound broken at k=" + std::to_string(k) +
                                   " n=" + std::to_string(n));
              return;
            }
            const auto cap_r = static_cast<std::uint32_t>(k) * k;
            const auto cap_f = static_cast<std::uint32_t>(k) * (k - 1);
            for (int v = 0; v < n; ++v)
              if (r.anchor_round[v] > cap_r || r.anchor_frustrated[v] > cap_f) {
                expect(o, false, "anchor cap broken at node " + std::to_string(v + 1));
                return;
              }
          } else {
            // regular analog: each edge carries at most k-1 triangles
            if (3 * t > static_cast<std::int64_t>(k - 1) * r.ell_triang || r.ell_triang > 3 * t) {
              expect(o, false, "edge sandwich broken: t=" + std::to_string(t) +
                                   " ell=" + std::to_string(r.ell_triang) + " k=" + std::to_string(k));
              return;
            }
          }
        }
      }
  if (skipped > 0)
    note(o, std::to_string(skipped) + " (model,k,n) cell(s) skipped: odd degree sum has no graphs");
}

// --- 4. construction exactness --------------------------------------------

std::uint64_t remainder_triangles(const AnyGraph& g, const tdl::ConstructionPlan& p) {
  const int r = static_cast<int>(p.remainder);
  if (r == 0) return 0;
  const int start = p.n - r;  // remainder nodes carry the highest labels
  if (std::holds_alternative<tdl::KOutDigraph>(g)) {
    const auto& d = std::get<tdl::KOutDigraph>(g);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(r));
    for (int u = start + 1; u <= p.n; ++u)
      for (int v : d.out(u))
        if (v > start) out[static_cast<std::size_t>(u - start - 1)].push_back(v - start);
    return tdl::count_kout(tdl::KOutDigraph(r, std::move(out)), {false}).t;
  }
  const auto& u = std::get<tdl::UndirectedGraph>(g);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : u.edges())
    if (a > start && b > start) edges.emplace_back(a - start, b - start);
  return tdl::count_undirected(tdl::UndirectedGraph(r, std::move(edges)), {false}).t;
}

void criterion_4(Outcome& o) {
  struct Case {
    Ensemble model;
    int n;
    int k;
    std::int64_t t;
  };
  std::vector<Case> cases;
  for (std::int64_t c : {1, 2, 3}) cases.push_back({Ensemble::k_out, 100, 2, 8 * c});
  cases.push_back({Ensemble::k_out, 10000, 2, 32});
  for (std::int64_t c : {1, 2, 3}) cases.push_back({Ensemble::k_out, 100, 3, 32 * c});
  for (std::int64_t c : {1, 2, 3, 4}) cases.push_back({Ensemble::k_regular, static_cast<int>(3 * c + 20), 2, c});
  for (std::int64_t c : {1, 2, 3}) cases.push_back({Ensemble::k_regular, static_cast<int>(4 * c + 20), 3, 4 * c});
  for (std::int64_t t : {1, 4, 10}) cases.push_back({Ensemble::general, 30, 2, t});
  for (std::int64_t t : {4, 10, 20}) cases.push_back({Ensemble::general, 30, 3, t});
  expect(o, cases.size() == 20, "plan roster holds " + std::to_string(cases.size()) + " entries, want 20");

  for (const auto& c : cases) {
    const std::string tag = std::string(tdl::to_string(c.model)) + " n=" + std::to_string(c.n) +
                            " k=" + std::to_string(c.k) + " t=" + std::to_string(c.t);
    try {
      const auto p = tdl::plan(c.model, c.n, c.k, c.t);
      const AnyGraph g = tdl::build(p);
      if (!tdl::validate(g, c.model, c.k).ok) {
        expect(o, false, tag + ": built graph fails role validation");
        continue;
      }
      const auto census = tdl::census_of(g, {false});
      expect(o, static_cast<std::int64_t>(census.t) == p.predicted_t,
             tag + ": census " + std::to_string(census.t) + " != predicted " +
                 std::to_string(p.predicted_t));
      const auto rem = remainder_triangles(g, p);
      expect(o, rem == 0, tag + ": remainder census " + std::to_string(rem) + " != 0");
    } catch (const std::exception& e) {
      expect(o, false, tag + ": " + e.what());
    }
  }
}

// --- 5. bound formulas, symbolically ---------------------------------------

void criterion_5(Outcome& o) {
  expect(o, tdl::rho(2) == Rational(1, 44), "rho(2) != 1/44");
  expect(o, tdl::rho(3) == Rational(1, 96), "rho(3) != 1/96");

  {
    const auto r = tdl::theorem_ratios({Ensemble::k_out, {}, 2, Rational(3, 10)});
    expect(o, r.lower && r.lower->value == Rational(37, 40), "k-out lower(2, 3/10) != 37/40");
    expect(o, r.upper && *r.upper == Rational(877, 880), "k-out upper(2, 3/10) != 877/880");
  }
  {
    const auto r = tdl::theorem_ratios({Ensemble::k_regular, {}, 3, Rational(1, 2)});
    expect(o, r.lower && r.lower->value == Rational(1, 4), "k-regular lower(3, 1/2) != 1/4");
    expect(o, r.upper && *r.upper == Rational(5, 6), "k-regular upper(3, 1/2) != 5/6");
  }

  const std::vector<Rational> alphas{Rational(1, 10), Rational(1, 2), Rational(1), Rational(3)};
  for (int k = 2; k <= 64; ++k) {
    const Rational kk(k);
    for (const auto& a : alphas) {
      const auto ko = tdl::theorem_ratios({Ensemble::k_out, {}, k, a});
      const Rational ko_lower = 1 - 3 * a / (4 * (kk * kk - 1));
      const Rational ko_upper = 1 - a / (2 * kk * kk * (5 * kk + 1));
      expect(o, ko.lower && ko.lower->value == ko_lower, "k-out lower formula broke at k=" + std::to_string(k));
      expect(o, ko.upper && *ko.upper == ko_upper, "k-out upper formula broke at k=" + std::to_string(k));
      expect(o, ko.upper && *ko.upper == 1 - a * tdl::rho(k) / k, "rho identity broke at k=" + std::to_string(k));

      const auto kr = tdl::theorem_ratios({Ensemble::k_regular, {}, k, a});
      const Rational kr_lower = 1 - 12 * a / (kk * kk - 1);
      const Rational kr_upper = 1 - 2 * a / (kk * (kk - 1));
      expect(o, kr.lower && kr.lower->value == kr_lower, "k-regular lower formula broke at k=" + std::to_string(k));
      expect(o, kr.upper && *kr.upper == kr_upper, "k-regular upper formula broke at k=" + std::to_string(k));

      for (const auto* r : {&ko, &kr}) {
        expect(o, r->lower->value <= *r->upper, "lower > upper at k=" + std::to_string(k));
        expect(o, *r->upper <= Rational(1), "upper > 1 at k=" + std::to_string(k));
        expect(o, r->lower->vacuous == (r->lower->value < 0), "vacuous flag wrong at k=" + std::to_string(k));
      }

      const auto gen = tdl::theorem_ratios({Ensemble::general, {}, k, a});
      expect(o, gen.lower && gen.lower->value == Rational(1) && gen.upper && *gen.upper == Rational(1),
             "general ratios must be exactly 1");
    }
  }
}

// --- 6. exhaustive ensemble counts -----------------------------------------

std::uint64_t drained(tdl::EnumerationCursor cur) {
  std::uint64_t seen = 0;
  while (cur.next()) ++seen;
  return seen;
}

void criterion_6(Outcome& o) {
  const std::vector<std::pair<int, std::uint64_t>> kout{{3, 1}, {4, 81}, {5, 7776}};
  for (const auto& [n, want] : kout) {
    const EnsembleSpec spec{Ensemble::k_out, n, 2, 0};
    expect(o, tdl::count(spec) == want, "k-out count n=" + std::to_string(n));
    expect(o, drained(tdl::enumerate(spec)) == want, "k-out enumeration length n=" + std::to_string(n));
  }

  const std::vector<std::tuple<int, int, std::uint64_t>> general{
      {3, 1, 1}, {4, 1, 15}, {5, 1, 252}, {6, 1, 5005}, {5, 2, 1}, {6, 2, 455}};
  for (const auto& [n, k, want] : general) {
    const EnsembleSpec spec{Ensemble::general, n, k, 0};
    expect(o, tdl::count(spec) == want,
           "general count n=" + std::to_string(n) + " k=" + std::to_string(k));
    expect(o, drained(tdl::enumerate(spec)) == want,
           "general enumeration length n=" + std::to_string(n) + " k=" + std::to_string(k));
  }

  for (const auto& [n, want] : std::vector<std::pair<int, std::uint64_t>>{{5, 12}, {6, 70}}) {
    tdl::RegularEnumerator en(n, 2);
    std::uint64_t seen = 0;
    while (en.next()) ++seen;
    expect(o, seen == want, "2-regular enumeration n=" + std::to_string(n) + " gave " +
                                std::to_string(seen) + ", want " + std::to_string(want));
  }
}

// --- 7. distributional shape at desk scale ----------------------------------

void criterion_7(Outcome& o) {
  const auto ladder = tdl::mean_ladder(Ensemble::k_regular, 3, {200, 2000}, 10000, 0x1adde12ull, 0);
  const double gap = std::abs(ladder[0].mean - ladder[1].mean);
  const double pooled = std::sqrt(ladder[0].std_error * ladder[0].std_error +
                                  ladder[1].std_error * ladder[1].std_error);
  note(o, "3-regular mean t: n=200 -> " + std::to_string(ladder[0].mean) + ", n=2000 -> " +
              std::to_string(ladder[1].mean) + " (gap " + std::to_string(gap / pooled) + " pooled SE)");
  expect(o, gap < 3 * pooled, "means drift apart: gap " + std::to_string(gap) + " vs 3*SE " +
                                  std::to_string(3 * pooled));

  const auto shape = tdl::poisson_check({Ensemble::k_out, 2000, 2, 0x90155071ull}, 10000, 0);
  note(o, "2-out n=2000: lambda_hat " + std::to_string(shape.lambda_hat) + ", TV " +
              std::to_string(shape.tv_distance));
  expect(o, shape.tv_distance < 0.05,
         "TV to Poisson(mean) = " + std::to_string(shape.tv_distance) + ", budget 0.05");
}

// --- 8. coagulation direction, exhaustively ---------------------------------

void criterion_8(Outcome& o) {
  const EnsembleSpec spec{Ensemble::k_out, 6, 2, 0};
  const tdl::CoagulationCondition cond{2, true};
  const auto a = tdl::coagulation_exact(spec, cond, 1);
  const auto b = tdl::coagulation_exact(spec, cond, 3);

  expect(o, a.exact, "statistic must be exact");
  expect(o, a.class_size > 0, "conditioned class is empty");
  expect(o, a.class_size == b.class_size && a.sharing == b.sharing &&
                a.share_fraction == b.share_fraction,
         "recomputation disagrees");
  char line[160];
  std::snprintf(line, sizeof line,
                "2-out n=6, t >= 2: class %s, share_fraction %.6f -> %s link-sharing",
                a.class_size.str().c_str(), a.share_fraction,
                a.predominantly_sharing ? "predominantly" : "NOT predominantly");
  note(o, line);
}

// --- 9. finite-n sandwich tables --------------------------------------------

void criterion_9(Outcome& o) {
  struct Block {
    Ensemble model;
    std::vector<int> ns;
    int k;
  };
  // alpha 3/2 reaches populated classes everywhere; alpha 1/2 exercises
  // rounding and the empty-class path
  for (const auto& alpha : {Rational(3, 2), Rational(1, 2)})
  for (const auto& block : {Block{Ensemble::k_out, {4, 5}, 2}, Block{Ensemble::general, {6}, 2}}) {
    const auto rows = tdl::sandwich_table(block.model, block.ns, block.k, alpha, 0);
    for (const auto& row : rows) {
      char line[200];
      if (row.empty_class) {
        std::snprintf(line, sizeof line, "%s n=%d k=%d t=%lld: empty class (numerator log 0)",
                      std::string(tdl::to_string(block.model)).c_str(), row.n, block.k,
                      static_cast<long long>(row.t));
      } else {
        std::snprintf(line, sizeof line, "%s n=%d k=%d t=%lld: log num %.4f <= log den %.4f (ratio %.4f)",
                      std::string(tdl::to_string(block.model)).c_str(), row.n, block.k,
                      static_cast<long long>(row.t), row.log_numerator, row.log_denominator, row.ratio);
        expect(o, row.log_numerator <= row.log_denominator + 1e-12,
               "numerator exceeds denominator at n=" + std::to_string(row.n));
      }
      note(o, line);
    }
  }
}

struct Criterion {
  int id;
  const char* label;
  double budget_s;  // 0 = no runtime clause
  void (*run)(Outcome&);
};

}  // namespace

int main() {
  const std::vector<Criterion> gate{
      {1, "counting convention on the complete 2-out triple", 0.001, criterion_1},
      {2, "fast census equals the naive oracle", 30, criterion_2},
      {3, "lemma suite over random samples", 120, criterion_3},
      {4, "constructions hit their targets exactly", 10, criterion_4},
      {5, "bound formulas match symbolically", 0, criterion_5},
      {6, "exhaustive counts match the closed forms", 60, criterion_6},
      {7, "triangle law is stable in n and near-Poisson", 300, criterion_7},
      {8, "coagulation statistic is exact and stable", 180, criterion_8},
      {9, "conditioned classes never out-count the model", 0, criterion_9},
  };

  int failures = 0;
  for (const auto& c : gate) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      expect(o, false, std::string("unexpected exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && s > c.budget_s) {
      o.ok = false;
      o.notes.push_back("over budget: " + std::to_string(s) + " s > " + std::to_string(c.budget_s) + " s");
    }
    std::printf("[%s] %d. %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.label, s);
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
