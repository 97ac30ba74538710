// tdl: sample, enumerate and census the three sparse ensembles; evaluate
// the closed-form bounds; run the desk-scale experiments.
//
// Exit codes: 0 success, 1 usage error, 2 capacity/feasibility refusal,
// 3 lemma violation. Stdout carries machine-readable JSON (or CSV with
// --csv); everything else goes to stderr.

#include "CLI11.hpp"

#include "tdl/bounds.hpp"
#include "tdl/census.hpp"
#include "tdl/constructions.hpp"
#include "tdl/edge_list.hpp"
#include "tdl/ensembles.hpp"
#include "tdl/errors.hpp"
#include "tdl/experiments.hpp"
#include "tdl/graph.hpp"
#include "tdl/json_io.hpp"
#include "tdl/numeric.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

using nlohmann::json;

tdl::Ensemble model_from_name(const std::string& name) { return tdl::ensemble_from_string(name); }

// --threads wins; TDL_THREADS is the fallback; otherwise let the library
// pick the hardware parallelism.
int resolve_thread_request(int cli_threads) {
  if (cli_threads >= 0) return cli_threads;
  if (const char* env = std::getenv("TDL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0)
      throw tdl::UsageError(std::string("TDL_THREADS must be a nonnegative integer, got '") +
                            env + "'");
    return static_cast<int>(v);
  }
  return 0;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw tdl::UsageError("cannot open output file " + path);
  f << text;
  f.flush();
  if (!f) throw tdl::UsageError("write failed for " + path);
}

// JSON/CSV reports land on stdout unless --out redirects them.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

void emit_json(const json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

json link_strings(const tdl::AnyGraph& g) {
  json out = json::array();
  if (const auto* u = std::get_if<tdl::UndirectedGraph>(&g)) {
    for (const auto& [a, b] : u->edges()) out.push_back(std::to_string(a) + "--" + std::to_string(b));
  } else {
    const auto& d = std::get<tdl::KOutDigraph>(g);
    for (const auto& [a, b] : d.links()) out.push_back(std::to_string(a) + "->" + std::to_string(b));
  }
  return out;
}

tdl::AnyGraph read_graph(const std::string& path) {
  if (path == "-") return tdl::read_edge_list(std::cin);
  return tdl::read_edge_list_file(path);
}

// The alpha/t boundary: --t is taken verbatim, --alpha means t =
// round-half-up(alpha * n), and the rounding is echoed in the output.
struct TriangleTarget {
  std::int64_t t = 0;
  bool rounded = false;
  std::string alpha_text;  // empty when --t was given
};

TriangleTarget resolve_target(const std::string& alpha_text, std::optional<std::int64_t> t,
                              int n) {
  if (!alpha_text.empty()) {
    const tdl::Rational alpha = tdl::parse_rational(alpha_text);
    if (alpha < 0) throw tdl::UsageError("alpha must be nonnegative");
    const tdl::Rational scaled = alpha * n;
    return {tdl::round_half_up(scaled), !tdl::is_integer(scaled), alpha_text};
  }
  if (!t) throw tdl::UsageError("need --t or --alpha");
  if (*t < 0) throw tdl::UsageError("t must be nonnegative");
  return {*t, false, ""};
}

void attach_target(json& j, const TriangleTarget& target) {
  j["t"] = target.t;
  if (!target.alpha_text.empty()) {
    const tdl::Rational alpha = tdl::parse_rational(target.alpha_text);
    j["alpha"] = {{"fraction", tdl::rational_string(alpha)}, {"value", tdl::to_double(alpha)}};
    j["t_rounded"] = target.rounded;
  }
}

struct CommonFlags {
  std::string model = "k-out";
  int n = 0;
  int k = 0;
  std::uint64_t seed = 1;
  int threads = -1;
  std::uint64_t cap = tdl::kDefaultEnumerationCap;
  std::string out_path;
  bool csv = false;
};

void add_model_flags(CLI::App* cmd, CommonFlags& f, bool with_n = true) {
  cmd->add_option("--model", f.model, "general, k-out or k-regular")->capture_default_str();
  if (with_n) cmd->add_option("--n", f.n, "number of nodes")->required();
  cmd->add_option("--k", f.k, "per-node budget k")->required();
}

tdl::EnsembleSpec spec_of(const CommonFlags& f) {
  tdl::EnsembleSpec spec{model_from_name(f.model), f.n, f.k, f.seed};
  spec.check();
  return spec;
}

int run_sample(const CommonFlags& f) {
  const tdl::EnsembleSpec spec = spec_of(f);
  const tdl::AnyGraph g = tdl::sample(spec);
  json j;
  j["spec"] = tdl::to_json(spec);
  j["validation"] = tdl::to_json(tdl::validate(g, spec.model, spec.k));
  if (f.out_path.empty()) {
    j["links"] = link_strings(g);
  } else {
    write_file(f.out_path, tdl::edge_list_string(g));
    j["out"] = f.out_path;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_enumerate(const CommonFlags& f, std::uint64_t begin, std::uint64_t end,
                  std::uint64_t limit) {
  const tdl::EnsembleSpec spec = spec_of(f);
  const bool full = begin == 0 && end == 0;
  tdl::EnumerationCursor cursor =
      full ? tdl::enumerate(spec, f.cap) : tdl::enumerate_slice(spec, begin, end, f.cap);

  json graphs = json::array();
  std::uint64_t emitted = 0;
  bool truncated = false;
  std::uint64_t position = begin;
  while (auto g = cursor.next()) {
    if (limit != 0 && emitted == limit) {
      truncated = true;
      break;
    }
    graphs.push_back({{"position", position}, {"links", link_strings(*g)}});
    ++emitted;
    ++position;
  }
  if (truncated)
    std::cerr << "enumerate: stopped after --limit " << limit << " graphs; use --limit 0 for all\n";

  json j;
  j["spec"] = tdl::to_json(spec);
  j["workload"] = cursor.workload().str();
  if (!full) {
    j["begin"] = begin;
    j["end"] = end;
  }
  j["emitted"] = emitted;
  j["truncated"] = truncated;
  j["graphs"] = std::move(graphs);
  emit_json(j, f.out_path);
  return 0;
}

int run_count(const CommonFlags& f) {
  const tdl::EnsembleSpec spec = spec_of(f);
  json j;
  j["spec"] = tdl::to_json(spec);
  j["count"] = tdl::count(spec, f.cap).str();
  emit_json(j, f.out_path);
  return 0;
}

int run_census(const std::string& in_path, bool keep_records, int k_echo,
               const std::string& out_path) {
  const tdl::AnyGraph g = read_graph(in_path);
  const tdl::CensusReport report = tdl::census_of(g, {keep_records});
  json j = tdl::to_json(report);
  if (k_echo > 0) j["k"] = k_echo;
  emit_json(j, out_path);
  return 0;
}

int run_construct(const CommonFlags& f, const std::string& alpha_text,
                  std::optional<std::int64_t> t, bool plan_only,
                  std::optional<std::uint64_t> permute_seed) {
  const tdl::Ensemble model = model_from_name(f.model);
  const TriangleTarget target = resolve_target(alpha_text, t, f.n);
  const tdl::ConstructionPlan p = tdl::plan(model, f.n, f.k, target.t);

  json j;
  j["plan"] = tdl::to_json(p);
  attach_target(j, target);
  if (plan_only) {
    emit_json(j, f.out_path);
    return 0;
  }

  tdl::AnyGraph g = tdl::build(p);
  if (permute_seed) g = tdl::permute_labels(g, *permute_seed);

  const tdl::CensusReport check = tdl::census_of(g, {false});
  if (static_cast<std::int64_t>(check.t) != p.predicted_t)
    throw std::runtime_error("construction census " + std::to_string(check.t) +
                             " missed predicted t " + std::to_string(p.predicted_t));
  j["census_t"] = check.t;
  j["validation"] = tdl::to_json(tdl::validate(g, model, f.k));

  if (f.out_path.empty()) {
    j["links"] = link_strings(g);
  } else {
    write_file(f.out_path, tdl::edge_list_string(g));
    j["out"] = f.out_path;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_bounds(const CommonFlags& f, const std::string& alpha_text, std::optional<std::int64_t> n) {
  tdl::BoundQuery q;
  q.model = model_from_name(f.model);
  q.k = f.k;
  q.alpha = tdl::parse_rational(alpha_text);
  q.n = n;
  const tdl::BoundReport report = tdl::theorem_ratios(q);
  if (f.csv) {
    emit(tdl::bounds_csv(report), f.out_path);
    return 0;
  }
  json j = tdl::to_json(report);
  if (q.model == tdl::Ensemble::k_out && n && *n >= 1) {
    j["vu_tail_exponent"] = tdl::vu_tail_exponent(*n, q.alpha);
    j["counter_exponent"] = tdl::counter_exponent(*n, q.alpha);
    if (f.k >= 2) j["decomposition"] = tdl::to_json(tdl::lower_bound_decomposition(*n, f.k, q.alpha));
  }
  emit_json(j, f.out_path);
  return 0;
}

int run_histogram(const CommonFlags& f, const std::string& mode, std::uint64_t samples) {
  const tdl::EnsembleSpec spec = spec_of(f);
  const int threads = resolve_thread_request(f.threads);
  const tdl::HistogramResult h = mode == "exact"
                                     ? tdl::triangle_histogram_exact(spec, threads, f.cap)
                                     : tdl::triangle_histogram_mc(spec, samples, threads);
  if (f.csv)
    emit(tdl::histogram_csv(h), f.out_path);
  else
    emit_json(tdl::to_json(h), f.out_path);
  return 0;
}

int run_poisson(const CommonFlags& f, std::uint64_t samples) {
  const tdl::EnsembleSpec spec = spec_of(f);
  const tdl::PoissonComparison c =
      tdl::poisson_check(spec, samples, resolve_thread_request(f.threads));
  emit_json(tdl::to_json(c), f.out_path);
  return 0;
}

int run_sandwich(const CommonFlags& f, const std::vector<int>& n_values,
                 const std::string& alpha_text) {
  const tdl::Ensemble model = model_from_name(f.model);
  if (n_values.empty()) throw tdl::UsageError("need --n-list with at least one n");
  const tdl::Rational alpha = tdl::parse_rational(alpha_text);
  const auto rows =
      tdl::sandwich_table(model, n_values, f.k, alpha, resolve_thread_request(f.threads), f.cap);
  if (f.csv)
    emit(tdl::sandwich_csv(rows), f.out_path);
  else
    emit_json(tdl::to_json(rows), f.out_path);
  return 0;
}

int run_coagulation(const CommonFlags& f, const std::string& alpha_text,
                    std::optional<std::int64_t> t, bool at_least, const std::string& mode,
                    std::uint64_t samples) {
  const tdl::EnsembleSpec spec = spec_of(f);
  TriangleTarget target{2, false, ""};
  if (!alpha_text.empty() || t) target = resolve_target(alpha_text, t, f.n);
  const tdl::CoagulationCondition cond{target.t, at_least};
  const int threads = resolve_thread_request(f.threads);
  const tdl::CoagulationStat stat = mode == "exact"
                                        ? tdl::coagulation_exact(spec, cond, threads, f.cap)
                                        : tdl::coagulation_mc(spec, cond, samples, threads);
  json j = tdl::to_json(stat);
  attach_target(j, target);
  emit_json(j, f.out_path);
  return 0;
}

// Samples N graphs and insists every counting lemma holds on each; a
// single violation flips the exit code to 3 because it would falsify
// the counting rules, not just this run.
int run_check_lemmas(const CommonFlags& f, std::uint64_t samples, const std::string& in_path) {
  const tdl::Ensemble model = model_from_name(f.model);
  json j;
  std::vector<tdl::LemmaViolation> violations;
  std::uint64_t checked = 0;

  auto check_one = [&](const tdl::AnyGraph& g, int k) {
    const tdl::ValidationResult role = tdl::validate(g, model, k);
    for (const auto& v : role.violations)
      violations.push_back({"node " + std::to_string(v.node), "role: " + v.rule});
    const tdl::CensusReport r = tdl::census_of(g, {false});
    auto broken = tdl::occupancy_violations(r, k, model);
    violations.insert(violations.end(), broken.begin(), broken.end());
    ++checked;
  };

  if (!in_path.empty()) {
    check_one(read_graph(in_path), f.k);
    j["in"] = in_path;
  } else {
    const tdl::EnsembleSpec spec = spec_of(f);
    j["spec"] = tdl::to_json(spec);
    for (std::uint64_t i = 0; i < samples; ++i) {
      tdl::EnsembleSpec draw = spec;
      draw.seed = tdl::derive_seed(spec.seed, i);
      check_one(tdl::sample(draw), spec.k);
    }
  }

  j["graphs_checked"] = checked;
  j["violations"] = tdl::to_json(violations);
  j["ok"] = violations.empty();
  emit_json(j, f.out_path);
  if (!violations.empty()) {
    std::cerr << "check-lemmas: " << violations.size() << " violation(s) found\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangle-density laboratory for sparse random graph ensembles"};
  app.require_subcommand(1);

  int exit_code = 0;

  {
    auto f = std::make_shared<CommonFlags>();
    auto* cmd = app.add_subcommand("sample", "draw one uniform graph from a model");
    add_model_flags(cmd, *f);
    cmd->add_option("--seed", f->seed, "RNG stream id")->capture_default_str();
    cmd->add_option("--out", f->out_path, "write the edge list to this file");
    cmd->callback([f, &exit_code] { exit_code = run_sample(*f); });
  }

  {
    auto f = std::make_shared<CommonFlags>();
    auto begin = std::make_shared<std::uint64_t>(0);
    auto end = std::make_shared<std::uint64_t>(0);
    auto limit = std::make_shared<std::uint64_t>(1000);
    auto* cmd = app.add_subcommand("enumerate", "walk a model class exhaustively");
    add_model_flags(cmd, *f);
    cmd->add_option("--begin", *begin, "first rank of the slice");
    cmd->add_option("--end", *end, "one past the last rank (omit both for the full stream)");
    cmd->add_option("--limit", *limit, "emit at most this many graphs (0 = all)")
        ->capture_default_str();
    cmd->add_option("--cap", f->cap, "refuse workloads above this")->capture_default_str();
    cmd->add_option("--out", f->out_path, "write JSON here instead of stdout");
    cmd->callback([f, begin, end, limit, &exit_code] {
      exit_code = run_enumerate(*f, *begin, *end, *limit);
    });
  }

  {
    auto f = std::make_shared<CommonFlags>();
    auto* cmd = app.add_subcommand("count", "exact cardinality of a model class");
    add_model_flags(cmd, *f);
    cmd->add_option("--cap", f->cap, "k-regular matching workload cap")->capture_default_str();
    cmd->add_option("--out", f->out_path, "write JSON here instead of stdout");
    cmd->callback([f, &exit_code] { exit_code = run_count(*f); });
  }

  {
    auto in_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto k_echo = std::make_shared<int>(0);
    auto records = std::make_shared<bool>(false);
    auto* cmd = app.add_subcommand("census", "exact triangle census of an edge-list file");
    cmd->add_option("--in", *in_path, "edge-list file ('-' for stdin)")->required();
    cmd->add_option("--k", *k_echo, "echo the intended k in the report");
    cmd->add_flag("--records", *records, "include every triangle record");
    cmd->add_option("--out", *out_path, "write JSON here instead of stdout");
    cmd->callback([in_path, out_path, k_echo, records, &exit_code] {
      exit_code = run_census(*in_path, *records, *k_echo, *out_path);
    });
  }

  {
    auto f = std::make_shared<CommonFlags>();
    auto alpha = std::make_shared<std::string>();
    auto t = std::make_shared<std::optional<std::int64_t>>();
    auto plan_only = std::make_shared<bool>(false);
    auto permute = std::make_shared<std::optional<std::uint64_t>>();
    auto* cmd = app.add_subcommand("construct", "build a graph with an exact triangle count");
    add_model_flags(cmd, *f);
    auto* t_opt = cmd->add_option("--t", *t, "exact triangle target");
    auto* a_opt = cmd->add_option("--alpha", *alpha, "triangle density; t = round(alpha*n)");
    t_opt->excludes(a_opt);
    a_opt->excludes(t_opt);
    cmd->add_flag("--plan-only", *plan_only, "emit the plan without building");
    cmd->add_option("--permute-labels", *permute, "shuffle node labels with this seed");
    cmd->add_option("--out", f->out_path, "write the edge list to this file");
    cmd->callback([f, alpha, t, plan_only, permute, &exit_code] {
      exit_code = run_construct(*f, *alpha, *t, *plan_only, *permute);
    });
  }

  {
    auto f = std::make_shared<CommonFlags>();
    auto alpha = std::make_shared<std::string>("0");
    auto n = std::make_shared<std::optional<std::int64_t>>();
    auto* cmd = app.add_subcommand("bounds", "closed-form ratio bounds and exponents");
    add_model_flags(cmd, *f, false);
    cmd->add_option("--alpha", *alpha, "triangle density")->required();
    cmd->add_option("--n", *n, "also evaluate finite-n log-cardinalities");
    cmd->add_flag("--csv", f->csv, "CSV instead of JSON");
    cmd->add_option("--out", f->out_path, "write here instead of stdout");
    cmd->callback([f, alpha, n, &exit_code] { exit_code = run_bounds(*f, *alpha, *n); });
  }

  {
    auto f = std::make_shared<CommonFlags>();
    auto mode = std::make_shared<std::string>("exact");
    auto samples = std::make_shared<std::uint64_t>(100000);
    auto* cmd = app.add_subcommand("histogram", "triangle-count distribution over a model");
    add_model_flags(cmd, *f);
    cmd->add_option("--mode", *mode, "exact or mc")
        ->check(CLI::IsMember({"exact", "mc"}))
        ->capture_default_str();
    cmd->add_option("--samples", *samples, "Monte Carlo draws")->capture_default_str();
    cmd->add_option("--seed", f->seed, "RNG stream id")->capture_default_str();
    cmd->add_option("--threads", f->threads, "worker threads (default: TDL_THREADS or hardware)");
    cmd->add_option("--cap", f->cap, "exact-mode workload cap")->capture_default_str();
    cmd->add_flag("--csv", f->csv, "CSV instead of JSON");
    cmd->add_option("--out", f->out_path, "write here instead of stdout");
    cmd->callback([f, mode, samples, &exit_code] {
      exit_code = run_histogram(*f, *mode, *samples);
    });
  }

  {
    auto f = std::make_shared<CommonFlags>();
    auto samples = std::make_shared<std::uint64_t>(10000);
    auto* cmd = app.add_subcommand("poisson", "total-variation distance to Poisson(mean)");
    add_model_flags(cmd, *f);
    cmd->add_option("--samples", *samples, "Monte Carlo draws")->capture_default_str();
    cmd->add_option("--seed", f->seed, "RNG stream id")->capture_default_str();
    cmd->add_option("--threads", f->threads, "worker threads (default: TDL_THREADS or hardware)");
    cmd->add_option("--out", f->out_path, "write here instead of stdout");
    cmd->callback([f, samples, &exit_code] { exit_code = run_poisson(*f, *samples); });
  }

  {
    auto f = std::make_shared<CommonFlags>();
    auto n_values = std::make_shared<std::vector<int>>();
    auto alpha = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("sandwich", "finite-n conditioned-class ratios vs the bounds");
    add_model_flags(cmd, *f, false);
    cmd->add_option("--n-list", *n_values, "comma-separated n values")->delimiter(',')->required();
    cmd->add_option("--alpha", *alpha, "triangle density")->required();
    cmd->add_option("--threads", f->threads, "worker threads (default: TDL_THREADS or hardware)");
    cmd->add_option("--cap", f->cap, "exact enumeration cap")->capture_default_str();
    cmd->add_flag("--csv", f->csv, "CSV instead of JSON");
    cmd->add_option("--out", f->out_path, "write here instead of stdout");
    cmd->callback([f, n_values, alpha, &exit_code] {
      exit_code = run_sandwich(*f, *n_values, *alpha);
    });
  }

  {
    auto f = std::make_shared<CommonFlags>();
    auto alpha = std::make_shared<std::string>();
    auto t = std::make_shared<std::optional<std::int64_t>>();
    auto at_least = std::make_shared<bool>(false);
    auto mode = std::make_shared<std::string>("exact");
    auto samples = std::make_shared<std::uint64_t>(100000);
    auto* cmd = app.add_subcommand("coagulation", "do conditioned triangles share links?");
    add_model_flags(cmd, *f);
    auto* t_opt = cmd->add_option("--t", *t, "condition on this triangle count (default 2)");
    auto* a_opt = cmd->add_option("--alpha", *alpha, "condition on t = round(alpha*n)");
    t_opt->excludes(a_opt);
    a_opt->excludes(t_opt);
    cmd->add_flag("--at-least", *at_least, "condition t >= t0 instead of t == t0");
    cmd->add_option("--mode", *mode, "exact or mc")
        ->check(CLI::IsMember({"exact", "mc"}))
        ->capture_default_str();
    cmd->add_option("--samples", *samples, "Monte Carlo draws")->capture_default_str();
    cmd->add_option("--seed", f->seed, "RNG stream id")->capture_default_str();
    cmd->add_option("--threads", f->threads, "worker threads (default: TDL_THREADS or hardware)");
    cmd->add_option("--cap", f->cap, "exact-mode workload cap")->capture_default_str();
    cmd->add_option("--out", f->out_path, "write here instead of stdout");
    cmd->callback([f, alpha, t, at_least, mode, samples, &exit_code] {
      exit_code = run_coagulation(*f, *alpha, *t, *at_least, *mode, *samples);
    });
  }

  {
    auto f = std::make_shared<CommonFlags>();
    auto samples = std::make_shared<std::uint64_t>(1000);
    auto in_path = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("check-lemmas", "verify the counting lemmas on samples");
    cmd->add_option("--model", f->model, "general, k-out or k-regular")->capture_default_str();
    cmd->add_option("--n", f->n, "number of nodes");
    cmd->add_option("--k", f->k, "per-node budget k")->required();
    cmd->add_option("--samples", *samples, "graphs to draw and check")->capture_default_str();
    cmd->add_option("--seed", f->seed, "RNG stream id")->capture_default_str();
    cmd->add_option("--in", *in_path, "check one edge-list file instead of sampling");
    cmd->add_option("--out", f->out_path, "write JSON here instead of stdout");
    cmd->callback([f, samples, in_path, &exit_code] {
      exit_code = run_check_lemmas(*f, *samples, *in_path);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const tdl::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const tdl::RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const tdl::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
