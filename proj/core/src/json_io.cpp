#include "tdl/json_io.hpp"

#include <cmath>
#include <sstream>

namespace tdl {

namespace {

using nlohmann::json;

std::string link_string(bool directed, int u, int v) {
  return std::to_string(u) + (directed ? "->" : "--") + std::to_string(v);
}

json rational_json(const Rational& r) {
  return json{{"fraction", rational_string(r)}, {"value", to_double(r)}};
}

json edge_ref_json(const EdgeRef& e) { return link_string(e.directed, e.u, e.v); }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

nlohmann::json to_json(const EnsembleSpec& spec) {
  return json{{"model", std::string(to_string(spec.model))},
              {"n", spec.n},
              {"k", spec.k},
              {"seed", spec.seed}};
}

nlohmann::json to_json(const ValidationResult& v) {
  json violations = json::array();
  for (const auto& item : v.violations)
    violations.push_back(json{{"node", item.node}, {"rule", item.rule}});
  return json{{"ok", v.ok}, {"violations", violations}};
}

nlohmann::json to_json(const CensusReport& r) {
  json out{{"directed", r.directed},
           {"n", r.n},
           {"links", r.link_count},
           {"t", r.t},
           {"ell_triang", r.ell_triang}};
  if (r.directed) {
    out["round"] = r.round_count;
    out["frustrated"] = r.frustrated_count;
    out["in_degrees"] = r.in_degrees;
  }

  json anchors = json::array();
  for (int i = 1; i <= r.n; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    if (r.anchor_total[idx] == 0) continue;
    json entry{{"node", i}, {"total", r.anchor_total[idx]}};
    if (r.directed) {
      entry["round"] = r.anchor_round[idx];
      entry["frustrated"] = r.anchor_frustrated[idx];
    }
    anchors.push_back(std::move(entry));
  }
  out["anchor_counts"] = std::move(anchors);

  json occupancy = json::object();
  for (std::size_t e = 0; e < r.occupancy.size(); ++e) {
    const auto& occ = r.occupancy[e];
    if (occ.total() == 0) continue;
    const auto [u, v] = r.link_endpoints[e];
    if (r.directed)
      occupancy[link_string(true, u, v)] =
          json{{"round", occ.round}, {"frustrated", occ.frustrated}};
    else
      occupancy[link_string(false, u, v)] = occ.undirected;
  }
  out["occupancy"] = std::move(occupancy);

  if (r.records_kept) {
    json records = json::array();
    for (const auto& rec : r.records) {
      json entry{{"corners", rec.corners},
                 {"kind", std::string(to_string(rec.kind))},
                 {"anchor", rec.anchor}};
      if (rec.kind != TriangleKind::undirected) {
        entry["orientation"] = rec.orientation_index;
        entry["roles"] = json{{"a", edge_ref_json(rec.roles[0])},
                              {"b", edge_ref_json(rec.roles[1])},
                              {"c", edge_ref_json(rec.roles[2])}};
      }
      records.push_back(std::move(entry));
    }
    out["records"] = std::move(records);
  }
  return out;
}

nlohmann::json to_json(const std::vector<LemmaViolation>& v) {
  json out = json::array();
  for (const auto& item : v) out.push_back(json{{"subject", item.subject}, {"rule", item.rule}});
  return out;
}

nlohmann::json to_json(const ConstructionPlan& p) {
  return json{{"model", std::string(to_string(p.model))},
              {"n", p.n},
              {"k", p.k},
              {"target_t", p.target_t},
              {"cluster_size", p.cluster_size},
              {"cluster_count", p.cluster_count},
              {"remainder", p.remainder},
              {"triangles_per_cluster", p.triangles_per_cluster},
              {"predicted_t", p.predicted_t},
              {"links_used_in_clusters", p.links_used_in_clusters}};
}

nlohmann::json to_json(const BoundReport& r) {
  json out{{"model", std::string(to_string(r.model))},
           {"k", r.k},
           {"alpha", rational_json(r.alpha)},
           {"rho", rational_json(r.rho_k)}};
  if (r.lower) {
    out["lower"] = rational_json(r.lower->value);
    out["lower_vacuous"] = r.lower->vacuous;
  } else {
    out["lower"] = nullptr;
  }
  out["upper"] = r.upper ? rational_json(*r.upper) : json(nullptr);
  if (r.reg_exponent_terms)
    out["reg_exponent_terms"] = json{{"half_kn", rational_json(r.reg_exponent_terms->first)},
                                     {"alpha_n_over_km1", rational_json(r.reg_exponent_terms->second)}};
  if (r.finite_n_log_denominator) {
    out["finite_n_log_denominator"] = *r.finite_n_log_denominator;
    out["denominator_exponent_only"] = r.denominator_exponent_only;
  }
  return out;
}

nlohmann::json to_json(const ClusterDecomposition& d) {
  return json{{"clusters", rational_json(d.clusters)},
              {"remainder", rational_json(d.remainder)},
              {"cluster_links", rational_json(d.cluster_links)},
              {"remainder_links", rational_json(d.remainder_links)},
              {"total", rational_json(d.total)},
              {"ratio", rational_json(d.ratio)}};
}

nlohmann::json to_json(const HistogramResult& h) {
  json counts = json::object();
  for (const auto& [t, c] : h.counts) counts[std::to_string(t)] = c.str();
  json out{{"spec", to_json(h.spec)},
           {"mode", h.exact ? "exact" : "monte-carlo"},
           {"counts", std::move(counts)},
           {"total", h.total.str()},
           {"mean", h.mean},
           {"variance", h.variance}};
  if (!h.exact) out["samples"] = h.samples;
  return out;
}

nlohmann::json to_json(const PoissonComparison& c) {
  return json{{"histogram", to_json(c.histogram)},
              {"lambda_hat", c.lambda_hat},
              {"truncation", c.truncation},
              {"tv_distance", c.tv_distance}};
}

nlohmann::json to_json(const std::vector<LadderPoint>& ladder) {
  json out = json::array();
  for (const auto& p : ladder)
    out.push_back(json{{"n", p.n},
                       {"samples", p.samples},
                       {"mean", p.mean},
                       {"std_error", p.std_error}});
  return out;
}

nlohmann::json to_json(const std::vector<SandwichRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json entry{{"n", row.n},
               {"t", row.t},
               {"t_rounded", row.t_rounded},
               {"empty_class", row.empty_class},
               {"log_denominator", row.log_denominator},
               {"lower_vacuous", row.lower_vacuous}};
    entry["log_numerator"] = std::isnan(row.log_numerator) ? json(nullptr) : json(row.log_numerator);
    entry["ratio"] = std::isnan(row.ratio) ? json(nullptr) : json(row.ratio);
    entry["lower"] = std::isnan(row.lower) ? json(nullptr) : json(row.lower);
    entry["upper"] = std::isnan(row.upper) ? json(nullptr) : json(row.upper);
    out.push_back(std::move(entry));
  }
  return out;
}

nlohmann::json to_json(const CoagulationStat& s) {
  json out{{"spec", to_json(s.spec)},
           {"condition", json{{"t", s.condition.t}, {"at_least", s.condition.at_least}}},
           {"mode", s.exact ? "exact" : "monte-carlo"},
           {"class_size", s.class_size.str()},
           {"sharing", s.sharing.str()},
           {"share_fraction", s.share_fraction},
           {"disjoint_fraction", s.disjoint_fraction},
           {"predominantly_sharing", s.predominantly_sharing}};
  if (!s.exact) out["samples_drawn"] = s.samples_drawn;
  return out;
}

std::string bounds_csv(const BoundReport& r) {
  std::ostringstream os;
  os << "model,k,alpha,rho,lower,upper,vacuous\n";
  os << to_string(r.model) << ',' << r.k << ',' << format_double(to_double(r.alpha)) << ','
     << format_double(to_double(r.rho_k)) << ',';
  os << (r.lower ? format_double(to_double(r.lower->value)) : "nan") << ',';
  os << (r.upper ? format_double(to_double(*r.upper)) : "nan") << ',';
  os << (r.lower && r.lower->vacuous ? "1" : "0") << '\n';
  return os.str();
}

std::string histogram_csv(const HistogramResult& h) {
  std::ostringstream os;
  os << "t,count\n";
  for (const auto& [t, c] : h.counts) os << t << ',' << c.str() << '\n';
  return os.str();
}

std::string sandwich_csv(const std::vector<SandwichRow>& rows) {
  std::ostringstream os;
  os << "n,t,t_rounded,empty_class,log_numerator,log_denominator,ratio,lower,upper,"
        "lower_vacuous\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.t << ',' << (row.t_rounded ? 1 : 0) << ','
       << (row.empty_class ? 1 : 0) << ',' << format_double(row.log_numerator) << ','
       << format_double(row.log_denominator) << ',' << format_double(row.ratio) << ','
       << format_double(row.lower) << ',' << format_double(row.upper) << ','
       << (row.lower_vacuous ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string ladder_csv(const std::vector<LadderPoint>& ladder) {
  std::ostringstream os;
  os << "n,samples,mean,std_error\n";
  for (const auto& p : ladder)
    os << p.n << ',' << p.samples << ',' << format_double(p.mean) << ','
       << format_double(p.std_error) << '\n';
  return os.str();
}

}  // namespace tdl
