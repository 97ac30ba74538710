#pragma once

#include "tdl/bounds.hpp"
#include "tdl/census.hpp"
#include "tdl/constructions.hpp"
#include "tdl/ensembles.hpp"
#include "tdl/experiments.hpp"
#include "tdl/graph.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace tdl {

/// Conventions: big integers render as decimal strings, rationals as
/// {"fraction": "p/q", "value": double}, links as "u->v" / "u--v".

nlohmann::json to_json(const EnsembleSpec& spec);
nlohmann::json to_json(const ValidationResult& v);
nlohmann::json to_json(const CensusReport& r);
nlohmann::json to_json(const std::vector<LemmaViolation>& v);
nlohmann::json to_json(const ConstructionPlan& p);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const ClusterDecomposition& d);
nlohmann::json to_json(const HistogramResult& h);
nlohmann::json to_json(const PoissonComparison& c);
nlohmann::json to_json(const std::vector<LadderPoint>& ladder);
nlohmann::json to_json(const std::vector<SandwichRow>& rows);
nlohmann::json to_json(const CoagulationStat& s);

std::string format_double(double x);

/// One header line plus data rows, plot-ready.
std::string bounds_csv(const BoundReport& r);
std::string histogram_csv(const HistogramResult& h);
std::string sandwich_csv(const std::vector<SandwichRow>& rows);
std::string ladder_csv(const std::vector<LadderPoint>& ladder);

}  // namespace tdl
