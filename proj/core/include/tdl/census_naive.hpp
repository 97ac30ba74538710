#pragma once

#include "tdl/census.hpp"
#include "tdl/graph.hpp"

namespace tdl {

/// Reference census: cubic scan over all node triples with its own
/// classification logic, kept deliberately separate from the production
/// kernel so the two can check each other. Records are always kept.
/// Intended for small n only.
CensusReport count_undirected_naive(const UndirectedGraph& g);
CensusReport count_kout_naive(const KOutDigraph& g);
CensusReport census_of_naive(const AnyGraph& g);

}  // namespace tdl
