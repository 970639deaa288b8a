// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Encoders from applied location problems into median instances, the maps
// back, and the digraph fixture showing why two general matroids are out of
// reach.

#ifndef MATMED_REDUCTIONS_HPP_
#define MATMED_REDUCTIONS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matmed/instance.hpp"
#include "matmed/rational.hpp"

namespace matmed {

// Reduced instances are capped at this many facilities.
inline constexpr int kMaxReducedFacilities = 16;

struct ReductionMapping {
  std::string kind;
  // Per reduced facility: the source entities it stands for, e.g. (cache,
  // object) or (facility, location). The k-median forest uses node pairs
  // with the root numbered after the nodes.
  std::vector<std::pair<int, int>> facility_source;
  // Source cost minus reduced cost for every matching pair of solutions.
  Rational cost_offset;
};

// Caches holding objects; each client wants one object.
struct DataPlacementProblem {
  std::vector<std::string> caches;
  std::vector<std::string> objects;
  std::vector<std::string> clients;
  std::vector<int> capacity;            // per cache
  std::vector<int> object_of;           // per client
  std::vector<Rational> demand;         // per client
  std::vector<Rational> storage_cost;   // cache-major, per object
  std::vector<Rational> distance;       // cache-major, per client
};

struct DataPlacementSolution {
  std::vector<FacilitySet> stored;  // objects per cache
  std::vector<int> cache_of;        // per client
};

// Facilities start at points of a metric and may each move once.
struct MobileFacilityProblem {
  std::vector<std::string> points;
  std::vector<Rational> distance;   // point-major square table
  std::vector<int> client_point;    // per client
  std::vector<Rational> demand;     // per client
  std::vector<std::string> facilities;
  std::vector<int> start;           // per facility
  std::vector<Rational> move_cost;  // facility-major, per point
};

struct MobileFacilitySolution {
  std::vector<int> location;      // final point per facility
  std::vector<int> facility_of;   // per client
};

// Pick at most k medians; the other nodes hang off them in a forest.
struct KMedianForestProblem {
  std::vector<std::string> nodes;
  std::vector<Rational> assign_distance;  // node-major square table (c)
  std::vector<Rational> tree_distance;    // node-major square table (d)
  std::vector<Rational> open_cost;        // per node; zeros by default
  int k = 1;
};

struct KMedianForestSolution {
  FacilitySet medians;
  std::vector<std::pair<int, int>> forest;  // u < v
  std::vector<int> median_of;               // per node
};

// Open facilities get distinct time slots; clients pay distance plus the
// latency of their facility's slot.
struct MinLatencyProblem {
  std::vector<std::string> facilities;
  std::vector<std::string> clients;
  std::vector<Rational> open_cost;   // per facility
  std::vector<Rational> slot_cost;   // facility-major, per slot; zeros by default
  std::vector<Rational> demand;      // per client
  std::vector<Rational> distance;    // facility-major, per client
  std::vector<Rational> latency;     // per slot 1..|facilities|, nondecreasing
};

struct MinLatencySolution {
  std::vector<int> slot;         // per facility, 0-based; -1 when closed
  std::vector<int> facility_of;  // per client
};

struct Digraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<int, int>> arcs;  // (tail, head), no loops or repeats
  int source = 0;
  int target = 1;
};

// Encoders. Each throws InvalidArgument on malformed input and SizeCapError
// when the reduced instance would exceed kMaxReducedFacilities.
std::pair<MedianInstance, ReductionMapping> reduce_data_placement(const DataPlacementProblem& p);
std::pair<MedianInstance, ReductionMapping> reduce_mobile_facility(const MobileFacilityProblem& p);
std::pair<MedianInstance, ReductionMapping> reduce_kmedian_forest(const KMedianForestProblem& p);
std::pair<MedianInstance, ReductionMapping> reduce_min_latency(const MinLatencyProblem& p);

// Arcs become facilities, every node but the target a client served at zero
// cost only by its own out-arcs. The first matroid is graphic on the
// undirected arcs; the second lets every node other than the source take one
// in-arc and the source none.
MedianInstance generate_hardness_instance(const Digraph& graph);

// Lifts of a reduced solution back to the source problem.
DataPlacementSolution lift_data_placement(const DataPlacementProblem& p, const ReductionMapping& m,
                                          const RoundedSolution& sol);
MobileFacilitySolution lift_mobile_facility(const MobileFacilityProblem& p, const ReductionMapping& m,
                                            const RoundedSolution& sol);
KMedianForestSolution lift_kmedian_forest(const KMedianForestProblem& p, const ReductionMapping& m,
                                          const RoundedSolution& sol);
// A facility opened in several slots keeps the slot cheapest for it and its
// clients; this never costs more than the reduced solution.
MinLatencySolution lift_min_latency(const MinLatencyProblem& p, const ReductionMapping& m,
                                    const RoundedSolution& sol);

// Source-side costs. Each throws InvalidArgument when the solution breaks a
// source constraint.
Rational data_placement_cost(const DataPlacementProblem& p, const DataPlacementSolution& s);
Rational mobile_facility_cost(const MobileFacilityProblem& p, const MobileFacilitySolution& s);
Rational kmedian_forest_cost(const KMedianForestProblem& p, const KMedianForestSolution& s);
Rational min_latency_cost(const MinLatencyProblem& p, const MinLatencySolution& s);

// Source documents, by kind: "data_placement", "mobile_facility",
// "kmedian_forest", "min_latency" or "hardness". Throws ParseError.
std::pair<MedianInstance, ReductionMapping> reduce_document(std::string_view kind, std::string_view text);
DataPlacementProblem parse_data_placement(std::string_view text);
MobileFacilityProblem parse_mobile_facility(std::string_view text);
KMedianForestProblem parse_kmedian_forest(std::string_view text);
MinLatencyProblem parse_min_latency(std::string_view text);
Digraph parse_digraph(std::string_view text);
std::string serialize_mapping(const ReductionMapping& m);

}  // namespace matmed

#endif  // MATMED_REDUCTIONS_HPP_
