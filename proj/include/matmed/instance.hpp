// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MATMED_INSTANCE_HPP_
#define MATMED_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matmed/matroid.hpp"
#include "matmed/rational.hpp"

namespace matmed {

// Cardinality bounds of the two-matroid and laminar variants: lb1 <= |F∩F1| <=
// ub1, lb2 <= |F∩F2| <= ub2, lb <= |F| <= ub.
struct CardinalityBounds {
  int lb1 = 0, ub1 = 0;
  int lb2 = 0, ub2 = 0;
  int lb = 0, ub = 0;
  bool operator==(const CardinalityBounds&) const = default;
};

struct PlainVariant {
  bool operator==(const PlainVariant&) const = default;
};

struct PenaltyVariant {
  std::vector<Rational> penalty;  // per client
  bool operator==(const PenaltyVariant&) const = default;
};

// Clients may only use F1; matroid2 lives on F2.
struct TwoMatroidVariant {
  FacilitySet f1, f2;
  MatroidSpec matroid2;
  CardinalityBounds bounds;
  bool operator==(const TwoMatroidVariant&) const = default;
};

struct LaminarBound {
  FacilitySet members;
  int lower = 0;
  int upper = 0;
  bool operator==(const LaminarBound&) const = default;
};

// Clients may only use F1; the family lives on F2 and asks lower <= |F∩S| <= upper.
struct LaminarVariant {
  FacilitySet f1, f2;
  std::vector<LaminarBound> family;
  CardinalityBounds bounds;
  bool operator==(const LaminarVariant&) const = default;
};

struct KnapsackVariant {
  std::vector<Rational> weight;  // per facility
  Rational budget;
  bool operator==(const KnapsackVariant&) const = default;
};

// Second general matroid on all facilities. Only the exact oracle accepts it;
// the approximation pipelines reject it.
struct IntersectionVariant {
  MatroidSpec matroid2;
  bool operator==(const IntersectionVariant&) const = default;
};

using VariantPayload = std::variant<PlainVariant, PenaltyVariant, TwoMatroidVariant, LaminarVariant,
                                    KnapsackVariant, IntersectionVariant>;

// "plain", "penalty", "two_matroid", "laminar", "knapsack" or "intersection".
std::string variant_name(const VariantPayload& v);

struct MedianInstance {
  std::vector<std::string> facilities;
  std::vector<std::string> clients;
  std::vector<Rational> demand;     // per client
  std::vector<Rational> open_cost;  // per facility
  std::vector<Distance> dist;       // facility-major; empty optional = forbidden
  MatroidSpec matroid;
  VariantPayload variant;

  int num_facilities() const { return static_cast<int>(facilities.size()); }
  int num_clients() const { return static_cast<int>(clients.size()); }
  const Distance& distance(int facility, int client) const {
    return dist[static_cast<size_t>(facility) * clients.size() + client];
  }
  void set_distance(int facility, int client, Distance d) {
    dist[static_cast<size_t>(facility) * clients.size() + client] = std::move(d);
  }
  // Allocates an all-forbidden distance table for the current id lists.
  void reset_distances() { dist.assign(facilities.size() * clients.size(), std::nullopt); }
  int facility_index(const std::string& id) const;
  int client_index(const std::string& id) const;

  bool operator==(const MedianInstance&) const = default;
};

// Every violated instance invariant, each naming the offending entity.
std::vector<std::string> validate(const MedianInstance& instance);

// Shortest-path distances between clients through the facility set:
// min over facilities of c_ij + c_ik. Client-major square table.
std::vector<Distance> client_distances(const MedianInstance& instance);

struct CertificateCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs <= rhs; }
};

// Named intermediate values of a rounding run and the inequalities between them.
struct CertificateTrail {
  std::vector<std::pair<std::string, Rational>> values;
  std::vector<CertificateCheck> checks;

  void record(const std::string& name, const Rational& value);
  void check(const std::string& name, const Rational& lhs, const Rational& rhs);
  bool all_hold() const;
  const Rational* value(const std::string& name) const;
  const CertificateCheck* find_check(const std::string& name) const;
  std::vector<std::string> failures() const;
};

struct RoundedSolution {
  FacilitySet open;
  // Facility serving each client; empty when the client pays its penalty
  // (penalty variant) or has zero demand.
  std::vector<std::optional<int>> assignment;
  Rational facility_cost;
  Rational connection_cost;
  Rational penalty_cost;
  CertificateTrail certificate;

  Rational total() const { return facility_cost + connection_cost + penalty_cost; }
};

// Recomputes the cost breakdown of `sol` from its open set and assignment.
void price_solution(const MedianInstance& instance, RoundedSolution& sol);

// Feasibility problems of an open set alone: matroid independence, bounds,
// laminar family, knapsack weight.
std::vector<std::string> open_set_violations(const MedianInstance& instance, const FacilitySet& open);

// Open-set problems plus assignments to closed or forbidden facilities.
std::vector<std::string> solution_violations(const MedianInstance& instance,
                                             const RoundedSolution& sol);

// Assigns every client to its nearest open facility (lowest index on ties),
// or to its penalty when that is strictly cheaper. Clients with no finite
// option stay unassigned.
void assign_nearest(const MedianInstance& instance, RoundedSolution& sol);

struct GeneratorParams {
  int facilities = 6;
  int clients = 5;
  std::string matroid = "uniform";  // uniform|partition|laminar|graphic|explicit
  std::string variant = "plain";    // plain|penalty|two_matroid|laminar|knapsack
  std::string metric = "line";      // line|grid
};

// Deterministic in (seed, params). Throws InvalidArgument on unknown kinds or
// more than 16 facilities.
MedianInstance generate_random(uint64_t seed, const GeneratorParams& params);

}  // namespace matmed

#endif  // MATMED_INSTANCE_HPP_
