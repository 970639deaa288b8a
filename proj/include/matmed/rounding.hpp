// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// LP rounding for matroid median: demand consolidation, a half-integral
// vertex, clustering, and an integral vertex of the cluster polytope.
// The stages are exposed separately so the variant pipelines can reuse them
// and tests can inspect each one.

#ifndef MATMED_ROUNDING_HPP_
#define MATMED_ROUNDING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "matmed/instance.hpp"
#include "matmed/linear_system.hpp"
#include "matmed/polytope.hpp"
#include "matmed/rational.hpp"
#include "matmed/relaxation.hpp"

namespace matmed {

enum class RoundingMode { kBasic, kImproved, kLmp };

const char* mode_name(RoundingMode mode);
// Throws InvalidArgument for anything but "basic", "improved" or "lmp".
RoundingMode parse_mode(const std::string& name);

// The copies of facilities ("sites") the rounding polytopes range over, with
// the rows those polytopes share. Without cloning every facility is its own
// site.
struct SiteModel {
  std::vector<int> origin;                // instance facility of each site
  std::vector<Row> seed_rows;             // rows present from the start
  std::vector<RowSeparator> separators;   // rank rows added on demand

  int size() const { return static_cast<int>(origin.size()); }
};

// Identity sites with the rank rows of the instance matroid.
SiteModel matroid_site_model(const MedianInstance& instance);

struct ConsolidatedInstance {
  std::vector<int> centers;          // ascending client index
  std::vector<int> center_of;        // per client; -1 when it took no part
  std::vector<Rational> demand;      // d'_j per client, zero off the centers
  std::vector<Rational> radius;      // ordering radius per client (C̄_j, or LP_j with penalties)
  std::vector<Distance> client_dist; // client-major; shortest path through a facility
  Rational opt_prime;                // cost of the LP solution on the centers

  bool is_center(int client) const { return center_of[client] == client; }
  const Distance& between(int j, int k) const {
    return client_dist[static_cast<size_t>(j) * center_of.size() + k];
  }
};

enum class MergeTarget {
  kNearest,  // nearest qualifying center, lowest index on ties
  kFirst,    // earliest center in processing order
};

// Greedy pass over the active clients in increasing radius (index on ties).
// A client joins an existing center k when c_jk <= 4 max(radius_j, radius_k);
// otherwise it becomes a center. opt_prime is left at zero.
ConsolidatedInstance consolidate(const MedianInstance& instance, const std::vector<Rational>& radius,
                                 const std::vector<bool>& active, MergeTarget target);

// Consolidation of the plain LP by C̄_j, with opt_prime filled in.
ConsolidatedInstance consolidate_demands(const MedianInstance& instance,
                                         const FractionalSolution& frac);

struct Neighborhoods {
  std::vector<int> owner;             // per site: center whose F_j holds it, or -1
  std::vector<FacilitySet> cluster;   // F_j per client (site indices)
  std::vector<FacilitySet> inner;     // F'_j = sites of F_j within 2 radius_j
  std::vector<FacilitySet> ball;      // G_j = sites of F_j within gamma_j
  std::vector<Distance> gamma;        // nullopt when unbounded
};

// F_j by nearest center (lowest center index on ties), over the sites of
// `model`. Sites with no finite distance to a center belong to no F_j.
Neighborhoods build_neighborhoods(const MedianInstance& instance, const ConsolidatedInstance& cons,
                                  const SiteModel& model);

// Coefficients of T(v) = facility * sum f_i v_i
//   + sum_j d'_j (near * sum_{G_j} c_ij v_i + far * gamma_j (1 - v(G_j))).
struct TWeights {
  Rational facility = 1;
  Rational near = 2;
  Rational far = 4;
};

TWeights t_weights(RoundingMode mode);

// T as a linear function over sites. Terms of centers with unbounded gamma
// drop the far part; those centers get v(G_j) = 1 as a row instead.
LinearObjective t_objective(const MedianInstance& instance, const ConsolidatedInstance& cons,
                            const Neighborhoods& nbhd, const SiteModel& model,
                            const TWeights& weights);

// Rows v(F'_j) >= 1/2 and v(G_j) <= 1 (= 1 for unbounded gamma) plus the
// model's seed rows.
LinearSystem half_polytope(const ConsolidatedInstance& cons, const Neighborhoods& nbhd,
                           const SiteModel& model, bool hard_unbounded = true);

struct HalfSolution {
  std::vector<Rational> start;  // y' per site
  std::vector<Rational> y;      // ŷ per site
  std::vector<int> primary;     // i1(j) per client, -1 off the centers
  std::vector<int> secondary;   // i2(j); equals i1(j) when ŷ_{i1(j)} = 1
  std::vector<int> sigma;       // σ(j); j itself when ŷ(G_j) = 1
  std::vector<Rational> chat;   // Ĉ_j = (c_{i1 j} + c_{i2 j}) / 2
  Rational t_start;             // T(y')
  Rational t_value;             // T(ŷ)
  bool extreme = false;
  CrashStats crash;

  // S_j = {i1(j), i2(j)}.
  FacilitySet support(int client) const;
};

// y'_i = x_ij on G_j, zero elsewhere.
std::vector<Rational> neighborhood_start(const ConsolidatedInstance& cons, const Neighborhoods& nbhd,
                                         const SiteModel& model, const FractionalSolution& frac);

// Crashes `start` to a vertex of the half polytope minimizing `objective`,
// then picks primaries, secondaries and σ. Basic mode takes the nearest other
// open site as secondary; the other modes route through σ(j) when ŷ(G_j) < 1.
HalfSolution half_integralize(const MedianInstance& instance, const ConsolidatedInstance& cons,
                              const Neighborhoods& nbhd, const SiteModel& model,
                              std::vector<Rational> start, const LinearObjective& objective,
                              RoundingMode mode, bool hard_unbounded = true);

// Plain-variant convenience: start from the LP and minimize the mode's T.
HalfSolution half_integralize(const MedianInstance& instance, const ConsolidatedInstance& cons,
                              const Neighborhoods& nbhd, const FractionalSolution& frac,
                              RoundingMode mode);

// Primary/secondary assembly on a given ŷ (no crash).
void assign_half_facilities(const MedianInstance& instance, const ConsolidatedInstance& cons,
                            const Neighborhoods& nbhd, const SiteModel& model, RoundingMode mode,
                            HalfSolution& half);

struct Clustering {
  std::vector<int> centers;    // D', in the order picked
  std::vector<int> ctr;        // per client, -1 off the clustered set
  std::vector<Rational> key;   // Ĉ_j (basic) or C'_j per client
};

// C'_j = (c_{i1(j) j} + c_{j σ(j)} + c_{i2(j) σ(j)}) / 2.
Rational clustering_key(const MedianInstance& instance, const ConsolidatedInstance& cons,
                        const SiteModel& model, const HalfSolution& half, int client);

// Greedy clustering of cons.centers by smallest key. Improved and LMP modes
// prefer σ(j) = j on equal keys; indices break remaining ties.
Clustering cluster_centers(const MedianInstance& instance, const ConsolidatedInstance& cons,
                           const SiteModel& model, const HalfSolution& half, RoundingMode mode);

struct IntegralSolution {
  std::vector<Rational> start;  // ŷ' per site
  std::vector<Rational> y;      // ỹ per site
  FacilitySet open_sites;
  std::vector<int> assigned;    // site per client, -1 off the centers
  Rational h_start;             // H(ŷ')
  Rational h_value;             // H(ỹ)
  Rational facility_cost;       // sum f over open sites
  Rational connection_cost;     // sum_{k in D} d'_k c(assigned, k)
  bool integral = false;
  CrashStats crash;

  Rational cost() const { return facility_cost + connection_cost; }
};

// H over sites: facility term (8f in LMP mode) plus A_k (basic) or L_k.
LinearObjective h_objective(const MedianInstance& instance, const ConsolidatedInstance& cons,
                            const SiteModel& model, const HalfSolution& half,
                            const Clustering& clustering, RoundingMode mode);

// Rows z(S_j) = 1 for j in D' plus the model's seed rows.
LinearSystem cluster_polytope(const SiteModel& model, const HalfSolution& half,
                              const Clustering& clustering);

IntegralSolution integralize(const MedianInstance& instance, const ConsolidatedInstance& cons,
                             const SiteModel& model, const HalfSolution& half,
                             const Clustering& clustering, RoundingMode mode);

// Full pipeline. Throws InvalidArgument unless the instance is plain and
// InfeasibleError when the LP is.
RoundedSolution round_matroid_median(const MedianInstance& instance, RoundingMode mode);
RoundedSolution round_matroid_median(const MedianInstance& instance, const FractionalSolution& frac,
                                     RoundingMode mode);

// Every client follows its center: the facility of its center's assigned
// site. Prices the result.
RoundedSolution lift_to_clients(const MedianInstance& instance, const ConsolidatedInstance& cons,
                                const SiteModel& model, const IntegralSolution& integral);

}  // namespace matmed

#endif  // MATMED_ROUNDING_HPP_
