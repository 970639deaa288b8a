// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Helpers shared by the rounding pipelines. Not installed.

#ifndef MATMED_SRC_ROUNDING_DETAIL_HPP_
#define MATMED_SRC_ROUNDING_DETAIL_HPP_

#include <string>
#include <vector>

#include "matmed/instance.hpp"
#include "matmed/rounding.hpp"

namespace matmed::detail {

inline const Distance& site_distance(const MedianInstance& instance, const SiteModel& model, int site,
                                     int client) {
  return instance.distance(model.origin[site], client);
}

// Finite distance or InternalError naming the pair.
Rational finite_site_distance(const MedianInstance& instance, const SiteModel& model, int site,
                              int client);
Rational finite_between(const ConsolidatedInstance& cons, int j, int k);

// Rank rows of `m` over the sites whose origin lies in its ground set:
// the separator sums clone values per facility, separates there and lifts the
// violated set to all its sites. Seeds the singleton and whole-ground rows.
void add_rank_rows(SiteModel& model, const MatroidSpec& m, int num_facilities);

// Sites whose origin is in `facilities`.
FacilitySet sites_of(const SiteModel& model, const FacilitySet& facilities);

// lower <= v(sites) <= upper, skipping bounds that cannot bind.
void add_count_rows(std::vector<Row>& rows, const FacilitySet& sites, int lower, int upper);

// Cardinality bounds over the sites of F1, F2 and all facilities.
void add_bound_rows(SiteModel& model, const CardinalityBounds& bounds, const FacilitySet& f1,
                    const FacilitySet& f2);

// Records lhs 0 (holds) or 1 (fails) against rhs 0.
void check_flag(CertificateTrail& trail, const std::string& name, bool ok);

Rational sum_over(const std::vector<Rational>& values, const FacilitySet& sites);

// Facility cost of the sites of `y` weighted by their values.
Rational facility_term(const MedianInstance& instance, const SiteModel& model,
                       const std::vector<Rational>& y);

// Sum over centers of d'_j Ĉ_j plus the facility term of ŷ.
Rational half_cost(const MedianInstance& instance, const ConsolidatedInstance& cons,
                   const SiteModel& model, const HalfSolution& half);

// Structural checks shared by all pipelines: separation of centers,
// F'_j mass, vertex denominators, distinct primaries and the primary and
// secondary distance sandwich.
void check_consolidation(CertificateTrail& trail, const ConsolidatedInstance& cons);
void check_half(CertificateTrail& trail, const MedianInstance& instance,
                const ConsolidatedInstance& cons, const Neighborhoods& nbhd, const SiteModel& model,
                const HalfSolution& half, RoundingMode mode);
void check_integral(CertificateTrail& trail, const IntegralSolution& integral);

}  // namespace matmed::detail

#endif  // MATMED_SRC_ROUNDING_DETAIL_HPP_
