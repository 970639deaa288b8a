// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Rounding for the penalty, two-matroid and laminarity-constrained variants,
// built from the stages in rounding.hpp.

#ifndef MATMED_EXTENSIONS_HPP_
#define MATMED_EXTENSIONS_HPP_

#include <vector>

#include "matmed/instance.hpp"
#include "matmed/rational.hpp"
#include "matmed/relaxation.hpp"
#include "matmed/rounding.hpp"

namespace matmed {

// Sites after splitting facilities: each facility maps to one or two
// co-located sites with its cost and distances.
struct CloneMap {
  std::vector<FacilitySet> sites;  // per facility, ascending
  std::vector<int> origin;         // per site

  int num_sites() const { return static_cast<int>(origin.size()); }
  // Sites of every facility in `facilities`.
  FacilitySet lift(const FacilitySet& facilities) const;
  // Facilities with at least one site in `site_set`.
  FacilitySet project(const FacilitySet& site_set) const;
};

struct ClonedSolution {
  CloneMap map;
  std::vector<Rational> y;  // per site
  std::vector<Rational> x;  // site-major, per client
  int num_clients = 0;
  // G'_j per client, over sites: the j-clones plus the facilities of G_j
  // that j uses fully.
  std::vector<FacilitySet> ball;

  const Rational& x_at(int site, int client) const {
    return x[static_cast<size_t>(site) * num_clients + client];
  }
};

// For each center j and facility i of G_j with 0 < x_ij < y_i, splits i into
// a site holding x_ij (used only by j) and one holding y_i - x_ij. Other
// clients' assignments to i are split in proportion to the two values.
// `nbhd` must be over identity sites.
ClonedSolution clone_facilities(const MedianInstance& instance, const ConsolidatedInstance& cons,
                                const Neighborhoods& nbhd, const FractionalSolution& frac);

// Sites of `map` with the rank rows of the instance matroid plus the
// variant's second matroid or laminar rows and cardinality bounds.
SiteModel split_site_model(const MedianInstance& instance, const CloneMap& map);

// Two-matroid and laminar pipelines. Each throws InvalidArgument on the wrong
// variant and InfeasibleError when the LP is infeasible.
RoundedSolution round_two_matroid(const MedianInstance& instance);
RoundedSolution round_laminar_constrained(const MedianInstance& instance);
// Either of the two above on a solved LP.
RoundedSolution round_split(const MedianInstance& instance, const FractionalSolution& frac);

// Penalty pipeline: clients with pi_j <= 2 LP_j pay their penalty up front,
// the rest are consolidated by LP_j and rounded through a half-integral
// vertex, where some may still pay.
RoundedSolution round_with_penalties(const MedianInstance& instance);
RoundedSolution round_with_penalties(const MedianInstance& instance, const FractionalSolution& frac);

}  // namespace matmed

#endif  // MATMED_EXTENSIONS_HPP_
