// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Matroids over facility indices: rank, independence, restriction and
// separation of violated rank constraints y(S) <= r(S).

#ifndef MATMED_MATROID_HPP_
#define MATMED_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matmed/rational.hpp"

namespace matmed {

// Sorted, duplicate-free list of facility indices.
using FacilitySet = std::vector<int>;

FacilitySet make_set(std::vector<int> items);

struct UniformMatroid {
  int rank = 0;
  bool operator==(const UniformMatroid&) const = default;
};

struct PartitionClass {
  FacilitySet members;
  int capacity = 0;
  bool operator==(const PartitionClass&) const = default;
};

struct PartitionMatroid {
  std::vector<PartitionClass> classes;
  bool operator==(const PartitionMatroid&) const = default;
};

struct LaminarSet {
  FacilitySet members;
  int bound = 0;
  bool operator==(const LaminarSet&) const = default;
};

// Independent sets are those meeting every family member A in at most
// bound(A) elements.
struct LaminarMatroid {
  std::vector<LaminarSet> family;
  bool operator==(const LaminarMatroid&) const = default;
};

struct GraphicEdge {
  int facility = 0;
  int u = 0;
  int v = 0;
  bool operator==(const GraphicEdge&) const = default;
};

struct GraphicMatroid {
  int vertex_count = 0;
  std::vector<GraphicEdge> edges;
  bool operator==(const GraphicMatroid&) const = default;
};

// Listed by bases; meant for tiny fixtures.
struct ExplicitMatroid {
  std::vector<FacilitySet> bases;
  bool operator==(const ExplicitMatroid&) const = default;
};

class MatroidSpec {
 public:
  using Variant =
      std::variant<UniformMatroid, PartitionMatroid, LaminarMatroid, GraphicMatroid, ExplicitMatroid>;

  MatroidSpec() = default;
  MatroidSpec(FacilitySet ground, Variant variant);

  static MatroidSpec uniform(FacilitySet ground, int rank);
  static MatroidSpec partition(std::vector<PartitionClass> classes);
  static MatroidSpec laminar(FacilitySet ground, std::vector<LaminarSet> family);
  static MatroidSpec graphic(int vertex_count, std::vector<GraphicEdge> edges);
  static MatroidSpec explicit_bases(FacilitySet ground, std::vector<FacilitySet> bases);

  const FacilitySet& ground() const { return ground_; }
  const Variant& variant() const { return variant_; }
  // "uniform", "partition", "laminar", "graphic" or "explicit".
  std::string kind() const;
  bool contains(int facility) const;

  bool operator==(const MatroidSpec&) const = default;

 private:
  FacilitySet ground_;
  Variant variant_ = UniformMatroid{};
};

// Throws InvalidArgument if `s` leaves the ground set.
int rank(const MatroidSpec& m, const FacilitySet& s);
bool is_independent(const MatroidSpec& m, const FacilitySet& s);
MatroidSpec restrict(const MatroidSpec& m, const FacilitySet& s);

// Structural problems (overlapping classes, non-laminar family, unequal bases,
// ...). Empty when the description is a valid matroid.
std::vector<std::string> structural_violations(const MatroidSpec& m);

struct SeparationOptions {
  int brute_force_cap = 16;
};

struct RankViolation {
  FacilitySet set;
  int rank = 0;
  Rational excess;  // y(set) - rank > 0
};

// Rank-constraint separation with a cached rank table for the brute-force
// variants; build once per solve and call repeatedly.
class RankSeparator {
 public:
  explicit RankSeparator(const MatroidSpec& m, SeparationOptions options = {});

  // `y` is indexed by facility and must cover the ground set. Returns the most
  // violated constraint (smallest set on ties) or nothing if y is in the
  // matroid polytope.
  std::optional<RankViolation> operator()(const std::vector<Rational>& y) const;

  const MatroidSpec& matroid() const { return *m_; }

 private:
  std::optional<RankViolation> brute_force(const std::vector<Rational>& y) const;

  const MatroidSpec* m_;
  std::vector<uint8_t> rank_table_;  // by subset mask of ground(), brute-force only
};

std::optional<RankViolation> separate_rank(const MatroidSpec& m, const std::vector<Rational>& y,
                                           SeparationOptions options = {});

// Rows y(S) <= r(S) for every flat S that does not split as a direct sum;
// these describe the matroid polytope. Brute force, ground size <= 12.
std::vector<std::pair<FacilitySet, int>> polytope_facet_sets(const MatroidSpec& m);

}  // namespace matmed

#endif  // MATMED_MATROID_HPP_
