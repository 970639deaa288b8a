// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "matmed/errors.hpp"

namespace matmed {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool subset_of(const FacilitySet& a, const FacilitySet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FacilitySet intersect(const FacilitySet& a, const FacilitySet& b) {
  FacilitySet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void check_subset_of_ground(const MatroidSpec& m, const FacilitySet& s) {
  for (int e : s) {
    if (!m.contains(e)) {
      throw InvalidArgument("facility " + std::to_string(e) + " is not in the matroid ground set");
    }
  }
}

int laminar_rank(const LaminarMatroid& lam, const FacilitySet& s) {
  std::vector<int> load(lam.family.size(), 0);
  int taken = 0;
  for (int e : s) {
    bool fits = true;
    for (size_t a = 0; a < lam.family.size() && fits; ++a) {
      const auto& members = lam.family[a].members;
      if (std::binary_search(members.begin(), members.end(), e) && load[a] >= lam.family[a].bound) {
        fits = false;
      }
    }
    if (!fits) continue;
    for (size_t a = 0; a < lam.family.size(); ++a) {
      const auto& members = lam.family[a].members;
      if (std::binary_search(members.begin(), members.end(), e)) ++load[a];
    }
    ++taken;
  }
  return taken;
}

int graphic_rank(const GraphicMatroid& g, const FacilitySet& s) {
  UnionFind uf(g.vertex_count);
  int r = 0;
  for (const auto& edge : g.edges) {
    if (std::binary_search(s.begin(), s.end(), edge.facility) && uf.unite(edge.u, edge.v)) ++r;
  }
  return r;
}

int rank_unchecked(const MatroidSpec& m, const FacilitySet& s) {
  return std::visit(
      Overloaded{
          [&](const UniformMatroid& u) { return std::min<int>(s.size(), u.rank); },
          [&](const PartitionMatroid& p) {
            int r = 0;
            for (const auto& c : p.classes) {
              r += std::min<int>(intersect(c.members, s).size(), c.capacity);
            }
            return r;
          },
          [&](const LaminarMatroid& lam) { return laminar_rank(lam, s); },
          [&](const GraphicMatroid& g) { return graphic_rank(g, s); },
          [&](const ExplicitMatroid& x) {
            int best = 0;
            for (const auto& b : x.bases) best = std::max<int>(best, intersect(b, s).size());
            return best;
          },
      },
      m.variant());
}

FacilitySet mask_to_set(const FacilitySet& ground, uint32_t mask) {
  FacilitySet out;
  for (size_t k = 0; k < ground.size(); ++k) {
    if (mask & (1u << k)) out.push_back(ground[k]);
  }
  return out;
}

std::vector<uint8_t> rank_table(const MatroidSpec& m) {
  const FacilitySet& ground = m.ground();
  const uint32_t count = 1u << ground.size();
  std::vector<uint8_t> table(count, 0);
  if (const auto* g = std::get_if<GraphicMatroid>(&m.variant())) {
    std::vector<std::pair<int, int>> ends(ground.size());
    for (const auto& e : g->edges) {
      auto it = std::lower_bound(ground.begin(), ground.end(), e.facility);
      ends[it - ground.begin()] = {e.u, e.v};
    }
    for (uint32_t mask = 1; mask < count; ++mask) {
      UnionFind uf(g->vertex_count);
      int r = 0;
      for (size_t k = 0; k < ground.size(); ++k) {
        if ((mask & (1u << k)) && uf.unite(ends[k].first, ends[k].second)) ++r;
      }
      table[mask] = static_cast<uint8_t>(r);
    }
    return table;
  }
  for (uint32_t mask = 1; mask < count; ++mask) {
    table[mask] = static_cast<uint8_t>(rank_unchecked(m, mask_to_set(ground, mask)));
  }
  return table;
}

std::optional<RankViolation> best_of(const std::vector<Rational>& y,
                                     const std::vector<std::pair<FacilitySet, int>>& candidates) {
  std::optional<RankViolation> best;
  for (const auto& [set, r] : candidates) {
    Rational total = 0;
    for (int e : set) total += y[e];
    Rational excess = total - r;
    if (sgn(excess) <= 0) continue;
    bool better = !best || excess > best->excess ||
                  (excess == best->excess && (set.size() < best->set.size() ||
                                              (set.size() == best->set.size() && set < best->set)));
    if (better) best = RankViolation{set, r, excess};
  }
  return best;
}

}  // namespace

FacilitySet make_set(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

MatroidSpec::MatroidSpec(FacilitySet ground, Variant variant)
    : ground_(make_set(std::move(ground))), variant_(std::move(variant)) {}

MatroidSpec MatroidSpec::uniform(FacilitySet ground, int rank) {
  return MatroidSpec(std::move(ground), UniformMatroid{rank});
}

MatroidSpec MatroidSpec::partition(std::vector<PartitionClass> classes) {
  FacilitySet ground;
  for (auto& c : classes) {
    c.members = make_set(std::move(c.members));
    ground.insert(ground.end(), c.members.begin(), c.members.end());
  }
  return MatroidSpec(std::move(ground), PartitionMatroid{std::move(classes)});
}

MatroidSpec MatroidSpec::laminar(FacilitySet ground, std::vector<LaminarSet> family) {
  for (auto& a : family) a.members = make_set(std::move(a.members));
  return MatroidSpec(std::move(ground), LaminarMatroid{std::move(family)});
}

MatroidSpec MatroidSpec::graphic(int vertex_count, std::vector<GraphicEdge> edges) {
  FacilitySet ground;
  for (const auto& e : edges) ground.push_back(e.facility);
  return MatroidSpec(std::move(ground), GraphicMatroid{vertex_count, std::move(edges)});
}

MatroidSpec MatroidSpec::explicit_bases(FacilitySet ground, std::vector<FacilitySet> bases) {
  for (auto& b : bases) b = make_set(std::move(b));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return MatroidSpec(std::move(ground), ExplicitMatroid{std::move(bases)});
}

std::string MatroidSpec::kind() const {
  static const char* const kNames[] = {"uniform", "partition", "laminar", "graphic", "explicit"};
  return kNames[variant_.index()];
}

bool MatroidSpec::contains(int facility) const {
  return std::binary_search(ground_.begin(), ground_.end(), facility);
}

int rank(const MatroidSpec& m, const FacilitySet& s) {
  check_subset_of_ground(m, s);
  return rank_unchecked(m, make_set(s));
}

bool is_independent(const MatroidSpec& m, const FacilitySet& s) {
  FacilitySet set = make_set(s);
  return rank(m, set) == static_cast<int>(set.size());
}

MatroidSpec restrict(const MatroidSpec& m, const FacilitySet& s) {
  check_subset_of_ground(m, s);
  FacilitySet keep = make_set(s);
  return std::visit(
      Overloaded{
          [&](const UniformMatroid& u) {
            return MatroidSpec::uniform(keep, std::min<int>(u.rank, keep.size()));
          },
          [&](const PartitionMatroid& p) {
            std::vector<PartitionClass> classes;
            for (const auto& c : p.classes) {
              FacilitySet members = intersect(c.members, keep);
              if (!members.empty()) {
                classes.push_back({members, std::min<int>(c.capacity, members.size())});
              }
            }
            return MatroidSpec::partition(std::move(classes));
          },
          [&](const LaminarMatroid& lam) {
            std::vector<LaminarSet> family;
            for (const auto& a : lam.family) {
              FacilitySet members = intersect(a.members, keep);
              if (!members.empty()) family.push_back({members, a.bound});
            }
            return MatroidSpec::laminar(keep, std::move(family));
          },
          [&](const GraphicMatroid& g) {
            std::vector<GraphicEdge> edges;
            for (const auto& e : g.edges) {
              if (std::binary_search(keep.begin(), keep.end(), e.facility)) edges.push_back(e);
            }
            return MatroidSpec::graphic(g.vertex_count, std::move(edges));
          },
          [&](const ExplicitMatroid& x) {
            int r = rank_unchecked(m, keep);
            std::vector<FacilitySet> bases;
            for (const auto& b : x.bases) {
              FacilitySet cut = intersect(b, keep);
              if (static_cast<int>(cut.size()) == r) bases.push_back(cut);
            }
            return MatroidSpec::explicit_bases(keep, std::move(bases));
          },
      },
      m.variant());
}

std::vector<std::string> structural_violations(const MatroidSpec& m) {
  std::vector<std::string> out;
  const FacilitySet& ground = m.ground();
  std::visit(
      Overloaded{
          [&](const UniformMatroid& u) {
            if (u.rank < 0) out.push_back("uniform matroid has negative rank");
          },
          [&](const PartitionMatroid& p) {
            std::vector<int> seen;
            for (size_t c = 0; c < p.classes.size(); ++c) {
              if (p.classes[c].capacity < 0) {
                out.push_back("partition class " + std::to_string(c) + " has negative capacity");
              }
              seen.insert(seen.end(), p.classes[c].members.begin(), p.classes[c].members.end());
            }
            std::sort(seen.begin(), seen.end());
            for (size_t k = 1; k < seen.size(); ++k) {
              if (seen[k] == seen[k - 1]) {
                out.push_back("facility " + std::to_string(seen[k]) +
                              " lies in two partition classes");
              }
            }
            if (make_set(seen) != ground) out.push_back("partition classes do not cover the ground set");
          },
          [&](const LaminarMatroid& lam) {
            for (size_t a = 0; a < lam.family.size(); ++a) {
              const auto& sa = lam.family[a].members;
              if (lam.family[a].bound < 0) {
                out.push_back("laminar set " + std::to_string(a) + " has negative bound");
              }
              if (!subset_of(sa, ground)) {
                out.push_back("laminar set " + std::to_string(a) + " leaves the ground set");
              }
              for (size_t b = a + 1; b < lam.family.size(); ++b) {
                const auto& sb = lam.family[b].members;
                if (!subset_of(sa, sb) && !subset_of(sb, sa) && !intersect(sa, sb).empty()) {
                  out.push_back("laminar sets " + std::to_string(a) + " and " + std::to_string(b) +
                                " cross");
                }
              }
            }
          },
          [&](const GraphicMatroid& g) {
            if (g.vertex_count < 0) out.push_back("graphic matroid has negative vertex count");
            std::vector<int> facilities;
            for (const auto& e : g.edges) {
              if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count || e.v >= g.vertex_count) {
                out.push_back("edge of facility " + std::to_string(e.facility) +
                              " has an endpoint out of range");
              }
              facilities.push_back(e.facility);
            }
            std::sort(facilities.begin(), facilities.end());
            if (std::adjacent_find(facilities.begin(), facilities.end()) != facilities.end()) {
              out.push_back("graphic matroid lists a facility on two edges");
            }
          },
          [&](const ExplicitMatroid& x) {
            if (x.bases.empty()) {
              out.push_back("explicit matroid lists no bases");
              return;
            }
            for (const auto& b : x.bases) {
              if (!subset_of(b, ground)) out.push_back("explicit basis leaves the ground set");
              if (b.size() != x.bases.front().size()) out.push_back("explicit bases differ in size");
            }
            if (!out.empty()) return;
            // Basis exchange: for B1, B2 and e in B1\B2 some f in B2\B1 gives a basis.
            std::set<FacilitySet> all(x.bases.begin(), x.bases.end());
            for (const auto& b1 : x.bases) {
              for (const auto& b2 : x.bases) {
                for (int e : b1) {
                  if (std::binary_search(b2.begin(), b2.end(), e)) continue;
                  bool exchanged = false;
                  for (int f : b2) {
                    if (std::binary_search(b1.begin(), b1.end(), f)) continue;
                    FacilitySet swapped = b1;
                    swapped.erase(std::find(swapped.begin(), swapped.end(), e));
                    swapped.push_back(f);
                    if (all.count(make_set(swapped))) {
                      exchanged = true;
                      break;
                    }
                  }
                  if (!exchanged) {
                    out.push_back("explicit bases violate the exchange axiom");
                    return;
                  }
                }
              }
            }
          },
      },
      m.variant());
  return out;
}

RankSeparator::RankSeparator(const MatroidSpec& m, SeparationOptions options) : m_(&m) {
  bool structured = std::holds_alternative<UniformMatroid>(m.variant()) ||
                    std::holds_alternative<PartitionMatroid>(m.variant()) ||
                    std::holds_alternative<LaminarMatroid>(m.variant());
  if (structured) return;
  if (static_cast<int>(m.ground().size()) > options.brute_force_cap) {
    throw SizeCapError("brute-force rank separation limited to " +
                       std::to_string(options.brute_force_cap) + " ground elements, got " +
                       std::to_string(m.ground().size()));
  }
  rank_table_ = rank_table(m);
}

std::optional<RankViolation> RankSeparator::operator()(const std::vector<Rational>& y) const {
  const MatroidSpec& m = *m_;
  if (!m.ground().empty() && static_cast<int>(y.size()) <= m.ground().back()) {
    throw InvalidArgument("point does not cover the matroid ground set");
  }
  std::vector<std::pair<FacilitySet, int>> candidates;
  auto add_singletons = [&](int cap) {
    for (int e : m.ground()) candidates.push_back({{e}, std::min(cap, 1)});
  };
  if (const auto* u = std::get_if<UniformMatroid>(&m.variant())) {
    candidates.push_back({m.ground(), std::min<int>(u->rank, m.ground().size())});
    add_singletons(u->rank);
  } else if (const auto* p = std::get_if<PartitionMatroid>(&m.variant())) {
    for (const auto& c : p->classes) {
      candidates.push_back({c.members, std::min<int>(c.capacity, c.members.size())});
      for (int e : c.members) candidates.push_back({{e}, std::min(c.capacity, 1)});
    }
  } else if (std::holds_alternative<LaminarMatroid>(m.variant())) {
    const auto& lam = std::get<LaminarMatroid>(m.variant());
    for (const auto& a : lam.family) candidates.push_back({a.members, rank_unchecked(m, a.members)});
    for (int e : m.ground()) candidates.push_back({{e}, rank_unchecked(m, {e})});
  } else {
    return brute_force(y);
  }
  return best_of(y, candidates);
}

std::optional<RankViolation> RankSeparator::brute_force(const std::vector<Rational>& y) const {
  const FacilitySet& ground = m_->ground();
  const size_t n = ground.size();
  const uint32_t count = 1u << n;
  // Scale to a common denominator so the subset scan runs on integers.
  mpz_class lcm = 1;
  for (int e : ground) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), y[e].get_den().get_mpz_t());
  std::vector<mpz_class> scaled(n);
  for (size_t k = 0; k < n; ++k) scaled[k] = y[ground[k]].get_num() * (lcm / y[ground[k]].get_den());
  std::vector<mpz_class> sums(count);
  uint32_t best_mask = 0;
  mpz_class best_excess = 0;
  for (uint32_t mask = 1; mask < count; ++mask) {
    int low = __builtin_ctz(mask);
    sums[mask] = sums[mask & (mask - 1)] + scaled[low];
    mpz_class excess = sums[mask] - lcm * rank_table_[mask];
    if (sgn(excess) <= 0) continue;
    bool better = best_mask == 0 || excess > best_excess ||
                  (excess == best_excess &&
                   (__builtin_popcount(mask) < __builtin_popcount(best_mask) ||
                    (__builtin_popcount(mask) == __builtin_popcount(best_mask) &&
                     mask_to_set(ground, mask) < mask_to_set(ground, best_mask))));
    if (better) {
      best_mask = mask;
      best_excess = excess;
    }
  }
  if (best_mask == 0) return std::nullopt;
  Rational excess(best_excess, lcm);
  excess.canonicalize();
  return RankViolation{mask_to_set(ground, best_mask), rank_table_[best_mask], excess};
}

std::optional<RankViolation> separate_rank(const MatroidSpec& m, const std::vector<Rational>& y,
                                           SeparationOptions options) {
  return RankSeparator(m, options)(y);
}

std::vector<std::pair<FacilitySet, int>> polytope_facet_sets(const MatroidSpec& m) {
  const FacilitySet& ground = m.ground();
  const size_t n = ground.size();
  if (n > 12) throw SizeCapError("facet listing limited to 12 ground elements");
  const uint32_t count = 1u << n;
  std::vector<int> r(count);
  for (uint32_t mask = 0; mask < count; ++mask) r[mask] = rank_unchecked(m, mask_to_set(ground, mask));
  bool has_loops = false;
  for (size_t k = 0; k < n; ++k) has_loops |= r[1u << k] == 0;
  std::vector<std::pair<FacilitySet, int>> out;
  for (uint32_t mask = 1; mask < count; ++mask) {
    bool closed = true;
    for (size_t k = 0; k < n && closed; ++k) {
      if (!(mask & (1u << k)) && r[mask | (1u << k)] == r[mask]) closed = false;
    }
    bool singleton = __builtin_popcount(mask) == 1;
    if (!closed && !singleton) continue;
    if (closed && !has_loops && !singleton) {
      bool separable = false;
      for (uint32_t part = (mask - 1) & mask; part > 0 && !separable; part = (part - 1) & mask) {
        separable = r[part] + r[mask ^ part] == r[mask];
      }
      if (separable) continue;
    }
    out.push_back({mask_to_set(ground, mask), r[mask]});
  }
  return out;
}

}  // namespace matmed
