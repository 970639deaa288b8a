// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Test-side brute forces over the source problems of the reductions, written
// without the library's solvers, plus random source generators.

#ifndef MATMED_TESTS_SUPPORT_SOURCE_ORACLES_HPP_
#define MATMED_TESTS_SUPPORT_SOURCE_ORACLES_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matmed/reductions.hpp"

namespace matmed::testing {

inline Rational line_gap(int a, int b) { return Rational(std::abs(a - b)); }

// Whether a directed path from source to target visits every node once.
inline bool has_hamiltonian_path(const Digraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.arcs) arc[u][v] = true;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (order.front() != g.source || order.back() != g.target) continue;
    bool ok = true;
    for (int k = 0; k + 1 < n && ok; ++k) ok = arc[order[k]][order[k + 1]];
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// ---- Data placement ----

inline std::optional<Rational> brute_data_placement(const DataPlacementProblem& p) {
  const int nk = static_cast<int>(p.caches.size());
  const int no = static_cast<int>(p.objects.size());
  const int nc = static_cast<int>(p.clients.size());
  std::optional<Rational> best;
  std::vector<int> masks(nk, 0);
  // Odometer over one object subset per cache.
  while (true) {
    bool fits = true;
    Rational cost = 0;
    for (int c = 0; c < nk && fits; ++c) {
      fits = __builtin_popcount(masks[c]) <= p.capacity[c];
      for (int o = 0; o < no; ++o) {
        if (masks[c] >> o & 1) cost += p.storage_cost[c * no + o];
      }
    }
    for (int j = 0; j < nc && fits; ++j) {
      std::optional<Rational> near;
      for (int c = 0; c < nk; ++c) {
        const Rational& d = p.distance[c * nc + j];
        if ((masks[c] >> p.object_of[j] & 1) && (!near || d < *near)) near = d;
      }
      if (!near) {
        fits = sgn(p.demand[j]) == 0;
      } else {
        cost += p.demand[j] * *near;
      }
    }
    if (fits && (!best || cost < *best)) best = cost;
    int c = 0;
    while (c < nk && ++masks[c] == (1 << no)) masks[c++] = 0;
    if (c == nk) break;
  }
  return best;
}

inline DataPlacementProblem random_data_placement(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  DataPlacementProblem p;
  const int nk = pick(1, 3), no = pick(1, 3), nc = pick(1, 4);
  std::vector<int> cache_at, client_at;
  for (int c = 0; c < nk; ++c) {
    p.caches.push_back("k" + std::to_string(c));
    p.capacity.push_back(pick(0, no));
    cache_at.push_back(pick(0, 10));
  }
  for (int o = 0; o < no; ++o) p.objects.push_back("o" + std::to_string(o));
  for (int j = 0; j < nc; ++j) {
    p.clients.push_back("u" + std::to_string(j));
    p.object_of.push_back(pick(0, no - 1));
    p.demand.push_back(rat(pick(1, 4), pick(1, 2)));
    client_at.push_back(pick(0, 10));
  }
  for (int c = 0; c < nk; ++c) {
    for (int o = 0; o < no; ++o) p.storage_cost.push_back(rat(pick(0, 12), 2));
    for (int j = 0; j < nc; ++j) p.distance.push_back(line_gap(cache_at[c], client_at[j]));
  }
  return p;
}

// ---- Mobile facility location ----

inline Rational brute_mobile_facility(const MobileFacilityProblem& p) {
  const int n = static_cast<int>(p.points.size());
  const int nm = static_cast<int>(p.facilities.size());
  std::optional<Rational> best;
  std::vector<int> at(nm, 0);
  while (true) {
    Rational cost = 0;
    for (int f = 0; f < nm; ++f) cost += p.move_cost[f * n + at[f]];
    bool served = true;
    for (size_t j = 0; j < p.client_point.size(); ++j) {
      std::optional<Rational> near;
      for (int f = 0; f < nm; ++f) {
        const Rational& d = p.distance[at[f] * n + p.client_point[j]];
        if (!near || d < *near) near = d;
      }
      if (!near) {
        served = sgn(p.demand[j]) == 0;
        continue;
      }
      cost += p.demand[j] * *near;
    }
    if (served && (!best || cost < *best)) best = cost;
    int f = 0;
    while (f < nm && ++at[f] == n) at[f++] = 0;
    if (f == nm) break;
  }
  return *best;
}

inline MobileFacilityProblem random_mobile_facility(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  MobileFacilityProblem p;
  const int n = pick(2, 4), nm = pick(1, 3), nc = pick(1, 4);
  std::vector<int> x;
  for (int s = 0; s < n; ++s) {
    p.points.push_back("p" + std::to_string(s));
    x.push_back(pick(0, 10));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) p.distance.push_back(line_gap(x[a], x[b]));
  }
  for (int j = 0; j < nc; ++j) {
    p.client_point.push_back(pick(0, n - 1));
    p.demand.push_back(rat(pick(1, 4), pick(1, 2)));
  }
  for (int f = 0; f < nm; ++f) {
    p.facilities.push_back("m" + std::to_string(f));
    p.start.push_back(pick(0, n - 1));
    // Moving costs distance times a weight; half the time staying put is not free.
    const int weight = pick(0, 2), stay = pick(0, 1) ? 0 : pick(1, 6);
    for (int s = 0; s < n; ++s) {
      p.move_cost.push_back(weight * line_gap(x[p.start[f]], x[s]) + (s == p.start[f] ? Rational(stay) : Rational(0)));
    }
  }
  return p;
}

// ---- k-median forest ----

// Minimum spanning forest with every median set pre-joined (Kruskal).
inline Rational forest_cost(const KMedianForestProblem& p, const std::vector<int>& medians) {
  const int n = static_cast<int>(p.nodes.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  for (size_t k = 1; k < medians.size(); ++k) parent[find(medians[k])] = find(medians[0]);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  std::stable_sort(edges.begin(), edges.end(), [&](auto a, auto b) {
    return p.tree_distance[a.first * n + a.second] < p.tree_distance[b.first * n + b.second];
  });
  Rational total = 0;
  for (const auto& [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a == b) continue;
    parent[a] = b;
    total += p.tree_distance[u * n + v];
  }
  return total;
}

inline Rational brute_kmedian_forest(const KMedianForestProblem& p) {
  const int n = static_cast<int>(p.nodes.size());
  std::optional<Rational> best;
  for (int mask = 1; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) > p.k) continue;
    std::vector<int> medians;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) medians.push_back(v);
    }
    Rational cost = forest_cost(p, medians);
    for (int v : medians) cost += p.open_cost[v];
    for (int j = 0; j < n; ++j) {
      Rational near = p.assign_distance[medians[0] * n + j];
      for (int v : medians) near = std::min(near, p.assign_distance[v * n + j]);
      cost += near;
    }
    if (!best || cost < *best) best = cost;
  }
  return *best;
}

inline KMedianForestProblem random_kmedian_forest(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  KMedianForestProblem p;
  const int n = pick(1, 4);
  std::vector<int> x, y;
  for (int v = 0; v < n; ++v) {
    p.nodes.push_back("v" + std::to_string(v));
    x.push_back(pick(0, 10));
    y.push_back(pick(0, 10));
    p.open_cost.push_back(pick(0, 1) ? Rational(0) : rat(pick(0, 8), 2));
  }
  const int scale = pick(1, 3);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      p.assign_distance.push_back(line_gap(x[a], x[b]));
      p.tree_distance.push_back(scale * line_gap(y[a], y[b]));
    }
  }
  p.k = pick(1, n);
  return p;
}

// ---- Minimum latency facility location ----

inline Rational brute_min_latency(const MinLatencyProblem& p) {
  const int nf = static_cast<int>(p.facilities.size());
  const int nc = static_cast<int>(p.clients.size());
  std::optional<Rational> best;
  // slot[f] in -1..nf-1, distinct among open facilities.
  std::vector<int> slot(nf, -1);
  while (true) {
    std::vector<bool> used(nf, false);
    bool distinct = true;
    Rational cost = 0;
    for (int f = 0; f < nf && distinct; ++f) {
      if (slot[f] < 0) continue;
      distinct = !used[slot[f]];
      used[slot[f]] = true;
      cost += p.open_cost[f] + p.slot_cost[f * nf + slot[f]];
    }
    for (int j = 0; j < nc && distinct; ++j) {
      std::optional<Rational> near;
      for (int f = 0; f < nf; ++f) {
        if (slot[f] < 0) continue;
        const Rational d = p.distance[f * nc + j] + p.latency[slot[f]];
        if (!near || d < *near) near = d;
      }
      if (!near) {
        distinct = sgn(p.demand[j]) == 0;
      } else {
        cost += p.demand[j] * *near;
      }
    }
    if (distinct && (!best || cost < *best)) best = cost;
    int f = 0;
    while (f < nf && ++slot[f] == nf) slot[f++] = -1;
    if (f == nf) break;
  }
  return *best;
}

inline MinLatencyProblem random_min_latency(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  MinLatencyProblem p;
  const int nf = pick(1, 3), nc = pick(1, 4);
  std::vector<int> fx, cx;
  for (int f = 0; f < nf; ++f) {
    p.facilities.push_back("q" + std::to_string(f));
    p.open_cost.push_back(rat(pick(0, 10), 2));
    fx.push_back(pick(0, 10));
    for (int t = 0; t < nf; ++t) p.slot_cost.push_back(pick(0, 2) ? Rational(0) : rat(pick(1, 4), 2));
  }
  for (int j = 0; j < nc; ++j) {
    p.clients.push_back("w" + std::to_string(j));
    p.demand.push_back(rat(pick(1, 4), pick(1, 2)));
    cx.push_back(pick(0, 10));
  }
  for (int f = 0; f < nf; ++f) {
    for (int j = 0; j < nc; ++j) p.distance.push_back(line_gap(fx[f], cx[j]));
  }
  Rational level = 0;
  for (int t = 0; t < nf; ++t) {
    level += rat(pick(0, 4), 2);
    p.latency.push_back(level);
  }
  return p;
}

// ---- Digraphs ----

// Digraph on n nodes from a bitmask over the n(n-1) ordered pairs.
inline Digraph digraph_from_mask(int n, uint32_t mask, int source, int target) {
  Digraph g;
  for (int v = 0; v < n; ++v) g.nodes.push_back("n" + std::to_string(v));
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask >> bit & 1) g.arcs.emplace_back(u, v);
      ++bit;
    }
  }
  g.source = source;
  g.target = target;
  return g;
}

}  // namespace matmed::testing

#endif  // MATMED_TESTS_SUPPORT_SOURCE_ORACLES_HPP_
