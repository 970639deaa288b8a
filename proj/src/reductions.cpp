// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json_support.hpp"
#include "matmed/errors.hpp"

namespace matmed {
namespace {

using json_support::IdTable;
using json_support::Json;
using json_support::require;
using json_support::to_id;
using json_support::to_int;
using json_support::to_rational;

void check_cap(int facilities, const char* what) {
  if (facilities > kMaxReducedFacilities) {
    throw SizeCapError(std::string(what) + " would need " + std::to_string(facilities) +
                       " facilities; the cap is " + std::to_string(kMaxReducedFacilities));
  }
}

void check_size(size_t got, size_t want, const char* what) {
  if (got != want) throw InvalidArgument(std::string(what) + " has the wrong size");
}

void check_nonnegative(const std::vector<Rational>& values, const char* what) {
  for (const auto& v : values) {
    if (sgn(v) < 0) throw InvalidArgument(std::string(what) + " holds a negative value");
  }
}

void check_index(int value, int size, const char* what) {
  if (value < 0 || value >= size) throw InvalidArgument(std::string(what) + " is out of range");
}

MedianInstance blank(std::vector<std::string> facilities, std::vector<std::string> clients) {
  MedianInstance out;
  out.facilities = std::move(facilities);
  out.clients = std::move(clients);
  out.open_cost.assign(out.facilities.size(), Rational(0));
  out.demand.assign(out.clients.size(), Rational(0));
  out.reset_distances();
  out.variant = PlainVariant{};
  return out;
}

// Facility of the reduced solution serving client j; -1 for an unserved
// client with no demand.
int served_by(const RoundedSolution& sol, const Rational& demand, int j) {
  if (j < static_cast<int>(sol.assignment.size()) && sol.assignment[j]) return *sol.assignment[j];
  if (sgn(demand) > 0) throw InvalidArgument("reduced solution leaves a client with demand unserved");
  return -1;
}

// Resting point of an unmoved mobile facility: its start when that is among
// the cheapest moves, else the cheapest point with the lowest index.
int rest_point(const MobileFacilityProblem& p, int facility) {
  const int n = static_cast<int>(p.points.size());
  const Rational* row = &p.move_cost[static_cast<size_t>(facility) * n];
  int best = p.start[facility];
  for (int s = 0; s < n; ++s) {
    if (row[s] < row[best] || (row[s] == row[best] && best != p.start[facility] && s < best)) best = s;
  }
  return best;
}

void check_mobile(const MobileFacilityProblem& p) {
  const size_t n = p.points.size();
  check_size(p.distance.size(), n * n, "point distance table");
  check_size(p.demand.size(), p.client_point.size(), "client demand list");
  check_size(p.start.size(), p.facilities.size(), "facility start list");
  check_size(p.move_cost.size(), p.facilities.size() * n, "move cost table");
  check_nonnegative(p.distance, "point distance table");
  check_nonnegative(p.demand, "client demand list");
  check_nonnegative(p.move_cost, "move cost table");
  for (int c : p.client_point) check_index(c, static_cast<int>(n), "client point");
  for (int s : p.start) check_index(s, static_cast<int>(n), "facility start");
}

void check_forest_problem(const KMedianForestProblem& p) {
  const size_t n = p.nodes.size();
  check_size(p.assign_distance.size(), n * n, "assignment distance table");
  check_size(p.tree_distance.size(), n * n, "tree distance table");
  check_size(p.open_cost.size(), n, "opening cost list");
  check_nonnegative(p.assign_distance, "assignment distance table");
  check_nonnegative(p.tree_distance, "tree distance table");
  check_nonnegative(p.open_cost, "opening cost list");
  if (n == 0) throw InvalidArgument("k-median forest needs at least one node");
  if (p.k < 1) throw InvalidArgument("k-median forest needs k >= 1");
}

void check_latency_problem(const MinLatencyProblem& p) {
  const size_t nf = p.facilities.size();
  check_size(p.open_cost.size(), nf, "opening cost list");
  check_size(p.slot_cost.size(), nf * nf, "slot cost table");
  check_size(p.demand.size(), p.clients.size(), "client demand list");
  check_size(p.distance.size(), nf * p.clients.size(), "distance table");
  check_size(p.latency.size(), nf, "latency list");
  check_nonnegative(p.open_cost, "opening cost list");
  check_nonnegative(p.slot_cost, "slot cost table");
  check_nonnegative(p.demand, "client demand list");
  check_nonnegative(p.distance, "distance table");
  check_nonnegative(p.latency, "latency list");
  for (size_t t = 1; t < p.latency.size(); ++t) {
    if (p.latency[t] < p.latency[t - 1]) throw InvalidArgument("latencies must be nondecreasing");
  }
}

void check_digraph(const Digraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  check_index(g.source, n, "source node");
  check_index(g.target, n, "target node");
  if (g.source == g.target) throw InvalidArgument("source and target must differ");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : g.arcs) {
    check_index(u, n, "arc tail");
    check_index(v, n, "arc head");
    if (u == v) throw InvalidArgument("digraph has a loop");
    if (!seen.insert({u, v}).second) throw InvalidArgument("digraph repeats an arc");
  }
}

}  // namespace

std::pair<MedianInstance, ReductionMapping> reduce_data_placement(const DataPlacementProblem& p) {
  const int nk = static_cast<int>(p.caches.size());
  const int no = static_cast<int>(p.objects.size());
  const int nc = static_cast<int>(p.clients.size());
  check_size(p.capacity.size(), nk, "cache capacity list");
  check_size(p.object_of.size(), nc, "client object list");
  check_size(p.demand.size(), nc, "client demand list");
  check_size(p.storage_cost.size(), static_cast<size_t>(nk) * no, "storage cost table");
  check_size(p.distance.size(), static_cast<size_t>(nk) * nc, "cache distance table");
  check_nonnegative(p.demand, "client demand list");
  check_nonnegative(p.storage_cost, "storage cost table");
  check_nonnegative(p.distance, "cache distance table");
  for (int o : p.object_of) check_index(o, no, "client object");
  for (int u : p.capacity) {
    if (u < 0) throw InvalidArgument("cache capacity is negative");
  }
  check_cap(nk * no, "data placement");

  ReductionMapping map{"data_placement", {}, Rational(0)};
  std::vector<std::string> ids;
  for (int c = 0; c < nk; ++c) {
    for (int o = 0; o < no; ++o) {
      ids.push_back(p.caches[c] + ":" + p.objects[o]);
      map.facility_source.emplace_back(c, o);
    }
  }
  MedianInstance out = blank(std::move(ids), p.clients);
  out.demand = p.demand;
  std::vector<PartitionClass> classes;
  for (int c = 0; c < nk; ++c) {
    PartitionClass cls{{}, p.capacity[c]};
    for (int o = 0; o < no; ++o) {
      const int i = c * no + o;
      cls.members.push_back(i);
      out.open_cost[i] = p.storage_cost[i];
      for (int j = 0; j < nc; ++j) {
        if (p.object_of[j] == o) out.set_distance(i, j, p.distance[static_cast<size_t>(c) * nc + j]);
      }
    }
    if (!cls.members.empty()) classes.push_back(std::move(cls));
  }
  out.matroid = MatroidSpec::partition(std::move(classes));
  return {std::move(out), std::move(map)};
}

std::pair<MedianInstance, ReductionMapping> reduce_mobile_facility(const MobileFacilityProblem& p) {
  check_mobile(p);
  const int n = static_cast<int>(p.points.size());
  const int nm = static_cast<int>(p.facilities.size());
  const int nc = static_cast<int>(p.client_point.size());
  check_cap(nm * n, "mobile facility location");

  ReductionMapping map{"mobile_facility", {}, Rational(0)};
  std::vector<std::string> ids;
  for (int f = 0; f < nm; ++f) {
    for (int s = 0; s < n; ++s) {
      ids.push_back(p.facilities[f] + "@" + p.points[s]);
      map.facility_source.emplace_back(f, s);
    }
  }
  std::vector<std::string> clients;
  std::set<int> used;
  for (int j = 0; j < nc; ++j) {
    const int at = p.client_point[j];
    clients.push_back(used.insert(at).second ? p.points[at] : p.points[at] + "#" + std::to_string(j));
  }
  MedianInstance out = blank(std::move(ids), std::move(clients));
  out.demand = p.demand;
  std::vector<PartitionClass> classes;
  for (int f = 0; f < nm; ++f) {
    const int rest = rest_point(p, f);
    const Rational base = p.move_cost[static_cast<size_t>(f) * n + rest];
    map.cost_offset += base;
    PartitionClass cls{{}, 1};
    for (int s = 0; s < n; ++s) {
      const int i = f * n + s;
      cls.members.push_back(i);
      out.open_cost[i] = p.move_cost[i] - base;
      for (int j = 0; j < nc; ++j) {
        out.set_distance(i, j, p.distance[static_cast<size_t>(s) * n + p.client_point[j]]);
      }
    }
    if (!cls.members.empty()) classes.push_back(std::move(cls));
  }
  out.matroid = MatroidSpec::partition(std::move(classes));
  return {std::move(out), std::move(map)};
}

std::pair<MedianInstance, ReductionMapping> reduce_kmedian_forest(const KMedianForestProblem& p) {
  check_forest_problem(p);
  const int n = static_cast<int>(p.nodes.size());
  const int root = n;
  check_cap(n * (n + 1) / 2, "k-median forest");

  ReductionMapping map{"kmedian_forest", {}, Rational(0)};
  std::vector<std::string> ids;
  for (int v = 0; v < n; ++v) {
    ids.push_back("root-" + p.nodes[v]);
    map.facility_source.emplace_back(v, root);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      ids.push_back(p.nodes[u] + "-" + p.nodes[v]);
      map.facility_source.emplace_back(u, v);
    }
  }
  MedianInstance out = blank(std::move(ids), p.nodes);
  out.demand.assign(n, Rational(1));
  TwoMatroidVariant two;
  std::vector<GraphicEdge> edges;
  for (int i = 0; i < out.num_facilities(); ++i) {
    const auto [u, v] = map.facility_source[i];
    edges.push_back({i, u, v});
    if (v == root) {
      two.f1.push_back(i);
      out.open_cost[i] = p.open_cost[u];
      for (int j = 0; j < n; ++j) out.set_distance(i, j, p.assign_distance[static_cast<size_t>(u) * n + j]);
    } else {
      two.f2.push_back(i);
      out.open_cost[i] = p.tree_distance[static_cast<size_t>(u) * n + v];
    }
  }
  out.matroid = MatroidSpec::graphic(n + 1, std::move(edges));
  const int n2 = static_cast<int>(two.f2.size());
  two.matroid2 = MatroidSpec::uniform(two.f2, n2);
  two.bounds = {0, std::min(p.k, n), 0, n2, n, n};
  out.variant = std::move(two);
  return {std::move(out), std::move(map)};
}

std::pair<MedianInstance, ReductionMapping> reduce_min_latency(const MinLatencyProblem& p) {
  check_latency_problem(p);
  const int nf = static_cast<int>(p.facilities.size());
  const int nc = static_cast<int>(p.clients.size());
  check_cap(nf * nf, "minimum latency facility location");

  ReductionMapping map{"min_latency", {}, Rational(0)};
  std::vector<std::string> ids;
  for (int f = 0; f < nf; ++f) {
    for (int t = 0; t < nf; ++t) {
      ids.push_back(p.facilities[f] + "@" + std::to_string(t + 1));
      map.facility_source.emplace_back(f, t);
    }
  }
  MedianInstance out = blank(std::move(ids), p.clients);
  out.demand = p.demand;
  std::vector<PartitionClass> classes(nf, PartitionClass{{}, 1});
  for (int f = 0; f < nf; ++f) {
    for (int t = 0; t < nf; ++t) {
      const int i = f * nf + t;
      classes[t].members.push_back(i);
      out.open_cost[i] = p.open_cost[f] + p.slot_cost[i];
      for (int j = 0; j < nc; ++j) {
        out.set_distance(i, j, p.distance[static_cast<size_t>(f) * nc + j] + p.latency[t]);
      }
    }
  }
  out.matroid = MatroidSpec::partition(std::move(classes));
  return {std::move(out), std::move(map)};
}

MedianInstance generate_hardness_instance(const Digraph& g) {
  check_digraph(g);
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::string> ids;
  for (const auto& [u, v] : g.arcs) ids.push_back(g.nodes[u] + ">" + g.nodes[v]);
  std::vector<std::string> clients;
  std::vector<int> client_of(n, -1);
  for (int v = 0; v < n; ++v) {
    if (v == g.target) continue;
    client_of[v] = static_cast<int>(clients.size());
    clients.push_back(g.nodes[v]);
  }
  MedianInstance out = blank(std::move(ids), std::move(clients));
  out.demand.assign(out.num_clients(), Rational(1));
  std::vector<GraphicEdge> edges;
  std::vector<PartitionClass> by_head(n);
  for (int v = 0; v < n; ++v) by_head[v].capacity = v == g.source ? 0 : 1;
  for (int a = 0; a < static_cast<int>(g.arcs.size()); ++a) {
    const auto [u, v] = g.arcs[a];
    edges.push_back({a, u, v});
    by_head[v].members.push_back(a);
    if (client_of[u] >= 0) out.set_distance(a, client_of[u], Rational(0));
  }
  std::vector<PartitionClass> classes;
  for (auto& cls : by_head) {
    if (!cls.members.empty()) classes.push_back(std::move(cls));
  }
  out.matroid = MatroidSpec::graphic(n, std::move(edges));
  out.variant = IntersectionVariant{MatroidSpec::partition(std::move(classes))};
  return out;
}

DataPlacementSolution lift_data_placement(const DataPlacementProblem& p, const ReductionMapping& m,
                                          const RoundedSolution& sol) {
  DataPlacementSolution out;
  out.stored.assign(p.caches.size(), {});
  for (int i : sol.open) out.stored[m.facility_source.at(i).first].push_back(m.facility_source.at(i).second);
  for (auto& s : out.stored) s = make_set(std::move(s));
  for (int j = 0; j < static_cast<int>(p.clients.size()); ++j) {
    const int i = served_by(sol, p.demand[j], j);
    out.cache_of.push_back(i < 0 ? -1 : m.facility_source.at(i).first);
  }
  return out;
}

MobileFacilitySolution lift_mobile_facility(const MobileFacilityProblem& p, const ReductionMapping& m,
                                            const RoundedSolution& sol) {
  MobileFacilitySolution out;
  for (int f = 0; f < static_cast<int>(p.facilities.size()); ++f) out.location.push_back(rest_point(p, f));
  for (int i : sol.open) out.location[m.facility_source.at(i).first] = m.facility_source.at(i).second;
  for (int j = 0; j < static_cast<int>(p.client_point.size()); ++j) {
    const int i = served_by(sol, p.demand[j], j);
    out.facility_of.push_back(i < 0 ? -1 : m.facility_source.at(i).first);
  }
  return out;
}

KMedianForestSolution lift_kmedian_forest(const KMedianForestProblem& p, const ReductionMapping& m,
                                          const RoundedSolution& sol) {
  const int root = static_cast<int>(p.nodes.size());
  KMedianForestSolution out;
  for (int i : sol.open) {
    const auto [u, v] = m.facility_source.at(i);
    if (v == root) {
      out.medians.push_back(u);
    } else {
      out.forest.emplace_back(u, v);
    }
  }
  out.medians = make_set(std::move(out.medians));
  for (int j = 0; j < root; ++j) {
    const int i = served_by(sol, Rational(1), j);
    out.median_of.push_back(m.facility_source.at(i).first);
  }
  return out;
}

MinLatencySolution lift_min_latency(const MinLatencyProblem& p, const ReductionMapping& m,
                                    const RoundedSolution& sol) {
  const int nf = static_cast<int>(p.facilities.size());
  MinLatencySolution out;
  for (int j = 0; j < static_cast<int>(p.clients.size()); ++j) {
    const int i = served_by(sol, p.demand[j], j);
    out.facility_of.push_back(i < 0 ? -1 : m.facility_source.at(i).first);
  }
  // Among a facility's opened slots keep the one cheapest for it and its clients.
  std::vector<Rational> load(nf);
  for (size_t j = 0; j < p.clients.size(); ++j) {
    if (out.facility_of[j] >= 0) load[out.facility_of[j]] += p.demand[j];
  }
  out.slot.assign(nf, -1);
  std::vector<Rational> best(nf);
  for (int i : sol.open) {
    const auto [f, t] = m.facility_source.at(i);
    const Rational price = p.slot_cost[static_cast<size_t>(f) * nf + t] + load[f] * p.latency[t];
    if (out.slot[f] < 0 || price < best[f]) {
      out.slot[f] = t;
      best[f] = price;
    }
  }
  return out;
}

Rational data_placement_cost(const DataPlacementProblem& p, const DataPlacementSolution& s) {
  const int nk = static_cast<int>(p.caches.size());
  const int no = static_cast<int>(p.objects.size());
  const int nc = static_cast<int>(p.clients.size());
  check_size(s.stored.size(), nk, "stored object lists");
  check_size(s.cache_of.size(), nc, "client cache list");
  Rational cost = 0;
  for (int c = 0; c < nk; ++c) {
    const FacilitySet objects = make_set(s.stored[c]);
    if (static_cast<int>(objects.size()) > p.capacity[c]) {
      throw InvalidArgument("cache " + p.caches[c] + " stores more objects than it holds");
    }
    for (int o : objects) {
      check_index(o, no, "stored object");
      cost += p.storage_cost[static_cast<size_t>(c) * no + o];
    }
  }
  for (int j = 0; j < nc; ++j) {
    const int c = s.cache_of[j];
    if (c < 0 && sgn(p.demand[j]) == 0) continue;
    check_index(c, nk, "client cache");
    if (!std::binary_search(s.stored[c].begin(), s.stored[c].end(), p.object_of[j])) {
      throw InvalidArgument("client " + p.clients[j] + " reads from a cache without its object");
    }
    cost += p.demand[j] * p.distance[static_cast<size_t>(c) * nc + j];
  }
  return cost;
}

Rational mobile_facility_cost(const MobileFacilityProblem& p, const MobileFacilitySolution& s) {
  check_mobile(p);
  const int n = static_cast<int>(p.points.size());
  const int nm = static_cast<int>(p.facilities.size());
  check_size(s.location.size(), nm, "facility location list");
  check_size(s.facility_of.size(), p.client_point.size(), "client facility list");
  Rational cost = 0;
  for (int f = 0; f < nm; ++f) {
    check_index(s.location[f], n, "facility location");
    cost += p.move_cost[static_cast<size_t>(f) * n + s.location[f]];
  }
  for (size_t j = 0; j < p.client_point.size(); ++j) {
    const int f = s.facility_of[j];
    if (f < 0 && sgn(p.demand[j]) == 0) continue;
    check_index(f, nm, "client facility");
    cost += p.demand[j] * p.distance[static_cast<size_t>(s.location[f]) * n + p.client_point[j]];
  }
  return cost;
}

Rational kmedian_forest_cost(const KMedianForestProblem& p, const KMedianForestSolution& s) {
  check_forest_problem(p);
  const int n = static_cast<int>(p.nodes.size());
  const FacilitySet medians = make_set(s.medians);
  if (medians.empty() || static_cast<int>(medians.size()) > p.k) {
    throw InvalidArgument("k-median forest needs between 1 and k medians");
  }
  check_size(s.median_of.size(), n, "node median list");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Rational cost = 0;
  for (int v : medians) {
    check_index(v, n, "median");
    cost += p.open_cost[v];
  }
  for (const auto& [u, v] : s.forest) {
    check_index(u, n, "forest edge");
    check_index(v, n, "forest edge");
    const int a = find(u), b = find(v);
    if (a == b) throw InvalidArgument("forest edges close a cycle");
    parent[a] = b;
    cost += p.tree_distance[static_cast<size_t>(u) * n + v];
  }
  std::vector<bool> rooted(n, false);
  for (int v : medians) rooted[find(v)] = true;
  for (int v = 0; v < n; ++v) {
    if (!rooted[find(v)]) throw InvalidArgument("node " + p.nodes[v] + " has no median in its tree");
    const int med = s.median_of[v];
    if (!std::binary_search(medians.begin(), medians.end(), med)) {
      throw InvalidArgument("node " + p.nodes[v] + " is assigned to a non-median");
    }
    cost += p.assign_distance[static_cast<size_t>(med) * n + v];
  }
  return cost;
}

Rational min_latency_cost(const MinLatencyProblem& p, const MinLatencySolution& s) {
  check_latency_problem(p);
  const int nf = static_cast<int>(p.facilities.size());
  const int nc = static_cast<int>(p.clients.size());
  check_size(s.slot.size(), nf, "facility slot list");
  check_size(s.facility_of.size(), nc, "client facility list");
  Rational cost = 0;
  std::set<int> taken;
  for (int f = 0; f < nf; ++f) {
    const int t = s.slot[f];
    if (t < 0) continue;
    check_index(t, nf, "facility slot");
    if (!taken.insert(t).second) throw InvalidArgument("two facilities share a slot");
    cost += p.open_cost[f] + p.slot_cost[static_cast<size_t>(f) * nf + t];
  }
  for (int j = 0; j < nc; ++j) {
    const int f = s.facility_of[j];
    if (f < 0 && sgn(p.demand[j]) == 0) continue;
    check_index(f, nf, "client facility");
    if (s.slot[f] < 0) throw InvalidArgument("client " + p.clients[j] + " uses a closed facility");
    cost += p.demand[j] * (p.distance[static_cast<size_t>(f) * nc + j] + p.latency[s.slot[f]]);
  }
  return cost;
}

// ---- Source documents ----

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> id_list(const Json& value, const std::string& context) {
  if (!value.is_array()) throw ParseError(context + ": expected a list of ids");
  std::vector<std::string> out;
  for (const auto& v : value) out.push_back(to_id(v, context));
  std::set<std::string> seen(out.begin(), out.end());
  if (seen.size() != out.size()) throw ParseError(context + ": repeated id");
  return out;
}

Rational optional_rational(const Json& obj, const std::string& key, const std::string& context) {
  auto it = obj.find(key);
  return it == obj.end() ? Rational(0) : to_rational(*it, context + "." + key);
}

// Full table rows x cols from {row: {col: value}}.
std::vector<Rational> rect_table(const Json& value, const IdTable& rows, int nrows, const IdTable& cols,
                                 int ncols, const std::string& context) {
  if (!value.is_object()) throw ParseError(context + ": expected an object of rows");
  std::vector<std::optional<Rational>> cells(static_cast<size_t>(nrows) * ncols);
  for (const auto& [rkey, row] : value.items()) {
    const int r = rows.index(rkey, context);
    if (!row.is_object()) throw ParseError(context + "." + rkey + ": expected an object");
    for (const auto& [ckey, cell] : row.items()) {
      cells[static_cast<size_t>(r) * ncols + cols.index(ckey, context)] =
          to_rational(cell, context + "." + rkey + "." + ckey);
    }
  }
  std::vector<Rational> out;
  for (size_t k = 0; k < cells.size(); ++k) {
    if (!cells[k]) {
      throw ParseError(context + ": missing entry " + rows.id(static_cast<int>(k) / ncols) + "," +
                       cols.id(static_cast<int>(k) % ncols));
    }
    out.push_back(*cells[k]);
  }
  return out;
}

// Square metric table; either orientation may be given, the diagonal is zero.
std::vector<Rational> square_table(const Json& value, const IdTable& ids, int n, const std::string& context) {
  if (!value.is_object()) throw ParseError(context + ": expected an object of rows");
  std::vector<std::optional<Rational>> cells(static_cast<size_t>(n) * n);
  for (int v = 0; v < n; ++v) cells[static_cast<size_t>(v) * n + v] = Rational(0);
  for (const auto& [rkey, row] : value.items()) {
    const int a = ids.index(rkey, context);
    if (!row.is_object()) throw ParseError(context + "." + rkey + ": expected an object");
    for (const auto& [ckey, cell] : row.items()) {
      const int b = ids.index(ckey, context);
      const Rational d = to_rational(cell, context + "." + rkey + "." + ckey);
      for (size_t k : {static_cast<size_t>(a) * n + b, static_cast<size_t>(b) * n + a}) {
        if (cells[k] && *cells[k] != d) {
          throw ParseError(context + ": conflicting entries for " + rkey + "," + ckey);
        }
        cells[k] = d;
      }
    }
  }
  std::vector<Rational> out;
  for (size_t k = 0; k < cells.size(); ++k) {
    if (!cells[k]) {
      throw ParseError(context + ": missing entry " + ids.id(static_cast<int>(k) / n) + "," +
                       ids.id(static_cast<int>(k) % n));
    }
    out.push_back(*cells[k]);
  }
  return out;
}

}  // namespace

DataPlacementProblem parse_data_placement(std::string_view text) {
  const Json doc = parse_json(text);
  DataPlacementProblem p;
  const Json& caches = require(doc, "caches");
  if (!caches.is_array()) throw ParseError("caches: expected a list");
  for (const auto& c : caches) {
    p.caches.push_back(to_id(require(c, "id"), "caches"));
    p.capacity.push_back(to_int(require(c, "capacity"), "caches." + p.caches.back() + ".capacity"));
  }
  if (std::set<std::string>(p.caches.begin(), p.caches.end()).size() != p.caches.size()) {
    throw ParseError("caches: repeated id");
  }
  p.objects = id_list(require(doc, "objects"), "objects");
  IdTable cache_ids(p.caches, "cache"), object_ids(p.objects, "object");
  const Json& clients = require(doc, "clients");
  if (!clients.is_array()) throw ParseError("clients: expected a list");
  for (const auto& c : clients) {
    p.clients.push_back(to_id(require(c, "id"), "clients"));
    const std::string ctx = "clients." + p.clients.back();
    p.demand.push_back(to_rational(require(c, "demand"), ctx + ".demand"));
    p.object_of.push_back(object_ids.index(require(c, "object"), ctx + ".object"));
  }
  if (std::set<std::string>(p.clients.begin(), p.clients.end()).size() != p.clients.size()) {
    throw ParseError("clients: repeated id");
  }
  IdTable client_ids(p.clients, "client");
  const int nk = static_cast<int>(p.caches.size());
  p.storage_cost = rect_table(require(doc, "storage_cost"), cache_ids, nk, object_ids,
                              static_cast<int>(p.objects.size()), "storage_cost");
  p.distance = rect_table(require(doc, "distance"), cache_ids, nk, client_ids,
                          static_cast<int>(p.clients.size()), "distance");
  return p;
}

MobileFacilityProblem parse_mobile_facility(std::string_view text) {
  const Json doc = parse_json(text);
  MobileFacilityProblem p;
  p.points = id_list(require(doc, "points"), "points");
  IdTable point_ids(p.points, "point");
  const int n = static_cast<int>(p.points.size());
  p.distance = square_table(require(doc, "distance"), point_ids, n, "distance");
  const Json& clients = require(doc, "clients");
  if (!clients.is_array()) throw ParseError("clients: expected a list");
  for (const auto& c : clients) {
    p.client_point.push_back(point_ids.index(require(c, "id"), "clients"));
    p.demand.push_back(to_rational(require(c, "demand"), "clients." + p.points[p.client_point.back()]));
  }
  const Json& facilities = require(doc, "facilities");
  if (!facilities.is_array()) throw ParseError("facilities: expected a list");
  for (const auto& f : facilities) {
    p.facilities.push_back(to_id(require(f, "id"), "facilities"));
    const std::string ctx = "facilities." + p.facilities.back();
    p.start.push_back(point_ids.index(require(f, "start"), ctx + ".start"));
    const Json& moves = require(f, "move_cost");
    if (!moves.is_object()) throw ParseError(ctx + ".move_cost: expected an object");
    std::vector<std::optional<Rational>> row(n);
    for (const auto& [key, cell] : moves.items()) {
      row[point_ids.index(key, ctx + ".move_cost")] = to_rational(cell, ctx + ".move_cost." + key);
    }
    for (int s = 0; s < n; ++s) {
      if (!row[s]) throw ParseError(ctx + ".move_cost: missing point " + p.points[s]);
      p.move_cost.push_back(*row[s]);
    }
  }
  if (std::set<std::string>(p.facilities.begin(), p.facilities.end()).size() != p.facilities.size()) {
    throw ParseError("facilities: repeated id");
  }
  return p;
}

KMedianForestProblem parse_kmedian_forest(std::string_view text) {
  const Json doc = parse_json(text);
  KMedianForestProblem p;
  p.nodes = id_list(require(doc, "nodes"), "nodes");
  IdTable node_ids(p.nodes, "node");
  const int n = static_cast<int>(p.nodes.size());
  p.assign_distance = square_table(require(doc, "assign_distance"), node_ids, n, "assign_distance");
  p.tree_distance = square_table(require(doc, "tree_distance"), node_ids, n, "tree_distance");
  p.k = to_int(require(doc, "k"), "k");
  p.open_cost.assign(n, Rational(0));
  if (auto it = doc.find("open_cost"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("open_cost: expected an object");
    for (const auto& [key, cell] : it->items()) {
      p.open_cost[node_ids.index(key, "open_cost")] = to_rational(cell, "open_cost." + key);
    }
  }
  return p;
}

MinLatencyProblem parse_min_latency(std::string_view text) {
  const Json doc = parse_json(text);
  MinLatencyProblem p;
  const Json& facilities = require(doc, "facilities");
  if (!facilities.is_array()) throw ParseError("facilities: expected a list");
  const size_t nf = facilities.size();
  for (const auto& f : facilities) {
    p.facilities.push_back(to_id(require(f, "id"), "facilities"));
    const std::string ctx = "facilities." + p.facilities.back();
    p.open_cost.push_back(optional_rational(f, "cost", ctx));
    std::vector<Rational> slots(nf, Rational(0));
    if (auto it = f.find("slot_cost"); it != f.end()) {
      if (!it->is_array() || it->size() != nf) {
        throw ParseError(ctx + ".slot_cost: expected one entry per slot");
      }
      for (size_t t = 0; t < nf; ++t) slots[t] = to_rational((*it)[t], ctx + ".slot_cost");
    }
    p.slot_cost.insert(p.slot_cost.end(), slots.begin(), slots.end());
  }
  if (std::set<std::string>(p.facilities.begin(), p.facilities.end()).size() != p.facilities.size()) {
    throw ParseError("facilities: repeated id");
  }
  const Json& clients = require(doc, "clients");
  if (!clients.is_array()) throw ParseError("clients: expected a list");
  for (const auto& c : clients) {
    p.clients.push_back(to_id(require(c, "id"), "clients"));
    p.demand.push_back(to_rational(require(c, "demand"), "clients." + p.clients.back() + ".demand"));
  }
  if (std::set<std::string>(p.clients.begin(), p.clients.end()).size() != p.clients.size()) {
    throw ParseError("clients: repeated id");
  }
  IdTable fac_ids(p.facilities, "facility"), client_ids(p.clients, "client");
  p.distance = rect_table(require(doc, "distance"), fac_ids, static_cast<int>(nf), client_ids,
                          static_cast<int>(p.clients.size()), "distance");
  const Json& latency = require(doc, "latency");
  if (!latency.is_array() || latency.size() != nf) {
    throw ParseError("latency: expected one entry per facility");
  }
  for (const auto& l : latency) p.latency.push_back(to_rational(l, "latency"));
  return p;
}

Digraph parse_digraph(std::string_view text) {
  const Json doc = parse_json(text);
  Digraph g;
  g.nodes = id_list(require(doc, "nodes"), "nodes");
  IdTable node_ids(g.nodes, "node");
  const Json& arcs = require(doc, "arcs");
  if (!arcs.is_array()) throw ParseError("arcs: expected a list");
  for (const auto& a : arcs) {
    if (!a.is_array() || a.size() != 2) throw ParseError("arcs: expected [tail, head] pairs");
    g.arcs.emplace_back(node_ids.index(a[0], "arcs"), node_ids.index(a[1], "arcs"));
  }
  g.source = node_ids.index(require(doc, "source"), "source");
  g.target = node_ids.index(require(doc, "target"), "target");
  return g;
}

std::pair<MedianInstance, ReductionMapping> reduce_document(std::string_view kind, std::string_view text) {
  if (kind == "data_placement") return reduce_data_placement(parse_data_placement(text));
  if (kind == "mobile_facility") return reduce_mobile_facility(parse_mobile_facility(text));
  if (kind == "kmedian_forest") return reduce_kmedian_forest(parse_kmedian_forest(text));
  if (kind == "min_latency") return reduce_min_latency(parse_min_latency(text));
  if (kind == "hardness") {
    const Digraph g = parse_digraph(text);
    MedianInstance inst = generate_hardness_instance(g);
    return {std::move(inst), ReductionMapping{"hardness", g.arcs, Rational(0)}};
  }
  throw ParseError("unknown source kind \"" + std::string(kind) + "\"");
}

std::string serialize_mapping(const ReductionMapping& m) {
  Json doc;
  doc["kind"] = m.kind;
  Json sources = Json::array();
  for (const auto& [a, b] : m.facility_source) sources.push_back(Json::array({a, b}));
  doc["facility_source"] = std::move(sources);
  doc["cost_offset"] = json_support::from_rational(m.cost_offset);
  return doc.dump(2);
}

}  // namespace matmed
