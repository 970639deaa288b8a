// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/instance_io.hpp"

#include "json_support.hpp"

namespace matmed {

namespace json_support {

Json matroid_to_json(const MatroidSpec& m, const IdTable& facilities) {
  Json out;
  out["kind"] = m.kind();
  if (const auto* u = std::get_if<UniformMatroid>(&m.variant())) {
    out["ground"] = facilities.ids(m.ground());
    out["rank"] = u->rank;
  } else if (const auto* p = std::get_if<PartitionMatroid>(&m.variant())) {
    Json classes = Json::array();
    for (const auto& c : p->classes) {
      classes.push_back({{"members", facilities.ids(c.members)}, {"capacity", c.capacity}});
    }
    out["classes"] = classes;
  } else if (const auto* lam = std::get_if<LaminarMatroid>(&m.variant())) {
    Json family = Json::array();
    for (const auto& a : lam->family) {
      family.push_back({{"members", facilities.ids(a.members)}, {"bound", a.bound}});
    }
    out["ground"] = facilities.ids(m.ground());
    out["family"] = family;
  } else if (const auto* g = std::get_if<GraphicMatroid>(&m.variant())) {
    Json edges = Json::array();
    for (const auto& e : g->edges) {
      edges.push_back({{"facility", facilities.id(e.facility)}, {"u", e.u}, {"v", e.v}});
    }
    out["vertices"] = g->vertex_count;
    out["edges"] = edges;
  } else {
    const auto& x = std::get<ExplicitMatroid>(m.variant());
    Json bases = Json::array();
    for (const auto& b : x.bases) bases.push_back(facilities.ids(b));
    out["ground"] = facilities.ids(m.ground());
    out["bases"] = bases;
  }
  return out;
}

MatroidSpec matroid_from_json(const Json& value, const IdTable& facilities,
                              const FacilitySet& default_ground) {
  std::string kind = to_id(require(value, "kind"), "matroid.kind");
  auto ground = [&]() {
    return value.contains("ground") ? facilities.set(value["ground"], "matroid.ground")
                                    : default_ground;
  };
  if (kind == "uniform") {
    return MatroidSpec::uniform(ground(), to_int(require(value, "rank"), "matroid.rank"));
  }
  if (kind == "partition") {
    std::vector<PartitionClass> classes;
    const Json& list = require(value, "classes");
    if (!list.is_array()) throw ParseError("matroid.classes: expected a list");
    for (const auto& c : list) {
      classes.push_back({facilities.set(require(c, "members"), "matroid.classes.members"),
                         to_int(require(c, "capacity"), "matroid.classes.capacity")});
    }
    return MatroidSpec::partition(std::move(classes));
  }
  if (kind == "laminar") {
    std::vector<LaminarSet> family;
    const Json& list = require(value, "family");
    if (!list.is_array()) throw ParseError("matroid.family: expected a list");
    for (const auto& a : list) {
      family.push_back({facilities.set(require(a, "members"), "matroid.family.members"),
                        to_int(require(a, "bound"), "matroid.family.bound")});
    }
    return MatroidSpec::laminar(ground(), std::move(family));
  }
  if (kind == "graphic") {
    std::vector<GraphicEdge> edges;
    const Json& list = require(value, "edges");
    if (!list.is_array()) throw ParseError("matroid.edges: expected a list");
    for (const auto& e : list) {
      edges.push_back({facilities.index(require(e, "facility"), "matroid.edges.facility"),
                       to_int(require(e, "u"), "matroid.edges.u"),
                       to_int(require(e, "v"), "matroid.edges.v")});
    }
    return MatroidSpec::graphic(to_int(require(value, "vertices"), "matroid.vertices"),
                                std::move(edges));
  }
  if (kind == "explicit") {
    std::vector<FacilitySet> bases;
    const Json& list = require(value, "bases");
    if (!list.is_array()) throw ParseError("matroid.bases: expected a list");
    for (const auto& b : list) bases.push_back(facilities.set(b, "matroid.bases"));
    return MatroidSpec::explicit_bases(ground(), std::move(bases));
  }
  throw ParseError("unknown matroid kind \"" + kind + "\"");
}

}  // namespace json_support

using json_support::IdTable;
using json_support::Json;
using json_support::require;

namespace {

Json bounds_to_json(const CardinalityBounds& b) {
  return {{"lb1", b.lb1}, {"ub1", b.ub1}, {"lb2", b.lb2},
          {"ub2", b.ub2}, {"lb", b.lb},   {"ub", b.ub}};
}

CardinalityBounds bounds_from_json(const Json& v) {
  using json_support::to_int;
  CardinalityBounds b;
  b.lb1 = to_int(require(v, "lb1"), "bounds.lb1");
  b.ub1 = to_int(require(v, "ub1"), "bounds.ub1");
  b.lb2 = to_int(require(v, "lb2"), "bounds.lb2");
  b.ub2 = to_int(require(v, "ub2"), "bounds.ub2");
  b.lb = to_int(require(v, "lb"), "bounds.lb");
  b.ub = to_int(require(v, "ub"), "bounds.ub");
  return b;
}

std::vector<std::string> id_list(const Json& v, const std::string& key) {
  if (!v.is_array()) throw ParseError(key + ": expected a list of ids");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(json_support::to_id(e, key));
  return out;
}

std::vector<Rational> per_entity(const Json& v, const IdTable& table, size_t count,
                                 const std::string& key) {
  if (!v.is_object()) throw ParseError(key + ": expected an object keyed by id");
  std::vector<std::optional<Rational>> seen(count);
  for (auto it = v.begin(); it != v.end(); ++it) {
    int k = table.index(Json(it.key()), key);
    seen[k] = json_support::to_rational(it.value(), key + "." + it.key());
  }
  std::vector<Rational> out(count);
  for (size_t k = 0; k < count; ++k) {
    if (!seen[k]) throw ParseError(key + ": missing entry for \"" + table.id(k) + "\"");
    out[k] = *seen[k];
  }
  return out;
}

Json per_entity_json(const std::vector<Rational>& values, const IdTable& table) {
  Json out = Json::object();
  for (size_t k = 0; k < values.size(); ++k) out[table.id(k)] = json_support::from_rational(values[k]);
  return out;
}

}  // namespace

void drop_zero_demand_clients(MedianInstance& inst) {
  std::vector<int> keep;
  for (int j = 0; j < inst.num_clients(); ++j) {
    if (sgn(inst.demand[j]) != 0) keep.push_back(j);
  }
  if (static_cast<int>(keep.size()) == inst.num_clients()) return;
  MedianInstance out = inst;
  out.clients.clear();
  out.demand.clear();
  for (int j : keep) {
    out.clients.push_back(inst.clients[j]);
    out.demand.push_back(inst.demand[j]);
  }
  out.reset_distances();
  for (int i = 0; i < inst.num_facilities(); ++i) {
    for (size_t k = 0; k < keep.size(); ++k) out.set_distance(i, k, inst.distance(i, keep[k]));
  }
  if (auto* p = std::get_if<PenaltyVariant>(&out.variant)) {
    std::vector<Rational> penalty;
    for (int j : keep) penalty.push_back(p->penalty[j]);
    p->penalty = std::move(penalty);
  }
  inst = std::move(out);
}

MedianInstance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  MedianInstance inst;
  inst.facilities = id_list(require(doc, "facilities"), "facilities");
  inst.clients = id_list(require(doc, "clients"), "clients");
  IdTable fac(inst.facilities, "facility");
  IdTable cli(inst.clients, "client");
  inst.demand = per_entity(require(doc, "demands"), cli, inst.clients.size(), "demands");
  inst.open_cost = per_entity(require(doc, "open_costs"), fac, inst.facilities.size(), "open_costs");
  inst.reset_distances();
  const Json& dists = require(doc, "distances");
  if (!dists.is_array()) throw ParseError("distances: expected a list");
  for (const auto& entry : dists) {
    if (!entry.is_array() || entry.size() != 3) {
      throw ParseError("distances: each entry must be [facility, client, \"p/q\"]");
    }
    int i = fac.index(entry[0], "distances");
    int j = cli.index(entry[1], "distances");
    if (inst.distance(i, j)) {
      throw ParseError("distances: duplicate entry for " + inst.facilities[i] + "-" + inst.clients[j]);
    }
    inst.set_distance(i, j, json_support::to_rational(entry[2], "distances"));
  }
  FacilitySet all(inst.facilities.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  inst.matroid = json_support::matroid_from_json(require(doc, "matroid"), fac, all);

  const Json& variant = require(doc, "variant");
  std::string kind = json_support::to_id(require(variant, "kind"), "variant.kind");
  if (kind == "plain") {
    inst.variant = PlainVariant{};
  } else if (kind == "penalty") {
    inst.variant = PenaltyVariant{
        per_entity(require(variant, "penalties"), cli, inst.clients.size(), "variant.penalties")};
  } else if (kind == "two_matroid") {
    TwoMatroidVariant v;
    v.f1 = fac.set(require(variant, "f1"), "variant.f1");
    v.f2 = fac.set(require(variant, "f2"), "variant.f2");
    v.matroid2 = json_support::matroid_from_json(require(variant, "matroid2"), fac, v.f2);
    v.bounds = bounds_from_json(require(variant, "bounds"));
    inst.variant = std::move(v);
  } else if (kind == "laminar") {
    LaminarVariant v;
    v.f1 = fac.set(require(variant, "f1"), "variant.f1");
    v.f2 = fac.set(require(variant, "f2"), "variant.f2");
    const Json& family = require(variant, "family");
    if (!family.is_array()) throw ParseError("variant.family: expected a list");
    for (const auto& a : family) {
      v.family.push_back({fac.set(require(a, "members"), "variant.family.members"),
                          json_support::to_int(require(a, "lower"), "variant.family.lower"),
                          json_support::to_int(require(a, "upper"), "variant.family.upper")});
    }
    v.bounds = bounds_from_json(require(variant, "bounds"));
    inst.variant = std::move(v);
  } else if (kind == "knapsack") {
    inst.variant = KnapsackVariant{
        per_entity(require(variant, "weights"), fac, inst.facilities.size(), "variant.weights"),
        json_support::to_rational(require(variant, "budget"), "variant.budget")};
  } else if (kind == "intersection") {
    inst.variant =
        IntersectionVariant{json_support::matroid_from_json(require(variant, "matroid2"), fac, all)};
  } else {
    throw ParseError("unknown variant kind \"" + kind + "\"");
  }
  drop_zero_demand_clients(inst);
  return inst;
}

std::string serialize_instance(const MedianInstance& inst) {
  IdTable fac(inst.facilities, "facility");
  IdTable cli(inst.clients, "client");
  Json doc;
  doc["facilities"] = inst.facilities;
  doc["clients"] = inst.clients;
  doc["demands"] = per_entity_json(inst.demand, cli);
  doc["open_costs"] = per_entity_json(inst.open_cost, fac);
  Json dists = Json::array();
  for (int i = 0; i < inst.num_facilities(); ++i) {
    for (int j = 0; j < inst.num_clients(); ++j) {
      if (const Distance& d = inst.distance(i, j)) {
        dists.push_back({inst.facilities[i], inst.clients[j], to_string(*d)});
      }
    }
  }
  doc["distances"] = dists;
  doc["matroid"] = json_support::matroid_to_json(inst.matroid, fac);
  Json variant;
  variant["kind"] = variant_name(inst.variant);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PenaltyVariant>) {
          variant["penalties"] = per_entity_json(v.penalty, cli);
        } else if constexpr (std::is_same_v<T, TwoMatroidVariant>) {
          variant["f1"] = fac.ids(v.f1);
          variant["f2"] = fac.ids(v.f2);
          variant["matroid2"] = json_support::matroid_to_json(v.matroid2, fac);
          variant["bounds"] = bounds_to_json(v.bounds);
        } else if constexpr (std::is_same_v<T, LaminarVariant>) {
          variant["f1"] = fac.ids(v.f1);
          variant["f2"] = fac.ids(v.f2);
          Json family = Json::array();
          for (const auto& a : v.family) {
            family.push_back(
                {{"members", fac.ids(a.members)}, {"lower", a.lower}, {"upper", a.upper}});
          }
          variant["family"] = family;
          variant["bounds"] = bounds_to_json(v.bounds);
        } else if constexpr (std::is_same_v<T, KnapsackVariant>) {
          variant["weights"] = per_entity_json(v.weight, fac);
          variant["budget"] = to_string(v.budget);
        } else if constexpr (std::is_same_v<T, IntersectionVariant>) {
          variant["matroid2"] = json_support::matroid_to_json(v.matroid2, fac);
        }
      },
      inst.variant);
  doc["variant"] = variant;
  return doc.dump(2) + "\n";
}

}  // namespace matmed
