// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>
#include <random>

#include "matmed/errors.hpp"
#include "matmed/instance.hpp"

namespace matmed {
namespace {

class Draw {
 public:
  explicit Draw(uint64_t seed) : rng_(seed) {}
  int between(int lo, int hi) {
    if (hi <= lo) return lo;
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  Rational halves(int lo, int hi) { return rat(between(lo, hi), 2); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[between(0, static_cast<int>(k) - 1)]);
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<int> iota_list(const FacilitySet& base) { return base; }

MatroidSpec random_partition(Draw& draw, const FacilitySet& ground) {
  std::vector<int> order = iota_list(ground);
  draw.shuffle(order);
  int count = draw.between(1, std::min<int>(3, order.size()));
  std::vector<PartitionClass> classes(count);
  for (size_t k = 0; k < order.size(); ++k) {
    int c = k < static_cast<size_t>(count) ? static_cast<int>(k) : draw.between(0, count - 1);
    classes[c].members.push_back(order[k]);
  }
  for (auto& c : classes) c.capacity = draw.between(1, std::max<int>(1, c.members.size() / 2));
  return MatroidSpec::partition(std::move(classes));
}

MatroidSpec random_graphic(Draw& draw, const FacilitySet& ground) {
  int vertices = draw.between(3, 5);
  std::vector<GraphicEdge> edges;
  for (int f : ground) {
    int u = draw.between(0, vertices - 1);
    int v = draw.between(0, vertices - 2);
    if (v >= u) ++v;
    edges.push_back({f, u, v});
  }
  return MatroidSpec::graphic(vertices, std::move(edges));
}

MatroidSpec random_laminar(Draw& draw, const FacilitySet& ground) {
  std::vector<int> order = iota_list(ground);
  draw.shuffle(order);
  const int n = static_cast<int>(order.size());
  std::vector<LaminarSet> family;
  family.push_back({ground, draw.between(1, std::max(1, n / 2))});
  int a = draw.between(1, n);
  FacilitySet set_a(order.begin(), order.begin() + a);
  family.push_back({set_a, draw.between(1, a)});
  int b = draw.between(1, a);
  if (b < a) family.push_back({FacilitySet(order.begin(), order.begin() + b), draw.between(1, b)});
  if (a < n) {
    int c = draw.between(1, n - a);
    family.push_back({FacilitySet(order.begin() + a, order.begin() + a + c), draw.between(1, c)});
  }
  return MatroidSpec::laminar(ground, std::move(family));
}

MatroidSpec random_explicit(Draw& draw, const FacilitySet& ground) {
  MatroidSpec source = draw.between(0, 1) ? random_graphic(draw, ground) : random_partition(draw, ground);
  int r = rank(source, ground);
  std::vector<FacilitySet> bases;
  const uint32_t count = 1u << ground.size();
  for (uint32_t mask = 0; mask < count; ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    FacilitySet s;
    for (size_t k = 0; k < ground.size(); ++k) {
      if (mask & (1u << k)) s.push_back(ground[k]);
    }
    if (is_independent(source, s)) bases.push_back(s);
  }
  return MatroidSpec::explicit_bases(ground, std::move(bases));
}

MatroidSpec random_matroid(Draw& draw, const std::string& kind, const FacilitySet& ground) {
  if (kind == "uniform") {
    return MatroidSpec::uniform(ground, draw.between(1, std::max<int>(1, ground.size() / 2)));
  }
  if (kind == "partition") return random_partition(draw, ground);
  if (kind == "laminar") return random_laminar(draw, ground);
  if (kind == "graphic") return random_graphic(draw, ground);
  if (kind == "explicit") return random_explicit(draw, ground);
  throw InvalidArgument("unknown matroid kind \"" + kind + "\"");
}

// Random set independent in `m` (and in `m2` on its ground), seeded with a
// facility of `must` so that clients can be served.
FacilitySet random_feasible_set(Draw& draw, const MatroidSpec& m, const MatroidSpec* m2,
                                const FacilitySet& must, int nf) {
  std::vector<int> order(nf);
  std::iota(order.begin(), order.end(), 0);
  draw.shuffle(order);
  std::stable_partition(order.begin(), order.end(), [&](int i) {
    return std::binary_search(must.begin(), must.end(), i);
  });
  std::swap(order[0], order[draw.between(0, static_cast<int>(must.size()) - 1)]);
  FacilitySet chosen;
  for (int i : order) {
    FacilitySet trial = make_set([&] { auto t = chosen; t.push_back(i); return t; }());
    if (!is_independent(m, trial)) continue;
    if (m2 && m2->contains(i)) {
      FacilitySet part;
      for (int e : trial) {
        if (m2->contains(e)) part.push_back(e);
      }
      if (!is_independent(*m2, part)) continue;
    }
    if (draw.between(0, 3) == 0 && !chosen.empty()) continue;
    chosen = trial;
  }
  return chosen;
}

int count_in(const FacilitySet& s, const FacilitySet& part) {
  int n = 0;
  for (int e : s) n += std::binary_search(part.begin(), part.end(), e) ? 1 : 0;
  return n;
}

CardinalityBounds random_bounds(Draw& draw, const FacilitySet& chosen, const FacilitySet& f1,
                                const FacilitySet& f2) {
  int in1 = count_in(chosen, f1);
  int in2 = count_in(chosen, f2);
  int all = static_cast<int>(chosen.size());
  CardinalityBounds b;
  b.lb1 = draw.between(0, in1);
  b.ub1 = draw.between(std::max(in1, 1), static_cast<int>(f1.size()));
  b.lb2 = draw.between(0, in2);
  b.ub2 = draw.between(in2, static_cast<int>(f2.size()));
  b.lb = draw.between(0, all);
  b.ub = draw.between(all, static_cast<int>(f1.size() + f2.size()));
  return b;
}

}  // namespace

MedianInstance generate_random(uint64_t seed, const GeneratorParams& params) {
  if (params.facilities < 1 || params.facilities > 16) {
    throw InvalidArgument("generator supports 1..16 facilities");
  }
  if (params.clients < 0 || params.clients > 32) throw InvalidArgument("generator supports 0..32 clients");
  if (params.metric != "line" && params.metric != "grid") {
    throw InvalidArgument("unknown metric kind \"" + params.metric + "\"");
  }
  const bool split = params.variant == "two_matroid" || params.variant == "laminar";
  if (split && params.facilities < 2) throw InvalidArgument("split variants need two facilities");
  Draw draw(seed);
  const int nf = params.facilities;
  const int nc = params.clients;

  MedianInstance inst;
  for (int i = 0; i < nf; ++i) inst.facilities.push_back("f" + std::to_string(i));
  for (int j = 0; j < nc; ++j) inst.clients.push_back("c" + std::to_string(j));
  for (int j = 0; j < nc; ++j) inst.demand.push_back(draw.halves(1, 6));
  for (int i = 0; i < nf; ++i) inst.open_cost.push_back(draw.halves(0, 8));

  FacilitySet all(nf);
  std::iota(all.begin(), all.end(), 0);
  FacilitySet f1 = all, f2;
  if (split) {
    std::vector<int> order = all;
    draw.shuffle(order);
    int n1 = draw.between(1, nf - 1);
    f1 = make_set({order.begin(), order.begin() + n1});
    f2 = make_set({order.begin() + n1, order.end()});
  }

  auto point = [&]() {
    int x = draw.between(0, 20);
    int y = params.metric == "grid" ? draw.between(0, 20) : 0;
    return std::pair<Rational, Rational>(rat(x, 2), rat(y, 2));
  };
  std::vector<std::pair<Rational, Rational>> fpos(nf), cpos(nc);
  for (int i = 0; i < nf; ++i) fpos[i] = point();
  for (int j = 0; j < nc; ++j) cpos[j] = point();
  inst.reset_distances();
  for (int i : f1) {
    for (int j = 0; j < nc; ++j) {
      inst.set_distance(i, j, Rational(abs(fpos[i].first - cpos[j].first) +
                                       abs(fpos[i].second - cpos[j].second)));
    }
  }

  if (params.variant == "knapsack") {
    inst.matroid = MatroidSpec::uniform(all, nf);
  } else {
    inst.matroid = random_matroid(draw, params.matroid, all);
  }

  if (params.variant == "plain") {
    inst.variant = PlainVariant{};
  } else if (params.variant == "penalty") {
    PenaltyVariant v;
    for (int j = 0; j < nc; ++j) v.penalty.push_back(draw.halves(0, 30));
    inst.variant = std::move(v);
  } else if (params.variant == "two_matroid") {
    TwoMatroidVariant v;
    v.f1 = f1;
    v.f2 = f2;
    v.matroid2 = draw.between(0, 1) ? MatroidSpec::uniform(f2, draw.between(1, static_cast<int>(f2.size())))
                                    : random_partition(draw, f2);
    FacilitySet chosen = random_feasible_set(draw, inst.matroid, &v.matroid2, f1, nf);
    v.bounds = random_bounds(draw, chosen, f1, f2);
    inst.variant = std::move(v);
  } else if (params.variant == "laminar") {
    LaminarVariant v;
    v.f1 = f1;
    v.f2 = f2;
    FacilitySet chosen = random_feasible_set(draw, inst.matroid, nullptr, f1, nf);
    MatroidSpec shape = random_laminar(draw, f2);
    for (const auto& a : std::get<LaminarMatroid>(shape.variant()).family) {
      int in = count_in(chosen, a.members);
      v.family.push_back({a.members, draw.between(0, in),
                          draw.between(in, static_cast<int>(a.members.size()))});
    }
    v.bounds = random_bounds(draw, chosen, f1, f2);
    inst.variant = std::move(v);
  } else if (params.variant == "knapsack") {
    KnapsackVariant v;
    int max_w = 0, sum_w = 0;
    for (int i = 0; i < nf; ++i) {
      int w = draw.between(1, 5);
      v.weight.push_back(Rational(w));
      max_w = std::max(max_w, w);
      sum_w += w;
    }
    v.budget = Rational(draw.between(max_w, std::max(max_w, sum_w / 2)));
    inst.variant = std::move(v);
  } else {
    throw InvalidArgument("unknown variant \"" + params.variant + "\"");
  }
  return inst;
}

}  // namespace matmed
