#include "cffa/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cffa {

Instance gen_from_partition(const std::vector<Value>& values, std::size_t agents) {
  if (agents < 2) throw PreconditionError("partition: at least two agents required");
  if (values.empty()) throw PreconditionError("partition: empty multiset");
  Value sum = 0;
  for (Value v : values) {
    if (v == 0) throw PreconditionError("partition: elements must be positive");
    sum = checked_add(sum, v);
  }
  const Value eta = sum / 2 + sum % 2;
  Instance::Data d;
  d.agents = agents;
  d.jobs = values.size() + agents - 2;
  d.eta = eta;
  d.completeness = Completeness::Complete;
  for (std::size_t i = 0; i < agents; ++i) {
    d.utilities.insert(d.utilities.end(), values.begin(), values.end());
    d.utilities.insert(d.utilities.end(), agents - 2, eta);
  }
  return Instance(std::move(d));
}

Instance gen_from_coloring(const Graph& g, std::size_t k) {
  if (k == 0) throw PreconditionError("coloring: k must be positive");
  Instance::Data d;
  d.agents = k;
  d.jobs = g.size();
  d.utilities.assign(k * g.size(), 1);
  d.conflict_edges = g.edges();
  d.eta = 1;
  d.completeness = Completeness::Complete;
  return Instance(std::move(d));
}

Instance gen_from_independent_set(const Graph& g, std::size_t k, IsFlavor flavor) {
  const std::size_t m = g.size();
  if (k < 1 || k > m) throw PreconditionError("independent set: need 1 <= k <= |V|");
  Instance::Data d;
  d.jobs = m;
  d.conflict_edges = g.edges();
  d.eta = k;
  if (flavor == IsFlavor::Partial) {
    d.agents = 1;
    d.utilities.assign(m, 1);
    d.completeness = Completeness::Partial;
  } else {
    d.agents = m - k + 1;
    d.utilities.assign(m, 1);
    d.utilities.resize(d.agents * m, k);
    d.completeness = Completeness::Complete;
    d.size_bound = k;
  }
  return Instance(std::move(d));
}

namespace {

struct MatchingSearch {
  const ThreeDMInstance& src;
  std::vector<std::vector<std::size_t>> by_z;
  std::vector<bool> x_used;
  std::vector<bool> y_used;

  explicit MatchingSearch(const ThreeDMInstance& s)
      : src(s), by_z(s.z_count), x_used(s.x_count, false), y_used(s.y_count, false) {
    for (std::size_t t = 0; t < s.tuples.size(); ++t) by_z[s.tuples[t].z].push_back(t);
  }

  bool search(std::size_t z) {
    if (z == src.z_count) return true;
    for (auto t : by_z[z]) {
      const auto& tr = src.tuples[t];
      if (x_used[tr.x] || y_used[tr.y]) continue;
      x_used[tr.x] = y_used[tr.y] = true;
      if (search(z + 1)) return true;
      x_used[tr.x] = y_used[tr.y] = false;
    }
    return false;
  }
};

void check_triples(const ThreeDMInstance& src) {
  for (const auto& t : src.tuples) {
    if (t.x >= src.x_count || t.y >= src.y_count || t.z >= src.z_count) {
      throw PreconditionError("3dm: tuple element out of range");
    }
  }
}

}  // namespace

bool has_perfect_matching(const ThreeDMInstance& src) {
  check_triples(src);
  if (src.x_count != src.z_count || src.y_count != src.z_count) return false;
  MatchingSearch s(src);
  return s.search(0);
}

ThreeDMPreprocessed preprocess_3dm(const ThreeDMInstance& src) {
  check_triples(src);
  ThreeDMInstance cur = src;
  auto no = [&] { return ThreeDMPreprocessed{false, cur}; };
  if (cur.x_count != cur.z_count || cur.y_count != cur.z_count) return no();
  while (true) {
    if (cur.z_count == 0) return {true, cur};
    std::vector<std::size_t> zc(cur.z_count, 0), xc(cur.x_count, 0), yc(cur.y_count, 0);
    for (const auto& t : cur.tuples) {
      ++zc[t.z];
      ++xc[t.x];
      ++yc[t.y];
    }
    for (auto c : zc) {
      if (c > 3) throw PreconditionError("3dm: an element of Z occurs more than three times");
    }
    if (std::count(zc.begin(), zc.end(), 0) || std::count(xc.begin(), xc.end(), 0) ||
        std::count(yc.begin(), yc.end(), 0)) {
      return no();
    }
    auto forced = std::find(zc.begin(), zc.end(), std::size_t{1});
    if (forced == zc.end()) return {std::nullopt, cur};
    const std::size_t z = static_cast<std::size_t>(forced - zc.begin());
    const auto take = *std::find_if(cur.tuples.begin(), cur.tuples.end(), [&](const auto& t) { return t.z == z; });
    auto shift = [](std::size_t v, std::size_t removed) { return v > removed ? v - 1 : v; };
    ThreeDMInstance next{cur.x_count - 1, cur.y_count - 1, cur.z_count - 1, {}};
    for (const auto& t : cur.tuples) {
      if (t.x == take.x || t.y == take.y || t.z == take.z) continue;
      next.tuples.push_back({shift(t.x, take.x), shift(t.y, take.y), shift(t.z, take.z)});
    }
    cur = std::move(next);
  }
}

Instance gen_from_3dm(const ThreeDMInstance& src, ThreeDMFlavor flavor, std::optional<Value> eta_target) {
  check_triples(src);
  if (src.tuples.empty()) throw PreconditionError("3dm: no tuples");
  std::vector<std::size_t> zc(src.z_count, 0);
  for (const auto& t : src.tuples) ++zc[t.z];
  for (auto c : zc) {
    if (c < 2 || c > 3) throw PreconditionError("3dm: source is not preprocessed (occurrence counts must be 2 or 3)");
  }
  Value scale = 1;
  if (eta_target) {
    if (*eta_target < 2 || *eta_target % 2 != 0) throw PreconditionError("3dm: eta_target must be even and >= 2");
    scale = *eta_target / 2;
  }
  const std::size_t x0 = 0;
  const std::size_t y0 = src.x_count;
  const std::size_t d0 = src.x_count + src.y_count;
  std::vector<std::size_t> dummy_start(src.z_count);
  std::size_t dummies = 0;
  for (std::size_t z = 0; z < src.z_count; ++z) {
    dummy_start[z] = d0 + dummies;
    dummies += zc[z] - 1;
  }
  Instance::Data d;
  d.agents = src.tuples.size();
  d.jobs = d0 + dummies;
  d.utilities.assign(d.agents * d.jobs, 0);
  for (std::size_t a = 0; a < src.tuples.size(); ++a) {
    const auto& t = src.tuples[a];
    Value* row = d.utilities.data() + a * d.jobs;
    row[x0 + t.x] = scale;
    row[y0 + t.y] = scale;
    for (std::size_t k = 0; k + 1 < zc[t.z]; ++k) row[dummy_start[t.z] + k] = checked_mul(2, scale);
  }
  if (flavor == ThreeDMFlavor::TwoClique) {
    std::vector<std::size_t> left;
    for (std::size_t x = 0; x < src.x_count; ++x) left.push_back(x0 + x);
    for (std::size_t k = 0; k < dummies; ++k) left.push_back(d0 + k);
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = i + 1; j < left.size(); ++j) d.conflict_edges.emplace_back(left[i], left[j]);
    }
    for (std::size_t i = 0; i < src.y_count; ++i) {
      for (std::size_t j = i + 1; j < src.y_count; ++j) d.conflict_edges.emplace_back(y0 + i, y0 + j);
    }
  }
  d.eta = checked_mul(2, scale);
  d.size_bound = 2;
  d.completeness = Completeness::Complete;
  return Instance(std::move(d));
}

namespace {

using Rng = std::mt19937_64;

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Edge> all_pairs(std::size_t m) {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) out.emplace_back(u, v);
  }
  return out;
}

Graph build_graph(const RandomProfile& p, Rng& rng) {
  const std::size_t m = p.jobs;
  Graph g(m);
  switch (p.structure) {
    case Structure::Free:
      for (auto [u, v] : all_pairs(m)) {
        if (coin(rng, p.edge_probability)) g.add_edge(u, v);
      }
      break;
    case Structure::TwoClique: {
      if (m < 2) throw PreconditionError("random: two cliques need at least two jobs");
      std::vector<std::size_t> side(m);
      do {
        for (auto& s : side) s = pick(rng, 0, 1);
      } while (std::count(side.begin(), side.end(), 0u) == 0 || std::count(side.begin(), side.end(), 1u) == 0);
      for (auto [u, v] : all_pairs(m)) {
        if (side[u] == side[v]) g.add_edge(u, v);
      }
      break;
    }
    case Structure::MaxDegree: {
      auto pairs = all_pairs(m);
      std::shuffle(pairs.begin(), pairs.end(), rng);
      for (auto [u, v] : pairs) {
        if (g.degree(u) < p.param && g.degree(v) < p.param && coin(rng, p.edge_probability)) g.add_edge(u, v);
      }
      break;
    }
    case Structure::Bipartite: {
      std::vector<std::size_t> side(m);
      for (auto& s : side) s = pick(rng, 0, 1);
      for (auto [u, v] : all_pairs(m)) {
        if (side[u] != side[v] && coin(rng, p.edge_probability)) g.add_edge(u, v);
      }
      break;
    }
    case Structure::TriangleFree: {
      auto pairs = all_pairs(m);
      std::shuffle(pairs.begin(), pairs.end(), rng);
      for (auto [u, v] : pairs) {
        if (!coin(rng, p.edge_probability)) continue;
        bool common = false;
        for (std::size_t w = 0; w < g.words() && !common; ++w) common = (g.row(u)[w] & g.row(v)[w]) != 0;
        if (!common) g.add_edge(u, v);
      }
      break;
    }
    case Structure::Degenerate: {
      std::vector<std::size_t> order(m);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i = 1; i < m; ++i) {
        std::vector<std::size_t> earlier(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i));
        std::shuffle(earlier.begin(), earlier.end(), rng);
        std::size_t added = 0;
        for (auto u : earlier) {
          if (added == p.param) break;
          if (coin(rng, p.edge_probability)) {
            g.add_edge(u, order[i]);
            ++added;
          }
        }
      }
      break;
    }
    case Structure::DiversityCap: {
      if (p.param == 0) throw PreconditionError("random: diversity cap must be positive");
      std::vector<std::size_t> type(m);
      for (auto& t : type) t = pick(rng, 0, p.param - 1);
      std::vector<bool> clique_type(p.param);
      for (std::size_t t = 0; t < p.param; ++t) clique_type[t] = coin(rng, 0.5);
      std::vector<std::vector<bool>> quotient(p.param, std::vector<bool>(p.param, false));
      for (std::size_t a = 0; a < p.param; ++a) {
        for (std::size_t b = a + 1; b < p.param; ++b) quotient[a][b] = quotient[b][a] = coin(rng, p.edge_probability);
      }
      for (auto [u, v] : all_pairs(m)) {
        const bool edge = type[u] == type[v] ? clique_type[type[u]] : quotient[type[u]][type[v]];
        if (edge) g.add_edge(u, v);
      }
      break;
    }
    case Structure::MissingEdges: {
      auto pairs = all_pairs(m);
      if (p.param > pairs.size()) throw PreconditionError("random: more missing edges than vertex pairs");
      std::shuffle(pairs.begin(), pairs.end(), rng);
      for (std::size_t k = p.param; k < pairs.size(); ++k) g.add_edge(pairs[k].first, pairs[k].second);
      break;
    }
  }
  return g;
}

}  // namespace

Graph gen_random_graph(const RandomProfile& profile, std::uint64_t seed) {
  Rng rng(seed);
  return build_graph(profile, rng);
}

Instance gen_random(const RandomProfile& profile, std::uint64_t seed) {
  if (profile.jobs == 0 || profile.agents == 0) throw PreconditionError("random: need at least one job and agent");
  if (profile.utility_min > profile.utility_max || profile.eta_min > profile.eta_max || profile.eta_min == 0) {
    throw PreconditionError("random: inconsistent utility or eta range");
  }
  Rng rng(seed);
  const Graph g = build_graph(profile, rng);
  Instance::Data d;
  d.agents = profile.agents;
  d.jobs = profile.jobs;
  d.conflict_edges = g.edges();
  std::uniform_int_distribution<Value> util(profile.utility_min, profile.utility_max);
  const std::size_t rows = profile.uniform_utilities ? 1 : profile.agents;
  for (std::size_t k = 0; k < rows * profile.jobs; ++k) d.utilities.push_back(util(rng));
  if (profile.uniform_utilities) {
    const std::vector<Value> row = d.utilities;
    for (std::size_t i = 1; i < profile.agents; ++i) d.utilities.insert(d.utilities.end(), row.begin(), row.end());
  }
  d.eta = std::uniform_int_distribution<Value>(profile.eta_min, profile.eta_max)(rng);
  d.completeness = profile.completeness;
  if (profile.size_bound) d.size_bound = std::clamp<std::size_t>(*profile.size_bound, 1, profile.jobs);
  return Instance(std::move(d));
}

}  // namespace cffa
