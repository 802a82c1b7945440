#include "cffa/sbmwis.hpp"

#include <algorithm>

namespace cffa {

GraphClassDecl GraphClassDecl::clique_free(std::size_t l) {
  if (l < 2) throw PreconditionError("clique-free class needs l >= 2");
  return {Kind::CliqueFree, l};
}

GraphClassDecl parse_graph_class(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  auto param = [&]() -> std::size_t {
    if (colon == std::string::npos) throw ParseError("class: graph class '" + name + "' needs a parameter");
    return std::stoull(text.substr(colon + 1));
  };
  if (name == "bipartite") return GraphClassDecl::bipartite();
  if (name == "triangle-free") return GraphClassDecl::triangle_free();
  if (name == "planar") return GraphClassDecl::planar();
  if (name == "degenerate") return GraphClassDecl::degenerate(param());
  if (name == "clique-free") return GraphClassDecl::clique_free(param());
  if (name == "unrestricted") return GraphClassDecl::unrestricted();
  throw ParseError("class: unknown graph class '" + text + "'");
}

std::size_t f_inverse(const GraphClassDecl& decl, std::size_t k) {
  using Kind = GraphClassDecl::Kind;
  switch (decl.kind) {
    case Kind::Bipartite: return 2 * k;
    case Kind::TriangleFree: return binomial(k + 1, 2);
    case Kind::Planar: return 4 * k;
    case Kind::Degenerate: return k * (decl.param + 1);
    case Kind::CliqueFree: return ramsey_upper_bound(decl.param, std::max<std::size_t>(k, 1));
    case Kind::Unrestricted: break;
  }
  throw PreconditionError("f_inverse: no independence bound for an unrestricted graph class");
}

bool is_sbmwis_solution(const WeightedGraph& wg, const std::vector<std::size_t>& set, std::optional<std::size_t> k,
                        Value rho) {
  if (k && set.size() > *k) return false;
  if (!is_independent(wg.graph, set)) return false;
  unsigned __int128 total = 0;
  for (auto v : set) total += wg.weights[v];
  return total >= rho;
}

namespace {

Value saturating_sub(Value a, Value b) { return a > b ? a - b : 0; }

struct SubsetSearch {
  const WeightedGraph& wg;
  std::size_t k;
  NodeMeter meter;
  std::vector<int> blocked;
  std::vector<std::size_t> chosen;

  SubsetSearch(const WeightedGraph& g, std::size_t limit, const Budget& budget, const char* what)
      : wg(g), k(limit), meter(budget, what), blocked(g.graph.size(), 0) {}

  // `need` is the weight still missing.
  bool search(std::size_t start, Value need) {
    meter.tick();
    if (need == 0) return true;
    if (chosen.size() == k) return false;
    for (std::size_t v = start; v < wg.graph.size(); ++v) {
      if (blocked[v]) continue;
      const auto nbrs = wg.graph.neighbors(v);
      for (auto u : nbrs) ++blocked[u];
      chosen.push_back(v);
      if (search(v + 1, saturating_sub(need, wg.weights[v]))) return true;
      chosen.pop_back();
      for (auto u : nbrs) --blocked[u];
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> sbmwis_bruteforce(const WeightedGraph& wg, std::size_t k, Value rho,
                                                          const Budget& budget) {
  SubsetSearch s(wg, k, budget, "sbmwis");
  if (!s.search(0, rho)) return std::nullopt;
  return s.chosen;
}

std::optional<std::vector<std::size_t>> mwis_unbounded_bruteforce(const WeightedGraph& wg, Value rho,
                                                                  const Budget& budget) {
  SubsetSearch s(wg, wg.graph.size(), budget, "mwis");
  if (!s.search(0, rho)) return std::nullopt;
  return s.chosen;
}

namespace {

struct IfcSearch {
  const WeightedGraph& wg;
  GraphClassDecl decl;
  NodeMeter meter;

  bool high_weight(std::size_t v, std::size_t k, Value rho) const {
    return static_cast<unsigned __int128>(k) * wg.weights[v] >= rho;
  }

  // First independent k-subset of `pool` in lexicographic order.
  std::optional<std::vector<std::size_t>> independent_k_subset(const std::vector<std::size_t>& pool, std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<std::size_t> pick(k);
    while (true) {
      meter.tick();
      for (std::size_t i = 0; i < k; ++i) pick[i] = pool[idx[i]];
      if (is_independent(wg.graph, pick)) return pick;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) return std::nullopt;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::optional<std::vector<std::size_t>> solve(const std::vector<bool>& alive, std::size_t k, Value rho) {
    meter.tick();
    if (rho == 0) return std::vector<std::size_t>{};
    if (k == 0) return std::nullopt;
    std::vector<std::size_t> high;
    for (std::size_t v = 0; v < wg.graph.size(); ++v) {
      if (alive[v] && high_weight(v, k, rho)) high.push_back(v);
    }
    const std::size_t threshold = f_inverse(decl, k);
    if (high.size() >= threshold && threshold >= k) {
      std::vector<std::size_t> pool(high.begin(), high.begin() + static_cast<std::ptrdiff_t>(threshold));
      if (auto found = independent_k_subset(pool, k)) return found;
      // Only reachable when the graph is not in the declared class.
    }
    for (auto v : high) {
      std::vector<bool> rest = alive;
      rest[v] = false;
      for (auto u : wg.graph.neighbors(v)) rest[u] = false;
      if (auto sub = solve(rest, k - 1, saturating_sub(rho, wg.weights[v]))) {
        sub->push_back(v);
        return sub;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> sbmwis_ifc(const WeightedGraph& wg, const GraphClassDecl& decl, std::size_t k,
                                                   Value rho, const Budget& budget) {
  if (decl.kind == GraphClassDecl::Kind::Unrestricted) {
    throw PreconditionError("sbmwis_ifc: an unrestricted class has no independence bound");
  }
  IfcSearch s{wg, decl, NodeMeter(budget, "sbmwis_ifc")};
  auto found = s.solve(std::vector<bool>(wg.graph.size(), true), k, rho);
  if (!found) return std::nullopt;
  std::sort(found->begin(), found->end());
  if (!is_sbmwis_solution(wg, *found, k, rho)) return std::nullopt;
  return found;
}

}  // namespace cffa
