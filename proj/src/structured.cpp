#include "cffa/structured.hpp"

#include <algorithm>
#include <numeric>

namespace cffa {

namespace {

// Agents matched to candidate "items" (single jobs or super-jobs). Returns
// item per agent, or nullopt. `exact` demands every item be used.
template <typename Accept>
std::optional<std::vector<std::size_t>> match_agents(std::size_t agents, std::size_t items, bool exact,
                                                     Accept accept) {
  if (agents > items || (exact && agents != items)) return std::nullopt;
  BipartiteGraph b(agents, items);
  for (std::size_t i = 0; i < agents; ++i) {
    for (std::size_t j = 0; j < items; ++j) {
      if (accept(i, j)) b.add_edge(i, j);
    }
  }
  auto m = maximum_bipartite_matching(b);
  if (m.size != agents) return std::nullopt;
  return m.left_to_right;
}

bool is_complete_graph(const Graph& g) { return missing_edge_count(g) == 0; }

SolveResult checked(const Instance& inst, Assignment a, const char* who) {
  if (auto v = verify_assignment(inst, a); !v) {
    throw Error(std::string(who) + ": produced an invalid witness: " + v.diagnostic);
  }
  return SolveResult::yes(std::move(a));
}

}  // namespace

SolveResult solve_s1_matching(const Instance& inst) {
  if (inst.size_bound() != std::optional<std::size_t>{1} && !is_complete_graph(inst.conflict_graph())) {
    throw PreconditionError("s1: requires s = 1 or a complete conflict graph");
  }
  auto match = match_agents(inst.agents(), inst.jobs(), inst.complete(),
                            [&](std::size_t i, std::size_t j) { return inst.utility(i, j) >= inst.eta(); });
  if (!match) return SolveResult::no();
  Assignment a;
  for (std::size_t i = 0; i < inst.agents(); ++i) a.assign((*match)[i], i);
  return checked(inst, std::move(a), "s1");
}

namespace {

void require_mask(const Instance& inst, const char* who) {
  if (inst.jobs() > kMaskWidth) throw PreconditionError(std::string(who) + ": mask width exceeded");
}

struct GuessSearch {
  const Instance& inst;
  NodeMeter meter;
  std::vector<std::vector<Mask>> options;  // per agent, feasible bundles of size >= 2
  std::vector<Mask> chosen;                // 0 = singleton later
  std::optional<Assignment> found;

  GuessSearch(const Instance& in, const Budget& budget)
      : inst(in), meter(budget, "nonedges-guess"), options(in.agents()), chosen(in.agents(), 0) {
    const Graph comp = complement(in.conflict_graph());
    const std::size_t limit = in.bundle_limit();
    std::vector<Mask> large;
    for_each_clique(comp, 2, [&](std::span<const std::size_t> c) {
      meter.tick();
      if (c.size() > limit) return;
      Mask m = 0;
      for (auto v : c) m |= Mask{1} << v;
      large.push_back(m);
    });
    std::sort(large.begin(), large.end());
    for (std::size_t i = 0; i < in.agents(); ++i) {
      for (Mask m : large) {
        if (bundle_utility(in, i, m) >= in.eta()) options[i].push_back(m);
      }
    }
  }

  bool finish(Mask used) {
    std::vector<std::size_t> rest_agents;
    for (std::size_t i = 0; i < inst.agents(); ++i) {
      if (chosen[i] == 0) rest_agents.push_back(i);
    }
    std::vector<std::size_t> rest_jobs;
    for (std::size_t j = 0; j < inst.jobs(); ++j) {
      if (!(used >> j & 1)) rest_jobs.push_back(j);
    }
    auto match = match_agents(rest_agents.size(), rest_jobs.size(), inst.complete(), [&](std::size_t a, std::size_t j) {
      return inst.utility(rest_agents[a], rest_jobs[j]) >= inst.eta();
    });
    if (!match) return false;
    Assignment a;
    for (std::size_t i = 0; i < inst.agents(); ++i) {
      for (Mask m = chosen[i]; m; m &= m - 1) a.assign(static_cast<std::size_t>(std::countr_zero(m)), i);
    }
    for (std::size_t k = 0; k < rest_agents.size(); ++k) a.assign(rest_jobs[(*match)[k]], rest_agents[k]);
    found = std::move(a);
    return true;
  }

  bool search(std::size_t agent, Mask used) {
    meter.tick();
    if (agent == inst.agents()) return finish(used);
    chosen[agent] = 0;
    if (search(agent + 1, used)) return true;
    for (Mask m : options[agent]) {
      if (m & used) continue;
      chosen[agent] = m;
      if (search(agent + 1, used | m)) return true;
    }
    chosen[agent] = 0;
    return false;
  }
};

}  // namespace

SolveResult solve_nonedges_guess(const Instance& inst, const Budget& budget) {
  require_mask(inst, "nonedges-guess");
  if (inst.agents() > inst.jobs()) return SolveResult::no();
  GuessSearch s(inst, budget);
  if (!s.search(0, 0)) return SolveResult::no();
  return checked(inst, std::move(*s.found), "nonedges-guess");
}

namespace {

struct PartitionSearch {
  const Instance& inst;
  NodeMeter meter;
  std::vector<std::size_t> touched;  // vertices incident to a missing edge
  std::vector<Mask> groups;
  std::optional<Assignment> found;

  PartitionSearch(const Instance& in, const Budget& budget) : inst(in), meter(budget, "nonedges-partition") {
    const Graph& g = in.conflict_graph();
    for (std::size_t v = 0; v < in.jobs(); ++v) {
      if (g.degree(v) + 1 < in.jobs()) touched.push_back(v);
    }
  }

  bool finish() {
    for (Mask m : groups) {
      if (popcount(m) < 2) return false;
    }
    Mask grouped = 0;
    for (Mask m : groups) grouped |= m;
    std::vector<Mask> items = groups;
    for (std::size_t j = 0; j < inst.jobs(); ++j) {
      if (!(grouped >> j & 1)) items.push_back(Mask{1} << j);
    }
    std::vector<Value> util(inst.agents() * items.size());
    for (std::size_t i = 0; i < inst.agents(); ++i) {
      for (std::size_t k = 0; k < items.size(); ++k) util[i * items.size() + k] = bundle_utility(inst, i, items[k]);
    }
    auto match = match_agents(inst.agents(), items.size(), inst.complete(), [&](std::size_t i, std::size_t k) {
      return util[i * items.size() + k] >= inst.eta();
    });
    if (!match) return false;
    Assignment a;
    for (std::size_t i = 0; i < inst.agents(); ++i) {
      for (Mask m = items[(*match)[i]]; m; m &= m - 1) a.assign(static_cast<std::size_t>(std::countr_zero(m)), i);
    }
    found = std::move(a);
    return true;
  }

  bool search(std::size_t idx) {
    meter.tick();
    if (idx == touched.size()) return finish();
    const std::size_t v = touched[idx];
    const Mask bit = Mask{1} << v;
    const Mask nbr = inst.conflict_graph().mask(v);
    if (search(idx + 1)) return true;
    for (auto& g : groups) {
      if ((g & nbr) || static_cast<std::size_t>(popcount(g)) >= inst.bundle_limit()) continue;
      g |= bit;
      const bool ok = search(idx + 1);
      g &= ~bit;
      if (ok) return true;
    }
    if (inst.bundle_limit() >= 2) {
      groups.push_back(bit);
      const bool ok = search(idx + 1);
      groups.pop_back();
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

SolveResult solve_nonedges_partition(const Instance& inst, const Budget& budget) {
  require_mask(inst, "nonedges-partition");
  if (inst.agents() > inst.jobs()) return SolveResult::no();
  PartitionSearch s(inst, budget);
  if (!s.search(0)) return SolveResult::no();
  return checked(inst, std::move(*s.found), "nonedges-partition");
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> two_clique_split(const Graph& g) {
  const std::size_t m = g.size();
  std::vector<std::size_t> comp(m, kUnmatched);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] != kUnmatched) continue;
    if (parts.size() == 2) return std::nullopt;
    parts.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = parts.size() - 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      parts.back().push_back(v);
      for (auto u : g.neighbors(v)) {
        if (comp[u] == kUnmatched) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
      }
    }
  }
  if (parts.size() != 2) return std::nullopt;
  for (auto& p : parts) {
    std::sort(p.begin(), p.end());
    for (auto v : p) {
      if (g.degree(v) + 1 != p.size()) return std::nullopt;
    }
  }
  return std::make_pair(parts[0], parts[1]);
}

bool uniform_utilities(const Instance& inst) {
  const auto first = inst.utility_row(0);
  for (std::size_t i = 1; i < inst.agents(); ++i) {
    const auto row = inst.utility_row(i);
    if (!std::equal(row.begin(), row.end(), first.begin())) return false;
  }
  return true;
}

SolveResult solve_twoclique_uniform(const Instance& inst) {
  const auto split = two_clique_split(inst.conflict_graph());
  if (!split) throw PreconditionError("twoclique: conflict graph is not a disjoint union of two cliques");
  if (!uniform_utilities(inst)) throw PreconditionError("twoclique: utilities are not uniform across agents");
  if (inst.size_bound() == std::optional<std::size_t>{1}) return solve_s1_matching(inst);
  const std::size_t n = inst.agents();
  if (n > inst.jobs()) return SolveResult::no();
  const Value eta = inst.eta();
  auto u = [&](std::size_t j) { return inst.utility(0, j); };
  auto by_utility = [&](std::vector<std::size_t> v) {
    std::stable_sort(v.begin(), v.end(), [&](auto a, auto b) { return u(a) > u(b); });
    return v;
  };
  const auto a_side = by_utility(split->first);
  const auto b_side = by_utility(split->second);

  // Singletons are the top-l of each side; the rest are paired across sides.
  auto attempt = [&](std::size_t la, std::size_t lb, bool exact) -> std::optional<Assignment> {
    if (la > a_side.size() || lb > b_side.size()) return std::nullopt;
    if (la > 0 && u(a_side[la - 1]) < eta) return std::nullopt;
    if (lb > 0 && u(b_side[lb - 1]) < eta) return std::nullopt;
    const std::size_t singles = la + lb;
    if (singles > n) return std::nullopt;
    const std::size_t need = n - singles;
    const std::size_t ra = a_side.size() - la;
    const std::size_t rb = b_side.size() - lb;
    if (exact && (ra != rb || ra != need)) return std::nullopt;
    BipartiteGraph h(ra, rb);
    for (std::size_t x = 0; x < ra; ++x) {
      for (std::size_t y = 0; y < rb; ++y) {
        if (checked_add(u(a_side[la + x]), u(b_side[lb + y])) >= eta) h.add_edge(x, y);
      }
    }
    auto match = maximum_bipartite_matching(h);
    if (match.size < need) return std::nullopt;
    Assignment a;
    std::size_t agent = 0;
    for (std::size_t k = 0; k < la; ++k) a.assign(a_side[k], agent++);
    for (std::size_t k = 0; k < lb; ++k) a.assign(b_side[k], agent++);
    for (std::size_t x = 0; x < ra && agent < n; ++x) {
      if (match.left_to_right[x] == kUnmatched) continue;
      a.assign(a_side[la + x], agent);
      a.assign(b_side[lb + match.left_to_right[x]], agent);
      ++agent;
    }
    return a;
  };

  if (!inst.complete()) {
    std::size_t high_a = 0;
    std::size_t high_b = 0;
    while (high_a < a_side.size() && u(a_side[high_a]) >= eta) ++high_a;
    while (high_b < b_side.size() && u(b_side[high_b]) >= eta) ++high_b;
    if (high_a + high_b >= n) {
      const std::size_t la = std::min(high_a, n);
      if (auto a = attempt(la, n - la, false)) return checked(inst, std::move(*a), "twoclique");
      return SolveResult::no();
    }
    if (auto a = attempt(high_a, high_b, false)) return checked(inst, std::move(*a), "twoclique");
    return SolveResult::no();
  }
  for (std::size_t la = 0; la <= a_side.size(); ++la) {
    for (std::size_t lb = 0; lb <= b_side.size(); ++lb) {
      if (auto a = attempt(la, lb, true)) return checked(inst, std::move(*a), "twoclique");
    }
  }
  return SolveResult::no();
}

StructureReport detect_structure(const Instance& inst) {
  const Graph& g = inst.conflict_graph();
  StructureReport r;
  r.missing_edges = missing_edge_count(g);
  r.complete_graph = r.missing_edges == 0;
  r.two_clique = two_clique_split(g).has_value();
  r.uniform_utilities = uniform_utilities(inst);
  r.diversity = neighborhood_types(g).type_count();
  r.degeneracy = degeneracy_ordering(g).degeneracy;
  r.greedy_colors = greedy_coloring(g).color_count;
  r.max_degree = g.max_degree();
  return r;
}

}  // namespace cffa
