#pragma once

#include <cstddef>
#include <cstdint>

#include "cffa/instance.hpp"

namespace cffa {

/// Bundles have size one (s = 1, or a complete conflict graph): bipartite
/// agents x jobs with an edge iff ut_i(j) >= eta. Partial needs every agent
/// matched; Complete needs m = n and a perfect matching.
SolveResult solve_s1_matching(const Instance& inst);

/// Guesses, per agent, either a bundle of size >= 2 (a clique of size >= 2 in
/// the complement graph) or "singleton later"; the singletons are matched.
SolveResult solve_nonedges_guess(const Instance& inst, const Budget& budget = {});

/// Labels the vertices that touch a missing edge as either singleton or a
/// member of a group; every group becomes one super-job and the contracted
/// instance is solved by matching. Labelings are canonical (groups ordered
/// by smallest member).
SolveResult solve_nonedges_partition(const Instance& inst, const Budget& budget = {});

/// Conflict graph is two disjoint cliques and all agents share one utility
/// row. Bundles are singletons or cross pairs.
SolveResult solve_twoclique_uniform(const Instance& inst);

struct StructureReport {
  bool complete_graph = false;
  bool two_clique = false;
  bool uniform_utilities = false;
  std::uint64_t missing_edges = 0;
  std::size_t diversity = 0;
  std::size_t degeneracy = 0;
  std::size_t greedy_colors = 0;
  std::size_t max_degree = 0;
};

StructureReport detect_structure(const Instance& inst);

/// The two cliques when the graph is a disjoint union of exactly two nonempty cliques.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> two_clique_split(const Graph& g);

bool uniform_utilities(const Instance& inst);

}  // namespace cffa
