#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cffa/instance.hpp"

namespace cffa {

/// C-CFFA from a Partition multiset: one job per element plus n-2 dummy jobs,
/// edgeless, eta = ceil(sum/2), dummies worth eta. Throws if n < 2.
Instance gen_from_partition(const std::vector<Value>& values, std::size_t agents = 2);

/// C-CFFA with k agents on G: unit utilities, eta = 1. Yes iff G has a
/// k-coloring with every color used (k-colorable and k <= |V|).
Instance gen_from_coloring(const Graph& g, std::size_t k);

enum class IsFlavor { Partial, SbComplete };

/// Partial: one agent, unit utilities, eta = k. SbComplete: m-k+1 agents,
/// agent 0 unit utilities, the others k on every job, eta = s = k.
Instance gen_from_independent_set(const Graph& g, std::size_t k, IsFlavor flavor);

/// 3-DM over X, Y, Z with |X| = |Y| = |Z| elements numbered from 0.
struct ThreeDMInstance {
  struct Triple {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t z = 0;
  };
  std::size_t x_count = 0;
  std::size_t y_count = 0;
  std::size_t z_count = 0;
  std::vector<Triple> tuples;
};

/// A set of tuples covering every element exactly once, by exhaustive search.
bool has_perfect_matching(const ThreeDMInstance& src);

struct ThreeDMPreprocessed {
  /// Decided without a gadget (forced tuples settled everything or made it infeasible).
  std::optional<bool> decided;
  ThreeDMInstance reduced;  // every z occurs 2 or 3 times when undecided
};

/// Repeatedly takes the only tuple of a z that occurs once, deleting tuples
/// that share its x or y, and renumbers. Rejects (No) when counts differ or
/// some element occurs nowhere. Throws if a z occurs more than 3 times.
ThreeDMPreprocessed preprocess_3dm(const ThreeDMInstance& src);

enum class ThreeDMFlavor { Edgeless, TwoClique };

/// Sb-C-CFFA, eta = 2, s = 2. Jobs: X ids, then Y ids, then dummies (one per z
/// occurring twice, two per z occurring three times). One agent per tuple,
/// valuing its own x and y at 1 and its z's dummies at 2. TwoClique adds
/// cliques on X + dummies and on Y. An even `eta_target` scales utilities and
/// eta by eta_target / 2.
Instance gen_from_3dm(const ThreeDMInstance& src, ThreeDMFlavor flavor, std::optional<Value> eta_target = {});

enum class Structure { Free, TwoClique, MaxDegree, Bipartite, TriangleFree, Degenerate, DiversityCap, MissingEdges };

struct RandomProfile {
  std::size_t jobs = 8;
  std::size_t agents = 2;
  Completeness completeness = Completeness::Partial;
  std::optional<std::size_t> size_bound;
  double edge_probability = 0.3;
  Value utility_min = 0;
  Value utility_max = 5;
  Value eta_min = 1;
  Value eta_max = 8;
  bool uniform_utilities = false;
  Structure structure = Structure::Free;
  std::size_t param = 0;  // d, tau or t
};

/// Reproducible from (profile, seed). Throws PreconditionError for an unsatisfiable profile.
Instance gen_random(const RandomProfile& profile, std::uint64_t seed);

/// Conflict graph alone, as gen_random would build it.
Graph gen_random_graph(const RandomProfile& profile, std::uint64_t seed);

}  // namespace cffa
