#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cffa/types.hpp"

namespace cffa {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph stored as one adjacency bit row per vertex.
/// Rows are multi-word so graph utilities work past 64 vertices; the
/// mask-based solvers use `mask()` and require size() <= 64.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  std::span<const std::uint64_t> row(std::size_t v) const {
    return {bits_.data() + v * words_, words_};
  }
  /// Neighborhood of v as a single word. Requires size() <= 64.
  Mask mask(std::size_t v) const;

  std::size_t degree(std::size_t v) const;
  std::size_t max_degree() const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep` (in the given order); vertex i of the result is keep[i].
  Graph induced(std::span<const std::size_t> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

bool is_independent(const Graph& g, std::span<const std::size_t> vertices);
bool is_independent(const Graph& g, Mask vertices);

Graph complement(const Graph& g);
/// Number of vertex pairs that are not edges: C(m,2) - |E|.
std::uint64_t missing_edge_count(const Graph& g);

struct DegeneracyOrdering {
  std::vector<std::size_t> order;
  std::size_t degeneracy = 0;
};

/// Smallest-degree-first elimination. Every vertex has at most `degeneracy`
/// neighbors later in `order`.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// Calls `emit` once for every clique of size >= min_size (vertices sorted
/// ascending). Cliques are generated from the forward neighborhood of their
/// earliest vertex in the degeneracy ordering.
void for_each_clique(const Graph& g, std::size_t min_size,
                     const std::function<void(std::span<const std::size_t>)>& emit);
std::vector<std::vector<std::size_t>> enumerate_cliques(const Graph& g, std::size_t min_size);

enum class ClassKind { Clique, IndependentSet };

/// Neighborhood-type partition: u, v share a class iff N(u)\{v} = N(v)\{u}.
struct TypePartition {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<ClassKind> kinds;

  std::size_t type_count() const { return classes.size(); }
};

bool same_type(const Graph& g, std::size_t u, std::size_t v);
/// Coarsest partition; classes ordered by smallest member, singletons labelled IndependentSet.
TypePartition neighborhood_types(const Graph& g);

struct Coloring {
  std::size_t color_count = 0;
  std::vector<std::size_t> color;
};

/// First-fit coloring in reverse degeneracy order.
Coloring greedy_coloring(const Graph& g);

/// Returns a clique with bound+1 vertices if one exists, otherwise nullopt
/// (meaning the clique number is at most `bound`). Exact branch and bound.
std::optional<std::vector<std::size_t>> clique_exceeding(const Graph& g, std::size_t bound);
inline bool max_clique_at_most(const Graph& g, std::size_t bound) {
  return !clique_exceeding(g, bound).has_value();
}

/// Left/right bipartite graph with adjacency lists from left vertices.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t left_count, std::size_t right_count);

  void add_edge(std::size_t left, std::size_t right);
  std::size_t left_count() const { return adj_.size(); }
  std::size_t right_count() const { return right_count_; }
  std::span<const std::size_t> adjacent(std::size_t left) const { return adj_[left]; }

 private:
  std::size_t right_count_;
  std::vector<std::vector<std::size_t>> adj_;
};

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

struct Matching {
  std::vector<std::size_t> left_to_right;
  std::vector<std::size_t> right_to_left;
  std::size_t size = 0;
};

/// Hopcroft-Karp maximum-cardinality matching.
Matching maximum_bipartite_matching(const BipartiteGraph& b);

/// binomial(n, k); throws OverflowError past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// binomial(r+k-2, r-1) >= R(r, k): every graph on that many vertices has
/// a K_r or an independent set of size k.
std::uint64_t ramsey_upper_bound(std::uint64_t r, std::uint64_t k);

}  // namespace cffa
