#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cffa/graph.hpp"

namespace cffa {

struct WeightedGraph {
  Graph graph;
  std::vector<Value> weights;
};

/// Hereditary graph classes with a known lower bound f on the independence
/// number, used to bound the branching of sbmwis_ifc.
struct GraphClassDecl {
  enum class Kind { Bipartite, TriangleFree, Planar, Degenerate, CliqueFree, Unrestricted };
  Kind kind = Kind::Unrestricted;
  std::size_t param = 0;  // d for Degenerate, l for CliqueFree

  static GraphClassDecl bipartite() { return {Kind::Bipartite, 0}; }
  static GraphClassDecl triangle_free() { return {Kind::TriangleFree, 0}; }
  static GraphClassDecl planar() { return {Kind::Planar, 0}; }
  static GraphClassDecl degenerate(std::size_t d) { return {Kind::Degenerate, d}; }
  static GraphClassDecl clique_free(std::size_t l);
  static GraphClassDecl unrestricted() { return {Kind::Unrestricted, 0}; }
};

/// Parses "bipartite", "triangle-free", "planar", "degenerate:<d>", "clique-free:<l>".
GraphClassDecl parse_graph_class(const std::string& text);

/// Smallest vertex count guaranteeing an independent k-set inside the class:
/// 2k, C(k+1,2), 4k, k(d+1), binomial(l+k-2, l-1). Throws for Unrestricted.
std::size_t f_inverse(const GraphClassDecl& decl, std::size_t k);

/// Independent set of size <= k and weight >= rho by exhaustive search, or nullopt.
std::optional<std::vector<std::size_t>> sbmwis_bruteforce(const WeightedGraph& wg, std::size_t k, Value rho,
                                                          const Budget& budget = {});

/// Independent set of any size with weight >= rho, or nullopt.
std::optional<std::vector<std::size_t>> mwis_unbounded_bruteforce(const WeightedGraph& wg, Value rho,
                                                                  const Budget& budget = {});

/// Branching on high-weight vertices (k * w(v) >= rho). When there are at
/// least f_inverse(decl, k) of them, an independent k-subset among the first
/// f_inverse(decl, k) is returned directly. Output is always verified; a
/// wrong class declaration can only lose solutions.
std::optional<std::vector<std::size_t>> sbmwis_ifc(const WeightedGraph& wg, const GraphClassDecl& decl, std::size_t k,
                                                   Value rho, const Budget& budget = {});

/// Independent, at most k vertices (k = nullopt: unbounded), weight >= rho.
bool is_sbmwis_solution(const WeightedGraph& wg, const std::vector<std::size_t>& set, std::optional<std::size_t> k,
                        Value rho);

}  // namespace cffa
