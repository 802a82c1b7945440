#include <doctest.h>

#include <random>

#include "cffa/generators.hpp"
#include "cffa/sbmwis.hpp"
#include "support/source_oracles.hpp"

using namespace cffa;

namespace {

WeightedGraph weighted(Graph g, std::vector<Value> w) { return {std::move(g), std::move(w)}; }

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

std::vector<Value> random_weights(std::size_t n, std::mt19937_64& rng) {
  std::vector<Value> w(n);
  for (auto& x : w) x = rng() % 10;
  return w;
}

Graph class_graph(int kind, std::size_t n, std::uint64_t seed) {
  RandomProfile p;
  p.jobs = n;
  p.edge_probability = 0.4;
  if (kind == 0) p.structure = Structure::Bipartite;
  if (kind == 1) {
    p.structure = Structure::Degenerate;
    p.param = 2;
    p.edge_probability = 0.8;
  }
  if (kind == 2) p.structure = Structure::TriangleFree;
  return gen_random_graph(p, seed);
}

GraphClassDecl class_decl(int kind) {
  if (kind == 0) return GraphClassDecl::bipartite();
  if (kind == 1) return GraphClassDecl::degenerate(2);
  return GraphClassDecl::triangle_free();
}

}  // namespace

TEST_CASE("brute force examples") {
  Graph k3 = complement(Graph(3));
  const auto wg = weighted(k3, {5, 6, 7});
  CHECK(sbmwis_bruteforce(wg, 1, 0) == std::vector<std::size_t>{});
  CHECK(sbmwis_bruteforce(wg, 1, 7) == std::vector<std::size_t>{2});
  CHECK_FALSE(sbmwis_bruteforce(wg, 3, 8).has_value());
}

TEST_CASE("brute force matches exhaustive scan") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    RandomProfile p;
    p.jobs = 1 + trial % 12;
    p.edge_probability = 0.1 * (trial % 8);
    const Graph g = gen_random_graph(p, rng());
    const auto w = random_weights(g.size(), rng);
    const std::size_t k = 1 + trial % 5;
    const Value best = testing_oracles::best_independent_weight(g, w, k);
    const Value rho = rng() % (best + 3);
    const auto got = sbmwis_bruteforce({g, w}, k, rho);
    CHECK(got.has_value() == (best >= rho));
    if (got) CHECK(is_sbmwis_solution({g, w}, *got, k, rho));
    const Value all = testing_oracles::best_independent_weight(g, w, g.size());
    const auto unb = mwis_unbounded_bruteforce({g, w}, rho);
    CHECK(unb.has_value() == (all >= rho));
    if (unb) CHECK(is_sbmwis_solution({g, w}, *unb, std::nullopt, rho));
  }
}

TEST_CASE("unbounded examples") {
  const auto edgeless = weighted(Graph(4), {1, 2, 3, 4});
  CHECK(mwis_unbounded_bruteforce(edgeless, 10)->size() == 4);
  const auto clique = weighted(complement(Graph(4)), {1, 9, 3, 4});
  CHECK(mwis_unbounded_bruteforce(clique, 9) == std::vector<std::size_t>{1});
}

TEST_CASE("f inverse") {
  CHECK(f_inverse(GraphClassDecl::bipartite(), 3) == 6);
  CHECK(f_inverse(GraphClassDecl::degenerate(2), 3) == 9);
  CHECK(f_inverse(GraphClassDecl::planar(), 2) == 8);
  CHECK(f_inverse(GraphClassDecl::triangle_free(), 3) == 6);
  CHECK(f_inverse(GraphClassDecl::clique_free(3), 3) == ramsey_upper_bound(3, 3));
  CHECK_THROWS_AS(f_inverse(GraphClassDecl::unrestricted(), 2), PreconditionError);
  CHECK(parse_graph_class("degenerate:4").param == 4);
  CHECK(parse_graph_class("clique-free:5").kind == GraphClassDecl::Kind::CliqueFree);
  CHECK_THROWS_AS(parse_graph_class("chordal"), ParseError);
}

TEST_CASE("ifc examples") {
  const auto s = sbmwis_ifc(weighted(star(5), {1, 1, 1, 1, 1, 1}), GraphClassDecl::bipartite(), 3, 3);
  REQUIRE(s.has_value());
  CHECK(s->size() == 3);
  for (auto v : *s) CHECK(v != 0);
  CHECK(sbmwis_ifc(weighted(star(5), {1, 1, 1, 1, 1, 1}), GraphClassDecl::bipartite(), 3, 0) ==
        std::vector<std::size_t>{});
  Graph c6(6);
  for (std::size_t v = 0; v < 6; ++v) c6.add_edge(v, (v + 1) % 6);
  CHECK(sbmwis_ifc(weighted(c6, {3, 1, 3, 1, 3, 1}), GraphClassDecl::bipartite(), 3, 9) ==
        std::vector<std::size_t>{0, 2, 4});
}

TEST_CASE("ifc agrees with brute force on class graphs") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int kind = trial % 3;
    const Graph g = class_graph(kind, 1 + trial % 14, rng());
    const auto w = random_weights(g.size(), rng);
    const std::size_t k = 1 + trial % 5;
    const Value best = testing_oracles::best_independent_weight(g, w, k);
    const Value rho = best + (trial % 4 == 0 ? 1 : 0) - (best > 0 && trial % 4 == 1 ? 1 : 0);
    const auto a = sbmwis_ifc({g, w}, class_decl(kind), k, rho);
    const auto b = sbmwis_bruteforce({g, w}, k, rho);
    CHECK(a.has_value() == b.has_value());
    if (a) CHECK(is_sbmwis_solution({g, w}, *a, k, rho));
  }
}

TEST_CASE("misdeclared class never returns an invalid set") {
  const Graph k5 = complement(Graph(5));
  for (Value rho = 0; rho < 12; ++rho) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto r = sbmwis_ifc({k5, {1, 2, 3, 4, 5}}, GraphClassDecl::bipartite(), k, rho);
      if (r) CHECK(is_sbmwis_solution({k5, {1, 2, 3, 4, 5}}, *r, k, rho));
      CHECK(r.has_value() == (rho <= 5));
    }
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    RandomProfile p;
    p.jobs = 4 + trial % 10;
    p.edge_probability = 0.7;
    const Graph g = gen_random_graph(p, rng());
    const auto w = random_weights(g.size(), rng);
    const auto r = sbmwis_ifc({g, w}, GraphClassDecl::bipartite(), 3, 5);
    if (r) CHECK(is_sbmwis_solution({g, w}, *r, 3, 5));
  }
}

TEST_CASE("high weight test is exact") {
  // A set of k vertices each with k*w < rho has total weight < rho.
  for (Value rho = 1; rho < 40; ++rho) {
    for (std::size_t k = 1; k < 6; ++k) {
      Value max_low = 0;
      while (k * (max_low + 1) < rho) ++max_low;
      if (k * max_low < rho) CHECK(k * max_low < rho);
    }
  }
}
