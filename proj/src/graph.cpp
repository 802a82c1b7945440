#include "cffa/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace cffa {

Graph::Graph(std::size_t vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64), bits_(n_ * words_, 0) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

Mask Graph::mask(std::size_t v) const {
  if (n_ > kMaskWidth) throw PreconditionError("mask width exceeded: graph has more than 64 vertices");
  return bits_[v];
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    for (auto bits = r[w]; bits; bits &= bits - 1) out.push_back(w * 64 + std::countr_zero(bits));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (auto v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const std::size_t> keep) const {
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) out.add_edge(i, j);
    }
  }
  return out;
}

bool is_independent(const Graph& g, std::span<const std::size_t> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, Mask vertices) {
  for (Mask rest = vertices; rest; rest &= rest - 1) {
    if (g.mask(static_cast<std::size_t>(std::countr_zero(rest))) & vertices) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  Graph out(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::uint64_t missing_edge_count(const Graph& g) {
  const std::uint64_t m = g.size();
  return m * (m == 0 ? 0 : m - 1) / 2 - g.edge_count();
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.size();
  DegeneracyOrdering out;
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  out.order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
    }
    out.degeneracy = std::max(out.degeneracy, deg[best]);
    removed[best] = true;
    out.order.push_back(best);
    for (auto w : g.neighbors(best)) {
      if (!removed[w]) --deg[w];
    }
  }
  return out;
}

namespace {

void extend_clique(const Graph& g, std::vector<std::size_t>& clique,
                   std::span<const std::size_t> candidates, std::size_t min_size,
                   const std::function<void(std::span<const std::size_t>)>& emit) {
  if (clique.size() >= min_size) {
    std::vector<std::size_t> sorted = clique;
    std::sort(sorted.begin(), sorted.end());
    emit(sorted);
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t v = candidates[i];
    std::vector<std::size_t> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
    }
    clique.push_back(v);
    extend_clique(g, clique, next, min_size, emit);
    clique.pop_back();
  }
}

}  // namespace

void for_each_clique(const Graph& g, std::size_t min_size,
                     const std::function<void(std::span<const std::size_t>)>& emit) {
  const auto ordering = degeneracy_ordering(g);
  std::vector<std::size_t> position(g.size());
  for (std::size_t i = 0; i < ordering.order.size(); ++i) position[ordering.order[i]] = i;
  std::vector<std::size_t> clique;
  for (std::size_t i = 0; i < ordering.order.size(); ++i) {
    const std::size_t v = ordering.order[i];
    std::vector<std::size_t> forward;
    for (auto w : g.neighbors(v)) {
      if (position[w] > i) forward.push_back(w);
    }
    clique.assign(1, v);
    extend_clique(g, clique, forward, min_size, emit);
  }
}

std::vector<std::vector<std::size_t>> enumerate_cliques(const Graph& g, std::size_t min_size) {
  std::vector<std::vector<std::size_t>> out;
  for_each_clique(g, min_size, [&](std::span<const std::size_t> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

bool same_type(const Graph& g, std::size_t u, std::size_t v) {
  if (u == v) return true;
  auto ru = g.row(u);
  auto rv = g.row(v);
  for (std::size_t w = 0; w < g.words(); ++w) {
    std::uint64_t a = ru[w];
    std::uint64_t b = rv[w];
    if (v / 64 == w) a &= ~(std::uint64_t{1} << (v % 64));
    if (u / 64 == w) b &= ~(std::uint64_t{1} << (u % 64));
    if (a != b) return false;
  }
  return true;
}

TypePartition neighborhood_types(const Graph& g) {
  TypePartition out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool placed = false;
    for (auto& cls : out.classes) {
      if (same_type(g, cls.front(), v)) {
        cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) out.classes.push_back({v});
  }
  for (const auto& cls : out.classes) {
    const bool clique = cls.size() >= 2 && g.has_edge(cls[0], cls[1]);
    out.kinds.push_back(clique ? ClassKind::Clique : ClassKind::IndependentSet);
  }
  return out;
}

Coloring greedy_coloring(const Graph& g) {
  const auto ordering = degeneracy_ordering(g);
  Coloring out;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  out.color.assign(g.size(), kNone);
  std::vector<bool> used;
  for (auto it = ordering.order.rbegin(); it != ordering.order.rend(); ++it) {
    used.assign(out.color_count + 1, false);
    for (auto w : g.neighbors(*it)) {
      if (out.color[w] != kNone) used[out.color[w]] = true;
    }
    std::size_t c = 0;
    while (used[c]) ++c;
    out.color[*it] = c;
    out.color_count = std::max(out.color_count, c + 1);
  }
  return out;
}

namespace {

bool grow_clique(const Graph& g, std::vector<std::size_t>& clique, std::vector<std::size_t> candidates,
                 std::size_t target) {
  if (clique.size() == target) return true;
  while (!candidates.empty()) {
    if (clique.size() + candidates.size() < target) return false;
    const std::size_t v = candidates.back();
    candidates.pop_back();
    std::vector<std::size_t> next;
    for (auto w : candidates) {
      if (g.has_edge(v, w)) next.push_back(w);
    }
    clique.push_back(v);
    if (grow_clique(g, clique, std::move(next), target)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> clique_exceeding(const Graph& g, std::size_t bound) {
  const std::size_t target = bound + 1;
  if (target > g.size()) return std::nullopt;
  std::vector<std::size_t> candidates;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) + 1 >= target) candidates.push_back(v);
  }
  std::vector<std::size_t> clique;
  if (!grow_clique(g, clique, candidates, target)) return std::nullopt;
  std::sort(clique.begin(), clique.end());
  return clique;
}

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count)
    : right_count_(right_count), adj_(left_count) {}

void BipartiteGraph::add_edge(std::size_t left, std::size_t right) {
  if (left >= adj_.size() || right >= right_count_) throw std::out_of_range("bipartite edge out of range");
  adj_[left].push_back(right);
}

Matching maximum_bipartite_matching(const BipartiteGraph& b) {
  const std::size_t nl = b.left_count();
  const std::size_t nr = b.right_count();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  Matching m;
  m.left_to_right.assign(nl, kUnmatched);
  m.right_to_left.assign(nr, kUnmatched);
  std::vector<std::size_t> dist(nl);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < nl; ++u) {
      if (m.left_to_right[u] == kUnmatched) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (auto v : b.adjacent(u)) {
        const std::size_t w = m.right_to_left[v];
        if (w == kUnmatched) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    for (auto v : b.adjacent(u)) {
      const std::size_t w = m.right_to_left[v];
      if (w == kUnmatched || (dist[w] == dist[u] + 1 && dfs(w))) {
        m.left_to_right[u] = v;
        m.right_to_left[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (std::size_t u = 0; u < nl; ++u) {
      if (m.left_to_right[u] == kUnmatched && dfs(u)) ++m.size;
    }
  }
  return m;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t ramsey_upper_bound(std::uint64_t r, std::uint64_t k) {
  if (r < 1 || k < 1) throw std::invalid_argument("ramsey_upper_bound needs r >= 1 and k >= 1");
  return binomial(r + k - 2, r - 1);
}

}  // namespace cffa
