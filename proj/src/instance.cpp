#include "cffa/instance.hpp"

#include <algorithm>
#include <set>

namespace cffa {

std::string Variant::name() const {
  std::string base = complete() ? "C-CFFA" : "P-CFFA";
  return size_bounded ? "Sb-" + base : base;
}

namespace {

std::string edge_path(std::size_t i) { return "conflict_edges[" + std::to_string(i) + "]"; }

}  // namespace

Instance::Instance(Data data) : data_(std::move(data)) {
  if (data_.agents == 0) throw ParseError("n_agents: must be positive");
  if (data_.jobs == 0) throw ParseError("n_jobs: must be positive");
  if (data_.utilities.size() != data_.agents * data_.jobs) {
    throw ParseError("utilities: dimension mismatch, expected " + std::to_string(data_.agents) + " x " +
                     std::to_string(data_.jobs));
  }
  if (data_.eta < 1) throw ParseError("eta: eta must be >= 1");
  if (data_.size_bound && (*data_.size_bound < 1 || *data_.size_bound > data_.jobs)) {
    throw ParseError("size_bound: size bound out of range [1, n_jobs]");
  }
  std::set<Edge> seen;
  for (std::size_t i = 0; i < data_.conflict_edges.size(); ++i) {
    auto& [u, v] = data_.conflict_edges[i];
    if (u >= data_.jobs || v >= data_.jobs) throw ParseError(edge_path(i) + ": job index out of range");
    if (u == v) throw ParseError(edge_path(i) + ": self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw ParseError(edge_path(i) + ": duplicate edge");
  }
  std::sort(data_.conflict_edges.begin(), data_.conflict_edges.end());
  graph_ = Graph(data_.jobs, data_.conflict_edges);
}

Instance Instance::with_completeness(Completeness c) const {
  Data d = data_;
  d.completeness = c;
  return Instance(std::move(d));
}

Instance Instance::with_size_bound(std::optional<std::size_t> s) const {
  Data d = data_;
  d.size_bound = s;
  return Instance(std::move(d));
}

Instance Instance::with_eta(Value eta) const {
  Data d = data_;
  d.eta = eta;
  return Instance(std::move(d));
}

Instance Instance::with_edges(std::vector<Edge> edges) const {
  Data d = data_;
  d.conflict_edges = std::move(edges);
  return Instance(std::move(d));
}

bool operator==(const Instance& a, const Instance& b) {
  const auto& x = a.data_;
  const auto& y = b.data_;
  return x.agents == y.agents && x.jobs == y.jobs && x.utilities == y.utilities &&
         x.conflict_edges == y.conflict_edges && x.eta == y.eta && x.size_bound == y.size_bound &&
         x.completeness == y.completeness;
}

std::optional<std::size_t> Assignment::agent_of(std::size_t job) const {
  auto it = map_.find(job);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<std::size_t>> Assignment::bundles(std::size_t agent_count) const {
  std::vector<std::vector<std::size_t>> out(agent_count);
  for (auto [job, agent] : map_) {
    if (agent >= agent_count) throw std::out_of_range("agent index " + std::to_string(agent) + " out of range");
    out[agent].push_back(job);
  }
  return out;
}

Value bundle_utility(const Instance& inst, std::size_t agent, std::span<const std::size_t> jobs) {
  Value total = 0;
  for (auto j : jobs) total = checked_add(total, inst.utility(agent, j));
  return total;
}

Value bundle_utility(const Instance& inst, std::size_t agent, Mask jobs) {
  Value total = 0;
  for (Mask rest = jobs; rest; rest &= rest - 1) {
    total = checked_add(total, inst.utility(agent, static_cast<std::size_t>(std::countr_zero(rest))));
  }
  return total;
}

Assignment assignment_from_masks(std::span<const Mask> bundles) {
  Assignment a;
  for (std::size_t agent = 0; agent < bundles.size(); ++agent) {
    for (Mask rest = bundles[agent]; rest; rest &= rest - 1) {
      a.assign(static_cast<std::size_t>(std::countr_zero(rest)), agent);
    }
  }
  return a;
}

Verdict verify_assignment(const Instance& inst, const Assignment& a) {
  for (auto [job, agent] : a.entries()) {
    if (job >= inst.jobs()) throw std::out_of_range("job index " + std::to_string(job) + " out of range");
    if (agent >= inst.agents()) throw std::out_of_range("agent index " + std::to_string(agent) + " out of range");
  }
  const auto bundles = a.bundles(inst.agents());
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (!is_independent(inst.conflict_graph(), bundles[i])) {
      return {false, "bundle not independent (agent " + std::to_string(i) + ")"};
    }
  }
  if (inst.complete() && a.size() != inst.jobs()) {
    for (std::size_t j = 0; j < inst.jobs(); ++j) {
      if (!a.agent_of(j)) return {false, "unassigned job under Complete (job " + std::to_string(j) + ")"};
    }
  }
  if (auto s = inst.size_bound()) {
    for (std::size_t i = 0; i < bundles.size(); ++i) {
      if (bundles[i].size() > *s) return {false, "bundle exceeds size bound (agent " + std::to_string(i) + ")"};
    }
  }
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (bundle_utility(inst, i, bundles[i]) < inst.eta()) {
      return {false, "utility below eta (agent " + std::to_string(i) + ")"};
    }
  }
  return {};
}

}  // namespace cffa
