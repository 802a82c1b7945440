#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cffa/graph.hpp"
#include "cffa/types.hpp"

namespace cffa {

enum class Completeness { Complete, Partial };

/// C-CFFA, P-CFFA, Sb-C-CFFA, Sb-P-CFFA.
struct Variant {
  Completeness completeness = Completeness::Partial;
  bool size_bounded = false;

  bool complete() const { return completeness == Completeness::Complete; }
  std::string name() const;
  friend bool operator==(const Variant&, const Variant&) = default;
};

/// A validated CFFA instance: n agents, m jobs, an n x m utility matrix,
/// a conflict graph on the jobs, the threshold eta and an optional bundle
/// size bound. Immutable once built.
class Instance {
 public:
  struct Data {
    std::size_t agents = 0;
    std::size_t jobs = 0;
    std::vector<Value> utilities;  // row-major, agents x jobs
    std::vector<Edge> conflict_edges;
    Value eta = 1;
    std::optional<std::size_t> size_bound;
    Completeness completeness = Completeness::Partial;
  };

  /// Validates and normalizes (edges stored u < v, sorted). Throws ParseError.
  explicit Instance(Data data);

  std::size_t agents() const { return data_.agents; }
  std::size_t jobs() const { return data_.jobs; }
  Value eta() const { return data_.eta; }
  std::optional<std::size_t> size_bound() const { return data_.size_bound; }
  Variant variant() const { return {data_.completeness, data_.size_bound.has_value()}; }
  bool complete() const { return data_.completeness == Completeness::Complete; }

  Value utility(std::size_t agent, std::size_t job) const { return data_.utilities[agent * data_.jobs + job]; }
  std::span<const Value> utility_row(std::size_t agent) const {
    return {data_.utilities.data() + agent * data_.jobs, data_.jobs};
  }
  std::span<const Edge> conflict_edges() const { return data_.conflict_edges; }
  const Graph& conflict_graph() const { return graph_; }
  const Data& data() const { return data_; }

  /// Largest bundle an agent may receive (m when unbounded).
  std::size_t bundle_limit() const { return data_.size_bound.value_or(data_.jobs); }

  /// Copy with the given fields replaced (re-validated).
  Instance with_completeness(Completeness c) const;
  Instance with_size_bound(std::optional<std::size_t> s) const;
  Instance with_eta(Value eta) const;
  Instance with_edges(std::vector<Edge> edges) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  Data data_;
  Graph graph_;
};

/// Partial map job -> agent; keys are unique so bundles are disjoint by construction.
class Assignment {
 public:
  void assign(std::size_t job, std::size_t agent) { map_[job] = agent; }
  void unassign(std::size_t job) { map_.erase(job); }
  std::optional<std::size_t> agent_of(std::size_t job) const;
  const std::map<std::size_t, std::size_t>& entries() const { return map_; }
  std::size_t size() const { return map_.size(); }

  /// Bundles indexed by agent; jobs ascending.
  std::vector<std::vector<std::size_t>> bundles(std::size_t agent_count) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<std::size_t, std::size_t> map_;
};

enum class Answer { Yes, No };

struct SolveResult {
  Answer answer = Answer::No;
  std::optional<Assignment> witness;

  static SolveResult no() { return {}; }
  static SolveResult yes(Assignment a) { return {Answer::Yes, std::move(a)}; }
  bool is_yes() const { return answer == Answer::Yes; }
};

struct Verdict {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Checks, in order: every bundle independent, no unassigned job under
/// Complete, bundle sizes within the bound, every agent reaching eta.
/// Throws std::out_of_range for job or agent indices outside the instance.
Verdict verify_assignment(const Instance& inst, const Assignment& a);

/// Sum of one agent's utilities over a bundle (checked).
Value bundle_utility(const Instance& inst, std::size_t agent, std::span<const std::size_t> jobs);
Value bundle_utility(const Instance& inst, std::size_t agent, Mask jobs);

/// Builds an assignment from per-agent job masks.
Assignment assignment_from_masks(std::span<const Mask> bundles);

}  // namespace cffa
