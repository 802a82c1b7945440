#pragma once

#include <optional>
#include <vector>

#include "cffa/instance.hpp"

namespace fixtures {

using namespace cffa;

inline Instance make(std::vector<std::vector<Value>> rows, std::vector<Edge> edges, Value eta,
                     Completeness c = Completeness::Partial, std::optional<std::size_t> s = {}) {
  Instance::Data d;
  d.agents = rows.size();
  d.jobs = rows.empty() ? 0 : rows[0].size();
  for (auto& r : rows) d.utilities.insert(d.utilities.end(), r.begin(), r.end());
  d.conflict_edges = std::move(edges);
  d.eta = eta;
  d.completeness = c;
  d.size_bound = s;
  return Instance(std::move(d));
}

inline Instance with_variant(const Instance& inst, Completeness c, std::optional<std::size_t> s) {
  return inst.with_completeness(c).with_size_bound(s);
}

inline constexpr Completeness kComplete = Completeness::Complete;
inline constexpr Completeness kPartial = Completeness::Partial;

}  // namespace fixtures
