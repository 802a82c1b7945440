#include "cffa/oracle.hpp"

#include <algorithm>

namespace cffa {

namespace {

struct LabelSearch {
  const Instance& inst;
  NodeMeter meter;
  std::size_t n;
  std::size_t m;
  std::size_t limit;
  std::vector<Mask> nbr;
  std::vector<Value> suffix;  // suffix[i * (m + 1) + j] = sum of ut_i over jobs j..m-1
  std::vector<Mask> bundle;
  std::vector<Value> gained;
  std::vector<std::size_t> label;  // n means unassigned

  LabelSearch(const Instance& in, const Budget& budget)
      : inst(in), meter(budget, "oracle"), n(in.agents()), m(in.jobs()), limit(in.bundle_limit()),
        nbr(m), suffix(n * (m + 1), 0), bundle(n, 0), gained(n, 0), label(m, n) {
    for (std::size_t j = 0; j < m; ++j) nbr[j] = in.conflict_graph().mask(j);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = m; j-- > 0;) {
        suffix[i * (m + 1) + j] = checked_add(suffix[i * (m + 1) + j + 1], in.utility(i, j));
      }
    }
  }

  bool reachable(std::size_t next_job) const {
    for (std::size_t i = 0; i < n; ++i) {
      if (gained[i] < inst.eta() && gained[i] + suffix[i * (m + 1) + next_job] < inst.eta()) return false;
    }
    return true;
  }

  bool search(std::size_t job) {
    meter.tick();
    if (job == m) {
      return std::all_of(gained.begin(), gained.end(), [&](Value g) { return g >= inst.eta(); });
    }
    if (!reachable(job)) return false;
    const Mask bit = Mask{1} << job;
    if (!inst.complete()) {
      label[job] = n;
      if (search(job + 1)) return true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (bundle[i] & nbr[job]) continue;
      if (static_cast<std::size_t>(popcount(bundle[i])) >= limit) continue;
      bundle[i] |= bit;
      gained[i] += inst.utility(i, job);
      label[job] = i;
      if (search(job + 1)) return true;
      bundle[i] &= ~bit;
      gained[i] -= inst.utility(i, job);
    }
    label[job] = n;
    return false;
  }
};

}  // namespace

SolveResult solve_oracle(const Instance& inst, const Budget& budget) {
  if (inst.jobs() > budget.max_jobs) {
    throw BudgetExceeded("oracle: " + std::to_string(inst.jobs()) + " jobs exceeds the oracle limit of " +
                         std::to_string(budget.max_jobs));
  }
  // Every agent needs a non-empty bundle since eta >= 1.
  if (inst.agents() > inst.jobs()) return SolveResult::no();
  LabelSearch s(inst, budget);
  if (!s.search(0)) return SolveResult::no();
  return SolveResult::yes(assignment_from_masks(s.bundle));
}

namespace {

void collect_bundles(const Instance& inst, std::size_t agent, std::size_t start, Mask current, Value gained,
                     std::size_t limit, const std::vector<Mask>& nbr, std::vector<Mask>& out, NodeMeter& meter) {
  meter.tick();
  if (current != 0 && gained >= inst.eta()) out.push_back(current);
  if (static_cast<std::size_t>(popcount(current)) == limit) return;
  for (std::size_t j = start; j < inst.jobs(); ++j) {
    if (current & nbr[j]) continue;
    collect_bundles(inst, agent, j + 1, current | (Mask{1} << j), checked_add(gained, inst.utility(agent, j)), limit,
                    nbr, out, meter);
  }
}

bool choose_bundles(const Instance& inst, const std::vector<std::vector<Mask>>& options, std::size_t agent,
                    Mask used, std::vector<Mask>& chosen, NodeMeter& meter) {
  meter.tick();
  if (agent == options.size()) return !inst.complete() || used == low_bits(inst.jobs());
  for (Mask b : options[agent]) {
    if (b & used) continue;
    chosen[agent] = b;
    if (choose_bundles(inst, options, agent + 1, used | b, chosen, meter)) return true;
  }
  return false;
}

}  // namespace

SolveResult solve_oracle_bundles(const Instance& inst, const Budget& budget) {
  if (!inst.size_bound()) throw PreconditionError("oracle-bundles: requires a size-bounded variant");
  if (inst.jobs() > kMaskWidth) throw PreconditionError("oracle-bundles: mask width exceeded");
  NodeMeter meter(budget, "oracle-bundles");
  std::vector<Mask> nbr(inst.jobs());
  for (std::size_t j = 0; j < inst.jobs(); ++j) nbr[j] = inst.conflict_graph().mask(j);
  std::vector<std::vector<Mask>> options(inst.agents());
  for (std::size_t i = 0; i < inst.agents(); ++i) {
    collect_bundles(inst, i, 0, 0, 0, *inst.size_bound(), nbr, options[i], meter);
    if (options[i].empty()) return SolveResult::no();
  }
  std::vector<Mask> chosen(inst.agents(), 0);
  if (!choose_bundles(inst, options, 0, 0, chosen, meter)) return SolveResult::no();
  return SolveResult::yes(assignment_from_masks(chosen));
}

}  // namespace cffa
