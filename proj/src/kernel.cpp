#include "cffa/kernel.hpp"

#include <algorithm>
#include <limits>

namespace cffa {

std::string kernel_rule_name(KernelRule rule) {
  switch (rule) {
    case KernelRule::NbrDiversity: return "nbrdiv";
    case KernelRule::Degree: return "degree";
    case KernelRule::Chromatic: return "chromatic";
    case KernelRule::Ramsey: return "ramsey";
  }
  return "?";
}

KernelRule parse_kernel_rule(const std::string& text) {
  if (text == "nbrdiv") return KernelRule::NbrDiversity;
  if (text == "degree") return KernelRule::Degree;
  if (text == "chromatic") return KernelRule::Chromatic;
  if (text == "ramsey") return KernelRule::Ramsey;
  throw ParseError("rule: unknown kernel rule '" + text + "'");
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_add_overflow(a, b, &out) ? kSaturated : out;
}

// Each job goes into the bag of the first agent that values it and still has room.
void mark_first_fit(const Instance& inst, std::span<const std::size_t> jobs, std::uint64_t budget,
                    std::vector<bool>& keep) {
  std::vector<std::uint64_t> load(inst.agents(), 0);
  for (auto v : jobs) {
    for (std::size_t i = 0; i < inst.agents(); ++i) {
      if (inst.utility(i, v) > 0 && load[i] < budget) {
        keep[v] = true;
        ++load[i];
        break;
      }
    }
  }
}

std::vector<std::size_t> all_jobs(const Instance& inst) {
  std::vector<std::size_t> v(inst.jobs());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = j;
  return v;
}

Instance trivial_no_instance(const Instance& inst) {
  Instance::Data d;
  d.agents = inst.agents();
  d.jobs = 1;
  d.utilities.assign(inst.agents(), 0);
  d.eta = inst.eta();
  d.completeness = inst.data().completeness;
  return Instance(std::move(d));
}

KernelReport finish(const Instance& inst, KernelRule rule, const std::vector<bool>& keep) {
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < keep.size(); ++j) {
    if (keep[j]) kept.push_back(j);
  }
  if (kept.empty()) {
    // Every agent needs a job with positive utility; with none left the answer is No.
    KernelReport r{trivial_no_instance(inst), {}, rule, 0, 0, 0, 0, false, 0, std::nullopt};
    r.trivial_no = true;
    return r;
  }
  KernelReport r{restrict_jobs(inst, kept), kept, rule, 0, 0, 0, 0, false, 0, std::nullopt};
  r.surviving_jobs = kept.size();
  return r;
}

void require_unbounded(const Instance& inst, const char* who) {
  if (inst.size_bound()) throw PreconditionError(std::string(who) + ": kernels apply to unbounded variants only");
}

void require_partial(const Instance& inst, const char* who) {
  if (inst.complete()) throw PreconditionError(std::string(who) + ": inapplicable to Complete variants");
}

}  // namespace

Instance restrict_jobs(const Instance& inst, const std::vector<std::size_t>& keep) {
  Instance::Data d;
  d.agents = inst.agents();
  d.jobs = keep.size();
  d.eta = inst.eta();
  d.completeness = inst.data().completeness;
  d.size_bound = inst.size_bound();
  if (d.size_bound && *d.size_bound > d.jobs) d.size_bound = d.jobs;
  std::vector<std::size_t> index(inst.jobs(), kUnmatched);
  for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = k;
  for (std::size_t i = 0; i < inst.agents(); ++i) {
    for (auto j : keep) d.utilities.push_back(inst.utility(i, j));
  }
  for (const auto& [u, v] : inst.conflict_edges()) {
    if (index[u] != kUnmatched && index[v] != kUnmatched) d.conflict_edges.emplace_back(index[u], index[v]);
  }
  return Instance(std::move(d));
}

KernelReport kernel_nbr_diversity(const Instance& inst, const KernelOptions& options) {
  require_unbounded(inst, "nbrdiv");
  const TypePartition types = options.types ? *options.types : neighborhood_types(inst.conflict_graph());
  const std::size_t n = inst.agents();
  const std::uint64_t per_agent = sat_mul(inst.eta(), n);
  std::vector<bool> keep(inst.jobs(), false);
  std::uint64_t bound = 0;
  std::uint64_t allowance = 0;
  for (std::size_t c = 0; c < types.type_count(); ++c) {
    const auto& members = types.classes[c];
    if (members.empty()) continue;
    if (types.kinds[c] == ClassKind::Clique) {
      if (inst.complete()) {
        // A clique class contributes at most one job per bundle.
        if (members.size() > n) {
          KernelReport r{trivial_no_instance(inst), {}, KernelRule::NbrDiversity, 0, 0, 0, 0, false, 0, std::nullopt};
          r.trivial_no = true;
          r.parameter = types.type_count();
          r.per_agent_budget = per_agent;
          return r;
        }
        for (auto v : members) keep[v] = true;
        allowance += members.size();
        bound = sat_add(bound, members.size());
      } else {
        const std::size_t top = std::min<std::size_t>(members.size(), n * n);
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<std::size_t> order = members;
          std::stable_sort(order.begin(), order.end(),
                           [&](auto a, auto b) { return inst.utility(i, a) > inst.utility(i, b); });
          for (std::size_t k = 0; k < top; ++k) {
            if (inst.utility(i, order[k]) > 0) keep[order[k]] = true;
          }
        }
        bound = sat_add(bound, std::min<std::uint64_t>(members.size(), sat_mul(n, sat_mul(n, n))));
      }
    } else {
      mark_first_fit(inst, members, per_agent, keep);
      bound = sat_add(bound, sat_mul(per_agent, n));
      if (inst.complete()) {
        // Jobs of this class that were dropped can ride along with the representative.
        keep[members.front()] = true;
        bound = sat_add(bound, 1);
      }
    }
  }
  KernelReport r = finish(inst, KernelRule::NbrDiversity, keep);
  r.parameter = types.type_count();
  r.per_agent_budget = per_agent;
  r.stated_bound = bound;
  r.clique_allowance = allowance;
  if (!r.trivial_no) {
    std::vector<std::size_t> index(inst.jobs(), kUnmatched);
    for (std::size_t k = 0; k < r.job_map.size(); ++k) index[r.job_map[k]] = k;
    TypePartition reduced;
    for (std::size_t c = 0; c < types.type_count(); ++c) {
      std::vector<std::size_t> cls;
      for (auto v : types.classes[c]) {
        if (index[v] != kUnmatched) cls.push_back(index[v]);
      }
      if (cls.empty()) continue;
      reduced.classes.push_back(std::move(cls));
      reduced.kinds.push_back(types.kinds[c]);
    }
    r.reduced_types = std::move(reduced);
  }
  return r;
}

KernelReport kernel_degree(const Instance& inst, const KernelOptions& options) {
  require_unbounded(inst, "degree");
  const std::size_t actual = inst.conflict_graph().max_degree();
  const std::size_t d = options.degree.value_or(actual);
  if (d < actual) throw PreconditionError("degree: declared degree below the maximum degree");
  if (inst.complete() && d >= inst.agents()) {
    throw PreconditionError("degree: inapplicable to Complete variants with max degree d >= n (d = " +
                            std::to_string(d) + ", n = " + std::to_string(inst.agents()) + ")");
  }
  const std::uint64_t per_agent = sat_mul(d + 1, sat_mul(inst.eta(), inst.agents()));
  std::vector<bool> keep(inst.jobs(), false);
  mark_first_fit(inst, all_jobs(inst), per_agent, keep);
  KernelReport r = finish(inst, KernelRule::Degree, keep);
  r.parameter = d;
  r.per_agent_budget = per_agent;
  r.stated_bound = sat_mul(per_agent, inst.agents());
  return r;
}

KernelReport kernel_chromatic(const Instance& inst, const KernelOptions& options) {
  require_unbounded(inst, "chromatic");
  require_partial(inst, "chromatic");
  const std::size_t chi = options.chromatic.value_or(greedy_coloring(inst.conflict_graph()).color_count);
  if (chi == 0) throw PreconditionError("chromatic: color count must be positive");
  const std::uint64_t per_agent = sat_mul(chi, sat_mul(inst.eta(), inst.agents()));
  std::vector<bool> keep(inst.jobs(), false);
  mark_first_fit(inst, all_jobs(inst), per_agent, keep);
  KernelReport r = finish(inst, KernelRule::Chromatic, keep);
  r.parameter = chi;
  r.per_agent_budget = per_agent;
  r.stated_bound = sat_mul(per_agent, inst.agents());
  return r;
}

KernelReport kernel_ramsey(const Instance& inst, const KernelOptions& options) {
  require_unbounded(inst, "ramsey");
  require_partial(inst, "ramsey");
  if (!options.r || *options.r < 2) throw PreconditionError("ramsey: r >= 2 is required");
  const std::size_t r = *options.r;
  if (clique_exceeding(inst.conflict_graph(), r - 1)) {
    throw PreconditionError("ramsey: inapplicable, conflict graph contains K_" + std::to_string(r));
  }
  std::uint64_t per_agent = kSaturated;
  try {
    per_agent = ramsey_upper_bound(r, sat_mul(inst.eta(), inst.agents()));
  } catch (const OverflowError&) {
  }
  std::vector<bool> keep(inst.jobs(), false);
  mark_first_fit(inst, all_jobs(inst), per_agent, keep);
  KernelReport rep = finish(inst, KernelRule::Ramsey, keep);
  rep.parameter = r;
  rep.per_agent_budget = per_agent;
  rep.stated_bound = sat_mul(per_agent, inst.agents());
  return rep;
}

KernelReport apply_kernel(const Instance& inst, KernelRule rule, const KernelOptions& options) {
  switch (rule) {
    case KernelRule::NbrDiversity: return kernel_nbr_diversity(inst, options);
    case KernelRule::Degree: return kernel_degree(inst, options);
    case KernelRule::Chromatic: return kernel_chromatic(inst, options);
    case KernelRule::Ramsey: return kernel_ramsey(inst, options);
  }
  throw PreconditionError("unknown kernel rule");
}

KernelOptions recorded_options(const KernelReport& report) {
  KernelOptions o;
  switch (report.rule) {
    case KernelRule::NbrDiversity: o.types = report.reduced_types; break;
    case KernelRule::Degree: o.degree = report.parameter; break;
    case KernelRule::Chromatic: o.chromatic = report.parameter; break;
    case KernelRule::Ramsey: o.r = report.parameter; break;
  }
  return o;
}

}  // namespace cffa
