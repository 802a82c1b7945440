#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cffa/instance.hpp"

namespace cffa {

enum class KernelRule { NbrDiversity, Degree, Chromatic, Ramsey };

std::string kernel_rule_name(KernelRule rule);
KernelRule parse_kernel_rule(const std::string& text);

/// Parameters normally derived from the conflict graph. Passing the values a
/// previous run recorded makes a second application reproducible.
struct KernelOptions {
  std::optional<std::size_t> degree;     // Degree: d (defaults to max degree)
  std::optional<std::size_t> chromatic;  // Chromatic: colors (defaults to greedy count)
  std::optional<std::size_t> r;          // Ramsey: required
  std::optional<TypePartition> types;    // NbrDiversity (defaults to neighborhood_types)
};

struct KernelReport {
  Instance reduced;
  std::vector<std::size_t> job_map;  // reduced job -> original job
  KernelRule rule;
  std::size_t parameter = 0;  // d, chromatic bound, r or type count
  std::uint64_t per_agent_budget = 0;
  std::uint64_t stated_bound = 0;
  std::size_t surviving_jobs = 0;
  bool trivial_no = false;
  /// Clique classes kept in full under Complete; counted in stated_bound.
  std::uint64_t clique_allowance = 0;
  /// NbrDiversity: the partition used, restricted to the reduced instance.
  std::optional<TypePartition> reduced_types;
};

/// Neighborhood-diversity marking; not for size-bounded variants.
KernelReport kernel_nbr_diversity(const Instance& inst, const KernelOptions& options = {});

/// Bounded-degree marking with (d+1) * eta * n jobs per agent.
/// Complete requires d < n.
KernelReport kernel_degree(const Instance& inst, const KernelOptions& options = {});

/// Partial only; chi * eta * n jobs per agent with chi from a proper coloring.
KernelReport kernel_chromatic(const Instance& inst, const KernelOptions& options = {});

/// Partial only; the conflict graph must be K_r-free. R(r, eta*n) jobs per agent.
KernelReport kernel_ramsey(const Instance& inst, const KernelOptions& options);

KernelReport apply_kernel(const Instance& inst, KernelRule rule, const KernelOptions& options = {});

/// Options that reproduce `report` when the rule is applied to its reduced instance.
KernelOptions recorded_options(const KernelReport& report);

/// Restriction of `inst` to `keep` (ascending original indices).
Instance restrict_jobs(const Instance& inst, const std::vector<std::size_t>& keep);

}  // namespace cffa
