#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cffa/generators.hpp"
#include "cffa/io.hpp"

namespace cffa {

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// A random-instance family: `count` draws of `base` with jobs, agents and
/// (optionally) the size bound drawn uniformly from their ranges.
struct SuiteProfile {
  RandomProfile base;
  std::size_t count = 0;
  Range jobs{8, 8};
  Range agents{2, 2};
  std::optional<Range> size_bound;
  bool any_completeness = false;  // pick Partial/Complete per instance
};

struct ScalingSpec {
  std::string solver;
  RandomProfile base;
  std::vector<std::size_t> jobs;
  std::size_t reps = 3;
};

struct Suite {
  std::uint64_t seed = 1;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::vector<std::string> solvers;
  std::vector<SuiteProfile> profiles;
  Budget budget{};
  std::optional<ScalingSpec> scaling;
};

/// Suite document:
///   {"seed":1,"threads":4,"solvers":["oracle","hwpoly"],
///    "profiles":[{"count":100,"jobs":[4,10],"agents":[1,3],"variant":"partial"|"complete"|"any",
///                 "size_bound":null|2|[1,3],"structure":"free","param":0,"edge_probability":0.3,
///                 "utility":[0,5],"eta":[1,8],"uniform":false}],
///    "scaling":{"solver":"hwpoly","m":[12,13],"reps":3,"profile":{...}}}
Suite parse_suite(const Json& doc);
RandomProfile parse_profile(const Json& doc);

/// Instances of a suite in deterministic order, with ids "p<profile>-<index>".
std::vector<std::pair<std::string, Instance>> suite_instances(const Suite& suite);

using SolverFn = std::function<SolveResult(const Instance&)>;

struct BenchRecord {
  std::string instance_id;
  std::string solver;
  std::string answer;  // yes, no, budget, precondition, error
  bool verified = false;
  std::uint64_t micros = 0;
  std::string detail;
};

struct Disagreement {
  std::string instance_id;
  std::string solver;
  std::string kind;  // answer, witness, precondition
  Json replay;       // instance, oracle answer, solver result
};

struct DifferentialReport {
  std::vector<BenchRecord> records;
  std::vector<Disagreement> failures;
  std::vector<std::string> excluded;  // oracle over budget; not scored
  std::size_t misses = 0;             // one-sided solvers answering No on a Yes
  bool ok() const { return failures.empty(); }
};

/// Runs every solver on every instance (solvers named in `extra` override or
/// add to the built-in registry). The oracle adjudicates; witnesses are
/// re-verified. colorcode-rand may miss a Yes without failing the suite.
DifferentialReport run_differential(const Suite& suite, const std::map<std::string, SolverFn>& extra = {});

Json record_to_json(const BenchRecord& r);

struct ScalingRow {
  std::size_t jobs = 0;
  double median_micros = 0;
  std::size_t samples = 0;
  std::size_t timeouts = 0;
};

struct ScalingReport {
  std::string solver;
  std::vector<ScalingRow> rows;
  double slope = 0;  // least-squares log2(median micros) per job
};

ScalingReport run_scaling(const ScalingSpec& spec, std::uint64_t seed, const Budget& budget = {});

double log2_slope(const std::vector<ScalingRow>& rows);

}  // namespace cffa
