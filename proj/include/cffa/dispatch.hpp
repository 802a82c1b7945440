#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cffa/instance.hpp"
#include "cffa/sbmwis.hpp"

namespace cffa {

struct SolveOptions {
  std::string algo = "auto";
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> repetitions;
  std::optional<GraphClassDecl> graph_class;  // sbmwis-route
  Budget budget{};
};

struct DispatchResult {
  SolveResult result;
  std::string solver;
  std::vector<std::string> reasons;  // why auto picked (or refused) a solver
};

/// auto, oracle, hwpoly, colorcode-rand, colorcode-det, s1, nonedges-guess,
/// nonedges-partition, twoclique, sbmwis-route.
const std::vector<std::string>& solver_names();

/// Solver `auto` would pick; only solvers whose preconditions hold are chosen.
/// Throws PreconditionError (listing the reasons) when nothing applies.
std::string choose_solver(const Instance& inst, std::vector<std::string>* reasons = nullptr);

/// Runs the named solver (or the auto choice). Throws PreconditionError for
/// a forced solver outside its precondition, BudgetExceeded past the budget.
DispatchResult solve_with(const Instance& inst, const SolveOptions& options = {});

}  // namespace cffa
