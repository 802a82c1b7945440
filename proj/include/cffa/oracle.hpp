#pragma once

#include "cffa/instance.hpp"

namespace cffa {

/// Ground-truth solver: depth-first search over (n+1)^m labelings, each job
/// labelled unassigned (Partial only) or with an agent, trying labels in
/// that order. The first accepting labeling found is the witness.
/// Throws BudgetExceeded if m > budget.max_jobs or the node budget runs out.
SolveResult solve_oracle(const Instance& inst, const Budget& budget = {});

/// Size-bounded variants only: enumerates every feasible bundle of size <= s
/// per agent, then searches for pairwise disjoint choices (one per agent).
SolveResult solve_oracle_bundles(const Instance& inst, const Budget& budget = {});

}  // namespace cffa
