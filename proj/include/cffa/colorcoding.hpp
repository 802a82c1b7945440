#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cffa/instance.hpp"
#include "cffa/sbmwis.hpp"

namespace cffa {

/// Total map job -> color in [0, colors).
struct JobColoring {
  std::vector<std::uint32_t> color_of;
  std::size_t colors = 0;
};

/// Colorings of [p] into [q] such that every subset of size <= q is colored
/// injectively by at least one member.
struct PerfectHashFamily {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<JobColoring> functions;
};

/// Members are drawn from the two-level family
///   x -> g_T(((a x + b) mod P) mod q^2),  P the smallest prime > p,
/// where g_T maps a q-subset T of [q^2] onto [q] in order (and y -> y mod q
/// elsewhere). Subsets of [p] are visited in lexicographic order and a new
/// member is added only for a q-subset no earlier member separates, so the
/// result is injective on every <= q-subset by construction.
/// Throws PreconditionError if q > p or q == 0, BudgetExceeded past the budget.
PerfectHashFamily build_perfect_hash_family(std::size_t p, std::size_t q, const Budget& budget = {});

/// True iff every q-subset of [p] is injective under some member (exhaustive).
bool certify_perfect_hash_family(const PerfectHashFamily& family);

/// Which exact routine answers "is there an independent set of size <= s and
/// weight >= eta" inside one color class union.
struct IndependenceRoute {
  std::optional<GraphClassDecl> graph_class;  // nullopt: brute force
};

inline constexpr std::size_t kMaxColors = 20;

struct ColorCodingOptions {
  IndependenceRoute route{};
  Budget budget{};
  /// Randomized driver: overrides the ceil(e^{ns}) repetition count.
  std::optional<std::uint64_t> repetitions;
};

/// Dynamic program over color subsets: T[1][S] = I(agent 0, S),
/// T[i][S] = OR over nonempty proper S' of T[i-1][S'] and I(agent i, S \ S').
/// `bundle_bound` caps bundle sizes (taken from the instance when it is
/// size-bounded; nullopt means unbounded independent sets). A "yes" carries
/// a verified witness regardless of the coloring.
SolveResult dp_colorful_solve(const Instance& inst, const JobColoring& coloring,
                              std::optional<std::size_t> bundle_bound, const ColorCodingOptions& options = {});

/// The full table for instrumentation: table[i][S] for agent prefix i+1.
std::vector<std::vector<bool>> dp_colorful_table(const Instance& inst, const JobColoring& coloring,
                                                 std::optional<std::size_t> bundle_bound,
                                                 const ColorCodingOptions& options = {});

/// ceil(e^{k}).
std::uint64_t colorcoding_repetitions(std::size_t k);

/// Uniform random coloring of `jobs` jobs into `colors` colors, reproducible from (seed, index).
JobColoring random_coloring(std::size_t jobs, std::size_t colors, std::uint64_t seed, std::uint64_t index);

/// Partial variants only. Sb-P-CFFA: ceil(e^{ns}) random colorings with ns
/// colors. P-CFFA: the same for s = 1, 2, ..., m until a success.
SolveResult solve_colorcoding_randomized(const Instance& inst, std::uint64_t seed,
                                         const ColorCodingOptions& options = {});

/// Partial variants only. Runs the DP for every member of an (m, ns)-perfect
/// hash family (identity coloring when ns >= m). P-CFFA loops s = 1..m.
SolveResult solve_colorcoding_deterministic(const Instance& inst, const ColorCodingOptions& options = {});

}  // namespace cffa
