#include "cffa/dispatch.hpp"

#include <algorithm>

#include "cffa/colorcoding.hpp"
#include "cffa/hwpoly.hpp"
#include "cffa/oracle.hpp"
#include "cffa/structured.hpp"

namespace cffa {

namespace {

constexpr std::uint64_t kAutoMaxMissing = 6;
constexpr std::size_t kAutoMaxColors = 6;
constexpr std::size_t kAutoColorJobs = 24;

}  // namespace

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names{"auto",          "oracle",         "hwpoly",
                                              "colorcode-rand", "colorcode-det", "s1",
                                              "nonedges-guess", "nonedges-partition", "twoclique",
                                              "sbmwis-route"};
  return names;
}

std::string choose_solver(const Instance& inst, std::vector<std::string>* reasons) {
  std::vector<std::string> local;
  auto& why = reasons ? *reasons : local;
  const Graph& g = inst.conflict_graph();
  const std::uint64_t t = missing_edge_count(g);
  if (t == 0 || inst.size_bound() == std::optional<std::size_t>{1}) {
    why.push_back(t == 0 ? "conflict graph is complete" : "size bound s = 1");
    return "s1";
  }
  if (two_clique_split(g) && uniform_utilities(inst)) {
    why.push_back("two-clique conflict graph with uniform utilities");
    return "twoclique";
  }
  if (inst.jobs() <= kMaskWidth && t <= kAutoMaxMissing) {
    why.push_back("t = " + std::to_string(t) + " missing edges");
    return "nonedges-partition";
  }
  if (!inst.complete() && inst.size_bound() && inst.jobs() <= kAutoColorJobs &&
      inst.agents() * *inst.size_bound() <= kAutoMaxColors) {
    why.push_back("Sb-P-CFFA with n*s = " + std::to_string(inst.agents() * *inst.size_bound()));
    return "colorcode-det";
  }
  if (inst.jobs() <= kDenseMaxJobs) {
    why.push_back("m = " + std::to_string(inst.jobs()) + " <= " + std::to_string(kDenseMaxJobs));
    return "hwpoly";
  }
  if (inst.jobs() <= kMaskWidth) {
    why.push_back("m = " + std::to_string(inst.jobs()) + ": exhaustive search under the node budget");
    return "oracle";
  }
  std::string msg = "auto: no applicable solver (m = " + std::to_string(inst.jobs()) + " > 64, t = " +
                    std::to_string(t) + ", not two-clique uniform)";
  why.push_back(msg);
  throw PreconditionError(msg);
}

DispatchResult solve_with(const Instance& inst, const SolveOptions& options) {
  DispatchResult out;
  out.solver = options.algo;
  if (options.algo == "auto") out.solver = choose_solver(inst, &out.reasons);
  const std::string& s = out.solver;
  ColorCodingOptions cc{{}, options.budget, options.repetitions};
  if (s == "oracle") {
    Budget b = options.budget;
    if (options.algo == "auto") b.max_jobs = kMaskWidth;
    out.result = solve_oracle(inst, b);
  } else if (s == "hwpoly") {
    out.result = solve_hwpoly(inst, {HwpolyEngine::Auto, options.budget});
  } else if (s == "colorcode-rand") {
    out.result = solve_colorcoding_randomized(inst, options.seed, cc);
  } else if (s == "colorcode-det") {
    out.result = solve_colorcoding_deterministic(inst, cc);
  } else if (s == "sbmwis-route") {
    if (!options.graph_class) throw PreconditionError("sbmwis-route: a graph class (--class) is required");
    cc.route.graph_class = options.graph_class;
    out.result = solve_colorcoding_deterministic(inst, cc);
  } else if (s == "s1") {
    out.result = solve_s1_matching(inst);
  } else if (s == "nonedges-guess") {
    out.result = solve_nonedges_guess(inst, options.budget);
  } else if (s == "nonedges-partition") {
    out.result = solve_nonedges_partition(inst, options.budget);
  } else if (s == "twoclique") {
    out.result = solve_twoclique_uniform(inst);
  } else {
    throw PreconditionError("algo: unknown solver '" + s + "'");
  }
  if (out.result.is_yes()) {
    if (!out.result.witness) throw Error(s + ": yes without a witness");
    if (auto v = verify_assignment(inst, *out.result.witness); !v) {
      throw Error(s + ": witness failed verification: " + v.diagnostic);
    }
  }
  return out;
}

}  // namespace cffa
