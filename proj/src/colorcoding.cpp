#include "cffa/colorcoding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

namespace cffa {

namespace {

bool is_prime(std::size_t x) {
  if (x < 2) return false;
  for (std::size_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

bool injective_on(const JobColoring& f, std::span<const std::size_t> subset) {
  std::uint64_t seen = 0;
  for (auto x : subset) {
    const std::uint64_t bit = std::uint64_t{1} << f.color_of[x];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

// Advances `idx` to the next k-combination of [n] in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

PerfectHashFamily build_perfect_hash_family(std::size_t p, std::size_t q, const Budget& budget) {
  if (q == 0) throw PreconditionError("perfect hash family: q must be positive");
  if (q > p) throw PreconditionError("perfect hash family: q > p");
  if (q > 64) throw PreconditionError("perfect hash family: q > 64");
  NodeMeter meter(budget, "perfect hash family");
  PerfectHashFamily family{p, q, {}};

  std::size_t prime = p + 1;
  while (!is_prime(prime)) ++prime;
  const std::size_t buckets = q * q;

  std::vector<std::size_t> subset(q);
  for (std::size_t i = 0; i < q; ++i) subset[i] = i;
  std::vector<std::size_t> image(q);
  do {
    meter.tick(family.functions.size() + 1);
    const bool covered = std::any_of(family.functions.begin(), family.functions.end(),
                                     [&](const JobColoring& f) { return injective_on(f, subset); });
    if (covered) continue;

    JobColoring member{std::vector<std::uint32_t>(p), q};
    bool built = false;
    for (std::size_t a = 1; a < prime && !built; ++a) {
      for (std::size_t b = 0; b < prime && !built; ++b) {
        auto outer = [&](std::size_t x) { return ((a * x + b) % prime) % buckets; };
        for (std::size_t i = 0; i < q; ++i) image[i] = outer(subset[i]);
        std::vector<std::size_t> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        for (std::size_t x = 0; x < p; ++x) {
          const std::size_t y = outer(x);
          auto it = std::lower_bound(sorted.begin(), sorted.end(), y);
          member.color_of[x] = static_cast<std::uint32_t>(it != sorted.end() && *it == y ? it - sorted.begin() : y % q);
        }
        built = true;
      }
    }
    if (!built) {
      // Unreachable for a universal outer family; keeps the guarantee unconditional.
      for (std::size_t x = 0; x < p; ++x) member.color_of[x] = static_cast<std::uint32_t>(x % q);
      for (std::size_t i = 0; i < q; ++i) member.color_of[subset[i]] = static_cast<std::uint32_t>(i);
    }
    family.functions.push_back(std::move(member));
  } while (next_combination(subset, p));
  return family;
}

bool certify_perfect_hash_family(const PerfectHashFamily& family) {
  if (family.q == 0 || family.q > family.p) return false;
  std::vector<std::size_t> subset(family.q);
  for (std::size_t i = 0; i < family.q; ++i) subset[i] = i;
  do {
    const bool covered = std::any_of(family.functions.begin(), family.functions.end(),
                                     [&](const JobColoring& f) { return injective_on(f, subset); });
    if (!covered) return false;
  } while (next_combination(subset, family.p));
  return true;
}

namespace {

using JobSet = std::vector<std::size_t>;

class ColorDp {
 public:
  ColorDp(const Instance& inst, const JobColoring& coloring, std::optional<std::size_t> bound,
          const ColorCodingOptions& options)
      : inst_(inst), coloring_(coloring), bound_(bound), options_(options), meter_(options.budget, "color-coding"),
        memo_(inst.agents()) {
    if (inst.complete()) throw PreconditionError("color-coding: Complete variants are not supported");
    if (inst.jobs() > kMaskWidth) throw PreconditionError("color-coding: mask width exceeded");
    if (coloring.colors == 0 || coloring.colors > kMaxColors) {
      throw BudgetExceeded("color-coding: " + std::to_string(coloring.colors) + " colors exceeds the table limit of " +
                           std::to_string(kMaxColors));
    }
    class_jobs_.assign(coloring.colors, 0);
    for (std::size_t j = 0; j < inst.jobs(); ++j) class_jobs_[coloring.color_of.at(j)] |= Mask{1} << j;
  }

  void run() {
    const std::size_t full = std::size_t{1} << coloring_.colors;
    table_.assign(inst_.agents(), std::vector<bool>(full, false));
    back_.assign(inst_.agents(), std::vector<std::uint32_t>(full, 0));
    for (std::size_t s = 1; s < full; ++s) table_[0][s] = independent(0, s).has_value();
    for (std::size_t i = 1; i < inst_.agents(); ++i) {
      for (std::size_t s = 1; s < full; ++s) {
        for (std::size_t sub = (s - 1) & s; sub > 0; sub = (sub - 1) & s) {
          meter_.tick();
          if (!table_[i - 1][sub]) continue;
          if (independent(i, s ^ sub)) {
            table_[i][s] = true;
            back_[i][s] = static_cast<std::uint32_t>(sub);
            break;
          }
        }
      }
    }
  }

  SolveResult result() {
    const std::size_t last = inst_.agents() - 1;
    for (std::size_t s = 1; s < table_[last].size(); ++s) {
      if (!table_[last][s]) continue;
      Assignment a;
      std::size_t colors = s;
      for (std::size_t i = last + 1; i-- > 0;) {
        const std::size_t own = i == 0 ? colors : colors ^ back_[i][colors];
        for (auto job : *independent(i, own)) a.assign(job, i);
        if (i > 0) colors = back_[i][colors];
      }
      if (!verify_assignment(inst_, a)) throw Error("color-coding: produced an invalid witness");
      return SolveResult::yes(std::move(a));
    }
    return SolveResult::no();
  }

  const std::vector<std::vector<bool>>& table() const { return table_; }

 private:
  // I(agent, colors): an independent set inside the jobs colored by `colors`.
  const std::optional<JobSet>& independent(std::size_t agent, std::size_t colors) {
    Mask jobs = 0;
    for (std::size_t c = 0; c < coloring_.colors; ++c) {
      if (colors >> c & 1) jobs |= class_jobs_[c];
    }
    auto [it, inserted] = memo_[agent].try_emplace(jobs);
    if (!inserted) return it->second;
    meter_.tick();
    if (jobs == 0) return it->second;
    JobSet members;
    for (Mask rest = jobs; rest; rest &= rest - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    WeightedGraph wg{inst_.conflict_graph().induced(members), {}};
    for (auto j : members) wg.weights.push_back(inst_.utility(agent, j));
    std::optional<JobSet> local;
    if (options_.route.graph_class) {
      const std::size_t k = bound_.value_or(members.size());
      local = sbmwis_ifc(wg, *options_.route.graph_class, k, inst_.eta(), options_.budget);
    } else if (bound_) {
      local = sbmwis_bruteforce(wg, *bound_, inst_.eta(), options_.budget);
    } else {
      local = mwis_unbounded_bruteforce(wg, inst_.eta(), options_.budget);
    }
    if (local) {
      for (auto& v : *local) v = members[v];
      it->second = std::move(local);
    }
    return it->second;
  }

  const Instance& inst_;
  const JobColoring& coloring_;
  std::optional<std::size_t> bound_;
  const ColorCodingOptions& options_;
  NodeMeter meter_;
  std::vector<Mask> class_jobs_;
  std::vector<std::unordered_map<Mask, std::optional<JobSet>>> memo_;
  std::vector<std::vector<bool>> table_;
  std::vector<std::vector<std::uint32_t>> back_;
};

std::optional<std::size_t> effective_bound(const Instance& inst, std::optional<std::size_t> bound) {
  if (bound) return bound;
  return inst.size_bound();
}

}  // namespace

SolveResult dp_colorful_solve(const Instance& inst, const JobColoring& coloring, std::optional<std::size_t> bundle_bound,
                              const ColorCodingOptions& options) {
  ColorDp dp(inst, coloring, effective_bound(inst, bundle_bound), options);
  dp.run();
  return dp.result();
}

std::vector<std::vector<bool>> dp_colorful_table(const Instance& inst, const JobColoring& coloring,
                                                 std::optional<std::size_t> bundle_bound,
                                                 const ColorCodingOptions& options) {
  ColorDp dp(inst, coloring, effective_bound(inst, bundle_bound), options);
  dp.run();
  return dp.table();
}

std::uint64_t colorcoding_repetitions(std::size_t k) {
  const double r = std::ceil(std::exp(static_cast<double>(k)));
  if (r >= static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

JobColoring random_coloring(std::size_t jobs, std::size_t colors, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(colors - 1));
  JobColoring c{std::vector<std::uint32_t>(jobs), colors};
  for (auto& x : c.color_of) x = pick(rng);
  return c;
}

namespace {

void require_partial(const Instance& inst, const char* who) {
  if (inst.complete()) {
    throw PreconditionError(std::string(who) + ": Complete variants are not supported (partial problem only)");
  }
}

JobColoring identity_coloring(std::size_t jobs) {
  JobColoring c{std::vector<std::uint32_t>(jobs), jobs};
  for (std::size_t j = 0; j < jobs; ++j) c.color_of[j] = static_cast<std::uint32_t>(j);
  return c;
}

SolveResult deterministic_for_bound(const Instance& inst, std::size_t s, const ColorCodingOptions& options) {
  const std::size_t q = inst.agents() * s;
  if (q >= inst.jobs()) return dp_colorful_solve(inst, identity_coloring(inst.jobs()), s, options);
  if (q > kMaxColors) throw BudgetExceeded("colorcode-det: n*s = " + std::to_string(q) + " colors is over budget");
  const auto family = build_perfect_hash_family(inst.jobs(), q, options.budget);
  for (const auto& f : family.functions) {
    auto r = dp_colorful_solve(inst, f, s, options);
    if (r.is_yes()) return r;
  }
  return SolveResult::no();
}

}  // namespace

SolveResult solve_colorcoding_deterministic(const Instance& inst, const ColorCodingOptions& options) {
  require_partial(inst, "colorcode-det");
  if (inst.agents() > inst.jobs()) return SolveResult::no();
  if (auto s = inst.size_bound()) return deterministic_for_bound(inst, *s, options);
  // P-CFFA: a solution with bundles of size <= s for the smallest feasible s.
  for (std::size_t s = 1; s <= inst.jobs(); ++s) {
    auto r = deterministic_for_bound(inst, s, options);
    if (r.is_yes() || inst.agents() * s >= inst.jobs()) return r;
  }
  return SolveResult::no();
}

SolveResult solve_colorcoding_randomized(const Instance& inst, std::uint64_t seed, const ColorCodingOptions& options) {
  require_partial(inst, "colorcode-rand");
  if (inst.agents() > inst.jobs()) return SolveResult::no();
  std::uint64_t index = 0;
  auto attempt = [&](std::size_t s) {
    const std::size_t q = inst.agents() * s;
    if (q > kMaxColors) throw BudgetExceeded("colorcode-rand: n*s = " + std::to_string(q) + " colors is over budget");
    const std::uint64_t reps = options.repetitions.value_or(colorcoding_repetitions(q));
    NodeMeter meter(options.budget, "colorcode-rand repetitions");
    for (std::uint64_t r = 0; r < reps; ++r) {
      meter.tick();
      auto res = dp_colorful_solve(inst, random_coloring(inst.jobs(), q, seed, index++), s, options);
      if (res.is_yes()) return res;
    }
    return SolveResult::no();
  };
  if (auto s = inst.size_bound()) return attempt(*s);
  for (std::size_t s = 1; s <= inst.jobs(); ++s) {
    // Once ns >= m every feasible assignment is colorful under the identity.
    if (inst.agents() * s >= inst.jobs()) return dp_colorful_solve(inst, identity_coloring(inst.jobs()), s, options);
    auto r = attempt(s);
    if (r.is_yes()) return r;
  }
  return SolveResult::no();
}

}  // namespace cffa
