#include "cffa/hwpoly.hpp"

#include <algorithm>

namespace cffa {

bool MaskPolynomial::empty() const {
  return std::all_of(layers.begin(), layers.end(), [](const auto& l) { return l.empty(); });
}

std::size_t MaskPolynomial::term_count() const {
  std::size_t total = 0;
  for (const auto& l : layers) total += l.size();
  return total;
}

bool MaskPolynomial::contains(Mask m) const {
  const auto h = static_cast<std::size_t>(popcount(m));
  if (h >= layers.size()) return false;
  return std::binary_search(layers[h].begin(), layers[h].end(), m);
}

void MaskPolynomial::normalize() {
  for (auto& l : layers) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
}

bool MaskPolynomial::layers_sound() const {
  for (std::size_t h = 0; h < layers.size(); ++h) {
    for (Mask m : layers[h]) {
      if (static_cast<std::size_t>(popcount(m)) != h) return false;
    }
  }
  return true;
}

namespace {

struct FamilyBuilder {
  const Instance& inst;
  std::vector<Mask> nbr;
  std::size_t limit;
  NodeMeter meter;
  FeasibleBundleFamily out;
  std::vector<Value> gained;

  FamilyBuilder(const Instance& in, const Budget& budget)
      : inst(in), nbr(in.jobs()), limit(in.bundle_limit()), meter(budget, "build_families"),
        gained(in.agents(), 0) {
    for (std::size_t j = 0; j < in.jobs(); ++j) nbr[j] = in.conflict_graph().mask(j);
    out.per_agent.resize(in.agents());
  }

  // Enumerates independent sets in increasing-index order; `blocked` holds
  // the union of neighborhoods of chosen jobs.
  void extend(std::size_t start, Mask current, Mask blocked, std::size_t size) {
    meter.tick();
    if (current != 0) {
      for (std::size_t i = 0; i < inst.agents(); ++i) {
        if (gained[i] >= inst.eta()) out.per_agent[i].push_back(current);
      }
    }
    if (size == limit) return;
    for (std::size_t j = start; j < inst.jobs(); ++j) {
      const Mask bit = Mask{1} << j;
      if (blocked & bit) continue;
      for (std::size_t i = 0; i < inst.agents(); ++i) gained[i] = checked_add(gained[i], inst.utility(i, j));
      extend(j + 1, current | bit, blocked | nbr[j], size + 1);
      for (std::size_t i = 0; i < inst.agents(); ++i) gained[i] -= inst.utility(i, j);
    }
  }
};

void require_mask_width(const Instance& inst) {
  if (inst.jobs() > kMaskWidth) {
    throw PreconditionError("hwpoly: mask width exceeded (" + std::to_string(inst.jobs()) + " jobs > 64)");
  }
}

}  // namespace

FeasibleBundleFamily build_families(const Instance& inst, const Budget& budget) {
  require_mask_width(inst);
  FamilyBuilder b(inst, budget);
  b.extend(0, 0, 0, 0);
  for (auto& f : b.out.per_agent) std::sort(f.begin(), f.end());
  return std::move(b.out);
}

std::vector<Mask> hw_shift_product(const MaskPolynomial& poly, Mask bundle, std::size_t target_weight) {
  std::vector<Mask> out;
  const auto bundle_weight = static_cast<std::size_t>(popcount(bundle));
  if (target_weight < bundle_weight) return out;
  const std::size_t source = target_weight - bundle_weight;
  if (source >= poly.layers.size()) return out;
  for (Mask prev : poly.layers[source]) {
    // Exponents add as integers; a carry lowers the Hamming weight.
    const unsigned __int128 sum = static_cast<unsigned __int128>(prev) + bundle;
    const auto weight = static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(sum)) +
                                                 std::popcount(static_cast<std::uint64_t>(sum >> 64)));
    if (weight == target_weight) out.push_back(static_cast<Mask>(sum));
  }
  return out;
}

namespace {

MaskPolynomial unit_polynomial(std::size_t width) {
  MaskPolynomial p(width);
  p.add(0);
  return p;
}

std::vector<MaskPolynomial> sparse_rounds(const Instance& inst, const FeasibleBundleFamily& families,
                                          const Budget& budget) {
  const std::size_t m = inst.jobs();
  NodeMeter meter(budget, "hwpoly");
  std::vector<MaskPolynomial> rounds;
  rounds.push_back(unit_polynomial(m));
  for (std::size_t i = 0; i < inst.agents(); ++i) {
    const MaskPolynomial& prev = rounds.back();
    MaskPolynomial next(m);
    for (Mask bundle : families.per_agent[i]) {
      const auto w = static_cast<std::size_t>(popcount(bundle));
      for (std::size_t target = w; target <= m; ++target) {
        meter.tick(prev.layers[target - w].size() + 1);
        for (Mask term : hw_shift_product(prev, bundle, target)) next.layers[target].push_back(term);
      }
    }
    next.normalize();
    rounds.push_back(std::move(next));
  }
  return rounds;
}

// Ranked zeta transform: for every layer, a[X] <- sum of a[Y] over Y subset of X.
void zeta(std::uint32_t* a, std::size_t m) {
  const std::size_t n = std::size_t{1} << m;
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x & bit) a[x] += a[x ^ bit];
    }
  }
}

void mobius(std::uint32_t* a, std::size_t m) {
  const std::size_t n = std::size_t{1} << m;
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x & bit) a[x] -= a[x ^ bit];
    }
  }
}

// Round i+1 keeps X iff X = A + S with A in round i and S in F_i disjoint.
// Using Hamming-stratified transforms, the number of such pairs is
//   mobius( sum_j rhat[j] * fhat[k - j] )[X]  restricted to popcount(X) = k,
// exact modulo 2^32 because it never exceeds 2^m. Work is a fixed
// O(2^m m^2) per round, so the node budget is not consulted.
std::vector<MaskPolynomial> dense_rounds(const Instance& inst, const FeasibleBundleFamily& families,
                                         const Budget&) {
  const std::size_t m = inst.jobs();
  const std::size_t n = std::size_t{1} << m;
  std::vector<std::uint32_t> fhat((m + 1) * n);
  std::vector<std::uint32_t> rhat((m + 1) * n);
  std::vector<std::uint32_t> conv(n);

  std::vector<MaskPolynomial> rounds;
  rounds.push_back(unit_polynomial(m));
  for (std::size_t i = 0; i < inst.agents(); ++i) {
    const MaskPolynomial& prev = rounds.back();
    MaskPolynomial next(m);
    if (prev.empty() || families.per_agent[i].empty()) {
      rounds.push_back(std::move(next));
      continue;
    }
    std::fill(fhat.begin(), fhat.end(), 0);
    std::fill(rhat.begin(), rhat.end(), 0);
    std::size_t f_max = 0;
    for (Mask s : families.per_agent[i]) {
      const auto h = static_cast<std::size_t>(popcount(s));
      fhat[h * n + s] = 1;
      f_max = std::max(f_max, h);
    }
    std::size_t r_min = m + 1;
    std::size_t r_max = 0;
    for (std::size_t h = 0; h <= m; ++h) {
      if (prev.layers[h].empty()) continue;
      r_min = std::min(r_min, h);
      r_max = std::max(r_max, h);
      for (Mask x : prev.layers[h]) rhat[h * n + x] = 1;
    }
    for (std::size_t h = 1; h <= f_max; ++h) {
      zeta(fhat.data() + h * n, m);
    }
    for (std::size_t h = r_min; h <= r_max; ++h) {
      zeta(rhat.data() + h * n, m);
    }
    const std::size_t k_lo = r_min + 1;
    const std::size_t k_hi = std::min(m, r_max + f_max);
    const bool last_round = i + 1 == inst.agents();
    for (std::size_t k = (inst.complete() && last_round) ? m : k_lo; k <= k_hi; ++k) {
      std::fill(conv.begin(), conv.end(), 0);
      for (std::size_t j = r_min; j <= std::min(r_max, k - 1); ++j) {
        const std::size_t fh = k - j;
        if (fh > f_max) continue;
        const std::uint32_t* r = rhat.data() + j * n;
        const std::uint32_t* f = fhat.data() + fh * n;
        for (std::size_t x = 0; x < n; ++x) conv[x] += r[x] * f[x];
      }
      mobius(conv.data(), m);
      for (std::size_t x = 0; x < n; ++x) {
        if (conv[x] != 0 && static_cast<std::size_t>(std::popcount(x)) == k) next.layers[k].push_back(x);
      }
    }
    rounds.push_back(std::move(next));
  }
  return rounds;
}

}  // namespace

std::vector<MaskPolynomial> hwpoly_rounds(const Instance& inst, const FeasibleBundleFamily& families,
                                          const HwpolyOptions& options) {
  require_mask_width(inst);
  HwpolyEngine engine = options.engine;
  if (engine == HwpolyEngine::Auto) engine = inst.jobs() <= kDenseMaxJobs ? HwpolyEngine::Dense : HwpolyEngine::Sparse;
  if (engine == HwpolyEngine::Dense) {
    if (inst.jobs() > kDenseMaxJobs) throw PreconditionError("hwpoly: dense engine limited to 20 jobs");
    return dense_rounds(inst, families, options.budget);
  }
  return sparse_rounds(inst, families, options.budget);
}

SolveResult solve_hwpoly(const Instance& inst, const HwpolyOptions& options) {
  require_mask_width(inst);
  if (inst.agents() > inst.jobs()) return SolveResult::no();
  const auto families = build_families(inst, options.budget);
  for (const auto& f : families.per_agent) {
    if (f.empty()) return SolveResult::no();
  }
  const auto rounds = hwpoly_rounds(inst, families, options);
  const MaskPolynomial& last = rounds.back();

  Mask target = 0;
  bool found = false;
  if (inst.complete()) {
    target = low_bits(inst.jobs());
    found = last.contains(target);
  } else {
    for (const auto& layer : last.layers) {
      if (!layer.empty()) {
        target = layer.front();
        found = true;
        break;
      }
    }
  }
  if (!found) return SolveResult::no();

  std::vector<Mask> bundles(inst.agents(), 0);
  for (std::size_t i = inst.agents(); i-- > 0;) {
    bool step = false;
    for (Mask s : families.per_agent[i]) {
      if ((s & ~target) == 0 && rounds[i].contains(target ^ s)) {
        bundles[i] = s;
        target ^= s;
        step = true;
        break;
      }
    }
    if (!step) throw Error("hwpoly: backtracking failed (inconsistent rounds)");
  }
  return SolveResult::yes(assignment_from_masks(bundles));
}

}  // namespace cffa
