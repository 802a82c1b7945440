#pragma once

#include <cstddef>
#include <vector>

#include "cffa/instance.hpp"

namespace cffa {

/// Presence-only polynomial over monomials y^mask, stratified by Hamming
/// weight: layers[h] holds the sorted exponents of popcount h.
struct MaskPolynomial {
  std::vector<std::vector<Mask>> layers;

  explicit MaskPolynomial(std::size_t width = 0) : layers(width + 1) {}

  std::size_t width() const { return layers.empty() ? 0 : layers.size() - 1; }
  bool empty() const;
  std::size_t term_count() const;
  bool contains(Mask m) const;
  /// Inserts y^m into layer popcount(m). Call normalize() afterwards.
  void add(Mask m) { layers[static_cast<std::size_t>(popcount(m))].push_back(m); }
  void normalize();
  /// Every term in layers[h] has popcount h.
  bool layers_sound() const;
};

/// Bundle masks feasible for each agent: independent in the conflict graph,
/// utility >= eta, and size <= s when size-bounded. Sorted ascending.
struct FeasibleBundleFamily {
  std::vector<std::vector<Mask>> per_agent;
};

FeasibleBundleFamily build_families(const Instance& inst, const Budget& budget = {});

/// Terms of H_target(layer * y^bundle): monomial exponents are added as
/// integers and kept only when the sum has Hamming weight `target_weight`,
/// which happens exactly when the term and the bundle are disjoint.
std::vector<Mask> hw_shift_product(const MaskPolynomial& poly, Mask bundle, std::size_t target_weight);

enum class HwpolyEngine {
  Auto,    // Dense up to kDenseMaxJobs jobs, Sparse above.
  Dense,   // ranked (Hamming-stratified) subset transforms over all 2^m masks
  Sparse,  // per-bundle shift products over the terms present
};

inline constexpr std::size_t kDenseMaxJobs = 20;

struct HwpolyOptions {
  HwpolyEngine engine = HwpolyEngine::Auto;
  Budget budget{};
};

/// rounds[i] is the representative polynomial after agents 0..i-1 have been
/// given disjoint feasible bundles (rounds[0] = {y^0}).
std::vector<MaskPolynomial> hwpoly_rounds(const Instance& inst, const FeasibleBundleFamily& families,
                                          const HwpolyOptions& options = {});

/// Decides any of the four variants in 2^m * poly(m) time. Complete variants
/// accept only the all-jobs mask; Partial takes the lightest non-empty layer.
SolveResult solve_hwpoly(const Instance& inst, const HwpolyOptions& options = {});

}  // namespace cffa
