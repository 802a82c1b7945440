#pragma once

#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cffa {

/// One bit per job; mask-based solvers are limited to 64 jobs.
using Mask = std::uint64_t;
inline constexpr std::size_t kMaskWidth = 64;

/// Utilities, thresholds and weights.
using Value = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input document. The message starts with the field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A solver was asked to exceed its enumeration budget. Never means "no".
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A solver or kernel was invoked outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

inline Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("utility sum overflows 64 bits");
  return out;
}

inline Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("product overflows 64 bits");
  return out;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask low_bits(std::size_t count) {
  return count >= kMaskWidth ? ~Mask{0} : ((Mask{1} << count) - 1);
}

/// Enumeration limits shared by the exponential solvers.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = std::numeric_limits<double>::infinity();
  std::size_t max_jobs = 16;  // oracle only

  /// Defaults overridden by CFFA_BUDGET_NODES / CFFA_BUDGET_SECONDS.
  static Budget from_env();
};

/// Counts search nodes against a Budget and throws BudgetExceeded when spent.
class NodeMeter {
 public:
  NodeMeter(const Budget& budget, std::string what);

  void tick(std::uint64_t count = 1) {
    nodes_ += count;
    if (nodes_ > budget_.max_nodes) fail("node");
    if ((nodes_ & 0xFFFF) < count && time_exceeded()) fail("time");
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool time_exceeded() const;
  [[noreturn]] void fail(const char* kind) const;

  Budget budget_;
  std::string what_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cffa
