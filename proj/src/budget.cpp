#include <cstdlib>
#include <string>

#include "cffa/types.hpp"

namespace cffa {

Budget Budget::from_env() {
  Budget b;
  if (const char* nodes = std::getenv("CFFA_BUDGET_NODES")) b.max_nodes = std::stoull(nodes);
  if (const char* secs = std::getenv("CFFA_BUDGET_SECONDS")) b.max_seconds = std::stod(secs);
  return b;
}

NodeMeter::NodeMeter(const Budget& budget, std::string what)
    : budget_(budget), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

bool NodeMeter::time_exceeded() const {
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
  return elapsed.count() > budget_.max_seconds;
}

void NodeMeter::fail(const char* kind) const {
  throw BudgetExceeded(what_ + ": " + kind + " budget exceeded after " + std::to_string(nodes_) + " nodes");
}

}  // namespace cffa
