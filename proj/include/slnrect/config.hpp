#pragma once

#include <cstdint>

#include "slnrect/groebner.hpp"

namespace slnrect {

/// Search and resource limits shared by every randomized stage.
struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t max_trials = 64;
  unsigned max_payload_degree = 24;
  std::size_t groebner_budget = 1'000'000;

  GroebnerBudget groebner() const {
    GroebnerBudget b;
    b.max_steps = groebner_budget;
    return b;
  }
};

}  // namespace slnrect
