#pragma once

#include <map>
#include <optional>
#include <vector>

#include "concepts/model.hpp"

namespace concepts {

/// Observation values for layer-0 concepts. Layer-0 units missing from the map are 0.
using ClampMap = std::map<ConceptId, bool>;

struct ScenarioPhase {
  ClampMap clamp;
  std::optional<int> sweeps;  // nullopt: run to convergence

  bool converges() const noexcept { return !sweeps.has_value(); }
  friend bool operator==(const ScenarioPhase&, const ScenarioPhase&) = default;
};

struct ScenarioSpec {
  std::vector<ScenarioPhase> phases;

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

}  // namespace concepts
