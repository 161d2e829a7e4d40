#pragma once

// Discrete-time simulation of the concept circuit. Units are binary. Each concept
// is driven by dendritic conjunctions over its patterns, sustains itself through a
// recurrent weight, inhibits its same-layer peers, and is inhibited by routed error
// units. Two kinds of error unit sit on every element:
//   omission   - predicted by an applicable pattern of an active concept, but off
//   commission - on, but not explained by any applicable pattern of an active concept
// A concept switched off while receiving error inhibition is latched off until the
// next clamp change.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "concepts/model.hpp"
#include "concepts/scenario.hpp"

namespace concepts {

enum class ErrorRouting {
  Split,      // omission -> predicting concepts; commission -> active concepts one layer up
  AllGlobal,  // every error inhibits every active non-bottom concept
};

std::string_view to_string(ErrorRouting routing);

struct EngineParams {
  double w_ff = 1.0;
  double w_self = 0.8;
  double w_lat = 0.2;
  double w_err = 1.5;
  double theta = 0.5;
  double tau = 0.5;
  int max_sweeps = 64;
  ErrorRouting error_routing = ErrorRouting::Split;

  friend bool operator==(const EngineParams&, const EngineParams&) = default;
};

/// Throws Error(BadParams) naming the violated inequality.
void check_params(const EngineParams& params);

struct EngineState {
  std::vector<std::uint8_t> activation;
  std::vector<std::uint8_t> clamp;  // meaningful for layer-0 concepts only
  std::vector<std::uint8_t> omission;
  std::vector<std::uint8_t> commission;
  std::vector<std::uint8_t> latched;
  std::vector<std::uint32_t> routed;  // error count inhibiting each concept on the next sweep
  int sweep_count = 0;

  bool active(ConceptId id) const { return activation.at(id.index()) != 0; }
  ActiveSet active_set() const;

  /// Equality of everything that determines future sweeps (ignores sweep_count).
  bool same_dynamics(const EngineState& other) const;
};

/// Validates params and returns the all-zero state.
EngineState init_engine(const ValidatedNetwork& net, const EngineParams& params);

/// Replaces the clamp, clears every rejection latch and resets sweep_count.
/// Throws NonBottomClamp for non-bottom keys.
void apply_clamp(const ValidatedNetwork& net, EngineState& state, const ClampMap& clamp);

/// (concept, pattern ordinal) -> 1 iff every element of the pattern is active.
std::map<std::pair<ConceptId, std::size_t>, std::uint8_t> dendrite_values(const ValidatedNetwork& net,
                                                                          const EngineState& state);

struct ErrorPass {
  std::vector<std::uint8_t> predicted;
  std::vector<std::uint8_t> omission;
  std::vector<std::uint8_t> commission;
};

/// Prediction and error units for a given set of active concepts.
ErrorPass error_pass(const ValidatedNetwork& net, const ActiveSet& active, double tau);

/// One deterministic sweep; returns whether the state changed.
bool sweep(const ValidatedNetwork& net, const EngineParams& params, EngineState& state);

enum class Termination { FixedPoint, Cycle, SweepLimit };

std::string_view to_string(Termination termination);

struct PhaseTrace {
  ClampMap clamp;
  std::optional<int> sweeps;
  std::vector<EngineState> snapshots;  // one per sweep, after the sweep
  Termination termination = Termination::FixedPoint;
  std::size_t cycle_start = 0;  // first snapshot of the repeating window (Cycle only)
};

struct Trace {
  std::vector<PhaseTrace> phases;
};

/// Sweeps until two consecutive snapshots agree, a state recurs, or max_sweeps.
PhaseTrace run_to_fixed_point(const ValidatedNetwork& net, const EngineParams& params, EngineState& state);

/// Applies the phase clamp, then converges or runs exactly `sweeps` sweeps.
PhaseTrace run_phase(const ValidatedNetwork& net, const EngineParams& params, EngineState& state,
                     const ScenarioPhase& phase);

/// Runs every phase from the all-zero state.
Trace run_scenario(const ValidatedNetwork& net, const EngineParams& params, const ScenarioSpec& scenario);

enum class Verdict { Inferred, Rejected, Inactive, Unstable };

std::string_view to_string(Verdict verdict);

using VerdictMap = std::map<ConceptId, Verdict>;

VerdictMap phase_verdicts(const ValidatedNetwork& net, const PhaseTrace& phase);

/// Verdicts at the final snapshot of the final phase.
VerdictMap read_verdicts(const ValidatedNetwork& net, const Trace& trace);

/// Non-bottom concepts with verdict Inferred, sorted.
std::vector<ConceptId> inferred_concepts(const VerdictMap& verdicts);

}  // namespace concepts
