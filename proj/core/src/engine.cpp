#include "concepts/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "concepts/error.hpp"

namespace concepts {

std::string_view to_string(ErrorRouting routing) {
  return routing == ErrorRouting::Split ? "split" : "all_global";
}

std::string_view to_string(Termination termination) {
  switch (termination) {
    case Termination::FixedPoint: return "FixedPoint";
    case Termination::Cycle: return "Cycle";
    case Termination::SweepLimit: return "SweepLimit";
  }
  return "FixedPoint";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Inferred: return "Inferred";
    case Verdict::Rejected: return "Rejected";
    case Verdict::Inactive: return "Inactive";
    case Verdict::Unstable: return "Unstable";
  }
  return "Inactive";
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void bad(const std::string& what) { throw Error(ErrorKind::BadParams, what); }

}  // namespace

void check_params(const EngineParams& p) {
  for (auto [name, value] : {std::pair{"w_ff", p.w_ff}, std::pair{"w_self", p.w_self}, std::pair{"w_lat", p.w_lat},
                             std::pair{"w_err", p.w_err}, std::pair{"theta", p.theta}, std::pair{"tau", p.tau}}) {
    if (!std::isfinite(value)) bad(std::string(name) + " is not finite");
    if (value < 0.0) bad(std::string(name) + " < 0 (" + fmt(value) + ")");
  }
  if (p.theta <= 0.0) bad("theta <= 0 (" + fmt(p.theta) + ")");
  if (p.w_ff <= p.theta) bad("w_ff <= theta (" + fmt(p.w_ff) + " <= " + fmt(p.theta) + ")");
  if (p.w_err <= p.w_self) bad("w_err <= w_self (" + fmt(p.w_err) + " <= " + fmt(p.w_self) + ")");
  if (p.tau <= 0.0 || p.tau > 1.0) bad("tau outside (0, 1] (" + fmt(p.tau) + ")");
  if (p.max_sweeps < 1) bad("max_sweeps < 1 (" + std::to_string(p.max_sweeps) + ")");
}

ActiveSet EngineState::active_set() const {
  ActiveSet out(activation.size());
  for (std::size_t i = 0; i < activation.size(); ++i) {
    if (activation[i] != 0) out.insert(ConceptId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

bool EngineState::same_dynamics(const EngineState& o) const {
  return activation == o.activation && clamp == o.clamp && omission == o.omission && commission == o.commission &&
         latched == o.latched && routed == o.routed;
}

EngineState init_engine(const ValidatedNetwork& net, const EngineParams& params) {
  check_params(params);
  const std::size_t n = net.size();
  EngineState s;
  s.activation.assign(n, 0);
  s.clamp.assign(n, 0);
  s.omission.assign(n, 0);
  s.commission.assign(n, 0);
  s.latched.assign(n, 0);
  s.routed.assign(n, 0);
  return s;
}

void apply_clamp(const ValidatedNetwork& net, EngineState& state, const ClampMap& clamp) {
  for (const auto& [id, value] : clamp) {
    if (net.layer_of(id) != 0) throw Error(ErrorKind::NonBottomClamp, "'" + net.name(id) + "' is not a layer-0 concept");
  }
  std::fill(state.clamp.begin(), state.clamp.end(), std::uint8_t{0});
  for (const auto& [id, value] : clamp) state.clamp[id.index()] = value ? 1 : 0;
  std::fill(state.latched.begin(), state.latched.end(), std::uint8_t{0});
  state.sweep_count = 0;
}

namespace {

bool conjunction(const Pattern& pattern, const std::vector<std::uint8_t>& activation) {
  return std::all_of(pattern.elements.begin(), pattern.elements.end(),
                     [&](ConceptId e) { return activation[e.index()] != 0; });
}

}  // namespace

std::map<std::pair<ConceptId, std::size_t>, std::uint8_t> dendrite_values(const ValidatedNetwork& net,
                                                                          const EngineState& state) {
  std::map<std::pair<ConceptId, std::size_t>, std::uint8_t> out;
  for (ConceptId c : net.non_bottom()) {
    const auto& patterns = net.at(c).patterns;
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      out[{c, p}] = conjunction(patterns[p], state.activation) ? 1 : 0;
    }
  }
  return out;
}

ErrorPass error_pass(const ValidatedNetwork& net, const ActiveSet& active, double tau) {
  const std::size_t n = net.size();
  ErrorPass out{std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0)};
  const int top = net.top_layer();

  for (std::size_t i = 0; i < n; ++i) {
    const ConceptId e{static_cast<std::uint32_t>(i)};
    for (const PatternRef& ref : net.element_parents(e)) {
      if (!active.contains(ref.owner)) continue;
      if (pattern_state(net.at(ref.owner).patterns[ref.ordinal], active, tau).applicable()) {
        out.predicted[i] = 1;
        break;
      }
    }
    const bool on = active.contains(e);
    out.omission[i] = (out.predicted[i] && !on) ? 1 : 0;
    // The top layer has nothing above it that could explain it.
    out.commission[i] = (on && !out.predicted[i] && net.layer_of(e) < top) ? 1 : 0;
  }
  return out;
}

bool sweep(const ValidatedNetwork& net, const EngineParams& params, EngineState& state) {
  const EngineState before = state;
  auto& act = state.activation;

  for (ConceptId b : net.bottom()) act[b.index()] = state.clamp[b.index()];

  for (int l = 1; l <= net.top_layer(); ++l) {
    const auto members = net.layer(l);
    for (ConceptId c : members) {
      const std::size_t i = c.index();
      double drive = 0.0;
      for (const Pattern& pattern : net.at(c).patterns) {
        if (conjunction(pattern, act)) {
          drive = 1.0;
          break;
        }
      }
      // Peers earlier in file order have already been updated this sweep.
      double peers = 0.0;
      for (ConceptId other : members) {
        if (other != c && act[other.index()] != 0) peers += 1.0;
      }
      const double input = params.w_ff * drive + params.w_self * static_cast<double>(act[i]) - params.w_lat * peers -
                           params.w_err * static_cast<double>(state.routed[i]) - params.theta;
      const bool was_on = act[i] != 0;
      const bool now_on = input > 0.0 && state.latched[i] == 0;
      if (was_on && !now_on && state.routed[i] > 0) state.latched[i] = 1;
      act[i] = now_on ? 1 : 0;
    }
  }

  const ActiveSet active = state.active_set();
  ErrorPass errors = error_pass(net, active, params.tau);
  state.omission = std::move(errors.omission);
  state.commission = std::move(errors.commission);

  std::fill(state.routed.begin(), state.routed.end(), 0u);
  if (params.error_routing == ErrorRouting::AllGlobal) {
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < act.size(); ++i) total += state.omission[i] + state.commission[i];
    for (ConceptId c : net.non_bottom()) {
      if (act[c.index()] != 0) state.routed[c.index()] = total;
    }
  } else {
    std::vector<ConceptId> targets;
    for (std::size_t i = 0; i < act.size(); ++i) {
      const ConceptId e{static_cast<std::uint32_t>(i)};
      if (state.omission[i] != 0) {
        targets.clear();
        for (const PatternRef& ref : net.element_parents(e)) {
          if (!active.contains(ref.owner)) continue;
          if (!pattern_state(net.at(ref.owner).patterns[ref.ordinal], active, params.tau).applicable()) continue;
          if (std::find(targets.begin(), targets.end(), ref.owner) == targets.end()) targets.push_back(ref.owner);
        }
        for (ConceptId t : targets) ++state.routed[t.index()];
      }
      if (state.commission[i] != 0) {
        for (ConceptId above : net.layer(net.layer_of(e) + 1)) {
          if (act[above.index()] != 0) ++state.routed[above.index()];
        }
      }
    }
  }

  ++state.sweep_count;
  return !state.same_dynamics(before);
}

namespace {

// Termination of a finished phase, judged from its snapshots alone.
void classify(PhaseTrace& phase) {
  const auto& snaps = phase.snapshots;
  const std::size_t last = snaps.size() - 1;
  if (snaps.size() >= 2 && snaps[last].same_dynamics(snaps[last - 1])) {
    phase.termination = Termination::FixedPoint;
    return;
  }
  for (std::size_t j = 0; j + 1 < last; ++j) {
    if (snaps[j].same_dynamics(snaps[last])) {
      phase.termination = Termination::Cycle;
      phase.cycle_start = j;
      return;
    }
  }
  phase.termination = Termination::SweepLimit;
}

}  // namespace

PhaseTrace run_to_fixed_point(const ValidatedNetwork& net, const EngineParams& params, EngineState& state) {
  PhaseTrace phase;
  const auto limit = static_cast<std::size_t>(params.max_sweeps);
  while (phase.snapshots.size() < limit) {
    sweep(net, params, state);
    phase.snapshots.push_back(state);
    const auto& snaps = phase.snapshots;
    const std::size_t last = snaps.size() - 1;
    if (last == 0) continue;
    if (snaps[last].same_dynamics(snaps[last - 1])) {
      phase.termination = Termination::FixedPoint;
      return phase;
    }
    for (std::size_t j = 0; j + 1 < last; ++j) {
      if (snaps[j].same_dynamics(snaps[last])) {
        phase.termination = Termination::Cycle;
        phase.cycle_start = j;
        return phase;
      }
    }
  }
  classify(phase);
  return phase;
}

PhaseTrace run_phase(const ValidatedNetwork& net, const EngineParams& params, EngineState& state,
                     const ScenarioPhase& spec) {
  apply_clamp(net, state, spec.clamp);
  PhaseTrace phase;
  if (spec.converges()) {
    phase = run_to_fixed_point(net, params, state);
  } else {
    const int count = *spec.sweeps;
    if (count < 1) throw Error(ErrorKind::BadParams, "phase sweep count < 1");
    if (count > params.max_sweeps) {
      throw Error(ErrorKind::BadParams, "phase sweep count " + std::to_string(count) + " exceeds max_sweeps " +
                                            std::to_string(params.max_sweeps));
    }
    for (int i = 0; i < count; ++i) {
      sweep(net, params, state);
      phase.snapshots.push_back(state);
    }
    classify(phase);
  }
  phase.clamp = spec.clamp;
  phase.sweeps = spec.sweeps;
  return phase;
}

Trace run_scenario(const ValidatedNetwork& net, const EngineParams& params, const ScenarioSpec& scenario) {
  if (scenario.phases.empty()) throw Error(ErrorKind::EmptyScenario, "scenario has no phases");
  EngineState state = init_engine(net, params);
  Trace trace;
  for (const auto& phase : scenario.phases) trace.phases.push_back(run_phase(net, params, state, phase));
  return trace;
}

VerdictMap phase_verdicts(const ValidatedNetwork& net, const PhaseTrace& phase) {
  VerdictMap out;
  if (phase.snapshots.empty()) return out;
  const EngineState& last = phase.snapshots.back();
  const std::size_t window_begin = phase.termination == Termination::Cycle ? phase.cycle_start : 0;

  for (ConceptId c : net.non_bottom()) {
    const std::size_t i = c.index();
    if (last.latched[i] != 0) {
      out[c] = Verdict::Rejected;
    } else if (phase.termination == Termination::FixedPoint) {
      out[c] = last.activation[i] != 0 ? Verdict::Inferred : Verdict::Inactive;
    } else {
      bool ever_on = false;
      for (std::size_t s = window_begin; s < phase.snapshots.size(); ++s) {
        ever_on = ever_on || phase.snapshots[s].activation[i] != 0;
      }
      out[c] = ever_on ? Verdict::Unstable : Verdict::Inactive;
    }
  }
  return out;
}

VerdictMap read_verdicts(const ValidatedNetwork& net, const Trace& trace) {
  if (trace.phases.empty()) return {};
  return phase_verdicts(net, trace.phases.back());
}

std::vector<ConceptId> inferred_concepts(const VerdictMap& verdicts) {
  std::vector<ConceptId> out;
  for (const auto& [id, verdict] : verdicts) {
    if (verdict == Verdict::Inferred) out.push_back(id);
  }
  return out;
}

}  // namespace concepts
