// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "concepts/compare.hpp"
#include "concepts/engine.hpp"
#include "concepts/error.hpp"
#include "concepts/io.hpp"
#include "concepts/model.hpp"
#include "support/paths.hpp"
#include "support/random_network.hpp"

namespace {

using namespace concepts;
using Clock = std::chrono::steady_clock;

constexpr int kRandomNetworks = 50;

// Collects failure reasons for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string data(const char* name) { return read_text_file(concepts::testing::data_dir() / name); }

ValidatedNetwork canonical() { return validate_network(parse_network_file(data("salt.json"))); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<NetworkSpec> random_networks() {
  std::vector<NetworkSpec> out;
  for (int seed = 0; seed < kRandomNetworks; ++seed) out.push_back(concepts::testing::random_network(1000 + seed));
  return out;
}

void salt_narrative(Check& c) {
  const auto start = Clock::now();
  const auto net = canonical();
  const auto scenario = parse_scenario_file(data("salt_rejection.scenario.json"), net);
  const Trace t = run_scenario(net, EngineParams{}, scenario);
  const ConceptId salt = net.id_of("salt");
  const ConceptId salty = net.id_of("salty");

  c.expect(t.phases.size() == 2, "expected two phases");
  if (t.phases.size() != 2) return;
  c.expect(phase_verdicts(net, t.phases[0]).at(salt) == Verdict::Inferred, "phase 1 salt not Inferred");
  c.expect(phase_verdicts(net, t.phases[1]).at(salt) == Verdict::Rejected, "phase 2 salt not Rejected");
  bool omission = false;
  for (const auto& s : t.phases[1].snapshots) omission = omission || s.omission[salty.index()] != 0;
  c.expect(omission, "no omission error on salty in phase 2");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
}

// With the concept active and one of its patterns all-present or all-absent, the
// error pass raises nothing on that pattern's elements.
void bistability(Check& c) {
  std::vector<NetworkSpec> specs{canonical_network_spec()};
  for (auto& s : random_networks()) specs.push_back(std::move(s));
  const EngineParams params;
  std::size_t checked = 0;
  for (std::size_t n = 0; n < specs.size(); ++n) {
    const auto net = validate_network(specs[n]);
    for (ConceptId owner : net.non_bottom()) {
      const auto& patterns = net.at(owner).patterns;
      for (std::size_t p = 0; p < patterns.size(); ++p) {
        for (bool present : {true, false}) {
          ActiveSet active = net.empty_set();
          active.insert(owner);
          if (present) {
            for (ConceptId e : patterns[p].elements) active.insert(e);
          }
          const ErrorPass errors = error_pass(net, active, params.tau);
          for (ConceptId e : patterns[p].elements) {
            ++checked;
            if (errors.omission[e.index()] || errors.commission[e.index()]) {
              c.expect(false, "network " + std::to_string(n) + " " + net.name(owner) + "/" + std::to_string(p) +
                                  (present ? " all-present" : " all-absent") + ": error on " + net.name(e));
            }
          }
        }
      }
    }
  }
  c.expect(checked > 0, "nothing checked");
}

void decoupling(Check& c) {
  const auto net = canonical();
  const auto scenario = parse_scenario_file(data("decoupling.scenario.json"), net);
  const Trace t = run_scenario(net, EngineParams{}, scenario);
  const ConceptId salt = net.id_of("salt");
  c.expect(phase_verdicts(net, t.phases[0]).at(salt) == Verdict::Inferred, "phase 1 salt not Inferred");
  c.expect(t.phases[1].termination == Termination::FixedPoint, "phase 2 did not reach a fixed point");
  c.expect(phase_verdicts(net, t.phases[1]).at(salt) == Verdict::Inferred, "phase 2 salt not Inferred");
  const std::string csv = write_trace_csv(trace_rows(net, t));
  c.expect(csv == read_text_file(concepts::testing::golden_dir() / "decoupling.csv"), "trace differs from golden");
}

void oracle_agreement(Check& c) {
  const auto start = Clock::now();
  const auto net = canonical();
  const auto report = compare_with_oracle(net, EngineParams{});
  c.expect(report.cases == 32, std::to_string(report.cases) + " cases");
  c.expect(report.disagree == 0, std::to_string(report.disagree) + " DISAGREE");
  for (const auto& k : report.all) {
    c.expect(k.agreement != Agreement::Disagree, "subset " + std::to_string(k.subset) + " DISAGREE");
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
}

void unexpected_element(Check& c) {
  const auto net = canonical();
  const auto scenario = parse_scenario_file(data("unexpected_sweet.scenario.json"), net);
  const Trace t = run_scenario(net, EngineParams{}, scenario);
  const ConceptId salt = net.id_of("salt");
  const ConceptId sweet = net.id_of("sweet");
  c.expect(phase_verdicts(net, t.phases[0]).at(salt) == Verdict::Inferred, "phase 1 salt not Inferred");
  bool commission = false;
  for (const auto& s : t.phases[1].snapshots) commission = commission || s.commission[sweet.index()] != 0;
  c.expect(commission, "no commission error on sweet");
  // Realized outcome: salt is rejected, not displaced.
  c.expect(read_verdicts(net, t).at(salt) == Verdict::Rejected, "salt not Rejected");
}

void determinism(Check& c) {
  const std::string network = (concepts::testing::data_dir() / "salt.json").string();
  const std::string scenario = (concepts::testing::data_dir() / "salt_rejection.scenario.json").string();
  std::string first;
  for (int i = 0; i < 100; ++i) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"run", network, scenario, "--render", "--format", "json"}, out, err);
    c.expect(code == 0, "run exited " + std::to_string(code));
    const auto net = canonical();
    const std::string csv =
        write_trace_csv(trace_rows(net, run_scenario(net, EngineParams{}, parse_scenario_file(data("salt_rejection.scenario.json"), net))));
    const std::string all = out.str() + csv;
    if (i == 0) first = all;
    if (all != first) {
      c.expect(false, "run " + std::to_string(i) + " differs");
      break;
    }
  }

  for (const char* name : {"salt.json", "food.json"}) {
    const std::string text = serialize_network(parse_network_file(data(name)));
    c.expect(serialize_network(parse_network_file(text)) == text, std::string(name) + " does not round-trip");
    c.expect(parse_network_file(text) == parse_network_file(data(name)), std::string(name) + " changed on round-trip");
  }
  const auto salt = canonical();
  const auto food = validate_network(parse_network_file(data("food.json")));
  const std::vector<std::pair<const char*, const ValidatedNetwork*>> scenarios{
      {"salt_rejection.scenario.json", &salt},
      {"decoupling.scenario.json", &salt},
      {"unexpected_sweet.scenario.json", &salt},
      {"anchovies.scenario.json", &food}};
  for (const auto& [name, net] : scenarios) {
    const auto spec = parse_scenario_file(data(name), *net);
    const std::string text = serialize_scenario(spec, *net);
    c.expect(parse_scenario_file(text, *net) == spec, std::string(name) + " does not round-trip");
    c.expect(serialize_scenario(parse_scenario_file(text, *net), *net) == text, std::string(name) + " not stable");

    const auto rows = trace_rows(*net, run_scenario(*net, EngineParams{}, spec));
    const std::string csv = write_trace_csv(rows);
    c.expect(read_trace_csv(csv) == rows, std::string(name) + " trace rows change on re-read");
    c.expect(write_trace_csv(read_trace_csv(csv)) == csv, std::string(name) + " trace CSV not bit-exact");
  }
  for (const char* name : {"default_params.json", "wta_params.json"}) {
    const auto p = parse_params(data(name));
    c.expect(parse_params(serialize_params(p)) == p, std::string(name) + " does not round-trip");
  }
  for (const char* name : {"salt_rejection.csv", "decoupling.csv"}) {
    const std::string golden = read_text_file(concepts::testing::golden_dir() / name);
    c.expect(write_trace_csv(read_trace_csv(golden)) == golden, std::string(name) + " not bit-exact");
  }
}

// Every seeded scenario over the random networks settles within max_sweeps.
void termination(Check& c) {
  const EngineParams params;
  const auto specs = random_networks();
  for (std::size_t n = 0; n < specs.size(); ++n) {
    const auto net = validate_network(specs[n]);
    const auto bottom = net.bottom();
    // Every clamp subset as a phase of its own, then each subset after the full clamp.
    const std::uint64_t subsets = std::uint64_t{1} << bottom.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      ClampMap clamp;
      ClampMap full;
      for (std::size_t j = 0; j < bottom.size(); ++j) {
        full[bottom[j]] = true;
        if (mask >> j & 1u) clamp[bottom[j]] = true;
      }
      ScenarioSpec scenario;
      scenario.phases = {{full, std::nullopt}, {clamp, std::nullopt}, {{}, std::nullopt}};
      const Trace t = run_scenario(net, params, scenario);
      for (std::size_t p = 0; p < t.phases.size(); ++p) {
        const auto& phase = t.phases[p];
        const bool ok = phase.termination != Termination::SweepLimit &&
                        phase.snapshots.size() <= static_cast<std::size_t>(params.max_sweeps);
        c.expect(ok, "network " + std::to_string(n) + " subset " + std::to_string(mask) + " phase " +
                         std::to_string(p + 1) + ": " + std::string(to_string(phase.termination)));
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 salt narrative", salt_narrative},
      {"2 bistable cancellation", bistability},
      {"3 decoupling", decoupling},
      {"4 oracle agreement", oracle_agreement},
      {"5 unexpected element", unexpected_element},
      {"6 determinism and round-trips", determinism},
      {"7 termination", termination},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (c.failures.empty()) {
      std::cout << "PASS " << name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << name << ": " << c.failures.front();
      if (c.failures.size() > 1) std::cout << " (+" << c.failures.size() - 1 << " more)";
      std::cout << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
