#pragma once

// File formats. Network, scenario and parameter files are strict JSON: unknown
// fields, wrong types and unresolved names are errors. Traces are CSV with the
// fixed header `phase,sweep,kind,name,value`.

#include <compare>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "concepts/engine.hpp"
#include "concepts/model.hpp"
#include "concepts/scenario.hpp"

namespace concepts {

/// Whole file as text; throws Error(IoError) if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

// {"concepts":[{"name":"salt","layer":1,"patterns":[["tasting","salty"],["looking","white"]]}, ...]}
NetworkSpec parse_network_file(std::string_view text);
std::string serialize_network(const NetworkSpec& spec);

// {"phases":[{"clamp":{"looking":1,"white":1},"hold":"converge"}, {"clamp":{...},"hold":3}]}
ScenarioSpec parse_scenario_file(std::string_view text, const ValidatedNetwork& net);
std::string serialize_scenario(const ScenarioSpec& scenario, const ValidatedNetwork& net);

/// Defaults for absent fields (or an absent file). Range checks happen in check_params.
EngineParams parse_params(std::optional<std::string_view> text);
std::string serialize_params(const EngineParams& params);

enum class UnitKind { Concept, Omission, Commission };

std::string_view to_string(UnitKind kind);

struct TraceRow {
  int phase = 1;  // 1-based
  int sweep = 1;  // 1-based within the phase
  UnitKind kind = UnitKind::Concept;
  std::string name;
  int value = 0;

  friend auto operator<=>(const TraceRow&, const TraceRow&) = default;
  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

inline constexpr std::string_view kTraceHeader = "phase,sweep,kind,name,value";

/// One row per (phase, sweep, kind, concept), canonically sorted.
std::vector<TraceRow> trace_rows(const ValidatedNetwork& net, const Trace& trace);

std::string write_trace_csv(std::span<const TraceRow> rows);

/// Accepts rows in any order and returns them canonically sorted.
std::vector<TraceRow> read_trace_csv(std::string_view text);

/// One line per unit, one column per sweep, `|` between phases.
/// `#` active, `o` commission error, `g` omission error, `.` inactive.
/// Units follow `unit_order`; units not listed there come after it, sorted by name.
std::string render_ascii_timeline(std::span<const TraceRow> rows, std::span<const std::string> unit_order = {});

}  // namespace concepts
