#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "concepts/error.hpp"
#include "concepts/io.hpp"

namespace concepts {

std::string_view to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::Concept: return "concept";
    case UnitKind::Omission: return "omission";
    case UnitKind::Commission: return "commission";
  }
  return "concept";
}

std::vector<TraceRow> trace_rows(const ValidatedNetwork& net, const Trace& trace) {
  std::vector<TraceRow> rows;
  for (std::size_t p = 0; p < trace.phases.size(); ++p) {
    const auto& snapshots = trace.phases[p].snapshots;
    for (std::size_t s = 0; s < snapshots.size(); ++s) {
      const EngineState& state = snapshots[s];
      for (std::size_t i = 0; i < net.size(); ++i) {
        const std::string& name = net.concepts()[i].name;
        const int phase = static_cast<int>(p) + 1;
        const int sweep = static_cast<int>(s) + 1;
        rows.push_back({phase, sweep, UnitKind::Concept, name, state.activation[i]});
        rows.push_back({phase, sweep, UnitKind::Omission, name, state.omission[i]});
        rows.push_back({phase, sweep, UnitKind::Commission, name, state.commission[i]});
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::string write_trace_csv(std::span<const TraceRow> rows) {
  std::vector<TraceRow> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  out << kTraceHeader << '\n';
  for (const auto& r : sorted) {
    out << r.phase << ',' << r.sweep << ',' << to_string(r.kind) << ',' << r.name << ',' << r.value << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

int positive_int(std::string_view field, const std::string& at) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 1) {
    throw Error(ErrorKind::SyntaxError, at + ": expected positive integer, found '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<TraceRow> read_trace_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorKind::SyntaxError, "line 1: empty trace file");
  if (lines[0] != kTraceHeader) {
    throw Error(ErrorKind::SchemaMismatch,
                "line 1: expected header '" + std::string(kTraceHeader) + "', found '" + std::string(lines[0]) + "'");
  }

  std::vector<TraceRow> rows;
  std::set<std::tuple<int, int, UnitKind, std::string>> seen;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::string_view line = lines[n];
    const std::string at = "line " + std::to_string(n + 1);
    if (line.empty()) {
      if (n + 1 == lines.size()) break;
      throw Error(ErrorKind::SyntaxError, at + ": empty line");
    }

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 5) {
      throw Error(ErrorKind::SyntaxError, at + ": expected 5 fields, found " + std::to_string(fields.size()));
    }

    TraceRow row;
    row.phase = positive_int(fields[0], at + " phase");
    row.sweep = positive_int(fields[1], at + " sweep");
    if (fields[2] == "concept") {
      row.kind = UnitKind::Concept;
    } else if (fields[2] == "omission") {
      row.kind = UnitKind::Omission;
    } else if (fields[2] == "commission") {
      row.kind = UnitKind::Commission;
    } else {
      throw Error(ErrorKind::SchemaMismatch, at + ": unknown kind '" + std::string(fields[2]) + "'");
    }
    if (fields[3].empty()) throw Error(ErrorKind::SchemaMismatch, at + ": empty unit name");
    row.name = std::string(fields[3]);
    if (fields[4] == "0") {
      row.value = 0;
    } else if (fields[4] == "1") {
      row.value = 1;
    } else {
      throw Error(ErrorKind::SchemaMismatch, at + ": value must be 0 or 1, found '" + std::string(fields[4]) + "'");
    }
    if (!seen.emplace(row.phase, row.sweep, row.kind, row.name).second) {
      throw Error(ErrorKind::SchemaMismatch, at + ": duplicate row for " + std::string(to_string(row.kind)) + " '" +
                                                 row.name + "'");
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::string render_ascii_timeline(std::span<const TraceRow> rows, std::span<const std::string> unit_order) {
  // Columns are (phase, sweep) pairs; cells hold the three unit flags.
  struct Cell {
    bool active = false;
    bool omission = false;
    bool commission = false;
  };
  std::set<std::pair<int, int>> column_keys;
  std::set<std::string> names;
  std::map<std::pair<std::string, std::pair<int, int>>, Cell> cells;
  for (const auto& r : rows) {
    column_keys.emplace(r.phase, r.sweep);
    names.insert(r.name);
    Cell& cell = cells[{r.name, {r.phase, r.sweep}}];
    switch (r.kind) {
      case UnitKind::Concept: cell.active = r.value != 0; break;
      case UnitKind::Omission: cell.omission = r.value != 0; break;
      case UnitKind::Commission: cell.commission = r.value != 0; break;
    }
  }

  std::vector<std::string> order;
  for (const auto& name : unit_order) {
    if (names.count(name) && std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
  }
  for (const auto& name : names) {
    if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
  }

  std::size_t width = 0;
  for (const auto& name : order) width = std::max(width, name.size());

  std::ostringstream out;
  for (const auto& name : order) {
    out << name << std::string(width - name.size() + 1, ' ');
    int previous_phase = -1;
    for (const auto& key : column_keys) {
      if (previous_phase != -1 && key.first != previous_phase) out << '|';
      previous_phase = key.first;
      const auto it = cells.find({name, key});
      char c = '.';
      if (it != cells.end()) {
        if (it->second.commission) {
          c = 'o';
        } else if (it->second.omission) {
          c = 'g';
        } else if (it->second.active) {
          c = '#';
        }
      }
      out << c;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace concepts
