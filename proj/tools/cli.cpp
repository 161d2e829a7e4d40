#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "concepts/compare.hpp"
#include "concepts/engine.hpp"
#include "concepts/error.hpp"
#include "concepts/io.hpp"
#include "concepts/model.hpp"
#include "concepts/oracle.hpp"

namespace concepts::cli {
namespace {

using Json = nlohmann::json;

struct Options {
  std::string format = "text";
  std::string network;
  std::string scenario;
  std::string params;
  std::string trace_out;
  std::string trace_in;
  std::string active;
  bool render = false;
  bool strict = false;
  std::size_t limit = kDefaultEnumerationLimit;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string braces(const ValidatedNetwork& net, const std::vector<ConceptId>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += net.name(ids[i]);
  }
  return s + "}";
}

Json names(const ValidatedNetwork& net, const std::vector<ConceptId>& ids) {
  Json out = Json::array();
  for (ConceptId id : ids) out.push_back(net.name(id));
  return out;
}

ValidatedNetwork load_network(const std::string& path) {
  return validate_network(parse_network_file(read_text_file(path)));
}

EngineParams load_params(const std::string& path) {
  if (path.empty()) return parse_params(std::nullopt);
  const std::string text = read_text_file(path);
  return parse_params(text);
}

/// Comma-separated layer-0 names.
ActiveSet parse_active(const ValidatedNetwork& net, const std::string& list) {
  ActiveSet active = net.empty_set();
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    const auto id = net.find(name);
    if (!id) throw Error(ErrorKind::UnknownElement, "no concept named '" + name + "'");
    if (net.layer_of(*id) != 0) throw Error(ErrorKind::NonBottomClamp, "'" + name + "' is not a layer-0 concept");
    active.insert(*id);
  }
  return active;
}

/// Top layer first, file order within a layer.
std::vector<std::string> display_order(const ValidatedNetwork& net) {
  std::vector<std::string> order;
  for (int l = net.top_layer(); l >= 0; --l) {
    for (ConceptId id : net.layer(l)) order.push_back(net.name(id));
  }
  return order;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto net = load_network(o.network);
  if (json_output(o)) {
    Json warnings = Json::array();
    for (const auto& w : net.warnings()) warnings.push_back(w.message);
    out << Json{{"valid", true},
                {"concepts", net.size()},
                {"layers", net.layer_count()},
                {"patterns", net.pattern_count()},
                {"warnings", warnings}}
               .dump()
        << "\n";
    return kSuccess;
  }
  out << net.size() << " concepts, " << net.layer_count() << " layers, " << net.pattern_count() << " patterns, "
      << net.warnings().size() << " warnings\n";
  for (const auto& w : net.warnings()) out << "warning: " << w.message << "\n";
  return kSuccess;
}

int cmd_run(const Options& o, std::ostream& out) {
  const auto net = load_network(o.network);
  const auto params = load_params(o.params);
  check_params(params);
  const auto scenario = parse_scenario_file(read_text_file(o.scenario), net);
  const Trace trace = run_scenario(net, params, scenario);
  const auto rows = trace_rows(net, trace);

  if (!o.trace_out.empty()) {
    std::ofstream file(o.trace_out, std::ios::binary);
    if (!file) throw Error(ErrorKind::IoError, "cannot write '" + o.trace_out + "'");
    file << write_trace_csv(rows);
  }

  if (json_output(o)) {
    Json phases = Json::array();
    for (std::size_t p = 0; p < trace.phases.size(); ++p) {
      const auto& phase = trace.phases[p];
      Json verdicts = Json::object();
      for (const auto& [id, v] : phase_verdicts(net, phase)) verdicts[net.name(id)] = std::string(to_string(v));
      phases.push_back(Json{{"phase", p + 1},
                            {"termination", std::string(to_string(phase.termination))},
                            {"sweeps", phase.snapshots.size()},
                            {"verdicts", verdicts}});
    }
    Json doc{{"phases", phases}};
    if (o.render) doc["timeline"] = render_ascii_timeline(rows, display_order(net));
    out << doc.dump() << "\n";
    return kSuccess;
  }

  for (std::size_t p = 0; p < trace.phases.size(); ++p) {
    const auto& phase = trace.phases[p];
    out << "phase " << (p + 1) << ": " << to_string(phase.termination) << " after " << phase.snapshots.size()
        << " sweeps\n";
    for (const auto& [id, v] : phase_verdicts(net, phase)) out << "  " << net.name(id) << ": " << to_string(v) << "\n";
  }
  if (o.render) out << "\n" << render_ascii_timeline(rows, display_order(net));
  return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto net = load_network(o.network);
  const auto params = load_params(o.params);
  check_params(params);
  const ActiveSet active = parse_active(net, o.active);
  const auto verdicts = oracle_verdicts(net, active, params.tau, o.limit);

  Json doc = Json::object();
  std::ostringstream text;
  for (ConceptId c : net.non_bottom()) {
    const auto detail = concept_locally_consistent(net, c, active, params.tau);
    const auto& patterns = net.at(c).patterns;
    text << net.name(c) << ": " << to_string(verdicts.at(c)) << "\n";
    text << "  locally consistent: " << (detail.consistent ? "yes" : "no") << " (complete patterns: "
         << detail.complete_patterns << ")\n";
    Json jpatterns = Json::array();
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const auto state = pattern_state(patterns[p], active, params.tau);
      const auto missing = missing_elements(patterns[p], active);
      text << "  pattern " << p << " " << braces(net, patterns[p].elements) << ": " << to_string(state.status) << " ("
           << state.present << "/" << state.total << ")";
      if (state.status == PatternStatus::ApplicableIncomplete) {
        text << ", missing: ";
        for (std::size_t i = 0; i < missing.size(); ++i) text << (i ? "," : "") << net.name(missing[i]);
      }
      text << "\n";
      jpatterns.push_back(Json{{"ordinal", p},
                               {"elements", names(net, patterns[p].elements)},
                               {"state", std::string(to_string(state.status))},
                               {"present", state.present},
                               {"total", state.total},
                               {"missing", names(net, missing)}});
    }
    doc[net.name(c)] = Json{{"oracle", std::string(to_string(verdicts.at(c)))},
                            {"locally_consistent", detail.consistent},
                            {"complete_patterns", detail.complete_patterns},
                            {"patterns", jpatterns}};
  }
  if (json_output(o)) {
    out << doc.dump() << "\n";
  } else {
    out << text.str();
  }
  return kSuccess;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto net = load_network(o.network);
  const auto params = load_params(o.params);
  check_params(params);
  const ActiveSet active = parse_active(net, o.active);
  const auto reports = enumerate_interpretations(net, active, params.tau, o.limit);

  if (json_output(o)) {
    Json list = Json::array();
    for (const auto& r : reports) {
      list.push_back(Json{{"inferred", names(net, r.interpretation.inferred)}, {"maximal", r.maximal}});
    }
    out << Json{{"consistent", list}}.dump() << "\n";
    return kSuccess;
  }
  if (reports.empty()) out << "(no consistent interpretation)\n";
  for (const auto& r : reports) out << braces(net, r.interpretation.inferred) << (r.maximal ? "*" : "") << "\n";
  return kSuccess;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto net = load_network(o.network);
  const auto params = load_params(o.params);
  const AgreementReport report = compare_with_oracle(net, params);

  if (json_output(o)) {
    Json cases = Json::array();
    for (const auto& c : report.all) {
      if (c.agreement == Agreement::Agree) continue;
      Json maximal = Json::array();
      for (const auto& m : c.oracle_maximal) maximal.push_back(names(net, m));
      cases.push_back(Json{{"agreement", std::string(to_string(c.agreement))},
                           {"clamp", names(net, c.clamped)},
                           {"inferred", names(net, c.inferred)},
                           {"termination", std::string(to_string(c.termination))},
                           {"oracle_maximal", maximal}});
    }
    out << Json{{"cases", report.cases},
                {"agree", report.agree},
                {"tie_selected", report.tie_selected},
                {"disagree", report.disagree},
                {"non_agree", cases}}
               .dump()
        << "\n";
  } else {
    out << report.cases << " cases: AGREE " << report.agree << ", TIE-SELECTED " << report.tie_selected
        << ", DISAGREE " << report.disagree << "\n";
    for (const auto& c : report.all) {
      if (c.agreement == Agreement::Agree) continue;
      out << to_string(c.agreement) << " clamp " << braces(net, c.clamped) << ": dynamics "
          << braces(net, c.inferred) << " (" << to_string(c.termination) << "), oracle maximal";
      if (c.oracle_maximal.empty()) out << " none";
      for (const auto& m : c.oracle_maximal) out << " " << braces(net, m);
      out << "\n";
    }
  }
  return (o.strict && report.disagree > 0) ? kDomainError : kSuccess;
}

int cmd_render(const Options& o, std::ostream& out) {
  const auto rows = read_trace_csv(read_text_file(o.trace_in));
  std::vector<std::string> order;
  if (!o.network.empty()) order = display_order(load_network(o.network));
  out << render_ascii_timeline(rows, order);
  return kSuccess;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concept network simulator and inference oracle", "concepts"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check a network file and print its shape");
  validate->add_option("network", o.network, "Network JSON file")->required();
  add_format(validate, o);

  auto* run_cmd = app.add_subcommand("run", "Simulate a scenario and print per-phase verdicts");
  run_cmd->add_option("network", o.network, "Network JSON file")->required();
  run_cmd->add_option("scenario", o.scenario, "Scenario JSON file")->required();
  run_cmd->add_option("--params", o.params, "Engine parameter JSON file");
  run_cmd->add_option("--trace", o.trace_out, "Write the trace CSV to this path");
  run_cmd->add_flag("--render", o.render, "Print the ASCII timeline");
  add_format(run_cmd, o);

  auto* check = app.add_subcommand("check", "Oracle verdicts and pattern detail for an active set");
  check->add_option("network", o.network, "Network JSON file")->required();
  check->add_option("--active", o.active, "Comma-separated layer-0 concepts that are present");
  check->add_option("--params", o.params, "Engine parameter JSON file (tau)");
  check->add_option("--limit", o.limit, "Maximum non-bottom concepts to enumerate");
  add_format(check, o);

  auto* enumerate = app.add_subcommand("enumerate", "List every consistent interpretation (maximal ones starred)");
  enumerate->add_option("network", o.network, "Network JSON file")->required();
  enumerate->add_option("--active", o.active, "Comma-separated layer-0 concepts that are present");
  enumerate->add_option("--params", o.params, "Engine parameter JSON file (tau)");
  enumerate->add_option("--limit", o.limit, "Maximum non-bottom concepts to enumerate");
  add_format(enumerate, o);

  auto* compare = app.add_subcommand("compare", "Compare circuit dynamics with the oracle on every clamp subset");
  compare->add_option("network", o.network, "Network JSON file")->required();
  compare->add_option("--params", o.params, "Engine parameter JSON file");
  compare->add_flag("--strict", o.strict, "Exit 1 on any DISAGREE case");
  add_format(compare, o);

  auto* render = app.add_subcommand("render", "Render a trace CSV as an ASCII timeline");
  render->add_option("trace", o.trace_in, "Trace CSV file")->required();
  render->add_option("--network", o.network, "Network JSON file used to order the rows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (run_cmd->parsed()) return cmd_run(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (render->parsed()) return cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.category() == ErrorCategory::Parse ? kUsageError : kDomainError;
  }
  return kUsageError;
}

}  // namespace concepts::cli
