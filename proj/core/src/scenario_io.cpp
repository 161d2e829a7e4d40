#include "concepts/error.hpp"
#include "concepts/io.hpp"
#include "json_util.hpp"

namespace concepts {

using detail::Json;

ScenarioSpec parse_scenario_file(std::string_view text, const ValidatedNetwork& net) {
  const Json doc = detail::parse_json(text);
  detail::expect_object(doc, "");
  detail::only_fields(doc, "", {"phases"});
  const Json& phases = detail::required(doc, "", "phases");
  detail::expect_array(phases, "/phases");
  if (phases.empty()) throw Error(ErrorKind::EmptyScenario, "/phases: scenario has no phases");

  ScenarioSpec scenario;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const std::string at = detail::pointer("/phases", i);
    const Json& phase = phases[i];
    detail::expect_object(phase, at);
    detail::only_fields(phase, at, {"clamp", "hold"});

    ScenarioPhase out;
    const Json& clamp = detail::required(phase, at, "clamp");
    detail::expect_object(clamp, at + "/clamp");
    for (const auto& [name, value] : clamp.items()) {
      const std::string vat = at + "/clamp/" + name;
      if (!value.is_number_integer() || (value.get<long long>() != 0 && value.get<long long>() != 1)) {
        throw Error(ErrorKind::TypeMismatch, vat + ": expected 0 or 1, found " + value.dump());
      }
      const auto id = net.find(name);
      if (!id) throw Error(ErrorKind::UnknownElement, vat + ": no concept named '" + name + "'");
      if (net.layer_of(*id) != 0) {
        throw Error(ErrorKind::NonBottomClamp, vat + ": '" + name + "' is not a layer-0 concept");
      }
      out.clamp[*id] = value.get<long long>() == 1;
    }

    if (auto hold = phase.find("hold"); hold != phase.end()) {
      if (hold->is_string() && hold->get<std::string>() == "converge") {
        out.sweeps = std::nullopt;
      } else if (hold->is_number_integer() && hold->get<long long>() >= 1 && hold->get<long long>() <= 1'000'000) {
        out.sweeps = static_cast<int>(hold->get<long long>());
      } else {
        throw Error(ErrorKind::TypeMismatch,
                    at + "/hold: expected \"converge\" or a positive sweep count, found " + hold->dump());
      }
    }
    scenario.phases.push_back(std::move(out));
  }
  return scenario;
}

std::string serialize_scenario(const ScenarioSpec& scenario, const ValidatedNetwork& net) {
  Json phases = Json::array();
  for (const auto& phase : scenario.phases) {
    Json clamp = Json::object();
    for (const auto& [id, value] : phase.clamp) clamp[net.name(id)] = value ? 1 : 0;
    Json hold = phase.sweeps ? Json(*phase.sweeps) : Json("converge");
    phases.push_back(Json{{"clamp", std::move(clamp)}, {"hold", std::move(hold)}});
  }
  return Json{{"phases", std::move(phases)}}.dump(2) + "\n";
}

namespace {

double number_field(const Json& value, const std::string& key) {
  if (!value.is_number()) {
    throw Error(ErrorKind::TypeMismatch, "/" + key + ": expected number, found " + detail::type_name(value));
  }
  return value.get<double>();
}

}  // namespace

EngineParams parse_params(std::optional<std::string_view> text) {
  EngineParams params;
  if (!text) return params;

  const Json doc = detail::parse_json(*text);
  detail::expect_object(doc, "");
  detail::only_fields(doc, "", {"w_ff", "w_self", "w_lat", "w_err", "theta", "tau", "max_sweeps", "error_routing"});

  for (const auto& [key, value] : doc.items()) {
    if (key == "w_ff") params.w_ff = number_field(value, key);
    else if (key == "w_self") params.w_self = number_field(value, key);
    else if (key == "w_lat") params.w_lat = number_field(value, key);
    else if (key == "w_err") params.w_err = number_field(value, key);
    else if (key == "theta") params.theta = number_field(value, key);
    else if (key == "tau") params.tau = number_field(value, key);
    else if (key == "max_sweeps") {
      if (!value.is_number_integer() || value.get<long long>() > 1'000'000 || value.get<long long>() < -1'000'000) {
        throw Error(ErrorKind::TypeMismatch, "/max_sweeps: expected integer, found " + value.dump());
      }
      params.max_sweeps = static_cast<int>(value.get<long long>());
    } else if (key == "error_routing") {
      const std::string routing = value.is_string() ? value.get<std::string>() : std::string();
      if (routing == "split") {
        params.error_routing = ErrorRouting::Split;
      } else if (routing == "all_global") {
        params.error_routing = ErrorRouting::AllGlobal;
      } else {
        throw Error(ErrorKind::TypeMismatch, "/error_routing: expected \"split\" or \"all_global\", found " + value.dump());
      }
    }
  }
  return params;
}

std::string serialize_params(const EngineParams& p) {
  const Json doc{{"w_ff", p.w_ff},   {"w_self", p.w_self}, {"w_lat", p.w_lat},
                 {"w_err", p.w_err}, {"theta", p.theta},   {"tau", p.tau},
                 {"max_sweeps", p.max_sweeps},
                 {"error_routing", std::string(to_string(p.error_routing))}};
  return doc.dump(2) + "\n";
}

}  // namespace concepts
