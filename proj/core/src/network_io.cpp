#include <fstream>
#include <sstream>

#include "concepts/error.hpp"
#include "concepts/io.hpp"
#include "json_util.hpp"

namespace concepts {

using detail::Json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "cannot read '" + path.string() + "'");
  return buffer.str();
}

NetworkSpec parse_network_file(std::string_view text) {
  const Json doc = detail::parse_json(text);
  detail::expect_object(doc, "");
  detail::only_fields(doc, "", {"concepts"});
  const Json& concepts = detail::required(doc, "", "concepts");
  detail::expect_array(concepts, "/concepts");

  NetworkSpec spec;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    const std::string at = detail::pointer("/concepts", i);
    const Json& c = concepts[i];
    detail::expect_object(c, at);
    detail::only_fields(c, at, {"name", "layer", "patterns"});

    ConceptSpec out;
    const Json& name = detail::required(c, at, "name");
    if (!name.is_string()) {
      throw Error(ErrorKind::TypeMismatch, at + "/name: expected string, found " + detail::type_name(name));
    }
    out.name = name.get<std::string>();

    const Json& layer = detail::required(c, at, "layer");
    if (!layer.is_number_integer() || layer.get<long long>() < 0) {
      throw Error(ErrorKind::TypeMismatch, at + "/layer: expected non-negative integer, found " + layer.dump());
    }
    out.layer = static_cast<int>(layer.get<long long>());

    const Json& patterns = detail::required(c, at, "patterns");
    detail::expect_array(patterns, at + "/patterns");
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const std::string pat = detail::pointer(at + "/patterns", p);
      detail::expect_array(patterns[p], pat);
      std::vector<std::string> elements;
      for (std::size_t e = 0; e < patterns[p].size(); ++e) {
        const Json& element = patterns[p][e];
        if (!element.is_string()) {
          throw Error(ErrorKind::TypeMismatch,
                      detail::pointer(pat, e) + ": expected element name (string), found " + detail::type_name(element));
        }
        elements.push_back(element.get<std::string>());
      }
      out.patterns.push_back(std::move(elements));
    }
    spec.concepts.push_back(std::move(out));
  }
  return spec;
}

std::string serialize_network(const NetworkSpec& spec) {
  Json concepts = Json::array();
  for (const auto& c : spec.concepts) {
    Json patterns = Json::array();
    for (const auto& p : c.patterns) patterns.push_back(p);
    concepts.push_back(Json{{"name", c.name}, {"layer", c.layer}, {"patterns", std::move(patterns)}});
  }
  return Json{{"concepts", std::move(concepts)}}.dump(2) + "\n";
}

}  // namespace concepts
