#include "concepts/model.hpp"

#include <algorithm>
#include <set>

#include "concepts/error.hpp"

namespace concepts {

bool Pattern::contains(ConceptId id) const {
  return std::find(elements.begin(), elements.end(), id) != elements.end();
}

std::size_t ActiveSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<ConceptId> ActiveSet::members() const {
  std::vector<ConceptId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != 0) out.push_back(ConceptId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

const Concept& ValidatedNetwork::at(ConceptId id) const {
  if (id.index() >= concepts_.size()) {
    throw Error(ErrorKind::UnknownConcept, "concept index " + std::to_string(id.value) + " out of range");
  }
  return concepts_[id.index()];
}

std::span<const ConceptId> ValidatedNetwork::layer(int l) const {
  if (l < 0 || static_cast<std::size_t>(l) >= layers_.size()) return {};
  return layers_[static_cast<std::size_t>(l)];
}

std::size_t ValidatedNetwork::pattern_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : concepts_) n += c.patterns.size();
  return n;
}

std::optional<ConceptId> ValidatedNetwork::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

ConceptId ValidatedNetwork::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorKind::UnknownConcept, "no concept named '" + std::string(name) + "'");
}

std::span<const PatternRef> ValidatedNetwork::element_parents(ConceptId element) const {
  if (element.index() >= parents_.size()) {
    throw Error(ErrorKind::UnknownConcept, "concept index " + std::to_string(element.value) + " out of range");
  }
  return parents_[element.index()];
}

std::span<const PatternRef> element_parents(const ValidatedNetwork& net, ConceptId element) {
  return net.element_parents(element);
}

namespace {

std::string where(const ConceptSpec& c, std::size_t ordinal) {
  return "concept '" + c.name + "' pattern " + std::to_string(ordinal);
}

}  // namespace

ValidatedNetwork validate_network(const NetworkSpec& spec) {
  ValidatedNetwork net;

  for (std::size_t i = 0; i < spec.concepts.size(); ++i) {
    const auto& c = spec.concepts[i];
    if (c.name.empty()) {
      throw Error(ErrorKind::EmptyName, "concept #" + std::to_string(i) + " has an empty name");
    }
    if (c.layer < 0) {
      throw Error(ErrorKind::LayerViolation, "concept '" + c.name + "' has negative layer " + std::to_string(c.layer));
    }
    auto [it, inserted] = net.by_name_.emplace(c.name, ConceptId{static_cast<std::uint32_t>(i)});
    if (!inserted) throw Error(ErrorKind::DuplicateName, "concept name '" + c.name + "' appears more than once");
  }

  for (const auto& c : spec.concepts) {
    if (c.layer == 0 && !c.patterns.empty()) {
      throw Error(ErrorKind::BottomWithPatterns, "layer-0 concept '" + c.name + "' declares patterns");
    }
    if (c.layer > 0 && c.patterns.empty()) {
      throw Error(ErrorKind::NonBottomWithoutPatterns,
                  "layer-" + std::to_string(c.layer) + " concept '" + c.name + "' has no patterns");
    }

    Concept out{c.name, c.layer, {}};
    std::set<std::vector<ConceptId>> seen_patterns;
    for (std::size_t p = 0; p < c.patterns.size(); ++p) {
      const auto& names = c.patterns[p];
      if (names.empty()) throw Error(ErrorKind::EmptyPattern, where(c, p) + " is empty");

      Pattern pattern;
      for (const auto& element_name : names) {
        auto found = net.by_name_.find(element_name);
        if (found == net.by_name_.end()) {
          throw Error(ErrorKind::DanglingReference, where(c, p) + " references unknown concept '" + element_name + "'");
        }
        const ConceptId element = found->second;
        const int element_layer = spec.concepts[element.index()].layer;
        if (element_layer != c.layer - 1) {
          throw Error(ErrorKind::LayerViolation, where(c, p) + ": element '" + element_name + "' is on layer " +
                                                     std::to_string(element_layer) + ", expected " +
                                                     std::to_string(c.layer - 1));
        }
        if (pattern.contains(element)) {
          throw Error(ErrorKind::DuplicateElement, where(c, p) + " lists '" + element_name + "' twice");
        }
        pattern.elements.push_back(element);
      }

      auto key = pattern.elements;
      std::sort(key.begin(), key.end());
      if (!seen_patterns.insert(std::move(key)).second) {
        throw Error(ErrorKind::DuplicatePattern, where(c, p) + " repeats an earlier pattern");
      }
      out.patterns.push_back(std::move(pattern));
    }
    net.concepts_.push_back(std::move(out));
  }

  int top = -1;
  for (const auto& c : net.concepts_) top = std::max(top, c.layer);
  net.layers_.resize(static_cast<std::size_t>(top + 1));
  net.parents_.resize(net.concepts_.size());

  for (std::size_t i = 0; i < net.concepts_.size(); ++i) {
    const ConceptId id{static_cast<std::uint32_t>(i)};
    const auto& c = net.concepts_[i];
    net.layers_[static_cast<std::size_t>(c.layer)].push_back(id);
    if (c.layer > 0) net.non_bottom_.push_back(id);
    for (std::size_t p = 0; p < c.patterns.size(); ++p) {
      for (ConceptId e : c.patterns[p].elements) net.parents_[e.index()].push_back(PatternRef{id, p});
      if (c.patterns[p].elements.size() == 1) {
        net.warnings_.push_back(ValidationWarning{
            id, p, "concept '" + c.name + "' pattern " + std::to_string(p) + " is a singleton and can never be incomplete"});
      }
    }
  }
  // Owners are visited in index order, so each parent list is already sorted.
  return net;
}

std::string_view to_string(PatternStatus status) {
  switch (status) {
    case PatternStatus::Off: return "Off";
    case PatternStatus::ApplicableIncomplete: return "ApplicableIncomplete";
    case PatternStatus::Complete: return "Complete";
  }
  return "Off";
}

PatternState pattern_state(const Pattern& pattern, const ActiveSet& active, double tau) {
  PatternState state;
  state.total = pattern.elements.size();
  for (ConceptId e : pattern.elements) {
    if (active.contains(e)) ++state.present;
  }
  if (state.total > 0 && state.present == state.total) {
    state.status = PatternStatus::Complete;
  } else if (state.total > 0 && state.fraction() >= tau) {
    state.status = PatternStatus::ApplicableIncomplete;
  } else {
    state.status = PatternStatus::Off;
  }
  return state;
}

std::vector<ConceptId> missing_elements(const Pattern& pattern, const ActiveSet& active) {
  std::vector<ConceptId> out;
  for (ConceptId e : pattern.elements) {
    if (!active.contains(e)) out.push_back(e);
  }
  return out;
}

NetworkSpec canonical_network_spec() {
  NetworkSpec spec;
  for (const char* name : {"looking", "tasting", "white", "salty", "sweet"}) spec.concepts.push_back({name, 0, {}});
  spec.concepts.push_back({"salt", 1, {{"tasting", "salty"}, {"looking", "white"}}});
  spec.concepts.push_back({"sugar", 1, {{"tasting", "sweet"}, {"looking", "white"}}});
  return spec;
}

}  // namespace concepts
