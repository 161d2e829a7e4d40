#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace concepts {

/// Dense index of a concept, assigned in file order.
struct ConceptId {
  std::uint32_t value = 0;

  constexpr std::size_t index() const noexcept { return value; }
  friend constexpr auto operator<=>(ConceptId, ConceptId) = default;
};

// ---------------------------------------------------------------------------
// Unvalidated description, as read from a file or built in code. Patterns refer
// to elements by name.
// ---------------------------------------------------------------------------

struct ConceptSpec {
  std::string name;
  int layer = 0;
  std::vector<std::vector<std::string>> patterns;

  friend bool operator==(const ConceptSpec&, const ConceptSpec&) = default;
};

struct NetworkSpec {
  std::vector<ConceptSpec> concepts;

  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

// ---------------------------------------------------------------------------
// Validated network.
// ---------------------------------------------------------------------------

/// A conditional bistable pattern: elements one layer below the owning concept,
/// kept in declaration order.
struct Pattern {
  std::vector<ConceptId> elements;

  bool contains(ConceptId id) const;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct Concept {
  std::string name;
  int layer = 0;
  std::vector<Pattern> patterns;
};

/// (owner concept, pattern ordinal) pair in the inverse membership index.
struct PatternRef {
  ConceptId owner;
  std::size_t ordinal = 0;

  friend auto operator<=>(const PatternRef&, const PatternRef&) = default;
};

struct ValidationWarning {
  ConceptId concept_id;
  std::size_t ordinal = 0;
  std::string message;
};

/// Set of currently active concepts, indexed by ConceptId. Sized to the network.
class ActiveSet {
 public:
  ActiveSet() = default;
  explicit ActiveSet(std::size_t size) : bits_(size, 0) {}

  std::size_t size() const noexcept { return bits_.size(); }
  bool contains(ConceptId id) const { return id.index() < bits_.size() && bits_[id.index()] != 0; }
  void insert(ConceptId id) { bits_.at(id.index()) = 1; }
  void erase(ConceptId id) { bits_.at(id.index()) = 0; }
  void set(ConceptId id, bool on) { bits_.at(id.index()) = on ? 1 : 0; }
  std::size_t count() const;
  std::vector<ConceptId> members() const;

  friend bool operator==(const ActiveSet&, const ActiveSet&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class ValidatedNetwork {
 public:
  std::size_t size() const noexcept { return concepts_.size(); }
  std::span<const Concept> concepts() const noexcept { return concepts_; }
  const Concept& at(ConceptId id) const;
  const std::string& name(ConceptId id) const { return at(id).name; }
  int layer_of(ConceptId id) const { return at(id).layer; }

  /// Highest layer present; 0 for a network of sensory units only.
  int top_layer() const noexcept { return static_cast<int>(layers_.size()) - 1; }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  std::span<const ConceptId> layer(int l) const;
  std::span<const ConceptId> bottom() const { return layer(0); }
  std::span<const ConceptId> non_bottom() const noexcept { return non_bottom_; }
  std::size_t pattern_count() const noexcept;

  std::optional<ConceptId> find(std::string_view name) const;
  /// Throws Error(UnknownConcept) for names not in the network.
  ConceptId id_of(std::string_view name) const;

  /// Inverse of pattern membership, ordered by (owner index, ordinal).
  /// Throws Error(UnknownConcept) if `element` is out of range.
  std::span<const PatternRef> element_parents(ConceptId element) const;

  std::span<const ValidationWarning> warnings() const noexcept { return warnings_; }

  ActiveSet empty_set() const { return ActiveSet(size()); }

 private:
  friend ValidatedNetwork validate_network(const NetworkSpec& spec);

  std::vector<Concept> concepts_;
  std::vector<std::vector<ConceptId>> layers_;
  std::vector<ConceptId> non_bottom_;
  std::vector<std::vector<PatternRef>> parents_;
  std::unordered_map<std::string, ConceptId> by_name_;
  std::vector<ValidationWarning> warnings_;
};

/// Checks every structural rule and builds the index structures. Throws Error with
/// kinds EmptyName, DuplicateName, DanglingReference, LayerViolation, EmptyPattern,
/// DuplicateElement, DuplicatePattern, BottomWithPatterns or NonBottomWithoutPatterns.
ValidatedNetwork validate_network(const NetworkSpec& spec);

std::span<const PatternRef> element_parents(const ValidatedNetwork& net, ConceptId element);

// ---------------------------------------------------------------------------
// Pattern state.
// ---------------------------------------------------------------------------

enum class PatternStatus { Off, ApplicableIncomplete, Complete };

std::string_view to_string(PatternStatus status);

struct PatternState {
  PatternStatus status = PatternStatus::Off;
  std::size_t present = 0;
  std::size_t total = 0;

  double fraction() const { return total == 0 ? 0.0 : static_cast<double>(present) / static_cast<double>(total); }
  bool applicable() const { return status != PatternStatus::Off; }
  friend bool operator==(const PatternState&, const PatternState&) = default;
};

inline constexpr double kDefaultApplicability = 0.5;

/// Complete iff all elements are active; ApplicableIncomplete iff tau <= fraction < 1;
/// Off below tau.
PatternState pattern_state(const Pattern& pattern, const ActiveSet& active, double tau = kDefaultApplicability);

/// Elements of `pattern` not in `active`, in declaration order.
std::vector<ConceptId> missing_elements(const Pattern& pattern, const ActiveSet& active);

/// The salt/sugar network used throughout the examples and tests.
NetworkSpec canonical_network_spec();

}  // namespace concepts

template <>
struct std::hash<concepts::ConceptId> {
  std::size_t operator()(concepts::ConceptId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
