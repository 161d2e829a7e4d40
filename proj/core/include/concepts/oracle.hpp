#pragma once

// Declarative evaluation of the inference rule, with no dynamics: a concept may be
// inferred when at least one of its patterns is complete, none is applicable but
// incomplete, and every active element is explained by some inferred concept.
// Used as ground truth for the circuit in engine.hpp.

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "concepts/model.hpp"

namespace concepts {

/// Candidate set of inferred (non-bottom) concepts, kept sorted.
struct Interpretation {
  std::vector<ConceptId> inferred;

  Interpretation() = default;
  explicit Interpretation(std::vector<ConceptId> ids);
  bool contains(ConceptId id) const;
  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

struct ViolatedPattern {
  std::size_t ordinal = 0;
  std::vector<ConceptId> missing;

  friend bool operator==(const ViolatedPattern&, const ViolatedPattern&) = default;
};

struct ConceptConsistency {
  bool consistent = false;
  std::size_t complete_patterns = 0;
  std::vector<ViolatedPattern> violated;  // ApplicableIncomplete patterns

  friend bool operator==(const ConceptConsistency&, const ConceptConsistency&) = default;
};

struct ConsistencyReport {
  Interpretation interpretation;
  bool consistent = false;
  std::map<ConceptId, ConceptConsistency> per_concept;
  std::vector<ConceptId> unexpected;
  bool maximal = false;

  friend bool operator==(const ConsistencyReport&, const ConsistencyReport&) = default;
};

enum class OracleVerdict { InSomeMaximal, InAllMaximal, InNone };

std::string_view to_string(OracleVerdict verdict);

inline constexpr std::size_t kDefaultEnumerationLimit = 20;

/// clamped ∪ inferred. Throws NonBottomClamp if `clamped` holds a non-bottom concept.
ActiveSet effective_active(const ValidatedNetwork& net, const Interpretation& interpretation, const ActiveSet& clamped);

/// Throws UnknownConcept / BottomConcept.
ConceptConsistency concept_locally_consistent(const ValidatedNetwork& net, ConceptId c, const ActiveSet& active,
                                              double tau = kDefaultApplicability);

/// Active concepts below the network's top layer that no inferred concept explains,
/// i.e. no inferred concept owns a non-Off pattern containing them. Sorted.
std::vector<ConceptId> unexpected_elements(const ValidatedNetwork& net, const Interpretation& interpretation,
                                           const ActiveSet& clamped, double tau = kDefaultApplicability);

/// `maximal` is left false; only enumerate_interpretations can decide it.
ConsistencyReport interpretation_consistent(const ValidatedNetwork& net, const Interpretation& interpretation,
                                            const ActiveSet& clamped, double tau = kDefaultApplicability);

/// All consistent interpretations over the 2^k subsets of non-bottom concepts, sorted
/// by descending size then lexicographically. Throws TooLarge when k > limit.
std::vector<ConsistencyReport> enumerate_interpretations(const ValidatedNetwork& net, const ActiveSet& clamped,
                                                         double tau = kDefaultApplicability,
                                                         std::size_t limit = kDefaultEnumerationLimit);

/// Per non-bottom concept: member of every maximal consistent interpretation, of
/// some, or of none (also when nothing is consistent).
std::map<ConceptId, OracleVerdict> oracle_verdicts(const ValidatedNetwork& net, const ActiveSet& clamped,
                                                   double tau = kDefaultApplicability,
                                                   std::size_t limit = kDefaultEnumerationLimit);

std::map<ConceptId, OracleVerdict> verdicts_from(const ValidatedNetwork& net,
                                                 const std::vector<ConsistencyReport>& consistent);

}  // namespace concepts
