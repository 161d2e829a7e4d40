#include "concepts/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "concepts/error.hpp"

namespace concepts {

Interpretation::Interpretation(std::vector<ConceptId> ids) : inferred(std::move(ids)) {
  std::sort(inferred.begin(), inferred.end());
  inferred.erase(std::unique(inferred.begin(), inferred.end()), inferred.end());
}

bool Interpretation::contains(ConceptId id) const {
  return std::binary_search(inferred.begin(), inferred.end(), id);
}

std::string_view to_string(OracleVerdict verdict) {
  switch (verdict) {
    case OracleVerdict::InSomeMaximal: return "InSomeMaximal";
    case OracleVerdict::InAllMaximal: return "InAllMaximal";
    case OracleVerdict::InNone: return "InNone";
  }
  return "InNone";
}

namespace {

void require_bottom_clamp(const ValidatedNetwork& net, const ActiveSet& clamped) {
  for (ConceptId id : clamped.members()) {
    if (net.layer_of(id) != 0) throw Error(ErrorKind::NonBottomClamp, "'" + net.name(id) + "' is not a layer-0 concept");
  }
}

void require_interpretation(const ValidatedNetwork& net, const Interpretation& interpretation) {
  for (ConceptId id : interpretation.inferred) {
    if (net.layer_of(id) == 0) throw Error(ErrorKind::BottomConcept, "'" + net.name(id) + "' cannot be inferred");
  }
}

// Explained: some inferred owner has a non-Off pattern containing the element.
bool explained(const ValidatedNetwork& net, ConceptId element, const Interpretation& interpretation,
               const ActiveSet& active, double tau) {
  for (const PatternRef& ref : net.element_parents(element)) {
    if (!interpretation.contains(ref.owner)) continue;
    if (pattern_state(net.at(ref.owner).patterns[ref.ordinal], active, tau).applicable()) return true;
  }
  return false;
}

}  // namespace

ActiveSet effective_active(const ValidatedNetwork& net, const Interpretation& interpretation, const ActiveSet& clamped) {
  require_bottom_clamp(net, clamped);
  require_interpretation(net, interpretation);
  ActiveSet active = net.empty_set();
  for (ConceptId id : clamped.members()) active.insert(id);
  for (ConceptId id : interpretation.inferred) active.insert(id);
  return active;
}

ConceptConsistency concept_locally_consistent(const ValidatedNetwork& net, ConceptId c, const ActiveSet& active,
                                              double tau) {
  const Concept& concept_ = net.at(c);
  if (concept_.layer == 0) throw Error(ErrorKind::BottomConcept, "'" + concept_.name + "' is a layer-0 concept");

  ConceptConsistency out;
  for (std::size_t p = 0; p < concept_.patterns.size(); ++p) {
    const Pattern& pattern = concept_.patterns[p];
    const PatternState state = pattern_state(pattern, active, tau);
    if (state.status == PatternStatus::Complete) {
      ++out.complete_patterns;
    } else if (state.status == PatternStatus::ApplicableIncomplete) {
      out.violated.push_back(ViolatedPattern{p, missing_elements(pattern, active)});
    }
  }
  out.consistent = out.complete_patterns > 0 && out.violated.empty();
  return out;
}

std::vector<ConceptId> unexpected_elements(const ValidatedNetwork& net, const Interpretation& interpretation,
                                           const ActiveSet& clamped, double tau) {
  const ActiveSet active = effective_active(net, interpretation, clamped);
  std::vector<ConceptId> out;
  for (ConceptId e : active.members()) {
    if (net.layer_of(e) >= net.top_layer()) continue;  // nothing above can explain it
    if (!explained(net, e, interpretation, active, tau)) out.push_back(e);
  }
  return out;
}

ConsistencyReport interpretation_consistent(const ValidatedNetwork& net, const Interpretation& interpretation,
                                            const ActiveSet& clamped, double tau) {
  ConsistencyReport report;
  report.interpretation = interpretation;
  const ActiveSet active = effective_active(net, interpretation, clamped);

  bool all_local = true;
  for (ConceptId c : interpretation.inferred) {
    auto detail = concept_locally_consistent(net, c, active, tau);
    all_local = all_local && detail.consistent;
    report.per_concept.emplace(c, std::move(detail));
  }
  report.unexpected = unexpected_elements(net, interpretation, clamped, tau);
  report.consistent = all_local && report.unexpected.empty();
  return report;
}

std::vector<ConsistencyReport> enumerate_interpretations(const ValidatedNetwork& net, const ActiveSet& clamped,
                                                         double tau, std::size_t limit) {
  const auto candidates = net.non_bottom();
  const std::size_t k = candidates.size();
  if (k > limit) {
    throw Error(ErrorKind::TooLarge, std::to_string(k) + " non-bottom concepts exceed the enumeration limit of " +
                                         std::to_string(limit));
  }
  require_bottom_clamp(net, clamped);

  const std::uint64_t subsets = std::uint64_t{1} << k;
  std::vector<std::uint8_t> consistent(subsets, 0);
  std::vector<ConsistencyReport> reports;

  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<ConceptId> ids;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::uint64_t{1} << j)) ids.push_back(candidates[j]);
    }
    auto report = interpretation_consistent(net, Interpretation(std::move(ids)), clamped, tau);
    if (report.consistent) {
      consistent[mask] = 1;
      reports.push_back(std::move(report));
    }
  }

  // Superset closure: closure[m] = some consistent set contains m (sum over supersets).
  std::vector<std::uint8_t> closure = consistent;
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      if (!(mask & bit) && closure[mask | bit]) closure[mask] = 1;
    }
  }

  for (auto& report : reports) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (report.interpretation.contains(candidates[j])) mask |= std::uint64_t{1} << j;
    }
    bool has_superset = false;
    for (std::size_t j = 0; j < k && !has_superset; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if (!(mask & bit) && closure[mask | bit]) has_superset = true;
    }
    report.maximal = !has_superset;
  }

  std::sort(reports.begin(), reports.end(), [](const ConsistencyReport& a, const ConsistencyReport& b) {
    const auto& x = a.interpretation.inferred;
    const auto& y = b.interpretation.inferred;
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  return reports;
}

std::map<ConceptId, OracleVerdict> verdicts_from(const ValidatedNetwork& net,
                                                 const std::vector<ConsistencyReport>& consistent) {
  std::map<ConceptId, OracleVerdict> out;
  std::size_t maximal_count = 0;
  std::map<ConceptId, std::size_t> hits;
  for (const auto& report : consistent) {
    if (!report.maximal) continue;
    ++maximal_count;
    for (ConceptId id : report.interpretation.inferred) ++hits[id];
  }
  for (ConceptId id : net.non_bottom()) {
    const auto it = hits.find(id);
    const std::size_t n = it == hits.end() ? 0 : it->second;
    if (n == 0) {
      out[id] = OracleVerdict::InNone;
    } else if (n == maximal_count) {
      out[id] = OracleVerdict::InAllMaximal;
    } else {
      out[id] = OracleVerdict::InSomeMaximal;
    }
  }
  return out;
}

std::map<ConceptId, OracleVerdict> oracle_verdicts(const ValidatedNetwork& net, const ActiveSet& clamped, double tau,
                                                   std::size_t limit) {
  return verdicts_from(net, enumerate_interpretations(net, clamped, tau, limit));
}

}  // namespace concepts
