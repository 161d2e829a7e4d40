#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "concepts/engine.hpp"
#include "concepts/model.hpp"

namespace concepts {

enum class Agreement {
  Agree,        // dynamics settled on a maximal consistent interpretation (or on nothing when none exists)
  TieSelected,  // dynamics settled on a consistent, non-maximal interpretation
  Disagree,
};

std::string_view to_string(Agreement agreement);

struct AgreementCase {
  std::uint64_t subset = 0;        // bit i set <=> i-th layer-0 concept clamped on
  std::vector<ConceptId> clamped;  // same set, as ids
  std::vector<ConceptId> inferred;
  Termination termination = Termination::FixedPoint;
  VerdictMap dynamics;
  std::vector<std::vector<ConceptId>> oracle_maximal;
  Agreement agreement = Agreement::Disagree;
};

struct AgreementReport {
  std::size_t cases = 0;
  std::size_t agree = 0;
  std::size_t tie_selected = 0;
  std::size_t disagree = 0;
  std::vector<AgreementCase> all;  // sorted by subset index

  std::vector<AgreementCase> disagreements() const;
};

inline constexpr std::size_t kDefaultCompareLimit = 16;

/// Runs single-phase dynamics from the zero state for every subset of layer-0 clamps
/// and classifies the inferred set against the oracle. Throws TooLarge when the
/// network has more than `bottom_limit` layer-0 concepts or more non-bottom concepts
/// than the oracle enumeration limit.
AgreementReport compare_with_oracle(const ValidatedNetwork& net, const EngineParams& params,
                                    std::size_t bottom_limit = kDefaultCompareLimit);

}  // namespace concepts
