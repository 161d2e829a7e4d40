#include "concepts/compare.hpp"

#include <algorithm>

#include "concepts/error.hpp"
#include "concepts/oracle.hpp"

namespace concepts {

std::string_view to_string(Agreement agreement) {
  switch (agreement) {
    case Agreement::Agree: return "AGREE";
    case Agreement::TieSelected: return "TIE-SELECTED";
    case Agreement::Disagree: return "DISAGREE";
  }
  return "DISAGREE";
}

std::vector<AgreementCase> AgreementReport::disagreements() const {
  std::vector<AgreementCase> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [](const AgreementCase& c) { return c.agreement == Agreement::Disagree; });
  return out;
}

AgreementReport compare_with_oracle(const ValidatedNetwork& net, const EngineParams& params,
                                    std::size_t bottom_limit) {
  check_params(params);
  const auto bottom = net.bottom();
  if (bottom.size() > bottom_limit) {
    throw Error(ErrorKind::TooLarge, std::to_string(bottom.size()) + " layer-0 concepts exceed the comparison limit of " +
                                         std::to_string(bottom_limit));
  }
  if (net.non_bottom().size() > kDefaultEnumerationLimit) {
    throw Error(ErrorKind::TooLarge, std::to_string(net.non_bottom().size()) +
                                         " non-bottom concepts exceed the enumeration limit of " +
                                         std::to_string(kDefaultEnumerationLimit));
  }

  AgreementReport report;
  const std::uint64_t subsets = std::uint64_t{1} << bottom.size();
  for (std::uint64_t subset = 0; subset < subsets; ++subset) {
    AgreementCase c;
    c.subset = subset;
    ClampMap clamp;
    ActiveSet clamped = net.empty_set();
    for (std::size_t j = 0; j < bottom.size(); ++j) {
      if (subset & (std::uint64_t{1} << j)) {
        clamp[bottom[j]] = true;
        clamped.insert(bottom[j]);
        c.clamped.push_back(bottom[j]);
      }
    }

    EngineState state = init_engine(net, params);
    const PhaseTrace phase = run_phase(net, params, state, ScenarioPhase{clamp, std::nullopt});
    c.termination = phase.termination;
    c.dynamics = phase_verdicts(net, phase);
    c.inferred = inferred_concepts(c.dynamics);

    const auto consistent = enumerate_interpretations(net, clamped, params.tau);
    for (const auto& r : consistent) {
      if (r.maximal) c.oracle_maximal.push_back(r.interpretation.inferred);
    }

    const bool settled = std::none_of(c.dynamics.begin(), c.dynamics.end(),
                                      [](const auto& kv) { return kv.second == Verdict::Unstable; });
    const auto match = std::find_if(consistent.begin(), consistent.end(), [&](const ConsistencyReport& r) {
      return r.interpretation.inferred == c.inferred;
    });

    if (!settled) {
      c.agreement = Agreement::Disagree;
    } else if (consistent.empty()) {
      c.agreement = c.inferred.empty() ? Agreement::Agree : Agreement::Disagree;
    } else if (match == consistent.end()) {
      c.agreement = Agreement::Disagree;
    } else {
      c.agreement = match->maximal ? Agreement::Agree : Agreement::TieSelected;
    }

    switch (c.agreement) {
      case Agreement::Agree: ++report.agree; break;
      case Agreement::TieSelected: ++report.tie_selected; break;
      case Agreement::Disagree: ++report.disagree; break;
    }
    report.all.push_back(std::move(c));
  }
  report.cases = report.all.size();
  return report;
}

}  // namespace concepts
