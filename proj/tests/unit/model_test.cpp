#include <gtest/gtest.h>

#include <set>

#include "concepts/error.hpp"
#include "concepts/model.hpp"
#include "support/random_network.hpp"

namespace concepts {
namespace {

ErrorKind validation_error(const NetworkSpec& spec) {
  try {
    validate_network(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "network unexpectedly valid";
  return ErrorKind::IoError;
}

ActiveSet active_of(const ValidatedNetwork& net, std::initializer_list<const char*> names) {
  ActiveSet s = net.empty_set();
  for (const char* n : names) s.insert(net.id_of(n));
  return s;
}

TEST(ValidateNetwork, CanonicalNetworkIndexesParents) {
  const auto net = validate_network(canonical_network_spec());
  EXPECT_EQ(net.size(), 7u);
  EXPECT_EQ(net.layer_count(), 2u);
  EXPECT_EQ(net.pattern_count(), 4u);
  EXPECT_TRUE(net.warnings().empty());

  const auto salt = net.id_of("salt");
  const auto sugar = net.id_of("sugar");
  std::vector<PatternRef> expected{{salt, 1}, {sugar, 1}};
  const auto parents = net.element_parents(net.id_of("white"));
  EXPECT_EQ(std::vector<PatternRef>(parents.begin(), parents.end()), expected);

  const auto salty = net.element_parents(net.id_of("salty"));
  EXPECT_EQ(std::vector<PatternRef>(salty.begin(), salty.end()), (std::vector<PatternRef>{{salt, 0}}));
}

TEST(ValidateNetwork, DanglingReference) {
  auto spec = canonical_network_spec();
  spec.concepts[5].patterns[0] = {"tasting", "umami"};
  EXPECT_EQ(validation_error(spec), ErrorKind::DanglingReference);
}

TEST(ValidateNetwork, SingleBottomConceptIsValid) {
  const auto net = validate_network(NetworkSpec{{{"looking", 0, {}}}});
  EXPECT_EQ(net.size(), 1u);
  EXPECT_TRUE(net.element_parents(ConceptId{0}).empty());
  EXPECT_TRUE(net.non_bottom().empty());
  EXPECT_EQ(net.top_layer(), 0);
}

TEST(ValidateNetwork, StructuralErrors) {
  {
    auto spec = canonical_network_spec();
    spec.concepts.push_back({"anchovies", 2, {{"salt", "tasting"}}});
    EXPECT_EQ(validation_error(spec), ErrorKind::LayerViolation);
  }
  {
    auto spec = canonical_network_spec();
    spec.concepts[5].patterns.push_back({});
    EXPECT_EQ(validation_error(spec), ErrorKind::EmptyPattern);
  }
  {
    auto spec = canonical_network_spec();
    spec.concepts[6].name = "salt";
    EXPECT_EQ(validation_error(spec), ErrorKind::DuplicateName);
  }
  {
    auto spec = canonical_network_spec();
    spec.concepts[0].patterns.push_back({"white"});
    EXPECT_EQ(validation_error(spec), ErrorKind::BottomWithPatterns);
  }
  {
    auto spec = canonical_network_spec();
    spec.concepts[5].patterns.clear();
    EXPECT_EQ(validation_error(spec), ErrorKind::NonBottomWithoutPatterns);
  }
  {
    auto spec = canonical_network_spec();
    spec.concepts[5].patterns.push_back({"salty", "tasting"});
    EXPECT_EQ(validation_error(spec), ErrorKind::DuplicatePattern);
  }
  {
    auto spec = canonical_network_spec();
    spec.concepts[5].patterns[0] = {"salty", "salty"};
    EXPECT_EQ(validation_error(spec), ErrorKind::DuplicateElement);
  }
  {
    auto spec = canonical_network_spec();
    spec.concepts[2].name = "";
    EXPECT_EQ(validation_error(spec), ErrorKind::EmptyName);
  }
  {
    // Names are case-sensitive.
    auto spec = canonical_network_spec();
    spec.concepts.push_back({"Salt", 1, {{"tasting", "salty"}}});
    EXPECT_NO_THROW(validate_network(spec));
  }
}

TEST(ValidateNetwork, SingletonPatternWarns) {
  auto spec = canonical_network_spec();
  spec.concepts.push_back({"cake", 2, {{"sugar"}}});
  const auto net = validate_network(spec);
  ASSERT_EQ(net.warnings().size(), 1u);
  EXPECT_EQ(net.warnings()[0].concept_id, net.id_of("cake"));
}

TEST(ElementParents, UnknownConcept) {
  const auto net = validate_network(canonical_network_spec());
  EXPECT_THROW(
      {
        try {
          element_parents(net, ConceptId{99});
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::UnknownConcept);
          throw;
        }
      },
      Error);
}

TEST(ElementParents, ExactInverseOfMembershipOnRandomNetworks) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto net = validate_network(testing::random_network(seed));
    std::set<std::pair<std::uint32_t, std::pair<std::uint32_t, std::size_t>>> membership;
    for (std::size_t c = 0; c < net.size(); ++c) {
      const auto& patterns = net.concepts()[c].patterns;
      for (std::size_t p = 0; p < patterns.size(); ++p) {
        for (ConceptId e : patterns[p].elements) membership.insert({e.value, {static_cast<std::uint32_t>(c), p}});
      }
    }
    std::set<std::pair<std::uint32_t, std::pair<std::uint32_t, std::size_t>>> index;
    for (std::size_t e = 0; e < net.size(); ++e) {
      const auto parents = net.element_parents(ConceptId{static_cast<std::uint32_t>(e)});
      EXPECT_TRUE(std::is_sorted(parents.begin(), parents.end())) << "seed " << seed;
      for (const auto& ref : parents) index.insert({static_cast<std::uint32_t>(e), {ref.owner.value, ref.ordinal}});
    }
    EXPECT_EQ(index, membership) << "seed " << seed;
  }
}

TEST(PatternState, Examples) {
  const auto net = validate_network(canonical_network_spec());
  const Pattern& taste_salty = net.at(net.id_of("salt")).patterns[0];

  auto s = pattern_state(taste_salty, active_of(net, {"tasting"}), 0.5);
  EXPECT_EQ(s.status, PatternStatus::ApplicableIncomplete);
  EXPECT_EQ(s.present, 1u);
  EXPECT_EQ(s.total, 2u);

  EXPECT_EQ(pattern_state(taste_salty, net.empty_set(), 0.5).status, PatternStatus::Off);
  EXPECT_EQ(pattern_state(taste_salty, active_of(net, {"tasting", "salty"}), 0.5).status, PatternStatus::Complete);
}

TEST(PatternState, ThreeElementPattern) {
  NetworkSpec spec{{{"ate", 0, {}}, {"too-much", 0, {}}, {"thirsty", 0, {}}, {"salt", 1, {{"ate", "too-much", "thirsty"}}}}};
  const auto net = validate_network(spec);
  const Pattern& p = net.at(net.id_of("salt")).patterns[0];

  auto s = pattern_state(p, active_of(net, {"ate", "too-much"}), 0.5);
  EXPECT_EQ(s.status, PatternStatus::ApplicableIncomplete);
  EXPECT_EQ(s.present, 2u);
  EXPECT_EQ(s.total, 3u);
  EXPECT_EQ(pattern_state(p, active_of(net, {"ate", "too-much", "thirsty"}), 0.5).status, PatternStatus::Complete);
  // 1/3 is below one half.
  EXPECT_EQ(pattern_state(p, active_of(net, {"thirsty"}), 0.5).status, PatternStatus::Off);
}

// The three states partition [0, 1] with boundaries exactly at tau (inclusive) and 1.
TEST(PatternState, PartitionsFractionsAtTauAndOne) {
  for (std::size_t total = 1; total <= 8; ++total) {
    NetworkSpec spec;
    std::vector<std::string> elements;
    for (std::size_t i = 0; i < total; ++i) {
      spec.concepts.push_back({"e" + std::to_string(i), 0, {}});
      elements.push_back("e" + std::to_string(i));
    }
    spec.concepts.push_back({"c", 1, {elements}});
    const auto net = validate_network(spec);
    const Pattern& p = net.at(net.id_of("c")).patterns[0];

    for (double tau : {0.25, 0.5, 0.75, 1.0}) {
      for (std::size_t present = 0; present <= total; ++present) {
        ActiveSet active = net.empty_set();
        for (std::size_t i = 0; i < present; ++i) active.insert(ConceptId{static_cast<std::uint32_t>(i)});
        const auto s = pattern_state(p, active, tau);
        // present/total >= tau, checked with integers: 4*present >= (4*tau)*total.
        const auto scaled_tau = static_cast<std::size_t>(tau * 4.0);
        PatternStatus expected = PatternStatus::Off;
        if (present == total) {
          expected = PatternStatus::Complete;
        } else if (4 * present >= scaled_tau * total) {
          expected = PatternStatus::ApplicableIncomplete;
        }
        EXPECT_EQ(s.status, expected) << present << "/" << total << " tau " << tau;
        EXPECT_EQ(s, pattern_state(p, active, tau));
      }
    }
  }
}

TEST(PatternState, SingletonNeverIncomplete) {
  NetworkSpec spec{{{"sugar", 0, {}}, {"cake", 1, {{"sugar"}}}}};
  const auto net = validate_network(spec);
  const Pattern& p = net.at(net.id_of("cake")).patterns[0];
  EXPECT_EQ(pattern_state(p, net.empty_set(), 0.5).status, PatternStatus::Off);
  EXPECT_EQ(pattern_state(p, active_of(net, {"sugar"}), 0.5).status, PatternStatus::Complete);
}

}  // namespace
}  // namespace concepts
