#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "evident/acceptance.hpp"
#include "evident/default_logic.hpp"
#include "evident/evidence.hpp"
#include "evident/mh_rules.hpp"

namespace evident {

/// Numbers standing in for qualitative frequencies ("almost all birds fly")
/// and the acceptance levels used with them.
struct Renderings {
  double flies_given_bird = 0.95;
  double pacifist_given_quaker = 0.9;
  double nonpacifist_given_republican = 0.9;
  double hometown_given_spouse = 0.99;
  double hometown_given_employer = 0.99;

  double tweety_epsilon = 0.05;
  double nixon_epsilon = 0.1;
  double cohabitation_epsilon = 0.01;
  double lottery_min_epsilon = 0.05;
  double measurement_epsilon = 0.01;
};

struct MeasurementModel {
  std::size_t count = 10000;
  double tolerance = 0.05;
  double error_prob = 0.001;

  /// 1 - (1 - p)^N: chance that at least one of N independent measurements
  /// errs. The independence assumption lives here only.
  double batch_error_lower() const;
  /// Throws InvalidArgument unless count >= 1, tolerance > 0, 0 < p < 1.
  void validate() const;
};

struct ScenarioRequest {
  std::string name;             // tweety, nixon, cohabitation, lottery, measurement
  std::size_t lottery_size = 4;  // lottery only, at least 2
  MeasurementModel measurement;
  Renderings renderings;
  std::optional<double> epsilon;  // overrides the scenario's own level
};

struct Stage {
  std::string label;
  std::optional<std::size_t> parent;   // stage this one extends
  std::optional<EvidenceItem> added;   // item asserted on top of the parent
  EvidenceBase base;
  std::string program;                 // knowledge-language text of this stage
};

struct MHSetup {
  std::string label;
  std::vector<MHSentence> initial;
  std::set<int> rules;
  std::vector<MHSentence> goals;
  std::size_t step_bound;
};

struct ExpectAcceptance {
  std::string description;
  std::size_t stage;
  std::vector<Formula> sentences;
  bool accepted;
  std::optional<ProbabilityInterval> interval;  // exact match when given
};

struct ExpectDiff {
  std::string description;
  std::size_t from;
  std::size_t to;
  std::vector<Formula> retracted;     // exactly
  std::vector<Formula> added_at_least;
};

struct ExpectCorpus {
  std::string description;
  std::size_t stage;
  bool jointly_consistent;
  std::optional<std::size_t> core_size;  // size of the first minimal core
  bool no_single_premise_violations = true;
  std::vector<Formula> conjunctions_rejected;
};

struct ExpectExtensions {
  std::string description;
  std::size_t count;
  std::optional<std::size_t> consequents_each;
  std::vector<Formula> in_none;  // entailed by no extension
};

struct ExpectDerivation {
  std::string description;
  std::size_t setup;
  bool all_reached;
  bool inconsistency_flagged;
};

struct ExpectSeriousPossibility {
  std::string description;
  std::size_t stage;
  Formula sentence;
  bool possible;
};

using Expectation = std::variant<ExpectAcceptance, ExpectDiff, ExpectCorpus, ExpectExtensions, ExpectDerivation,
                                 ExpectSeriousPossibility>;

std::string_view expectation_description(const Expectation& e);

struct Scenario {
  std::string name;
  AcceptanceLevel level;
  std::vector<Stage> stages;
  std::vector<Formula> universe;
  std::optional<std::size_t> default_stage;  // stage whose certain part is W
  std::vector<Default> defaults;
  std::vector<MHSetup> mh;
  std::vector<Expectation> manifest;

  std::optional<DefaultTheory> default_theory() const;
  /// Index of the stage with this label, if any.
  std::optional<std::size_t> stage_index(std::string_view label) const;
};

/// Throws InvalidArgument on an unknown name or invalid parameters.
Scenario build_scenario(const ScenarioRequest& request);

struct ManifestResult {
  std::string description;
  bool pass;
  std::string detail;
};

/// Evaluates every manifest entry against the live engines.
std::vector<ManifestResult> check_manifest(const Scenario& scenario);

enum class Act { kUse, kDiscard };

std::string_view act_name(Act a);

struct EUComparison {
  double use_value;  // expected utility of USE for one measurement
  Act acceptance_decision;
  Act probabilistic_decision;
  double eu_acceptance;
  double eu_probabilistic;
};

/// Per measurement, USE is worth (1 - p) gain - p loss and DISCARD 0. The
/// acceptance policy uses a measurement iff "it is within tolerance" is
/// accepted at epsilon; the probabilistic policy iff USE has positive value.
/// Throws InvalidArgument unless gain, loss > 0, 0 < p < 1, and epsilon is a
/// valid acceptance level.
EUComparison expected_utility_comparison(std::size_t count, double error_prob, double gain, double loss,
                                         double epsilon);

}  // namespace evident
