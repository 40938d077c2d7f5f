#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "evident/formula.hpp"
#include "evident/interval.hpp"
#include "evident/signature.hpp"

namespace evident {

/// "%x(target | reference) in [l, u]": the frequency of `target` among
/// individuals satisfying `reference`.
struct StatisticalStatement {
  std::string variable;
  Formula target;
  Formula reference;
  ProbabilityInterval interval;

  OpenFormula target_class() const { return {variable, target}; }
  OpenFormula reference_class() const { return {variable, reference}; }
  std::string to_string() const;

  friend bool operator==(const StatisticalStatement&, const StatisticalStatement&) = default;
};

/// Default rule `prerequisite : M j1, ..., M jn / consequent`. An absent
/// prerequisite means `true`.
struct Default {
  std::optional<Formula> prerequisite;
  std::vector<Formula> justifications;
  Formula consequent;

  std::string to_string() const;

  friend bool operator==(const Default&, const Default&) = default;
};

/// A certain sentence: a ground formula or a universal rule.
using CertainItem = std::variant<Formula, UniversalRule>;

/// Anything that can be asserted into or retracted from evidence.
using EvidenceItem = std::variant<Formula, UniversalRule, StatisticalStatement>;

std::string item_to_string(const EvidenceItem& item);

/// Result of parsing a knowledge-language program.
struct KnowledgeBase {
  Signature signature;
  std::vector<CertainItem> certain;
  std::vector<StatisticalStatement> stats;
  std::vector<Default> defaults;

  /// Facts plus every rule grounded over the declared constants, in
  /// declaration order.
  Theory ground_theory() const;
};

/// Ground expansion of certain items over `constants`.
Theory ground_items(const std::vector<CertainItem>& items, const std::vector<std::string>& constants);

}  // namespace evident
