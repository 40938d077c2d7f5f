#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "evident/knowledge.hpp"
#include "evident/sat.hpp"

namespace evident {

/// Certain sentences plus statistical statements over a fixed signature.
/// The certain part is always consistent. Values are immutable; assert and
/// retract return new bases.
class EvidenceBase {
 public:
  /// Throws InvalidArgument if an item does not fit the signature and
  /// EvidenceConflict if the certain items are jointly inconsistent.
  EvidenceBase(Signature signature, std::vector<CertainItem> certain, std::vector<StatisticalStatement> stats,
               LogicOptions options = {});

  static EvidenceBase from_program(const KnowledgeBase& kb, LogicOptions options = {});

  const Signature& signature() const { return signature_; }
  const std::vector<CertainItem>& certain_items() const { return certain_; }
  const std::vector<StatisticalStatement>& statistics() const { return stats_; }
  const LogicOptions& options() const { return options_; }

  /// Facts plus grounded rules.
  const Theory& certain_theory() const { return ground_; }
  const CompiledTheory& compiled() const { return *compiled_; }

  bool entails(const Formula& f) const { return compiled_->entails(f); }
  bool consistent_with(const Formula& f) const { return compiled_->consistent_with(f); }

  friend bool operator==(const EvidenceBase& lhs, const EvidenceBase& rhs) {
    return lhs.signature_ == rhs.signature_ && lhs.certain_ == rhs.certain_ && lhs.stats_ == rhs.stats_;
  }

 private:
  Signature signature_;
  std::vector<CertainItem> certain_;
  std::vector<StatisticalStatement> stats_;
  LogicOptions options_;
  Theory ground_;
  std::shared_ptr<const CompiledTheory> compiled_;
};

/// Throws EvidenceConflict when a certain item would make the base
/// inconsistent, InvalidArgument when it does not fit the signature.
EvidenceBase assert_evidence(const EvidenceBase& base, const EvidenceItem& item);

/// Removes the last occurrence of `item`. Throws InvalidArgument if absent.
EvidenceBase retract_evidence(const EvidenceBase& base, const EvidenceItem& item);

/// certain ⊨ reference[constant].
bool class_applies(const EvidenceBase& base, const OpenFormula& reference, std::string_view constant);

/// For every declared constant c, certain ⊨ narrower[c] -> broader[c].
bool class_subsumes(const EvidenceBase& base, const OpenFormula& narrower, const OpenFormula& broader);

/// Subsumes one way and not the other.
bool strictly_more_specific(const EvidenceBase& base, const OpenFormula& narrower, const OpenFormula& broader);

}  // namespace evident
