#include "evident/evidence.hpp"

#include <algorithm>

#include "evident/error.hpp"

namespace evident {

namespace {

void check_item(const Signature& sig, const EvidenceItem& item) {
  std::optional<std::string> problem;
  if (const auto* f = std::get_if<Formula>(&item)) {
    problem = sig.check(*f);
  } else if (const auto* r = std::get_if<UniversalRule>(&item)) {
    problem = sig.check(r->antecedent, r->variable);
    if (!problem) problem = sig.check(r->consequent, r->variable);
  } else {
    const auto& s = std::get<StatisticalStatement>(item);
    problem = sig.check(s.target, s.variable);
    if (!problem) problem = sig.check(s.reference, s.variable);
  }
  if (problem) throw InvalidArgument(item_to_string(item) + ": " + *problem);
}

EvidenceItem as_evidence(const CertainItem& item) {
  return std::visit([](const auto& v) { return EvidenceItem(v); }, item);
}

}  // namespace

EvidenceBase::EvidenceBase(Signature signature, std::vector<CertainItem> certain,
                           std::vector<StatisticalStatement> stats, LogicOptions options)
    : signature_(std::move(signature)),
      certain_(std::move(certain)),
      stats_(std::move(stats)),
      options_(options) {
  for (const auto& item : certain_) check_item(signature_, as_evidence(item));
  for (const auto& s : stats_) check_item(signature_, s);
  ground_ = ground_items(certain_, signature_.constants());
  compiled_ = CompiledTheory::compile(ground_, options_);
  if (!compiled_->satisfiable()) throw EvidenceConflict("certain evidence is inconsistent");
}

EvidenceBase EvidenceBase::from_program(const KnowledgeBase& kb, LogicOptions options) {
  return EvidenceBase(kb.signature, kb.certain, kb.stats, options);
}

EvidenceBase assert_evidence(const EvidenceBase& base, const EvidenceItem& item) {
  check_item(base.signature(), item);
  auto certain = base.certain_items();
  auto stats = base.statistics();
  if (const auto* s = std::get_if<StatisticalStatement>(&item)) {
    stats.push_back(*s);
  } else {
    if (const auto* f = std::get_if<Formula>(&item)) {
      certain.emplace_back(*f);
    } else {
      certain.emplace_back(std::get<UniversalRule>(item));
    }
    const Theory extra = ground_items({certain.back()}, base.signature().constants());
    if (!base.compiled().satisfiable_with(extra)) {
      throw EvidenceConflict("asserting " + item_to_string(item) + " makes the certain evidence inconsistent");
    }
  }
  return EvidenceBase(base.signature(), std::move(certain), std::move(stats), base.options());
}

EvidenceBase retract_evidence(const EvidenceBase& base, const EvidenceItem& item) {
  auto certain = base.certain_items();
  auto stats = base.statistics();
  bool found = false;
  if (const auto* s = std::get_if<StatisticalStatement>(&item)) {
    auto it = std::find(stats.rbegin(), stats.rend(), *s);
    if (it != stats.rend()) {
      stats.erase(std::next(it).base());
      found = true;
    }
  } else {
    auto it = std::find_if(certain.rbegin(), certain.rend(),
                           [&](const CertainItem& c) { return as_evidence(c) == item; });
    if (it != certain.rend()) {
      certain.erase(std::next(it).base());
      found = true;
    }
  }
  if (!found) throw InvalidArgument("cannot retract " + item_to_string(item) + ": not in the evidence");
  return EvidenceBase(base.signature(), std::move(certain), std::move(stats), base.options());
}

bool class_applies(const EvidenceBase& base, const OpenFormula& reference, std::string_view constant) {
  return base.entails(reference.instantiate(constant));
}

bool class_subsumes(const EvidenceBase& base, const OpenFormula& narrower, const OpenFormula& broader) {
  for (const auto& c : base.signature().constants()) {
    if (!base.compiled().entails_given(narrower.instantiate(c), broader.instantiate(c))) return false;
  }
  return true;
}

bool strictly_more_specific(const EvidenceBase& base, const OpenFormula& narrower, const OpenFormula& broader) {
  return class_subsumes(base, narrower, broader) && !class_subsumes(base, broader, narrower);
}

}  // namespace evident
