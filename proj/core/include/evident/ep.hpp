#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evident/evidence.hpp"
#include "evident/interval.hpp"

namespace evident {

enum class Derivation { kDirect, kWeakened, kNegated };

std::string_view derivation_name(Derivation d);

/// A statistical statement whose reference class provably contains the
/// subject, read as a bound on the probability of the query.
struct Candidate {
  std::size_t stat_index;  // position in EvidenceBase::statistics()
  StatisticalStatement source;
  std::string subject;
  ProbabilityInterval interval;
  Derivation derivation;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct TraceStep {
  enum class Kind {
    kEntails,       // certain ⊨ sentence; `holds` is the answer
    kClassApplies,  // reference class contains the subject
    kCandidate,     // candidate produced from `statement`
    kSkipped,       // statistic applies but yields no candidate; `note` says why
    kPruned,        // candidate from `statement` dropped in favour of `note`
    kResult,
  };

  Kind kind;
  std::string statement;  // sentence or statistical statement
  bool holds = false;
  std::optional<ProbabilityInterval> interval;
  std::string note;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

std::string_view step_kind_name(TraceStep::Kind kind);

struct EvaluationTrace {
  Formula query;
  std::optional<std::string> subject;
  std::vector<TraceStep> steps;

  friend bool operator==(const EvaluationTrace&, const EvaluationTrace&) = default;
};

struct Evaluation {
  ProbabilityInterval interval;
  std::vector<Candidate> candidates;  // after pruning
  EvaluationTrace trace;
};

/// Direct, weakened and negated candidates for `query`, about its first
/// declared constant. Appends steps to `trace` when given.
std::vector<Candidate> candidates_for(const EvidenceBase& base, const Formula& query,
                                      EvaluationTrace* trace = nullptr);

/// Drops every candidate for which another has a strictly more specific
/// reference class and an interval that does not contain it. Decided against
/// the input list as a whole, so the result does not depend on order beyond
/// preserving it.
std::vector<Candidate> prune_specificity(const EvidenceBase& base, const std::vector<Candidate>& candidates,
                                         EvaluationTrace* trace = nullptr);

Evaluation evidential_probability(const EvidenceBase& base, const Formula& query);

}  // namespace evident
