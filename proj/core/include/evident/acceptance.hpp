#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evident/ep.hpp"
#include "evident/evidence.hpp"

namespace evident {

/// Rounding allowance when comparing a lower bound with 1 - epsilon, so that
/// 0.95 >= 1 - 0.05 holds despite binary representation.
inline constexpr double kThresholdSlack = 1e-12;

/// Acceptance at risk epsilon: a sentence is accepted when its lower
/// probability is at least 1 - epsilon.
class AcceptanceLevel {
 public:
  /// Throws InvalidArgument unless 0 < epsilon < 0.5.
  explicit AcceptanceLevel(double epsilon = 0.01);

  double epsilon() const { return epsilon_; }
  double threshold() const { return 1.0 - epsilon_; }
  bool admits(const ProbabilityInterval& interval) const {
    return interval.lower() + kThresholdSlack >= threshold();
  }

  friend bool operator==(const AcceptanceLevel&, const AcceptanceLevel&) = default;

 private:
  double epsilon_;
};

bool is_accepted(const EvidenceBase& base, const Formula& sentence, const AcceptanceLevel& level);

struct Judgement {
  Formula sentence;
  Evaluation evaluation;
  bool accepted;
};

/// Evaluates every universe member, in parallel when `threads` > 1 (0 picks
/// the hardware concurrency). Results are in universe order.
std::vector<Judgement> judge_universe(const EvidenceBase& base, const AcceptanceLevel& level,
                                      const std::vector<Formula>& universe, std::size_t threads = 0);

struct CorpusEntry {
  Formula sentence;
  ProbabilityInterval interval;
  EvaluationTrace trace;
};

/// The accepted members of a query universe.
struct Corpus {
  AcceptanceLevel level;
  std::string universe_id;
  std::vector<CorpusEntry> entries;

  bool contains(const Formula& sentence) const;
  std::vector<Formula> sentences() const;
};

Corpus accepted_set(const EvidenceBase& base, const AcceptanceLevel& level, const std::vector<Formula>& universe,
                    std::string universe_id = {}, std::size_t threads = 0);

Corpus corpus_of(const std::vector<Judgement>& judgements, const AcceptanceLevel& level,
                 std::string universe_id = {});

struct UpdateDiff {
  std::vector<Formula> added;
  std::vector<Formula> retracted;
  std::size_t unchanged = 0;               // accepted both before and after
  std::vector<Formula> interval_changed;  // any change to the interval at all
};

/// Compares two judgements of the same universe.
UpdateDiff diff_judgements(const std::vector<Judgement>& before, const std::vector<Judgement>& after);

/// Accepted sets before and after asserting `item`. Assertion errors propagate.
UpdateDiff update_diff(const EvidenceBase& base, const EvidenceItem& item, const AcceptanceLevel& level,
                       const std::vector<Formula>& universe);

/// False iff a single corpus member, together with the certain evidence,
/// contradicts `sentence`.
bool serious_possibility(const EvidenceBase& base, const Corpus& corpus, const Formula& sentence);
bool serious_possibility(const EvidenceBase& base, const AcceptanceLevel& level,
                         const std::vector<Formula>& universe, const Formula& sentence);

struct ConjunctionCheck {
  Formula conjunction;
  bool accepted;
};

struct CorpusReport {
  bool jointly_consistent = true;
  /// Minimal inconsistent subsets of the corpus given the certain evidence.
  std::vector<std::vector<Formula>> cores;
  /// (premise, consequence): premise accepted, {premise} ⊨ consequence,
  /// consequence in the universe and not accepted.
  std::vector<std::pair<Formula, Formula>> single_premise_violations;
  /// Universe conjunctions all of whose conjuncts are accepted.
  std::vector<ConjunctionCheck> conjunction_closure;
};

struct ReportOptions {
  std::size_t core_limit = 1;  // 0 skips core extraction
  std::size_t threads = 0;
};

CorpusReport corpus_report(const EvidenceBase& base, const Corpus& corpus, const std::vector<Formula>& universe,
                           const ReportOptions& options = {});
CorpusReport corpus_report(const EvidenceBase& base, const AcceptanceLevel& level,
                           const std::vector<Formula>& universe, const ReportOptions& options = {});

}  // namespace evident
