#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evident/formula.hpp"
#include "evident/sat.hpp"

namespace evident {

enum class Wrapper { kPlain, kConsistent, kNormally, kProbably };

std::string_view wrapper_name(Wrapper w);

struct MHSentence {
  Wrapper wrapper = Wrapper::kPlain;
  Formula body;

  static MHSentence plain(Formula f) { return {Wrapper::kPlain, std::move(f)}; }
  static MHSentence consistent(Formula f) { return {Wrapper::kConsistent, std::move(f)}; }
  static MHSentence normally(Formula f) { return {Wrapper::kNormally, std::move(f)}; }
  static MHSentence probably(Formula f) { return {Wrapper::kProbably, std::move(f)}; }
  /// The plain sentence `false`, reachable only from an inconsistent set.
  static MHSentence contradiction() { return plain(Formula::falsity()); }

  std::string to_string() const;

  friend bool operator==(const MHSentence&, const MHSentence&) = default;
};

/// Same wrapper and normalized bodies equal.
bool same_mh_sentence(const MHSentence& lhs, const MHSentence& rhs);

/// One derivation step. Rule 0 marks a member of the initial set; rules 1-6:
///   1  plain ψ from plain premises entailing it
///   2  Consistent(b) when b is consistent with every plain sentence so far
///   3  Normally(b), Consistent(b) give Probably(b)
///   4  plain b gives Probably(b)
///   5  Probably(b1) ... Probably(bn) give Probably(b) when {b1..bn} ⊨ b
///   6  Probably(b) gives plain b
struct MHStep {
  int rule;
  std::vector<std::size_t> premises;
  MHSentence conclusion;

  friend bool operator==(const MHStep&, const MHStep&) = default;
};

enum class MHOutcome { kAllReached, kStepBoundExhausted, kSaturated };

std::string_view outcome_name(MHOutcome o);

struct DerivationTrace {
  std::vector<MHSentence> initial;
  std::set<int> rules;
  std::vector<MHSentence> goals;
  std::vector<MHStep> steps;
  std::vector<MHSentence> unreached;
  MHOutcome outcome = MHOutcome::kSaturated;
  /// First step after which the plain sentences are jointly inconsistent.
  std::optional<std::size_t> inconsistent_at;

  /// Number of steps beyond the initial set.
  std::size_t derived_steps() const;
  std::optional<std::size_t> find(const MHSentence& s) const;
};

/// Goal-directed search. Rule 1 is only used toward a wanted sentence, never
/// for free forward closure. Each pass tries the goals, then Probably for
/// every body mentioned in the initial set or the goals, then rule 6 when
/// enabled. Stops once all goals are present, after `step_bound` derived
/// steps, or when a pass adds nothing. Throws InvalidArgument on rules
/// outside 1..6 or a zero bound.
DerivationTrace mh_derive(const std::vector<MHSentence>& initial, const std::set<int>& rules,
                          const std::vector<MHSentence>& goals, std::size_t step_bound,
                          const LogicOptions& options = {});

struct ReplayResult {
  bool ok = true;
  std::size_t step = 0;  // first failing step when !ok
  std::string reason;
};

/// Re-checks every step's premises and rule condition from scratch.
ReplayResult replay(const DerivationTrace& trace, const LogicOptions& options = {});

}  // namespace evident
