#include "evident/ep.hpp"

#include <map>

#include "evident/error.hpp"

namespace evident {

std::string_view derivation_name(Derivation d) {
  switch (d) {
    case Derivation::kDirect:
      return "direct";
    case Derivation::kWeakened:
      return "weakened";
    case Derivation::kNegated:
      return "negated";
  }
  return "?";
}

std::string_view step_kind_name(TraceStep::Kind kind) {
  switch (kind) {
    case TraceStep::Kind::kEntails:
      return "entails";
    case TraceStep::Kind::kClassApplies:
      return "class-applies";
    case TraceStep::Kind::kCandidate:
      return "candidate";
    case TraceStep::Kind::kSkipped:
      return "skipped";
    case TraceStep::Kind::kPruned:
      return "pruned";
    case TraceStep::Kind::kResult:
      return "result";
  }
  return "?";
}

namespace {

void record(EvaluationTrace* trace, TraceStep step) {
  if (trace) trace->steps.push_back(std::move(step));
}

}  // namespace

std::vector<Candidate> candidates_for(const EvidenceBase& base, const Formula& query, EvaluationTrace* trace) {
  std::vector<Candidate> out;
  auto subject = base.signature().first_declared_constant(query);
  if (trace) trace->subject = subject;
  if (!subject) return out;
  const Formula normalized = normalize(query);
  const Formula negated = Formula::negation(query);
  const auto& stats = base.statistics();
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const auto& stat = stats[i];
    const std::string text = stat.to_string();
    const Formula reference = stat.reference_class().instantiate(*subject);
    const bool applies = base.entails(reference);
    record(trace, {TraceStep::Kind::kClassApplies, text, applies, std::nullopt, reference.to_string()});
    if (!applies) continue;

    const Formula target = stat.target_class().instantiate(*subject);
    const double lower = stat.interval.lower();
    auto add = [&](ProbabilityInterval interval, Derivation d) {
      out.push_back({i, stat, *subject, interval, d});
      record(trace, {TraceStep::Kind::kCandidate, text, true, interval, std::string(derivation_name(d))});
    };
    if (normalize(target) == normalized) {
      add(stat.interval, Derivation::kDirect);
    } else if (base.entails(Formula::negation(target))) {
      // A refuted target would entail everything.
      record(trace, {TraceStep::Kind::kSkipped, text, false, std::nullopt, "target refuted by certain evidence"});
    } else if (base.compiled().entails_given(target, query)) {
      add({lower, 1.0}, Derivation::kWeakened);
    } else if (base.compiled().entails_given(target, negated)) {
      add({0.0, 1.0 - lower}, Derivation::kNegated);
    } else {
      record(trace, {TraceStep::Kind::kSkipped, text, false, std::nullopt, "target unrelated to query"});
    }
  }
  return out;
}

std::vector<Candidate> prune_specificity(const EvidenceBase& base, const std::vector<Candidate>& candidates,
                                         EvaluationTrace* trace) {
  if (candidates.size() < 2) return candidates;
  std::map<std::pair<std::size_t, std::size_t>, bool> strict;
  auto more_specific = [&](const Candidate& a, const Candidate& b) {
    if (a.stat_index == b.stat_index) return false;
    auto key = std::make_pair(a.stat_index, b.stat_index);
    auto it = strict.find(key);
    if (it == strict.end()) {
      it = strict.emplace(key, strictly_more_specific(base, a.source.reference_class(), b.source.reference_class()))
               .first;
    }
    return it->second;
  };
  std::vector<Candidate> kept;
  for (const auto& c2 : candidates) {
    const Candidate* winner = nullptr;
    for (const auto& c1 : candidates) {
      if (!c1.interval.contains(c2.interval) && more_specific(c1, c2)) {
        winner = &c1;
        break;
      }
    }
    if (winner) {
      record(trace, {TraceStep::Kind::kPruned, c2.source.to_string(), true, c2.interval, winner->source.to_string()});
    } else {
      kept.push_back(c2);
    }
  }
  return kept;
}

Evaluation evidential_probability(const EvidenceBase& base, const Formula& query) {
  Evaluation result;
  result.trace.query = query;
  auto* trace = &result.trace;
  auto finish = [&](ProbabilityInterval interval) {
    result.interval = interval;
    record(trace, {TraceStep::Kind::kResult, query.to_string(), true, interval, {}});
    return result;
  };

  const bool certain = base.entails(query);
  record(trace, {TraceStep::Kind::kEntails, query.to_string(), certain, std::nullopt, {}});
  if (certain) return finish(ProbabilityInterval::certain_true());
  const Formula negated = Formula::negation(query);
  const bool refuted = base.entails(negated);
  record(trace, {TraceStep::Kind::kEntails, negated.to_string(), refuted, std::nullopt, {}});
  if (refuted) return finish(ProbabilityInterval::certain_false());

  auto candidates = candidates_for(base, query, trace);
  result.candidates = prune_specificity(base, candidates, trace);
  if (result.candidates.empty()) return finish(ProbabilityInterval::ignorance());
  std::vector<ProbabilityInterval> intervals;
  for (const auto& c : result.candidates) intervals.push_back(c.interval);
  return finish(interval_hull(intervals));
}

}  // namespace evident
