#include "evident/mh_rules.hpp"

#include <algorithm>

#include "evident/error.hpp"

namespace evident {

std::string_view wrapper_name(Wrapper w) {
  switch (w) {
    case Wrapper::kPlain:
      return "plain";
    case Wrapper::kConsistent:
      return "Consistent";
    case Wrapper::kNormally:
      return "Normally";
    case Wrapper::kProbably:
      return "Probably";
  }
  return "?";
}

std::string_view outcome_name(MHOutcome o) {
  switch (o) {
    case MHOutcome::kAllReached:
      return "all-reached";
    case MHOutcome::kStepBoundExhausted:
      return "step-bound-exhausted";
    case MHOutcome::kSaturated:
      return "saturated";
  }
  return "?";
}

std::string MHSentence::to_string() const {
  if (wrapper == Wrapper::kPlain) return body.to_string();
  return std::string(wrapper_name(wrapper)) + "(" + body.to_string() + ")";
}

bool same_mh_sentence(const MHSentence& lhs, const MHSentence& rhs) {
  return lhs.wrapper == rhs.wrapper && same_sentence(lhs.body, rhs.body);
}

std::size_t DerivationTrace::derived_steps() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const MHStep& s) { return s.rule != 0; }));
}

std::optional<std::size_t> DerivationTrace::find(const MHSentence& s) const {
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (same_mh_sentence(steps[i].conclusion, s)) return i;
  return std::nullopt;
}

namespace {

bool pure_entails(const std::vector<Formula>& premises, const Formula& goal, const LogicOptions& options) {
  return CompiledTheory::compile(premises, options)->entails(goal);
}

// Deletion from the back: drops every premise not needed for the entailment,
// keeping at least one so that rule 5 always cites a Probably sentence.
std::vector<std::size_t> minimize(std::vector<std::size_t> chosen, const std::vector<Formula>& bodies,
                                  const Formula& goal, const LogicOptions& options) {
  for (std::size_t k = chosen.size(); k-- > 0 && chosen.size() > 1;) {
    std::vector<Formula> rest;
    for (std::size_t j = 0; j < chosen.size(); ++j)
      if (j != k) rest.push_back(bodies[chosen[j]]);
    if (pure_entails(rest, goal, options)) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return chosen;
}

class Deriver {
 public:
  Deriver(DerivationTrace& trace, std::size_t bound, const LogicOptions& options)
      : trace_(trace), bound_(bound), options_(options) {}

  bool enabled(int rule) const { return trace_.rules.count(rule) > 0; }
  bool exhausted() const { return trace_.derived_steps() >= bound_; }
  bool has(const MHSentence& s) const { return trace_.find(s).has_value(); }

  std::size_t emit(int rule, std::vector<std::size_t> premises, MHSentence conclusion) {
    trace_.steps.push_back({rule, std::move(premises), std::move(conclusion)});
    const std::size_t index = trace_.steps.size() - 1;
    if (trace_.steps.back().conclusion.wrapper == Wrapper::kPlain && !trace_.inconsistent_at) {
      if (!CompiledTheory::compile(plain_bodies(), options_)->satisfiable()) trace_.inconsistent_at = index;
    }
    return index;
  }

  std::vector<std::size_t> plain_steps() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < trace_.steps.size(); ++i)
      if (trace_.steps[i].conclusion.wrapper == Wrapper::kPlain) out.push_back(i);
    return out;
  }

  std::vector<Formula> plain_bodies() const {
    std::vector<Formula> out;
    for (std::size_t i : plain_steps()) out.push_back(trace_.steps[i].conclusion.body);
    return out;
  }

  // Attempts to add `goal`; returns its step index, or nullopt.
  std::optional<std::size_t> derive(const MHSentence& goal) {
    if (auto i = trace_.find(goal)) return i;
    if (exhausted()) return std::nullopt;
    switch (goal.wrapper) {
      case Wrapper::kPlain:
        return derive_plain(goal.body);
      case Wrapper::kConsistent:
        return derive_consistent(goal.body);
      case Wrapper::kProbably:
        return derive_probably(goal.body);
      case Wrapper::kNormally:
        return std::nullopt;
    }
    return std::nullopt;
  }

  // Rule 6 on every Probably sentence lacking a plain counterpart.
  bool detach_all() {
    if (!enabled(6)) return false;
    bool progress = false;
    for (std::size_t i = 0; i < trace_.steps.size() && !exhausted(); ++i) {
      const auto& c = trace_.steps[i].conclusion;
      if (c.wrapper != Wrapper::kProbably) continue;
      MHSentence plain = MHSentence::plain(c.body);
      if (has(plain)) continue;
      emit(6, {i}, std::move(plain));
      progress = true;
    }
    return progress;
  }

 private:
  std::optional<std::size_t> derive_plain(const Formula& body) {
    if (!enabled(1)) return std::nullopt;
    const auto steps = plain_steps();
    std::vector<Formula> bodies;
    for (std::size_t i : steps) bodies.push_back(trace_.steps[i].conclusion.body);
    if (!pure_entails(bodies, body, options_)) return std::nullopt;
    std::vector<std::size_t> all(steps.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    std::vector<std::size_t> premises;
    for (std::size_t k : minimize(all, bodies, body, options_)) premises.push_back(steps[k]);
    return emit(1, std::move(premises), MHSentence::plain(body));
  }

  bool consistent_now(const Formula& body) const {
    auto bodies = plain_bodies();
    bodies.push_back(body);
    return CompiledTheory::compile(bodies, options_)->satisfiable();
  }

  std::optional<std::size_t> derive_consistent(const Formula& body) {
    if (!enabled(2) || !consistent_now(body)) return std::nullopt;
    return emit(2, plain_steps(), MHSentence::consistent(body));
  }

  // Ways to obtain Probably(b) without rule 5.
  enum class Route { kPresent, kNormally, kPlain, kNone };

  Route route_for(const Formula& body) const {
    if (has(MHSentence::probably(body))) return Route::kPresent;
    if (enabled(4) && has(MHSentence::plain(body))) return Route::kPlain;
    if (enabled(3) && has(MHSentence::normally(body)) &&
        (has(MHSentence::consistent(body)) || (enabled(2) && consistent_now(body)))) {
      return Route::kNormally;
    }
    return Route::kNone;
  }

  std::optional<std::size_t> realize(const Formula& body, Route route) {
    switch (route) {
      case Route::kPresent:
        return trace_.find(MHSentence::probably(body));
      case Route::kPlain: {
        if (exhausted()) return std::nullopt;
        const auto premise = *trace_.find(MHSentence::plain(body));
        return emit(4, {premise}, MHSentence::probably(body));
      }
      case Route::kNormally: {
        auto consistent = trace_.find(MHSentence::consistent(body));
        if (!consistent) consistent = derive_consistent(body);
        if (!consistent || exhausted()) return std::nullopt;
        const auto normally = *trace_.find(MHSentence::normally(body));
        return emit(3, {normally, *consistent}, MHSentence::probably(body));
      }
      case Route::kNone:
        break;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> derive_probably(const Formula& body) {
    if (Route r = route_for(body); r != Route::kNone) return realize(body, r);
    if (!enabled(5)) return std::nullopt;

    // Candidate premises: existing Probably bodies, then bodies reachable by
    // rule 3, then plain bodies liftable by rule 4.
    std::vector<Formula> bodies;
    std::vector<Route> routes;
    auto offer = [&](const Formula& b, Route r) {
      if (std::any_of(bodies.begin(), bodies.end(), [&](const Formula& x) { return same_sentence(x, b); })) return;
      bodies.push_back(b);
      routes.push_back(r);
    };
    for (const auto& s : trace_.steps)
      if (s.conclusion.wrapper == Wrapper::kProbably) offer(s.conclusion.body, Route::kPresent);
    for (const auto& s : trace_.steps) {
      if (s.conclusion.wrapper != Wrapper::kNormally) continue;
      if (route_for(s.conclusion.body) == Route::kNormally) offer(s.conclusion.body, Route::kNormally);
    }
    if (enabled(4)) {
      for (const auto& s : trace_.steps)
        if (s.conclusion.wrapper == Wrapper::kPlain) offer(s.conclusion.body, Route::kPlain);
    }
    if (bodies.empty() || !pure_entails(bodies, body, options_)) return std::nullopt;
    std::vector<std::size_t> all(bodies.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    std::vector<std::size_t> premises;
    for (std::size_t k : minimize(all, bodies, body, options_)) {
      auto index = realize(bodies[k], route_for(bodies[k]));
      if (!index) return std::nullopt;
      premises.push_back(*index);
    }
    if (exhausted()) return std::nullopt;
    return emit(5, std::move(premises), MHSentence::probably(body));
  }

  DerivationTrace& trace_;
  std::size_t bound_;
  const LogicOptions& options_;
};

}  // namespace

DerivationTrace mh_derive(const std::vector<MHSentence>& initial, const std::set<int>& rules,
                          const std::vector<MHSentence>& goals, std::size_t step_bound,
                          const LogicOptions& options) {
  if (step_bound == 0) throw InvalidArgument("step bound must be at least 1");
  for (int r : rules)
    if (r < 1 || r > 6) throw InvalidArgument("rule " + std::to_string(r) + " does not exist; rules are 1-6");

  DerivationTrace trace;
  trace.initial = initial;
  trace.rules = rules;
  trace.goals = goals;
  Deriver deriver(trace, step_bound, options);
  for (const auto& s : initial)
    if (!deriver.has(s)) deriver.emit(0, {}, s);

  std::vector<Formula> pool;
  auto add_pool = [&](const Formula& f) {
    if (std::none_of(pool.begin(), pool.end(), [&](const Formula& x) { return same_sentence(x, f); }))
      pool.push_back(f);
  };
  for (const auto& s : initial) add_pool(s.body);
  for (const auto& g : goals) add_pool(g.body);

  auto all_reached = [&] {
    return std::all_of(goals.begin(), goals.end(), [&](const MHSentence& g) { return deriver.has(g); });
  };

  while (true) {
    const std::size_t before = trace.steps.size();
    for (const auto& g : goals) deriver.derive(g);
    if (all_reached()) {
      trace.outcome = MHOutcome::kAllReached;
      break;
    }
    for (const auto& body : pool) {
      // Probably of a plain sentence adds nothing rule 6 could use.
      if (deriver.has(MHSentence::plain(body))) continue;
      deriver.derive(MHSentence::probably(body));
    }
    deriver.detach_all();
    if (all_reached()) {
      trace.outcome = MHOutcome::kAllReached;
      break;
    }
    if (deriver.exhausted()) {
      trace.outcome = MHOutcome::kStepBoundExhausted;
      break;
    }
    if (trace.steps.size() == before) {
      trace.outcome = MHOutcome::kSaturated;
      break;
    }
  }
  for (const auto& g : goals)
    if (!deriver.has(g)) trace.unreached.push_back(g);
  return trace;
}

ReplayResult replay(const DerivationTrace& trace, const LogicOptions& options) {
  auto fail = [](std::size_t step, std::string reason) { return ReplayResult{false, step, std::move(reason)}; };
  std::optional<std::size_t> inconsistent_at;
  std::vector<Formula> plain;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    const auto& c = step.conclusion;
    if (step.rule != 0 && !trace.rules.count(step.rule)) return fail(i, "rule not enabled");
    for (std::size_t p : step.premises)
      if (p >= i) return fail(i, "premise does not precede its step");
    auto premise = [&](std::size_t k) -> const MHSentence& { return trace.steps[step.premises[k]].conclusion; };
    auto premise_bodies = [&] {
      std::vector<Formula> out;
      for (std::size_t k = 0; k < step.premises.size(); ++k) out.push_back(premise(k).body);
      return out;
    };
    auto all_wrapped = [&](Wrapper w) {
      for (std::size_t k = 0; k < step.premises.size(); ++k)
        if (premise(k).wrapper != w) return false;
      return true;
    };

    switch (step.rule) {
      case 0:
        if (std::none_of(trace.initial.begin(), trace.initial.end(),
                         [&](const MHSentence& s) { return s == c; }))
          return fail(i, "not a member of the initial set");
        break;
      case 1:
        if (c.wrapper != Wrapper::kPlain || !all_wrapped(Wrapper::kPlain))
          return fail(i, "rule 1 needs plain premises and conclusion");
        if (!pure_entails(premise_bodies(), c.body, options)) return fail(i, "premises do not entail conclusion");
        break;
      case 2: {
        if (c.wrapper != Wrapper::kConsistent) return fail(i, "rule 2 concludes Consistent");
        std::vector<std::size_t> expected;
        for (std::size_t k = 0; k < i; ++k)
          if (trace.steps[k].conclusion.wrapper == Wrapper::kPlain) expected.push_back(k);
        if (step.premises != expected) return fail(i, "rule 2 must cite every earlier plain sentence");
        auto bodies = premise_bodies();
        bodies.push_back(c.body);
        if (!CompiledTheory::compile(bodies, options)->satisfiable()) return fail(i, "body inconsistent");
        break;
      }
      case 3:
        if (c.wrapper != Wrapper::kProbably || step.premises.size() != 2 ||
            !same_mh_sentence(premise(0), MHSentence::normally(c.body)) ||
            !same_mh_sentence(premise(1), MHSentence::consistent(c.body)))
          return fail(i, "rule 3 needs Normally(b) and Consistent(b)");
        break;
      case 4:
        if (c.wrapper != Wrapper::kProbably || step.premises.size() != 1 ||
            !same_mh_sentence(premise(0), MHSentence::plain(c.body)))
          return fail(i, "rule 4 needs plain b");
        break;
      case 5:
        if (c.wrapper != Wrapper::kProbably || step.premises.empty() || !all_wrapped(Wrapper::kProbably))
          return fail(i, "rule 5 needs Probably premises");
        if (!pure_entails(premise_bodies(), c.body, options)) return fail(i, "premises do not entail conclusion");
        break;
      case 6:
        if (c.wrapper != Wrapper::kPlain || step.premises.size() != 1 ||
            !same_mh_sentence(premise(0), MHSentence::probably(c.body)))
          return fail(i, "rule 6 needs Probably(b)");
        break;
      default:
        return fail(i, "unknown rule");
    }
    if (c.wrapper == Wrapper::kPlain) {
      plain.push_back(c.body);
      if (!inconsistent_at && !CompiledTheory::compile(plain, options)->satisfiable()) inconsistent_at = i;
    }
  }
  if (inconsistent_at != trace.inconsistent_at) return fail(trace.steps.size(), "inconsistency flag mismatch");
  return {};
}

}  // namespace evident
