#include "evident/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "evident/error.hpp"
#include "evident/logic.hpp"
#include "evident/parser.hpp"
#include "evident/program_text.hpp"

namespace evident {

double MeasurementModel::batch_error_lower() const {
  return -std::expm1(static_cast<double>(count) * std::log1p(-error_prob));
}

void MeasurementModel::validate() const {
  if (count < 1) throw InvalidArgument("measurement count must be at least 1");
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (!(error_prob > 0.0 && error_prob < 1.0)) throw InvalidArgument("error probability must lie in (0, 1)");
}

std::string_view expectation_description(const Expectation& e) {
  return std::visit([](const auto& x) -> std::string_view { return x.description; }, e);
}

std::optional<DefaultTheory> Scenario::default_theory() const {
  if (!default_stage) return std::nullopt;
  return DefaultTheory{stages[*default_stage].base.certain_theory(), defaults};
}

std::optional<std::size_t> Scenario::stage_index(std::string_view label) const {
  for (std::size_t i = 0; i < stages.size(); ++i)
    if (stages[i].label == label) return i;
  return std::nullopt;
}

namespace {

class Builder {
 public:
  Builder(std::string name, double epsilon, const std::optional<double>& override_epsilon)
      : scenario_{std::move(name), AcceptanceLevel(override_epsilon.value_or(epsilon)), {}, {}, {}, {}, {}, {}} {}

  // Parses the base program; its defaults become the scenario's defaults.
  std::size_t base(const std::string& text, LogicOptions options = {}) {
    KnowledgeBase kb = parse_program(text);
    scenario_.defaults = kb.defaults;
    EvidenceBase base = EvidenceBase::from_program(kb, options);
    scenario_.stages.push_back({"base", std::nullopt, std::nullopt, base, text});
    return 0;
  }

  std::size_t extend(std::size_t parent, std::string label, const std::string& item_text) {
    const auto& prev = scenario_.stages.at(parent).base;
    EvidenceItem item = parse_item(item_text, prev.signature());
    EvidenceBase next = assert_evidence(prev, item);
    std::string text =
        program_text(next.signature(), next.certain_items(), next.statistics(), scenario_.defaults);
    scenario_.stages.push_back({std::move(label), parent, item, std::move(next), std::move(text)});
    return scenario_.stages.size() - 1;
  }

  Formula formula(const std::string& text) const {
    return parse_formula(text, scenario_.stages.front().base.signature());
  }

  std::vector<Formula> formulas(std::initializer_list<const char*> texts) const {
    std::vector<Formula> out;
    for (const char* t : texts) out.push_back(formula(t));
    return out;
  }

  Scenario& get() { return scenario_; }

 private:
  Scenario scenario_;
};

std::string num(double v) { return exact_number(v); }

Scenario tweety(const ScenarioRequest& req) {
  const auto& r = req.renderings;
  Builder b("tweety", r.tweety_epsilon, req.epsilon);
  std::ostringstream text;
  text << "# Birds, penguins and flying.\n"
       << "const tweety, other.\n"
       << "pred bird/1.\npred penguin/1.\npred flies/1.\n"
       << "rule all x: penguin(x) -> bird(x).\n"
       << "rule all x: penguin(x) -> ~flies(x).\n"
       << "stat x: flies(x) | bird(x) in [" << num(r.flies_given_bird) << ", 1].\n"
       << "default bird(tweety) : M flies(tweety) / flies(tweety).\n";
  b.base(text.str());
  const auto bird = b.extend(0, "bird", "fact bird(tweety).");
  const auto penguin = b.extend(bird, "penguin", "fact penguin(tweety).");
  auto& s = b.get();
  s.universe = b.formulas({"flies(tweety)", "~flies(tweety)", "bird(tweety)", "penguin(tweety)"});
  s.default_stage = penguin;
  const Formula flies = b.formula("flies(tweety)");
  const Formula grounded = b.formula("~flies(tweety)");
  const bool flies_ok = s.level.admits({r.flies_given_bird, 1.0});
  s.manifest = {
      ExpectAcceptance{"with no evidence about tweety, flies(tweety) is not accepted", 0, {flies}, false,
                       ProbabilityInterval::ignorance()},
      ExpectAcceptance{"once tweety is a bird, flies(tweety) gets the bird interval", bird, {flies}, flies_ok,
                       ProbabilityInterval(r.flies_given_bird, 1.0)},
      ExpectDiff{"learning penguin(tweety) retracts flies(tweety) and adds ~flies(tweety)", bird, penguin, {flies},
                 {grounded, b.formula("penguin(tweety)")}},
      ExpectAcceptance{"a penguin certainly does not fly", penguin, {flies}, false,
                       ProbabilityInterval::certain_false()},
      ExpectCorpus{"the penguin-stage corpus is consistent", penguin, true, std::nullopt, true, {}},
      ExpectExtensions{"the default theory has one extension, without flies(tweety)", 1, std::nullopt, {flies}},
  };
  return std::move(s);
}

Scenario nixon(const ScenarioRequest& req) {
  const auto& r = req.renderings;
  Builder b("nixon", r.nixon_epsilon, req.epsilon);
  std::ostringstream text;
  text << "# Quakers are mostly pacifists, republicans mostly not.\n"
       << "const nixon, other.\n"
       << "pred quaker/1.\npred republican/1.\npred pacifist/1.\n"
       << "stat x: pacifist(x) | quaker(x) in [" << num(r.pacifist_given_quaker) << ", 1].\n"
       << "stat x: ~pacifist(x) | republican(x) in [" << num(r.nonpacifist_given_republican) << ", 1].\n"
       << "default quaker(nixon) : M pacifist(nixon) / pacifist(nixon).\n"
       << "default republican(nixon) : M ~pacifist(nixon) / ~pacifist(nixon).\n";
  b.base(text.str());
  const auto quaker = b.extend(0, "quaker", "fact quaker(nixon).");
  const auto both = b.extend(quaker, "quaker-republican", "fact republican(nixon).");
  const auto republican = b.extend(0, "republican", "fact republican(nixon).");
  auto& s = b.get();
  const Formula pacifist = b.formula("pacifist(nixon)");
  const Formula hawk = b.formula("~pacifist(nixon)");
  s.universe = {pacifist, hawk};
  s.default_stage = both;
  s.manifest = {
      ExpectAcceptance{"a quaker is accepted as a pacifist", quaker, {pacifist},
                       s.level.admits({r.pacifist_given_quaker, 1.0}), std::nullopt},
      ExpectAcceptance{"a republican is accepted as a non-pacifist", republican, {hawk},
                       s.level.admits({r.nonpacifist_given_republican, 1.0}), std::nullopt},
      ExpectAcceptance{"with both classes, pacifist(nixon) is [0, 1] and not accepted", both, {pacifist}, false,
                       ProbabilityInterval::ignorance()},
      ExpectAcceptance{"with both classes, ~pacifist(nixon) is not accepted either", both, {hawk}, false,
                       std::nullopt},
      ExpectDiff{"learning republican(nixon) retracts pacifist(nixon)", quaker, both, {pacifist}, {}},
      ExpectExtensions{"the default theory has two extensions", 2, 1, {}},
  };
  return std::move(s);
}

Scenario cohabitation(const ScenarioRequest& req) {
  const auto& r = req.renderings;
  Builder b("cohabitation", r.cohabitation_epsilon, req.epsilon);
  std::ostringstream text;
  text << "# Married people usually live where their spouse does; employed people\n"
       << "# usually live where their employer is. Hometowns are encoded per city.\n"
       << "const john, other.\n";
  for (const char* p : {"married", "employed", "spouse_ht_toronto", "spouse_ht_vancouver", "employer_loc_toronto",
                        "employer_loc_vancouver", "ht_toronto", "ht_vancouver"})
    text << "pred " << p << "/1.\n";
  text << "rule all x: ht_toronto(x) -> ~ht_vancouver(x).\n"
       << "rule all x: spouse_ht_toronto(x) -> ~spouse_ht_vancouver(x).\n"
       << "rule all x: employer_loc_toronto(x) -> ~employer_loc_vancouver(x).\n"
       << "fact married(john).\nfact employed(john).\n"
       << "fact spouse_ht_toronto(john).\nfact employer_loc_vancouver(john).\n"
       << "stat x: (spouse_ht_toronto(x) & ht_toronto(x)) v (spouse_ht_vancouver(x) & ht_vancouver(x)) | married(x)"
       << " in [" << num(r.hometown_given_spouse) << ", 1].\n"
       << "stat x: (employer_loc_toronto(x) & ht_toronto(x)) v (employer_loc_vancouver(x) & ht_vancouver(x))"
       << " | employed(x) in [" << num(r.hometown_given_employer) << ", 1].\n"
       << "default married(john) & spouse_ht_toronto(john) : M ht_toronto(john) / ht_toronto(john).\n"
       << "default married(john) & spouse_ht_vancouver(john) : M ht_vancouver(john) / ht_vancouver(john).\n"
       << "default employed(john) & employer_loc_toronto(john) : M ht_toronto(john) / ht_toronto(john).\n"
       << "default employed(john) & employer_loc_vancouver(john) : M ht_vancouver(john) / ht_vancouver(john).\n";
  b.base(text.str());
  auto& s = b.get();
  const Formula either = b.formula("ht_toronto(john) v ht_vancouver(john)");
  const Formula toronto = b.formula("ht_toronto(john)");
  const Formula vancouver = b.formula("ht_vancouver(john)");
  s.universe = {either, toronto, vancouver};
  s.default_stage = 0;
  const double lower = std::min(r.hometown_given_spouse, r.hometown_given_employer);
  s.manifest = {
      ExpectAcceptance{"the hometown disjunction is accepted", 0, {either}, s.level.admits({lower, 1.0}),
                       ProbabilityInterval(lower, 1.0)},
      ExpectAcceptance{"neither disjunct is accepted", 0, {toronto, vancouver}, false, std::nullopt},
      ExpectExtensions{"the default theory has two extensions", 2, 1, {}},
  };
  return std::move(s);
}

std::string ticket(std::size_t j) { return "t" + std::to_string(j); }

Scenario lottery(const ScenarioRequest& req) {
  const std::size_t n = req.lottery_size;
  if (n < 2) throw InvalidArgument("a lottery needs at least 2 tickets");
  const auto& r = req.renderings;
  // Each ticket loses with chance (n-1)/n, which must clear the threshold.
  const double epsilon = n >= 3 ? std::max(r.lottery_min_epsilon, 1.0 / static_cast<double>(n)) : r.lottery_min_epsilon;
  Builder b("lottery", epsilon, req.epsilon);
  const double lose = static_cast<double>(n - 1) / static_cast<double>(n);

  std::ostringstream text;
  text << "# A fair lottery with " << n << " tickets and exactly one winner.\n";
  for (std::size_t i = 1; i <= n; i += 16) {
    text << "const ";
    for (std::size_t j = i; j <= std::min(n, i + 15); ++j) text << (j > i ? ", " : "") << ticket(j);
    text << ".\n";
  }
  text << "pred ticket/1.\npred loses/1.\npred winner_upto/1.\n";
  for (std::size_t j = 1; j <= n; ++j) text << "fact ticket(" << ticket(j) << ").\n";
  // winner_upto(tj): some ticket among t1..tj wins; at most one ticket wins.
  for (std::size_t j = 1; j <= n; ++j) {
    text << "fact loses(" << ticket(j) << ") v winner_upto(" << ticket(j) << ").\n";
    if (j > 1) {
      text << "fact ~winner_upto(" << ticket(j - 1) << ") v winner_upto(" << ticket(j) << ").\n";
      text << "fact ~winner_upto(" << ticket(j - 1) << ") v loses(" << ticket(j) << ").\n";
    }
  }
  std::string some_wins;
  std::string all_lose;
  for (std::size_t j = 1; j <= n; ++j) {
    some_wins += (j > 1 ? " v ~loses(" : "~loses(") + ticket(j) + ")";
    all_lose += (j > 1 ? " & loses(" : "loses(") + ticket(j) + ")";
  }
  text << "fact " << some_wins << ".\n";
  text << "stat x: loses(x) | ticket(x) in [" << num(lose) << ", " << num(lose) << "].\n";
  for (std::size_t j = 1; j <= n; ++j) {
    text << "default : M loses(" << ticket(j) << ") / loses(" << ticket(j) << ").\n";
  }
  LogicOptions options;
  options.atom_budget = std::max<std::size_t>(options.atom_budget, 4 * n + 16);
  b.base(text.str(), options);

  auto& s = b.get();
  std::vector<Formula> loses;
  for (std::size_t j = 1; j <= n; ++j) loses.push_back(b.formula("loses(" + ticket(j) + ")"));
  const Formula wins = b.formula(some_wins);
  const Formula lost = b.formula(all_lose);
  s.universe = loses;
  s.universe.push_back(wins);
  s.universe.push_back(lost);

  const bool loses_ok = s.level.admits({lose, lose});
  s.manifest.push_back(ExpectAcceptance{"every loses(tj) has interval [(n-1)/n, (n-1)/n]", 0, loses, loses_ok,
                                        ProbabilityInterval(lose, lose)});
  s.manifest.push_back(ExpectAcceptance{"some ticket wins is certain", 0, {wins}, true,
                                        ProbabilityInterval::certain_true()});
  s.manifest.push_back(ExpectAcceptance{"every ticket loses is certainly false", 0, {lost}, false,
                                        ProbabilityInterval::certain_false()});
  if (loses_ok) {
    std::optional<std::size_t> core;
    if (n <= 200) core = n + 1;
    s.manifest.push_back(ExpectCorpus{"the corpus is jointly inconsistent; its core is every loses(tj) plus some-wins",
                                      0, false, core, true, {lost}});
  }
  if (n <= 8) {
    s.default_stage = 0;
    s.manifest.push_back(
        ExpectExtensions{"one extension per winning ticket, each with n-1 losers", n, n - 1, {lost}});

    std::vector<MHSentence> initial;
    for (const auto& f : s.stages[0].base.certain_theory()) initial.push_back(MHSentence::plain(f));
    initial.push_back(MHSentence::plain(Formula::negation(lost)));
    for (const auto& l : loses) initial.push_back(MHSentence::normally(l));
    const std::size_t bound = 4 * n + 10;
    s.mh.push_back({"rules 1-5", initial, {1, 2, 3, 4, 5},
                    {MHSentence::probably(lost), MHSentence::probably(Formula::negation(lost))}, bound});
    s.mh.push_back({"rules 1-6", initial, {1, 2, 3, 4, 5, 6},
                    {MHSentence::plain(lost), MHSentence::contradiction()}, bound});
    s.manifest.push_back(ExpectDerivation{"rules 1-5 derive both Probably(all lose) and Probably(~all lose)", 0,
                                          true, false});
    s.manifest.push_back(ExpectDerivation{"adding rule 6 derives a plain contradiction", 1, true, true});
  }
  return std::move(s);
}

Scenario measurement(const ScenarioRequest& req) {
  const auto& m = req.measurement;
  m.validate();
  const auto& r = req.renderings;
  Builder b("measurement", r.measurement_epsilon, req.epsilon);
  const std::size_t n = m.count;
  auto id = [](std::size_t i) { return "m" + std::to_string(i); };

  std::ostringstream text;
  text << "# " << n << " measurements from one batch. within(m): m errs by at most " << num(m.tolerance)
       << " units.\n";
  for (std::size_t i = 1; i <= n; i += 16) {
    text << "const ";
    for (std::size_t j = i; j <= std::min(n, i + 15); ++j) text << (j > i ? ", " : "") << id(j);
    text << ".\n";
  }
  text << "const b.\n";
  text << "pred measurement/1.\npred batch/1.\npred within/1.\npred some_error/1.\n";
  for (std::size_t i = 1; i <= n; ++i) text << "fact measurement(" << id(i) << ").\n";
  text << "fact batch(b).\n";
  // some_error(b) holds exactly when some measurement is not within tolerance.
  text << "fact ~some_error(b)";
  for (std::size_t i = 1; i <= n; ++i) text << " v ~within(" << id(i) << ")";
  text << ".\n";
  for (std::size_t i = 1; i <= n; ++i) text << "fact within(" << id(i) << ") v some_error(b).\n";
  text << "stat x: within(x) | measurement(x) in [" << num(1.0 - m.error_prob) << ", 1].\n";
  text << "stat x: some_error(x) | batch(x) in [" << num(m.batch_error_lower()) << ", 1].\n";
  LogicOptions options;
  options.atom_budget = std::max<std::size_t>(options.atom_budget, 4 * n + 16);
  b.base(text.str(), options);

  auto& s = b.get();
  std::vector<Formula> within;
  for (std::size_t i = 1; i <= n; ++i) within.push_back(b.formula("within(" + id(i) + ")"));
  const Formula error = b.formula("some_error(b)");
  s.universe = within;
  s.universe.push_back(error);

  const ProbabilityInterval each(1.0 - m.error_prob, 1.0);
  const ProbabilityInterval batch(m.batch_error_lower(), 1.0);
  const bool each_ok = s.level.admits(each);
  const bool batch_ok = s.level.admits(batch);
  s.manifest.push_back(ExpectAcceptance{"each measurement is within tolerance with interval [1-p, 1]", 0, within,
                                        each_ok, each});
  s.manifest.push_back(ExpectAcceptance{"some measurement errs, with interval [1-(1-p)^N, 1]", 0, {error},
                                        batch_ok, batch});
  if (each_ok && batch_ok) {
    s.manifest.push_back(ExpectCorpus{"the corpus is jointly inconsistent", 0, false, std::nullopt, true, {}});
    const std::size_t third = std::min<std::size_t>(3, n);
    s.manifest.push_back(ExpectSeriousPossibility{"that measurement " + id(third) + " errs is not a serious possibility",
                                                  0, Formula::negation(within[third - 1]), false});
    s.manifest.push_back(ExpectSeriousPossibility{"that all measurements are within is not a serious possibility", 0,
                                                  Formula::conjunction(within), false});
  }
  return std::move(s);
}

std::string list(const std::vector<Formula>& fs) {
  std::string out = "{";
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? ", " : "") + fs[i].to_string();
  return out + "}";
}

bool contains(const std::vector<Formula>& fs, const Formula& f) {
  return std::any_of(fs.begin(), fs.end(), [&](const Formula& x) { return same_sentence(x, f); });
}

class Checker {
 public:
  explicit Checker(const Scenario& s) : s_(s) {}

  const std::vector<Judgement>& judgements(std::size_t stage) {
    auto it = judged_.find(stage);
    if (it == judged_.end()) it = judged_.emplace(stage, judge_universe(s_.stages.at(stage).base, s_.level, s_.universe)).first;
    return it->second;
  }

  Evaluation evaluate(std::size_t stage, const Formula& f) {
    for (const auto& j : judgements(stage))
      if (j.sentence == f) return j.evaluation;
    return evidential_probability(s_.stages.at(stage).base, f);
  }

  const std::vector<Extension>& extensions() {
    if (!extensions_) extensions_ = compute_extensions(*s_.default_theory(), base_options());
    return *extensions_;
  }

  LogicOptions base_options() const { return s_.stages.front().base.options(); }

  ManifestResult operator()(const ExpectAcceptance& e) {
    for (const auto& f : e.sentences) {
      const auto ev = evaluate(e.stage, f);
      const bool accepted = s_.level.admits(ev.interval);
      if (accepted != e.accepted) {
        return fail(e.description, f.to_string() + (accepted ? " accepted" : " not accepted") + " with " +
                                       ev.interval.to_string());
      }
      if (e.interval && !(ev.interval == *e.interval)) {
        return fail(e.description, f.to_string() + " has " + ev.interval.to_string() + ", expected " +
                                       e.interval->to_string());
      }
    }
    return pass(e.description);
  }

  ManifestResult operator()(const ExpectDiff& e) {
    const UpdateDiff diff = diff_judgements(judgements(e.from), judgements(e.to));
    bool ok = diff.retracted.size() == e.retracted.size();
    for (const auto& f : e.retracted) ok = ok && contains(diff.retracted, f);
    for (const auto& f : e.added_at_least) ok = ok && contains(diff.added, f);
    if (!ok) return fail(e.description, "added " + list(diff.added) + ", retracted " + list(diff.retracted));
    return pass(e.description);
  }

  ManifestResult operator()(const ExpectCorpus& e) {
    const auto& base = s_.stages.at(e.stage).base;
    const Corpus corpus = corpus_of(judgements(e.stage), s_.level);
    ReportOptions options;
    options.core_limit = e.core_size ? 1 : 0;
    const CorpusReport report = corpus_report(base, corpus, s_.universe, options);
    if (report.jointly_consistent != e.jointly_consistent) {
      return fail(e.description, report.jointly_consistent ? "corpus is consistent" : "corpus is inconsistent");
    }
    if (e.core_size && (report.cores.empty() || report.cores.front().size() != *e.core_size)) {
      return fail(e.description,
                  "core size " + (report.cores.empty() ? std::string("none") : std::to_string(report.cores.front().size())));
    }
    if (e.no_single_premise_violations && !report.single_premise_violations.empty()) {
      const auto& [p, q] = report.single_premise_violations.front();
      return fail(e.description, p.to_string() + " is accepted and entails unaccepted " + q.to_string());
    }
    for (const auto& f : e.conjunctions_rejected) {
      bool found = false;
      for (const auto& c : report.conjunction_closure) {
        if (!same_sentence(c.conjunction, f)) continue;
        found = true;
        if (c.accepted) return fail(e.description, "conjunction " + f.to_string() + " accepted");
      }
      if (!found) return fail(e.description, "conjuncts of " + f.to_string() + " not all accepted");
    }
    return pass(e.description);
  }

  ManifestResult operator()(const ExpectExtensions& e) {
    const auto& exts = extensions();
    if (exts.size() != e.count) return fail(e.description, std::to_string(exts.size()) + " extensions");
    const auto theory = *s_.default_theory();
    for (const auto& ext : exts) {
      if (e.consequents_each && ext.consequents.size() != *e.consequents_each) {
        return fail(e.description, "extension generated by " + list(ext.consequents));
      }
      Theory all = theory.facts;
      all.insert(all.end(), ext.consequents.begin(), ext.consequents.end());
      auto compiled = CompiledTheory::compile(all, base_options());
      for (const auto& f : e.in_none)
        if (compiled->entails(f)) return fail(e.description, f.to_string() + " is in " + list(ext.consequents));
    }
    return pass(e.description);
  }

  ManifestResult operator()(const ExpectDerivation& e) {
    const auto& setup = s_.mh.at(e.setup);
    const auto trace = mh_derive(setup.initial, setup.rules, setup.goals, setup.step_bound, base_options());
    const bool reached = trace.outcome == MHOutcome::kAllReached;
    if (reached != e.all_reached) return fail(e.description, std::string("outcome ") + std::string(outcome_name(trace.outcome)));
    if (trace.inconsistent_at.has_value() != e.inconsistency_flagged) {
      return fail(e.description, trace.inconsistent_at ? "inconsistency flagged" : "no inconsistency flagged");
    }
    const auto check = replay(trace, base_options());
    if (!check.ok) return fail(e.description, "replay fails at step " + std::to_string(check.step) + ": " + check.reason);
    return pass(e.description);
  }

  ManifestResult operator()(const ExpectSeriousPossibility& e) {
    const Corpus corpus = corpus_of(judgements(e.stage), s_.level);
    const bool possible = serious_possibility(s_.stages.at(e.stage).base, corpus, e.sentence);
    if (possible != e.possible) return fail(e.description, possible ? "serious possibility" : "not a serious possibility");
    return pass(e.description);
  }

 private:
  static ManifestResult pass(const std::string& d) { return {d, true, {}}; }
  static ManifestResult fail(const std::string& d, std::string detail) { return {d, false, std::move(detail)}; }

  const Scenario& s_;
  std::map<std::size_t, std::vector<Judgement>> judged_;
  std::optional<std::vector<Extension>> extensions_;
};

}  // namespace

Scenario build_scenario(const ScenarioRequest& request) {
  if (request.name == "tweety") return tweety(request);
  if (request.name == "nixon") return nixon(request);
  if (request.name == "cohabitation") return cohabitation(request);
  if (request.name == "lottery") return lottery(request);
  if (request.name == "measurement") return measurement(request);
  throw InvalidArgument("unknown scenario '" + request.name +
                        "'; expected tweety, nixon, cohabitation, lottery or measurement");
}

std::vector<ManifestResult> check_manifest(const Scenario& scenario) {
  Checker checker(scenario);
  std::vector<ManifestResult> out;
  for (const auto& e : scenario.manifest) out.push_back(std::visit(checker, e));
  return out;
}

std::string_view act_name(Act a) { return a == Act::kUse ? "use" : "discard"; }

EUComparison expected_utility_comparison(std::size_t count, double error_prob, double gain, double loss,
                                         double epsilon) {
  if (!(gain > 0.0 && loss > 0.0)) throw InvalidArgument("gain and loss must be positive");
  if (!(error_prob > 0.0 && error_prob < 1.0)) throw InvalidArgument("error probability must lie in (0, 1)");
  const AcceptanceLevel level(epsilon);
  EUComparison out{};
  out.use_value = (1.0 - error_prob) * gain - error_prob * loss;
  out.acceptance_decision = level.admits({1.0 - error_prob, 1.0}) ? Act::kUse : Act::kDiscard;
  out.probabilistic_decision = out.use_value > 0.0 ? Act::kUse : Act::kDiscard;
  const double n = static_cast<double>(count);
  out.eu_acceptance = out.acceptance_decision == Act::kUse ? n * out.use_value : 0.0;
  out.eu_probabilistic = out.probabilistic_decision == Act::kUse ? n * out.use_value : 0.0;
  return out;
}

}  // namespace evident
