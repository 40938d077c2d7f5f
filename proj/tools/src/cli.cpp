#include "evident_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "evident/acceptance.hpp"
#include "evident/default_logic.hpp"
#include "evident/error.hpp"
#include "evident/mh_rules.hpp"
#include "evident/parser.hpp"
#include "evident/render.hpp"
#include "evident/scenarios.hpp"
#include "evident_cli/json_writer.hpp"

namespace evident::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for usage problems detected after argument parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ManifestFailure : public Error {
 public:
  ManifestFailure(std::string message, Json failures) : Error(std::move(message)), failures_(std::move(failures)) {}
  const Json& failures() const { return failures_; }

 private:
  Json failures_;
};

// A finished command: structured payload plus its text rendering.
struct Output {
  Json payload;
  std::vector<std::string> text;
};

struct Settings {
  std::optional<double> epsilon;
  std::string format = "text";
  std::optional<std::size_t> atom_budget;

  LogicOptions logic() const {
    LogicOptions options;
    if (atom_budget) options.atom_budget = *atom_budget;
    return options;
  }
  AcceptanceLevel level() const { return AcceptanceLevel(epsilon.value_or(0.01)); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

EvidenceBase load(const std::string& path, const Settings& settings, std::vector<Default>* defaults = nullptr) {
  const KnowledgeBase kb = parse_program(read_file(path));
  if (defaults) *defaults = kb.defaults;
  return EvidenceBase::from_program(kb, settings.logic());
}

std::vector<Formula> read_universe(const std::string& path, const Signature& signature) {
  std::vector<Formula> out;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Formula f = parse_formula(line, signature);
      const Formula n = normalize(f);
      if (std::none_of(out.begin(), out.end(), [&](const Formula& g) { return normalize(g) == n; }))
        out.push_back(std::move(f));
    } catch (const ParseError& e) {
      throw ParseError(path + " line " + std::to_string(number) + ": " + e.what(), number, e.column());
    }
  }
  return out;
}

Json interval_json(const ProbabilityInterval& i) { return Json{{"lower", i.lower()}, {"upper", i.upper()}}; }

Json sentences_json(const std::vector<Formula>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

std::string joined(const std::vector<Formula>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? ", " : "") + fs[i].to_string();
  return out.empty() ? "(none)" : out;
}

Json trace_json(const EvaluationTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json step;
    step["kind"] = std::string(step_kind_name(s.kind));
    step["statement"] = s.statement;
    step["holds"] = s.holds;
    step["interval"] = s.interval ? interval_json(*s.interval) : Json(nullptr);
    step["note"] = s.note;
    steps.push_back(std::move(step));
  }
  return steps;
}

Json candidates_json(const std::vector<Candidate>& candidates) {
  Json out = Json::array();
  for (const auto& c : candidates) {
    out.push_back(Json{{"statistic", c.source.to_string()},
                       {"subject", c.subject},
                       {"derivation", std::string(derivation_name(c.derivation))},
                       {"interval", interval_json(c.interval)}});
  }
  return out;
}

Json derivation_json(const DerivationTrace& trace, bool replayed) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    steps.push_back(Json{{"index", i}, {"rule", s.rule}, {"premises", s.premises}, {"sentence", s.conclusion.to_string()}});
  }
  Json unreached = Json::array();
  for (const auto& g : trace.unreached) unreached.push_back(g.to_string());
  return Json{{"outcome", std::string(outcome_name(trace.outcome))},
              {"derived_steps", trace.derived_steps()},
              {"inconsistent_at", trace.inconsistent_at ? Json(*trace.inconsistent_at) : Json(nullptr)},
              {"unreached", unreached},
              {"replay", replayed},
              {"steps", steps}};
}

Json report_json(const CorpusReport& report) {
  Json cores = Json::array();
  for (const auto& core : report.cores) cores.push_back(sentences_json(core));
  Json violations = Json::array();
  for (const auto& [p, q] : report.single_premise_violations)
    violations.push_back(Json{{"premise", p.to_string()}, {"consequence", q.to_string()}});
  Json conjunctions = Json::array();
  for (const auto& c : report.conjunction_closure)
    conjunctions.push_back(Json{{"conjunction", c.conjunction.to_string()}, {"accepted", c.accepted}});
  return Json{{"jointly_consistent", report.jointly_consistent},
              {"cores", cores},
              {"single_premise_violations", violations},
              {"conjunction_closure", conjunctions}};
}

void report_text(const CorpusReport& report, std::vector<std::string>& text) {
  text.push_back(std::string("jointly consistent: ") + (report.jointly_consistent ? "yes" : "no"));
  for (const auto& core : report.cores)
    text.push_back("minimal core (" + std::to_string(core.size()) + "): " + joined(core));
  for (const auto& [p, q] : report.single_premise_violations)
    text.push_back("closure violation: " + p.to_string() + " accepted, entails unaccepted " + q.to_string());
  for (const auto& c : report.conjunction_closure)
    text.push_back("conjunction " + c.conjunction.to_string() + (c.accepted ? " accepted" : " not accepted") +
                   " though every conjunct is");
}

Json judgements_json(const std::vector<Judgement>& js) {
  Json out = Json::array();
  for (const auto& j : js)
    out.push_back(Json{{"sentence", j.sentence.to_string()}, {"interval", interval_json(j.evaluation.interval)},
                       {"accepted", j.accepted}});
  return out;
}

void judgements_text(const std::vector<Judgement>& js, std::vector<std::string>& text, const std::string& indent) {
  for (const auto& j : js)
    text.push_back(indent + (j.accepted ? "accepted " : "rejected ") + format_interval(j.evaluation.interval) + " " +
                   j.sentence.to_string());
}

Json diff_json(const UpdateDiff& diff, const std::vector<Judgement>& before, const std::vector<Judgement>& after) {
  Json changed = Json::array();
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i].evaluation.interval == after[i].evaluation.interval) continue;
    changed.push_back(Json{{"sentence", after[i].sentence.to_string()},
                           {"before", interval_json(before[i].evaluation.interval)},
                           {"after", interval_json(after[i].evaluation.interval)}});
  }
  return Json{{"added", sentences_json(diff.added)},
              {"retracted", sentences_json(diff.retracted)},
              {"unchanged", diff.unchanged},
              {"interval_changed", changed}};
}

// ---------------------------------------------------------------------------

Output cmd_query(const Settings& settings, const std::string& file, const std::string& query) {
  const EvidenceBase base = load(file, settings);
  const Formula f = parse_formula(query, base.signature());
  const AcceptanceLevel level = settings.level();
  const Evaluation ev = evidential_probability(base, f);
  const bool accepted = level.admits(ev.interval);

  Output out;
  out.payload = Json{{"query", f.to_string()},
                     {"subject", ev.trace.subject ? Json(*ev.trace.subject) : Json(nullptr)},
                     {"epsilon", level.epsilon()},
                     {"interval", interval_json(ev.interval)},
                     {"accepted", accepted},
                     {"candidates", candidates_json(ev.candidates)},
                     {"trace", trace_json(ev.trace)}};
  out.text.push_back("query: " + f.to_string());
  out.text.push_back("interval: " + format_interval(ev.interval));
  out.text.push_back(std::string("accepted: ") + (accepted ? "yes" : "no") + " at epsilon " +
                     format_probability(level.epsilon()));
  out.text.push_back("trace:");
  for (const auto& line : trace_lines(ev.trace)) out.text.push_back("  " + line);
  return out;
}

Output cmd_corpus(const Settings& settings, const std::string& file, const std::string& universe_file,
                  std::size_t core_limit) {
  const EvidenceBase base = load(file, settings);
  const auto universe = read_universe(universe_file, base.signature());
  const AcceptanceLevel level = settings.level();
  const auto js = judge_universe(base, level, universe);
  const Corpus corpus = corpus_of(js, level, universe_file);
  ReportOptions options;
  options.core_limit = core_limit;
  const CorpusReport report = corpus_report(base, corpus, universe, options);

  Output out;
  out.payload = Json{{"epsilon", level.epsilon()},
                     {"universe_size", universe.size()},
                     {"accepted", sentences_json(corpus.sentences())},
                     {"judgements", judgements_json(js)},
                     {"report", report_json(report)}};
  out.text.push_back("epsilon: " + format_probability(level.epsilon()));
  out.text.push_back("universe: " + std::to_string(universe.size()) + " sentences, " +
                     std::to_string(corpus.entries.size()) + " accepted");
  judgements_text(js, out.text, "  ");
  report_text(report, out.text);
  return out;
}

Output cmd_diff(const Settings& settings, const std::string& file, const std::string& universe_file,
                const std::string& addition) {
  const EvidenceBase base = load(file, settings);
  const auto universe = read_universe(universe_file, base.signature());
  const EvidenceItem item = parse_item(addition, base.signature());
  const AcceptanceLevel level = settings.level();
  const EvidenceBase updated = assert_evidence(base, item);
  const auto before = judge_universe(base, level, universe);
  const auto after = judge_universe(updated, level, universe);
  const UpdateDiff diff = diff_judgements(before, after);

  Output out;
  out.payload = Json{{"epsilon", level.epsilon()}, {"asserted", item_to_string(item)}};
  const Json changes = diff_json(diff, before, after);
  for (const auto& [key, value] : changes.items()) out.payload[key] = value;
  out.text.push_back("asserted: " + item_to_string(item));
  out.text.push_back("added: " + joined(diff.added));
  out.text.push_back("retracted: " + joined(diff.retracted));
  out.text.push_back("unchanged: " + std::to_string(diff.unchanged));
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i].evaluation.interval == after[i].evaluation.interval) continue;
    out.text.push_back("interval changed: " + after[i].sentence.to_string() + " " +
                       format_interval(before[i].evaluation.interval) + " -> " +
                       format_interval(after[i].evaluation.interval));
  }
  return out;
}

Json extensions_json(const std::vector<Extension>& exts) {
  Json list = Json::array();
  for (const auto& e : exts) list.push_back(sentences_json(e.consequents));
  return Json{{"count", exts.size()}, {"extensions", list}};
}

void extensions_text(const std::vector<Extension>& exts, std::vector<std::string>& text) {
  text.push_back("extensions: " + std::to_string(exts.size()));
  for (const auto& e : exts) text.push_back("  W + {" + (e.consequents.empty() ? "" : joined(e.consequents)) + "}");
}

Output cmd_extensions(const Settings& settings, const std::string& file) {
  const KnowledgeBase kb = parse_program(read_file(file));
  const DefaultTheory theory{kb.ground_theory(), kb.defaults};
  const auto exts = compute_extensions(theory, settings.logic());
  Output out;
  out.payload = extensions_json(exts);
  extensions_text(exts, out.text);
  return out;
}

MHSentence parse_mh(const std::string& text, const Signature& sig) {
  static const std::regex wrapped(R"(^\s*(Probably|Consistent|Normally)\s*\((.*)\)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, wrapped)) {
    Formula body = parse_formula(m[2].str(), sig);
    if (m[1] == "Probably") return MHSentence::probably(body);
    if (m[1] == "Consistent") return MHSentence::consistent(body);
    return MHSentence::normally(body);
  }
  return MHSentence::plain(parse_formula(text, sig));
}

void derivation_text(const DerivationTrace& trace, bool replayed, std::vector<std::string>& text,
                     const std::string& indent) {
  for (const auto& line : trace_lines(trace)) text.push_back(indent + line);
  text.push_back(indent + "replay " + (replayed ? "ok" : "FAILED"));
}

Output cmd_mh(const Settings& settings, const std::string& file, const std::vector<std::string>& goals,
              const std::vector<std::string>& normally, const std::vector<int>& rules, std::size_t steps) {
  const KnowledgeBase kb = parse_program(read_file(file));
  std::vector<MHSentence> initial;
  for (const auto& f : kb.ground_theory()) initial.push_back(MHSentence::plain(f));
  for (const auto& n : normally) initial.push_back(MHSentence::normally(parse_formula(n, kb.signature)));
  std::vector<MHSentence> wanted;
  for (const auto& g : goals) wanted.push_back(parse_mh(g, kb.signature));
  if (wanted.empty()) throw UsageError("mh-trace needs at least one --goal");
  const std::set<int> enabled(rules.begin(), rules.end());
  const auto trace = mh_derive(initial, enabled, wanted, steps, settings.logic());
  const bool replayed = replay(trace, settings.logic()).ok;
  Output out;
  out.payload = derivation_json(trace, replayed);
  derivation_text(trace, replayed, out.text, "");
  return out;
}

struct ScenarioArgs {
  std::string name;
  std::size_t n = 4;
  std::size_t count = 10000;
  double tolerance = 0.05;
  double error_prob = 0.001;
  std::optional<std::string> program_stage;
};

Output cmd_scenario(const Settings& settings, const ScenarioArgs& args) {
  ScenarioRequest request;
  request.name = args.name;
  request.lottery_size = args.n;
  request.measurement.count = args.count;
  request.measurement.tolerance = args.tolerance;
  request.measurement.error_prob = args.error_prob;
  request.epsilon = settings.epsilon;
  const Scenario s = build_scenario(request);

  Output out;
  if (args.program_stage) {
    const auto index = s.stage_index(*args.program_stage);
    if (!index) throw UsageError("scenario " + s.name + " has no stage '" + *args.program_stage + "'");
    const std::string& program = s.stages[*index].program;
    out.payload = Json{{"scenario", s.name}, {"stage", *args.program_stage}, {"program", program}};
    std::istringstream lines(program);
    for (std::string line; std::getline(lines, line);) out.text.push_back(line);
    return out;
  }

  Json params = Json::object();
  if (s.name == "lottery") params["n"] = args.n;
  if (s.name == "measurement") {
    params["count"] = args.count;
    params["tolerance"] = args.tolerance;
    params["error_prob"] = args.error_prob;
  }
  out.payload["scenario"] = s.name;
  out.payload["parameters"] = params;
  out.payload["epsilon"] = s.level.epsilon();
  out.text.push_back("scenario " + s.name + " at epsilon " + format_probability(s.level.epsilon()));

  std::vector<std::vector<Judgement>> judged;
  Json stages = Json::array();
  for (std::size_t i = 0; i < s.stages.size(); ++i) {
    const auto& stage = s.stages[i];
    judged.push_back(judge_universe(stage.base, s.level, s.universe));
    Json st{{"label", stage.label},
            {"parent", stage.parent ? Json(s.stages[*stage.parent].label) : Json(nullptr)},
            {"asserted", stage.added ? Json(item_to_string(*stage.added)) : Json(nullptr)},
            {"judgements", judgements_json(judged.back())}};
    out.text.push_back("stage " + stage.label +
                       (stage.added ? " = " + s.stages[*stage.parent].label + " + " + item_to_string(*stage.added)
                                    : std::string()));
    judgements_text(judged.back(), out.text, "  ");
    if (stage.parent) {
      const UpdateDiff diff = diff_judgements(judged[*stage.parent], judged.back());
      st["diff"] = diff_json(diff, judged[*stage.parent], judged.back());
      out.text.push_back("  added: " + joined(diff.added));
      out.text.push_back("  retracted: " + joined(diff.retracted));
    } else {
      st["diff"] = nullptr;
    }
    stages.push_back(std::move(st));
  }
  out.payload["stages"] = stages;

  const std::size_t last = s.stages.size() - 1;
  ReportOptions options;
  options.core_limit = s.universe.size() <= 201 ? 1 : 0;
  const CorpusReport report = corpus_report(s.stages[last].base, corpus_of(judged[last], s.level), s.universe, options);
  out.payload["report"] = report_json(report);
  out.payload["report"]["stage"] = s.stages[last].label;
  out.text.push_back("corpus at stage " + s.stages[last].label);
  std::vector<std::string> report_lines;
  report_text(report, report_lines);
  for (auto& l : report_lines) out.text.push_back("  " + l);

  if (auto theory = s.default_theory()) {
    const auto exts = compute_extensions(*theory, s.stages.front().base.options());
    out.payload["extensions"] = extensions_json(exts);
    extensions_text(exts, out.text);
  } else {
    out.payload["extensions"] = nullptr;
  }

  Json derivations = Json::array();
  for (const auto& setup : s.mh) {
    const auto trace = mh_derive(setup.initial, setup.rules, setup.goals, setup.step_bound,
                                 s.stages.front().base.options());
    const bool replayed = replay(trace, s.stages.front().base.options()).ok;
    Json d = derivation_json(trace, replayed);
    d["label"] = setup.label;
    derivations.push_back(std::move(d));
    out.text.push_back("derivation with " + setup.label);
    derivation_text(trace, replayed, out.text, "  ");
  }
  out.payload["derivations"] = derivations;

  Json manifest = Json::array();
  Json failures = Json::array();
  out.text.push_back("manifest:");
  for (const auto& r : check_manifest(s)) {
    Json entry{{"assertion", r.description}, {"pass", r.pass}};
    if (!r.pass) {
      entry["detail"] = r.detail;
      failures.push_back(entry);
    }
    manifest.push_back(entry);
    out.text.push_back(std::string("  ") + (r.pass ? "PASS " : "FAIL ") + r.description +
                       (r.pass ? "" : ": " + r.detail));
  }
  out.payload["manifest"] = manifest;
  if (!failures.empty()) {
    throw ManifestFailure(std::to_string(failures.size()) + " manifest assertion(s) failed", failures);
  }
  return out;
}

Output cmd_eu(const Settings& settings, std::size_t count, double error_prob, double gain, double loss) {
  const double epsilon = settings.epsilon.value_or(0.01);
  const EUComparison eu = expected_utility_comparison(count, error_prob, gain, loss, epsilon);
  auto policy = [](Act a, double total) {
    return Json{{"decision", std::string(act_name(a))}, {"expected_utility", total}};
  };
  Output out;
  out.payload = Json{{"count", count},
                     {"error_prob", error_prob},
                     {"gain", gain},
                     {"loss", loss},
                     {"epsilon", epsilon},
                     {"use_value", eu.use_value},
                     {"acceptance", policy(eu.acceptance_decision, eu.eu_acceptance)},
                     {"probabilistic", policy(eu.probabilistic_decision, eu.eu_probabilistic)}};
  out.text.push_back("value of using one measurement: " + format_probability(eu.use_value));
  out.text.push_back("acceptance policy: " + std::string(act_name(eu.acceptance_decision)) + ", expected utility " +
                     format_probability(eu.eu_acceptance));
  out.text.push_back("probabilistic policy: " + std::string(act_name(eu.probabilistic_decision)) +
                     ", expected utility " + format_probability(eu.eu_probabilistic));
  return out;
}

// ---------------------------------------------------------------------------

void emit(std::ostream& out, const std::string& format, const std::string& command, const Json& arguments,
          const Output& result) {
  if (format == "json") {
    Json doc{{"command", command}, {"arguments", arguments}, {"version", kVersion}, {"status", "ok"},
             {"payload", result.payload}};
    out << write_json(doc);
  } else {
    for (const auto& line : result.text) out << line << '\n';
  }
}

int fail(std::ostream& out, std::ostream& err, const std::string& format, const std::string& command,
         const Json& arguments, int code, const std::string& message, const Json& failures = Json()) {
  err << "evident: " << message << '\n';
  if (format == "json") {
    const char* kind = code == kManifest ? "manifest" : code == kEvaluation ? "evaluation" : "usage";
    Json error{{"exit_code", code}, {"kind", kind}, {"message", message}};
    if (!failures.is_null()) error["failures"] = failures;
    Json doc{{"command", command}, {"arguments", arguments}, {"version", kVersion}, {"status", "error"},
             {"error", error}};
    out << write_json(doc);
  } else {
    out << "error (exit " << code << "): " << message << '\n';
    if (!failures.is_null())
      for (const auto& f : failures)
        out << "  FAIL " << f["assertion"].get<std::string>() << ": " << f["detail"].get<std::string>() << '\n';
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evidential probability, acceptance, and rival non-monotonic systems", "evident"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Settings settings;
  double epsilon = 0.01;
  app.add_option("--epsilon", epsilon, "Acceptance risk: accept when lower probability >= 1 - epsilon")
      ->check(CLI::Range(0.0, 0.5));
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  std::size_t budget = 0;
  app.add_option("--atom-budget", budget, "Largest number of ground atoms per problem")->check(CLI::PositiveNumber);

  std::string file;
  std::string formula;
  std::string universe;
  std::string addition;
  std::size_t cores = 1;
  std::vector<std::string> goals;
  std::vector<std::string> normally;
  std::vector<int> rules{1, 2, 3, 4, 5};
  std::size_t steps = 50;
  ScenarioArgs scenario;
  std::size_t eu_count = 10;
  double eu_p = 0.25;
  double gain = 1.0;
  double loss = 1.0;

  auto* query = app.add_subcommand("query", "Evidential probability and acceptance of one sentence");
  query->add_option("file", file, "Knowledge file")->required();
  query->add_option("formula", formula, "Ground query sentence")->required();

  auto* corpus = app.add_subcommand("corpus", "Accepted sentences of a universe and the corpus report");
  corpus->add_option("file", file, "Knowledge file")->required();
  corpus->add_option("--universe", universe, "File with one ground sentence per line")->required();
  corpus->add_option("--cores", cores, "Minimal inconsistent cores to extract (0 for none)");

  auto* diff = app.add_subcommand("diff", "Change in the accepted set after asserting one item");
  diff->add_option("file", file, "Knowledge file")->required();
  diff->add_option("--universe", universe, "File with one ground sentence per line")->required();
  diff->add_option("--add", addition, "Declaration to assert, e.g. 'fact penguin(tweety).'")->required();

  auto* extensions = app.add_subcommand("extensions", "Extensions of the file's default theory");
  extensions->add_option("file", file, "Knowledge file")->required();

  auto* mh = app.add_subcommand("mh-trace", "Goal-directed derivation with the operator rules");
  mh->add_option("file", file, "Knowledge file; its certain sentences form the initial set")->required();
  mh->add_option("--goal", goals, "Goal: a formula or Probably(...), Consistent(...), Normally(...)");
  mh->add_option("--normally", normally, "Add Normally(formula) to the initial set");
  mh->add_option("--rules", rules, "Enabled rules")->delimiter(',')->check(CLI::Range(1, 6));
  mh->add_option("--steps", steps, "Bound on derived steps")->check(CLI::PositiveNumber);

  auto* sc = app.add_subcommand("scenario", "Run a built-in scenario and check its manifest");
  sc->add_option("name", scenario.name, "tweety, nixon, cohabitation, lottery or measurement")->required();
  sc->add_option("--n", scenario.n, "Lottery tickets");
  sc->add_option("--count", scenario.count, "Measurements");
  sc->add_option("--tolerance", scenario.tolerance, "Measurement tolerance");
  sc->add_option("--error-prob", scenario.error_prob, "Chance that one measurement errs");
  std::string program_stage;
  sc->add_option("--program", program_stage, "Print the knowledge text of this stage instead");

  auto* eu = app.add_subcommand("eu-compare", "Expected utility of acceptance versus probabilistic use");
  eu->add_option("--count", eu_count, "Measurements");
  eu->add_option("--error-prob", eu_p, "Chance that one measurement errs");
  eu->add_option("--gain", gain, "Utility of using a good measurement");
  eu->add_option("--loss", loss, "Utility lost by using a bad measurement");

  app.fallthrough();
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  std::string command;
  for (const auto& a : args) {
    if (app.get_subcommand_no_throw(a)) {
      command = a;
      break;
    }
  }
  Json arguments = Json::array();
  for (const auto& a : args) arguments.push_back(a);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Option values are only stored once parsing succeeds, so look for the
    // format by hand.
    std::string format = "text";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--format=json" || (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json"))
        format = "json";
    }
    return fail(out, err, format, command, arguments, kUsage, e.what());
  }
  if (app.count("--epsilon")) settings.epsilon = epsilon;
  if (app.count("--atom-budget")) settings.atom_budget = budget;
  command = app.get_subcommands().front()->get_name();

  try {
    Output result;
    if (query->parsed()) {
      result = cmd_query(settings, file, formula);
    } else if (corpus->parsed()) {
      result = cmd_corpus(settings, file, universe, cores);
    } else if (diff->parsed()) {
      result = cmd_diff(settings, file, universe, addition);
    } else if (extensions->parsed()) {
      result = cmd_extensions(settings, file);
    } else if (mh->parsed()) {
      result = cmd_mh(settings, file, goals, normally, rules, steps);
    } else if (sc->parsed()) {
      if (sc->count("--program")) scenario.program_stage = program_stage;
      result = cmd_scenario(settings, scenario);
    } else {
      result = cmd_eu(settings, eu_count, eu_p, gain, loss);
    }
    emit(out, settings.format, command, arguments, result);
    return kOk;
  } catch (const ManifestFailure& e) {
    return fail(out, err, settings.format, command, arguments, kManifest, e.what(), e.failures());
  } catch (const BudgetExceeded& e) {
    return fail(out, err, settings.format, command, arguments, kEvaluation, e.what());
  } catch (const EvidenceConflict& e) {
    return fail(out, err, settings.format, command, arguments, kEvaluation, e.what());
  } catch (const Error& e) {
    return fail(out, err, settings.format, command, arguments, kUsage, e.what());
  }
}

}  // namespace evident::cli
