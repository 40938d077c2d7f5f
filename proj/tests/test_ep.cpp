#include <random>

#include "doctest.h"
#include "evident/ep.hpp"
#include "evident/evidence.hpp"
#include "evident/parser.hpp"
#include "evident/scenarios.hpp"
#include "support/oracle.hpp"

using namespace evident;

namespace {

EvidenceBase load(const char* text) { return EvidenceBase::from_program(parse_program(text)); }

ProbabilityInterval probability(const EvidenceBase& base, const char* query) {
  return evidential_probability(base, parse_formula(query, base.signature())).interval;
}

const char* kBirds = R"(
const tweety, other.
pred bird/1. pred penguin/1. pred flies/1.
rule all x: penguin(x) -> bird(x).
fact bird(tweety).
fact penguin(tweety).
stat x: flies(x) | bird(x) in [0.95, 1].
stat x: flies(x) | penguin(x) in [0, 0.1].
)";

}  // namespace

TEST_SUITE("ep") {
  TEST_CASE("no applicable statistic gives ignorance") {
    const EvidenceBase base = load("const a. pred p/1. pred q/1. stat x: p(x) | q(x) in [0.9, 1].");
    CHECK(probability(base, "p(a)") == ProbabilityInterval(0, 1));
    const auto ev = evidential_probability(base, parse_formula("p(a)", base.signature()));
    CHECK(ev.candidates.empty());
    REQUIRE(ev.trace.subject);
    CHECK(*ev.trace.subject == "a");
  }

  TEST_CASE("direct, weakened and negated readings") {
    const EvidenceBase base =
        load("const a, b. pred p/1. pred q/1. pred r/1. fact q(a). stat x: p(x) | q(x) in [0.9, 0.95].");
    CHECK(probability(base, "p(a)") == ProbabilityInterval(0.9, 0.95));
    CHECK(probability(base, "p(a) v r(a)") == ProbabilityInterval(0.9, 1));
    const auto negated = probability(base, "~p(a)");
    CHECK(negated.lower() == 0.0);
    CHECK(negated.upper() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(probability(base, "r(a)") == ProbabilityInterval(0, 1));
    // The subject is the first declared constant mentioned, here a.
    CHECK(probability(base, "p(b) v p(a)") == ProbabilityInterval(0.9, 1));
    CHECK(probability(base, "p(b)") == ProbabilityInterval(0, 1));
  }

  TEST_CASE("more specific reference classes win when they disagree") {
    const EvidenceBase base = load(kBirds);
    const auto ev = evidential_probability(base, parse_formula("flies(tweety)", base.signature()));
    CHECK(ev.interval == ProbabilityInterval(0, 0.1));
    REQUIRE(ev.candidates.size() == 1);
    CHECK(ev.candidates[0].stat_index == 1);
    bool pruned = false;
    for (const auto& s : ev.trace.steps) pruned = pruned || s.kind == TraceStep::Kind::kPruned;
    CHECK(pruned);
  }

  TEST_CASE("a more specific class prunes only intervals it does not contain") {
    const std::string head = R"(
const tweety, other.
pred bird/1. pred robin/1. pred flies/1.
rule all x: robin(x) -> bird(x).
fact robin(tweety).
stat x: flies(x) | bird(x) in [0.9, 1].
)";
    const EvidenceBase sharper = load((head + "stat x: flies(x) | robin(x) in [0.95, 0.99].").c_str());
    const auto a = evidential_probability(sharper, parse_formula("flies(tweety)", sharper.signature()));
    CHECK(a.candidates.size() == 1);
    CHECK(a.interval == ProbabilityInterval(0.95, 0.99));
    const EvidenceBase wider = load((head + "stat x: flies(x) | robin(x) in [0.85, 1].").c_str());
    const auto b = evidential_probability(wider, parse_formula("flies(tweety)", wider.signature()));
    CHECK(b.candidates.size() == 2);
    CHECK(b.interval == ProbabilityInterval(0.85, 1));
  }

  TEST_CASE("conflicting unrelated classes give the hull") {
    const EvidenceBase base = load(R"(
const nixon, other.
pred quaker/1. pred republican/1. pred pacifist/1.
fact quaker(nixon). fact republican(nixon).
stat x: pacifist(x) | quaker(x) in [0.9, 1].
stat x: ~pacifist(x) | republican(x) in [0.9, 1].
)");
    CHECK(probability(base, "pacifist(nixon)") == ProbabilityInterval(0, 1));
    CHECK(probability(base, "~pacifist(nixon)") == ProbabilityInterval(0, 1));
  }

  TEST_CASE("entailment dominates statistics") {
    oracle::Generator gen(21);
    const char* program = R"(
const c0, c1, c2, c3.
pred p/1. pred q/1.
stat x: p(x) | q(x) in [0.8, 0.9].
stat x: ~p(x) | q(x) in [0.05, 0.3].
)";
    const KnowledgeBase kb = parse_program(program);
    int certain = 0;
    for (int round = 0; round < 200; ++round) {
      std::vector<CertainItem> facts;
      std::vector<Formula> theory;
      const int n = gen.uniform(0, 4);
      for (int i = 0; i < n; ++i) {
        Formula f = gen.clause(4);
        theory.push_back(f);
        facts.push_back(f);
      }
      if (!oracle::satisfiable(theory)) continue;
      // Generated atoms use predicate p; q(c0) is added so that statistics apply.
      facts.push_back(Formula::atom("q", {"c0"}));
      theory.push_back(Formula::atom("q", {"c0"}));
      const EvidenceBase base(kb.signature, facts, kb.stats);
      const Formula query = gen.formula(4, 2);
      const auto interval = evidential_probability(base, query).interval;
      if (oracle::entails(theory, query)) {
        ++certain;
        CHECK(interval == ProbabilityInterval(1, 1));
      } else if (oracle::entails(theory, Formula::negation(query))) {
        ++certain;
        CHECK(interval == ProbabilityInterval(0, 0));
      } else {
        CHECK(interval.lower() < 1.0);
        CHECK(interval.upper() > 0.0);
      }
    }
    CHECK(certain > 10);
  }

  TEST_CASE("weakened candidates are sound") {
    for (const char* name : {"tweety", "nixon", "cohabitation", "lottery", "measurement"}) {
      ScenarioRequest request;
      request.name = name;
      request.measurement.count = 20;
      const Scenario s = build_scenario(request);
      for (const auto& stage : s.stages) {
        for (const auto& phi : s.universe) {
          for (const auto& c : candidates_for(stage.base, phi)) {
            if (c.derivation != Derivation::kWeakened) continue;
            CHECK(c.interval == ProbabilityInterval(c.source.interval.lower(), 1.0));
            const Formula target = c.source.target.substitute(c.source.variable, c.subject);
            CHECK(stage.base.compiled().entails_given(target, phi));
          }
        }
      }
    }
  }

  TEST_CASE("support lifts to logical consequences") {
    int lifted = 0;
    for (const char* name : {"tweety", "nixon", "cohabitation", "lottery", "measurement"}) {
      ScenarioRequest request;
      request.name = name;
      request.measurement.count = 20;
      const Scenario s = build_scenario(request);
      for (const auto& stage : s.stages) {
        for (const auto& phi : s.universe) {
          // Sentences settled by the certain evidence take their value from it.
          if (stage.base.entails(phi) || stage.base.entails(Formula::negation(phi))) continue;
          const auto subject = stage.base.signature().first_declared_constant(phi);
          const auto from = candidates_for(stage.base, phi);
          for (const auto& chi : s.universe) {
            const Formula psi = Formula::disjunction({phi, chi});
            // Candidates are about one subject; compare like with like.
            if (stage.base.signature().first_declared_constant(psi) != subject) continue;
            const auto to = candidates_for(stage.base, psi);
            for (const auto& c : from) {
              if (c.interval.lower() == 0.0) continue;
              bool matched = false;
              for (const auto& d : to)
                matched = matched || (d.stat_index == c.stat_index && d.interval.lower() == c.interval.lower());
              CHECK_MESSAGE(matched, phi.to_string() << " => " << psi.to_string());
              ++lifted;
            }
          }
        }
      }
    }
    CHECK(lifted > 0);
  }

  TEST_CASE("adding an interval never shrinks the hull") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto random_interval = [&] {
      double a = unit(rng), b = unit(rng);
      if (a > b) std::swap(a, b);
      return ProbabilityInterval(a, b);
    };
    for (int round = 0; round < 500; ++round) {
      std::vector<ProbabilityInterval> list{random_interval()};
      const int n = static_cast<int>(rng() % 6);
      for (int i = 0; i < n; ++i) list.push_back(random_interval());
      const auto before = interval_hull(list);
      list.push_back(random_interval());
      CHECK(interval_hull(list).contains(before));
      CHECK(interval_hull(list).contains(list.back()));
    }
  }

  TEST_CASE("evaluation is deterministic") {
    const EvidenceBase base = load(kBirds);
    for (const char* q : {"flies(tweety)", "~flies(tweety)", "bird(tweety) & flies(tweety)"}) {
      const Formula f = parse_formula(q, base.signature());
      const auto a = evidential_probability(base, f);
      const auto b = evidential_probability(base, f);
      CHECK(a.interval == b.interval);
      CHECK(a.candidates == b.candidates);
      CHECK(a.trace == b.trace);
    }
  }
}
