#include "doctest.h"
#include "evident/error.hpp"
#include "evident/logic.hpp"
#include "evident/mh_rules.hpp"
#include "evident/parser.hpp"
#include "evident/scenarios.hpp"
#include "support/oracle.hpp"

using namespace evident;

namespace {

Scenario lottery(std::size_t n) {
  ScenarioRequest request;
  request.name = "lottery";
  request.lottery_size = n;
  return build_scenario(request);
}

}  // namespace

TEST_SUITE("mh") {
  TEST_CASE("a plain sentence is probable in one step") {
    const Formula p = Formula::atom("p", {"a"});
    const auto trace = mh_derive({MHSentence::plain(p)}, {4}, {MHSentence::probably(p)}, 10);
    CHECK(trace.outcome == MHOutcome::kAllReached);
    CHECK(trace.derived_steps() == 1);
    CHECK(trace.steps.back().rule == 4);
    CHECK(replay(trace).ok);
  }

  TEST_CASE("normally plus consistency gives probably") {
    const Formula p = Formula::atom("p", {"a"});
    const Formula q = Formula::atom("q", {"a"});
    auto trace = mh_derive({MHSentence::plain(q), MHSentence::normally(p)}, {2, 3}, {MHSentence::probably(p)}, 10);
    CHECK(trace.outcome == MHOutcome::kAllReached);
    CHECK(replay(trace).ok);

    // Blocked when the plain sentences refute it.
    trace = mh_derive({MHSentence::plain(Formula::negation(p)), MHSentence::normally(p)}, {2, 3},
                      {MHSentence::probably(p)}, 10);
    CHECK(trace.outcome != MHOutcome::kAllReached);
    CHECK(trace.unreached.size() == 1);
  }

  TEST_CASE("lottery paradox with and without rule 6") {
    const Scenario s = lottery(3);
    REQUIRE(s.mh.size() == 2);
    const auto& five = s.mh[0];
    const auto trace = mh_derive(five.initial, five.rules, five.goals, 50);
    CHECK(trace.outcome == MHOutcome::kAllReached);
    CHECK(trace.derived_steps() <= 50);
    CHECK_FALSE(trace.inconsistent_at);
    CHECK(replay(trace).ok);

    const auto& six = s.mh[1];
    const auto with_six = mh_derive(six.initial, six.rules, six.goals, 50);
    CHECK(with_six.outcome == MHOutcome::kAllReached);
    REQUIRE(with_six.inconsistent_at);
    CHECK(with_six.find(MHSentence::contradiction()));
    CHECK(replay(with_six).ok);
  }

  TEST_CASE("tampered traces fail replay") {
    const Scenario s = lottery(3);
    const auto& setup = s.mh[0];
    auto trace = mh_derive(setup.initial, setup.rules, setup.goals, 50);
    REQUIRE(replay(trace).ok);

    auto bad_rule = trace;
    for (auto& step : bad_rule.steps)
      if (step.rule == 3) {
        step.rule = 4;
        break;
      }
    CHECK_FALSE(replay(bad_rule).ok);

    auto forward = trace;
    for (auto& step : forward.steps)
      if (step.rule == 5) {
        step.premises.push_back(forward.steps.size());
        break;
      }
    CHECK_FALSE(replay(forward).ok);

    auto bogus = trace;
    bogus.steps.push_back({1, {0}, MHSentence::plain(Formula::falsity())});
    CHECK_FALSE(replay(bogus).ok);
  }

  TEST_CASE("step bound is respected") {
    const Scenario s = lottery(6);
    const auto& setup = s.mh[0];
    const auto trace = mh_derive(setup.initial, setup.rules, setup.goals, 3);
    CHECK(trace.outcome == MHOutcome::kStepBoundExhausted);
    CHECK(trace.derived_steps() == 3);
    CHECK(replay(trace).ok);
    CHECK_THROWS_AS(mh_derive(setup.initial, setup.rules, setup.goals, 0), InvalidArgument);
    CHECK_THROWS_AS(mh_derive(setup.initial, {7}, setup.goals, 5), InvalidArgument);
  }

  TEST_CASE("without defaults, nothing refuted becomes probable") {
    oracle::Generator gen(41);
    int derived = 0;
    for (int round = 0; round < 150; ++round) {
      const int atoms = gen.uniform(2, 6);
      const auto theory = gen.theory(atoms, gen.uniform(1, 5));
      if (!oracle::satisfiable(theory)) continue;
      std::vector<MHSentence> initial;
      for (const auto& f : theory) initial.push_back(MHSentence::plain(f));
      std::vector<MHSentence> goals;
      for (int i = 0; i < 4; ++i) goals.push_back(MHSentence::probably(gen.formula(atoms, 2)));
      const auto trace = mh_derive(initial, {1, 2, 3, 4, 5}, goals, 40);
      CHECK(replay(trace).ok);
      for (const auto& step : trace.steps) {
        if (step.conclusion.wrapper != Wrapper::kProbably) continue;
        ++derived;
        CHECK_FALSE(oracle::entails(theory, Formula::negation(step.conclusion.body)));
      }
    }
    CHECK(derived > 0);
  }

  TEST_CASE("every lottery trace replays") {
    for (std::size_t n = 2; n <= 6; ++n) {
      const Scenario s = lottery(n);
      for (const auto& setup : s.mh) {
        const auto trace = mh_derive(setup.initial, setup.rules, setup.goals, setup.step_bound);
        CHECK(trace.outcome == MHOutcome::kAllReached);
        CHECK(replay(trace).ok);
      }
    }
  }
}
