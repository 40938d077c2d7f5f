#include <set>

#include "doctest.h"
#include "evident/default_logic.hpp"
#include "evident/error.hpp"
#include "evident/logic.hpp"
#include "evident/parser.hpp"
#include "evident/scenarios.hpp"
#include "support/oracle.hpp"

using namespace evident;

namespace {

DefaultTheory theory_of(const char* text) {
  const KnowledgeBase kb = parse_program(text);
  return {kb.ground_theory(), kb.defaults};
}

DefaultTheory lottery(std::size_t n) {
  ScenarioRequest request;
  request.name = "lottery";
  request.lottery_size = n;
  return *build_scenario(request).default_theory();
}

// Every subset of distinct consequents, checked with is_extension.
std::set<std::set<Formula>> brute_force(const DefaultTheory& t) {
  std::vector<Formula> distinct;
  for (const auto& d : t.defaults) {
    const Formula n = normalize(d.consequent);
    bool seen = false;
    for (const auto& g : distinct) seen = seen || normalize(g) == n;
    if (!seen) distinct.push_back(d.consequent);
  }
  std::set<std::set<Formula>> out;
  for (std::uint32_t mask = 0; mask < (1u << distinct.size()); ++mask) {
    std::vector<Formula> generators;
    for (std::size_t i = 0; i < distinct.size(); ++i)
      if (mask >> i & 1u) generators.push_back(distinct[i]);
    if (is_extension(t, generators)) {
      std::set<Formula> key;
      for (const auto& g : generators) key.insert(normalize(g));
      out.insert(key);
    }
  }
  return out;
}

std::set<std::set<Formula>> computed(const DefaultTheory& t) {
  std::set<std::set<Formula>> out;
  for (const auto& e : compute_extensions(t)) {
    std::set<Formula> key;
    for (const auto& g : e.consequents) key.insert(normalize(g));
    out.insert(key);
  }
  return out;
}

}  // namespace

TEST_SUITE("default_logic") {
  TEST_CASE("the bird default") {
    const auto t = theory_of(R"(
const tweety. pred bird/1. pred flies/1. pred penguin/1.
fact bird(tweety).
default bird(tweety) : M flies(tweety) / flies(tweety).
)");
    const auto exts = compute_extensions(t);
    REQUIRE(exts.size() == 1);
    CHECK(exts[0].consequents.size() == 1);
    CHECK(is_extension(t, exts[0].consequents));
    CHECK_FALSE(is_extension(t, {}));
  }

  TEST_CASE("blocked and ungrounded defaults") {
    const auto blocked = theory_of(R"(
const a. pred p/1. pred q/1.
fact ~q(a).
default : M q(a) / q(a).
)");
    const auto exts = compute_extensions(blocked);
    REQUIRE(exts.size() == 1);
    CHECK(exts[0].consequents.empty());

    // p(a) would only be justified by itself.
    const auto circular = theory_of(R"(
const a. pred p/1.
default p(a) : M p(a) / p(a).
)");
    CHECK_FALSE(is_extension(circular, {Formula::atom("p", {"a"})}));
    CHECK(compute_extensions(circular).size() == 1);
  }

  TEST_CASE("a theory can lack extensions") {
    const auto t = theory_of(R"(
const a. pred p/1.
default : M ~p(a) / p(a).
)");
    CHECK(compute_extensions(t).empty());
  }

  TEST_CASE("inconsistent facts give the single trivial extension") {
    DefaultTheory t = theory_of("const a. pred p/1. default : M p(a) / p(a).");
    t.facts = {Formula::atom("p", {"a"}), Formula::negation(Formula::atom("p", {"a"}))};
    const auto exts = compute_extensions(t);
    REQUIRE(exts.size() == 1);
    CHECK(exts[0].consequents.empty());
  }

  TEST_CASE("lottery has one extension per winning ticket") {
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto t = lottery(n);
      const auto exts = compute_extensions(t);
      CHECK(exts.size() == n);
      std::set<std::size_t> missing;
      for (const auto& e : exts) {
        CHECK(e.consequents.size() == n - 1);
        // The one ticket not said to lose is the winner; each extension names exactly one.
        for (std::size_t j = 0; j < n; ++j) {
          const Formula loses = Formula::atom("loses", {"t" + std::to_string(j + 1)});
          bool found = false;
          for (const auto& c : e.consequents) found = found || c == loses;
          if (!found) missing.insert(j);
        }
        std::vector<Formula> facts = t.facts;
        facts.insert(facts.end(), e.consequents.begin(), e.consequents.end());
        CHECK(consistent(facts));
      }
      CHECK(missing.size() == n);
      CHECK(computed(t) == brute_force(t));
    }
  }

  TEST_CASE("cohabitation has two extensions") {
    ScenarioRequest request;
    request.name = "cohabitation";
    const auto t = *build_scenario(request).default_theory();
    CHECK(compute_extensions(t).size() == 2);
    CHECK(computed(t) == brute_force(t));
  }

  TEST_CASE("enumeration agrees with the exhaustive check") {
    oracle::Generator gen(31);
    int nonempty = 0;
    for (int round = 0; round < 150; ++round) {
      const int atoms = gen.uniform(2, 6);
      DefaultTheory t;
      const int facts = gen.uniform(0, 2);
      for (int i = 0; i < facts; ++i) t.facts.push_back(gen.clause(atoms));
      const int defaults = gen.uniform(1, 8);
      for (int i = 0; i < defaults; ++i) {
        Default d;
        if (gen.uniform(0, 2) == 0) d.prerequisite = gen.clause(atoms);
        d.consequent = gen.uniform(0, 3) ? gen.clause(atoms) : gen.formula(atoms, 2);
        // Mostly normal defaults, some with a different justification.
        d.justifications.push_back(gen.uniform(0, 3) ? d.consequent : gen.clause(atoms));
        t.defaults.push_back(std::move(d));
      }
      const auto exts = compute_extensions(t);
      for (const auto& e : exts) CHECK(is_extension(t, e.consequents));
      CHECK(computed(t) == brute_force(t));
      nonempty += !exts.empty();
    }
    CHECK(nonempty > 50);
  }

  TEST_CASE("too many defaults are refused") {
    DefaultTheory t;
    for (std::size_t i = 0; i <= kMaxDefaults; ++i) {
      const Formula f = Formula::atom("p", {"c" + std::to_string(i)});
      t.defaults.push_back({std::nullopt, {f}, f});
    }
    CHECK_THROWS_AS(compute_extensions(t), InvalidArgument);
  }
}
