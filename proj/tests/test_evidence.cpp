#include <random>

#include "doctest.h"
#include "evident/error.hpp"
#include "evident/evidence.hpp"
#include "evident/parser.hpp"
#include "support/oracle.hpp"

using namespace evident;

namespace {

const char* kZoo = R"(
const tweety, opus, sam.
pred bird/1. pred penguin/1. pred flies/1. pred animal/1. pred emu/1.
rule all x: penguin(x) -> bird(x).
rule all x: emu(x) -> bird(x).
rule all x: bird(x) -> animal(x).
rule all x: penguin(x) -> ~flies(x).
fact bird(tweety).
fact penguin(opus).
stat x: flies(x) | bird(x) in [0.95, 1].
)";

EvidenceBase zoo() { return EvidenceBase::from_program(parse_program(kZoo)); }

OpenFormula open(const EvidenceBase& base, const std::string& body) {
  // Parse over the signature extended by the variable as a constant, then
  // rename it back.
  Signature sig = base.signature();
  sig.declare_constant("x");
  return {"x", parse_formula(body, sig)};
}

}  // namespace

TEST_SUITE("evidence") {
  TEST_CASE("construction rejects inconsistent certain knowledge") {
    CHECK_THROWS_AS(EvidenceBase::from_program(parse_program("const a. pred p/1. fact p(a). fact ~p(a).")),
                    EvidenceConflict);
    Signature sig;
    sig.declare_constant("a");
    sig.declare_predicate("p", 1);
    CHECK_THROWS_AS(EvidenceBase(sig, {Formula::atom("q", {"a"})}, {}), InvalidArgument);
  }

  TEST_CASE("assert keeps the certain part consistent") {
    const EvidenceBase base = zoo();
    const auto& sig = base.signature();
    const EvidenceBase more = assert_evidence(base, parse_item("fact emu(sam).", sig));
    CHECK(more.compiled().satisfiable());
    CHECK(more.entails(parse_formula("animal(sam)", sig)));
    CHECK_FALSE(base.entails(parse_formula("animal(sam)", sig)));
    CHECK_THROWS_AS(assert_evidence(base, parse_item("fact flies(opus).", sig)), EvidenceConflict);
    CHECK_THROWS_AS(assert_evidence(base, parse_item("rule all x: bird(x) -> flies(x).", sig)), EvidenceConflict);
    // A statistic never conflicts.
    const EvidenceBase with_stat = assert_evidence(base, parse_item("stat x: flies(x) | penguin(x) in [0, 0.01].", sig));
    CHECK(with_stat.statistics().size() == 2);
  }

  TEST_CASE("random asserts preserve consistency") {
    const EvidenceBase base = zoo();
    const auto& sig = base.signature();
    const std::vector<std::string> preds{"bird", "penguin", "flies", "animal", "emu"};
    std::mt19937_64 rng(5);
    EvidenceBase current = base;
    int accepted = 0;
    int refused = 0;
    for (int i = 0; i < 200; ++i) {
      const auto& p = preds[rng() % preds.size()];
      const auto& c = sig.constants()[rng() % sig.constants().size()];
      const std::string text = std::string("fact ") + (rng() % 2 ? "~" : "") + p + "(" + c + ").";
      try {
        current = assert_evidence(current, parse_item(text, sig));
        ++accepted;
      } catch (const EvidenceConflict&) {
        ++refused;
      }
      CHECK(oracle::satisfiable(current.certain_theory()));
    }
    CHECK(accepted > 0);
    CHECK(refused > 0);
  }

  TEST_CASE("assert then retract restores the original") {
    const EvidenceBase base = zoo();
    const auto& sig = base.signature();
    for (const char* text : {"fact emu(sam).", "rule all x: emu(x) -> ~flies(x).",
                             "stat x: flies(x) | penguin(x) in [0, 0.01].", "fact bird(tweety)."}) {
      const EvidenceItem item = parse_item(text, sig);
      CHECK(retract_evidence(assert_evidence(base, item), item) == base);
    }
    CHECK_THROWS_AS(retract_evidence(base, parse_item("fact emu(sam).", sig)), InvalidArgument);
  }

  TEST_CASE("class membership and subsumption") {
    const EvidenceBase base = zoo();
    CHECK(class_applies(base, open(base, "bird(x)"), "opus"));
    CHECK(class_applies(base, open(base, "animal(x)"), "tweety"));
    CHECK_FALSE(class_applies(base, open(base, "penguin(x)"), "tweety"));
    CHECK(class_subsumes(base, open(base, "penguin(x)"), open(base, "bird(x)")));
    CHECK(strictly_more_specific(base, open(base, "penguin(x)"), open(base, "bird(x)")));
    CHECK_FALSE(strictly_more_specific(base, open(base, "bird(x)"), open(base, "penguin(x)")));
    CHECK_FALSE(strictly_more_specific(base, open(base, "bird(x)"), open(base, "bird(x) & animal(x)")));
  }

  TEST_CASE("subsumption is reflexive and transitive") {
    const EvidenceBase base = zoo();
    const std::vector<std::string> preds{"bird", "penguin", "flies", "animal", "emu"};
    std::mt19937_64 rng(9);
    auto random_class = [&] {
      std::string text = preds[rng() % preds.size()] + "(x)";
      const int extra = static_cast<int>(rng() % 3);
      for (int i = 0; i < extra; ++i) {
        const char* op = rng() % 2 ? " & " : " v ";
        text = "(" + text + ")" + op + (rng() % 3 == 0 ? "~" : "") + preds[rng() % preds.size()] + "(x)";
      }
      return open(base, text);
    };
    int chains = 0;
    for (int i = 0; i < 300; ++i) {
      const OpenFormula a = random_class();
      const OpenFormula b = random_class();
      const OpenFormula c = random_class();
      CHECK(class_subsumes(base, a, a));
      if (class_subsumes(base, a, b) && class_subsumes(base, b, c)) {
        ++chains;
        CHECK(class_subsumes(base, a, c));
      }
    }
    CHECK(chains > 0);
  }
}
