#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "evident_cli/cli.hpp"
#include "evident_cli/json_writer.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = evident::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

ordered_json json(std::vector<std::string> args, int expected = 0) {
  args.insert(args.begin(), {"--format", "json"});
  const Result r = run(args);
  REQUIRE_MESSAGE(r.code == expected, r.err);
  return ordered_json::parse(r.out);
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("evident-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

const char* kNixon = R"(
const nixon, other.
pred quaker/1. pred republican/1. pred pacifist/1.
fact quaker(nixon). fact republican(nixon).
stat x: pacifist(x) | quaker(x) in [0.9, 1].
stat x: ~pacifist(x) | republican(x) in [0.9, 1].
default quaker(nixon) : M pacifist(nixon) / pacifist(nixon).
default republican(nixon) : M ~pacifist(nixon) / ~pacifist(nixon).
)";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("query reports interval, verdict and trace") {
    TempDir dir;
    const auto file = dir.write("nixon.ev", kNixon);
    const auto doc = json({"query", file, "pacifist(nixon)"});
    CHECK(doc["command"] == "query");
    CHECK(doc["status"] == "ok");
    CHECK(doc["version"] == evident::cli::kVersion);
    const auto& payload = doc["payload"];
    CHECK(payload["interval"]["lower"] == 0.0);
    CHECK(payload["interval"]["upper"] == 1.0);
    CHECK(payload["accepted"] == false);
    CHECK(payload["candidates"].size() == 2);
    CHECK(payload["trace"].back()["kind"] == "result");

    const Result text = run({"query", file, "quaker(nixon)"});
    CHECK(text.code == 0);
    CHECK(text.out.find("interval: [1.000000, 1.000000]") != std::string::npos);
  }

  TEST_CASE("query on a scenario stage file") {
    TempDir dir;
    const Result program = run({"scenario", "tweety", "--program", "penguin"});
    REQUIRE(program.code == 0);
    const auto file = dir.write("tweety.ev", program.out);
    const auto doc = json({"--epsilon", "0.05", "query", file, "flies(tweety)"});
    CHECK(doc["payload"]["interval"]["upper"] == 0.0);
    CHECK(doc["payload"]["accepted"] == false);
  }

  TEST_CASE("errors produce only the error document") {
    TempDir dir;
    const auto file = dir.write("nixon.ev", kNixon);
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"query", file, "flies("}, {"query", file, "nothing(nixon)"}, {"query", dir.write("bad.ev", "const.")},
             {"query", "/nonexistent/file.ev", "p(a)"}, {"frobnicate"}, {"scenario", "lottery", "--n", "1"},
             {"--epsilon", "0.7", "scenario", "tweety"}}) {
      const auto doc = json(args, evident::cli::kUsage);
      CHECK(doc["status"] == "error");
      CHECK(doc["error"]["exit_code"] == 2);
      CHECK(doc["error"]["kind"] == "usage");
      CHECK_FALSE(doc.contains("payload"));
    }
    const Result r = run({"query", file, "flies("});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }

  TEST_CASE("evaluation errors exit 3") {
    TempDir dir;
    const auto file = dir.write("nixon.ev", kNixon);
    const auto universe = dir.write("u.txt", "pacifist(nixon)\n~pacifist(nixon)\n");
    auto doc = json({"diff", file, "--universe", universe, "--add", "fact ~quaker(nixon)."}, evident::cli::kEvaluation);
    CHECK(doc["error"]["kind"] == "evaluation");
    doc = json({"--atom-budget", "2", "query", file, "pacifist(nixon)"}, evident::cli::kEvaluation);
    CHECK(doc["error"]["exit_code"] == 3);
  }

  TEST_CASE("corpus and diff") {
    TempDir dir;
    const auto file = dir.write("nixon.ev", kNixon);
    const auto universe = dir.write("u.txt", "# nixon\npacifist(nixon)\n\n~pacifist(nixon)\nquaker(nixon)\nquaker(nixon)\n");
    const auto corpus = json({"corpus", file, "--universe", universe});
    CHECK(corpus["payload"]["universe_size"] == 3);
    CHECK(corpus["payload"]["accepted"] == ordered_json::array({"quaker(nixon)"}));
    CHECK(corpus["payload"]["report"]["jointly_consistent"] == true);

    const auto diff = json({"diff", file, "--universe", universe, "--add", "fact pacifist(nixon)."});
    CHECK(diff["payload"]["added"] == ordered_json::array({"pacifist(nixon)"}));
    CHECK(diff["payload"]["retracted"].empty());
    CHECK(diff["payload"]["interval_changed"].size() == 2);
  }

  TEST_CASE("extensions and derivations") {
    TempDir dir;
    const auto file = dir.write("nixon.ev", kNixon);
    const auto ext = json({"extensions", file});
    CHECK(ext["payload"]["count"] == 2);
    CHECK(ext["payload"]["extensions"].size() == 2);

    const auto mh = json({"mh-trace", file, "--normally", "pacifist(nixon)", "--goal", "Probably(pacifist(nixon))",
                          "--rules", "2,3"});
    CHECK(mh["payload"]["outcome"] == "all-reached");
    CHECK(mh["payload"]["replay"] == true);
    const auto none = json({"mh-trace", file, "--goal", "Probably(pacifist(nixon))", "--rules", "1,2,3"});
    CHECK(none["payload"]["outcome"] == "saturated");
    CHECK(none["payload"]["unreached"].size() == 1);
  }

  TEST_CASE("scenario runs report the manifest") {
    const auto doc = json({"scenario", "lottery", "--n", "4"});
    const auto& p = doc["payload"];
    CHECK(p["extensions"]["count"] == 4);
    CHECK(p["report"]["jointly_consistent"] == false);
    CHECK(p["report"]["cores"][0].size() == 5);
    CHECK(p["derivations"].size() == 2);
    for (const auto& m : p["manifest"]) CHECK(m["pass"] == true);

    // Tweety's manifest assumes its own acceptance level.
    const auto failed = json({"--epsilon", "0.01", "scenario", "tweety"}, evident::cli::kManifest);
    CHECK(failed["error"]["kind"] == "manifest");
    CHECK_FALSE(failed["error"]["failures"].empty());
  }

  TEST_CASE("expected utility comparison") {
    const auto doc = json({"eu-compare", "--count", "10", "--error-prob", "0.25", "--gain", "5", "--loss", "1"});
    CHECK(doc["payload"]["probabilistic"]["expected_utility"] == 35.0);
    CHECK(doc["payload"]["acceptance"]["expected_utility"] == 0.0);
    CHECK(doc["payload"]["acceptance"]["decision"] == "discard");
  }

  TEST_CASE("structured output round-trips byte for byte") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--format", "json", "scenario", "tweety"},
             {"--format", "json", "scenario", "nixon"},
             {"--format", "json", "scenario", "cohabitation"},
             {"--format", "json", "scenario", "lottery", "--n", "5"},
             {"--format", "json", "scenario", "measurement", "--count", "40"},
             {"--format", "json", "eu-compare", "--error-prob", "0.3"}}) {
      const Result first = run(args);
      REQUIRE(first.code == 0);
      CHECK(evident::cli::write_json(ordered_json::parse(first.out)) == first.out);
      CHECK(run(args).out == first.out);
    }
  }

  TEST_CASE("help and version") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"scenario", "--help"}).code == 0);
    const Result v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(evident::cli::kVersion) != std::string::npos);
  }
}
