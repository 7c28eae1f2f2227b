#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lpa/cli.hpp"
#include "lpa/simplicity.hpp"
#include "lpa/verdict_json.hpp"
#include "support.hpp"

using namespace lpa;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::string fixture(const char* name) { return std::string(LPA_FIXTURE_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpa-lie");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("analyze text reports") {
  auto r = run({"analyze", fixture("ball.graph"), "--field", "q"});
  CHECK(r.status == kExitOk);
  CHECK(has_line(r.out, "outcome: simple"));
  CHECK(has_line(r.out, "case: theorem-two"));
  CHECK(has_line(r.out, "W: {w}"));
  CHECK(has_line(r.out, "certificate: verified"));

  r = run({"analyze", fixture("r3.graph"), "--field", "f2"});
  CHECK(r.status == kExitOk);
  CHECK(has_line(r.out, "outcome: simple"));
  CHECK(has_line(r.out, "case: theorem-one"));

  r = run({"analyze", fixture("toe.graph"), "--field", "q"});
  CHECK(r.status == kExitOk);
  CHECK(has_line(r.out, "outcome: not-simple"));
  CHECK(has_line(r.out, "reason: membership-fails(v)"));
}

TEST_CASE("exit statuses") {
  CHECK(run({"analyze", fixture("undeclared.graph"), "--field", "q"}).status == kExitParseError);
  CHECK(run({"analyze", fixture("missing.graph"), "--field", "q"}).status == kExitInvalidRequest);
  CHECK(run({"analyze", fixture("ball.graph"), "--field", "f4"}).status == kExitInvalidRequest);
  CHECK(run({"analyze", fixture("ball.graph"), "--format", "xml"}).status == kExitInvalidRequest);
  CHECK(run({"frobnicate"}).status == kExitInvalidRequest);
  CHECK(run({"eval", fixture("toe.graph"), "v + x"}).status == kExitParseError);
  CHECK(run({"oracle-compare", fixture("r3.graph"), "--max-len", "2", "--work-limit", "5"}).status ==
        kExitInvalidRequest);
  CHECK(run({"oracle-compare", fixture("r3.graph"), "--max-len", "0"}).status == kExitInvalidRequest);
  for (const char* f : {"pt.graph", "loop.graph", "a2.graph", "r2.graph", "r3.graph", "toe.graph",
                        "ball.graph"})
    for (const char* field : {"q", "f2", "f3"})
      CHECK(run({"analyze", fixture(f), "--field", field}).status == kExitOk);
}

TEST_CASE("json and text reports agree") {
  for (const char* f : {"pt.graph", "a2.graph", "r2.graph", "r3.graph", "toe.graph", "ball.graph"}) {
    for (const char* field : {"q", "f2"}) {
      auto text = run({"analyze", fixture(f), "--field", field});
      auto json = run({"analyze", fixture(f), "--field", field, "--format", "json"});
      REQUIRE(json.status == kExitOk);
      auto j = nlohmann::ordered_json::parse(json.out);
      CHECK(j["tool"] == kToolName);
      CHECK(j["certificate_verified"] == true);
      const auto& v = j["verdict"];
      CHECK(has_line(text.out, "outcome: " + v["outcome"].get<std::string>()));
      CHECK(has_line(text.out, "case: " + v["case"].get<std::string>()));
      CHECK(has_line(text.out, "field: " + v["field"].get<std::string>()));
      if (!v["reason"].is_null()) CHECK(has_line(text.out, "reason: " + v["reason"].get<std::string>()));

      Graph g = parse_graph(std::string(f) == "pt.graph" ? test::kPt
                            : std::string(f) == "a2.graph" ? test::kA2
                            : std::string(f) == "r2.graph" ? test::kR2
                            : std::string(f) == "r3.graph" ? test::kR3
                            : std::string(f) == "toe.graph" ? test::kToe
                                                            : test::kBall);
      auto back = verdict_from_json(g, nlohmann::ordered_json(v));
      CHECK(verify_certificate(g, FieldSpec::parse(field), back).ok);
    }
  }
}

TEST_CASE("eval output") {
  auto r = run({"eval", fixture("toe.graph"), "[c',c] - [e,e']", "--field", "q"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.rfind("w\n", 0) == 0);
  r = run({"eval", fixture("toe.graph"), "v + e.e' + e"});
  CHECK(has_line(r.out, "S0: v + e.e'"));
  CHECK(has_line(r.out, "S1: e"));
  CHECK(has_line(r.out, "degree 1: e"));
  r = run({"eval", fixture("r2.graph"), "u - g*g' - h*h'"});
  CHECK(r.out.rfind("0\n", 0) == 0);
}

TEST_CASE("oracle-compare output") {
  for (auto [f, field, len] : {std::tuple{"toe.graph", "q", "2"}, std::tuple{"r3.graph", "f2", "2"},
                               std::tuple{"pt.graph", "q", "1"}}) {
    auto r = run({"oracle-compare", fixture(f), "--field", field, "--max-len", len});
    CHECK(r.status == kExitOk);
    CHECK(has_line(r.out, "spans equal"));
  }
}
