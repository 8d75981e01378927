#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "selfref/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = selfref::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  return json::parse(r.out);
}

std::string data(const char* name) { return std::string(SELFREF_DATA_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("shift and srt1") {
  auto r = run({"shift", "--base", "russell"});
  CHECK(r.code == 0);
  CHECK(r.out == "♯R -> ∼♯R\n");
  const auto j = run_json({"shift", "--base", "russell"});
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["src"].get<std::string>() + " -> " + j["result"]["dst"].get<std::string>() ==
        lines(r.out).front());

  r = run({"srt1", "--base", "russell", "--trace"});
  CHECK(lines(r.out) == std::vector<std::string>{"1. axiom: R -> ∼♯", "2. shift: ♯R -> ∼♯R", "",
                                                 "♯R -> ∼♯R"});
  const auto t = run_json({"--trace", "srt1", "--base", "russell"});
  CHECK(t["trace"]["steps"].size() == 2);
  CHECK(t["trace"]["steps"][1]["rule"] == "shift");

  r = run({"srt1", "--category", data("lambda.pair")});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "gg -> Fgg");
  r = run({"srt1", "--language", "~P(#x)"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "3417 6x341752 2 -> ~P(#|^341752)");
}

TEST_CASE("iterate") {
  auto r = run({"iterate", "--base", "simplest", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 5);
  CHECK(lines(r.out).back() == "♯^5 -> ♯^10");
  const auto j = run_json({"iterate", "--base", "loop", "--n", "2"});
  CHECK(j["result"]["arrows"][1]["dst"] == "Fg♯g");
  CHECK(run({"iterate", "--base", "stop", "--n", "3"}).code == 0);
}

TEST_CASE("numbered language") {
  CHECK(run({"godel-encode", "∼P(x)"}).out == "34152\n");
  CHECK(run({"godel-decode", "34152"}).out == "~P(x)\n");
  CHECK(run({"godel-sharp", "34152"}).out == "341 6x34152 2\n");
  CHECK(run({"godel-compose", "4152", "∘", "3"}).out == "416662\n");
  CHECK(run({"godel-compose", "4152 ∘ 3"}).out == "416662\n");
  const auto j = run_json({"self-refuter"});
  CHECK(j["result"]["number"] == "3417 6x341752 2");
  CHECK(j["result"]["formula"] == "~P(#|^341752)");
  CHECK(j["result"]["code_matches"] == true);
  const auto m = run_json({"--materialize", "godel-sharp", "15"});
  CHECK(m["status"] == "ok");
  CHECK(m.dump().find("166666666666666662") == std::string::npos);
  CHECK(m.dump().find(std::string(15, '6')) != std::string::npos);
}

TEST_CASE("smullyan") {
  auto r = run({"smullyan", "report"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "6. conclusion: ~R~R is true but unprintable");
  const auto j = run_json({"smullyan", "check", "--model", data("truthful.model")});
  CHECK(j["result"]["truthful"] == true);
  CHECK(j["result"]["refuter"]["printed"] == false);
  const auto v = run_json({"smullyan", "violations", "--model", data("refuter.model")});
  CHECK(v["status"] == "ok");
  CHECK(run({"smullyan", "arrow", "~PR"}).out == "~PR -> ~P[R]\n");
  const auto s = run_json({"smullyan", "sample", "--models", "50", "--seed", "4"});
  CHECK(s["status"] == "ok");
}

TEST_CASE("diagonals") {
  auto j = run_json({"lawvere", "--input", data("negation.json")});
  CHECK(j["result"]["not_surjective"] == true);
  CHECK(j["result"]["delta_agrees"] == true);
  j = run_json({"lawvere", "--input", data("fixed.json")});
  CHECK(j["result"]["fixed_point"]["value"] == "1");
  j = run_json({"threeval", "--input", data("threeval.json")});
  CHECK(j["result"]["all_j"] == true);
  CHECK(j["result"]["diagonal"] == json::array({"J", "1"}));
  j = run_json({"lawvere", "--sweep", "3", "--alpha", "1 0"});
  CHECK(j["result"]["tables"] == 512);
  CHECK(j["result"]["representable"] == 0);
  j = run_json({"threeval", "--sweep", "2"});
  CHECK(j["result"]["tables"] == 81);
}

TEST_CASE("lambda and reflexive") {
  auto r = run({"lambda", "fixpoint", "F"});
  CHECK(lines(r.out).back() == "fixed point law: holds");
  auto j = run_json({"lambda", "--def", "g x = F(xx)", "reduce", "gg", "--steps", "3"});
  CHECK(j["result"]["term"] == "F(F(F(gg)))");
  CHECK(j["result"]["fuel_exhausted"] == true);
  j = run_json({"--fuel", "2", "lambda", "--def", "g x = F(xx)", "reduce", "gg", "--steps", "9"});
  CHECK(j["result"]["steps_used"] == 2);
  r = run({"reflexive", "--diagram", "link", "--max-len", "2", "enumerate"});
  CHECK(lines(r.out) == std::vector<std::string>{"A: B -> B", "B: A -> A", "AA: B -> B", "BB: A -> A"});
  j = run_json({"reflexive", "--diagram", data("trefoil.arcs"), "check"});
  CHECK(j["result"]["reflexive"] == true);
}

TEST_CASE("exit codes and error envelopes") {
  auto r = run({"godel-encode", "Q"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("InvalidSymbol") != std::string::npos);
  const auto e = run_json({"godel-decode", "348"});
  CHECK(e["status"] == "error");
  CHECK(e["error"]["code"] == "InvalidNumber");
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"iterate", "--n", "x"}).code == 2);
  CHECK(run({"lawvere", "--sweep", "2", "--alpha", "1", "0"}).code == 2);
  r = run({"--json", "bogus"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["status"] == "error");
  CHECK(run({"lawvere", "--input", data("missing.json")}).code != 0);
  CHECK(run({"lambda", "--def", "g x = Fy", "fixpoint", "F"}).code == 1);
  CHECK(run({"reflexive", "--max-len", "0", "enumerate"}).code != 0);
}
