#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "nid/cli/run.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "nid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nid::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(NID_TEST_DATA_DIR) + "/fixtures/" + name; }

nid::cli::json result(const Outcome& o) { return nid::cli::json::parse(o.out); }

}  // namespace

TEST_CASE("closed sets of R1") {
  const auto o = run({"closed", fixture("r1.json")});
  CHECK(o.code == 0);
  const auto j = result(o);
  CHECK(j["command"] == "closed");
  CHECK(j["kind"] == "rules");
  CHECK(j["closed"].dump() == R"([[],["2"],["1","2"]])");
  CHECK(j["input-digest"].get<std::string>().size() == 16);
}

TEST_CASE("output is byte-stable") {
  for (const char* cmd : {"closed", "generators", "full"}) {
    const auto a = run({cmd, fixture("r1.json")});
    const auto b = run({cmd, fixture("r1.json")});
    CHECK(a.out == b.out);
  }
  CHECK(run({"closed", fixture("r1.json"), "--pretty"}).out.find("\n  ") != std::string::npos);
}

TEST_CASE("rule commands") {
  CHECK(result(run({"minimal", fixture("r2.json")}))["minimal"].dump() == R"([["a","c"],["b","c"]])");
  CHECK(result(run({"generators", fixture("r1.json")}))["generators"].dump() == R"([["2"],["1","2"]])");
  CHECK(result(run({"lfp", fixture("chain.json")}))["lfp"].dump() == R"(["1","2","3"])");
  const auto c = result(run({"classify", fixture("r2.json")}));
  CHECK(c["elementary"] == false);
  CHECK(c["max-conclusion"] == 2);
}

TEST_CASE("encoding commands") {
  CHECK(result(run({"prime-ideals", fixture("ring12.json")}))["prime-ideals"].dump() ==
        R"([["0","3","6","9"],["0","2","4","6","8","10"]])");
  const auto b = result(run({"bisim", fixture("loops.json")}));
  CHECK(b["bisimilar"] == true);
  CHECK(b["largest-bisimulation"].size() == 2);
  CHECK(result(run({"fullness", fixture("fullness.json")}))["universe-size"] == 4);
  CHECK(result(run({"sga", fixture("sga.json")}))["models"].dump() == R"([[],["u"],["s","u"]])");
  const auto back = result(run({"sga", fixture("r1.json")}));
  CHECK(back["sga"]["clauses"].dump() == R"([{"sigma":["1"],"gamma":[["2"]]}])");
}

TEST_CASE("game, linear extension, topology and coalgebra commands") {
  const auto g = result(run({"game", fixture("theory.json")}));
  CHECK(g["models"].size() == 7);
  CHECK(g["subformulas"] == 4);
  CHECK(run({"game", fixture("theory.txt")}).out.find("\"models\"") != std::string::npos);
  CHECK(result(run({"game", fixture("theory.txt")}))["models"] == g["models"]);

  const auto l = result(run({"linext", fixture("vshape.json")}));
  CHECK(l["linear-extensions"].dump() == R"([["1","2","3"],["1","3","2"]])");

  CHECK(result(run({"points", fixture("sierpinski.json")}))["points"].dump() == R"([["t"],["t","u"]])");
  CHECK(result(run({"flat", fixture("sierpinski.json")}))["flat"] == false);
  CHECK(result(run({"morphisms", fixture("spaces.json")}))["morphisms"].size() >= 1);

  const auto m = result(run({"mtype", fixture("tree.json"), "--depth", "1"}));
  CHECK(m["wellfounded"].dump() == R"(["x","y"])");
  CHECK(m["unfold"]["y"].size() == 1);
}

TEST_CASE("verify passes on every fixture and fails when perturbed") {
  for (const char* f : {"r1.json", "r2.json", "chain.json", "ring12.json", "theory.json", "theory.txt",
                        "sierpinski.json", "loops.json", "vshape.json", "sga.json", "fullness.json", "tree.json",
                        "spaces.json"}) {
    INFO(f);
    const auto ok = run({"verify", fixture(f)});
    CHECK(ok.code == 0);
    CHECK(result(ok)["pass"] == true);
    const auto bad = run({"verify", fixture(f), "--perturb"});
    CHECK(bad.code == 1);
    CHECK(result(bad)["pass"] == false);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"closed", "--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"closed", fixture("missing.json")}).code == 2);
  CHECK(run({"lfp", fixture("r2.json")}).code == 1);
  CHECK(run({"closed", fixture("r1.json"), "--max-universe", "1"}).code == 1);
  CHECK(run({"closed", fixture("ring12.json")}).code == 2);
  CHECK(run({"prime-ideals", fixture("r1.json")}).code == 2);
}

TEST_CASE("the cap can be overridden from the environment") {
  ::setenv(nid::cli::kCapVariable, "1", 1);
  const auto capped = run({"closed", fixture("r1.json")});
  const auto flagged = run({"closed", fixture("r1.json"), "--max-universe", "2"});
  ::setenv(nid::cli::kCapVariable, "x", 1);
  const auto junk = run({"closed", fixture("r1.json")});
  ::unsetenv(nid::cli::kCapVariable);
  CHECK(capped.code == 1);
  CHECK(flagged.code == 0);
  CHECK(junk.code == 2);
}

TEST_CASE("help lists every subcommand") {
  const auto help = run({"--help"}).out;
  for (const char* c : {"closed", "minimal", "generators", "full", "lfp", "classify", "prime-ideals", "bisim",
                        "fullness", "sga", "game", "linext", "points", "flat", "morphisms", "mtype", "verify"})
    CHECK(help.find(c) != std::string::npos);
  CHECK(help.find(nid::cli::kCapVariable) != std::string::npos);
}
