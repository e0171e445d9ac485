// In-process tests of the command-line front end: frozen JSON output for the
// documented commands, the exit-code contract (0 success / 1 failed check or
// domain error / 2 usage error), byte-level determinism, the stage-guard
// environment override, and no-abort behavior on hostile argument lists.

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("ostrowski");
  for (const auto& s : args) argv.push_back(s.c_str());
  std::ostringstream out, err;
  RunResult r;
  r.code = ostk::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json parsed(const RunResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("eval emits the documented JSON") {
  const RunResult r = run_cli(
      {"eval", "--kind", "padic", "--p", "3", "--n", "162", "--stage", "20"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out == R"json({
  "schema": "1",
  "command": "eval",
  "kind": "padic(3)",
  "n": "162",
  "stage": 20,
  "value_upper": "1/81",
  "exact_zero": false
}
)json");

  const RunResult z =
      run_cli({"eval", "--kind", "pchar", "--p", "3", "--n", "6"});
  CHECK(z.code == 0);
  CHECK(z.out == R"json({
  "schema": "1",
  "command": "eval",
  "kind": "pchar(3)",
  "n": "6",
  "stage": 20,
  "value_upper": "0",
  "exact_zero": true
}
)json");

  const RunResult pw = run_cli({"eval", "--kind", "power", "--inner", "padic",
                                "--p", "5", "--lambda", "-1/2", "--n", "25"});
  CHECK(pw.code == 0);
  const auto j = parsed(pw);
  CHECK(j["kind"] == "power(padic(5),-1/2)");
  CHECK(j["value_upper"] == "1/5");
  CHECK(j["exact_zero"] == false);
}

TEST_CASE("eval and classify text output") {
  const RunResult r =
      run_cli({"eval", "--kind", "padic", "--p", "3", "--n", "162", "--format",
               "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "|162| <= 1/81 at stage 20 under padic(3)\n");

  const RunResult c =
      run_cli({"classify", "--kind", "padic", "--p", "5", "--stage", "6",
               "--budget", "20", "--format", "text"});
  CHECK(c.code == 0);
  CHECK(c.out == "ideal: 5\nlambda bound at stage 6: -1\nna witness: 5\n");
}

TEST_CASE("classify JSON structure and determinism") {
  const std::vector<std::string> argv = {"classify", "--kind", "trivial",
                                         "--budget", "50", "--stage", "20"};
  const RunResult a = run_cli(argv);
  const RunResult b = run_cli(argv);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);  // byte-identical across runs
  const auto j = parsed(a);
  CHECK(j["schema"] == "1");
  CHECK(j["ideal"] == "0-candidate");
  CHECK(j["certificate"].is_null());
  REQUIRE(j["lambda_bounds"].size() == 21);
  for (const auto& e : j["lambda_bounds"]) CHECK(e["bound"] == "0");

  const RunResult p = run_cli(
      {"classify", "--kind", "padic", "--p", "5", "--stage", "6"});
  CHECK(p.code == 0);
  const auto pj = parsed(p);
  CHECK(pj["ideal"] == "5");
  CHECK(pj["certificate"]["na_witness"] == "5");
  REQUIRE(pj["lambda_bounds"].size() == 7);
  CHECK(pj["lambda_bounds"].back()["bound"] == "-1");
  CHECK(pj["lambda_bounds"].front()["bound"] == "0");
}

TEST_CASE("integer commands emit frozen JSON") {
  const RunResult f = run_cli({"factor", "--n", "360"});
  CHECK(f.code == 0);
  CHECK(f.out == R"json({
  "schema": "1",
  "command": "factor",
  "n": "360",
  "factors": [
    {
      "p": "2",
      "e": 3
    },
    {
      "p": "3",
      "e": 2
    },
    {
      "p": "5",
      "e": 1
    }
  ]
}
)json");
  const RunResult f2 = run_cli({"factor", "--n", "360"});
  CHECK(f.out == f2.out);

  const RunResult o = run_cli({"ord", "--p", "3", "--n", "162"});
  CHECK(o.code == 0);
  CHECK(o.out == R"json({
  "schema": "1",
  "command": "ord",
  "p": "3",
  "n": "162",
  "ord": 4
}
)json");

  const RunResult x = run_cli({"extract-prime", "6", "10"});
  CHECK(x.code == 0);
  CHECK(x.out == R"json({
  "schema": "1",
  "command": "extract-prime",
  "elements": [
    "6",
    "10"
  ],
  "result": "principal",
  "ideal": "2"
}
)json");

  const RunResult amb = run_cli({"extract-prime", "15"});
  CHECK(amb.code == 0);
  const auto aj = parsed(amb);
  CHECK(aj["result"] == "ambiguous");
  REQUIRE(aj["candidates"].size() == 2);
  CHECK(aj["candidates"][0] == "3");
  CHECK(aj["candidates"][1] == "5");

  const RunResult neg = run_cli({"factor", "--n", "-12", "--format", "text"});
  CHECK(neg.code == 0);
  CHECK(neg.out == "-12 = -1 * 2^2 * 3\n");
}

TEST_CASE("reconstruct command") {
  const RunResult r = run_cli(
      {"reconstruct", "--ideal", "5", "--lambda", "-1/2", "--n", "25"});
  CHECK(r.code == 0);
  CHECK(r.out == R"json({
  "schema": "1",
  "command": "reconstruct",
  "ideal": "5",
  "lambda": "-1/2",
  "closed_form": "power(padic(5),-1/2)",
  "n": "25",
  "stage": 20,
  "value_upper": "1/5",
  "exact_zero": false
}
)json");

  const RunResult e = run_cli(
      {"reconstruct", "--ideal", "0", "--lambda", "1/2", "--n", "4"});
  CHECK(e.code == 0);
  const auto j = parsed(e);
  CHECK(j["ideal"] == "0-candidate");
  CHECK(j["closed_form"] == "power(euclid,1/2)");
  CHECK(j["value_upper"] == "2");

  const RunResult bare =
      run_cli({"reconstruct", "--ideal", "7", "--lambda", "-inf"});
  CHECK(bare.code == 0);
  const auto bj = parsed(bare);
  CHECK(bj["closed_form"] == "power(padic(7),-inf)");
  CHECK(!bj.contains("value_upper"));
}

TEST_CASE("roundtrip command") {
  const RunResult r =
      run_cli({"roundtrip", "--kind", "padic", "--p", "3", "--budget", "30",
               "--stage", "12", "--window", "-20:20"});
  CHECK(r.code == 0);
  const auto j = parsed(r);
  CHECK(j["report"]["verdict"] == "pass");
  CHECK(j["report"]["witness"].is_null());
  CHECK(j["report"]["oracle_checked"] == true);
  CHECK(j["report"]["window"]["lo"] == -20);
  CHECK(j["report"]["window"]["hi"] == 20);
}

TEST_CASE("classify-q outcomes and exit codes") {
  const RunResult pp = run_cli({"classify-q", "--kind", "power", "--inner",
                                "padic", "--p", "2", "--lambda", "-3"});
  CHECK(pp.code == 0);
  const auto pj = parsed(pp);
  CHECK(pj["place"]["type"] == "padic-power");
  CHECK(pj["place"]["p"] == "2");
  CHECK(pj["place"]["alpha"]["lo"] == "3");
  CHECK(pj["place"]["alpha"]["hi"] == "3");

  const RunResult eu = run_cli({"classify-q", "--kind", "euclid"});
  CHECK(eu.code == 0);
  const auto ej = parsed(eu);
  CHECK(ej["place"]["type"] == "euclid-power");
  CHECK(ej["place"]["alpha"]["lo"] == "1");
  CHECK(ej["place"]["alpha"]["hi"] == "1");

  // Triviality is never refuted within a budget: structured error, exit 1.
  for (const char* budget : {"100", "10000"}) {
    const RunResult tr =
        run_cli({"classify-q", "--kind", "trivial", "--budget", budget});
    CHECK(tr.code == 1);
    const auto tj = parsed(tr);
    CHECK(tj["schema"] == "1");
    CHECK(tj["command"] == "classify-q");
    CHECK(tj["error"]["code"] == "TrivialityNotRefuted");
  }

  // No finite place carries a p-characteristic kind: domain error, exit 1.
  const RunResult pc = run_cli({"classify-q", "--kind", "pchar", "--p", "3"});
  CHECK(pc.code == 1);
  CHECK(parsed(pc)["error"]["code"] == "BadParameter");
  const RunResult pinf =
      run_cli({"classify-q", "--kind", "power", "--inner", "padic", "--p",
               "3", "--lambda", "-inf"});
  CHECK(pinf.code == 1);
  CHECK(parsed(pinf)["error"]["code"] == "BadParameter");

  // Text mode reports compute-phase errors on stderr instead.
  const RunResult txt =
      run_cli({"classify-q", "--kind", "trivial", "--format", "text"});
  CHECK(txt.code == 1);
  CHECK(txt.out.empty());
  CHECK(txt.err.find("TrivialityNotRefuted") != std::string::npos);
}

TEST_CASE("contradiction exits 1 with the result still printed") {
  const RunResult x = run_cli({"extract-prime", "4", "9"});
  CHECK(x.code == 1);
  const auto j = parsed(x);
  CHECK(j["result"] == "contradiction");
}

TEST_CASE("suite command smoke") {
  const RunResult r = run_cli({"suite", "fundamental", "--stage", "12"});
  CHECK(r.code == 0);
  const auto j = parsed(r);
  CHECK(j["suite"] == "fundamental");
  CHECK(j["failed"] == 0);
  CHECK(j["passed"] == j["items"].size());
  for (const auto& it : j["items"]) CHECK(it["verdict"] == "pass");

  const RunResult t =
      run_cli({"suite", "fundamental", "--stage", "12", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("passed 8 of 8") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with usage text on stderr") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"bogus"},
      {"eval"},
      {"eval", "--kind"},
      {"eval", "--kind", "padic", "--p", "3"},
      {"eval", "--bogus", "1", "--kind", "trivial", "--n", "1"},
      {"eval", "--kind", "padic", "--p", "4", "--n", "5"},
      {"eval", "--kind", "padic", "--p", "3", "--n", "5", "--stage", "70"},
      {"eval", "--kind", "padic", "--p", "3", "--n", "5", "--stage", "-1"},
      {"eval", "--kind", "padic", "--p", "3", "--n", "5", "--stage", "abc"},
      {"eval", "--kind", "padic", "--p", "3", "--n", "5", "--format", "yaml"},
      {"eval", "--kind", "power", "--inner", "euclid", "--lambda", "2", "--n",
       "3"},
      {"eval", "--kind", "power", "--inner", "euclid", "--lambda", "-inf",
       "--n", "3"},
      {"eval", "--kind", "power", "--inner", "bogus", "--lambda", "1/2",
       "--n", "3"},
      {"eval", "--n", "5", "--n", "6", "--kind", "trivial"},
      {"classify", "--kind", "trivial", "--budget", "1"},
      {"classify", "--kind", "trivial", "--budget", "1000001"},
      {"roundtrip", "--kind", "trivial", "--window", "10:5"},
      {"roundtrip", "--kind", "trivial", "--window", "x"},
      {"reconstruct", "--ideal", "5", "--lambda", "1/2"},
      {"reconstruct", "--ideal", "0", "--lambda", "-1/2"},
      {"reconstruct", "--ideal", "4", "--lambda", "-1"},
      {"reconstruct", "--ideal", "5", "--lambda", "abc"},
      {"factor", "--n", "0"},
      {"factor", "--n", "10000000000000"},
      {"ord", "--p", "6", "--n", "3"},
      {"ord", "--p", "3", "--n", "0"},
      {"extract-prime"},
      {"extract-prime", "0"},
      {"extract-prime", "abc"},
      {"suite"},
      {"suite", "bogus"},
      {"suite", "axioms", "extra"},
      {"--", "eval"},
  };
  for (const auto& argv : bad) {
    const RunResult r = run_cli(argv);
    CAPTURE(argv.empty() ? std::string("<none>") : argv.front());
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("usage:") != std::string::npos);
  }
}

TEST_CASE("help and harmless inputs never abort") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"help"}).code == 0);
  CHECK(run_cli({"-h"}).code == 0);
  CHECK(run_cli({"--help"}).out.find("usage:") != std::string::npos);

  // No magnitude guard on eval's n: the trivial kind answers instantly.
  const RunResult big = run_cli(
      {"eval", "--kind", "trivial", "--n", "99999999999999999999999999"});
  CHECK(big.code == 0);
  CHECK(parsed(big)["value_upper"] == "1");

  const RunResult zero = run_cli({"eval", "--kind", "euclid", "--n", "0"});
  CHECK(zero.code == 0);
  CHECK(parsed(zero)["value_upper"] == "0");
  CHECK(parsed(zero)["exact_zero"] == true);
}

TEST_CASE("stage guard follows OSTROWSKI_MAX_STAGE") {
  unsetenv("OSTROWSKI_MAX_STAGE");
  const std::vector<std::string> deep = {"eval", "--kind", "padic", "--p",
                                         "3",    "--n",    "5",     "--stage",
                                         "70"};
  CHECK(run_cli(deep).code == 2);

  setenv("OSTROWSKI_MAX_STAGE", "80", 1);
  const RunResult ok = run_cli(deep);
  CHECK(ok.code == 0);
  CHECK(parsed(ok)["value_upper"] == "1");

  setenv("OSTROWSKI_MAX_STAGE", "abc", 1);
  const RunResult noted =
      run_cli({"eval", "--kind", "padic", "--p", "3", "--n", "5"});
  CHECK(noted.code == 0);
  CHECK(noted.err.find("OSTROWSKI_MAX_STAGE") != std::string::npos);
  CHECK(run_cli(deep).code == 2);

  setenv("OSTROWSKI_MAX_STAGE", "10", 1);
  CHECK(run_cli({"eval", "--kind", "padic", "--p", "3", "--n", "5", "--stage",
                 "20"})
            .code == 2);

  unsetenv("OSTROWSKI_MAX_STAGE");
}
