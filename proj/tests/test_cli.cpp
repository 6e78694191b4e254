#include <doctest.h>

#include <cstdlib>

#include "mfci/cli.hpp"
#include "mfci/errors.hpp"
#include "mfci/operators.hpp"

using namespace mfci;

namespace {

CliResult run(const std::string& command, const std::string& fx, std::vector<std::pair<std::string, std::string>> extra = {}) {
  CliOptions opt;
  opt.command = command;
  opt.fixture = fx;
  for (auto& [k, v] : extra) {
    if (k == "module") opt.module = v;
    if (k == "other") opt.other = v;
    if (k == "family") opt.family = v;
    if (k == "op") opt.op = v;
    if (k == "verify") opt.verify = v;
    if (k == "max-degree") opt.max_degree = std::stoi(v);
  }
  return run_command(opt);
}

const char* kProblem = R"({
  "schema": 1,
  "ring": {"characteristic": 101, "variables": ["x", "y"], "degrees": [1, 1]},
  "f": ["x^2", "y^2"],
  "module": {"cyclic": ["x", "y^2"]},
  "options": {"max_degree": 5, "q_range": [0, 4], "seed": 3}
})";

}  // namespace

TEST_CASE("problem files round trip") {
  ProblemSpec p = parse_problem(kProblem);
  CHECK(p.variables == std::vector<std::string>{"x", "y"});
  CHECK(p.cyclic.size() == 2);
  CHECK(p.max_degree == 5);
  CHECK(p.q_hi == 4);
  CHECK(parse_problem(problem_json(p).dump(2)) == p);
  for (auto name : {"h1", "ci2", "ci2-rx", "ci3", "random:7"}) {
    CAPTURE(name);
    ProblemSpec q = fixture_problem(fixture(name));
    CHECK(parse_problem(problem_json(q).dump()) == q);
    CHECK(fixture_problem(problem_fixture(q)) == q);
  }
  CHECK(fixture_problem(fixture("random:7")) == fixture_problem(fixture("random:7")));
}

TEST_CASE("presentation input") {
  const char* text = R"({"ring": {"variables": ["x"]}, "f": ["x^2"],
    "module": {"presentation": [["x", "0"], ["0", "x"]], "twists": [0, 1]}})";
  Fixture fx = problem_fixture(parse_problem(text));
  CHECK(fx.pres_q.rows() == 2);
  CHECK(fx.pres_q.src.tw == std::vector<int>{-1, 0});
  ProblemSpec p = fixture_problem(fx);
  CHECK(fixture_problem(problem_fixture(p)) == p);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_problem("{\n  \"ring\": {\"variables\": [\"x\"]},\n  \"f\": [\"x^^2\"]\n}");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 9);
  }
  try {
    parse_problem("{\n  \"ring\": {\"variables\": [\"x\"]}\n  \"f\": []\n}");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(problem_fixture(parse_problem(R"({"ring": {"variables": ["x"]}, "f": ["x^2"], "module": {"cyclic": ["x^3"]}})")),
                  NotAnRModule);
}

TEST_CASE("artifacts round trip") {
  Fixture fx = fixture("ci2");
  auto sys = fixture_homotopies(fx);
  GradedMF E = fixture_mf(fx, sys);
  CHECK(mf_from_json(Json::parse(mf_json(E).dump()), E.ctx) == E);
  ChainComplex C = standard_resolution(sys, fx.R, 4).complex;
  CHECK(complex_from_json(Json::parse(complex_json(C).dump()), fx.R) == C);
  auto I = std::vector<Poly>{fx.Q->parse("x^2 - 3*y"), fx.Q->parse("y")};
  CHECK(ideal_from_json(ideal_json(I, fx.Q->ring()), *fx.Q) == I);
}

TEST_CASE("mf-build on ci2") {
  auto r = run("mf-build", "ci2");
  CHECK(r.exit_code == 0);
  CHECK(r.report["passed"] == true);
  auto& mf = r.report["outputs"]["mf"];
  CHECK(mf["E1"]["tw"].size() == 2);
  CHECK(mf["E0"]["tw"].size() == 2);
  CHECK(mf["W"] == "x^2*T_1+y^2*T_2");
}

TEST_CASE("support of R/(x) against R/(y) is empty") {
  auto r = run("support", "ci2", {{"module", "R/(x)"}, {"other", "R/(y)"}});
  CHECK(r.exit_code == 0);
  auto& o = r.report["outputs"];
  CHECK(o["empty"] == true);
  CHECK(o["ext_window"]["vanishing"] == true);
}

TEST_CASE("resolve a free module") {
  auto r = run("resolve", "ci2", {{"module", "R"}});
  CHECK(r.exit_code == 0);
  CHECK(r.report["outputs"]["length"] == 0);
  CHECK(r.report["outputs"]["ranks"] == Json::array({1}));
}

TEST_CASE("every command runs on h1") {
  for (auto& c : command_names()) {
    CAPTURE(c);
    auto r = run(c, "h1", {{"max-degree", "4"}});
    CAPTURE(r.report.dump());
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("error exit codes") {
  auto r = run("mf-build", "nope");
  CHECK(r.exit_code == 1);
  CHECK(r.report["error"]["kind"] == "UnknownFixture");
  CHECK(run("nonsense", "h1").exit_code == 1);
  CHECK(run("mf-op", "h1", {{"op", "cube"}}).exit_code == 1);
  CHECK(run("stable-ext", "ci2", {{"other", "R/(x"}}).exit_code == 1);
  CliOptions opt;
  opt.command = "ext";
  opt.problem_text = "{\"ring\": {\"variables\": [\"x\"]},\n \"f\": [\"x^2\" }";
  auto e = run_command(opt);
  CHECK(e.exit_code == 1);
  CHECK(e.report["error"]["line"] == 2);
  CHECK(exit_code_for("RouteMismatch") == 2);
  CHECK(exit_code_for("MFEquationFailure") == 2);
  CHECK(exit_code_for("WindowTooSmall") == 1);
}

TEST_CASE("reports do not depend on the thread count") {
  setenv("MFCI_THREADS", "1", 1);
  auto a = run("verify-identities", "ci2").report.dump();
  auto b = run("verify-supports", "ci2").report.dump();
  setenv("MFCI_THREADS", "4", 1);
  CHECK(run("verify-identities", "ci2").report.dump() == a);
  CHECK(run("verify-supports", "ci2").report.dump() == b);
  unsetenv("MFCI_THREADS");
}

TEST_CASE("text rendering") {
  Json j = {{"a", 1}, {"b", {{"c", "x"}}}, {"d", {1, 2}}};
  CHECK(render_text(j) == "a: 1\nb:\n  c: x\nd: [1, 2]\n");
}
