#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mfci/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mfci: matrix factorizations and stable Ext over complete intersections"};
  mfci::CliOptions opt;
  std::string problem, q_range;
  std::string commands;
  for (auto& c : mfci::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", opt.command, "One of: " + commands)->required()->check(CLI::IsMember(mfci::command_names()));
  app.add_option("problem", problem, "Problem file (JSON)");
  app.add_option("--fixture", opt.fixture, "Named fixture: h1, ci2, ci2-rx, ci2-ry, ci3 or random:<seed>");
  app.add_option("--module", opt.module, "Replace the module: k, R or R/(p, ...)");
  app.add_option("--other", opt.other, "Second module for ext, stable-ext, support, ab-support and mf-op");
  app.add_option("--family", opt.family, "Modules for verify-supports, separated by ';'");
  app.add_option("--op", opt.op, "mf-op operation: shift, twist, dual, tensor, hom, sum");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--verify", opt.verify, "Verification level")->check(CLI::IsMember({"fast", "full"}));
  app.add_option("--max-degree", opt.max_degree, "Homological degree bound");
  app.add_option("--q-range", q_range, "Stable Ext range a:b");
  app.add_option("--seed", opt.seed, "Seed for random constructions");
  app.add_option("--count", opt.count, "Number of random families for verify-identities");
  app.add_flag("--timing", opt.timing, "Add wall-clock timing to the report");

  try {
    app.parse(argc, argv);
    if (!q_range.empty()) {
      auto colon = q_range.find(':');
      if (colon == std::string::npos) throw CLI::ValidationError("--q-range", "expected a:b");
      opt.q_lo = std::stoi(q_range.substr(0, colon));
      opt.q_hi = std::stoi(q_range.substr(colon + 1));
      if (opt.q_hi < opt.q_lo) throw CLI::ValidationError("--q-range", "empty range");
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "--q-range: " << e.what() << "\n";
    return 1;
  }

  if (!problem.empty()) {
    std::ifstream in(problem);
    if (!in) {
      std::cerr << problem << ": cannot open\n";
      return 1;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    opt.problem_text = ss.str();
  }
  mfci::CliResult res = mfci::run_command(opt);
  std::cout << res.render(opt.format);
  if (res.report.contains("error")) {
    const auto& err = res.report["error"];
    std::cerr << (problem.empty() ? "mfci" : problem);
    if (!problem.empty() && err.contains("line")) std::cerr << ":" << err["line"].get<int>() << ":" << err["column"].get<int>();
    std::cerr << ": " << err["message"].get<std::string>() << "\n";
  }
  return res.exit_code;
}
