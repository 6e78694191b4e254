#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfci/io.hpp"

namespace mfci {

// Command-line options after parsing. Exactly one of problem_text and fixture
// selects the ring and module.
struct CliOptions {
  std::string command;
  std::string problem_text;
  std::string fixture;
  std::string module;  // "k", "R" or "R/(...)" over the same ring
  std::string other;   // second module for ext, support and mf-op
  std::string family;  // ';'-separated module list for verify-supports
  std::string op = "dual";
  std::string format = "json";
  std::string verify = "fast";
  int max_degree = -1;
  int q_lo = 0, q_hi = -1;  // empty range means the command default
  uint64_t seed = 1;
  int count = 4;
  bool timing = false;
};

struct CliResult {
  Json report;
  int exit_code = 0;  // 0 pass, 2 verification failure, 1 input error
  std::string render(const std::string& format) const;
};

const std::vector<std::string>& command_names();
// Never throws; library errors are reported with their kind and mapped to an
// exit code.
CliResult run_command(const CliOptions& opt);
// 2 for verification kinds, 1 otherwise.
int exit_code_for(const std::string& kind);

}  // namespace mfci
