#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mfci/fixtures.hpp"

namespace mfci {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Input problem: a complete intersection with a module over Q. The module is
// either cyclic (Q/(cyclic)) or coker of `presentation` with target twists;
// neither means k.
struct ProblemSpec {
  uint32_t characteristic = 101;
  std::vector<std::string> variables;
  std::vector<int> degrees;
  std::vector<std::string> f;
  std::vector<std::string> cyclic;
  std::vector<std::vector<std::string>> presentation;
  std::vector<int> twists;
  int max_degree = -1;
  int q_lo = 0, q_hi = -1;
  uint64_t seed = 1;
  std::string format = "json";

  bool operator==(const ProblemSpec&) const = default;
};

// Throws ParseError with the line and column in `text`.
ProblemSpec parse_problem(const std::string& text);
Json problem_json(const ProblemSpec& p);
Fixture problem_fixture(const ProblemSpec& p, const std::string& name = "input");
ProblemSpec fixture_problem(const Fixture& fx);

Json ring_json(const PolyRing& r);
Json free_module_json(const FreeModule& F);
FreeModule free_module_from_json(const Json& j);
Json matrix_json(const PolyMatrix& A, const PolyRing& r);
PolyMatrix matrix_from_json(const Json& j, const RingCtx& ctx);
Json complex_json(const ChainComplex& C);
ChainComplex complex_from_json(const Json& j, CtxPtr ctx);
Json mf_json(const GradedMF& E);
GradedMF mf_from_json(const Json& j, CtxPtr S);
Json ideal_json(const std::vector<Poly>& I, const PolyRing& r);
std::vector<Poly> ideal_from_json(const Json& j, const RingCtx& ctx);
Json hilbert_json(const std::map<int, int>& h);

// Indented key: value rendering of a report.
std::string render_text(const Json& report);

}  // namespace mfci
