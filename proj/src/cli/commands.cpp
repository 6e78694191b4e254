#include "mfci/cli.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "mfci/errors.hpp"
#include "mfci/extsupport.hpp"
#include "mfci/ideal.hpp"
#include "mfci/isos.hpp"
#include "mfci/koszul.hpp"
#include "mfci/operators.hpp"
#include "mfci/resolution.hpp"

namespace mfci {

namespace {

struct Checks {
  Json list = Json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    Json c;
    c["name"] = name;
    c["ok"] = pass;
    if (!detail.empty()) c["detail"] = detail;
    list.push_back(c);
    ok = ok && pass;
  }
};

struct Job {
  const CliOptions& opt;
  Fixture fx;
  Json out;
  Checks checks;

  int n(int dflt) const { return opt.max_degree >= 0 ? opt.max_degree : dflt; }
  bool full() const { return opt.verify == "full"; }
  bool has_q() const { return opt.q_hi >= opt.q_lo; }
};

Json chain_map_json(const ChainMap& m, const PolyRing& r) {
  Json j;
  j["deg"] = m.deg;
  j["mdeg"] = m.mdeg;
  Json comp = Json::array();
  for (auto& [i, A] : m.comp) comp.push_back({{"at", i}, {"matrix", matrix_json(A, r)}});
  j["components"] = comp;
  return j;
}

Json presentation_json(const ModulePresentation& P) {
  Json j;
  j["matrix"] = matrix_json(P.pres, P.ring->ring());
  j["gen_level"] = P.gen_level;
  j["gen_deg"] = P.gen_deg;
  j["top"] = P.top;
  return j;
}

std::vector<int> term_ranks(const ChainComplex& C) {
  std::vector<int> r;
  for (int i = C.hi(); i >= C.lo; --i) r.push_back(C.rank(i));
  return r;
}

int default_n(const Fixture& fx) { return fx.c() >= 3 ? 4 : 6; }

FiniteModule module_of(const Fixture& fx) { return FiniteModule(fx.R, fx.pres_r); }

Fixture other_fixture(const Job& job) { return with_module(job.fx, job.opt.other.empty() ? "k" : job.opt.other); }

void cmd_resolve(Job& job) {
  int n = job.n(default_n(job.fx));
  Resolution res = free_resolution(*job.fx.R, job.fx.pres_r, n);
  ChainComplex C = complex_from_resolution(job.fx.R, res);
  job.out["ranks"] = res.ranks();
  job.out["length"] = res.length();
  job.out["complete"] = res.complete;
  job.out["complex"] = complex_json(C);
  ChainComplex G = q_resolution(job.fx);
  job.out["q_ranks"] = term_ranks(G);
  job.out["q_length"] = -G.lo;
  job.checks.add("d^2 = 0", C.is_complex());
  if (C.lo < -1) job.checks.add("exact", exactness_window(C, C.lo + 1, -1));
  job.checks.add("Q-resolution exact", G.lo >= -1 || exactness_window(G, G.lo, -1));
}

void cmd_koszul(Job& job) {
  KoszulComplex K = koszul(job.fx.Q, job.fx.f);
  job.out["complex"] = complex_json(K.complex);
  job.out["subsets"] = K.subsets;
  job.checks.add("d^2 = 0", K.complex.is_complex());
  job.checks.add("f regular (Koszul exact)", exactness_window(K.complex, K.complex.lo, -1));
}

void cmd_homotopies(Job& job) {
  HigherHomotopySystem sys = fixture_homotopies(job.fx);
  const PolyRing& r = job.fx.Q->ring();
  job.out["resolution"] = complex_json(sys.G);
  Json sig = Json::array();
  for (auto& [J, m] : sys.sigma) sig.push_back({{"J", J}, {"map", chain_map_json(m, r)}});
  job.out["sigma"] = sig;
  std::string where;
  bool ok = check_higher_homotopies(sys, &where);
  job.checks.add("higher homotopy identities", ok, where);
}

GradedMF fixture_E(const Fixture& fx) { return fixture_mf(fx, fixture_homotopies(fx)); }

void add_mf_check(Job& job, const std::string& name, const GradedMF& E) {
  MFCheck c = check_mf(E);
  job.checks.add(name, c.ok, c.where);
}

void cmd_mf_build(Job& job) {
  GradedMF E = fixture_E(job.fx);
  job.out["ring"] = ring_json(E.ctx->ring());
  job.out["mf"] = mf_json(E);
  add_mf_check(job, "g0 g1 = W and g1(1) g0 = W", E);
}

void cmd_mf_check(Job& job) {
  GradedMF E = fixture_E(job.fx);
  add_mf_check(job, "E", E);
  add_mf_check(job, "E[1]", shift(E));
  add_mf_check(job, "E dual", dual_mf(E));
  job.checks.add("JSON round trip", mf_from_json(mf_json(E), E.ctx) == E);
  job.out["rank1"] = E.rank1();
  job.out["rank0"] = E.rank0();
}

void cmd_mf_op(Job& job) {
  GradedMF E = fixture_E(job.fx);
  GradedMF F = job.opt.other.empty() ? E : fixture_E(other_fixture(job));
  static const std::map<std::string, std::function<GradedMF(const GradedMF&, const GradedMF&)>> ops = {
      {"shift", [](const GradedMF& a, const GradedMF&) { return shift(a); }},
      {"twist", [](const GradedMF& a, const GradedMF&) { return twist(a, 1); }},
      {"dual", [](const GradedMF& a, const GradedMF&) { return dual_mf(a); }},
      {"tensor", [](const GradedMF& a, const GradedMF& b) { return tensor_mf(a, b); }},
      {"hom", [](const GradedMF& a, const GradedMF& b) { return hom_mf(a, b); }},
      {"sum", [](const GradedMF& a, const GradedMF& b) { return direct_sum_mf(a, b); }}};
  auto it = ops.find(job.opt.op);
  if (it == ops.end()) throw ParseError("unknown --op '" + job.opt.op + "' (shift, twist, dual, tensor, hom, sum)", 1, 1);
  GradedMF G = it->second(E, F);
  job.out["op"] = job.opt.op;
  job.out["mf"] = mf_json(G);
  add_mf_check(job, "result is a factorization", G);
}

void cmd_standard_res(Job& job) {
  int n = job.n(default_n(job.fx));
  StandardResolution F = standard_resolution(fixture_homotopies(job.fx), job.fx.R, n);
  job.out["ranks"] = term_ranks(F.complex);
  job.out["complex"] = complex_json(F.complex);
  job.checks.add("d^2 = 0", F.complex.is_complex());
  if (n >= 2) job.checks.add("exact", exactness_window(F.complex, -n + 1, -1));
  if (job.full()) {
    Resolution oracle = free_resolution(*job.fx.R, job.fx.pres_r, n);
    bool same = true;
    for (int i = 0; i <= n && i <= oracle.length(); ++i) same = same && oracle.term(i).rank() == F.complex.rank(-i);
    job.checks.add("Betti numbers match the minimal resolution", same);
  }
}

void cmd_cohres(Job& job) {
  int n = job.n(default_n(job.fx));
  HigherHomotopySystem sys = fixture_homotopies(job.fx);
  GradedMF E = fixture_mf(job.fx, sys);
  ChainComplex C = cohomology_resolution(E, job.fx.R, n);
  job.out["ranks"] = term_ranks(C);
  job.out["complex"] = complex_json(C);
  job.checks.add("equals the standard resolution", C == standard_resolution(sys, job.fx.R, n).complex);
}

void cmd_eisenbud(Job& job) {
  int n = job.n(default_n(job.fx));
  StandardResolution F = standard_resolution(fixture_homotopies(job.fx), job.fx.R, n);
  EisenbudOperators eo = eisenbud_operators(F.complex, job.fx.f, job.fx.Q);
  const PolyRing& r = job.fx.R->ring();
  Json t = Json::array();
  bool same = true;
  std::string where;
  for (size_t k = 0; k < eo.t.size(); ++k) {
    t.push_back(chain_map_json(eo.t[k], r));
    for (int i = -n + 2; i <= 0; ++i)
      if (!(eo.t[k].at(i, F.complex, F.complex) == F.op[k].at(i, F.complex, F.complex)) && same) {
        same = false;
        where = "t_" + std::to_string(k + 1) + " at " + std::to_string(i);
      }
  }
  job.out["t"] = t;
  job.checks.add("t_k = 1 (x) chi_k", same, where);
}

void cmd_verify_chi(Job& job) {
  int n = job.n(default_n(job.fx));
  HigherHomotopySystem sys = fixture_homotopies(job.fx);
  ChiReport rep = verify_chi_equals_T(sys, fixture_mf(job.fx, sys), job.fx.R, n, job.opt.seed);
  Json h = Json::array();
  for (auto& m : rep.homotopies) h.push_back(chain_map_json(m, job.fx.R->ring()));
  job.out["homotopies"] = h;
  job.checks.add("canonical lift gives 1 (x) chi_k", rep.canonical_equal, rep.where);
  job.checks.add("1 (x) chi_k = T_k", rep.t_equal);
  job.checks.add("alternative lift homotopic", rep.alternative_homotopic);
  job.checks.add("operators commute up to homotopy", rep.commute);
}

Json ext_json(const ExtData& X) {
  Json j;
  j["dims"] = X.dims();
  Json h = Json::array();
  for (auto& e : X.ext) h.push_back(hilbert_json(e.hilbert()));
  j["hilbert"] = h;
  j["ev"] = presentation_json(X.ev);
  j["odd"] = presentation_json(X.odd);
  return j;
}

void cmd_ext(Job& job) {
  int n = job.n(job.fx.c() >= 3 ? 6 : 8);
  ExtData X = ext_modules(fixture_homotopies(job.fx), job.fx.R, module_of(other_fixture(job)), n);
  job.out["n_max"] = n;
  job.out["ext"] = ext_json(X);
  job.checks.add("Ext^ev finitely generated", X.ev.gulliksen());
  job.checks.add("Ext^odd finitely generated", X.odd.gulliksen());
}

void cmd_stable_ext(Job& job) {
  HigherHomotopySystem sys = fixture_homotopies(job.fx);
  FiniteModule N = module_of(other_fixture(job));
  int n = job.n(8);
  ExtData X = ext_modules(sys, job.fx.R, N, n);
  int q0 = stable_ext(X, 1, 0).q0;
  if (q0 + 2 > n) X = ext_modules(sys, job.fx.R, N, n = q0 + 2);
  int qa = job.has_q() ? job.opt.q_lo : q0, qb = job.has_q() ? job.opt.q_hi : n;
  StableExtTable S = stable_ext(X, qa, qb);
  job.out["q0"] = S.q0;
  Json pieces = Json::array();
  for (auto& p : S.pieces) pieces.push_back({{"q", p.q}, {"dim", p.dim}, {"hilbert", hilbert_json(p.hilbert)}});
  job.out["pieces"] = pieces;
  bool agree = true;
  std::string where;
  for (auto& p : S.pieces)
    if (p.q >= S.q0 && p.q <= n && p.dim != X.ext[p.q].dim() && agree) {
      agree = false;
      where = "q = " + std::to_string(p.q);
    }
  job.checks.add("agrees with Ext in the stable range", agree, where);
  if (X.c == 1) {
    job.checks.add("two-periodic", two_periodic(S, X.fdeg[0]));
    if (job.full()) {
      int lo = std::min(qa, 0) - 2, hi = std::max(qb, sys.length()) + 2;
      CompleteResolution CR = complete_resolution_c1(sys, fixture_mf(job.fx, sys), job.fx.R, lo, hi);
      job.checks.add("complete resolution totally acyclic", CR.acyclic && CR.dual_acyclic);
      job.checks.add("gamma is a chain map", CR.gamma_chain);
      bool same = true;
      for (auto& p : S.pieces) same = same && stable_ext_via_compres(CR, N, p.q).hilbert == p.hilbert;
      job.checks.add("complete resolution route agrees", same);
      job.out["splice"] = CR.splice;
    }
  }
}

// Ext data sized so that [q0, q0 + 6] is computed.
ExtData ext_through_q0(const HigherHomotopySystem& sys, const Fixture& fx, const FiniteModule& N, int n, int* q0) {
  ExtData X = ext_modules(sys, fx.R, N, n);
  *q0 = stable_ext(X, 1, 0).q0;
  if (*q0 + 6 > n) X = ext_modules(sys, fx.R, N, *q0 + 6);
  return X;
}

void cmd_support(Job& job) {
  HigherHomotopySystem sys = fixture_homotopies(job.fx);
  Fixture other = other_fixture(job);
  int q0 = 0;
  ExtData X = ext_through_q0(sys, job.fx, module_of(other), job.n(8), &q0);
  SupportIdeal V = support_set(X);
  const PolyRing& r = X.RT->ring();
  job.out["ring"] = ring_json(r);
  job.out["support"] = ideal_json(V.ideal, r);
  job.out["ann_ev"] = ideal_json(V.ann_ev, r);
  job.out["ann_odd"] = ideal_json(V.ann_odd, r);
  job.out["empty"] = V.empty();
  job.out["q0"] = q0;
  std::vector<int> dims;
  for (int q = q0; q <= q0 + 6; ++q) dims.push_back(X.ext[q].dim());
  bool vanish = std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
  job.out["ext_window"] = {{"from", q0}, {"to", q0 + 6}, {"dims", dims}, {"vanishing", vanish}};
  job.checks.add(V.empty() ? "empty support and Ext vanishes" : "nonempty support and Ext does not vanish",
                 vanish == V.empty());
  std::string where;
  bool route = true;
  try {
    check_support_route(V, fixture_mf(job.fx, sys), fixture_E(other));
  } catch (const RouteMismatch& e) {
    route = false;
    where = e.what();
  }
  job.checks.add("factorization route agrees", route, where);
}

void cmd_ab_support(Job& job) {
  ExtData X = ext_modules(fixture_homotopies(job.fx), job.fx.R, module_of(other_fixture(job)), job.n(8));
  auto I = ab_support(X);
  job.out["ring"] = ring_json(X.RT->ring());
  job.out["ab_support"] = ideal_json(I, X.RT->ring());
  bool x_free = true;
  for (auto& g : I)
    for (auto& t : g.terms())
      if (X.RT->ring().xdeg(t.m) != 0) x_free = false;
  job.checks.add("ideal lives in k[T]", x_free);
}

void cmd_verify_identities(Job& job) {
  CtxPtr Q = job.fx.Q;
  Json fams = Json::array();
  for (int i = 0; i < job.opt.count; ++i) {
    uint64_t seed = job.opt.seed + uint64_t(i);
    auto fam = random_mf_family(Q, seed, 4);
    Json certs = Json::array();
    for (auto& c : canonical_isos(fam[0], fam[1], fam[2], fam[3])) {
      certs.push_back({{"name", c.name}, {"ok", c.ok()}});
      job.checks.add(c.name + " (seed " + std::to_string(seed) + ")", c.ok(), c.where);
    }
    GradedMF P = random_tpc(Q, 2 * seed), R = random_tpc(Q, 2 * seed + 1);
    auto sp = supp_tpc(P).ideal(), sr = supp_tpc(R).ideal();
    std::vector<Poly> meet = sp;
    meet.insert(meet.end(), sr.begin(), sr.end());
    job.checks.add("supp(P (x) Q) = supp P n supp Q (seed " + std::to_string(seed) + ")",
                   radical_equal(*Q, supp_tpc(tensor_mf(P, R)).ideal(), meet));
    job.checks.add("supp(P) = supp(P dual) (seed " + std::to_string(seed) + ")",
                   radical_equal(*Q, supp_tpc(dual_mf(P)).ideal(), sp));
    fams.push_back({{"seed", seed}, {"isos", certs}, {"supp_P", ideal_json(sp, Q->ring())}});
  }
  job.out["families"] = fams;
}

std::vector<std::string> split_family(const std::string& s) {
  std::vector<std::string> out;
  size_t at = 0;
  while (at <= s.size()) {
    size_t semi = s.find(';', at);
    if (semi == std::string::npos) semi = s.size();
    std::string part = s.substr(at, semi - at);
    size_t b = part.find_first_not_of(' '), e = part.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(part.substr(b, e - b + 1));
    at = semi + 1;
  }
  return out;
}

void cmd_verify_supports(Job& job) {
  std::vector<std::string> names = split_family(job.opt.family);
  if (names.empty()) {
    names.push_back("k");
    const PolyRing& r = job.fx.Q->ring();
    for (int v = 0; v < r.nx(); ++v) names.push_back("R/(" + r.name(v) + ")");
  }
  std::vector<Fixture> fxs;
  std::vector<HigherHomotopySystem> sys;
  std::vector<FiniteModule> mods;
  for (auto& s : names) {
    fxs.push_back(with_module(job.fx, s));
    sys.push_back(fixture_homotopies(fxs.back()));
    mods.push_back(module_of(fxs.back()));
  }
  int n = job.n(8);
  SupportFamily F = support_family(names, sys, mods, job.fx.R, n);
  int need = 0;
  for (auto& row : F.q0)
    for (int q : row) need = std::max(need, q + 6);
  if (need > n) F = support_family(names, sys, mods, job.fx.R, n = need);
  GradedMF E = fixture_mf(fxs[0], sys[0]);
  auto sing = sing_ideal(E);
  const PolyRing& rt = F.V[0][0].ring->ring();
  Json table = Json::array();
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = 0; j < names.size(); ++j)
      table.push_back({{"M", names[i]}, {"N", names[j]}, {"support", ideal_json(F.V[i][j].ideal, rt)},
                       {"empty", F.V[i][j].empty()}, {"q0", F.q0[i][j]}});
  job.out["n_max"] = n;
  job.out["sing"] = ideal_json(sing, E.ctx->ring());
  job.out["pairs"] = table;
  for (auto& p : check_support_properties(F, sing, E.ctx)) job.checks.add(p.name, p.ok, p.witness);
  if (job.full())
    for (size_t i = 0; i < names.size(); ++i)
      for (size_t j = 0; j < names.size(); ++j) {
        bool ok = true;
        std::string where;
        try {
          check_support_route(F.V[i][j], fixture_mf(fxs[i], sys[i]), fixture_mf(fxs[j], sys[j]));
        } catch (const RouteMismatch& e) {
          ok = false;
          where = e.what();
        }
        job.checks.add("route (" + names[i] + ", " + names[j] + ")", ok, where);
      }
}

const std::map<std::string, std::function<void(Job&)>>& table() {
  static const std::map<std::string, std::function<void(Job&)>> t = {
      {"resolve", cmd_resolve},
      {"koszul", cmd_koszul},
      {"homotopies", cmd_homotopies},
      {"mf-build", cmd_mf_build},
      {"mf-check", cmd_mf_check},
      {"mf-op", cmd_mf_op},
      {"standard-res", cmd_standard_res},
      {"cohres", cmd_cohres},
      {"eisenbud", cmd_eisenbud},
      {"verify-chi", cmd_verify_chi},
      {"ext", cmd_ext},
      {"stable-ext", cmd_stable_ext},
      {"support", cmd_support},
      {"ab-support", cmd_ab_support},
      {"verify-identities", cmd_verify_identities},
      {"verify-supports", cmd_verify_supports}};
  return t;
}

Json input_echo(const CliOptions& opt, const Fixture& fx) {
  ProblemSpec p = fixture_problem(fx);
  p.max_degree = opt.max_degree;
  p.q_lo = opt.q_lo;
  p.q_hi = opt.q_hi;
  p.seed = opt.seed;
  p.format = opt.format;
  Json j;
  j["name"] = fx.name;
  j["problem"] = problem_json(p);
  if (!opt.other.empty()) j["other"] = opt.other;
  if (!opt.family.empty()) j["family"] = opt.family;
  j["verify"] = opt.verify;
  return j;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "resolve", "koszul",     "homotopies", "mf-build",   "mf-check",          "mf-op",
      "standard-res", "cohres", "eisenbud",  "verify-chi", "ext",               "stable-ext",
      "support", "ab-support", "verify-identities", "verify-supports"};
  return names;
}

int exit_code_for(const std::string& kind) {
  static const std::set<std::string> verification = {
      "VerificationFailure", "RouteMismatch", "MFEquationFailure", "NotNullhomotopic",
      "IdentificationFailure", "DecompositionFailure", "LiftObstruction", "NotInImage"};
  return verification.count(kind) ? 2 : 1;
}

std::string CliResult::render(const std::string& format) const {
  return format == "text" ? render_text(report) : report.dump(2) + "\n";
}

CliResult run_command(const CliOptions& opt) {
  CliResult res;
  Json& rep = res.report;
  rep["schema"] = kSchemaVersion;
  rep["command"] = opt.command;
  auto start = std::chrono::steady_clock::now();
  try {
    auto it = table().find(opt.command);
    if (it == table().end()) throw ParseError("unknown command '" + opt.command + "'", 1, 1);
    if (opt.format != "json" && opt.format != "text") throw ParseError("--format is json or text", 1, 1);
    if (opt.verify != "fast" && opt.verify != "full") throw ParseError("--verify is fast or full", 1, 1);
    if (opt.problem_text.empty() == opt.fixture.empty())
      throw ParseError("give exactly one of a problem file and --fixture", 1, 1);
    Fixture fx = opt.fixture.empty() ? problem_fixture(parse_problem(opt.problem_text)) : fixture(opt.fixture);
    if (!opt.module.empty()) fx = with_module(fx, opt.module);
    rep["input"] = input_echo(opt, fx);
    Job job{opt, fx, Json::object(), {}};
    it->second(job);
    rep["outputs"] = job.out;
    rep["checks"] = job.checks.list;
    rep["passed"] = job.checks.ok;
    res.exit_code = job.checks.ok ? 0 : 2;
  } catch (const Error& e) {
    Json err;
    err["kind"] = e.kind();
    err["message"] = e.what();
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
      err["line"] = pe->line();
      err["column"] = pe->column();
    }
    rep["error"] = err;
    rep["passed"] = false;
    res.exit_code = exit_code_for(e.kind());
  } catch (const std::exception& e) {
    rep["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
    rep["passed"] = false;
    res.exit_code = 1;
  }
  if (opt.timing) {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep["timing"] = {{"seconds", s}};
  }
  return res;
}

}  // namespace mfci
