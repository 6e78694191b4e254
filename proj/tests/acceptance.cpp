// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "mfci/cli.hpp"
#include "mfci/errors.hpp"
#include "mfci/extsupport.hpp"
#include "mfci/ideal.hpp"
#include "mfci/isos.hpp"
#include "mfci/operators.hpp"
#include "mfci/resolution.hpp"

using namespace mfci;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Setup {
  Fixture fx;
  HigherHomotopySystem sys;
  GradedMF E;
};

Setup setup(const Fixture& fx) {
  Setup s{fx, fixture_homotopies(fx), {}};
  s.E = fixture_mf(s.fx, s.sys);
  return s;
}

std::vector<std::string> corpus() {
  std::vector<std::string> names{"h1", "ci2", "ci3"};
  for (int seed = 1; seed <= 20; ++seed) names.push_back("random:" + std::to_string(seed));
  return names;
}

Outcome mf_equations() {
  Outcome o;
  for (auto& name : corpus()) {
    MFCheck c = check_mf(setup(fixture(name)).E);
    o.expect(c.ok, name + ": " + c.where);
  }
  return o;
}

Outcome homotopy_equations() {
  Outcome o;
  for (auto& name : corpus()) {
    std::string where;
    o.expect(check_higher_homotopies(fixture_homotopies(fixture(name)), &where), name + ": " + where);
  }
  return o;
}

Outcome standard_resolution_ci2() {
  Outcome o;
  Setup s = setup(fixture("ci2"));
  ChainComplex C = standard_resolution(s.sys, s.fx.R, 10).complex;
  Resolution oracle = free_resolution(*s.fx.R, s.fx.pres_r, 10);
  for (int n = 0; n <= 10; ++n) {
    o.expect(C.rank(-n) == n + 1, "rank " + std::to_string(n));
    o.expect(oracle.term(n).rank() == n + 1, "brute-force rank " + std::to_string(n));
  }
  o.expect(C.is_complex(), "d^2 != 0");
  o.expect(exactness_window(C, -9, -1), "not exact in degrees 1..9");
  return o;
}

Outcome exactly_standard() {
  Outcome o;
  for (auto& name : fixture_names()) {
    Setup s = setup(fixture(name));
    int n = s.fx.c() >= 3 ? 5 : 8;
    o.expect(cohomology_resolution(s.E, s.fx.R, n) == standard_resolution(s.sys, s.fx.R, n).complex, name);
  }
  return o;
}

Outcome chi_equals_t() {
  Outcome o;
  for (auto name : {"ci2", "ci3"}) {
    Setup s = setup(fixture(name));
    ChiReport r = verify_chi_equals_T(s.sys, s.E, s.fx.R, 8, 1);
    o.expect(r.canonical_equal && r.t_equal, std::string(name) + ": " + r.where);
    o.expect(r.alternative_homotopic && int(r.homotopies.size()) == s.fx.c(),
             std::string(name) + ": alternative lifting not certified");
    o.expect(r.commute, std::string(name) + ": operators do not commute");
  }
  return o;
}

Outcome syzygy_theorem() {
  Outcome o;
  Setup s = setup(fixture("ci2"));
  SyzygyReport r = syzygy_resolution(s.E, s.fx.R, s.fx.pres_r, 8);
  o.expect(r.reg.alpha == 0 && r.reg.e == 2 && r.reg.n_E == 1, "regularity data");
  o.expect(r.complex_ok && r.exact_ok, "truncation is not a resolution");
  o.expect(r.betti_ok && r.betti == r.oracle && int(r.betti.size()) >= 8, "Betti numbers differ from Omega^1(k)");
  return o;
}

Outcome canonical_isos_random() {
  Outcome o;
  auto Q = make_poly_ctx(fixture("ci2").Q->ring_ptr());
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto fam = random_mf_family(Q, seed, 4);
    for (auto& c : canonical_isos(fam[0], fam[1], fam[2], fam[3]))
      o.expect(c.ok(), "seed " + std::to_string(seed) + " " + c.name + " " + c.where);
  }
  return o;
}

Outcome tpc_supports() {
  Outcome o;
  auto Q = make_poly_ctx(fixture("ci2").Q->ring_ptr());
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    GradedMF P = random_tpc(Q, 2 * seed), R = random_tpc(Q, 2 * seed + 1);
    auto sp = supp_tpc(P).ideal(), sr = supp_tpc(R).ideal();
    std::vector<Poly> meet = sp;
    meet.insert(meet.end(), sr.begin(), sr.end());
    o.expect(radical_equal(*Q, supp_tpc(tensor_mf(P, R)).ideal(), meet), "tensor, seed " + std::to_string(seed));
    o.expect(radical_equal(*Q, supp_tpc(dual_mf(P)).ideal(), sp), "dual, seed " + std::to_string(seed));
  }
  return o;
}

Outcome support_properties() {
  Outcome o;
  Fixture base = fixture("ci2");
  std::vector<std::string> names{"k", "R/(x)", "R/(y)"};
  std::vector<HigherHomotopySystem> sys;
  std::vector<FiniteModule> mods;
  for (auto& n : names) {
    Fixture fx = with_module(base, n);
    sys.push_back(fixture_homotopies(fx));
    mods.push_back(FiniteModule(fx.R, fx.pres_r));
  }
  SupportFamily F = support_family(names, sys, mods, base.R, 10);
  GradedMF E = fixture_mf(base, sys[0]);
  for (auto& p : check_support_properties(F, sing_ideal(E), E.ctx)) o.expect(p.ok, p.name + ": " + p.witness);
  const RingCtx& rt = *F.V[0][0].ring;
  auto ideal = [&](std::vector<std::string> g) {
    std::vector<Poly> out;
    for (auto& s : g) out.push_back(rt.parse(s));
    return out;
  };
  o.expect(radical_equal(rt, F.V[1][1].ideal, ideal({"x", "y", "T_2"})), "V(R/(x))");
  o.expect(radical_equal(rt, F.V[2][2].ideal, ideal({"x", "y", "T_1"})), "V(R/(y))");
  o.expect(F.V[1][2].empty(), "V(R/(x), R/(y)) is not empty");
  int q0 = F.q0[1][2];
  for (int q = q0; q <= q0 + 6; ++q) o.expect(F.ext[1][2].ext[q].dim() == 0, "Ext^" + std::to_string(q) + " != 0");
  return o;
}

Outcome hypersurface_triangle() {
  Outcome o;
  Setup s = setup(fixture("h1"));
  FiniteModule k(s.fx.R, s.fx.pres_r);
  ExtData X = ext_modules(s.sys, s.fx.R, k, 10);
  StableExtTable S = stable_ext(X, -4, 10);
  CompleteResolution CR = complete_resolution_c1(s.sys, s.E, s.fx.R, -6, 12);
  o.expect(CR.ok(), "complete resolution is not totally acyclic");
  for (int q = -4; q <= 10; ++q) {
    const StablePiece* p = S.at(q);
    std::string at = "q = " + std::to_string(q);
    o.expect(p && p->dim == 1, "saturation route, " + at);
    o.expect(stable_ext_via_compres(CR, k, q).dim == 1, "complete resolution route, " + at);
    if (q >= S.q0) o.expect(X.ext[q].dim() == 1, "ordinary Ext, " + at);
  }
  o.expect(two_periodic(S, X.fdeg[0]), "not two-periodic");
  return o;
}

Outcome gulliksen() {
  Outcome o;
  for (auto& name : fixture_names()) {
    Fixture fx = fixture(name);
    FiniteModule k(fx.R, with_module(fx, "k").pres_r);
    ExtData X = ext_modules(fixture_homotopies(fx), fx.R, k, 8);
    o.expect(X.ev.gulliksen() && X.odd.gulliksen(), name);
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  std::vector<CliOptions> jobs;
  auto job = [&](std::string cmd, std::string fx, std::string module = "", std::string other = "") {
    CliOptions opt;
    opt.command = std::move(cmd);
    opt.fixture = std::move(fx);
    opt.module = std::move(module);
    opt.other = std::move(other);
    jobs.push_back(opt);
  };
  job("mf-build", "ci3");
  job("standard-res", "ci2");
  job("verify-chi", "ci2");
  job("stable-ext", "h1");
  job("support", "ci2", "R/(x)", "R/(x)");
  job("verify-identities", "ci2");
  job("verify-supports", "ci2");
  job("homotopies", "random:5");
  std::vector<std::string> first;
  for (auto threads : {"1", "4", "1", "3"}) {
    setenv("MFCI_THREADS", threads, 1);
    for (size_t i = 0; i < jobs.size(); ++i) {
      std::string out = run_command(jobs[i]).report.dump();
      if (first.size() <= i) {
        first.push_back(out);
      } else {
        o.expect(out == first[i], jobs[i].command + " differs with MFCI_THREADS=" + threads);
      }
    }
  }
  unsetenv("MFCI_THREADS");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {
      {1, "MF equations on fixtures and 20 random complete intersections", mf_equations},
      {2, "higher homotopy identities on the same corpus", homotopy_equations},
      {3, "standard resolution of k over ci2, n <= 10", standard_resolution_ci2},
      {4, "cohomology resolution is exactly the standard resolution", exactly_standard},
      {5, "Eisenbud operators equal chi_k and T_k on ci2, ci3", chi_equals_t},
      {6, "syzygy resolution of k over ci2", syzygy_theorem},
      {7, "canonical isomorphisms on 20 random families", canonical_isos_random},
      {8, "support calculus on 10 random TPC pairs", tpc_supports},
      {9, "support set properties over ci2", support_properties},
      {10, "hypersurface stable Ext triangle, q in [-4, 10]", hypersurface_triangle},
      {11, "Gulliksen finiteness witness", gulliksen},
      {12, "reports byte-identical across runs and thread counts", determinism},
  };
  int failed = 0;
  for (auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s (%.1fs)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                o.ok ? "" : ": ", o.ok ? "" : o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", int(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
