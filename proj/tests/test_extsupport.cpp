#include <doctest.h>

#include "mfci/errors.hpp"
#include "mfci/extsupport.hpp"
#include "mfci/fixtures.hpp"
#include "mfci/ideal.hpp"

using namespace mfci;

namespace {

std::vector<Poly> parse_ideal(const RingCtx& ctx, const std::vector<std::string>& gens) {
  std::vector<Poly> out;
  for (auto& g : gens) out.push_back(ctx.parse(g));
  return out;
}

ExtData ext_of(const Fixture& M, const Fixture& N, int n_max) {
  FiniteModule fn(N.R, N.pres_r);
  return ext_modules(fixture_homotopies(M), M.R, fn, n_max);
}

ExtData ext_of(const std::string& base, const std::string& m, const std::string& n, int n_max) {
  Fixture b = fixture(base);
  return ext_of(with_module(b, m), with_module(b, n), n_max);
}

}  // namespace

TEST_CASE("finite modules") {
  Fixture b = fixture("ci2");
  FiniteModule k(b.R, with_module(b, "k").pres_r);
  CHECK(k.dim() == 1);
  CHECK(k.nilpotency() == 1);
  FiniteModule R(b.R, with_module(b, "R").pres_r);
  CHECK(R.dim() == 4);
  CHECK(R.dim(0) == 1);
  CHECK(R.dim(1) == 2);
  CHECK(R.dim(2) == 1);
  CHECK(R.nilpotency() == 3);
  // x y acts as the socle map
  DenseMat xy = R.action(b.R->parse("x*y"));
  CHECK(xy.rank() == 1);
  CHECK(R.action(b.R->parse("x^2")).is_zero());
  // Q itself is not of finite length
  CHECK_THROWS_AS(FiniteModule(b.Q, PolyMatrix(FreeModule::free(0), FreeModule::free(1), 0), 8), BudgetExceeded);
}

TEST_CASE("Ext of k over ci2") {
  ExtData X = ext_of("ci2", "k", "k", 8);
  for (int n = 0; n <= 8; ++n) CHECK(X.ext[n].dim() == n + 1);
  // m acts trivially on Ext(k, k)
  for (int n = 0; n <= 8; ++n)
    for (auto& a : X.x[n]) CHECK(a.is_zero());
  // Ext^ev = k[T] (1 + xi1 xi2), Ext^odd = k[T] (xi1 + xi2)
  CHECK(X.ev.gen_level == std::vector<int>{0, 1});
  CHECK(X.odd.gen_level == std::vector<int>{0, 0});
  CHECK(X.ev.gulliksen());
  ModulePresentation P = ext_degree_presentation(X, 2);
  CHECK(P.pres.rows() == 3);
  CHECK(level_hilbert(P, 0) == std::map<int, int>{{-2, 3}});
}

TEST_CASE("Ext of k over h1") {
  ExtData X = ext_of("h1", "k", "k", 8);
  for (int n = 0; n <= 8; ++n) CHECK(X.ext[n].dim() == 1);
  for (int n = 0; n + 2 <= 8; ++n) CHECK(X.t[n][0].rank() == 1);
  CHECK(X.ev.pres.rows() == 1);
  CHECK(X.odd.pres.rows() == 1);
}

TEST_CASE("Ext into zero") {
  Fixture b = fixture("ci2");
  Fixture zero = b;
  zero.pres_r = PolyMatrix::identity(FreeModule::free(1), b.R->one());
  ExtData X = ext_of(b, zero, 4);
  for (int d : X.dims()) CHECK(d == 0);
  CHECK(support_set(X).empty());
}

TEST_CASE("support sets over ci2") {
  Fixture b = fixture("ci2");
  struct Case {
    std::string m, n;
    std::vector<std::string> ideal;
  };
  std::vector<Case> cases = {{"k", "k", {"x", "y"}},
                             {"R/(x)", "R/(x)", {"x", "y", "T_2"}},
                             {"R/(y)", "R/(y)", {"x", "y", "T_1"}},
                             {"k", "R/(x)", {"x", "y", "T_2"}},
                             {"R/(x)", "k", {"x", "y", "T_2"}}};
  for (auto& c : cases) {
    CAPTURE(c.m);
    CAPTURE(c.n);
    ExtData X = ext_of("ci2", c.m, c.n, 6);
    SupportIdeal V = support_set(X);
    CHECK(radical_equal(*X.RT, V.ideal, parse_ideal(*X.RT, c.ideal)));
    CHECK_FALSE(V.empty());
  }
  ExtData X = ext_of("ci2", "R/(x)", "R/(y)", 8);
  CHECK(support_set(X).empty());
  for (int n = 1; n <= 8; ++n) CHECK(X.ext[n].dim() == 0);
  CHECK(support_set(ext_of("ci2", "R", "k", 4)).empty());
}

TEST_CASE("AB supports") {
  ExtData k = ext_of("ci2", "k", "k", 6);
  CHECK(ab_support(k).empty());
  ExtData rx = ext_of("ci2", "R/(x)", "R/(x)", 6);
  CHECK(ideal_equal(*rx.RT, ab_support(rx), parse_ideal(*rx.RT, {"T_2"})));
  ExtData fr = ext_of("ci2", "R", "R", 4);
  auto I = ab_support(fr);
  // only Hom survives: the cone vertex, empty after saturation
  CHECK(radical_equal(*fr.RT, I, parse_ideal(*fr.RT, {"T_1", "T_2"})));
  CHECK(is_unit_ideal(*fr.RT, saturate_ideal(*fr.RT, I, irrelevant_t(*fr.RT))));
}

TEST_CASE("support route agreement") {
  for (std::string name : {"h1", "ci2", "ci2-rx", "ci2-ry", "ci3"}) {
    CAPTURE(name);
    Fixture fx = fixture(name);
    auto sys = fixture_homotopies(fx);
    GradedMF E = fixture_mf(fx, sys);
    FiniteModule N(fx.R, fx.pres_r);
    ExtData X = ext_modules(sys, fx.R, N, 4);
    CHECK_NOTHROW(check_support_route(support_set(X), E, E));
  }
  Fixture b = fixture("ci2");
  Fixture m = with_module(b, "R/(x)"), n = with_module(b, "R/(y)");
  auto sm = fixture_homotopies(m), sn = fixture_homotopies(n);
  ExtData X = ext_of(m, n, 4);
  CHECK_NOTHROW(check_support_route(support_set(X), fixture_mf(m, sm), fixture_mf(n, sn)));
}

TEST_CASE("support route on random pairs") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    CAPTURE(seed);
    Fixture fx = random_fixture(seed);
    Fixture k = with_module(fx, "k");
    auto sm = fixture_homotopies(fx), sk = fixture_homotopies(k);
    GradedMF EM = fixture_mf(fx, sm), EK = fixture_mf(k, sk);
    ExtData X = ext_of(fx, k, 2 * fx.c() + 2);
    CHECK_NOTHROW(check_support_route(support_set(X), EM, EK));
  }
}

TEST_CASE("stable range agreement") {
  for (std::string name : {"h1", "ci2", "ci2-rx", "ci2-ry"}) {
    CAPTURE(name);
    Fixture fx = fixture(name);
    int c = fx.c();
    ExtData X = ext_of(fx, fx, 2 * c + 6);
    StableExtTable S = stable_ext(X, 1, 0);
    REQUIRE(S.q0 + 2 * c + 4 <= X.n_max);
    S = stable_ext(X, S.q0, S.q0 + 2 * c + 4);
    for (auto& p : S.pieces) {
      CAPTURE(p.q);
      CHECK(p.dim == X.ext[p.q].dim());
      CHECK(p.hilbert == X.ext[p.q].hilbert());
    }
  }
}

TEST_CASE("stable Ext of a free module") {
  ExtData X = ext_of("ci2", "R", "k", 8);
  StableExtTable S = stable_ext(X, 1, 0);
  S = stable_ext(X, S.q0, 8);
  for (auto& p : S.pieces) CHECK(p.dim == 0);
  CHECK_THROWS_AS(stable_ext(ext_of("ci2", "k", "k", 4), -1, 2), NegativeDegreeUnsupported);
}

TEST_CASE("hypersurface stable Ext triangle") {
  Fixture fx = fixture("h1");
  auto sys = fixture_homotopies(fx);
  GradedMF E = fixture_mf(fx, sys);
  FiniteModule k(fx.R, fx.pres_r);
  ExtData X = ext_modules(sys, fx.R, k, 10);
  StableExtTable S = stable_ext(X, -4, 10);
  CHECK(S.q0 == 0);
  CHECK(two_periodic(S, sys.fdeg[0]));
  CompleteResolution CR = complete_resolution_c1(sys, E, fx.R, -6, 12);
  CHECK(CR.ok());
  CHECK(CR.splice == 0);
  for (int q = -4; q <= 10; ++q) {
    CAPTURE(q);
    const StablePiece* p = S.at(q);
    REQUIRE(p);
    StablePiece c = stable_ext_via_compres(CR, k, q);
    CHECK(p->dim == 1);
    CHECK(c.dim == 1);
    CHECK(c.hilbert == p->hilbert);
    if (q >= S.q0) CHECK(X.ext[q].hilbert() == p->hilbert);
  }
  CHECK_THROWS_AS(stable_ext_via_compres(CR, k, 12), WindowTooSmall);
}

TEST_CASE("complete resolutions") {
  Fixture h1 = fixture("h1");
  for (std::string m : {"R/(x)", "R"}) {
    CAPTURE(m);
    Fixture fx = with_module(h1, m);
    auto sys = fixture_homotopies(fx);
    CompleteResolution CR = complete_resolution_c1(sys, fixture_mf(fx, sys), fx.R, -3, 6);
    CHECK(CR.acyclic);
    CHECK(CR.dual_acyclic);
    CHECK(CR.gamma_chain);
    FiniteModule k(fx.R, with_module(h1, "k").pres_r);
    for (int q = -2; q <= 5; ++q) CHECK(stable_ext_via_compres(CR, k, q).dim == (m == "R" ? 0 : 1));
  }
  Fixture ci2 = fixture("ci2");
  auto sys = fixture_homotopies(ci2);
  CHECK_THROWS_AS(complete_resolution_c1(sys, fixture_mf(ci2, sys), ci2.R, 0, 4), NonRegularContext);
}

TEST_CASE("Gulliksen witness") {
  for (std::string name : {"h1", "ci2", "ci2-rx", "ci2-ry", "ci3"}) {
    CAPTURE(name);
    Fixture fx = fixture(name);
    ExtData X = ext_of(fx, fx, 8);
    CHECK(X.ev.gulliksen());
    CHECK(X.odd.gulliksen());
  }
}

TEST_CASE("support properties over ci2") {
  Fixture b = fixture("ci2");
  std::vector<std::string> names = {"k", "R/(x)", "R/(y)"};
  std::vector<HigherHomotopySystem> sys;
  std::vector<FiniteModule> mods;
  for (auto& n : names) {
    Fixture fx = with_module(b, n);
    sys.push_back(fixture_homotopies(fx));
    mods.emplace_back(fx.R, fx.pres_r);
  }
  SupportFamily F = support_family(names, sys, mods, b.R, 10);
  CHECK(F.V[1][2].empty());
  CHECK(F.V[2][1].empty());
  auto sing = sing_ideal(fixture_mf(b, sys[0]));
  CHECK(radical_equal(*b.S, sing, parse_ideal(*b.S, {"x", "y"})));
  for (auto& p : check_support_properties(F, sing, b.S)) {
    CAPTURE(p.name);
    CAPTURE(p.witness);
    CHECK(p.ok);
  }
}

TEST_CASE("support properties with a free module") {
  Fixture b = fixture("ci2");
  std::vector<std::string> names = {"k", "R"};
  std::vector<HigherHomotopySystem> sys;
  std::vector<FiniteModule> mods;
  for (auto& n : names) {
    Fixture fx = with_module(b, n);
    sys.push_back(fixture_homotopies(fx));
    mods.emplace_back(fx.R, fx.pres_r);
  }
  SupportFamily F = support_family(names, sys, mods, b.R, 10);
  for (auto& p : check_support_properties(F, {}, b.S)) {
    CAPTURE(p.name);
    CHECK(p.ok);
  }
}

TEST_CASE("derivative") {
  Fixture b = fixture("ci2");
  const RingCtx& S = *b.S;
  Poly W = S.parse("x^2*T_1 + y^2*T_2");
  CHECK(derivative(W, 0, S.ring()) == S.parse("2*x*T_1"));
  CHECK(derivative(W, 3, S.ring()) == S.parse("y^2"));
  CHECK(derivative(S.parse("x"), 1, S.ring()).is_zero());
}
