#include "doctest.h"

#include "mfci/errors.hpp"
#include "mfci/higher.hpp"
#include "mfci/homotopy.hpp"
#include "mfci/koszul.hpp"
#include "mfci/minimize.hpp"

using namespace mfci;

namespace {

RingPtr ring(std::vector<std::string> names) {
  return std::make_shared<PolyRing>(Field(101), names, std::vector<int>(names.size(), 1));
}

std::string entry(const RingCtx& ctx, const PolyMatrix& m, int i, int j) { return ctx.str(m.at(i, j)); }

}  // namespace

TEST_CASE("koszul complex shape") {
  auto Q = make_poly_ctx(ring({"x", "y"}));
  auto K = koszul(Q, {Q->parse("x^2"), Q->parse("y^2")});
  CHECK(ranks(K.complex) == std::vector<int>{1, 2, 1});
  auto d1 = K.complex.diff(-1), d2 = K.complex.diff(-2);
  CHECK(entry(*Q, d1, 0, 0) == "x^2");
  CHECK(entry(*Q, d1, 0, 1) == "y^2");
  CHECK(entry(*Q, d2, 0, 0) == "-y^2");
  CHECK(entry(*Q, d2, 1, 0) == "x^2");
  CHECK(K.complex.is_complex());
  CHECK(entry(*Q, K.mult[0][0], 0, 0) == "1");
  CHECK(K.mult[0][0].at(1, 0).is_zero());
  // wedge relations
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto a = K.mult[i][1] * K.mult[j][0], b = K.mult[j][1] * K.mult[i][0];
      CHECK((a + b).is_zero());
    }
  auto K1 = koszul(Q, {Q->parse("x^2")});
  CHECK(ranks(K1.complex) == std::vector<int>{1, 1});
}

TEST_CASE("koszul exactness tracks regularity") {
  auto Q = make_poly_ctx(ring({"x", "y"}));
  auto reg = koszul(Q, {Q->parse("x^2"), Q->parse("y^2")}).complex;
  CHECK(exactness_window(reg, -2, -1));
  auto nonreg = koszul(Q, {Q->parse("x*y"), Q->parse("x^2")}).complex;
  CHECK_FALSE(exactness_window(nonreg, -2, -1));
  // H^0 is Q/(x^2, y^2): 4-dimensional in total
  auto H0 = homology(reg, 0);
  CHECK(H0.tgt.rank() == 1);
  CHECK(H0.cols() == 2);
  CHECK_THROWS_AS(exactness_window(reg, -3, 0), WindowTooSmall);
}

TEST_CASE("periodic complex over k[x]/(x^2) is exact in the middle") {
  auto R = make_quotient_ctx(ring({"x"}), {make_poly_ctx(ring({"x"}))->parse("x^2")});
  FreeModule F0 = FreeModule::free(1), F1({1}), F2({2});
  PolyMatrix a(F0, F1), b(F1, F2);
  a.at(0, 0) = R->parse("x");
  b.at(0, 0) = R->parse("x");
  ChainComplex C(R, 0, {F0, F1, F2}, {a, b});
  CHECK(C.is_complex());
  CHECK(homology(C, 1).cols() >= 1);
  CHECK(exactness_window(C, 1, 1));
}

TEST_CASE("nullhomotopy of x^2 on the koszul resolution of k") {
  auto Q = make_poly_ctx(ring({"x", "y"}));
  auto G = koszul(Q, {Q->parse("x"), Q->parse("y")}).complex;
  auto g = scalar_map(G, Q->parse("x^2"), 2);
  auto h = nullhomotopy(g, G, G);
  CHECK(entry(*Q, h.at(0, G, G), 0, 0) == "x");
  CHECK(h.at(0, G, G).at(1, 0).is_zero());
  CHECK(h.at(-1, G, G).at(0, 0).is_zero());
  CHECK(entry(*Q, h.at(-1, G, G), 0, 1) == "x");
  ChainMap zero = scalar_map(G, Poly(), 0);
  CHECK(map_is_zero(nullhomotopy(zero, G, G), *Q));
}

TEST_CASE("higher homotopies on the fixtures") {
  auto Q = make_poly_ctx(ring({"x", "y"}));
  std::vector<Poly> f{Q->parse("x^2"), Q->parse("y^2")};
  auto K = koszul(Q, {Q->parse("x"), Q->parse("y")});
  auto s = higher_homotopies(K.complex, f);
  CHECK(check_higher_homotopies(s));
  auto s10 = s.component({1, 0}, 0), s10b = s.component({1, 0}, 1);
  CHECK(entry(*Q, s10, 0, 0) == "x");
  CHECK(s10.at(1, 0).is_zero());
  CHECK(s10b.at(0, 0).is_zero());
  CHECK(entry(*Q, s10b, 0, 1) == "x");
  auto s01 = s.component({0, 1}, 0), s01b = s.component({0, 1}, 1);
  CHECK(s01.at(0, 0).is_zero());
  CHECK(entry(*Q, s01, 1, 0) == "y");
  CHECK(entry(*Q, s01b, 0, 0) == "-y");
  CHECK(s01b.at(0, 1).is_zero());
  for (auto& [J, m] : s.sigma)
    if (weight(J) >= 2) CHECK(map_is_zero(m, *Q));

  auto dg = koszul_homotopies(K, {Q->parse("x"), Q->parse("y")}, f);
  CHECK(check_higher_homotopies(dg));
  for (auto J : {MultiIndex{1, 0}, MultiIndex{0, 1}})
    for (int j = 0; j <= 1; ++j) CHECK(dg.component(J, j) == s.component(J, j));

  auto Qx = make_poly_ctx(ring({"x"}));
  auto Kx = koszul(Qx, {Qx->parse("x")});
  auto h1 = higher_homotopies(Kx.complex, {Qx->parse("x^2")});
  CHECK(entry(*Qx, h1.component({1}, 0), 0, 0) == "x");
}

TEST_CASE("not an R-module") {
  auto Q = make_poly_ctx(ring({"x", "y"}));
  auto K = koszul(Q, {Q->parse("x^2")});
  CHECK_THROWS_AS(higher_homotopies(K.complex, {Q->parse("y^2")}), NotAnRModule);
}

TEST_CASE("minimize and cone") {
  auto R = make_quotient_ctx(ring({"x"}), {make_poly_ctx(ring({"x"}))->parse("x^2")});
  PolyMatrix u(FreeModule::free(1), FreeModule::free(1));
  u.at(0, 0) = R->one();
  ChainComplex C(R, 0, {FreeModule::free(1), FreeModule::free(1)}, {u});
  auto m = minimize(C);
  CHECK(m.complex.is_zero());
  auto Q = make_poly_ctx(ring({"x", "y"}));
  auto K = koszul(Q, {Q->parse("x"), Q->parse("y")}).complex;
  auto mk = minimize(K);
  CHECK(mk.complex == K);
  auto id = identity_map(K);
  auto cn = cone(id, K, K);
  CHECK(cn.is_complex());
  CHECK(exactness_window(cn, cn.lo, cn.hi()));
  // homotopy data for a complex with a unit in the middle
  PolyMatrix a(FreeModule::free(1), FreeModule::free(2)), b(FreeModule::free(2), FreeModule({1}));
  a.at(0, 0) = Q->one();
  b.at(0, 1) = Q->parse("x");
  ChainComplex D(Q, 0, {FreeModule::free(1), FreeModule::free(2), FreeModule({1})}, {a, b});
  REQUIRE(D.is_complex());
  auto md = minimize(D);
  CHECK(ranks(md.complex) == std::vector<int>{0, 1, 1});
  CHECK(is_chain_map(md.iota, md.complex, D));
  CHECK(is_chain_map(md.proj, D, md.complex));
  auto pi = compose(md.proj, md.iota, md.complex, D, md.complex);
  CHECK(map_is_zero(add(pi, identity_map(md.complex), md.complex, md.complex, true), *Q));
  auto ip = compose(md.iota, md.proj, D, md.complex, D);
  auto diff = add(identity_map(D), ip, D, D, true);
  CHECK(verify_homotopy(diff, md.h, D, D));
}
