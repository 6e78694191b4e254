#include "doctest.h"

#include "mfci/errors.hpp"
#include "mfci/ideal.hpp"
#include "mfci/isos.hpp"
#include "mfci/koszul.hpp"
#include "mfci/mf.hpp"

using namespace mfci;

namespace {

RingPtr ring(std::vector<std::string> names) {
  return std::make_shared<PolyRing>(Field(101), names, std::vector<int>(names.size(), 1));
}

std::string entry(const GradedMF& E, const PolyMatrix& m, int i, int j) { return E.ctx->str(m.at(i, j)); }

GradedMF ci2_mf() {
  auto Q = make_poly_ctx(ring({"x", "y"}));
  std::vector<Poly> f{Q->parse("x^2"), Q->parse("y^2")};
  auto K = koszul(Q, {Q->parse("x"), Q->parse("y")});
  return build_mf(higher_homotopies(K.complex, f), s_context(*Q, f));
}

GradedMF h1_mf() {
  auto Q = make_poly_ctx(ring({"x"}));
  std::vector<Poly> f{Q->parse("x^2")};
  auto K = koszul(Q, {Q->parse("x")});
  return build_mf(higher_homotopies(K.complex, f), s_context(*Q, f));
}

}  // namespace

TEST_CASE("build_mf on the codimension two fixture") {
  GradedMF E = ci2_mf();
  CHECK(E.E1.tw == std::vector<int>{0, 0});
  CHECK(E.E0.tw == std::vector<int>{0, 1});
  CHECK(entry(E, E.g1, 0, 0) == "x");
  CHECK(entry(E, E.g1, 0, 1) == "y");
  CHECK(entry(E, E.g1, 1, 0) == "-y*T_2");
  CHECK(entry(E, E.g1, 1, 1) == "x*T_1");
  CHECK(entry(E, E.g0, 0, 0) == "x*T_1");
  CHECK(entry(E, E.g0, 0, 1) == "-y");
  CHECK(entry(E, E.g0, 1, 0) == "y*T_2");
  CHECK(entry(E, E.g0, 1, 1) == "x");
  CHECK(E.ctx->str(E.W) == "x^2*T_1+y^2*T_2");
  CHECK(check_mf(E).ok);
  CHECK(E.g1.homogeneous(E.ctx->gw()));
  CHECK(E.g0.homogeneous(E.ctx->gw()));
  CHECK(E.g1.internally_homogeneous(E.ctx->iw()));

  GradedMF bad = E;
  bad.g1.at(1, 0) = bad.g1.at(1, 0) + E.ctx->parse("T_1");
  auto rep = check_mf(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.where.find("(") != std::string::npos);
}

TEST_CASE("build_mf on the hypersurface fixture") {
  GradedMF E = h1_mf();
  CHECK(E.rank1() == 1);
  CHECK(E.rank0() == 1);
  CHECK(entry(E, E.g1, 0, 0) == "x");
  CHECK(entry(E, E.g0, 0, 0) == "x*T_1");
  CHECK(check_mf(E).ok);
  CtxPtr sw;
  PolyMatrix c = coker_mf(E, &sw);
  CHECK(sw->is_quotient());
  CHECK(entry(E, c, 0, 0) == "x");
}

TEST_CASE("shift and twist") {
  GradedMF E = ci2_mf();
  CHECK(shift(shift(E)) == twist(E, 1));
  GradedMF H = h1_mf();
  GradedMF s = shift(H);
  CHECK(s.E1.tw == std::vector<int>{0});
  CHECK(s.E0.tw == std::vector<int>{1});
  CHECK(entry(s, s.g1, 0, 0) == "-x*T_1");
  CHECK(entry(s, s.g0, 0, 0) == "-x");
  CHECK(check_mf(s).ok);
  GradedMF z = zero_mf(E.ctx, E.W);
  CHECK(shift(z) == z);
}

TEST_CASE("tensor, hom and dual") {
  GradedMF E = ci2_mf(), H = h1_mf();
  GradedMF T = tensor_mf(E, E);
  // each of the two summands in either degree has rank 4
  CHECK(T.rank1() == 8);
  CHECK(T.rank0() == 8);
  CHECK(T.W == E.W + E.W);
  GradedMF HH = tensor_mf(H, H);
  CHECK(H.ctx->str(HH.W) == "2*x^2*T_1");

  GradedMF D = dual_mf(H);
  CHECK(D.E1.tw == std::vector<int>{-1});
  CHECK(entry(D, D.g1, 0, 0) == "-x*T_1");
  CHECK(entry(D, D.g0, 0, 0) == "x");
  CHECK(D.W == -H.W);
  CHECK(hom_mf(H, unit_mf(H.ctx)) == D);
  CHECK(hom_mf(E, unit_mf(E.ctx)) == dual_mf(E));

  GradedMF End = hom_mf(H, H);
  CHECK(End.W.is_zero());
  CHECK(End.rank1() == 2);
  CHECK(End.rank0() == 2);

  auto other = make_poly_ctx(ring({"u"}));
  auto S2 = s_context(*other, {other->parse("u^2")});
  CHECK_THROWS_AS(tensor_mf(H, unit_mf(S2)), RingMismatch);
}

TEST_CASE("canonical isomorphisms on the fixtures") {
  GradedMF E = ci2_mf(), H = h1_mf();
  MFMap c = comm_iso(H, H);
  CHECK(c.a1.rows() == 2);
  CHECK(check_mf_map(c).ok);
  // the odd-odd summand picks up a sign
  CHECK(H.ctx->str(c.a0.at(1, 1)) == "-1");
  CHECK(H.ctx->str(c.a1.at(1, 0)) == "1");

  MFMap ht = hom_tensor_iso(E, E);
  CHECK(check_mf_map(ht).ok);
  CHECK(E.ctx->str(ht.a0.at(0, 0)) == "1");
  CHECK(E.ctx->str(ht.a0.at(4, 4)) == "-1");
  for (auto& cert : canonical_isos(E, E, E, E)) {
    INFO(cert.name << " " << cert.where);
    CHECK(cert.ok());
  }
  GradedMF z = zero_mf(E.ctx, E.W);
  for (auto& cert : canonical_isos(z, z, z, z)) CHECK(cert.ok());
}

TEST_CASE("canonical isomorphisms on random factorizations") {
  auto Q = make_poly_ctx(ring({"x", "y"}));
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    auto fam = random_mf_family(Q, seed, 4);
    for (auto& E : fam) CHECK(check_mf(E).ok);
    auto certs = canonical_isos(fam[0], fam[1], fam[2], fam[3]);
    for (auto& cert : certs) {
      INFO(seed << " " << cert.name << " " << cert.where);
      CHECK(cert.ok());
    }
  }
}

TEST_CASE("periodic complexes") {
  GradedMF H = h1_mf();
  ChainComplex C = periodic_complex(H, -3, 3);
  CHECK(C.is_complex());
  CHECK(exactness_window(C, -2, 2));
  GradedMF E = ci2_mf();
  ChainComplex D = periodic_complex(E, -3, 3);
  CHECK(D.is_complex());
  CHECK(exactness_window(D, -2, 2));
  CHECK(periodic_complex(zero_mf(E.ctx, E.W), 0, 2).is_zero());
}

TEST_CASE("supports of twisted periodic complexes") {
  GradedMF H = h1_mf();
  auto s = supp_tpc(hom_mf(H, H));
  const RingCtx& S = *H.ctx;
  CHECK(radical_member(S, s.ideal(), S.parse("x")));
  CHECK(ideal_contains(S, s.h0, S.parse("x")));
  CHECK_FALSE(is_unit_ideal(S, s.ideal()));

  auto Q = make_poly_ctx(ring({"x", "y"}));
  GradedMF P = random_tpc(Q, 11), R = random_tpc(Q, 12);
  auto sp = supp_tpc(P), sr = supp_tpc(R), spr = supp_tpc(tensor_mf(P, R));
  std::vector<Poly> inter = sp.ideal();
  for (auto& g : sr.ideal()) inter.push_back(g);
  CHECK(radical_equal(*Q, spr.ideal(), inter));
  CHECK(radical_equal(*Q, supp_tpc(dual_mf(P)).ideal(), sp.ideal()));

  // the identity factorization of 0 is exact
  FreeModule one = FreeModule::free(1);
  PolyMatrix u(one, one), z(one, one);
  u.at(0, 0) = Q->one();
  GradedMF ex = make_mf(Q, Poly(), u, z);
  auto se = supp_tpc(ex);
  CHECK(is_unit_ideal(*Q, se.h0));
  CHECK(is_unit_ideal(*Q, se.h1));

  auto Rq = make_quotient_ctx(ring({"x"}), {make_poly_ctx(ring({"x"}))->parse("x^2")});
  CHECK_THROWS_AS(supp_tpc(make_mf(Rq, Poly(), PolyMatrix(one, one), PolyMatrix(one, one))), NonRegularContext);
}
