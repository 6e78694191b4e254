#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfci/higher.hpp"
#include "mfci/mf.hpp"

namespace mfci {

// A complete intersection R = Q/(f) with a module M. Cyclic fixtures set `a`
// (M = Q/(a), a regular, resolved by the Koszul complex); otherwise M is
// coker(pres_q).
struct Fixture {
  std::string name;
  CtxPtr Q, R, S;
  std::vector<Poly> f, a;
  PolyMatrix pres_q;  // over Q
  PolyMatrix pres_r;  // over R

  int c() const { return int(f.size()); }
};

std::vector<std::string> fixture_names();
// Throws UnknownFixture. "random:<seed>" selects random_fixture(seed).
Fixture fixture(const std::string& name);
// Seeded complete intersection in <= 3 variables with f_i of degree <= 3 and a
// cyclic module Q/(a), a a regular sequence of linear forms containing f.
Fixture random_fixture(uint64_t seed);
Fixture make_fixture(const std::string& name, CtxPtr Q, std::vector<Poly> f, std::vector<Poly> a);
// The same ring with M = k, R or R/(p_1, ..., p_m), written "k", "R" and
// "R/(p1, p2)". Shares Q, R and S with base. Throws ParseError.
Fixture with_module(const Fixture& base, const std::string& spec);
Fixture make_fixture(const std::string& name, CtxPtr Q, std::vector<Poly> f, const PolyMatrix& pres_q);

// Q-resolution of M (Koszul when cyclic) as a complex G^{-j} = G_j.
ChainComplex q_resolution(const Fixture& fx);
HigherHomotopySystem fixture_homotopies(const Fixture& fx);
GradedMF fixture_mf(const Fixture& fx, const HigherHomotopySystem& sys);

}  // namespace mfci
