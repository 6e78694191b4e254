#include <doctest.h>

#include "mfci/fixtures.hpp"
#include "mfci/operators.hpp"
#include "mfci/resolution.hpp"

using namespace mfci;

namespace {

struct Setup {
  Fixture fx;
  HigherHomotopySystem sys;
  GradedMF E;
};

Setup setup(const std::string& name) {
  Setup s{fixture(name), {}, {}};
  s.sys = fixture_homotopies(s.fx);
  s.E = fixture_mf(s.fx, s.sys);
  return s;
}

}  // namespace

TEST_CASE("dual basis") {
  CHECK(dual_rank(2, 3) == 4);
  CHECK(dual_rank(3, 2) == 6);
  CHECK(dual_rank(1, 0) == 1);
  auto b = dual_basis(2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == MultiIndex{2, 0});
  CHECK(b[2] == MultiIndex{0, 2});
  CHECK(cohomology_model_rank(2, -4) == 3);
}

TEST_CASE("standard resolution of k over ci2") {
  auto s = setup("ci2");
  auto F = standard_resolution(s.sys, s.fx.R, 6);
  CHECK(F.complex.is_complex());
  for (int n = 0; n <= 6; ++n) CHECK(F.complex.rank(-n) == n + 1);
  // minimal, so the ranks agree with the brute-force resolution
  auto oracle = free_resolution(*s.fx.R, s.fx.pres_r, 6);
  for (int n = 0; n <= 6; ++n) CHECK(oracle.term(n).rank() == n + 1);
  CHECK(exactness_window(F.complex, -5, -1));
}

TEST_CASE("standard resolution over a hypersurface is periodic") {
  auto s = setup("h1");
  auto F = standard_resolution(s.sys, s.fx.R, 5);
  for (int n = 0; n <= 5; ++n) CHECK(F.complex.rank(-n) == 1);
  CHECK(exactness_window(F.complex, -4, -1));
}

TEST_CASE("cohomology resolution equals the standard resolution") {
  for (std::string name : {"h1", "ci2", "ci2-rx", "ci3"}) {
    CAPTURE(name);
    auto s = setup(name);
    int n = s.fx.c() == 3 ? 4 : 6;
    auto F = standard_resolution(s.sys, s.fx.R, n);
    auto C = cohomology_resolution(s.E, s.fx.R, n);
    CHECK(C == F.complex);
    for (int k = 0; k < s.fx.c(); ++k) {
      auto tk = cohomology_t_map(s.E, s.fx.R, n, k);
      for (int i = -n + 2; i <= 0; ++i) CHECK(tk.at(i, C, C) == F.op[k].at(i, C, C));
    }
  }
}

TEST_CASE("eisenbud operator of the hypersurface is the periodicity") {
  auto s = setup("h1");
  auto F = standard_resolution(s.sys, s.fx.R, 5);
  auto eo = eisenbud_operators(F.complex, s.fx.f, s.fx.Q);
  REQUIRE(eo.t.size() == 1);
  for (int i = -5; i <= -2; ++i) {
    auto m = eo.t[0].at(i, F.complex, F.complex);
    REQUIRE(m.rows() == 1);
    CHECK(m.at(0, 0) == s.fx.R->one());
  }
}

TEST_CASE("chi equals T") {
  for (std::string name : {"h1", "ci2", "ci2-ry", "ci3"}) {
    CAPTURE(name);
    auto s = setup(name);
    auto rep = verify_chi_equals_T(s.sys, s.E, s.fx.R, s.fx.c() == 3 ? 4 : 6);
    CAPTURE(rep.where);
    CHECK(rep.canonical_equal);
    CHECK(rep.t_equal);
    CHECK(rep.alternative_homotopic);
    CHECK(rep.commute);
  }
}

TEST_CASE("regularity bound") {
  auto r = regularity_bound(setup("ci2").E);
  CHECK(r.alpha == 0);
  CHECK(r.e == 2);
  CHECK(r.n_E == 1);
  r = regularity_bound(setup("h1").E);
  CHECK(r.alpha == 0);
  CHECK(r.e == 1);
  CHECK(r.n_E == 0);
}

TEST_CASE("syzygy resolution") {
  for (std::string name : {"ci2", "ci2-rx", "h1"}) {
    CAPTURE(name);
    auto s = setup(name);
    auto rep = syzygy_resolution(s.E, s.fx.R, s.fx.pres_r, 6);
    CHECK(rep.complex_ok);
    CHECK(rep.exact_ok);
    CHECK(rep.betti == rep.oracle);
    CHECK(rep.ok());
  }
}

TEST_CASE("random complete intersections") {
  for (uint64_t seed = 1; seed <= 4; ++seed) {
    CAPTURE(seed);
    auto s = setup("random:" + std::to_string(seed));
    int n = 4;
    auto F = standard_resolution(s.sys, s.fx.R, n);
    CHECK(F.complex.is_complex());
    CHECK(cohomology_resolution(s.E, s.fx.R, n) == F.complex);
    auto rep = verify_chi_equals_T(s.sys, s.E, s.fx.R, n, seed);
    CAPTURE(rep.where);
    CHECK(rep.ok());
  }
}
