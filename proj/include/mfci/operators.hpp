#pragma once

#include <string>
#include <vector>

#include "mfci/complex.hpp"
#include "mfci/higher.hpp"
#include "mfci/mf.hpp"

namespace mfci {

// Exponent vectors of degree m in c variables, grevlex decreasing. This is the
// fixed basis of the degree -2m part of the graded dual of R[chi_1..chi_c].
std::vector<MultiIndex> dual_basis(int c, int m);
int dual_rank(int c, int m);

// Summand G_i (x) D_m of the term in homological degree i + 2m.
struct DualBlock {
  int i, m, offset;
};

// G{sigma} over R: C^{-n} = sum_{i+2m=n} G_i (x) D_m for 0 <= n <= n_max, with
// blocks ordered by i ascending and G-major inside a block. op[k] is
// 1 (x) chi_k, a degree 2 map C^{-n} -> C^{-n+2}. lift is the same
// construction over Q, with lift^2 = sum_k f_k (1 (x) chi_k).
struct StandardResolution {
  ChainComplex complex, lift;
  std::vector<ChainMap> op;
  std::vector<std::vector<DualBlock>> blocks;  // blocks[n]
  int n_max = 0;
};

// R = Q/(f); sigma entries are reduced modulo f.
StandardResolution standard_resolution(const HigherHomotopySystem& sys, CtxPtr R, int n_max);

// Eisenbud operators of a complex F over R (window [-n, 0]) from a lifting
// to Q. lift defaults to the entrywise normal-form lift. t[k] are chain maps
// of degree 2 over R; tlift[k] their lifts with lift^2 = sum_k tlift[k] f_k.
struct EisenbudOperators {
  ChainComplex F, lift;
  std::vector<ChainMap> t, tlift;
};

EisenbudOperators eisenbud_operators(const ChainComplex& F, const std::vector<Poly>& f, CtxPtr Q,
                                     const ChainComplex* lift = nullptr);

// F(delta E): the summand S(a) of E_h-parity with internal twist t contributes
// t - sum b_k deg f_k for every dual monomial b of degree m = floor(h/2) - a;
// a polynomial entry sum_J p_J T^J acts by p_J times contraction by J.
ChainComplex cohomology_resolution(const GradedMF& E, CtxPtr R, int n_max);
// The same functor applied to multiplication by T_k : E -> E(1), as a degree
// 2 map on cohomology_resolution(E).
ChainMap cohomology_t_map(const GradedMF& E, CtxPtr R, int n_max, int k);

struct Regularity {
  int alpha = 0, e = 0, n_E = 0;
};
Regularity regularity_bound(const GradedMF& E);
// Rank of the dual cohomology model of O(d) on P^{c-1}.
int cohomology_model_rank(int c, int d);

struct SyzygyReport {
  Regularity reg;
  ChainComplex truncated;  // homological degrees n_E .. n_E + len
  std::vector<std::vector<int>> betti, oracle;  // sorted twists per degree
  bool complex_ok = false, exact_ok = false, betti_ok = false;
  bool ok() const { return complex_ok && exact_ok && betti_ok; }
};
// Truncation of cohomology_resolution(E) at homological degree n_E, compared
// after minimizing with brute-force syzygies of M = coker(pres) over R.
SyzygyReport syzygy_resolution(const GradedMF& E, CtxPtr R, const PolyMatrix& pres, int len);

struct ChiReport {
  bool canonical_equal = false;  // lift^2 = sum f_k chi_k and t_k == 1 (x) chi_k
  bool t_equal = false;          // 1 (x) chi_k == cohomology_t_map
  bool alternative_homotopic = false;
  bool commute = false;          // t_i t_j - t_j t_i nullhomotopic
  std::string where;
  std::vector<ChainMap> homotopies;  // for the alternative lifting, one per k
  bool ok() const { return canonical_equal && t_equal && alternative_homotopic && commute; }
};
// Compares Eisenbud operators of the standard resolution with 1 (x) chi_k and
// with T_k on the cohomology resolution, degrees <= n_max; an alternative
// lifting (seeded) must give homotopic operators.
ChiReport verify_chi_equals_T(const HigherHomotopySystem& sys, const GradedMF& E, CtxPtr R, int n_max,
                              uint64_t seed = 1);

}  // namespace mfci
