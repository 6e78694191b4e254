#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfci/complex.hpp"
#include "mfci/koszul.hpp"

namespace mfci {

using MultiIndex = std::vector<int>;

int weight(const MultiIndex& J);
// All J in N^c with |J| = n, lexicographically decreasing (e_1 first).
std::vector<MultiIndex> multi_indices(int c, int n);

// sigma^J for 1 <= |J| <= jmax on a Q-resolution G (as the complex G^{-j} = G_j).
// sigma^J has cohomological degree 1 - 2|J| and polynomial degree sum J_i deg f_i.
struct HigherHomotopySystem {
  ChainComplex G;
  std::vector<Poly> f;
  std::vector<int> fdeg;
  int jmax = 0;
  std::map<MultiIndex, ChainMap> sigma;

  int c() const { return int(f.size()); }
  int length() const { return -G.lo; }
  // sigma^J as a map; sigma^0 is the differential, zero beyond jmax.
  ChainMap map(const MultiIndex& J) const;
  // Homological component sigma^J_j : G_j -> G_{j + 2|J| - 1}.
  PolyMatrix component(const MultiIndex& J, int j) const;
};

// Generic construction by iterated nullhomotopies. Throws NotAnRModule when some
// f_i does not kill H^0(G), LiftObstruction when a lift fails.
HigherHomotopySystem higher_homotopies(const ChainComplex& G, const std::vector<Poly>& f);

// DG shortcut for G = koszul(a) resolving Q/(a): sigma^i is wedge with
// sum_k c_ik e_k where f_i = sum_k c_ik a_k, and sigma^J = 0 for |J| >= 2.
HigherHomotopySystem koszul_homotopies(const KoszulComplex& K, const std::vector<Poly>& a, const std::vector<Poly>& f);

// Checks sum_{J'+J''=J} sigma^J' sigma^J'' = (f_i if J = e_i else 0) for all
// 1 <= |J| <= jmax + 1. On failure `where` names the multi-index and degree.
bool check_higher_homotopies(const HigherHomotopySystem& s, std::string* where = nullptr);

std::string multi_index_str(const MultiIndex& J);

}  // namespace mfci
