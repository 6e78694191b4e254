#pragma once

#include "mfci/complex.hpp"

namespace mfci {

// Koszul complex on f over Q: C^{-k} = wedge^k Q^c, basis e_S for k-subsets S
// in lexicographic order, d(e_S) = sum_k (-1)^k f_{s_k} e_{S - s_k}.
struct KoszulComplex {
  ChainComplex complex;
  std::vector<std::vector<int>> subsets;  // all subsets, by size then lexicographic
  // mult[i][k] : C^{-k} -> C^{-k-1}, wedge with e_i on the left (polynomial degree deg f_i).
  std::vector<std::vector<PolyMatrix>> mult;
};

KoszulComplex koszul(CtxPtr Q, const std::vector<Poly>& f);

// k-subsets of {0..c-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int c, int k);

}  // namespace mfci
