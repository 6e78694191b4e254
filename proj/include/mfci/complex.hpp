#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfci/matrix.hpp"
#include "mfci/resolution.hpp"

namespace mfci {

// Cohomologically indexed complex of graded free modules on the window
// [lo, hi]; terms outside the window are zero. d[k] : C^{lo+k} -> C^{lo+k+1}.
struct ChainComplex {
  CtxPtr ctx;
  int lo = 0;
  std::vector<FreeModule> terms;
  std::vector<PolyMatrix> d;

  ChainComplex() = default;
  ChainComplex(CtxPtr c, int lo_, std::vector<FreeModule> t, std::vector<PolyMatrix> dd);

  int hi() const { return lo + int(terms.size()) - 1; }
  bool in_window(int i) const { return i >= lo && i <= hi(); }
  FreeModule term(int i) const;
  int rank(int i) const { return term(i).rank(); }
  // C^i -> C^{i+1}; a zero matrix of the right shape outside the window.
  PolyMatrix diff(int i) const;
  // Fails with the first degree where d^{i+1} d^i != 0.
  bool is_complex(int* bad = nullptr) const;
  bool is_zero() const;
  bool operator==(const ChainComplex& o) const;
  // Restriction to [a, b] (clamped to the window).
  ChainComplex truncate(int a, int b) const;
};

// Sequences of maps with no d^2 = 0 requirement share the representation.
using MapSequence = ChainComplex;

// A resolution F_n as the complex C^{-n} = F_n.
ChainComplex complex_from_resolution(CtxPtr ctx, const Resolution& res);

// Degree-`deg` map: comp[i] : A^i -> B^{i+deg}; matrices have polynomial degree mdeg.
struct ChainMap {
  int deg = 0;
  int mdeg = 0;
  std::map<int, PolyMatrix> comp;

  // Component at i, or the zero matrix between the right terms.
  PolyMatrix at(int i, const ChainComplex& A, const ChainComplex& B) const;
};

ChainMap identity_map(const ChainComplex& C);
ChainMap scalar_map(const ChainComplex& C, const Poly& c, int mdeg);
ChainMap compose(const ChainMap& g, const ChainMap& f, const ChainComplex& A, const ChainComplex& B,
                 const ChainComplex& C);  // g o f, f : A -> B, g : B -> C
ChainMap add(const ChainMap& f, const ChainMap& g, const ChainComplex& A, const ChainComplex& B, bool subtract = false);
ChainMap map_nf(const ChainMap& f, const RingCtx& ctx);
bool map_is_zero(const ChainMap& f, const RingCtx& ctx);
// d_B f = (-1)^deg f d_A on every degree where both sides are inside the windows.
bool is_chain_map(const ChainMap& f, const ChainComplex& A, const ChainComplex& B, int* bad = nullptr);

// Homology at degree i, presented as a cokernel (target = generators of ker d^i).
PolyMatrix homology(const ChainComplex& C, int i);
// True iff H^i = 0 for every i in [a, b]; throws WindowTooSmall if [a, b] leaves the window.
bool exactness_window(const ChainComplex& C, int a, int b);

// cone^i = A^{i+1} + B^i with d = [[-d_A, 0], [f, d_B]].
ChainComplex cone(const ChainMap& f, const ChainComplex& A, const ChainComplex& B);

std::vector<int> ranks(const ChainComplex& C);

}  // namespace mfci
