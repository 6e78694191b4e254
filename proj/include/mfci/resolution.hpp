#pragma once

#include <vector>

#include "mfci/matrix.hpp"

namespace mfci {

// d[i] : F_{i+1} -> F_i, homological indexing; F_0 = d[0].tgt (or f0 when d is empty).
struct Resolution {
  FreeModule f0;
  std::vector<PolyMatrix> d;
  bool complete = false;  // false when max_len cut the computation short

  int length() const { return int(d.size()); }
  const FreeModule& term(int i) const { return i == 0 ? f0 : d[i - 1].src; }
  std::vector<int> ranks() const;
};

// Removes unit entries (splitting off trivial summands) and redundant columns.
PolyMatrix minimal_presentation(const RingCtx& ctx, const PolyMatrix& pres);

// Minimal graded free resolution of coker(pres). Over a polynomial ring it
// stops by itself; over a quotient it stops after max_len differentials.
Resolution free_resolution(const RingCtx& ctx, const PolyMatrix& pres, int max_len);

}  // namespace mfci
