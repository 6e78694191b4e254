#pragma once

#include <map>
#include <vector>

#include "mfci/dense.hpp"
#include "mfci/matrix.hpp"

namespace mfci {

// Monomials of weighted degree d (weights w, only variables with w > 0), in
// decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(const PolyRing& r, const std::vector<int>& w, int d);
// Same, but only those not divisible by a leading monomial of the ctx relations.
std::vector<Monomial> standard_monomials(const RingCtx& ctx, int d);

// k-basis of the degree-d part of a free module over a positively graded ctx.
class GradedPiece {
 public:
  GradedPiece(const RingCtx& ctx, const FreeModule& F, int d);
  int dim() const { return int(elems_.size()); }
  int degree() const { return d_; }
  // Coordinates of a homogeneous degree-d element already in normal form.
  std::vector<Coeff> coords(const std::vector<Poly>& col) const;
  const std::vector<std::pair<int, Monomial>>& elems() const { return elems_; }

 private:
  const RingCtx* ctx_;
  int d_;
  std::vector<std::pair<int, Monomial>> elems_;
  std::map<std::pair<int, std::array<uint16_t, kMaxVars>>, int> index_;
};

// Degree of the element col of F (primary grading); col must be homogeneous.
int element_degree(const RingCtx& ctx, const std::vector<Poly>& col, const FreeModule& F);
// Span of the homogeneous columns of gens inside (tgt)_d.
Echelon image_in_degree(const RingCtx& ctx, const PolyMatrix& gens, int d);
// dim_k (coker gens)_d.
int hilbert_function(const RingCtx& ctx, const PolyMatrix& pres, int d);
// dim_k (im gens)_d.
int image_dimension(const RingCtx& ctx, const PolyMatrix& gens, int d);

}  // namespace mfci
