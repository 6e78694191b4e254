#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfci/complex.hpp"
#include "mfci/higher.hpp"

namespace mfci {

// Basis labels used to match summands of iterated tensor products: one entry
// (leaf tag, parity, basis index) per tensor factor.
struct Leaf {
  int tag, parity, index;
  bool operator==(const Leaf& o) const { return tag == o.tag && parity == o.parity && index == o.index; }
};
using Label = std::vector<Leaf>;

// E1 --g1--> E0 --g0--> E1(1) with g0 g1 = W and g1(1) g0 = W. Matrices live
// in ctx (no relations); "(1)" shifts the primary twist by one.
struct GradedMF {
  CtxPtr ctx;
  Poly W;
  FreeModule E1, E0;
  PolyMatrix g1, g0;
  std::vector<Label> labels1, labels0;  // empty unless tagged or built by tensor_mf

  int rank1() const { return E1.rank(); }
  int rank0() const { return E0.rank(); }
  bool operator==(const GradedMF& o) const {
    return W == o.W && E1 == o.E1 && E0 == o.E0 && g1 == o.g1 && g0 == o.g0;
  }
};

// A B = f I = B A over Q.
struct AffineMF {
  CtxPtr ctx;
  Poly f;
  PolyMatrix A, B;
};

struct MFCheck {
  bool ok = true;
  std::string where;  // "g0*g1 (i,j)" etc.
};

GradedMF make_mf(CtxPtr ctx, Poly W, PolyMatrix g1, PolyMatrix g0);
MFCheck check_mf(const GradedMF& E);
MFCheck check_affine_mf(const AffineMF& E);
// Throws MFEquationFailure when check_mf fails.
void require_mf(const GradedMF& E, const std::string& what);

// The ring S = Q[T_1..T_c] for f, graded by T-degree.
CtxPtr s_context(const RingCtx& Q, const std::vector<Poly>& f);
// E1 = sum_j G_{2j+1}(j), E0 = sum_j G_{2j}(j), g = sum_J sigma^J T^J.
GradedMF build_mf(const HigherHomotopySystem& sys, CtxPtr S);
GradedMF zero_mf(CtxPtr S, const Poly& W);
// (0 -> S -> 0), the unit for tensor products, with W = 0.
GradedMF unit_mf(CtxPtr S);

// S/(W) with the same gradings as S.
CtxPtr quotient_by_w(const GradedMF& E);
// coker g1 over S/(W).
PolyMatrix coker_mf(const GradedMF& E, CtxPtr* sw = nullptr);

GradedMF shift(const GradedMF& E);
GradedMF twist(const GradedMF& E, int n);
// Sets single-leaf labels with the given tag.
GradedMF tag_leaf(GradedMF E, int tag);

GradedMF tensor_mf(const GradedMF& E, const GradedMF& F);
GradedMF hom_mf(const GradedMF& E, const GradedMF& F);
GradedMF dual_mf(const GradedMF& E);
GradedMF direct_sum_mf(const GradedMF& E, const GradedMF& F);
AffineMF affine_from_graded(const GradedMF& E);  // T_i -> 1, c = 1

// Unrolled complex over S/(W): C^{2k} = E0(k), C^{2k-1} = E1(k), on [a, b].
ChainComplex periodic_complex(const GradedMF& E, int a, int b);

// Annihilators of H^0 and H^1 of a twisted periodic complex (W = 0). With
// saturate set and T-variables present, both are saturated w.r.t. (T).
struct TPCSupport {
  std::vector<Poly> h0, h1;
  std::vector<Poly> ideal() const;  // h0 * h1 generators: V(ideal) = V(h0) u V(h1)
};
TPCSupport supp_tpc(const GradedMF& P, bool saturate = true);

// Ungraded rank-2 factorizations of one W = a1 b1 + a2 b2 over ctx (no
// T-variables), with a_i, b_i random of degree <= 2 and no constant term.
// Each member swaps a random subset of the pairs and applies random constant
// base changes, so all members share W.
std::vector<GradedMF> random_mf_family(CtxPtr ctx, uint64_t seed, int count);
// Rank (2, 2) twisted periodic complex E (x) F, where E = (p1 p2, p3 p4) and
// F = (p1 p3, -p2 p4) for random forms p_i of degree 1 or 2.
GradedMF random_tpc(CtxPtr ctx, uint64_t seed);

}  // namespace mfci
