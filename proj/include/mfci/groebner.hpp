#pragma once

#include <optional>
#include <vector>

#include "mfci/matrix.hpp"

namespace mfci {

// Term of a free-module element: c * m * e_pos.
struct VTerm {
  Monomial m;
  int pos;
  Coeff c;
};

// Free-module element, terms sorted decreasing in the position-over-term order
// (lower position index is larger; grevlex inside a position).
using Vec = std::vector<VTerm>;

inline int vcmp(const VTerm& a, const VTerm& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return grevlex_cmp(a.m, b.m);
}

Vec vec_from_column(const std::vector<Poly>& col, int offset = 0);
std::vector<Poly> column_from_vec(const Vec& v, int rank, int offset = 0);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_mul_term(const Vec& v, const Monomial& m, const Coeff& c);

struct GBStats {
  long pairs = 0;
  long reductions_to_zero = 0;
  long chain_skips = 0;
  long product_skips = 0;
};

// Reduced Groebner basis of a submodule of a free module over a RingCtx.
// Relations of a quotient ring are added as g*e_k for k < relation_positions.
class ModuleGB {
 public:
  ModuleGB(const RingCtx& ctx, int rank, std::vector<Vec> gens, int relation_positions = -1);

  const std::vector<Vec>& basis() const { return basis_; }
  int rank() const { return rank_; }
  // Full normal form.
  Vec reduce(const Vec& v) const;
  // Reduce leading terms while the leading position is below pos_limit.
  Vec reduce_leading(const Vec& v, int pos_limit) const;
  bool member(const Vec& v) const { return reduce(v).empty(); }
  const GBStats& stats() const { return stats_; }

 private:
  const Vec* find_divisor(const VTerm& t) const;
  const RingCtx* ctx_;
  int rank_;
  std::vector<Vec> basis_;
  std::vector<std::vector<int>> by_pos_;
  std::vector<uint32_t> masks_;
  GBStats stats_;
};

// Reduced GB of an ideal (module of rank 1, no quotient relations applied).
std::vector<Poly> ideal_groebner(const RingCtx& ctx, const std::vector<Poly>& gens, bool apply_relations = true);

// Solves A X = b over ctx by division in the augmented module [A; I]; the
// solution is the deterministic division-algorithm remainder.
class Lifter {
 public:
  Lifter(const RingCtx& ctx, const PolyMatrix& A);
  std::optional<std::vector<Poly>> try_lift(const std::vector<Poly>& b) const;
  std::vector<Poly> lift(const std::vector<Poly>& b) const;
  // X with A X = B; X : B.src -> A.src of degree B.deg - A.deg.
  PolyMatrix lift_matrix(const PolyMatrix& B) const;
  bool in_image(const std::vector<Poly>& b) const;
  // Generators of ker A (not minimized).
  std::vector<std::vector<Poly>> kernel_columns() const;
  const PolyMatrix& matrix() const { return A_; }

 private:
  const RingCtx* ctx_;
  PolyMatrix A_;
  ModuleGB gb_;
};

// Groebner basis of the column span of A (top-level op).
std::vector<std::vector<Poly>> groebner(const RingCtx& ctx, const PolyMatrix& A, bool check_homogeneous = true);
std::vector<Poly> lift(const RingCtx& ctx, const PolyMatrix& A, const std::vector<Poly>& b);
// Kernel of A, minimized when the grading allows it.
PolyMatrix syzygies(const RingCtx& ctx, const PolyMatrix& A);
// Columns (given as a matrix into tgt) -> minimal homogeneous generating
// subset of their span, or the input with zero/duplicate columns removed when
// the context is not positively graded.
PolyMatrix minimal_generators(const RingCtx& ctx, const PolyMatrix& gens);
// Twist of a homogeneous column as an element of tgt.
int column_twist(const RingCtx& ctx, const std::vector<Poly>& col, const FreeModule& tgt, int* itw = nullptr);

}  // namespace mfci
