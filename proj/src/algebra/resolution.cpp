#include "mfci/resolution.hpp"

#include "mfci/groebner.hpp"

namespace mfci {

std::vector<int> Resolution::ranks() const {
  std::vector<int> r{f0.rank()};
  for (auto& m : d) r.push_back(m.src.rank());
  return r;
}

static bool find_unit(const PolyMatrix& A, int* ri, int* cj) {
  for (int j = 0; j < A.cols(); ++j)
    for (int i = 0; i < A.rows(); ++i) {
      const Poly& p = A.at(i, j);
      if (!p.is_zero() && p.is_constant()) {
        *ri = i;
        *cj = j;
        return true;
      }
    }
  return false;
}

PolyMatrix minimal_presentation(const RingCtx& ctx, const PolyMatrix& pres) {
  PolyMatrix A = pres.nf(ctx);
  int i0, j0;
  while (find_unit(A, &i0, &j0)) {
    // Generator i0 is a combination of the others: eliminate it with relation j0.
    Coeff inv = A.at(i0, j0).lead().c.inv();
    std::vector<int> rows, cols;
    for (int i = 0; i < A.rows(); ++i)
      if (i != i0) rows.push_back(i);
    for (int j = 0; j < A.cols(); ++j)
      if (j != j0) cols.push_back(j);
    PolyMatrix B = submatrix(A, rows, cols);
    for (size_t a = 0; a < rows.size(); ++a) {
      const Poly& u = A.at(rows[a], j0);
      if (u.is_zero()) continue;
      Poly us = u.scale(inv);
      for (size_t b = 0; b < cols.size(); ++b) {
        const Poly& v = A.at(i0, cols[b]);
        if (!v.is_zero()) B.at(int(a), int(b)) = ctx.nf(B.at(int(a), int(b)) - us * v);
      }
    }
    A = B;
  }
  return minimal_generators(ctx, A);
}

Resolution free_resolution(const RingCtx& ctx, const PolyMatrix& pres, int max_len) {
  Resolution res;
  PolyMatrix d1 = minimal_presentation(ctx, pres);
  res.f0 = d1.tgt;
  if (d1.cols() == 0) {
    res.complete = true;
    return res;
  }
  res.d.push_back(d1);
  while (true) {
    if (res.length() >= max_len) {
      res.complete = false;
      return res;
    }
    PolyMatrix z = syzygies(ctx, res.d.back());
    if (z.cols() == 0) {
      res.complete = true;
      return res;
    }
    res.d.push_back(z);
  }
}

}  // namespace mfci
