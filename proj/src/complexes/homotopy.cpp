#include "mfci/homotopy.hpp"

#include "mfci/errors.hpp"
#include "mfci/groebner.hpp"

namespace mfci {

namespace {

// Solves A X + s Y B = G for (X, Y) with X : a -> A.src, Y : B.tgt -> G.tgt.
bool joint_solve(const RingCtx& ctx, const PolyMatrix& A, const PolyMatrix& B, const Poly& s, const PolyMatrix& G,
                 PolyMatrix* X, PolyMatrix* Y) {
  int m = G.rows(), n = G.cols();
  int xr = A.cols(), yc = B.rows();
  // vec index of (row r, col c) in an r-by-n matrix is c * rows + r
  FreeModule tgt, src;
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < m; ++r) tgt.tw.push_back(G.tgt.tw[r] - G.src.tw[c]);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < xr; ++r) src.tw.push_back(A.src.tw[r] - G.src.tw[c]);
  for (int c = 0; c < yc; ++c)
    for (int r = 0; r < m; ++r) src.tw.push_back(G.tgt.tw[r] - B.tgt.tw[c]);
  PolyMatrix K(src, tgt, 0);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < m; ++r)
      for (int k = 0; k < xr; ++k) K.at(c * m + r, c * xr + k) = A.at(r, k);
  int off = n * xr;
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < m; ++r)
      for (int k = 0; k < yc; ++k)
        if (!B.at(k, c).is_zero()) K.at(c * m + r, off + k * m + r) = B.at(k, c) * s;
  std::vector<Poly> rhs(size_t(m) * n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < m; ++r) rhs[c * m + r] = G.at(r, c);
  auto sol = Lifter(ctx, K).try_lift(rhs);
  if (!sol) return false;
  *X = PolyMatrix(G.src, A.src, G.deg - A.deg);
  *Y = PolyMatrix(B.tgt, G.tgt, G.deg - B.deg);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < xr; ++r) X->at(r, c) = (*sol)[c * xr + r];
  for (int c = 0; c < yc; ++c)
    for (int r = 0; r < m; ++r) Y->at(r, c) = (*sol)[off + c * m + r];
  return true;
}

}  // namespace

ChainMap nullhomotopy(const ChainMap& g, const ChainComplex& C, const ChainComplex& D) {
  const RingCtx& ctx = *C.ctx;
  int d = g.deg;
  Poly s = d % 2 == 0 ? ctx.one() : -ctx.one();
  ChainMap h;
  h.deg = d - 1;
  h.mdeg = g.mdeg;
  for (int i = C.hi(); i >= C.lo; --i) {
    int t = i + d - 1;  // h^i : C^i -> D^t
    if (t > D.hi()) continue;
    if (t < D.lo) break;
    if (t == D.hi()) continue;  // free here, fixed jointly with h^{i-1}
    PolyMatrix rhs = g.at(i, C, D);
    if (t + 1 == D.hi() && C.in_window(i + 1)) {
      PolyMatrix X, Y;
      if (!joint_solve(ctx, D.diff(t), C.diff(i), s, rhs.nf(ctx), &X, &Y))
        throw NotNullhomotopic("no homotopy at degree " + std::to_string(i) + " (top of target)");
      h.comp[i] = X.nf(ctx);
      h.comp[i + 1] = Y.nf(ctx);
      continue;
    }
    if (C.in_window(i + 1)) rhs = rhs - (h.at(i + 1, C, D) * C.diff(i)).scale(s.lead().c);
    rhs = rhs.nf(ctx);
    PolyMatrix comp(C.term(i), D.term(t), g.mdeg);
    if (!rhs.is_zero()) {
      if (D.rank(t) == 0)
        throw NotNullhomotopic("obstruction at degree " + std::to_string(i) + ": target term is zero");
      Lifter L(ctx, D.diff(t));
      for (int j = 0; j < rhs.cols(); ++j) {
        auto sol = L.try_lift(rhs.column(j));
        if (!sol)
          throw NotNullhomotopic("obstruction at degree " + std::to_string(i) + ", column " + std::to_string(j));
        comp.set_column(j, *sol);
      }
    }
    h.comp[i] = comp.nf(ctx);
  }
  int bad = 0;
  if (!verify_homotopy(g, h, C, D, &bad))
    throw NotNullhomotopic("homotopy check failed at degree " + std::to_string(bad));
  return h;
}

bool verify_homotopy(const ChainMap& g, const ChainMap& h, const ChainComplex& C, const ChainComplex& D, int* bad) {
  const RingCtx& ctx = *C.ctx;
  int d = g.deg;
  for (int i = C.lo; i <= C.hi(); ++i) {
    if (!D.in_window(i + d)) continue;
    PolyMatrix lhs = D.diff(i + d - 1) * h.at(i, C, D);
    PolyMatrix rhs = h.at(i + 1, C, D) * C.diff(i);
    PolyMatrix sum = d % 2 == 0 ? lhs + rhs : lhs - rhs;
    if (!(g.at(i, C, D) - sum).nf(ctx).is_zero()) {
      if (bad) *bad = i;
      return false;
    }
  }
  return true;
}

}  // namespace mfci
