#include "mfci/minimize.hpp"

namespace mfci {

namespace {

bool find_unit(const ChainComplex& C, int* deg, int* row, int* col) {
  for (int i = C.lo; i < C.hi(); ++i) {
    const PolyMatrix& m = C.d[i - C.lo];
    for (int c = 0; c < m.cols(); ++c)
      for (int r = 0; r < m.rows(); ++r) {
        const Poly& p = m.at(r, c);
        if (!p.is_zero() && p.is_constant()) {
          *deg = i;
          *row = r;
          *col = c;
          return true;
        }
      }
  }
  return false;
}

std::vector<int> all_but(int n, int skip) {
  std::vector<int> v;
  for (int k = 0; k < n; ++k)
    if (k != skip) v.push_back(k);
  return v;
}

FreeModule drop(const FreeModule& m, int k) {
  FreeModule r;
  for (int j = 0; j < m.rank(); ++j) {
    if (j == k) continue;
    r.tw.push_back(m.tw[j]);
    if (!m.itw.empty()) r.itw.push_back(m.itw[j]);
  }
  return r;
}

}  // namespace

Minimized minimize(const ChainComplex& C0, bool track) {
  const RingCtx& ctx = *C0.ctx;
  Minimized out;
  ChainComplex C = C0;
  for (auto& m : C.d) m = m.nf(ctx);
  if (track) {
    out.iota = identity_map(C);
    out.proj = identity_map(C);
    out.h.deg = -1;
  }
  int i, r, c;
  while (find_unit(C, &i, &r, &c)) {
    // d^i = [[phi, beta], [gamma, delta]] with phi the (r, c) entry
    const PolyMatrix& D = C.d[i - C.lo];
    Coeff phi_inv = D.at(r, c).lead().c.inv();
    std::vector<int> rows = all_but(D.rows(), r), cols = all_but(D.cols(), c);
    PolyMatrix beta = submatrix(D, {r}, cols), gamma = submatrix(D, rows, {c}), delta = submatrix(D, rows, cols);
    PolyMatrix nd = (delta - (gamma * beta).scale(phi_inv)).nf(ctx);

    ChainComplex N = C;
    N.terms[i - C.lo] = drop(C.term(i), c);
    N.terms[i + 1 - C.lo] = drop(C.term(i + 1), r);
    N.d[i - C.lo] = nd.with_modules(N.terms[i - C.lo], N.terms[i + 1 - C.lo], 0);
    if (i - 1 >= C.lo) {
      PolyMatrix prev = C.d[i - 1 - C.lo];
      N.d[i - 1 - C.lo] = submatrix(prev, cols, all_but(prev.cols(), -1));
    }
    if (i + 1 < C.hi()) {
      PolyMatrix next = C.d[i + 1 - C.lo];
      N.d[i + 1 - C.lo] = submatrix(next, all_but(next.rows(), -1), rows);
    }

    if (track) {
      ChainMap io = identity_map(N), pr = identity_map(C), hh;
      hh.deg = -1;
      // iota_i(y) = (-phi^{-1} beta y, y), iota_{i+1}(y') = (0, y')
      PolyMatrix ii(N.term(i), C.term(i), 0);
      for (size_t k = 0; k < cols.size(); ++k) {
        ii.at(cols[k], int(k)) = ctx.one();
        ii.at(c, int(k)) = beta.at(0, int(k)).scale(-phi_inv);
      }
      io.comp[i] = ii;
      PolyMatrix i1(N.term(i + 1), C.term(i + 1), 0);
      for (size_t k = 0; k < rows.size(); ++k) i1.at(rows[k], int(k)) = ctx.one();
      io.comp[i + 1] = i1;
      // proj_i(x, y) = y, proj_{i+1}(x', y') = y' - gamma phi^{-1} x'
      PolyMatrix p0(C.term(i), N.term(i), 0);
      for (size_t k = 0; k < cols.size(); ++k) p0.at(int(k), cols[k]) = ctx.one();
      pr.comp[i] = p0;
      PolyMatrix p1(C.term(i + 1), N.term(i + 1), 0);
      for (size_t k = 0; k < rows.size(); ++k) {
        p1.at(int(k), rows[k]) = ctx.one();
        p1.at(int(k), r) = gamma.at(int(k), 0).scale(-phi_inv);
      }
      pr.comp[i + 1] = p1;
      // h(x', y') = (phi^{-1} x', 0) on C^{i+1}
      PolyMatrix h1(C.term(i + 1), C.term(i), 0);
      h1.at(c, r) = ctx.one().scale(phi_inv);
      hh.comp[i + 1] = h1;
      // compose with the earlier steps: h = h_old + iota_old h_new proj_old
      ChainMap mid = compose(compose(out.iota, hh, C, C, C0), out.proj, C0, C, C0);
      out.h = add(out.h, mid, C0, C0);
      out.iota = compose(out.iota, io, N, C, C0);
      out.proj = compose(pr, out.proj, C0, C, N);
    }
    C = N;
  }
  out.complex = C;
  return out;
}

}  // namespace mfci
