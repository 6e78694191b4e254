#include <algorithm>

#include "mfci/errors.hpp"
#include "mfci/extsupport.hpp"
#include "mfci/groebner.hpp"
#include "mfci/ideal.hpp"

namespace mfci {

namespace {

std::vector<std::vector<Poly>> columns(const PolyMatrix& A) {
  std::vector<std::vector<Poly>> out;
  for (int c = 0; c < A.cols(); ++c) out.push_back(A.column(c));
  return out;
}

ModulePresentation saturated(const ModulePresentation& P) {
  ModulePresentation S = P;
  S.pres = saturate_module(*P.ring, P.pres, irrelevant_t(*P.ring));
  S.rel_level.clear();
  for (int c = 0; c < S.pres.cols(); ++c) S.rel_level.push_back(-S.pres.src.tw[c]);
  return S;
}

// Highest level where the saturation adds relations, or -1.
int top_torsion(const ModulePresentation& P, const ModulePresentation& S) {
  auto orig = columns(P.pres), sat = columns(S.pres);
  int hi = P.top;
  for (int l : S.rel_level) hi = std::max(hi, l);
  int top = -1;
  for (int j = 0; j <= hi + 1; ++j)
    if (span_dims(S, sat, S.rel_level, j) != span_dims(P, orig, P.rel_level, j)) top = j;
  return top;
}

int parity_of(int q) { return ((q % 2) + 2) % 2; }

}  // namespace

const StablePiece* StableExtTable::at(int q) const {
  for (auto& p : pieces)
    if (p.q == q) return &p;
  return nullptr;
}

StableExtTable stable_ext(const ExtData& X, int qa, int qb) {
  StableExtTable S;
  S.ev_sat = saturated(X.ev);
  S.odd_sat = saturated(X.odd);
  S.top_torsion = std::max(top_torsion(X.ev, S.ev_sat), top_torsion(X.odd, S.odd_sat));
  S.q0 = S.top_torsion < 0 ? 0 : 2 * (1 + S.top_torsion);
  auto piece = [&](int q) {
    StablePiece p;
    p.q = q;
    const ModulePresentation& P = parity_of(q) == 0 ? S.ev_sat : S.odd_sat;
    p.hilbert = level_hilbert(P, (q - parity_of(q)) / 2);
    for (auto& [d, n] : p.hilbert) p.dim += n;
    return p;
  };
  for (int q = qa; q <= qb; ++q) {
    if (q >= S.q0) {
      S.pieces.push_back(piece(q));
      continue;
    }
    if (X.c != 1)
      throw NegativeDegreeUnsupported("stable Ext below q0 = " + std::to_string(S.q0) + " needs c = 1");
    int m = (S.q0 - q + 1) / 2;
    StablePiece p = piece(q + 2 * m);
    StablePiece out;
    out.q = q;
    out.dim = p.dim;
    for (auto& [d, n] : p.hilbert) out.hilbert[d + m * X.fdeg[0]] = n;
    S.pieces.push_back(out);
  }
  return S;
}

bool two_periodic(const StableExtTable& S, int fdeg) {
  for (auto& p : S.pieces) {
    const StablePiece* n = S.at(p.q + 2);
    if (!n) continue;
    std::map<int, int> shifted;
    for (auto& [d, c] : p.hilbert) shifted[d - fdeg] = c;
    if (shifted != n->hilbert) return false;
  }
  return true;
}

namespace {

// Degree-0 part of a square map between free modules is invertible.
bool invertible_mod_m(const PolyMatrix& A, const Field& k) {
  if (A.rows() != A.cols()) return false;
  DenseMat D(k, A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      const Poly& p = A.at(i, j);
      if (!p.is_zero() && p.terms().back().m.is_one()) D.set(i, j, p.terms().back().c);
    }
  return D.rank() == A.rows();
}

}  // namespace

CompleteResolution complete_resolution_c1(const HigherHomotopySystem& sys, const GradedMF& E, CtxPtr R, int lo,
                                          int hi) {
  if (sys.c() != 1) throw NonRegularContext("complete resolutions are built for c = 1 only");
  int L = sys.length();
  if (lo > 0 || hi <= L) throw WindowTooSmall("complete resolution needs lo <= 0 < " + std::to_string(L) + " < hi");
  const RingCtx& r = *R;
  const Field& k = r.field();
  int fdeg = sys.fdeg[0];
  CompleteResolution CR;
  CR.mf = affine_from_graded(E);
  CR.lo = lo;
  CR.hi = hi;
  auto term = [&](int n) {
    const FreeModule& B = parity_of(n) == 0 ? E.E0 : E.E1;
    FreeModule F;
    for (int i = 0; i < B.rank(); ++i) {
      int j = B.tw[i];
      int m = parity_of(n) == 0 ? n / 2 - j : (n - 1) / 2 - j;
      F.tw.push_back(B.itw[i] - m * fdeg);
    }
    return F;
  };
  // d_n : T_n -> T_{n-1}
  auto diff = [&](int n) {
    const PolyMatrix& g = parity_of(n) == 0 ? CR.mf.B : CR.mf.A;
    PolyMatrix d(term(n), term(n - 1), 0);
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) d.at(i, j) = r.nf(g.at(i, j));
    return d;
  };
  std::vector<FreeModule> terms;
  std::vector<PolyMatrix> ds;
  for (int n = hi; n >= lo; --n) {
    terms.push_back(term(n));
    if (n > lo) ds.push_back(diff(n));
  }
  CR.T = ChainComplex(R, -hi, terms, ds);
  CR.P = standard_resolution(sys, R, hi).complex.truncate(-hi, 0);

  // gamma_n : T_n -> P_n; the identity in high degrees, lifted downward
  for (int n = hi; n >= 0; --n) {
    if (n >= L && CR.P.term(-n) == CR.T.term(-n) &&
        (n == hi || (CR.T.diff(-n - 1) == CR.P.diff(-n - 1) && CR.gamma[n + 1] == PolyMatrix::identity(CR.T.term(-n - 1), r.one())))) {
      CR.gamma[n] = PolyMatrix::identity(CR.T.term(-n), r.one());
      continue;
    }
    if (n == hi) throw WindowTooSmall("top of the window is not in the stable range");
    PolyMatrix Y = (CR.P.diff(-n - 1) * CR.gamma[n + 1]).nf(r);
    Lifter lift(r, CR.T.diff(-n - 1).transpose());
    PolyMatrix Xt = lift.lift_matrix(Y.transpose());
    PolyMatrix X(CR.T.term(-n), CR.P.term(-n), 0);
    for (int i = 0; i < X.rows(); ++i)
      for (int j = 0; j < X.cols(); ++j) X.at(i, j) = r.nf(Xt.at(j, i));
    CR.gamma[n] = X;
  }
  CR.splice = hi;
  while (CR.splice > 0 && invertible_mod_m(CR.gamma[CR.splice - 1], k)) --CR.splice;

  CR.gamma_chain = true;
  for (int n = 1; n <= hi; ++n) {
    PolyMatrix lhs = (CR.P.diff(-n) * CR.gamma[n]).nf(r), rhs = (CR.gamma[n - 1] * CR.T.diff(-n)).nf(r);
    if (!lhs.same_entries(rhs)) CR.gamma_chain = false;
  }
  CR.acyclic = exactness_window(CR.T, -hi + 1, -lo - 1);
  std::vector<FreeModule> dterms;
  std::vector<PolyMatrix> dds;
  for (int n = lo; n <= hi; ++n) {
    dterms.push_back(term(n).dual());
    if (n < hi) dds.push_back(CR.T.diff(-n - 1).transpose());
  }
  ChainComplex dual(R, lo, dterms, dds);
  CR.dual_acyclic = exactness_window(dual, lo + 1, hi - 1);
  return CR;
}

StablePiece stable_ext_via_compres(const CompleteResolution& CR, const FiniteModule& N, int q,
                                   ModulePresentation* pres) {
  if (q <= CR.lo || q >= CR.hi)
    throw WindowTooSmall("q = " + std::to_string(q) + " is not inside (" + std::to_string(CR.lo) + ", " +
                         std::to_string(CR.hi) + ")");
  LevelModule M = hom_homology(CR.T, N, q);
  StablePiece p;
  p.q = q;
  p.dim = M.X[0].dim();
  p.hilbert = M.X[0].hilbert();
  if (pres) *pres = present_module(N.ctx(), M);
  return p;
}

}  // namespace mfci
