#include <random>

#include "mfci/errors.hpp"
#include "mfci/groebner.hpp"
#include "mfci/homotopy.hpp"
#include "mfci/minimize.hpp"
#include "mfci/operators.hpp"
#include "mfci/resolution.hpp"

namespace mfci {

EisenbudOperators eisenbud_operators(const ChainComplex& F, const std::vector<Poly>& f, CtxPtr Q,
                                     const ChainComplex* lift) {
  const RingCtx& q = *Q;
  int c = int(f.size());
  EisenbudOperators out;
  out.F = F;
  out.lift = lift ? *lift : ChainComplex(Q, F.lo, F.terms, F.d);
  std::vector<int> fdeg(c, 0);
  FreeModule fmod;
  for (int k = 0; k < c; ++k) {
    f[k].homogeneous(Q->gw(), &fdeg[k]);
    fmod.tw.push_back(-fdeg[k]);
  }
  PolyMatrix frow(fmod, FreeModule::free(1), 0);
  for (int k = 0; k < c; ++k) frow.at(0, k) = f[k];
  Lifter L(q, frow);
  out.tlift.resize(c);
  for (int k = 0; k < c; ++k) {
    out.tlift[k].deg = 2;
    out.tlift[k].mdeg = -fdeg[k];
  }
  for (int i = F.lo; i + 2 <= F.hi(); ++i) {
    PolyMatrix sq = (out.lift.diff(i + 1) * out.lift.diff(i)).nf(q);
    std::vector<PolyMatrix> parts;
    for (int k = 0; k < c; ++k) parts.emplace_back(F.term(i), F.term(i + 2), -fdeg[k]);
    for (int a = 0; a < sq.rows(); ++a)
      for (int b = 0; b < sq.cols(); ++b) {
        const Poly& p = sq.at(a, b);
        if (p.is_zero()) continue;
        auto sol = L.try_lift({p});
        if (!sol)
          throw DecompositionFailure("entry (" + std::to_string(a) + "," + std::to_string(b) + ") of the squared lift at degree " +
                                     std::to_string(i) + " is not in (f)");
        for (int k = 0; k < c; ++k) parts[k].at(a, b) = (*sol)[k];
      }
    for (int k = 0; k < c; ++k) out.tlift[k].comp[i] = parts[k];
  }
  for (int k = 0; k < c; ++k) {
    out.t.push_back(map_nf(out.tlift[k], *F.ctx));
    int bad = 0;
    if (!is_chain_map(out.t.back(), F, F, &bad))
      throw VerificationFailure("operator t_" + std::to_string(k + 1) + " is not a chain map at degree " +
                                std::to_string(bad));
  }
  return out;
}

namespace {

bool same_map(const ChainMap& a, const ChainMap& b, const ChainComplex& C, std::string* where, const std::string& what) {
  for (int i = C.lo; i + a.deg <= C.hi(); ++i)
    if (!a.at(i, C, C).same_entries(b.at(i, C, C))) {
      *where = what + " differs at degree " + std::to_string(i);
      return false;
    }
  return true;
}

}  // namespace

ChiReport verify_chi_equals_T(const HigherHomotopySystem& sys, const GradedMF& E, CtxPtr R, int n_max,
                              uint64_t seed) {
  ChiReport rep;
  CtxPtr Q = sys.G.ctx;
  int c = sys.c();
  StandardResolution SR = standard_resolution(sys, R, n_max);
  const ChainComplex& F = SR.complex;
  EisenbudOperators eo = eisenbud_operators(F, sys.f, Q, &SR.lift);

  // The splitting of lift^2 along f is unique only up to Koszul syzygies of f,
  // so check that 1 (x) chi splits it and that the operators agree over R.
  rep.canonical_equal = true;
  for (int i = F.lo; i + 2 <= F.hi() && rep.canonical_equal; ++i) {
    PolyMatrix sq = (eo.lift.diff(i + 1) * eo.lift.diff(i)).nf(*Q);
    PolyMatrix sum(F.term(i), F.term(i + 2), 0);
    for (int k = 0; k < c; ++k) sum = sum + SR.op[k].at(i, F, F).scale(sys.f[k]);
    if (!sq.same_entries(sum.nf(*Q))) {
      rep.canonical_equal = false;
      rep.where = "lift^2 != sum f_k chi_k at degree " + std::to_string(i);
    }
  }
  for (int k = 0; k < c && rep.canonical_equal; ++k)
    rep.canonical_equal = same_map(eo.t[k], map_nf(SR.op[k], *R), F, &rep.where, "t_" + std::to_string(k + 1));

  ChainComplex CR = cohomology_resolution(E, R, n_max);
  rep.t_equal = CR == F;
  if (!rep.t_equal && rep.where.empty()) rep.where = "cohomology resolution differs from the standard resolution";
  for (int k = 0; k < c && rep.t_equal; ++k)
    rep.t_equal = same_map(cohomology_t_map(E, R, n_max, k), SR.op[k], F, &rep.where, "T_" + std::to_string(k + 1));

  // alternative lifting: add f_1 Z for random constant Z
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(0, 100);
  std::vector<PolyMatrix> dd = SR.lift.d;
  for (auto& m : dd) {
    for (int a = 0; a < m.rows(); ++a)
      for (int b = 0; b < m.cols(); ++b) {
        long z = coef(rng);
        if (z) m.at(a, b) += sys.f[0].scale(Q->field().from_int(z));
      }
  }
  ChainComplex alt(Q, F.lo, F.terms, dd);
  rep.alternative_homotopic = true;
  try {
    EisenbudOperators eo2 = eisenbud_operators(F, sys.f, Q, &alt);
    for (int k = 0; k < c; ++k) {
      ChainMap diff = map_nf(add(eo2.t[k], eo.t[k], F, F, true), *R);
      rep.homotopies.push_back(nullhomotopy(diff, F, F));
    }
  } catch (const Error& e) {
    rep.alternative_homotopic = false;
    if (rep.where.empty()) rep.where = std::string("alternative lifting: ") + e.what();
  }

  rep.commute = true;
  try {
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j) {
        ChainMap a = compose(eo.t[i], eo.t[j], F, F, F), b = compose(eo.t[j], eo.t[i], F, F, F);
        ChainMap diff = map_nf(add(a, b, F, F, true), *R);
        if (!map_is_zero(diff, *R)) nullhomotopy(diff, F, F);
      }
  } catch (const Error& e) {
    rep.commute = false;
    if (rep.where.empty()) rep.where = std::string("commutator: ") + e.what();
  }
  return rep;
}

namespace {

std::vector<std::vector<int>> sorted_twists(const ChainComplex& C) {
  std::vector<std::vector<int>> out;
  for (int i = C.hi(); i >= C.lo; --i) {
    auto t = C.term(i).tw;
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  return out;
}

}  // namespace

SyzygyReport syzygy_resolution(const GradedMF& E, CtxPtr R, const PolyMatrix& pres, int len) {
  SyzygyReport rep;
  rep.reg = regularity_bound(E);
  int n = std::max(rep.reg.n_E, 0);
  ChainComplex full = cohomology_resolution(E, R, n + len + 1);
  rep.truncated = full.truncate(-(n + len + 1), -n);
  rep.complex_ok = rep.truncated.is_complex();
  rep.exact_ok = exactness_window(rep.truncated, rep.truncated.lo + 1, rep.truncated.hi() - 1);
  ChainComplex mini = minimize(rep.truncated, false).complex;
  rep.betti = sorted_twists(mini);
  rep.betti.resize(len);

  // brute force: the n-th syzygy of M by iterated syzygies, then its resolution
  Resolution P = free_resolution(*R, pres, n + 1);
  PolyMatrix omega = n == 0 ? minimal_presentation(*R, pres) : P.d.at(n);
  Resolution O = free_resolution(*R, omega, len);
  for (int j = 0; j < len; ++j) {
    auto t = O.term(j).tw;
    std::sort(t.begin(), t.end());
    rep.oracle.push_back(t);
  }
  rep.betti_ok = rep.betti == rep.oracle;
  return rep;
}

}  // namespace mfci
