#include <algorithm>
#include <map>
#include <stdexcept>

#include "mfci/operators.hpp"

namespace mfci {

namespace {

struct Gen {
  int k, m, offset;  // generator of E_parity, dual degree, position in F_h
};

struct Model {
  const GradedMF* E;
  const RingCtx* R;
  int c = 0, nx = 0;
  std::vector<int> fdeg;
  std::vector<std::vector<Gen>> gens;  // gens[h]
  std::vector<FreeModule> F;
  std::map<std::pair<int, int>, std::map<MultiIndex, int>> index;

  const std::map<MultiIndex, int>& idx(int m) {
    auto key = std::make_pair(c, m);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    std::map<MultiIndex, int> ix;
    auto b = dual_basis(c, m);
    for (size_t k = 0; k < b.size(); ++k) ix[b[k]] = int(k);
    return index.emplace(key, std::move(ix)).first->second;
  }

  const Gen* find(int h, int k) const {
    for (auto& g : gens[h])
      if (g.k == k) return &g;
    return nullptr;
  }

  // Adds the action of the S-polynomial p from generator src (in F_hs) to
  // generator tgt (in F_ht) into M.
  void contract(PolyMatrix& M, const Gen& src, const Gen& tgt, const Poly& p) {
    const PolyRing& sr = E->ctx->ring();
    auto sb = dual_basis(c, src.m);
    const auto& ti = idx(tgt.m);
    for (auto& [mono, coeff] : split_t(p, sr)) {
      MultiIndex J(c);
      int w = 0;
      for (int k = 0; k < c; ++k) w += (J[k] = mono.e[nx + k]);
      if (src.m - w != tgt.m) continue;
      Poly e = R->nf(coeff);
      if (e.is_zero()) continue;
      for (size_t bi = 0; bi < sb.size(); ++bi) {
        MultiIndex b = sb[bi];
        bool ok = true;
        for (int k = 0; k < c && ok; ++k) ok = (b[k] -= J[k]) >= 0;
        if (!ok) continue;
        M.at(tgt.offset + ti.at(b), src.offset + int(bi)) += e;
      }
    }
  }
};

Model build_model(const GradedMF& E, const RingCtx& R, int n_max) {
  Model md;
  md.E = &E;
  md.R = &R;
  const PolyRing& sr = E.ctx->ring();
  md.c = sr.nt();
  md.nx = sr.nx();
  for (int k = 0; k < md.c; ++k) md.fdeg.push_back(-E.ctx->iw()[md.nx + k]);
  if ((E.rank0() && E.E0.itw.empty()) || (E.rank1() && E.E1.itw.empty()))
    throw std::invalid_argument("cohomology_resolution needs internal twists on E");
  md.gens.resize(n_max + 1);
  md.F.resize(n_max + 1);
  for (int h = 0; h <= n_max; ++h) {
    const FreeModule& P = h % 2 == 0 ? E.E0 : E.E1;
    for (int k = 0; k < P.rank(); ++k) {
      int m = (h - h % 2) / 2 - P.tw[k];
      if (m < 0) continue;
      md.gens[h].push_back({k, m, md.F[h].rank()});
      for (auto& b : dual_basis(md.c, m)) {
        int s = 0;
        for (int j = 0; j < md.c; ++j) s += b[j] * md.fdeg[j];
        md.F[h].tw.push_back(P.itw[k] - s);
      }
    }
  }
  return md;
}

}  // namespace

ChainComplex cohomology_resolution(const GradedMF& E, CtxPtr R, int n_max) {
  Model md = build_model(E, *R, n_max);
  std::vector<PolyMatrix> d(n_max + 1);
  for (int h = 1; h <= n_max; ++h) {
    // F_h -> F_{h-1} comes from g0 (h even) or g1 (h odd)
    const PolyMatrix& g = h % 2 == 0 ? E.g0 : E.g1;
    PolyMatrix M(md.F[h], md.F[h - 1], 0);
    for (auto& src : md.gens[h])
      for (int r = 0; r < g.rows(); ++r) {
        const Poly& p = g.at(r, src.k);
        if (p.is_zero()) continue;
        const Gen* tgt = md.find(h - 1, r);
        if (tgt) md.contract(M, src, *tgt, p);
      }
    d[h] = M;
  }
  std::vector<FreeModule> terms;
  std::vector<PolyMatrix> dd;
  for (int h = n_max; h >= 0; --h) terms.push_back(md.F[h]);
  for (int h = n_max; h >= 1; --h) dd.push_back(d[h]);
  return ChainComplex(R, -n_max, terms, dd);
}

ChainMap cohomology_t_map(const GradedMF& E, CtxPtr R, int n_max, int k) {
  Model md = build_model(E, *R, n_max);
  ChainMap out;
  out.deg = 2;
  out.mdeg = -md.fdeg.at(k);
  std::vector<int> e(E.ctx->ring().nvars(), 0);
  e[md.nx + k] = 1;
  Poly Tk = Poly::monomial(E.ctx->ring().monomial(e), E.ctx->field().one());
  for (int h = 2; h <= n_max; ++h) {
    PolyMatrix M(md.F[h], md.F[h - 2], out.mdeg);
    for (auto& src : md.gens[h]) {
      const Gen* tgt = md.find(h - 2, src.k);
      if (tgt) md.contract(M, src, *tgt, Tk);
    }
    out.comp[-h] = M;
  }
  return out;
}

int cohomology_model_rank(int c, int d) { return dual_rank(c, -d - c); }

Regularity regularity_bound(const GradedMF& E) {
  Regularity r;
  int mx = 0;
  bool any = false;
  for (auto* P : {&E.E0, &E.E1})
    for (int t : P->tw) {
      mx = any ? std::max(mx, t) : t;
      any = true;
    }
  // reg O(-a) on P^{c-1} is a; on P^0 every sheaf is regular, so clamp at 0
  r.alpha = any ? std::max(mx - 1, 0) : 0;
  r.e = E.ctx->ring().nx();
  r.n_E = 2 * r.alpha + r.e - 1;
  return r;
}

}  // namespace mfci
