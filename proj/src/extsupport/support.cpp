#include "mfci/errors.hpp"
#include "mfci/extsupport.hpp"
#include "mfci/ideal.hpp"

namespace mfci {

namespace {

std::string ideal_str(const RingCtx& ctx, const std::vector<Poly>& I) {
  std::string s = "(";
  for (size_t i = 0; i < I.size(); ++i) s += (i ? ", " : "") + ctx.str(I[i]);
  return s + ")";
}

std::vector<Poly> plus(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Adds x_v e_g for every generator: a presentation of M / mM.
PolyMatrix mod_m(const RingCtx& ctx, const PolyMatrix& pres) {
  int n = pres.rows(), nx = ctx.ring().nx();
  PolyMatrix out(FreeModule::free(pres.cols() + n * nx), pres.tgt, 0);
  for (int c = 0; c < pres.cols(); ++c) out.set_column(c, pres.column(c));
  for (int g = 0; g < n; ++g)
    for (int v = 0; v < nx; ++v) out.at(g, pres.cols() + g * nx + v) = ctx.var(v);
  return out;
}

// Equal as closed subsets of Proj: radicals agree after saturation.
bool proj_equal(const RingCtx& rt, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  auto T = irrelevant_t(rt);
  return radical_equal(rt, saturate_ideal(rt, a, T), saturate_ideal(rt, b, T));
}

}  // namespace

bool SupportIdeal::empty() const { return is_unit_ideal(*ring, ideal); }

SupportIdeal support_set(const ExtData& X) {
  const RingCtx& rt = *X.RT;
  SupportIdeal V;
  V.ring = X.RT;
  V.ann_ev = annihilator(rt, X.ev.pres);
  V.ann_odd = annihilator(rt, X.odd.pres);
  V.ideal = saturate_ideal(rt, ideal_intersect(rt, V.ann_ev, V.ann_odd), irrelevant_t(rt));
  return V;
}

void check_support_route(const SupportIdeal& V, const GradedMF& EM, const GradedMF& EN) {
  const RingCtx& S = *EM.ctx;
  if (!S.ring().same_as(V.ring->ring())) throw RingMismatch("support ideal and factorizations live in different rings");
  std::vector<Poly> ext = plus(V.ideal, V.ring->relations());
  std::vector<Poly> tpc = supp_tpc(hom_mf(EM, EN)).ideal();
  if (!radical_equal(S, ext, tpc))
    throw RouteMismatch("Ext route " + ideal_str(S, ext) + " vs factorization route " + ideal_str(S, tpc));
}

std::vector<Poly> ab_support(const ExtData& X) {
  const RingCtx& rt = *X.RT;
  const PolyRing& r = rt.ring();
  auto a = annihilator(rt, mod_m(rt, X.ev.pres));
  auto b = annihilator(rt, mod_m(rt, X.odd.pres));
  auto I = ideal_intersect(rt, a, b);
  std::vector<Poly> image;
  for (int i = 0; i < r.nvars(); ++i) image.push_back(i < r.nx() ? Poly() : rt.var(i));
  std::vector<Poly> out;
  for (auto& g : I) {
    Poly p = substitute(g, image, r);
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

Poly derivative(const Poly& p, int var, const PolyRing& r) {
  std::vector<Term> out;
  for (auto& t : p.terms()) {
    int e = t.m.e[var];
    if (e == 0) continue;
    std::vector<int> ex(r.nvars());
    for (int i = 0; i < r.nvars(); ++i) ex[i] = t.m.e[i];
    --ex[var];
    out.push_back({r.monomial(ex), t.c * r.field().from_int(e)});
  }
  return Poly::from_unsorted(std::move(out));
}

std::vector<Poly> sing_ideal(const GradedMF& E) {
  const RingCtx& S = *E.ctx;
  const PolyRing& r = S.ring();
  std::vector<Poly> I{E.W};
  for (int v = 0; v < r.nvars(); ++v) I.push_back(derivative(E.W, v, r));
  return saturate_ideal(S, I, irrelevant_t(S));
}

SupportFamily support_family(const std::vector<std::string>& names, const std::vector<HigherHomotopySystem>& sys,
                             const std::vector<FiniteModule>& modules, CtxPtr R, int n_max) {
  if (names.size() != sys.size() || names.size() != modules.size())
    throw DimensionMismatch("support_family: names, systems and modules differ in length");
  SupportFamily F;
  F.names = names;
  size_t n = names.size();
  F.V.resize(n);
  F.ext.resize(n);
  F.q0.resize(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      F.ext[i].push_back(ext_modules(sys[i], R, modules[j], n_max));
      F.V[i].push_back(support_set(F.ext[i][j]));
      F.q0[i].push_back(stable_ext(F.ext[i][j], 1, 0).q0);
    }
  return F;
}

std::vector<PropertyCheck> check_support_properties(const SupportFamily& F, const std::vector<Poly>& sing,
                                                    CtxPtr S) {
  size_t n = F.names.size();
  std::vector<PropertyCheck> out;
  auto pair = [&](size_t i, size_t j) { return "(" + F.names[i] + ", " + F.names[j] + ")"; };

  PropertyCheck p1{"empty support iff eventual vanishing", true, ""};
  for (size_t i = 0; i < n && p1.ok; ++i)
    for (size_t j = 0; j < n && p1.ok; ++j) {
      const ExtData& X = F.ext[i][j];
      int q0 = F.q0[i][j];
      if (q0 + 6 > X.n_max) {
        p1.ok = false;
        p1.witness = pair(i, j) + ": Ext known through " + std::to_string(X.n_max) + ", need " + std::to_string(q0 + 6);
        break;
      }
      bool vanish = true;
      for (int q = q0; q <= q0 + 6; ++q) vanish = vanish && X.ext[q].dim() == 0;
      if (vanish != F.V[i][j].empty()) {
        p1.ok = false;
        p1.witness = pair(i, j) + ": support " + ideal_str(*F.V[i][j].ring, F.V[i][j].ideal) +
                     (vanish ? " with Ext vanishing" : " with Ext nonzero");
      }
    }
  out.push_back(p1);

  PropertyCheck p2{"V(M,N) + V(M',N') = V(M,N') + V(M',N)", true, ""};
  for (size_t i = 0; i < n && p2.ok; ++i)
    for (size_t i2 = i + 1; i2 < n && p2.ok; ++i2)
      for (size_t j = 0; j < n && p2.ok; ++j)
        for (size_t j2 = j + 1; j2 < n && p2.ok; ++j2) {
          const RingCtx& rt = *F.V[i][j].ring;
          auto a = plus(F.V[i][j].ideal, F.V[i2][j2].ideal), b = plus(F.V[i][j2].ideal, F.V[i2][j].ideal);
          if (!proj_equal(rt, a, b)) {
            p2.ok = false;
            p2.witness = pair(i, j) + " + " + pair(i2, j2) + ": " + ideal_str(rt, a) + " vs " + ideal_str(rt, b);
          }
        }
  out.push_back(p2);

  PropertyCheck p3{"V(M,N) = V(M,M) n V(N,N) = V(N,M)", true, ""};
  for (size_t i = 0; i < n && p3.ok; ++i)
    for (size_t j = 0; j < n && p3.ok; ++j) {
      const RingCtx& rt = *F.V[i][j].ring;
      auto meet = plus(F.V[i][i].ideal, F.V[j][j].ideal);
      if (!proj_equal(rt, F.V[i][j].ideal, meet) || !radical_equal(rt, F.V[i][j].ideal, F.V[j][i].ideal)) {
        p3.ok = false;
        p3.witness = pair(i, j) + ": " + ideal_str(rt, F.V[i][j].ideal) + " vs " + ideal_str(rt, meet) + " and " +
                     ideal_str(rt, F.V[j][i].ideal);
      }
    }
  out.push_back(p3);

  if (!sing.empty()) {
    PropertyCheck ps{"V(M,N) inside Sing(Y)", true, ""};
    for (size_t i = 0; i < n && ps.ok; ++i)
      for (size_t j = 0; j < n && ps.ok; ++j) {
        auto I = plus(F.V[i][j].ideal, F.V[i][j].ring->relations());
        for (auto& g : sing)
          if (!radical_member(*S, I, g)) {
            ps.ok = false;
            ps.witness = pair(i, j) + ": " + S->str(g) + " not in the radical of " + ideal_str(*S, I);
            break;
          }
      }
    out.push_back(ps);
  }
  return out;
}

}  // namespace mfci
