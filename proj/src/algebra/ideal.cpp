#include "mfci/ideal.hpp"

#include "mfci/errors.hpp"
#include "mfci/groebner.hpp"

namespace mfci {

static std::vector<Poly> nonzero(const RingCtx& ctx, const std::vector<Poly>& I) {
  std::vector<Poly> out;
  for (auto& g : I) {
    Poly r = ctx.nf(g);
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

std::vector<Poly> ideal_reduce(const RingCtx& ctx, const std::vector<Poly>& I) {
  auto nz = nonzero(ctx, I);
  if (nz.empty()) return {};
  // Relations are folded in by the engine; keep only what survives modulo them.
  std::vector<Poly> gb = ideal_groebner(ctx, nz, true), out;
  for (auto& g : gb)
    if (!ctx.nf(g).is_zero()) out.push_back(g);
  return out;
}

bool ideal_contains(const RingCtx& ctx, const std::vector<Poly>& I, const Poly& g) {
  Poly r = ctx.nf(g);
  if (r.is_zero()) return true;
  std::vector<Poly> gb = ideal_groebner(ctx, nonzero(ctx, I), true);
  return reduce_by(r, gb).is_zero();
}

bool ideal_subset(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J) {
  std::vector<Poly> gb = ideal_groebner(ctx, nonzero(ctx, J), true);
  for (auto& g : I)
    if (!reduce_by(ctx.nf(g), gb).is_zero()) return false;
  return true;
}

bool ideal_equal(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J) {
  return ideal_subset(ctx, I, J) && ideal_subset(ctx, J, I);
}

bool is_unit_ideal(const RingCtx& ctx, const std::vector<Poly>& I) { return ideal_contains(ctx, I, ctx.one()); }

static std::vector<Poly> first_components(const std::vector<std::vector<Poly>>& cols) {
  std::vector<Poly> out;
  for (auto& c : cols)
    if (!c[0].is_zero()) out.push_back(c[0]);
  return out;
}

std::vector<Poly> ideal_quotient(const RingCtx& ctx, const std::vector<Poly>& I, const Poly& g) {
  auto nz = nonzero(ctx, I);
  Poly gn = ctx.nf(g);
  if (gn.is_zero()) return {ctx.one()};
  PolyMatrix A(FreeModule::free(int(nz.size()) + 1), FreeModule::free(1));
  A.at(0, 0) = gn;
  for (size_t j = 0; j < nz.size(); ++j) A.at(0, int(j) + 1) = nz[j];
  Lifter L(ctx, A);
  return ideal_reduce(ctx, first_components(L.kernel_columns()));
}

std::vector<Poly> ideal_quotient(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J) {
  std::vector<Poly> acc;
  bool first = true;
  for (auto& g : J) {
    auto q = ideal_quotient(ctx, I, g);
    acc = first ? q : ideal_intersect(ctx, acc, q);
    first = false;
  }
  if (first) return {ctx.one()};
  return acc;
}

std::vector<Poly> ideal_intersect(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J) {
  auto a = nonzero(ctx, I), b = nonzero(ctx, J);
  if (a.empty() || b.empty()) return {};
  int n = 1 + int(a.size()) + int(b.size());
  PolyMatrix A(FreeModule::free(n), FreeModule::free(2));
  A.at(0, 0) = ctx.one();
  A.at(1, 0) = ctx.one();
  for (size_t j = 0; j < a.size(); ++j) A.at(0, 1 + int(j)) = a[j];
  for (size_t j = 0; j < b.size(); ++j) A.at(1, 1 + int(a.size() + j)) = b[j];
  Lifter L(ctx, A);
  return ideal_reduce(ctx, first_components(L.kernel_columns()));
}

std::vector<Poly> saturate_ideal(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J,
                                 int cap) {
  std::vector<Poly> cur = ideal_reduce(ctx, I);
  for (int it = 0; it < cap; ++it) {
    if (is_unit_ideal(ctx, cur)) return {ctx.one()};
    auto next = ideal_quotient(ctx, cur, J);
    if (ideal_subset(ctx, next, cur)) return cur;
    cur = next;
  }
  throw NonTermination("ideal saturation did not stabilize within " + std::to_string(cap) + " steps");
}

std::vector<Poly> irrelevant_t(const RingCtx& ctx) {
  std::vector<Poly> out;
  for (int i = 0; i < ctx.ring().nvars(); ++i)
    if (ctx.ring().kind(i) == VarKind::T) out.push_back(ctx.var(i));
  return out;
}

// Same cokernel with every unit entry cancelled against its generator.
static std::vector<std::vector<Poly>> prune(const RingCtx& ctx, const PolyMatrix& pres) {
  std::vector<std::vector<Poly>> cols;
  for (int c = 0; c < pres.cols(); ++c) {
    auto col = pres.column(c);
    for (auto& p : col) p = ctx.nf(p);
    cols.push_back(col);
  }
  std::vector<bool> live(pres.rows(), true);
  for (;;) {
    int pc = -1, pr = -1;
    for (size_t c = 0; c < cols.size() && pc < 0; ++c)
      for (int r = 0; r < pres.rows(); ++r)
        if (live[r] && !cols[c][r].is_zero() && cols[c][r].is_constant()) {
          pc = int(c);
          pr = r;
          break;
        }
    if (pc < 0) break;
    std::vector<Poly> piv = cols[pc];
    Coeff inv = piv[pr].lead().c.inv();
    cols.erase(cols.begin() + pc);
    for (auto& col : cols) {
      if (col[pr].is_zero()) continue;
      Poly a = col[pr].scale(inv);
      for (int r = 0; r < pres.rows(); ++r)
        if (!piv[r].is_zero()) col[r] = ctx.nf(col[r] - a * piv[r]);
    }
    live[pr] = false;
  }
  std::vector<std::vector<Poly>> out;
  for (auto& col : cols) {
    std::vector<Poly> v;
    bool nz = false;
    for (int r = 0; r < pres.rows(); ++r)
      if (live[r]) {
        v.push_back(col[r]);
        nz = nz || !col[r].is_zero();
      }
    if (nz) out.push_back(v);
  }
  int n = 0;
  for (bool l : live) n += l;
  if (out.empty()) out.push_back(std::vector<Poly>(n));
  return out;
}

std::vector<Poly> annihilator(const RingCtx& ctx, const PolyMatrix& full) {
  auto cols = prune(ctx, full);
  int n = int(cols[0].size());
  std::vector<Poly> acc;
  for (int j = 0; j < n; ++j) {
    // with e_j moved to the last position, the basis elements supported there
    // generate N n R e_j, whose coefficients form ann(e_j)
    std::vector<Vec> gens;
    for (auto& col : cols) {
      std::vector<Poly> perm;
      for (int i = 0; i < n; ++i)
        if (i != j) perm.push_back(col[i]);
      perm.push_back(col[j]);
      gens.push_back(vec_from_column(perm));
    }
    ModuleGB gb(ctx, n, std::move(gens));
    std::vector<Poly> q;
    for (auto& v : gb.basis()) {
      if (v[0].pos != n - 1) continue;
      Poly p = ctx.nf(column_from_vec(v, n)[n - 1]);
      if (!p.is_zero()) q.push_back(p);
    }
    q = ideal_reduce(ctx, q);
    acc = j == 0 ? q : ideal_intersect(ctx, acc, q);
    if (acc.empty()) break;
  }
  if (n == 0) return {ctx.one()};
  return acc;
}

std::vector<Poly> subquotient_annihilator(const RingCtx& ctx, const PolyMatrix& Z, const PolyMatrix& B) {
  int n = Z.rows();
  std::vector<Vec> bgens;
  for (int c = 0; c < B.cols(); ++c) bgens.push_back(vec_from_column(B.column(c)));
  ModuleGB inB(ctx, n, bgens);
  std::vector<Poly> acc{ctx.one()};
  for (int j = 0; j < Z.cols() && !acc.empty(); ++j) {
    Vec z = vec_from_column(Z.column(j));
    if (inB.member(z)) continue;
    // (B : z) is the last coordinate of the basis elements supported on e_n
    std::vector<Vec> gens = bgens;
    z.push_back(VTerm{ctx.ring().monomial(std::vector<int>(ctx.ring().nvars(), 0)), n, ctx.field().one()});
    gens.push_back(z);
    ModuleGB gb(ctx, n + 1, std::move(gens), n);
    std::vector<Poly> q;
    for (auto& v : gb.basis()) {
      if (v[0].pos != n) continue;
      Poly p = ctx.nf(column_from_vec(v, n + 1)[n]);
      if (!p.is_zero()) q.push_back(p);
    }
    q = ideal_reduce(ctx, q);
    acc = is_unit_ideal(ctx, acc) ? q : ideal_intersect(ctx, acc, q);
  }
  return acc;
}

// Generators (as columns) of {v in F : g v in N}.
static std::vector<std::vector<Poly>> module_quotient(const RingCtx& ctx, const std::vector<std::vector<Poly>>& N,
                                                      int n, const Poly& g) {
  PolyMatrix A(FreeModule::free(n + int(N.size())), FreeModule::free(n));
  for (int i = 0; i < n; ++i) A.at(i, i) = g;
  for (size_t c = 0; c < N.size(); ++c)
    for (int i = 0; i < n; ++i) A.at(i, n + int(c)) = N[c][i];
  Lifter L(ctx, A);
  std::vector<std::vector<Poly>> out;
  for (auto& col : L.kernel_columns()) {
    std::vector<Poly> top(col.begin(), col.begin() + n);
    bool nz = false;
    for (auto& p : top) nz = nz || !p.is_zero();
    if (nz) out.push_back(top);
  }
  return out;
}

static std::vector<std::vector<Poly>> module_intersect(const RingCtx& ctx, const std::vector<std::vector<Poly>>& A,
                                                       const std::vector<std::vector<Poly>>& B, int n) {
  if (A.empty() || B.empty()) return {};
  PolyMatrix M(FreeModule::free(int(A.size() + B.size())), FreeModule::free(n));
  for (size_t c = 0; c < A.size(); ++c)
    for (int i = 0; i < n; ++i) M.at(i, int(c)) = A[c][i];
  for (size_t c = 0; c < B.size(); ++c)
    for (int i = 0; i < n; ++i) M.at(i, int(A.size() + c)) = B[c][i];
  Lifter L(ctx, M);
  std::vector<std::vector<Poly>> out;
  for (auto& col : L.kernel_columns()) {
    std::vector<Poly> v(n);
    for (size_t c = 0; c < A.size(); ++c)
      if (!col[c].is_zero())
        for (int i = 0; i < n; ++i) v[i] += col[c] * A[c][i];
    bool nz = false;
    for (auto& p : v) {
      p = ctx.nf(p);
      nz = nz || !p.is_zero();
    }
    if (nz) out.push_back(v);
  }
  return out;
}

PolyMatrix saturate_module(const RingCtx& ctx, const PolyMatrix& pres, const std::vector<Poly>& J, int cap) {
  int n = pres.rows();
  std::vector<std::vector<Poly>> N;
  for (int c = 0; c < pres.cols(); ++c) N.push_back(pres.column(c));
  auto contained = [&](const std::vector<std::vector<Poly>>& X, const std::vector<std::vector<Poly>>& Y) {
    std::vector<Vec> gens;
    for (auto& y : Y) gens.push_back(vec_from_column(y));
    ModuleGB gb(ctx, n, std::move(gens));
    for (auto& x : X)
      if (!gb.member(vec_from_column(x))) return false;
    return true;
  };
  for (int it = 0; it < cap; ++it) {
    std::vector<std::vector<Poly>> next;
    bool first = true;
    for (auto& g : J) {
      auto q = module_quotient(ctx, N, n, g);
      next = first ? q : module_intersect(ctx, next, q, n);
      first = false;
    }
    if (first) break;
    if (contained(next, N)) {
      PolyMatrix out(FreeModule(std::vector<int>(N.size(), 0)), pres.tgt, 0);
      for (size_t c = 0; c < N.size(); ++c) out.set_column(int(c), N[c]);
      for (size_t c = 0; c < N.size(); ++c) out.src.tw[c] = column_twist(ctx, N[c], pres.tgt);
      return out;
    }
    N = next;
  }
  if (J.empty()) return pres;
  throw NonTermination("module saturation did not stabilize within " + std::to_string(cap) + " steps");
}

bool radical_member(const RingCtx& ctx, const std::vector<Poly>& I, const Poly& g) {
  Poly gn = ctx.nf(g);
  if (gn.is_zero()) return true;
  auto ext = ctx.ring().with_aux("rabinowitsch_t");
  int t = ext->nvars() - 1;
  std::vector<Poly> rel = ctx.relations();
  for (auto& p : I) rel.push_back(p);
  Poly one = Poly::constant(ctx.field().one());
  rel.push_back(one - gn * Poly::monomial(ext->var(t), ctx.field().one()));
  std::vector<int> w(ext->nvars(), 1);
  RingCtx big(ext, rel, w, w, "rabinowitsch");
  return big.gb().size() == 1 && big.gb()[0].is_constant();
}

bool radical_equal(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J) {
  for (auto& g : J)
    if (!radical_member(ctx, I, g)) return false;
  for (auto& g : I)
    if (!radical_member(ctx, J, g)) return false;
  return true;
}

bool is_regular_sequence(const RingCtx& Q, const std::vector<Poly>& f) {
  // H_1(K(f)) = 0 iff every syzygy of [f_1..f_c] is in the span of the Koszul relations.
  int c = int(f.size());
  for (auto& g : f)
    if (Q.nf(g).is_zero()) return false;
  if (c <= 1) return true;
  PolyMatrix A(FreeModule::free(c), FreeModule::free(1));
  for (int i = 0; i < c; ++i) A.at(0, i) = f[i];
  Lifter L(Q, A);
  std::vector<Vec> kos;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      std::vector<Poly> v(c);
      v[i] = -f[j];
      v[j] = f[i];
      kos.push_back(vec_from_column(v));
    }
  ModuleGB gb(Q, c, std::move(kos));
  for (auto& z : L.kernel_columns())
    if (!gb.member(vec_from_column(z))) return false;
  return true;
}

}  // namespace mfci
