#include "mfci/isos.hpp"

#include <algorithm>
#include <functional>

#include "mfci/dense.hpp"
#include "mfci/errors.hpp"
#include "mfci/parallel.hpp"

namespace mfci {

namespace {

std::string first_diff(const PolyMatrix& a, const PolyMatrix& b, const RingCtx& ctx) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape";
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!ctx.nf(a.at(i, j) - b.at(i, j)).is_zero()) return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return "";
}

PolyMatrix sized(const FreeModule& s, const FreeModule& t) { return PolyMatrix(s, t, 0); }

void put(PolyMatrix& dst, int r0, int c0, const PolyMatrix& blk) {
  for (int a = 0; a < blk.rows(); ++a)
    for (int b = 0; b < blk.cols(); ++b)
      if (!blk.at(a, b).is_zero()) dst.at(r0 + a, c0 + b) = blk.at(a, b);
}

PolyMatrix diag_signs(const FreeModule& m, const std::vector<std::pair<int, int>>& blocks, const RingCtx& ctx) {
  PolyMatrix r(m, m, 0);
  int k = 0;
  for (auto [n, s] : blocks)
    for (int i = 0; i < n; ++i, ++k) r.at(k, k) = s > 0 ? ctx.one() : -ctx.one();
  return r;
}

MFMap make_map(const GradedMF& E, const GradedMF& F, PolyMatrix a1, PolyMatrix a0) {
  MFMap m;
  m.src = E;
  m.tgt = F;
  m.a1 = a1.with_modules(E.E1, F.E1, 0);
  m.a0 = a0.with_modules(E.E0, F.E0, 0);
  return m;
}

std::optional<PolyMatrix> invert_constant(const PolyMatrix& m, const RingCtx& ctx) {
  int n = m.rows();
  if (m.cols() != n) return std::nullopt;
  const Field& f = ctx.field();
  DenseMat A(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Poly& p = m.at(i, j);
      if (p.is_zero()) continue;
      if (!p.is_constant()) return std::nullopt;
      A.set(i, j, p.lead().c);
    }
  auto X = A.solve(DenseMat::identity(f, n));
  if (!X) return std::nullopt;
  PolyMatrix r(m.tgt, m.src, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = Poly::constant(X->at(i, j));
  return r;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

MFCheck check_mf_map(const MFMap& a) {
  MFCheck r;
  const RingCtx& ctx = *a.src.ctx;
  const GradedMF &E = a.src, &F = a.tgt;
  if (a.a1.cols() != E.rank1() || a.a1.rows() != F.rank1() || a.a0.cols() != E.rank0() ||
      a.a0.rows() != F.rank0()) {
    r.ok = false;
    r.where = "shape";
    return r;
  }
  std::string w = first_diff(F.g1 * a.a1, a.a0 * E.g1, ctx);
  if (!w.empty()) {
    r.ok = false;
    r.where = "g1 square " + w;
    return r;
  }
  w = first_diff(F.g0 * a.a0, a.a1 * E.g0, ctx);
  if (!w.empty()) {
    r.ok = false;
    r.where = "g0 square " + w;
  }
  return r;
}

MFMap identity_mf_map(const GradedMF& E) {
  return make_map(E, E, PolyMatrix::identity(E.E1, E.ctx->one()), PolyMatrix::identity(E.E0, E.ctx->one()));
}

MFMap compose(const MFMap& g, const MFMap& f) { return make_map(f.src, g.tgt, g.a1 * f.a1, g.a0 * f.a0); }

MFMap tensor_map(const MFMap& a, const MFMap& b) {
  GradedMF S = tensor_mf(a.src, b.src), T = tensor_mf(a.tgt, b.tgt);
  PolyMatrix m1 = sized(S.E1, T.E1), m0 = sized(S.E0, T.E0);
  put(m1, 0, 0, kron(a.a0, b.a1));
  put(m1, a.tgt.rank0() * b.tgt.rank1(), a.src.rank0() * b.src.rank1(), kron(a.a1, b.a0));
  put(m0, 0, 0, kron(a.a0, b.a0));
  put(m0, a.tgt.rank0() * b.tgt.rank0(), a.src.rank0() * b.src.rank0(), kron(a.a1, b.a1));
  return make_map(S, T, m1, m0);
}

MFMap dual_map(const MFMap& a) {
  return make_map(dual_mf(a.tgt), dual_mf(a.src), a.a1.transpose(), a.a0.transpose());
}

std::optional<MFMap> constant_inverse(const MFMap& a) {
  auto i1 = invert_constant(a.a1, *a.src.ctx), i0 = invert_constant(a.a0, *a.src.ctx);
  if (!i1 || !i0) return std::nullopt;
  return make_map(a.tgt, a.src, *i1, *i0);
}

MFMap label_iso(const GradedMF& E, const GradedMF& F) {
  const RingCtx& ctx = *E.ctx;
  auto perm = [&](const std::vector<Label>& from, const std::vector<Label>& to, const FreeModule& s,
                  const FreeModule& t) {
    if (from.size() != to.size() || int(from.size()) != s.rank())
      throw IdentificationFailure("label_iso: missing or mismatched basis labels");
    PolyMatrix m(s, t, 0);
    for (size_t j = 0; j < from.size(); ++j) {
      const Label& L = from[j];
      int hit = -1;
      std::vector<int> pos;
      for (size_t i = 0; i < to.size() && hit < 0; ++i) {
        if (to[i].size() != L.size()) continue;
        std::vector<int> p;
        for (auto& leaf : L) {
          auto it = std::find(to[i].begin(), to[i].end(), leaf);
          if (it == to[i].end()) break;
          p.push_back(int(it - to[i].begin()));
        }
        if (p.size() == L.size()) {
          hit = int(i);
          pos = p;
        }
      }
      if (hit < 0) throw IdentificationFailure("label_iso: no target for basis element " + std::to_string(j));
      int sign = 1;
      for (size_t a = 0; a < L.size(); ++a)
        for (size_t b = a + 1; b < L.size(); ++b)
          if (pos[a] > pos[b] && L[a].parity && L[b].parity) sign = -sign;
      m.at(hit, int(j)) = sign > 0 ? ctx.one() : -ctx.one();
    }
    return m;
  };
  return make_map(E, F, perm(E.labels1, F.labels1, E.E1, F.E1), perm(E.labels0, F.labels0, E.E0, F.E0));
}

MFMap unit_iso(const GradedMF& E) {
  GradedMF T = tensor_mf(E, unit_mf(E.ctx));
  return make_map(T, E, PolyMatrix::identity(E.E1, E.ctx->one()), PolyMatrix::identity(E.E0, E.ctx->one()));
}

MFMap comm_iso(const GradedMF& E, const GradedMF& F) {
  GradedMF a = tag_leaf(E, 0), b = tag_leaf(F, 1);
  return label_iso(tensor_mf(a, b), tensor_mf(b, a));
}

MFMap assoc_iso(const GradedMF& E, const GradedMF& F, const GradedMF& G) {
  GradedMF a = tag_leaf(E, 0), b = tag_leaf(F, 1), c = tag_leaf(G, 2);
  return label_iso(tensor_mf(tensor_mf(a, b), c), tensor_mf(a, tensor_mf(b, c)));
}

MFMap hom_tensor_iso(const GradedMF& E, const GradedMF& F) {
  GradedMF S = tensor_mf(dual_mf(E), F), T = hom_mf(E, F);
  int c = E.rank0() * F.rank0(), d = E.rank1() * F.rank1();
  return make_map(S, T, PolyMatrix::identity(S.E1, E.ctx->one()), diag_signs(S.E0, {{c, 1}, {d, -1}}, *E.ctx));
}

MFMap dual_tensor_iso(const GradedMF& E, const GradedMF& F) {
  GradedMF S = dual_mf(tensor_mf(E, F)), T = tensor_mf(dual_mf(E), dual_mf(F));
  int c = E.rank0() * F.rank0(), d = E.rank1() * F.rank1();
  return make_map(S, T, PolyMatrix::identity(S.E1, E.ctx->one()), diag_signs(S.E0, {{c, 1}, {d, -1}}, *E.ctx));
}

MFMap double_dual_iso(const GradedMF& E) {
  GradedMF S = dual_mf(dual_mf(E));
  return make_map(S, E, -PolyMatrix::identity(E.E1, E.ctx->one()), PolyMatrix::identity(E.E0, E.ctx->one()));
}

namespace {

MFMap checked_inverse(const MFMap& a, const std::string& what) {
  auto inv = constant_inverse(a);
  if (!inv) throw VerificationFailure(what + ": map is not invertible");
  return *inv;
}

}  // namespace

MFMap hom_dual_swap(const GradedMF& E, const GradedMF& F) {
  MFMap s1 = dual_map(hom_tensor_iso(E, F));  // Hom(E,F)^dual -> (E^dual F)^dual
  MFMap s2 = dual_tensor_iso(dual_mf(E), F);  // -> E^dual^dual F^dual
  MFMap s3 = tensor_map(double_dual_iso(E), identity_mf_map(dual_mf(F)));  // -> E F^dual
  MFMap s4 = comm_iso(E, dual_mf(F));         // -> F^dual E
  MFMap s5 = hom_tensor_iso(F, E);            // -> Hom(F,E)
  return compose(s5, compose(s4, compose(s3, compose(s2, s1))));
}

MFMap switch_iso(const GradedMF& E1, const GradedMF& E2, const GradedMF& E3, const GradedMF& E4) {
  GradedMF d1 = tag_leaf(dual_mf(E1), 1), e2 = tag_leaf(E2, 2), d3 = tag_leaf(dual_mf(E3), 3),
           e4 = tag_leaf(E4, 4);
  MFMap left = tensor_map(hom_tensor_iso(E1, E2), hom_tensor_iso(E3, E4));
  MFMap right = tensor_map(hom_tensor_iso(E1, E4), hom_tensor_iso(E3, E2));
  MFMap mid = label_iso(tensor_mf(tensor_mf(d1, e2), tensor_mf(d3, e4)),
                        tensor_mf(tensor_mf(d1, e4), tensor_mf(d3, e2)));
  return compose(right, compose(mid, checked_inverse(left, "switch")));
}

IsoCertificate certify(const std::string& name, const MFMap& a) {
  IsoCertificate c;
  c.name = name;
  auto m = check_mf_map(a);
  c.morphism = m.ok;
  if (!m.ok) c.where = m.where;
  auto inv = constant_inverse(a);
  if (inv) {
    auto mi = check_mf_map(*inv);
    bool left = check_mf_map(*inv).ok &&
                first_diff(inv->a1 * a.a1, PolyMatrix::identity(a.src.E1, a.src.ctx->one()), *a.src.ctx).empty() &&
                first_diff(inv->a0 * a.a0, PolyMatrix::identity(a.src.E0, a.src.ctx->one()), *a.src.ctx).empty();
    bool right = first_diff(a.a1 * inv->a1, PolyMatrix::identity(a.tgt.E1, a.src.ctx->one()), *a.src.ctx).empty() &&
                 first_diff(a.a0 * inv->a0, PolyMatrix::identity(a.tgt.E0, a.src.ctx->one()), *a.src.ctx).empty();
    c.invertible = mi.ok && left && right;
    if (!c.invertible && c.where.empty()) c.where = "inverse";
  } else if (c.where.empty()) {
    c.where = "not invertible";
  }
  c.same_twists = sorted(a.src.E1.tw) == sorted(a.tgt.E1.tw) && sorted(a.src.E0.tw) == sorted(a.tgt.E0.tw);
  if (!c.same_twists && c.where.empty()) c.where = "twist multisets differ";
  return c;
}

std::vector<IsoCertificate> canonical_isos(const GradedMF& E, const GradedMF& F, const GradedMF& G,
                                           const GradedMF& H) {
  std::vector<std::pair<std::string, std::function<MFMap()>>> jobs = {
      {"unit", [&] { return unit_iso(E); }},
      {"comm", [&] { return comm_iso(E, F); }},
      {"assoc", [&] { return assoc_iso(E, F, G); }},
      {"hom_tensor", [&] { return hom_tensor_iso(E, F); }},
      {"dual_tensor", [&] { return dual_tensor_iso(E, F); }},
      {"double_dual", [&] { return double_dual_iso(E); }},
      {"hom_dual_swap", [&] { return hom_dual_swap(E, F); }},
      {"switch", [&] { return switch_iso(E, F, G, H); }},
  };
  std::vector<IsoCertificate> out(jobs.size());
  parallel_for(jobs.size(), [&](size_t i) {
    try {
      out[i] = certify(jobs[i].first, jobs[i].second());
    } catch (const Error& e) {
      out[i].name = jobs[i].first;
      out[i].where = e.what();
    }
  });
  return out;
}

void require_isos(const std::vector<IsoCertificate>& certs) {
  for (auto& c : certs)
    if (!c.ok()) throw VerificationFailure("canonical iso " + c.name + " failed at " + c.where);
}

}  // namespace mfci
