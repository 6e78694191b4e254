#include "mfci/graded.hpp"

#include <algorithm>
#include <set>

#include "mfci/errors.hpp"
#include "mfci/groebner.hpp"

namespace mfci {

std::vector<Monomial> monomials_of_degree(const PolyRing& r, const std::vector<int>& w, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> vars;
  for (int i = 0; i < r.nvars(); ++i)
    if (w[i] > 0) vars.push_back(i);
  std::vector<int> e(r.nvars(), 0);
  auto rec = [&](auto&& self, size_t k, int left) -> void {
    if (k == vars.size()) {
      if (left == 0) out.push_back(r.monomial(e));
      return;
    }
    int v = vars[k];
    for (int a = left / w[v]; a >= 0; --a) {
      e[v] = a;
      self(self, k + 1, left - a * w[v]);
    }
    e[v] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

std::vector<Monomial> standard_monomials(const RingCtx& ctx, int d) {
  std::vector<Monomial> all = monomials_of_degree(ctx.ring(), ctx.gw(), d), out;
  for (auto& m : all) {
    bool std_mon = true;
    for (auto& g : ctx.gb())
      if (mono_divides(g.lead().m, m)) {
        std_mon = false;
        break;
      }
    if (std_mon) out.push_back(m);
  }
  return out;
}

GradedPiece::GradedPiece(const RingCtx& ctx, const FreeModule& F, int d) : ctx_(&ctx), d_(d) {
  if (!ctx.positively_graded()) throw std::logic_error("graded pieces need a positive grading");
  for (int k = 0; k < F.rank(); ++k) {
    // generator k has degree -tw[k]
    for (auto& m : standard_monomials(ctx, d + F.tw[k])) {
      index_[{k, m.e}] = int(elems_.size());
      elems_.emplace_back(k, m);
    }
  }
}

std::vector<Coeff> GradedPiece::coords(const std::vector<Poly>& col) const {
  std::vector<Coeff> v(elems_.size(), ctx_->field().zero());
  for (size_t k = 0; k < col.size(); ++k)
    for (auto& t : col[k].terms()) {
      auto it = index_.find({int(k), t.m.e});
      if (it == index_.end()) throw std::logic_error("element outside the graded piece");
      v[it->second] = t.c;
    }
  return v;
}

int element_degree(const RingCtx& ctx, const std::vector<Poly>& col, const FreeModule& F) {
  return -column_twist(ctx, col, F);
}

static bool column_homogeneous(const RingCtx& ctx, const std::vector<Poly>& col, const FreeModule& F) {
  bool have = false;
  int deg = 0;
  for (size_t k = 0; k < col.size(); ++k) {
    if (col[k].is_zero()) continue;
    int d = 0;
    if (!col[k].homogeneous(ctx.gw(), &d)) return false;
    d -= F.tw[k];
    if (have && d != deg) return false;
    have = true;
    deg = d;
  }
  return true;
}

static bool column_zero(const std::vector<Poly>& c) {
  for (auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

// Adds m * col (normal form) for every standard monomial m of the right degree.
static void add_multiples(const RingCtx& ctx, const GradedPiece& P, Echelon& E, const std::vector<Poly>& col,
                          int coldeg) {
  for (auto& m : standard_monomials(ctx, P.degree() - coldeg)) {
    std::vector<Poly> v(col.size());
    for (size_t k = 0; k < col.size(); ++k) v[k] = ctx.nf(col[k].mul_term(m, ctx.field().one()));
    E.add(P.coords(v));
  }
}

Echelon image_in_degree(const RingCtx& ctx, const PolyMatrix& gens, int d) {
  GradedPiece P(ctx, gens.tgt, d);
  Echelon E(ctx.field(), P.dim());
  for (int j = 0; j < gens.cols(); ++j) {
    auto col = gens.column(j);
    for (auto& p : col) p = ctx.nf(p);
    if (column_zero(col)) continue;
    int cd = element_degree(ctx, col, gens.tgt);
    if (cd <= d) add_multiples(ctx, P, E, col, cd);
  }
  return E;
}

int image_dimension(const RingCtx& ctx, const PolyMatrix& gens, int d) { return image_in_degree(ctx, gens, d).dim(); }

int hilbert_function(const RingCtx& ctx, const PolyMatrix& pres, int d) {
  GradedPiece P(ctx, pres.tgt, d);
  return P.dim() - image_dimension(ctx, pres, d);
}

PolyMatrix minimal_generators(const RingCtx& ctx, const PolyMatrix& gens) {
  std::vector<std::vector<Poly>> cols;
  for (int j = 0; j < gens.cols(); ++j) {
    auto c = gens.column(j);
    for (auto& p : c) p = ctx.nf(p);
    if (!column_zero(c)) cols.push_back(std::move(c));
  }
  bool graded = ctx.positively_graded();
  for (auto& c : cols) graded = graded && column_homogeneous(ctx, c, gens.tgt);
  std::vector<int> chosen;
  if (!graded) {
    for (size_t j = 0; j < cols.size(); ++j) {
      bool dup = false;
      for (int k : chosen) dup = dup || cols[k] == cols[j];
      if (!dup) chosen.push_back(int(j));
    }
  } else {
    std::vector<int> deg(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) deg[j] = element_degree(ctx, cols[j], gens.tgt);
    std::vector<int> order(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) order[j] = int(j);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });
    size_t i = 0;
    while (i < order.size()) {
      int d = deg[order[i]];
      GradedPiece P(ctx, gens.tgt, d);
      Echelon E(ctx.field(), P.dim());
      for (int k : chosen) add_multiples(ctx, P, E, cols[k], deg[k]);
      for (; i < order.size() && deg[order[i]] == d; ++i)
        if (E.add(P.coords(cols[order[i]]))) chosen.push_back(order[i]);
    }
  }
  FreeModule src;
  bool internal = gens.tgt.has_internal() && gens.tgt.rank() > 0;
  for (int k : chosen) {
    int it = 0;
    src.tw.push_back(column_twist(ctx, cols[k], gens.tgt, internal ? &it : nullptr));
    if (internal) src.itw.push_back(it);
  }
  PolyMatrix out(src, gens.tgt, 0);
  for (size_t j = 0; j < chosen.size(); ++j) out.set_column(int(j), cols[chosen[j]]);
  return out;
}

}  // namespace mfci
