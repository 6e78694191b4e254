#include "mfci/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "mfci/errors.hpp"

namespace mfci {

Vec vec_from_column(const std::vector<Poly>& col, int offset) {
  Vec v;
  for (size_t i = 0; i < col.size(); ++i)
    for (auto& t : col[i].terms()) v.push_back(VTerm{t.m, int(i) + offset, t.c});
  return v;
}

std::vector<Poly> column_from_vec(const Vec& v, int rank, int offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (auto& t : v) {
    int p = t.pos - offset;
    if (p >= 0 && p < rank) parts[p].push_back(Term{t.m, t.c});
  }
  std::vector<Poly> out(rank);
  for (int i = 0; i < rank; ++i) out[i] = Poly(std::move(parts[i]));
  return out;
}

// a[start:] - c*m*b
static Vec sub_mul(const Vec& a, size_t start, const Vec& b, const Monomial& m, const Coeff& c) {
  Vec out;
  out.reserve(a.size() - start + b.size());
  size_t i = start, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    VTerm bt{mono_mul(b[j].m, m), b[j].pos, b[j].c};
    int cmp = i == a.size() ? -1 : vcmp(a[i], bt);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      bt.c = -(bt.c * c);
      out.push_back(bt);
      ++j;
    } else {
      Coeff s = a[i].c - bt.c * c;
      if (!s.is_zero()) out.push_back(VTerm{a[i].m, a[i].pos, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (b.empty()) return a;
  return sub_mul(a, 0, b, Monomial(), b[0].c * b[0].c.inv());
}

Vec vec_mul_term(const Vec& v, const Monomial& m, const Coeff& c) {
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    Coeff x = t.c * c;
    if (!x.is_zero()) out.push_back(VTerm{mono_mul(t.m, m), t.pos, x});
  }
  return out;
}

static uint32_t mask_of(const Monomial& m) {
  uint32_t k = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (m.e[i]) k |= 1u << i;
  return k;
}

static Vec make_monic(const Vec& v) {
  if (v.empty() || v[0].c.is_one()) return v;
  Coeff inv = v[0].c.inv();
  Vec out = v;
  for (auto& t : out) t.c = t.c * inv;
  return out;
}

static int sugar_of(const Vec& v) {
  int s = 0;
  for (auto& t : v) s = std::max(s, int(t.m.deg));
  return s;
}

static bool single_position(const Vec& v) {
  for (auto& t : v)
    if (t.pos != v[0].pos) return false;
  return true;
}

namespace {

struct Elem {
  Vec v;
  uint32_t mask;
  bool active;
  bool single;
};

struct Pending {
  int sugar;
  Monomial lcm;
  int pos;
  int i, j;  // i < 0: input generator j
};

struct PendingLess {
  bool operator()(const Pending& a, const Pending& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.pos != b.pos) return a.pos > b.pos;
    int c = grevlex_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
};

template <class FindDiv>
Vec reduce_impl(const Vec& v, int pos_limit, bool tail, FindDiv&& find) {
  Vec out;
  Vec cur = v;
  size_t st = 0;
  while (st < cur.size()) {
    const VTerm& t = cur[st];
    if (t.pos >= pos_limit) {
      if (!tail) break;
    }
    const Vec* g = t.pos < pos_limit ? find(t) : nullptr;
    if (!g) {
      if (!tail) break;
      out.push_back(t);
      ++st;
      continue;
    }
    Monomial q = mono_div(t.m, (*g)[0].m);
    Coeff c = t.c;
    cur = sub_mul(cur, st, *g, q, c);
    st = 0;
  }
  if (!tail) {
    out.insert(out.end(), cur.begin() + st, cur.end());
  }
  return out;
}

}  // namespace

ModuleGB::ModuleGB(const RingCtx& ctx, int rank, std::vector<Vec> gens, int relation_positions)
    : ctx_(&ctx), rank_(rank) {
  const PolyRing& R = ctx.ring();
  if (relation_positions < 0) relation_positions = rank;
  std::vector<Vec> inputs;
  for (int k = 0; k < relation_positions; ++k)
    for (auto& g : ctx.gb()) inputs.push_back(vec_from_column({g}, k));
  for (auto& g : gens)
    if (!g.empty()) inputs.push_back(std::move(g));

  std::vector<Elem> E;
  std::vector<std::vector<int>> bypos(rank);
  std::set<Pending, PendingLess> queue;
  for (size_t j = 0; j < inputs.size(); ++j)
    queue.insert(Pending{sugar_of(inputs[j]), inputs[j][0].m, inputs[j][0].pos, -1, int(j)});

  auto find = [&](const VTerm& t) -> const Vec* {
    uint32_t tm = mask_of(t.m);
    for (int idx : bypos[t.pos]) {
      const Elem& e = E[idx];
      if (!e.active) continue;
      if (e.mask & ~tm) continue;
      if (mono_divides(e.v[0].m, t.m)) return &e.v;
    }
    return nullptr;
  };

  auto insert = [&](Vec h) {
    int hi = int(E.size());
    const VTerm& lh = h[0];
    bool hs = single_position(h);
    // Gebauer-Moeller update.
    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (int g : bypos[lh.pos]) {
      if (!E[g].active) continue;
      const Monomial& lg = E[g].v[0].m;
      bool cop = hs && E[g].single && mono_coprime(lh.m, lg);
      C.push_back(Cand{g, R.lcm(lh.m, lg), cop});
    }
    std::vector<Cand> D;
    for (size_t a = 0; a < C.size(); ++a) {
      bool keep = C[a].coprime;
      if (!keep) {
        keep = true;
        for (size_t b = a + 1; b < C.size() && keep; ++b)
          if (mono_divides(C[b].lcm, C[a].lcm)) keep = false;
        for (size_t b = 0; b < D.size() && keep; ++b)
          if (mono_divides(D[b].lcm, C[a].lcm)) keep = false;
      }
      if (keep)
        D.push_back(C[a]);
      else
        ++stats_.chain_skips;
    }
    for (auto it = queue.begin(); it != queue.end();) {
      const Pending& p = *it;
      if (p.i >= 0 && p.pos == lh.pos && mono_divides(lh.m, p.lcm)) {
        Monomial l1 = R.lcm(E[p.i].v[0].m, lh.m), l2 = R.lcm(E[p.j].v[0].m, lh.m);
        if (l1 != p.lcm && l2 != p.lcm) {
          it = queue.erase(it);
          ++stats_.chain_skips;
          continue;
        }
      }
      ++it;
    }
    int hs_sugar = sugar_of(h);
    for (auto& d : D) {
      if (d.coprime) {
        ++stats_.product_skips;
        continue;
      }
      int sug = std::max(hs_sugar + (d.lcm.deg - lh.m.deg), sugar_of(E[d.g].v) + (d.lcm.deg - E[d.g].v[0].m.deg));
      queue.insert(Pending{sug, d.lcm, lh.pos, d.g, hi});
    }
    for (int g : bypos[lh.pos])
      if (E[g].active && mono_divides(lh.m, E[g].v[0].m)) E[g].active = false;
    uint32_t mk = mask_of(lh.m);
    E.push_back(Elem{std::move(h), mk, true, hs});
    bypos[E.back().v[0].pos].push_back(hi);
  };

  while (!queue.empty()) {
    Pending p = *queue.begin();
    queue.erase(queue.begin());
    Vec s;
    if (p.i < 0) {
      s = inputs[p.j];
    } else {
      ++stats_.pairs;
      const Vec& a = E[p.i].v;
      const Vec& b = E[p.j].v;
      Vec sa = vec_mul_term(a, mono_div(p.lcm, a[0].m), a[0].c.inv());
      s = sub_mul(sa, 0, b, mono_div(p.lcm, b[0].m), b[0].c.inv());
    }
    Vec h = reduce_impl(s, rank, true, find);
    if (h.empty()) {
      if (p.i >= 0) ++stats_.reductions_to_zero;
      continue;
    }
    insert(make_monic(h));
  }

  // Reduced basis in insertion order.
  std::vector<int> keep;
  for (size_t i = 0; i < E.size(); ++i)
    if (E[i].active) keep.push_back(int(i));
  by_pos_.assign(rank, {});
  for (int idx : keep) {
    Vec v = E[idx].v;
    Vec tail(v.begin() + 1, v.end());
    auto find_other = [&](const VTerm& t) -> const Vec* {
      uint32_t tm = mask_of(t.m);
      for (int o : bypos[t.pos]) {
        const Elem& e = E[o];
        if (!e.active || o == idx) continue;
        if (e.mask & ~tm) continue;
        if (mono_divides(e.v[0].m, t.m)) return &e.v;
      }
      return nullptr;
    };
    Vec rt = reduce_impl(tail, rank, true, find_other);
    Vec out;
    out.push_back(v[0]);
    out.insert(out.end(), rt.begin(), rt.end());
    by_pos_[out[0].pos].push_back(int(basis_.size()));
    masks_.push_back(mask_of(out[0].m));
    basis_.push_back(std::move(out));
  }
}

const Vec* ModuleGB::find_divisor(const VTerm& t) const {
  uint32_t tm = mask_of(t.m);
  for (int idx : by_pos_[t.pos]) {
    if (masks_[idx] & ~tm) continue;
    if (mono_divides(basis_[idx][0].m, t.m)) return &basis_[idx];
  }
  return nullptr;
}

Vec ModuleGB::reduce(const Vec& v) const {
  return reduce_impl(v, rank_, true, [&](const VTerm& t) { return find_divisor(t); });
}

Vec ModuleGB::reduce_leading(const Vec& v, int pos_limit) const {
  return reduce_impl(v, pos_limit, false, [&](const VTerm& t) { return find_divisor(t); });
}

std::vector<Poly> ideal_groebner(const RingCtx& ctx, const std::vector<Poly>& gens, bool apply_relations) {
  std::vector<Vec> vs;
  for (auto& g : gens) vs.push_back(vec_from_column({g}));
  ModuleGB gb(ctx, 1, std::move(vs), apply_relations ? 1 : 0);
  std::vector<Poly> out;
  for (auto& v : gb.basis()) out.push_back(column_from_vec(v, 1)[0]);
  return out;
}

static ModuleGB augmented(const RingCtx& ctx, const PolyMatrix& A) {
  int m = A.rows(), n = A.cols();
  std::vector<Vec> gens;
  for (int j = 0; j < n; ++j) {
    Vec v = vec_from_column(A.column(j));
    v.push_back(VTerm{Monomial(), m + j, ctx.field().one()});
    gens.push_back(std::move(v));
  }
  return ModuleGB(ctx, m + n, std::move(gens));
}

Lifter::Lifter(const RingCtx& ctx, const PolyMatrix& A) : ctx_(&ctx), A_(A.nf(ctx)), gb_(augmented(ctx, A_)) {}

std::optional<std::vector<Poly>> Lifter::try_lift(const std::vector<Poly>& b) const {
  int m = A_.rows(), n = A_.cols();
  if (int(b.size()) != m) throw DimensionMismatch("lift: right-hand side length");
  std::vector<Poly> bn(m);
  for (int i = 0; i < m; ++i) bn[i] = ctx_->nf(b[i]);
  Vec r = gb_.reduce_leading(vec_from_column(bn), m);
  if (!r.empty() && r[0].pos < m) return std::nullopt;
  std::vector<Poly> x = column_from_vec(r, n, m);
  for (auto& p : x) p = ctx_->nf(-p);
  return x;
}

std::vector<Poly> Lifter::lift(const std::vector<Poly>& b) const {
  auto x = try_lift(b);
  if (!x) throw NotInImage("right-hand side is not in the column span");
  return *x;
}

bool Lifter::in_image(const std::vector<Poly>& b) const { return try_lift(b).has_value(); }

PolyMatrix Lifter::lift_matrix(const PolyMatrix& B) const {
  PolyMatrix X(B.src, A_.src, B.deg - A_.deg);
  for (int j = 0; j < B.cols(); ++j) X.set_column(j, lift(B.column(j)));
  return X;
}

std::vector<std::vector<Poly>> Lifter::kernel_columns() const {
  int m = A_.rows(), n = A_.cols();
  std::vector<std::vector<Poly>> out;
  for (auto& v : gb_.basis()) {
    if (v[0].pos < m) continue;
    std::vector<Poly> col = column_from_vec(v, n, m);
    bool nz = false;
    for (auto& p : col) {
      p = ctx_->nf(p);
      nz = nz || !p.is_zero();
    }
    if (nz) out.push_back(std::move(col));
  }
  return out;
}

std::vector<std::vector<Poly>> groebner(const RingCtx& ctx, const PolyMatrix& A, bool check_homogeneous) {
  if (check_homogeneous) {
    int bi = 0, bj = 0;
    bool ok = true;
    for (int j = 0; j < A.cols() && ok; ++j)
      for (int i = 0; i < A.rows() && ok; ++i)
        if (!A.at(i, j).homogeneous(ctx.gw())) {
          ok = false;
          bi = i;
          bj = j;
        }
    if (!ok)
      throw InhomogeneousInput("generator entry (" + std::to_string(bi) + "," + std::to_string(bj) +
                               ") is not homogeneous");
  }
  std::vector<Vec> gens;
  for (int j = 0; j < A.cols(); ++j) gens.push_back(vec_from_column(A.nf(ctx).column(j)));
  ModuleGB gb(ctx, A.rows(), std::move(gens));
  std::vector<std::vector<Poly>> out;
  for (auto& v : gb.basis()) out.push_back(column_from_vec(v, A.rows()));
  return out;
}

std::vector<Poly> lift(const RingCtx& ctx, const PolyMatrix& A, const std::vector<Poly>& b) {
  return Lifter(ctx, A).lift(b);
}

int column_twist(const RingCtx& ctx, const std::vector<Poly>& col, const FreeModule& tgt, int* itw) {
  for (size_t k = 0; k < col.size(); ++k) {
    if (col[k].is_zero()) continue;
    int d = col[k].max_weighted(ctx.gw());
    if (itw && !tgt.itw.empty()) *itw = tgt.itw[k] - col[k].max_weighted(ctx.iw());
    return tgt.tw[k] - d;
  }
  return 0;
}

PolyMatrix syzygies(const RingCtx& ctx, const PolyMatrix& A) {
  Lifter L(ctx, A);
  auto cols = L.kernel_columns();
  FreeModule src;
  bool internal = A.src.has_internal() && A.src.rank() > 0;
  for (auto& c : cols) {
    int it = 0;
    src.tw.push_back(column_twist(ctx, c, A.src, internal ? &it : nullptr));
    if (internal) src.itw.push_back(it);
  }
  PolyMatrix Z(src, A.src, 0);
  for (size_t j = 0; j < cols.size(); ++j) Z.set_column(int(j), cols[j]);
  return minimal_generators(ctx, Z);
}

}  // namespace mfci
