#include "mfci/mf.hpp"

#include <functional>
#include <random>

#include "mfci/errors.hpp"
#include "mfci/groebner.hpp"
#include "mfci/ideal.hpp"

namespace mfci {

namespace {

std::string at_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// First nonzero entry of m, or false.
bool first_nonzero(const PolyMatrix& m, int* i, int* j) {
  for (int a = 0; a < m.rows(); ++a)
    for (int b = 0; b < m.cols(); ++b)
      if (!m.at(a, b).is_zero()) {
        *i = a;
        *j = b;
        return true;
      }
  return false;
}

PolyMatrix minus_diag(PolyMatrix m, const Poly& w) {
  for (int i = 0; i < m.rows() && i < m.cols(); ++i) m.at(i, i) -= w;
  return m;
}

}  // namespace

GradedMF make_mf(CtxPtr ctx, Poly W, PolyMatrix g1, PolyMatrix g0) {
  GradedMF E;
  E.ctx = std::move(ctx);
  E.W = std::move(W);
  E.E1 = g1.src;
  E.E0 = g1.tgt;
  E.g1 = std::move(g1);
  E.g0 = std::move(g0);
  return E;
}

MFCheck check_mf(const GradedMF& E) {
  MFCheck r;
  const RingCtx& ctx = *E.ctx;
  if (E.g1.cols() != E.rank1() || E.g1.rows() != E.rank0() || E.g0.cols() != E.rank0() || E.g0.rows() != E.rank1()) {
    r.ok = false;
    r.where = "shape";
    return r;
  }
  int i, j;
  if (first_nonzero(minus_diag(E.g0 * E.g1, E.W).nf(ctx), &i, &j)) {
    r.ok = false;
    r.where = "g0*g1 - W " + at_str(i, j);
    return r;
  }
  if (first_nonzero(minus_diag(E.g1 * E.g0, E.W).nf(ctx), &i, &j)) {
    r.ok = false;
    r.where = "g1*g0 - W " + at_str(i, j);
  }
  return r;
}

MFCheck check_affine_mf(const AffineMF& E) {
  MFCheck r;
  int n = E.A.rows(), i, j;
  if (E.A.cols() != n || E.B.rows() != n || E.B.cols() != n) {
    r.ok = false;
    r.where = "shape";
    return r;
  }
  if (first_nonzero(minus_diag(E.A * E.B, E.f), &i, &j)) {
    r.ok = false;
    r.where = "A*B - f " + at_str(i, j);
  } else if (first_nonzero(minus_diag(E.B * E.A, E.f), &i, &j)) {
    r.ok = false;
    r.where = "B*A - f " + at_str(i, j);
  }
  return r;
}

void require_mf(const GradedMF& E, const std::string& what) {
  auto c = check_mf(E);
  if (!c.ok) throw MFEquationFailure(what + ": " + c.where);
}

CtxPtr s_context(const RingCtx& Q, const std::vector<Poly>& f) {
  return make_s_ctx(Q.ring().with_t(int(f.size())), f, {}, "S");
}

GradedMF build_mf(const HigherHomotopySystem& sys, CtxPtr S) {
  const PolyRing& sr = S->ring();
  int L = sys.length(), c = sys.c();
  // E1 block j holds G_{2j+1}, E0 block j holds G_{2j}
  std::vector<int> off1, off0;
  FreeModule E1, E0;
  auto append = [&](FreeModule& E, std::vector<int>& off, int gi, int j) {
    off.push_back(E.rank());
    FreeModule G = sys.G.term(-gi);
    for (int k = 0; k < G.rank(); ++k) {
      E.tw.push_back(j);
      E.itw.push_back(G.tw[k]);
    }
  };
  for (int j = 0; 2 * j + 1 <= L; ++j) append(E1, off1, 2 * j + 1, j);
  for (int j = 0; 2 * j <= L; ++j) append(E0, off0, 2 * j, j);
  PolyMatrix g1(E1, E0, 0), g0(E0, E1.twisted(1), 0);
  auto tmono = [&](const MultiIndex& J) {
    std::vector<int> e(sr.nvars(), 0);
    for (int i = 0; i < c; ++i) e[sr.nx() + i] = J[i];
    return sr.monomial(e);
  };
  auto place = [&](PolyMatrix& dst, int r0, int c0, const PolyMatrix& blk, const Monomial& m) {
    for (int a = 0; a < blk.rows(); ++a)
      for (int b = 0; b < blk.cols(); ++b)
        if (!blk.at(a, b).is_zero()) dst.at(r0 + a, c0 + b) += blk.at(a, b).mul_term(m, S->field().one());
  };
  for (int w = 0; w <= sys.jmax; ++w)
    for (auto& J : multi_indices(c, w)) {
      if (c == 0 && w > 0) continue;
      Monomial m = tmono(J);
      int s = 2 * w - 1;  // homological shift
      for (int j = 0; 2 * j + 1 <= L; ++j) {
        int t = 2 * j + 1 + s;  // even target
        if (t < 0 || t > L) continue;
        place(g1, off0[t / 2], off1[j], sys.component(J, 2 * j + 1), m);
      }
      for (int j = 0; 2 * j <= L; ++j) {
        int t = 2 * j + s;  // odd target
        if (t < 0 || t > L) continue;
        place(g0, off1[(t - 1) / 2], off0[j], sys.component(J, 2 * j), m);
      }
    }
  Poly W;
  for (int i = 0; i < c; ++i) {
    MultiIndex J(c, 0);
    J[i] = 1;
    W += sys.f[i].mul_term(tmono(J), S->field().one());
  }
  GradedMF E = make_mf(S, W, g1, g0);
  require_mf(E, "build_mf");
  return E;
}

GradedMF zero_mf(CtxPtr S, const Poly& W) {
  return make_mf(S, W, PolyMatrix(FreeModule(), FreeModule()), PolyMatrix(FreeModule(), FreeModule()));
}

GradedMF unit_mf(CtxPtr S) {
  FreeModule one({0}, {0});
  GradedMF E = make_mf(S, Poly(), PolyMatrix(FreeModule(), one), PolyMatrix(one, FreeModule()));
  return E;
}

CtxPtr quotient_by_w(const GradedMF& E) {
  std::vector<Poly> rel = E.ctx->relations();
  if (!E.W.is_zero()) rel.push_back(E.W);
  return std::make_shared<RingCtx>(E.ctx->ring_ptr(), rel, E.ctx->gw(), E.ctx->iw(), E.ctx->label() + "/(W)");
}

PolyMatrix coker_mf(const GradedMF& E, CtxPtr* sw) {
  CtxPtr q = quotient_by_w(E);
  if (sw) *sw = q;
  return E.g1.nf(*q);
}

GradedMF shift(const GradedMF& E) {
  GradedMF r;
  r.ctx = E.ctx;
  r.W = E.W;
  r.E1 = E.E0;
  r.E0 = E.E1.twisted(1);
  r.g1 = (-E.g0).with_modules(r.E1, r.E0, 0);
  r.g0 = (-E.g1).with_modules(r.E0, r.E1.twisted(1), 0);
  r.labels1 = E.labels0;
  r.labels0 = E.labels1;
  return r;
}

GradedMF twist(const GradedMF& E, int n) {
  GradedMF r = E;
  r.E1 = E.E1.twisted(n);
  r.E0 = E.E0.twisted(n);
  r.g1 = E.g1.with_modules(r.E1, r.E0, 0);
  r.g0 = E.g0.with_modules(r.E0, r.E1.twisted(1), 0);
  return r;
}

GradedMF tag_leaf(GradedMF E, int tag) {
  E.labels1.clear();
  E.labels0.clear();
  for (int k = 0; k < E.rank1(); ++k) E.labels1.push_back({{tag, 1, k}});
  for (int k = 0; k < E.rank0(); ++k) E.labels0.push_back({{tag, 0, k}});
  return E;
}

namespace {

// Copies the entries of blk into dst at (r0, c0).
void put(PolyMatrix& dst, int r0, int c0, const PolyMatrix& blk) {
  for (int a = 0; a < blk.rows(); ++a)
    for (int b = 0; b < blk.cols(); ++b)
      if (!blk.at(a, b).is_zero()) dst.at(r0 + a, c0 + b) = blk.at(a, b);
}

PolyMatrix id_of(const FreeModule& m, const RingCtx& ctx) { return PolyMatrix::identity(m, ctx.one()); }

void same_ring(const GradedMF& E, const GradedMF& F) {
  if (E.ctx != F.ctx && !E.ctx->ring().same_as(F.ctx->ring()))
    throw RingMismatch("matrix factorizations over different rings");
}

std::vector<Label> concat_labels(const std::vector<Label>& a, const std::vector<Label>& b) {
  std::vector<Label> out;
  if (a.empty() || b.empty()) return out;
  for (auto& x : a)
    for (auto& y : b) {
      Label l = x;
      l.insert(l.end(), y.begin(), y.end());
      out.push_back(l);
    }
  return out;
}

}  // namespace

GradedMF tensor_mf(const GradedMF& E, const GradedMF& F) {
  same_ring(E, F);
  const RingCtx& ctx = *E.ctx;
  FreeModule A = tensor(E.E0, F.E1), B = tensor(E.E1, F.E0);  // degree 1
  FreeModule C = tensor(E.E0, F.E0), D = tensor(E.E1, F.E1).twisted(1);  // degree 0
  FreeModule T1 = direct_sum({A, B}), T0 = direct_sum({C, D});
  PolyMatrix d1(T1, T0, 0), d0(T0, T1.twisted(1), 0);
  int a = A.rank(), c = C.rank();
  PolyMatrix I_E0 = id_of(E.E0, ctx), I_E1 = id_of(E.E1, ctx), I_F0 = id_of(F.E0, ctx), I_F1 = id_of(F.E1, ctx);
  put(d1, 0, 0, kron(I_E0, F.g1));
  put(d1, 0, a, kron(E.g1, I_F0));
  put(d1, c, 0, kron(E.g0, I_F1));
  put(d1, c, a, kron(I_E1, -F.g0));
  put(d0, 0, 0, kron(I_E0, F.g0));
  put(d0, 0, c, kron(E.g1, I_F1));
  put(d0, a, 0, kron(E.g0, I_F0));
  put(d0, a, c, kron(I_E1, -F.g1));
  GradedMF T = make_mf(E.ctx, E.W + F.W, d1, d0);
  T.labels1 = concat_labels(E.labels0, F.labels1);
  auto l1b = concat_labels(E.labels1, F.labels0);
  T.labels1.insert(T.labels1.end(), l1b.begin(), l1b.end());
  T.labels0 = concat_labels(E.labels0, F.labels0);
  auto l0b = concat_labels(E.labels1, F.labels1);
  T.labels0.insert(T.labels0.end(), l0b.begin(), l0b.end());
  if (int(T.labels1.size()) != T.rank1() || int(T.labels0.size()) != T.rank0()) {
    T.labels1.clear();
    T.labels0.clear();
  }
  require_mf(T, "tensor_mf");
  return T;
}

GradedMF hom_mf(const GradedMF& E, const GradedMF& F) {
  same_ring(E, F);
  const RingCtx& ctx = *E.ctx;
  // Hom(X, Y) = X^dual (x) Y, source index major
  auto hom = [](const FreeModule& X, const FreeModule& Y) { return tensor(X.dual(), Y); };
  FreeModule A = hom(E.E0, F.E1), B = hom(E.E1, F.E0.twisted(-1));  // degree -1
  FreeModule C = hom(E.E0, F.E0), D = hom(E.E1, F.E1);               // degree 0
  FreeModule H1 = direct_sum({A, B}), H0 = direct_sum({C, D});
  PolyMatrix d1(H1, H0, 0), d0(H0, H1.twisted(1), 0);
  int a = A.rank(), c = C.rank();
  PolyMatrix I_E0 = id_of(E.E0, ctx), I_E1 = id_of(E.E1, ctx);
  // e^* = e^T (x) 1 and (f)_* = 1 (x) f
  put(d1, 0, 0, kron(I_E0, F.g1));
  put(d1, 0, a, kron(E.g0.transpose(), -id_of(F.E0, ctx)));
  put(d1, c, 0, kron(E.g1.transpose(), -id_of(F.E1, ctx)));
  put(d1, c, a, kron(I_E1, F.g0));
  put(d0, 0, 0, kron(I_E0, F.g0));
  put(d0, 0, c, kron(E.g0.transpose(), id_of(F.E1, ctx)));
  put(d0, a, 0, kron(E.g1.transpose(), id_of(F.E0, ctx)));
  put(d0, a, c, kron(I_E1, F.g1));
  GradedMF H = make_mf(E.ctx, F.W - E.W, d1, d0);
  require_mf(H, "hom_mf");
  return H;
}

GradedMF dual_mf(const GradedMF& E) {
  FreeModule D1 = E.E1.twisted(1).dual(), D0 = E.E0.dual();
  PolyMatrix d1 = (-E.g0.transpose()).with_modules(D1, D0, 0);
  PolyMatrix d0 = E.g1.transpose().with_modules(D0, D1.twisted(1), 0);
  GradedMF r = make_mf(E.ctx, -E.W, d1, d0);
  require_mf(r, "dual_mf");
  return r;
}

GradedMF direct_sum_mf(const GradedMF& E, const GradedMF& F) {
  same_ring(E, F);
  FreeModule S1 = direct_sum({E.E1, F.E1}), S0 = direct_sum({E.E0, F.E0});
  PolyMatrix d1(S1, S0, 0), d0(S0, S1.twisted(1), 0);
  put(d1, 0, 0, E.g1);
  put(d1, E.rank0(), E.rank1(), F.g1);
  put(d0, 0, 0, E.g0);
  put(d0, E.rank1(), E.rank0(), F.g0);
  GradedMF r = make_mf(E.ctx, E.W, d1, d0);
  require_mf(r, "direct_sum_mf");
  return r;
}

AffineMF affine_from_graded(const GradedMF& E) {
  const PolyRing& r = E.ctx->ring();
  if (r.nt() != 1) throw std::invalid_argument("affine_from_graded needs exactly one T variable");
  AffineMF A;
  auto xr = r.x_part();
  A.ctx = make_poly_ctx(xr, "Q");
  auto conv = [&](const PolyMatrix& m) {
    PolyMatrix out(FreeModule::free(m.cols()), FreeModule::free(m.rows()), 0);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.at(i, j) = set_t_to_one(m.at(i, j), r);
    return out;
  };
  A.A = conv(E.g1);
  A.B = conv(E.g0);
  A.f = set_t_to_one(E.W, r);
  return A;
}

ChainComplex periodic_complex(const GradedMF& E, int a, int b) {
  CtxPtr q = quotient_by_w(E);
  auto term = [&](int i) {
    int k = (i >= 0) ? i / 2 : -((-i + 1) / 2);  // floor(i / 2)
    return (i - 2 * k == 0) ? E.E0.twisted(k) : E.E1.twisted(k + 1);
  };
  std::vector<FreeModule> t;
  std::vector<PolyMatrix> d;
  for (int i = a; i <= b; ++i) t.push_back(term(i));
  for (int i = a; i < b; ++i) {
    bool even = ((i % 2) + 2) % 2 == 0;
    const PolyMatrix& m = even ? E.g0 : E.g1;
    d.push_back(m.with_modules(term(i), term(i + 1), 0).nf(*q));
  }
  return ChainComplex(q, a, t, d);
}

std::vector<Poly> TPCSupport::ideal() const {
  std::vector<Poly> out;
  for (auto& a : h0)
    for (auto& b : h1) out.push_back(a * b);
  return out;
}

TPCSupport supp_tpc(const GradedMF& P, bool saturate) {
  if (P.ctx->is_quotient()) throw NonRegularContext("supp_tpc needs a polynomial ring, got " + P.ctx->label());
  if (!P.W.is_zero()) throw std::invalid_argument("supp_tpc: not a twisted periodic complex (W != 0)");
  ChainComplex C = periodic_complex(P, -1, 2);
  const RingCtx& ctx = *C.ctx;
  TPCSupport s;
  auto ann_h = [&](int i) {
    PolyMatrix d = C.diff(i);
    PolyMatrix Z = d.rows() == 0 || d.nf(ctx).is_zero() ? PolyMatrix::identity(d.src, ctx.one()) : syzygies(ctx, d);
    return ideal_reduce(ctx, subquotient_annihilator(ctx, Z, C.diff(i - 1)));
  };
  s.h0 = ann_h(0);
  s.h1 = ann_h(1);
  auto T = irrelevant_t(ctx);
  if (saturate && !T.empty()) {
    s.h0 = saturate_ideal(ctx, s.h0, T);
    s.h1 = saturate_ideal(ctx, s.h1, T);
  }
  return s;
}

namespace {

Poly random_poly(const RingCtx& ctx, std::mt19937_64& rng, int maxdeg, bool homogeneous = false) {
  const PolyRing& r = ctx.ring();
  std::uniform_int_distribution<long> coef(0, 100);
  Poly p;
  std::vector<int> e(r.nvars(), 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == r.nx()) {
      int d = 0;
      for (int k = 0; k < r.nx(); ++k) d += e[k];
      if (d > 0 && (!homogeneous || d == maxdeg)) p += Poly::monomial(r.monomial(e), ctx.field().from_int(coef(rng)));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      rec(v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(0, maxdeg);
  return p;
}

// Random invertible constant 2x2 matrix and its inverse.
std::pair<PolyMatrix, PolyMatrix> random_gl2(const RingCtx& ctx, std::mt19937_64& rng) {
  const Field& f = ctx.field();
  std::uniform_int_distribution<long> coef(0, 100);
  for (;;) {
    long a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    Coeff det = f.from_int(a) * f.from_int(d) - f.from_int(b) * f.from_int(c);
    if (det.is_zero()) continue;
    Coeff inv = det.inv();
    PolyMatrix P(FreeModule::free(2), FreeModule::free(2)), Pi(FreeModule::free(2), FreeModule::free(2));
    P.at(0, 0) = ctx.constant(a);
    P.at(0, 1) = ctx.constant(b);
    P.at(1, 0) = ctx.constant(c);
    P.at(1, 1) = ctx.constant(d);
    Pi.at(0, 0) = Poly::constant(f.from_int(d) * inv);
    Pi.at(0, 1) = Poly::constant(f.from_int(-b) * inv);
    Pi.at(1, 0) = Poly::constant(f.from_int(-c) * inv);
    Pi.at(1, 1) = Poly::constant(f.from_int(a) * inv);
    return {P, Pi};
  }
}

}  // namespace

std::vector<GradedMF> random_mf_family(CtxPtr ctx, uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const RingCtx& Q = *ctx;
  std::vector<Poly> a(2), b(2);
  for (int i = 0; i < 2; ++i) {
    a[i] = random_poly(Q, rng, 2);
    b[i] = random_poly(Q, rng, 2);
  }
  Poly W = a[0] * b[0] + a[1] * b[1];
  std::vector<GradedMF> out;
  std::bernoulli_distribution flip(0.5);
  for (int n = 0; n < count; ++n) {
    std::vector<Poly> u = a, v = b;
    for (int i = 0; i < 2; ++i)
      if (flip(rng)) std::swap(u[i], v[i]);
    FreeModule F2 = FreeModule::free(2);
    PolyMatrix g1(F2, F2), g0(F2, F2);
    g1.at(0, 0) = u[0];
    g1.at(0, 1) = u[1];
    g1.at(1, 0) = -v[1];
    g1.at(1, 1) = v[0];
    g0.at(0, 0) = v[0];
    g0.at(0, 1) = -u[1];
    g0.at(1, 0) = v[1];
    g0.at(1, 1) = u[0];
    auto [P, Pi] = random_gl2(Q, rng);
    auto [R, Ri] = random_gl2(Q, rng);
    // g1 -> P g1 R^-1, g0 -> R g0 P^-1
    GradedMF E = make_mf(ctx, W, (P * g1 * Ri).nf(Q), (R * g0 * Pi).nf(Q));
    require_mf(E, "random_mf_family");
    out.push_back(E);
  }
  return out;
}

GradedMF random_tpc(CtxPtr ctx, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const RingCtx& Q = *ctx;
  std::uniform_int_distribution<int> deg(1, 2);
  std::vector<Poly> p(4);
  for (auto& q : p)
    do q = random_poly(Q, rng, deg(rng), true);
    while (q.is_zero());
  FreeModule one = FreeModule::free(1);
  auto mf1 = [&](const Poly& a, const Poly& b) {
    PolyMatrix u(one, one), v(one, one);
    u.at(0, 0) = a;
    v.at(0, 0) = b;
    return make_mf(ctx, a * b, u, v);
  };
  GradedMF P = tensor_mf(mf1(p[0] * p[1], p[2] * p[3]), mf1(p[0] * p[2], -(p[1] * p[3])));
  if (!P.W.is_zero()) throw MFEquationFailure("random_tpc: W does not cancel");
  P.W = Poly();
  return P;
}

}  // namespace mfci
