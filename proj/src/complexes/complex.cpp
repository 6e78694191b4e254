#include "mfci/complex.hpp"

#include "mfci/errors.hpp"
#include "mfci/groebner.hpp"

namespace mfci {

ChainComplex::ChainComplex(CtxPtr c, int lo_, std::vector<FreeModule> t, std::vector<PolyMatrix> dd)
    : ctx(std::move(c)), lo(lo_), terms(std::move(t)), d(std::move(dd)) {
  if (!terms.empty() && d.size() + 1 != terms.size()) throw std::invalid_argument("complex: differential count");
}

FreeModule ChainComplex::term(int i) const { return in_window(i) ? terms[i - lo] : FreeModule(); }

PolyMatrix ChainComplex::diff(int i) const {
  if (in_window(i) && in_window(i + 1)) return d[i - lo];
  return PolyMatrix(term(i), term(i + 1), 0);
}

bool ChainComplex::is_complex(int* bad) const {
  for (int i = lo; i + 1 < hi(); ++i)
    if (!(diff(i + 1) * diff(i)).nf(*ctx).is_zero()) {
      if (bad) *bad = i;
      return false;
    }
  return true;
}

bool ChainComplex::is_zero() const {
  for (auto& t : terms)
    if (t.rank()) return false;
  return true;
}

bool ChainComplex::operator==(const ChainComplex& o) const {
  return lo == o.lo && terms == o.terms && d.size() == o.d.size() && [&] {
    for (size_t k = 0; k < d.size(); ++k)
      if (!(d[k] == o.d[k])) return false;
    return true;
  }();
}

ChainComplex ChainComplex::truncate(int a, int b) const {
  a = std::max(a, lo);
  b = std::min(b, hi());
  if (a > b) return ChainComplex(ctx, a, {}, {});
  std::vector<FreeModule> t(terms.begin() + (a - lo), terms.begin() + (b - lo + 1));
  std::vector<PolyMatrix> dd(d.begin() + (a - lo), d.begin() + (b - lo));
  return ChainComplex(ctx, a, t, dd);
}

ChainComplex complex_from_resolution(CtxPtr ctx, const Resolution& res) {
  int L = res.length();
  std::vector<FreeModule> t;
  std::vector<PolyMatrix> dd;
  for (int n = L; n >= 0; --n) t.push_back(res.term(n));
  for (int n = L; n >= 1; --n) dd.push_back(res.d[n - 1]);
  return ChainComplex(std::move(ctx), -L, t, dd);
}

PolyMatrix ChainMap::at(int i, const ChainComplex& A, const ChainComplex& B) const {
  auto it = comp.find(i);
  if (it != comp.end()) return it->second;
  return PolyMatrix(A.term(i), B.term(i + deg), mdeg);
}

ChainMap identity_map(const ChainComplex& C) { return scalar_map(C, C.ctx->one(), 0); }

ChainMap scalar_map(const ChainComplex& C, const Poly& c, int mdeg) {
  ChainMap f;
  f.mdeg = mdeg;
  for (int i = C.lo; i <= C.hi(); ++i) f.comp[i] = PolyMatrix::scalar(C.term(i), c, mdeg);
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f, const ChainComplex& A, const ChainComplex& B,
                 const ChainComplex& C) {
  ChainMap h;
  h.deg = f.deg + g.deg;
  h.mdeg = f.mdeg + g.mdeg;
  for (int i = A.lo; i <= A.hi(); ++i) {
    if (!C.in_window(i + h.deg)) continue;
    h.comp[i] = (g.at(i + f.deg, B, C) * f.at(i, A, B)).nf(*A.ctx);
  }
  return h;
}

ChainMap add(const ChainMap& f, const ChainMap& g, const ChainComplex& A, const ChainComplex& B, bool subtract) {
  ChainMap h;
  h.deg = f.deg;
  h.mdeg = f.mdeg;
  for (int i = A.lo; i <= A.hi(); ++i) {
    if (!B.in_window(i + f.deg)) continue;
    h.comp[i] = subtract ? f.at(i, A, B) - g.at(i, A, B) : f.at(i, A, B) + g.at(i, A, B);
  }
  return h;
}

ChainMap map_nf(const ChainMap& f, const RingCtx& ctx) {
  ChainMap h = f;
  for (auto& [i, m] : h.comp) m = m.nf(ctx);
  return h;
}

bool map_is_zero(const ChainMap& f, const RingCtx& ctx) {
  for (auto& [i, m] : f.comp)
    if (!m.nf(ctx).is_zero()) return false;
  return true;
}

bool is_chain_map(const ChainMap& f, const ChainComplex& A, const ChainComplex& B, int* bad) {
  const RingCtx& ctx = *A.ctx;
  for (int i = A.lo; i < A.hi(); ++i) {
    if (!B.in_window(i + f.deg) || !B.in_window(i + 1 + f.deg)) continue;
    PolyMatrix l = B.diff(i + f.deg) * f.at(i, A, B);
    PolyMatrix r = f.at(i + 1, A, B) * A.diff(i);
    PolyMatrix diffm = (f.deg % 2 == 0) ? l - r : l + r;
    if (!diffm.nf(ctx).is_zero()) {
      if (bad) *bad = i;
      return false;
    }
  }
  return true;
}

// Generators of ker A, with the degenerate cases handled directly.
static PolyMatrix kernel_of(const RingCtx& ctx, const PolyMatrix& A) {
  if (A.rows() == 0 || A.nf(ctx).is_zero()) return PolyMatrix::identity(A.src, ctx.one());
  return syzygies(ctx, A);
}

PolyMatrix homology(const ChainComplex& C, int i) {
  if (!C.in_window(i)) throw WindowTooSmall("homology requested at degree " + std::to_string(i) + " outside [" +
                                            std::to_string(C.lo) + ", " + std::to_string(C.hi()) + "]");
  const RingCtx& ctx = *C.ctx;
  // Z generates ker d^i; the boundaries and the relations among Z present H^i.
  PolyMatrix Z = kernel_of(ctx, C.diff(i));
  PolyMatrix pres(FreeModule(), Z.src, 0);
  if (Z.cols() == 0) return pres;
  std::vector<PolyMatrix> parts;
  PolyMatrix in = C.diff(i - 1);
  if (in.cols() > 0) parts.push_back(Lifter(ctx, Z).lift_matrix(in));
  PolyMatrix zz = kernel_of(ctx, Z);
  if (zz.cols() > 0) parts.push_back(zz);
  if (parts.empty()) return pres;
  for (auto& p : parts) p = p.with_modules(p.src, Z.src, 0);
  return minimal_generators(ctx, hstack(parts));
}

bool exactness_window(const ChainComplex& C, int a, int b) {
  if (a < C.lo || b > C.hi())
    throw WindowTooSmall("exactness check on [" + std::to_string(a) + ", " + std::to_string(b) +
                         "] needs the complex on that range, have [" + std::to_string(C.lo) + ", " +
                         std::to_string(C.hi()) + "]");
  const RingCtx& ctx = *C.ctx;
  for (int i = a; i <= b; ++i) {
    if (C.rank(i) == 0) continue;
    PolyMatrix Z = kernel_of(ctx, C.diff(i));
    if (Z.cols() == 0) continue;
    PolyMatrix in = C.diff(i - 1);
    if (in.cols() == 0) return false;
    Lifter L(ctx, in);
    for (int j = 0; j < Z.cols(); ++j)
      if (!L.in_image(Z.column(j))) return false;
  }
  return true;
}

ChainComplex cone(const ChainMap& f, const ChainComplex& A, const ChainComplex& B) {
  int lo = std::min(A.lo - 1, B.lo), hi = std::max(A.hi() - 1, B.hi());
  std::vector<FreeModule> t;
  for (int i = lo; i <= hi; ++i) t.push_back(direct_sum({A.term(i + 1), B.term(i)}));
  std::vector<PolyMatrix> dd;
  for (int i = lo; i < hi; ++i) {
    PolyMatrix zero(B.term(i), A.term(i + 2), 0);
    dd.push_back(block_matrix({{-A.diff(i + 1), zero}, {f.at(i + 1, A, B), B.diff(i)}}));
  }
  return ChainComplex(A.ctx, lo, t, dd);
}

std::vector<int> ranks(const ChainComplex& C) {
  std::vector<int> r;
  for (auto& t : C.terms) r.push_back(t.rank());
  return r;
}

}  // namespace mfci
