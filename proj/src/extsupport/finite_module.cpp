#include <algorithm>
#include <set>
#include <tuple>

#include "mfci/errors.hpp"
#include "mfci/extsupport.hpp"
#include "mfci/graded.hpp"
#include "mfci/groebner.hpp"

namespace mfci {

namespace {

std::vector<uint16_t> exps(const Monomial& m, int from, int to) {
  return std::vector<uint16_t>(m.e.begin() + from, m.e.begin() + to);
}

DenseMat zero_mat(const Field& f, int r, int c) { return DenseMat(f, r, c); }

}  // namespace

FiniteModule::FiniteModule(CtxPtr R, const PolyMatrix& pres, int cap) : ctx_(R) {
  const RingCtx& r = *R;
  const Field& k = r.field();
  int nx = r.ring().nx();
  if (pres.rows() == 0) {
    for (int v = 0; v < nx; ++v) x_.push_back(zero_mat(k, 0, 0));
    nil_ = 1;
    return;
  }
  int lo = 0, hi_gen = 0;
  for (int i = 0; i < pres.rows(); ++i) {
    int d = -pres.tgt.tw[i];
    lo = i == 0 ? d : std::min(lo, d);
    hi_gen = i == 0 ? d : std::max(hi_gen, d);
  }
  struct Piece {
    int d;
    GradedPiece gp;
    Echelon img;
    std::vector<int> slot;  // coordinate -> basis index or -1
    int offset;
  };
  std::vector<Piece> pieces;
  int total = 0;
  for (int d = lo;; ++d) {
    if (d - hi_gen > cap) throw BudgetExceeded("module is not of finite length within " + std::to_string(cap) + " degrees");
    GradedPiece gp(r, pres.tgt, d);
    Echelon img = image_in_degree(r, pres, d);
    std::vector<int> slot(gp.dim(), -1);
    std::vector<bool> piv(gp.dim(), false);
    for (int p : img.pivots()) piv[p] = true;
    int n = 0;
    for (int p = 0; p < gp.dim(); ++p)
      if (!piv[p]) slot[p] = total + n++;
    if (n == 0 && d >= hi_gen) break;
    pieces.push_back({d, gp, img, slot, total});
    for (int i = 0; i < n; ++i) deg_.push_back(d);
    total += n;
  }
  int top = deg_.empty() ? lo : deg_.back();
  int bottom = deg_.empty() ? lo : deg_.front();
  nil_ = std::max(1, top - bottom + 1);
  for (int v = 0; v < nx; ++v) {
    DenseMat A(k, total, total);
    int w = r.gw()[v];
    for (auto& src : pieces) {
      const Piece* tgt = nullptr;
      for (auto& t : pieces)
        if (t.d == src.d + w) tgt = &t;
      if (!tgt) continue;
      for (int p = 0; p < src.gp.dim(); ++p) {
        if (src.slot[p] < 0) continue;
        auto [g, m] = src.gp.elems()[p];
        std::vector<Poly> col(pres.rows());
        col[g] = r.nf(Poly::monomial(mono_mul(m, r.ring().var(v)), k.one()));
        auto c = tgt->img.reduce(tgt->gp.coords(col));
        for (int q = 0; q < tgt->gp.dim(); ++q)
          if (tgt->slot[q] >= 0 && !c[q].is_zero()) A.set(tgt->slot[q], src.slot[p], c[q]);
      }
    }
    x_.push_back(A);
  }
}

int FiniteModule::dim(int d) const { return int(std::count(deg_.begin(), deg_.end(), d)); }

DenseMat FiniteModule::action(const Poly& p) const {
  const Field& k = ctx_->field();
  const PolyRing& ring = ctx_->ring();
  int n = dim(), nx = ring.nx();
  DenseMat out(k, n, n);
  Poly q = ctx_->nf(p);
  for (auto& t : q.terms()) {
    if (ring.xdeg(t.m) >= nil_) continue;
    auto key = exps(t.m, 0, nx);
    auto it = mono_.find(key);
    if (it == mono_.end()) {
      DenseMat M = DenseMat::identity(k, n);
      for (int v = 0; v < nx; ++v)
        for (int e = 0; e < key[v]; ++e) M = x_[v] * M;
      it = mono_.emplace(key, M).first;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Coeff c = it->second.at(i, j);
        if (!c.is_zero()) out.add_to(i, j, c * t.c);
      }
  }
  return out;
}

std::map<int, int> GradedSpace::hilbert() const {
  std::map<int, int> h;
  for (int d : deg) ++h[d];
  return h;
}

std::vector<int> GradedSpace::indices(int d) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (deg[i] == d) out.push_back(i);
  return out;
}

bool ModulePresentation::gulliksen() const {
  for (int l : gen_level)
    if (3 * l > 2 * top) return false;
  return true;
}

namespace {

// Coordinates of the level-j piece of a free module over ring modulo m^L:
// (generator, T-exponent, standard x-monomial of degree < L).
class Coords {
 public:
  Coords(const RingCtx& ring, int L, const std::vector<int>& gen_level, const std::vector<int>& gen_deg, int j)
      : ring_(ring), nx_(ring.ring().nx()), c_(ring.ring().nt()), L_(L) {
    const PolyRing& r = ring.ring();
    std::vector<int> xw = x_weights(r);
    for (int d = 0; d < L; ++d)
      for (auto& m : monomials_of_degree(r, xw, d)) {
        bool std_mon = true;
        for (auto& g : ring.gb())
          if (mono_divides(g.lead().m, m)) std_mon = false;
        if (!std_mon) continue;
        xidx_[exps(m, 0, nx_)] = int(xm_.size());
        xm_.push_back(m);
        xdeg_.push_back(d);
      }
    for (size_t g = 0; g < gen_level.size(); ++g) {
      if (gen_level[g] > j) continue;
      for (auto& a : multi_indices(c_, j - gen_level[g]))
        for (size_t s = 0; s < xm_.size(); ++s) {
          int dd = gen_deg[g] + xdeg_[s];
          for (int k = 0; k < c_; ++k) dd += a[k] * ring.iw()[nx_ + k];
          index_[{int(g), a, int(s)}] = int(elems_.size());
          elems_.emplace_back(int(g), a, int(s));
          deg_.push_back(dd);
        }
    }
  }

  int dim() const { return int(elems_.size()); }
  const std::vector<int>& deg() const { return deg_; }
  const std::vector<std::tuple<int, MultiIndex, int>>& elems() const { return elems_; }
  const Monomial& xmon(int s) const { return xm_[s]; }

  // Coordinates of a column; terms with x-degree >= L are dropped.
  std::vector<Coeff> coords(const std::vector<Poly>& col) const {
    std::vector<Coeff> v(dim(), ring_.field().zero());
    for (size_t g = 0; g < col.size(); ++g) {
      Poly p = ring_.nf(col[g]);
      for (auto& t : p.terms()) {
        if (ring_.ring().xdeg(t.m) >= L_) continue;
        auto xi = xidx_.find(exps(t.m, 0, nx_));
        if (xi == xidx_.end()) throw std::logic_error("non-standard x-monomial in coordinates");
        MultiIndex a(c_);
        for (int k = 0; k < c_; ++k) a[k] = t.m.e[nx_ + k];
        auto it = index_.find({int(g), a, xi->second});
        if (it == index_.end()) throw std::logic_error("column outside the level");
        v[it->second] = v[it->second] + t.c;
      }
    }
    return v;
  }

  // Polynomial column of a coordinate vector, `rows` generators.
  std::vector<Poly> column(const std::vector<Coeff>& v, int rows) const {
    std::vector<Poly> col(rows);
    for (int i = 0; i < dim(); ++i) {
      if (v[i].is_zero()) continue;
      auto& [g, a, s] = elems_[i];
      Monomial m = xm_[s];
      for (int k = 0; k < c_; ++k) m = mono_mul(m, ring_.ring().var(nx_ + k, a[k]));
      col[g] += Poly::monomial(m, v[i]);
    }
    return col;
  }

 private:
  const RingCtx& ring_;
  int nx_, c_, L_;
  std::vector<Monomial> xm_;
  std::vector<int> xdeg_;
  std::map<std::vector<uint16_t>, int> xidx_;
  std::vector<std::tuple<int, MultiIndex, int>> elems_;
  std::map<std::tuple<int, MultiIndex, int>, int> index_;
  std::vector<int> deg_;
};

std::vector<int> with_degree(const std::vector<int>& deg, int d) {
  std::vector<int> out;
  for (size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == d) out.push_back(int(i));
  return out;
}

std::vector<Coeff> column_of(const DenseMat& A, int j) {
  std::vector<Coeff> v(A.rows());
  for (int i = 0; i < A.rows(); ++i) v[i] = A.at(i, j);
  return v;
}

std::vector<Coeff> restrict_to(const std::vector<Coeff>& v, const std::vector<int>& idx) {
  std::vector<Coeff> out;
  for (int i : idx) out.push_back(v[i]);
  return out;
}

std::vector<Coeff> mat_vec(const DenseMat& A, const std::vector<Coeff>& v) {
  const Field& k = A.field();
  std::vector<Coeff> out(A.rows(), k.zero());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (!v[j].is_zero()) out[i] = out[i] + A.at(i, j) * v[j];
  return out;
}

int internal_degree(const std::vector<Coeff>& v, const std::vector<int>& deg) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return deg[i];
  return 0;
}

std::map<int, Echelon> span_by_degree(const RingCtx& ring, const Coords& C, const std::vector<std::vector<Poly>>& cols,
                                      const std::vector<int>& col_level, int j) {
  const PolyRing& r = ring.ring();
  int nx = r.nx(), c = r.nt();
  std::map<int, Echelon> ech;
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    if (col_level[ci] > j) continue;
    for (auto& a : multi_indices(c, j - col_level[ci])) {
      Monomial ta = r.monomial(std::vector<int>(r.nvars(), 0));
      for (int k = 0; k < c; ++k) ta = mono_mul(ta, r.var(nx + k, a[k]));
      std::map<std::vector<uint16_t>, bool> seen;
      for (auto& [g, aa, s] : C.elems()) {
        const Monomial& xm = C.xmon(s);
        auto key = exps(xm, 0, nx);
        if (seen.count(key)) continue;
        seen[key] = true;
        Monomial m = mono_mul(ta, xm);
        std::vector<Poly> col;
        for (auto& p : cols[ci]) col.push_back(p.mul_term(m, ring.field().one()));
        auto v = C.coords(col);
        bool nz = false;
        for (auto& x : v) nz = nz || !x.is_zero();
        if (!nz) continue;
        int d = internal_degree(v, C.deg());
        auto it = ech.find(d);
        if (it == ech.end()) it = ech.emplace(d, Echelon(ring.field(), C.dim())).first;
        it->second.add(v);
      }
    }
  }
  return ech;
}

}  // namespace

std::map<int, int> span_dims(const ModulePresentation& P, const std::vector<std::vector<Poly>>& cols,
                             const std::vector<int>& col_level, int j) {
  Coords C(*P.ring, P.L, P.gen_level, P.gen_deg, j);
  std::map<int, int> out;
  for (auto& [d, e] : span_by_degree(*P.ring, C, cols, col_level, j)) out[d] = e.dim();
  return out;
}

std::map<int, int> level_hilbert(const ModulePresentation& P, int j) {
  Coords C(*P.ring, P.L, P.gen_level, P.gen_deg, j);
  std::vector<std::vector<Poly>> cols;
  for (int k = 0; k < P.pres.cols(); ++k) cols.push_back(P.pres.column(k));
  std::map<int, int> h;
  for (int d : C.deg()) ++h[d];
  for (auto& [d, e] : span_by_degree(*P.ring, C, cols, P.rel_level, j)) h[d] -= e.dim();
  for (auto it = h.begin(); it != h.end();) it = it->second == 0 ? h.erase(it) : std::next(it);
  return h;
}

ModulePresentation present_module(CtxPtr ring, const LevelModule& M) {
  const RingCtx& rc = *ring;
  const PolyRing& r = rc.ring();
  const Field& k = rc.field();
  int nx = r.nx(), c = r.nt(), J = int(M.X.size()) - 1;
  ModulePresentation P;
  P.ring = ring;
  P.top = J;
  P.L = M.L;
  std::vector<std::vector<Coeff>> gen_vec;  // generator as a vector of its level
  std::vector<std::vector<Poly>> rel_cols;

  // Evaluation of a coordinate of level j in X[j].
  auto evaluate = [&](const Coords& C, int i, int j) {
    auto& [g, a, s] = C.elems()[i];
    std::vector<Coeff> v = gen_vec[g];
    int lvl = P.gen_level[g];
    for (int kk = 0; kk < c; ++kk)
      for (int e = 0; e < a[kk]; ++e) v = mat_vec(M.t[lvl++][kk], v);
    const Monomial& xm = C.xmon(s);
    for (int vv = 0; vv < nx; ++vv)
      for (int e = 0; e < xm.e[vv]; ++e) v = mat_vec(M.x[j][vv], v);
    return v;
  };

  std::map<int, std::vector<std::vector<Coeff>>> prev_kernel;  // level j-1, by internal degree
  for (int j = 0; j <= J; ++j) {
    const GradedSpace& X = M.X[j];
    auto hil = X.hilbert();
    // generators: complement of m X_j + T X_{j-1}
    for (auto& [d, n] : hil) {
      auto idx = X.indices(d);
      Echelon U(k, int(idx.size()));
      for (int v = 0; v < nx; ++v)
        for (int src : X.indices(d - M.xw[v])) U.add(restrict_to(column_of(M.x[j][v], src), idx));
      if (j > 0)
        for (int kk = 0; kk < c; ++kk)
          for (int src : M.X[j - 1].indices(d - M.tw[kk])) U.add(restrict_to(column_of(M.t[j - 1][kk], src), idx));
      for (size_t p = 0; p < idx.size(); ++p) {
        std::vector<Coeff> e(idx.size(), k.zero());
        e[p] = k.one();
        if (!U.add(e)) continue;
        std::vector<Coeff> full(X.dim(), k.zero());
        full[idx[p]] = k.one();
        gen_vec.push_back(full);
        P.gen_level.push_back(j);
        P.gen_deg.push_back(d);
      }
    }
    // relations: kernel of the evaluation modulo T K_{j-1} + m K_j
    Coords C(rc, M.L, P.gen_level, P.gen_deg, j);
    std::map<int, std::vector<std::vector<Coeff>>> kernel;
    std::set<int> fdegs(C.deg().begin(), C.deg().end());
    for (int d : fdegs) {
      auto src = with_degree(C.deg(), d);
      auto tgt = X.indices(d);
      DenseMat ev(k, int(tgt.size()), int(src.size()));
      for (size_t q = 0; q < src.size(); ++q) {
        auto v = restrict_to(evaluate(C, src[q], j), tgt);
        for (size_t p = 0; p < tgt.size(); ++p) ev.set(int(p), int(q), v[p]);
      }
      DenseMat K = ev.kernel();
      Echelon O(k, C.dim());
      // T_k times the previous kernel
      if (j > 0) {
        Coords Cp(rc, M.L, P.gen_level, P.gen_deg, j - 1);
        for (int kk = 0; kk < c; ++kk) {
          auto it = prev_kernel.find(d - M.tw[kk]);
          if (it == prev_kernel.end()) continue;
          for (auto& w : it->second) {
            auto col = Cp.column(w, int(gen_vec.size()));
            for (auto& p : col) p = p * rc.var(nx + kk);
            O.add(C.coords(col));
          }
        }
      }
      for (int v = 0; v < nx; ++v) {
        auto it = kernel.find(d - M.xw[v]);
        if (it == kernel.end()) continue;
        for (auto& w : it->second) {
          auto col = C.column(w, int(gen_vec.size()));
          for (auto& p : col) p = p * rc.var(v);
          O.add(C.coords(col));
        }
      }
      for (int q = 0; q < K.cols(); ++q) {
        std::vector<Coeff> full(C.dim(), k.zero());
        for (size_t i = 0; i < src.size(); ++i) full[src[i]] = K.at(int(i), q);
        kernel[d].push_back(full);
        if (!O.add(full)) continue;
        rel_cols.push_back(C.column(full, int(gen_vec.size())));
        P.rel_level.push_back(j);
      }
    }
    prev_kernel = std::move(kernel);
  }
  // m^L g = 0: minimal standard monomials of x-degree >= L
  {
    std::vector<int> xw = x_weights(r);
    std::map<std::vector<uint16_t>, Monomial> beta;
    for (int d = 0; d < M.L; ++d)
      for (auto& m : monomials_of_degree(r, xw, d))
        for (int v = 0; v < nx; ++v) {
          Monomial b = mono_mul(m, r.var(v));
          if (r.xdeg(b) < M.L) continue;
          Poly p = rc.nf(Poly::monomial(b, k.one()));
          if (p.is_zero() || p.size() != 1 || p.lead().m != b) continue;
          beta.emplace(exps(b, 0, nx), b);
        }
    for (size_t g = 0; g < gen_vec.size(); ++g)
      for (auto& [key, b] : beta) {
        std::vector<Poly> col(gen_vec.size());
        col[g] = Poly::monomial(b, k.one());
        rel_cols.push_back(col);
        P.rel_level.push_back(P.gen_level[g]);
      }
  }
  int ng = int(gen_vec.size());
  for (auto& col : rel_cols) col.resize(ng);  // generators found later add rows
  FreeModule tgt, src;
  for (int g = 0; g < ng; ++g) {
    if (c == 0) {
      tgt.tw.push_back(-P.gen_deg[g]);
    } else {
      tgt.tw.push_back(-P.gen_level[g]);
      tgt.itw.push_back(-P.gen_deg[g]);
    }
  }
  for (size_t q = 0; q < rel_cols.size(); ++q) {
    int itw = 0;
    int tw = column_twist(rc, rel_cols[q], tgt, c == 0 ? nullptr : &itw);
    src.tw.push_back(tw);
    if (c > 0) src.itw.push_back(itw);
  }
  P.pres = PolyMatrix(src, tgt, 0);
  for (size_t q = 0; q < rel_cols.size(); ++q) P.pres.set_column(int(q), rel_cols[q]);
  return P;
}

}  // namespace mfci
