#include <algorithm>
#include <set>

#include "mfci/errors.hpp"
#include "mfci/extsupport.hpp"

namespace mfci {

namespace {

// Cochains Hom(F_n, N) = N^{r_n}: coordinate (j, b) has internal degree deg_N(b) + tw_j.
struct Cochains {
  int r = 0, D = 0;
  std::vector<int> deg;
};

Cochains cochains(const FreeModule& F, const FiniteModule& N) {
  Cochains C;
  C.r = F.rank();
  C.D = N.dim();
  for (int j = 0; j < C.r; ++j)
    for (int b = 0; b < C.D; ++b) C.deg.push_back(N.degrees()[b] + F.tw[j]);
  return C;
}

// phi -> phi o A for A : F' -> F, as a matrix Hom(F, N) -> Hom(F', N).
DenseMat precompose(const PolyMatrix& A, const FiniteModule& N, std::map<std::string, DenseMat>& cache,
                    const PolyRing& ring) {
  const Field& k = N.ctx()->field();
  int D = N.dim();
  DenseMat out(k, A.cols() * D, A.rows() * D);
  for (int j = 0; j < A.rows(); ++j)
    for (int l = 0; l < A.cols(); ++l) {
      const Poly& p = A.at(j, l);
      if (p.is_zero()) continue;
      std::string key = p.str(ring);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, N.action(p)).first;
      const DenseMat& act = it->second;
      for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
          Coeff c = act.at(a, b);
          if (!c.is_zero()) out.set(l * D + a, j * D + b, c);
        }
    }
  return out;
}

DenseMat restrict(const DenseMat& A, const std::vector<int>& rows, const std::vector<int>& cols) {
  DenseMat out(A.field(), int(rows.size()), int(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out.set(int(i), int(j), A.at(rows[i], cols[j]));
  return out;
}

std::vector<int> with_degree(const std::vector<int>& deg, int d) {
  std::vector<int> out;
  for (size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == d) out.push_back(int(i));
  return out;
}

// Homology of Hom(F_n, N) with class representatives and a coordinate solver.
struct Homology {
  GradedSpace H;
  std::vector<std::vector<Coeff>> reps;  // cochain vectors
  std::map<int, DenseMat> solver;        // degree -> [reps_d | boundaries_d] on coords of degree d
  std::map<int, std::vector<int>> rep_idx, coord_idx;

  // Class of a cocycle of internal degree d.
  std::vector<Coeff> classify(const std::vector<Coeff>& v, int d, const Field& k) const {
    std::vector<Coeff> out(H.dim(), k.zero());
    auto it = solver.find(d);
    if (it == solver.end()) return out;
    const auto& idx = coord_idx.at(d);
    DenseMat b(k, int(idx.size()), 1);
    for (size_t i = 0; i < idx.size(); ++i) b.set(int(i), 0, v[idx[i]]);
    auto x = it->second.solve(b);
    if (!x) throw VerificationFailure("cochain is not a cocycle in degree " + std::to_string(d));
    const auto& ri = rep_idx.at(d);
    for (size_t q = 0; q < ri.size(); ++q) out[ri[q]] = x->at(int(q), 0);
    return out;
  }
};

Homology homology_at(const Cochains& C, const DenseMat* into, const DenseMat* out, const Field& k) {
  // into : C^{n-1} -> C^n, out : C^n -> C^{n+1}; both preserve internal degree
  Homology h;
  std::set<int> degs(C.deg.begin(), C.deg.end());
  int N = int(C.deg.size());
  for (int d : degs) {
    auto idx = with_degree(C.deg, d);
    std::vector<std::vector<Coeff>> Z;
    if (out && out->rows() > 0) {
      std::vector<int> all_rows(out->rows());
      for (int i = 0; i < out->rows(); ++i) all_rows[i] = i;
      DenseMat K = restrict(*out, all_rows, idx).kernel();
      for (int q = 0; q < K.cols(); ++q) {
        std::vector<Coeff> v(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) v[i] = K.at(int(i), q);
        Z.push_back(v);
      }
    } else {
      for (size_t q = 0; q < idx.size(); ++q) {
        std::vector<Coeff> v(idx.size(), k.zero());
        v[q] = k.one();
        Z.push_back(v);
      }
    }
    Echelon B(k, int(idx.size()));
    std::vector<std::vector<Coeff>> bvecs;
    if (into && into->cols() > 0)
      for (int q = 0; q < into->cols(); ++q) {
        std::vector<Coeff> v(idx.size());
        bool nz = false;
        for (size_t i = 0; i < idx.size(); ++i) {
          v[i] = into->at(idx[i], q);
          nz = nz || !v[i].is_zero();
        }
        if (nz && B.add(v)) bvecs.push_back(v);
      }
    std::vector<std::vector<Coeff>> reps;
    for (auto& z : Z)
      if (B.add(z)) reps.push_back(z);
    if (reps.empty()) continue;
    DenseMat S(k, int(idx.size()), int(reps.size() + bvecs.size()));
    for (size_t q = 0; q < reps.size(); ++q)
      for (size_t i = 0; i < idx.size(); ++i) S.set(int(i), int(q), reps[q][i]);
    for (size_t q = 0; q < bvecs.size(); ++q)
      for (size_t i = 0; i < idx.size(); ++i) S.set(int(i), int(reps.size() + q), bvecs[q][i]);
    h.solver[d] = S;
    h.coord_idx[d] = idx;
    for (auto& r : reps) {
      std::vector<Coeff> full(N, k.zero());
      for (size_t i = 0; i < idx.size(); ++i) full[idx[i]] = r[i];
      h.rep_idx[d].push_back(h.H.dim());
      h.H.deg.push_back(d);
      h.reps.push_back(full);
    }
  }
  return h;
}

std::vector<Coeff> apply(const DenseMat& A, const std::vector<Coeff>& v) {
  const Field& k = A.field();
  std::vector<Coeff> out(A.rows(), k.zero());
  for (int j = 0; j < A.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < A.rows(); ++i) {
      Coeff a = A.at(i, j);
      if (!a.is_zero()) out[i] = out[i] + a * v[j];
    }
  }
  return out;
}

// Matrix of the map induced by a cochain map `A` (C^n -> C^m, internal shift s) on homology.
DenseMat induced(const DenseMat& A, const Homology& src, const Homology& tgt, int s, const Field& k) {
  DenseMat out(k, tgt.H.dim(), src.H.dim());
  for (int q = 0; q < src.H.dim(); ++q) {
    auto w = apply(A, src.reps[q]);
    bool nz = false;
    for (auto& c : w) nz = nz || !c.is_zero();
    if (!nz) continue;
    auto cls = tgt.classify(w, src.H.deg[q] + s, k);
    for (int i = 0; i < tgt.H.dim(); ++i) out.set(i, q, cls[i]);
  }
  return out;
}

DenseMat block_diag_action(const DenseMat& a, int r) {
  int D = a.rows();
  DenseMat out(a.field(), r * D, r * D);
  for (int j = 0; j < r; ++j)
    for (int x = 0; x < D; ++x)
      for (int y = 0; y < D; ++y) {
        Coeff c = a.at(x, y);
        if (!c.is_zero()) out.set(j * D + x, j * D + y, c);
      }
  return out;
}

CtxPtr rt_context(CtxPtr R, const std::vector<Poly>& f) {
  return make_s_ctx(R->ring().with_t(int(f.size())), f, f, "R[T]");
}

}  // namespace

std::vector<int> ExtData::dims() const {
  std::vector<int> d;
  for (auto& e : ext) d.push_back(e.dim());
  return d;
}

LevelModule ExtData::levels(int parity) const {
  LevelModule M;
  const PolyRing& r = R->ring();
  for (int v = 0; v < r.nx(); ++v) M.xw.push_back(R->gw()[v]);
  for (int k = 0; k < c; ++k) M.tw.push_back(-fdeg[k]);
  for (int n = parity; n <= n_max; n += 2) {
    M.X.push_back(ext[n]);
    M.x.push_back(x[n]);
    if (n + 2 <= n_max) M.t.push_back(t[n]);
  }
  return M;
}

ExtData ext_modules(const HigherHomotopySystem& sys, CtxPtr R, const FiniteModule& N, int n_max) {
  const Field& k = R->field();
  ExtData X;
  X.R = R;
  X.c = sys.c();
  X.fdeg = sys.fdeg;
  X.n_max = n_max;
  X.RT = rt_context(R, sys.f);
  StandardResolution SR = standard_resolution(sys, R, n_max + 1);
  const ChainComplex& F = SR.complex;
  std::map<std::string, DenseMat> cache;
  std::vector<Cochains> C;
  for (int n = 0; n <= n_max + 1; ++n) C.push_back(cochains(F.term(-n), N));
  // delta[n] : C^n -> C^{n+1}
  std::vector<DenseMat> delta;
  for (int n = 0; n <= n_max; ++n) delta.push_back(precompose(F.diff(-n - 1), N, cache, R->ring()));
  std::vector<Homology> H;
  for (int n = 0; n <= n_max; ++n)
    H.push_back(homology_at(C[n], n > 0 ? &delta[n - 1] : nullptr, &delta[n], k));
  int nx = R->ring().nx();
  for (int n = 0; n <= n_max; ++n) {
    X.ext.push_back(H[n].H);
    std::vector<DenseMat> xs;
    for (int v = 0; v < nx; ++v)
      xs.push_back(induced(block_diag_action(N.x_action(v), C[n].r), H[n], H[n], R->gw()[v], k));
    X.x.push_back(xs);
  }
  for (int n = 0; n <= n_max; ++n) {
    std::vector<DenseMat> ts;
    if (n + 2 <= n_max)
      for (int kk = 0; kk < X.c; ++kk) {
        PolyMatrix op = SR.op[kk].at(-n - 2, F, F);
        ts.push_back(induced(precompose(op, N, cache, R->ring()), H[n], H[n + 2], -X.fdeg[kk], k));
      }
    X.t.push_back(ts);
  }
  auto L = [&](int parity) {
    LevelModule M = X.levels(parity);
    M.L = N.nilpotency();
    return M;
  };
  X.ev = present_module(X.RT, L(0));
  X.odd = present_module(X.RT, L(1));
  return X;
}

LevelModule hom_homology(const ChainComplex& C, const FiniteModule& N, int n) {
  const Field& k = N.ctx()->field();
  std::map<std::string, DenseMat> cache;
  Cochains cn = cochains(C.term(-n), N);
  DenseMat into = precompose(C.diff(-n), N, cache, N.ctx()->ring());
  DenseMat out = precompose(C.diff(-n - 1), N, cache, N.ctx()->ring());
  Homology h = homology_at(cn, &into, &out, k);
  LevelModule M;
  M.L = N.nilpotency();
  M.X.push_back(h.H);
  std::vector<DenseMat> xs;
  for (int v = 0; v < N.ctx()->ring().nx(); ++v) {
    M.xw.push_back(N.ctx()->gw()[v]);
    xs.push_back(induced(block_diag_action(N.x_action(v), cn.r), h, h, N.ctx()->gw()[v], k));
  }
  M.x.push_back(xs);
  return M;
}

ModulePresentation ext_degree_presentation(const ExtData& X, int n) {
  LevelModule M;
  for (int v = 0; v < X.R->ring().nx(); ++v) M.xw.push_back(X.R->gw()[v]);
  M.X.push_back(X.ext.at(n));
  M.x.push_back(X.x.at(n));
  M.L = X.ev.L;
  return present_module(X.R, M);
}

}  // namespace mfci
