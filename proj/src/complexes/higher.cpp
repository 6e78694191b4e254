#include "mfci/higher.hpp"

#include "mfci/errors.hpp"
#include "mfci/groebner.hpp"
#include "mfci/homotopy.hpp"
#include "mfci/parallel.hpp"

namespace mfci {

int weight(const MultiIndex& J) {
  int s = 0;
  for (int v : J) s += v;
  return s;
}

std::vector<MultiIndex> multi_indices(int c, int n) {
  std::vector<MultiIndex> out;
  MultiIndex cur(c, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == c - 1) {
      cur[k] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[k] = a;
      self(self, k + 1, left - a);
    }
  };
  if (c > 0)
    rec(rec, 0, n);
  else if (n == 0)
    out.push_back(cur);
  return out;
}

std::string multi_index_str(const MultiIndex& J) {
  std::string s = "(";
  for (size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
  return s + ")";
}

static int mdeg_of(const MultiIndex& J, const std::vector<int>& fdeg) {
  int d = 0;
  for (size_t i = 0; i < J.size(); ++i) d += J[i] * fdeg[i];
  return d;
}

ChainMap HigherHomotopySystem::map(const MultiIndex& J) const {
  int w = weight(J);
  if (w == 0) {
    ChainMap d;
    d.deg = 1;
    for (int i = G.lo; i < G.hi(); ++i) d.comp[i] = G.diff(i);
    return d;
  }
  auto it = sigma.find(J);
  if (it != sigma.end()) return it->second;
  ChainMap z;
  z.deg = 1 - 2 * w;
  z.mdeg = mdeg_of(J, fdeg);
  return z;
}

PolyMatrix HigherHomotopySystem::component(const MultiIndex& J, int j) const {
  return map(J).at(-j, G, G);
}

// -sum over J' + J'' = J with both parts nonzero of sigma^J' sigma^J''.
static ChainMap obstruction(const HigherHomotopySystem& s, const MultiIndex& J, bool include_ends) {
  const ChainComplex& G = s.G;
  int c = s.c();
  ChainMap acc;
  acc.deg = 2 - 2 * weight(J);
  acc.mdeg = mdeg_of(J, s.fdeg);
  for (int i = G.lo; i <= G.hi(); ++i)
    if (G.in_window(i + acc.deg)) acc.comp[i] = PolyMatrix(G.term(i), G.term(i + acc.deg), acc.mdeg);
  // enumerate J' <= J componentwise
  MultiIndex Jp(c, 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == c) {
      int w1 = weight(Jp), w = weight(J);
      if (!include_ends && (w1 == 0 || w1 == w)) return;
      MultiIndex Jpp(c);
      for (int t = 0; t < c; ++t) Jpp[t] = J[t] - Jp[t];
      ChainMap a = s.map(Jp), b = s.map(Jpp);
      if (a.comp.empty() || b.comp.empty()) return;
      acc = add(acc, compose(a, b, G, G, G), G, G);
      return;
    }
    for (int v = 0; v <= J[k]; ++v) {
      Jp[k] = v;
      self(self, k + 1);
    }
    Jp[k] = 0;
  };
  rec(rec, 0);
  return acc;
}

HigherHomotopySystem higher_homotopies(const ChainComplex& G, const std::vector<Poly>& f) {
  const RingCtx& Q = *G.ctx;
  HigherHomotopySystem s;
  s.G = G;
  s.f = f;
  for (auto& p : f) {
    int d = 0;
    if (!p.homogeneous(Q.gw(), &d)) throw InhomogeneousInput("higher_homotopies: f is not homogeneous");
    s.fdeg.push_back(d);
  }
  int L = s.length(), c = s.c();
  s.jmax = (L + 1) / 2;
  if (G.hi() != 0) throw std::invalid_argument("higher_homotopies: G must end in degree 0");
  // f_i H^0(G) = 0
  if (G.rank(0) > 0) {
    for (int i = 0; i < c; ++i) {
      if (L == 0) {
        if (!Q.nf(f[i]).is_zero()) throw NotAnRModule("f_" + std::to_string(i + 1) + " does not annihilate M");
        continue;
      }
      Lifter Lf(Q, G.diff(-1));
      for (int k = 0; k < G.rank(0); ++k) {
        std::vector<Poly> e(G.rank(0));
        e[k] = f[i];
        if (!Lf.in_image(e)) throw NotAnRModule("f_" + std::to_string(i + 1) + " does not annihilate M");
      }
    }
  }
  for (int n = 1; n <= s.jmax; ++n) {
    auto Js = multi_indices(c, n);
    std::vector<ChainMap> res(Js.size());
    parallel_for(Js.size(), [&](size_t k) {
      const MultiIndex& J = Js[k];
      ChainMap g;
      if (n == 1) {
        int i = 0;
        while (J[i] == 0) ++i;
        g = scalar_map(G, f[i], s.fdeg[i]);
      } else {
        ChainMap o = obstruction(s, J, false);
        g = o;
        for (auto& [deg, m] : g.comp) m = -m;
      }
      try {
        res[k] = nullhomotopy(g, G, G);
      } catch (const NotNullhomotopic& e) {
        throw LiftObstruction("sigma" + multi_index_str(J) + ": " + e.what());
      }
    });
    for (size_t k = 0; k < Js.size(); ++k) s.sigma[Js[k]] = res[k];
  }
  std::string where;
  if (!check_higher_homotopies(s, &where)) throw LiftObstruction("higher homotopy check failed at " + where);
  return s;
}

HigherHomotopySystem koszul_homotopies(const KoszulComplex& K, const std::vector<Poly>& a, const std::vector<Poly>& f) {
  const ChainComplex& G = K.complex;
  const RingCtx& Q = *G.ctx;
  HigherHomotopySystem s;
  s.G = G;
  s.f = f;
  for (auto& p : f) {
    int d = 0;
    p.homogeneous(Q.gw(), &d);
    s.fdeg.push_back(d);
  }
  int c = s.c(), r = int(a.size());
  s.jmax = (r + 1) / 2;
  FreeModule src;
  for (auto& p : a) {
    int d = 0;
    p.homogeneous(Q.gw(), &d);
    src.tw.push_back(-d);
  }
  PolyMatrix A(src, FreeModule::free(1), 0);
  for (int k = 0; k < r; ++k) A.at(0, k) = a[k];
  Lifter L(Q, A);
  for (int i = 0; i < c; ++i) {
    auto coef = L.try_lift({f[i]});
    if (!coef) throw NotAnRModule("f_" + std::to_string(i + 1) + " is not in the ideal (a)");
    ChainMap m;
    m.deg = -1;
    m.mdeg = s.fdeg[i];
    for (int k = 0; k < r; ++k) {
      // wedge C^{-k} -> C^{-k-1}
      PolyMatrix acc(G.term(-k), G.term(-k - 1), s.fdeg[i]);
      for (int t = 0; t < r; ++t)
        if (!(*coef)[t].is_zero()) acc = acc + K.mult[t][k].scale((*coef)[t]);
      m.comp[-k] = acc;
    }
    MultiIndex J(c, 0);
    J[i] = 1;
    s.sigma[J] = m;
  }
  return s;
}

bool check_higher_homotopies(const HigherHomotopySystem& s, std::string* where) {
  const ChainComplex& G = s.G;
  const RingCtx& Q = *G.ctx;
  int c = s.c();
  for (int n = 1; n <= s.jmax + 1; ++n)
    for (auto& J : multi_indices(c, n)) {
      ChainMap lhs = obstruction(s, J, true);
      int unit = -1;
      if (n == 1)
        for (int i = 0; i < c; ++i)
          if (J[i]) unit = i;
      for (int i = G.lo; i <= G.hi(); ++i) {
        if (!G.in_window(i + lhs.deg)) continue;
        PolyMatrix m = lhs.at(i, G, G);
        if (unit >= 0) m = m - PolyMatrix::scalar(G.term(i), s.f[unit], s.fdeg[unit]);
        if (!m.nf(Q).is_zero()) {
          if (where) *where = "J=" + multi_index_str(J) + " degree " + std::to_string(i);
          return false;
        }
      }
    }
  return true;
}

}  // namespace mfci
