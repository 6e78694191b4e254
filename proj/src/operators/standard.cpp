#include "mfci/operators.hpp"

#include <algorithm>
#include <map>

namespace mfci {

std::vector<MultiIndex> dual_basis(int c, int m) {
  if (m < 0) return {};
  if (c == 0) return m == 0 ? std::vector<MultiIndex>{MultiIndex{}} : std::vector<MultiIndex>{};
  std::vector<MultiIndex> out = multi_indices(c, m);
  // grevlex among equal degree: larger when the last differing exponent is smaller
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

int dual_rank(int c, int m) { return int(dual_basis(c, m).size()); }

namespace {

struct BasisIndex {
  std::vector<MultiIndex> basis;
  std::map<MultiIndex, int> index;
};

const BasisIndex& basis_index(int c, int m) {
  thread_local std::map<std::pair<int, int>, BasisIndex> cache;
  auto key = std::make_pair(c, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BasisIndex b;
  b.basis = dual_basis(c, m);
  for (size_t k = 0; k < b.basis.size(); ++k) b.index[b.basis[k]] = int(k);
  return cache.emplace(key, std::move(b)).first->second;
}

int shift_weight(const MultiIndex& b, const std::vector<int>& fdeg) {
  int s = 0;
  for (size_t k = 0; k < b.size(); ++k) s += b[k] * fdeg[k];
  return s;
}

}  // namespace

StandardResolution standard_resolution(const HigherHomotopySystem& sys, CtxPtr R, int n_max) {
  const RingCtx& r = *R;
  int c = sys.c(), L = sys.length();
  StandardResolution out;
  out.n_max = n_max;
  out.blocks.resize(n_max + 1);
  std::vector<FreeModule> F(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    for (int i = n % 2; i <= std::min(n, L); i += 2) {
      int m = (n - i) / 2;
      FreeModule G = sys.G.term(-i);
      const auto& B = basis_index(c, m);
      out.blocks[n].push_back({i, m, F[n].rank()});
      for (int g = 0; g < G.rank(); ++g)
        for (auto& b : B.basis) F[n].tw.push_back(G.tw[g] - shift_weight(b, sys.fdeg));
    }
  auto find_block = [&](int n, int i) -> const DualBlock* {
    for (auto& bl : out.blocks[n])
      if (bl.i == i) return &bl;
    return nullptr;
  };
  // d[n] : F_n -> F_{n-1}
  std::vector<PolyMatrix> d(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    PolyMatrix M(F[n], F[n - 1], 0);
    for (auto& src : out.blocks[n]) {
      const auto& SB = basis_index(c, src.m);
      for (int w = 0; w <= std::min(src.m, sys.jmax); ++w) {
        int ti = src.i + 2 * w - 1;
        if (ti < 0 || ti > L) continue;
        const DualBlock* tgt = find_block(n - 1, ti);
        if (!tgt) continue;
        const auto& TB = basis_index(c, tgt->m);
        for (auto& J : multi_indices(c, w)) {
          PolyMatrix s = sys.component(J, src.i);
          for (int gp = 0; gp < s.rows(); ++gp)
            for (int g = 0; g < s.cols(); ++g) {
              const Poly& e = s.at(gp, g);
              if (e.is_zero()) continue;
              for (size_t bi = 0; bi < SB.basis.size(); ++bi) {
                MultiIndex b = SB.basis[bi];
                bool ok = true;
                for (int k = 0; k < c && ok; ++k) ok = (b[k] -= J[k]) >= 0;
                if (!ok) continue;
                int row = tgt->offset + gp * int(TB.basis.size()) + TB.index.at(b);
                int col = src.offset + g * int(SB.basis.size()) + int(bi);
                M.at(row, col) += e;
              }
            }
        }
      }
    }
    d[n] = M;
  }
  std::vector<FreeModule> terms;
  std::vector<PolyMatrix> dq, dr;
  for (int n = n_max; n >= 0; --n) terms.push_back(F[n]);
  for (int n = n_max; n >= 1; --n) {
    dq.push_back(d[n]);
    dr.push_back(d[n].nf(r));
  }
  out.lift = ChainComplex(sys.G.ctx, -n_max, terms, dq);
  out.complex = ChainComplex(R, -n_max, terms, dr);

  for (int k = 0; k < c; ++k) {
    ChainMap op;
    op.deg = 2;
    op.mdeg = -sys.fdeg[k];
    for (int n = 2; n <= n_max; ++n) {
      PolyMatrix M(F[n], F[n - 2], op.mdeg);
      for (auto& src : out.blocks[n]) {
        if (src.m == 0) continue;
        const DualBlock* tgt = find_block(n - 2, src.i);
        const auto &SB = basis_index(c, src.m), &TB = basis_index(c, src.m - 1);
        int rk = sys.G.term(-src.i).rank();
        for (size_t bi = 0; bi < SB.basis.size(); ++bi) {
          MultiIndex b = SB.basis[bi];
          if (b[k] == 0) continue;
          b[k] -= 1;
          for (int g = 0; g < rk; ++g)
            M.at(tgt->offset + g * int(TB.basis.size()) + TB.index.at(b), src.offset + g * int(SB.basis.size()) + int(bi)) =
                r.one();
        }
      }
      op.comp[-n] = M;
    }
    out.op.push_back(op);
  }
  return out;
}

}  // namespace mfci
