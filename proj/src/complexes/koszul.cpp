#include "mfci/koszul.hpp"

#include <algorithm>

#include "mfci/errors.hpp"

namespace mfci {

std::vector<std::vector<int>> subsets_of_size(int c, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < c; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

KoszulComplex koszul(CtxPtr Q, const std::vector<Poly>& f) {
  int c = int(f.size());
  std::vector<int> deg(c);
  for (int i = 0; i < c; ++i)
    if (!f[i].homogeneous(Q->gw(), &deg[i])) throw InhomogeneousInput("koszul: f_" + std::to_string(i + 1));
  std::vector<std::vector<std::vector<int>>> byk(c + 1);
  std::vector<FreeModule> mods(c + 1);
  for (int k = 0; k <= c; ++k) {
    byk[k] = subsets_of_size(c, k);
    for (auto& S : byk[k]) {
      int d = 0;
      for (int s : S) d += deg[s];
      mods[k].tw.push_back(-d);
    }
  }
  auto index = [&](int k, const std::vector<int>& S) {
    return int(std::lower_bound(byk[k].begin(), byk[k].end(), S) - byk[k].begin());
  };
  KoszulComplex K;
  std::vector<FreeModule> terms;
  std::vector<PolyMatrix> d;
  for (int k = c; k >= 0; --k) terms.push_back(mods[k]);
  for (int k = c; k >= 1; --k) {
    PolyMatrix m(mods[k], mods[k - 1], 0);
    for (size_t j = 0; j < byk[k].size(); ++j) {
      const auto& S = byk[k][j];
      for (int t = 0; t < k; ++t) {
        std::vector<int> rest = S;
        rest.erase(rest.begin() + t);
        Poly e = t % 2 ? -f[S[t]] : f[S[t]];
        m.at(index(k - 1, rest), int(j)) = e;
      }
    }
    d.push_back(m);
  }
  K.complex = ChainComplex(Q, -c, terms, d);
  for (int k = 0; k <= c; ++k)
    for (auto& S : byk[k]) K.subsets.push_back(S);
  K.mult.assign(c, {});
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < c; ++k) {
      PolyMatrix m(mods[k], mods[k + 1], deg[i]);
      for (size_t j = 0; j < byk[k].size(); ++j) {
        const auto& S = byk[k][j];
        if (std::find(S.begin(), S.end(), i) != S.end()) continue;
        int before = int(std::count_if(S.begin(), S.end(), [&](int s) { return s < i; }));
        std::vector<int> T = S;
        T.insert(T.begin() + before, i);
        m.at(index(k + 1, T), int(j)) = before % 2 ? -Q->one() : Q->one();
      }
      K.mult[i].push_back(m);
    }
  return K;
}

}  // namespace mfci
