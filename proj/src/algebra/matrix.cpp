#include "mfci/matrix.hpp"

#include <sstream>

#include "mfci/errors.hpp"

namespace mfci {

FreeModule FreeModule::twisted(int n, int internal) const {
  FreeModule r = *this;
  for (auto& t : r.tw) t += n;
  for (auto& t : r.itw) t += internal;
  return r;
}

FreeModule FreeModule::dual() const {
  FreeModule r = *this;
  for (auto& t : r.tw) t = -t;
  for (auto& t : r.itw) t = -t;
  return r;
}

FreeModule direct_sum(const std::vector<FreeModule>& parts) {
  FreeModule r;
  bool internal = true;
  for (auto& p : parts) internal = internal && p.has_internal();
  for (auto& p : parts) {
    r.tw.insert(r.tw.end(), p.tw.begin(), p.tw.end());
    if (internal) r.itw.insert(r.itw.end(), p.itw.begin(), p.itw.end());
  }
  return r;
}

FreeModule tensor(const FreeModule& a, const FreeModule& b) {
  FreeModule r;
  bool internal = a.has_internal() && b.has_internal();
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) {
      r.tw.push_back(a.tw[i] + b.tw[j]);
      if (internal) r.itw.push_back(a.itw[i] + b.itw[j]);
    }
  return r;
}

PolyMatrix PolyMatrix::identity(const FreeModule& m, const Poly& one) { return scalar(m, one, 0); }

PolyMatrix PolyMatrix::scalar(const FreeModule& m, const Poly& c, int deg) {
  PolyMatrix r(m, m, deg);
  for (int i = 0; i < m.rank(); ++i) r.at(i, i) = c;
  return r;
}

std::vector<Poly> PolyMatrix::column(int j) const {
  std::vector<Poly> v(rows());
  for (int i = 0; i < rows(); ++i) v[i] = at(i, j);
  return v;
}

void PolyMatrix::set_column(int j, const std::vector<Poly>& v) {
  for (int i = 0; i < rows(); ++i) at(i, j) = v[i];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols() != o.rows()) throw DimensionMismatch("matrix product " + std::to_string(rows()) + "x" +
                                                  std::to_string(cols()) + " * " + std::to_string(o.rows()) +
                                                  "x" + std::to_string(o.cols()));
  PolyMatrix r(o.src, tgt, deg + o.deg);
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols(); ++j) {
        const Poly& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) throw DimensionMismatch("matrix sum");
  PolyMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) throw DimensionMismatch("matrix difference");
  PolyMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

PolyMatrix PolyMatrix::scale(const Poly& c) const {
  PolyMatrix r = *this;
  for (auto& x : r.e_) x = x * c;
  return r;
}

PolyMatrix PolyMatrix::scale(const Coeff& c) const {
  PolyMatrix r = *this;
  for (auto& x : r.e_) x = x.scale(c);
  return r;
}

PolyMatrix PolyMatrix::nf(const RingCtx& ctx) const {
  PolyMatrix r = *this;
  if (!ctx.is_quotient()) return r;
  for (auto& x : r.e_) x = ctx.nf(x);
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(tgt.dual(), src.dual(), deg);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::with_modules(FreeModule s, FreeModule t, int d) const {
  if (s.rank() != cols() || t.rank() != rows()) throw DimensionMismatch("with_modules");
  PolyMatrix r = *this;
  r.src = std::move(s);
  r.tgt = std::move(t);
  r.deg = d;
  return r;
}

bool PolyMatrix::is_zero() const {
  for (auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool PolyMatrix::same_entries(const PolyMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

static bool check_deg(const PolyMatrix& m, const std::vector<int>& w, const std::vector<int>& st,
                      const std::vector<int>& tt, int d, int* bi, int* bj) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Poly& p = m.at(i, j);
      if (p.is_zero()) continue;
      int want = tt[i] - st[j] + d, got = 0;
      if (!p.homogeneous(w, &got) || got != want) {
        if (bi) *bi = i;
        if (bj) *bj = j;
        return false;
      }
    }
  return true;
}

bool PolyMatrix::homogeneous(const std::vector<int>& w, int* bi, int* bj) const {
  return check_deg(*this, w, src.tw, tgt.tw, deg, bi, bj);
}

bool PolyMatrix::internally_homogeneous(const std::vector<int>& iw, int* bi, int* bj) const {
  if (!src.has_internal() || !tgt.has_internal()) return true;
  return check_deg(*this, iw, src.itw, tgt.itw, 0, bi, bj);
}

std::vector<std::vector<std::string>> PolyMatrix::grid(const PolyRing& r) const {
  std::vector<std::vector<std::string>> g(rows(), std::vector<std::string>(cols()));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) g[i][j] = at(i, j).str(r);
  return g;
}

std::string PolyMatrix::str(const PolyRing& r) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols(); ++j) os << (j ? ", " : "") << at(i, j).str(r);
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(tensor(a.src, b.src), tensor(a.tgt, b.tgt), a.deg + b.deg);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Poly& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const Poly& y = b.at(k, l);
          if (!y.is_zero()) r.at(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return r;
}

PolyMatrix block_matrix(const std::vector<std::vector<PolyMatrix>>& blocks, int deg) {
  if (blocks.empty()) return PolyMatrix();
  size_t br = blocks.size(), bc = blocks[0].size();
  std::vector<FreeModule> srcs(bc), tgts(br);
  for (size_t j = 0; j < bc; ++j) srcs[j] = blocks[0][j].src;
  for (size_t i = 0; i < br; ++i) tgts[i] = blocks[i][0].tgt;
  PolyMatrix r(direct_sum(srcs), direct_sum(tgts), deg);
  int r0 = 0;
  for (size_t i = 0; i < br; ++i) {
    int c0 = 0;
    for (size_t j = 0; j < bc; ++j) {
      const PolyMatrix& b = blocks[i][j];
      if (b.rows() != tgts[i].rank() || b.cols() != srcs[j].rank())
        throw DimensionMismatch("block_matrix block shape");
      for (int a = 0; a < b.rows(); ++a)
        for (int c = 0; c < b.cols(); ++c) r.at(r0 + a, c0 + c) = b.at(a, c);
      c0 += srcs[j].rank();
    }
    r0 += tgts[i].rank();
  }
  return r;
}

static FreeModule pick(const FreeModule& m, const std::vector<int>& idx) {
  FreeModule r;
  for (int i : idx) {
    r.tw.push_back(m.tw[i]);
    if (!m.itw.empty()) r.itw.push_back(m.itw[i]);
  }
  return r;
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMatrix r(pick(m.src, cols), pick(m.tgt, rows), m.deg);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) r.at(int(i), int(j)) = m.at(rows[i], cols[j]);
  return r;
}

PolyMatrix hstack(const std::vector<PolyMatrix>& parts) {
  std::vector<std::vector<PolyMatrix>> b(1, parts);
  return block_matrix(b, parts.empty() ? 0 : parts[0].deg);
}

}  // namespace mfci
