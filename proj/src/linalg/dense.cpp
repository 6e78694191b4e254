#include "mfci/dense.hpp"

#include <stdexcept>

#include "mfci/simd.hpp"

namespace mfci {

DenseMat::DenseMat(const Field& f, int rows, int cols) : f_(f), r_(rows), c_(cols) {
  if (f.is_prime())
    fp_.assign(size_t(rows) * cols, 0);
  else
    q_.assign(size_t(rows) * cols, mpq_class(0));
}

Coeff DenseMat::at(int i, int j) const {
  if (f_.is_prime()) return Coeff(fp_[size_t(i) * c_ + j], f_.p());
  return Coeff(q_[size_t(i) * c_ + j]);
}

void DenseMat::set(int i, int j, const Coeff& v) {
  if (f_.is_prime())
    fp_[size_t(i) * c_ + j] = v.fp();
  else
    q_[size_t(i) * c_ + j] = v.q();
}

void DenseMat::add_to(int i, int j, const Coeff& v) { set(i, j, at(i, j) + v); }

bool DenseMat::is_zero() const {
  if (f_.is_prime()) {
    for (auto x : fp_)
      if (x) return false;
    return true;
  }
  for (auto& x : q_)
    if (sgn(x) != 0) return false;
  return true;
}

bool DenseMat::operator==(const DenseMat& o) const {
  return r_ == o.r_ && c_ == o.c_ && f_ == o.f_ && fp_ == o.fp_ && q_ == o.q_;
}

void DenseMat::row_axpy(int dst, int src, int from, const Coeff& s) {
  if (f_.is_prime()) {
    simd::axpy_mod(fp_row(dst) + from, fp_row(src) + from, s.fp(), f_.p(), size_t(c_ - from));
    return;
  }
  for (int j = from; j < c_; ++j) q_[size_t(dst) * c_ + j] += s.q() * q_[size_t(src) * c_ + j];
}

std::vector<int> DenseMat::rref() {
  std::vector<int> piv;
  int rank = 0;
  for (int c = 0; c < c_ && rank < r_; ++c) {
    int pr = -1;
    for (int i = rank; i < r_; ++i)
      if (!at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank) {
      if (f_.is_prime())
        std::swap_ranges(fp_row(pr), fp_row(pr) + c_, fp_row(rank));
      else
        for (int j = 0; j < c_; ++j) std::swap(q_[size_t(pr) * c_ + j], q_[size_t(rank) * c_ + j]);
    }
    Coeff inv = at(rank, c).inv();
    if (f_.is_prime()) {
      simd::scale_mod(fp_row(rank) + c, inv.fp(), f_.p(), size_t(c_ - c));
    } else {
      for (int j = c; j < c_; ++j) q_[size_t(rank) * c_ + j] *= inv.q();
    }
    for (int i = 0; i < r_; ++i) {
      if (i == rank) continue;
      Coeff v = at(i, c);
      if (v.is_zero()) continue;
      row_axpy(i, rank, c, -v);
    }
    piv.push_back(c);
    ++rank;
  }
  return piv;
}

int DenseMat::rank() const {
  DenseMat m = *this;
  return int(m.rref().size());
}

DenseMat DenseMat::kernel() const {
  DenseMat m = *this;
  std::vector<int> piv = m.rref();
  std::vector<char> is_piv(c_, 0);
  for (int p : piv) is_piv[p] = 1;
  std::vector<int> freec;
  for (int j = 0; j < c_; ++j)
    if (!is_piv[j]) freec.push_back(j);
  DenseMat K(f_, c_, int(freec.size()));
  for (size_t k = 0; k < freec.size(); ++k) {
    int fc = freec[k];
    K.set(fc, int(k), f_.one());
    for (size_t r = 0; r < piv.size(); ++r) {
      Coeff v = m.at(int(r), fc);
      if (!v.is_zero()) K.set(piv[r], int(k), -v);
    }
  }
  return K;
}

std::optional<DenseMat> DenseMat::solve(const DenseMat& B) const {
  if (B.rows() != r_) throw std::invalid_argument("solve: row mismatch");
  DenseMat aug = hstack(*this, B);
  std::vector<int> piv = aug.rref();
  DenseMat X(f_, c_, B.cols());
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= c_) return std::nullopt;
    for (int j = 0; j < B.cols(); ++j) X.set(piv[r], j, aug.at(int(r), c_ + j));
  }
  return X;
}

DenseMat DenseMat::transpose() const {
  DenseMat t(f_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.set(j, i, at(i, j));
  return t;
}

DenseMat DenseMat::operator*(const DenseMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("dense product shape");
  DenseMat r(f_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      Coeff a = at(i, k);
      if (a.is_zero()) continue;
      if (f_.is_prime()) {
        simd::axpy_mod(r.fp_row(i), o.fp_row(k), a.fp(), f_.p(), size_t(o.c_));
      } else {
        for (int j = 0; j < o.c_; ++j) r.q_[size_t(i) * o.c_ + j] += a.q() * o.q_[size_t(k) * o.c_ + j];
      }
    }
  return r;
}

DenseMat DenseMat::operator+(const DenseMat& o) const {
  DenseMat r = *this;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
  return r;
}

DenseMat DenseMat::operator-(const DenseMat& o) const {
  DenseMat r = *this;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r.set(i, j, at(i, j) - o.at(i, j));
  return r;
}

DenseMat DenseMat::cols_subset(const std::vector<int>& cols) const {
  DenseMat r(f_, r_, int(cols.size()));
  for (int i = 0; i < r_; ++i)
    for (size_t j = 0; j < cols.size(); ++j) r.set(i, int(j), at(i, cols[j]));
  return r;
}

DenseMat DenseMat::rows_subset(const std::vector<int>& rows) const {
  DenseMat r(f_, int(rows.size()), c_);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < c_; ++j) r.set(int(i), j, at(rows[i], j));
  return r;
}

DenseMat DenseMat::hstack(const DenseMat& a, const DenseMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  DenseMat r(a.f_, a.r_, a.c_ + b.c_);
  for (int i = 0; i < a.r_; ++i) {
    for (int j = 0; j < a.c_; ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.c_; ++j) r.set(i, a.c_ + j, b.at(i, j));
  }
  return r;
}

DenseMat DenseMat::identity(const Field& f, int n) {
  DenseMat r(f, n, n);
  for (int i = 0; i < n; ++i) r.set(i, i, f.one());
  return r;
}

Echelon::Echelon(const Field& f, int n) : f_(f), n_(n), rows_(f, 0, n) {}

std::vector<Coeff> Echelon::reduce(const std::vector<Coeff>& v) const {
  DenseMat tmp(f_, 1, n_);
  for (int j = 0; j < n_; ++j) tmp.set(0, j, v[j]);
  for (size_t r = 0; r < pivots_.size(); ++r) {
    Coeff c = tmp.at(0, pivots_[r]);
    if (c.is_zero()) continue;
    Coeff s = -c;
    if (f_.is_prime()) {
      simd::axpy_mod(tmp.fp_row(0), rows_.fp_row(int(r)), s.fp(), f_.p(), size_t(n_));
    } else {
      for (int j = 0; j < n_; ++j) tmp.set(0, j, tmp.at(0, j) + s * rows_.at(int(r), j));
    }
  }
  std::vector<Coeff> out(n_);
  for (int j = 0; j < n_; ++j) out[j] = tmp.at(0, j);
  return out;
}

bool Echelon::contains(const std::vector<Coeff>& v) const {
  for (auto& c : reduce(v))
    if (!c.is_zero()) return false;
  return true;
}

bool Echelon::add(const std::vector<Coeff>& v) {
  std::vector<Coeff> r = reduce(v);
  int p = -1;
  for (int j = 0; j < n_; ++j)
    if (!r[j].is_zero()) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Coeff inv = r[p].inv();
  DenseMat grown(f_, rows_.rows() + 1, n_);
  for (int i = 0; i < rows_.rows(); ++i)
    for (int j = 0; j < n_; ++j) grown.set(i, j, rows_.at(i, j));
  for (int j = 0; j < n_; ++j) grown.set(rows_.rows(), j, r[j] * inv);
  // Keep earlier rows reduced at the new pivot so reduction order is irrelevant.
  for (int i = 0; i < rows_.rows(); ++i) {
    Coeff c = grown.at(i, p);
    if (c.is_zero()) continue;
    for (int j = 0; j < n_; ++j) grown.set(i, j, grown.at(i, j) - c * grown.at(rows_.rows(), j));
  }
  rows_ = std::move(grown);
  pivots_.push_back(p);
  return true;
}

}  // namespace mfci
