#pragma once

#include <optional>
#include <vector>

#include "mfci/field.hpp"

namespace mfci {

// Dense matrix over the base field. F_p storage is uint32 rows driven by the
// SIMD axpy kernel; Q storage is mpq_class.
class DenseMat {
 public:
  DenseMat() = default;
  DenseMat(const Field& f, int rows, int cols);

  const Field& field() const { return f_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  Coeff at(int i, int j) const;
  void set(int i, int j, const Coeff& v);
  void add_to(int i, int j, const Coeff& v);
  bool is_zero() const;
  bool operator==(const DenseMat& o) const;

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref();
  int rank() const;
  // Columns form a basis of {x : A x = 0}.
  DenseMat kernel() const;
  // X with A X = B, if every column of B is in the column space.
  std::optional<DenseMat> solve(const DenseMat& B) const;

  DenseMat transpose() const;
  DenseMat operator*(const DenseMat& o) const;
  DenseMat operator+(const DenseMat& o) const;
  DenseMat operator-(const DenseMat& o) const;
  DenseMat cols_subset(const std::vector<int>& cols) const;
  DenseMat rows_subset(const std::vector<int>& rows) const;
  static DenseMat hstack(const DenseMat& a, const DenseMat& b);
  static DenseMat identity(const Field& f, int n);

  uint32_t* fp_row(int i) { return fp_.data() + size_t(i) * c_; }
  const uint32_t* fp_row(int i) const { return fp_.data() + size_t(i) * c_; }

 private:
  void row_axpy(int dst, int src, int from, const Coeff& s);
  Field f_;
  int r_ = 0, c_ = 0;
  std::vector<uint32_t> fp_;
  std::vector<mpq_class> q_;
};

// Incrementally maintained echelon basis of a subspace of k^n.
class Echelon {
 public:
  Echelon(const Field& f, int n);
  int dim() const { return int(pivots_.size()); }
  int ambient() const { return n_; }
  // Adds v; returns true if it was independent of the current span.
  bool add(const std::vector<Coeff>& v);
  bool contains(const std::vector<Coeff>& v) const;
  std::vector<Coeff> reduce(const std::vector<Coeff>& v) const;
  // Pivot column of each basis row; reduce() zeroes these coordinates.
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  Field f_;
  int n_;
  DenseMat rows_;
  std::vector<int> pivots_;
};

}  // namespace mfci
