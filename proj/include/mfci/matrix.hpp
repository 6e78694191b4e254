#pragma once

#include <string>
#include <vector>

#include "mfci/ringctx.hpp"

namespace mfci {

// Graded free module: generator i has degree -tw[i], so S(j) has twist j.
// itw optionally holds the internal-grading twists (empty when untracked).
struct FreeModule {
  std::vector<int> tw;
  std::vector<int> itw;

  FreeModule() = default;
  explicit FreeModule(std::vector<int> t, std::vector<int> it = {}) : tw(std::move(t)), itw(std::move(it)) {}
  static FreeModule free(int n) { return FreeModule(std::vector<int>(n, 0)); }

  int rank() const { return static_cast<int>(tw.size()); }
  bool has_internal() const { return !itw.empty() || tw.empty(); }
  FreeModule twisted(int n, int internal = 0) const;
  FreeModule dual() const;
  bool operator==(const FreeModule& o) const { return tw == o.tw && itw == o.itw; }
  bool operator!=(const FreeModule& o) const { return !(*this == o); }
};

FreeModule direct_sum(const std::vector<FreeModule>& parts);
FreeModule tensor(const FreeModule& a, const FreeModule& b);

// Matrix of a homogeneous map src -> tgt (acting on columns). Entry (i,j) of a
// degree-d map has degree tgt.tw[i] - src.tw[j] + d.
class PolyMatrix {
 public:
  FreeModule src, tgt;
  int deg = 0;

  PolyMatrix() = default;
  PolyMatrix(FreeModule s, FreeModule t, int d = 0)
      : src(std::move(s)), tgt(std::move(t)), deg(d), e_(size_t(tgt.rank()) * src.rank()) {}
  static PolyMatrix identity(const FreeModule& m, const Poly& one);
  static PolyMatrix scalar(const FreeModule& m, const Poly& c, int deg = 0);

  int rows() const { return tgt.rank(); }
  int cols() const { return src.rank(); }
  Poly& at(int i, int j) { return e_[size_t(i) * cols() + j]; }
  const Poly& at(int i, int j) const { return e_[size_t(i) * cols() + j]; }
  const std::vector<Poly>& entries() const { return e_; }

  std::vector<Poly> column(int j) const;
  void set_column(int j, const std::vector<Poly>& v);

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix scale(const Poly& c) const;
  PolyMatrix scale(const Coeff& c) const;
  PolyMatrix nf(const RingCtx& ctx) const;
  PolyMatrix transpose() const;
  PolyMatrix with_modules(FreeModule s, FreeModule t, int d) const;

  bool is_zero() const;
  // Equal entries (modules not compared).
  bool same_entries(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const { return src == o.src && tgt == o.tgt && deg == o.deg && same_entries(o); }

  // Returns false and sets (bi, bj) to the first offending entry.
  bool homogeneous(const std::vector<int>& w, int* bi = nullptr, int* bj = nullptr) const;
  bool internally_homogeneous(const std::vector<int>& iw, int* bi = nullptr, int* bj = nullptr) const;

  std::vector<std::vector<std::string>> grid(const PolyRing& r) const;
  std::string str(const PolyRing& r) const;

 private:
  std::vector<Poly> e_;
};

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);
// Block matrix from a grid of blocks; rows of blocks share targets, columns share sources.
PolyMatrix block_matrix(const std::vector<std::vector<PolyMatrix>>& blocks, int deg = 0);
PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
PolyMatrix hstack(const std::vector<PolyMatrix>& parts);

}  // namespace mfci
