#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mfci/field.hpp"

namespace mfci {

constexpr int kMaxVars = 12;

// Exponent vector with its order-weighted degree cached. The order weights
// belong to the ring, so a monomial is only meaningful inside one ring family
// (rings that extend each other by appending variables share monomials).
struct Monomial {
  int32_t deg = 0;
  std::array<uint16_t, kMaxVars> e{};

  bool is_one() const { return deg == 0 && e == std::array<uint16_t, kMaxVars>{}; }
  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// Graded reverse lexicographic comparison on (deg, exponents): >0 if a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.deg = a.deg + b.deg;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

// b / a, assuming a | b.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r;
  r.deg = b.deg - a.deg;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 1469598103934665603ULL;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ULL;
    return static_cast<size_t>(h);
  }
};

enum class VarKind : uint8_t { X, T, Aux };

// Polynomial ring k[x_1..x_n][T_1..T_c][aux]. Variables appear in that order.
// x-variables carry positive degrees; T-variables have degree 1 in the
// T-grading and degree 0 in the x-grading. The monomial order is grevlex with
// weights (x: degree, T: 1, aux: 1).
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> xnames, std::vector<int> xdegrees,
           std::vector<std::string> tnames = {}, std::vector<std::string> auxnames = {});

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  int nx() const { return nx_; }
  int nt() const { return nt_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  VarKind kind(int i) const { return kinds_[i]; }
  int order_weight(int i) const { return ow_[i]; }
  int xdegree(int i) const { return kinds_[i] == VarKind::X ? ow_[i] : 0; }
  const std::vector<int>& order_weights() const { return ow_; }
  int var_index(const std::string& name) const;  // -1 if absent

  // Same field and x-block; T-block appended (names T_1..T_c by default).
  std::shared_ptr<PolyRing> with_t(int c) const;
  std::shared_ptr<PolyRing> with_aux(const std::string& name) const;
  std::shared_ptr<PolyRing> x_part() const;

  Monomial var(int i, int exp = 1) const;
  Monomial monomial(const std::vector<int>& exps) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  int weighted(const Monomial& m, const std::vector<int>& w) const;
  int xdeg(const Monomial& m) const;
  int tdeg(const Monomial& m) const;

  bool same_as(const PolyRing& o) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<VarKind> kinds_;
  std::vector<int> ow_;
  int nx_ = 0, nt_ = 0;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial m;
  Coeff c;
};

// Sparse polynomial: terms sorted strictly decreasing in grevlex, no zero
// coefficients. Carries no ring pointer; the ring is supplied where needed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Term> t) : t_(std::move(t)) {}
  static Poly constant(const Coeff& c);
  static Poly monomial(const Monomial& m, const Coeff& c);
  static Poly from_unsorted(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lead() const { return t_.front(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  Coeff constant_term() const;  // requires nonzero poly or a field via other means

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly scale(const Coeff& c) const;
  Poly mul_term(const Monomial& m, const Coeff& c) const;
  Poly monic() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Weighted degree of every term equal to d (true for zero).
  bool homogeneous(const std::vector<int>& w, int* deg = nullptr) const;
  int max_weighted(const std::vector<int>& w) const;

  std::string str(const PolyRing& r) const;

 private:
  std::vector<Term> t_;
};

Poly parse_poly(const std::string& s, const PolyRing& r);
Coeff parse_coeff(const std::string& s, const Field& f);

// Map a polynomial along a substitution of variables by polynomials in a target
// ring. image[i] is the image of variable i.
Poly substitute(const Poly& p, const std::vector<Poly>& image, const PolyRing& target);
// Evaluate all T-variables at 1.
Poly set_t_to_one(const Poly& p, const PolyRing& r);
// Coefficient extraction: p = sum_a p_a T^a with p_a free of T-variables.
std::vector<std::pair<Monomial, Poly>> split_t(const Poly& p, const PolyRing& r);

}  // namespace mfci
