#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace mfci {

struct Fp {
  uint32_t v;
  uint32_t p;
};

// Exact coefficient: an element of F_p (value carries its modulus) or of Q.
class Coeff {
 public:
  Coeff() : d_(Fp{0, 0}) {}
  Coeff(uint32_t v, uint32_t p) : d_(Fp{v % p, p}) {}
  explicit Coeff(mpq_class q) : d_(std::move(q)) { std::get<1>(d_).canonicalize(); }

  bool is_fp() const { return d_.index() == 0; }
  uint32_t modulus() const { return is_fp() ? std::get<0>(d_).p : 0; }
  uint32_t fp() const { return std::get<0>(d_).v; }
  const mpq_class& q() const { return std::get<1>(d_); }

  bool is_zero() const;
  bool is_one() const;
  bool is_minus_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator-() const;
  Coeff inv() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  // F_p elements print with the symmetric representative in (-p/2, p/2].
  std::string str() const;
  bool negative() const;

 private:
  std::variant<Fp, mpq_class> d_;
};

// The base field k: F_p with p prime < 2^31, or Q (p == 0).
class Field {
 public:
  Field() : p_(101) {}
  explicit Field(uint32_t p);
  static Field rationals() {
    Field f;
    f.p_ = 0;
    return f;
  }

  bool is_prime() const { return p_ != 0; }
  uint32_t p() const { return p_; }
  Coeff zero() const { return p_ ? Coeff(0, p_) : Coeff(mpq_class(0)); }
  Coeff one() const { return from_int(1); }
  Coeff from_int(long v) const;
  Coeff from_rational(const mpz_class& num, const mpz_class& den) const;
  bool operator==(const Field& o) const { return p_ == o.p_; }
  std::string str() const { return p_ ? "GF(" + std::to_string(p_) + ")" : "QQ"; }

 private:
  uint32_t p_;
};

bool is_prime_u32(uint32_t n);
uint32_t inv_mod(uint32_t a, uint32_t p);

}  // namespace mfci
