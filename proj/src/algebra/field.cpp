#include "mfci/field.hpp"

#include "mfci/errors.hpp"

namespace mfci {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("inverse of zero in F_p");
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

static void same_field(const Coeff& a, const Coeff& b) {
  if (a.modulus() != b.modulus()) throw FieldMismatch("coefficients from different fields");
}

bool Coeff::is_zero() const { return is_fp() ? fp() == 0 : sgn(q()) == 0; }
bool Coeff::is_one() const { return is_fp() ? fp() == 1 : q() == 1; }
bool Coeff::is_minus_one() const { return is_fp() ? fp() + 1 == modulus() : q() == -1; }

Coeff Coeff::operator+(const Coeff& o) const {
  same_field(*this, o);
  if (is_fp()) {
    uint32_t p = modulus();
    uint64_t s = uint64_t(fp()) + o.fp();
    return Coeff(static_cast<uint32_t>(s >= p ? s - p : s), p);
  }
  return Coeff(mpq_class(q() + o.q()));
}

Coeff Coeff::operator-(const Coeff& o) const {
  same_field(*this, o);
  if (is_fp()) {
    uint32_t p = modulus();
    return Coeff(fp() >= o.fp() ? fp() - o.fp() : p - (o.fp() - fp()), p);
  }
  return Coeff(mpq_class(q() - o.q()));
}

Coeff Coeff::operator*(const Coeff& o) const {
  same_field(*this, o);
  if (is_fp()) {
    uint32_t p = modulus();
    return Coeff(static_cast<uint32_t>(uint64_t(fp()) * o.fp() % p), p);
  }
  return Coeff(mpq_class(q() * o.q()));
}

Coeff Coeff::operator-() const {
  if (is_fp()) return Coeff(fp() == 0 ? 0 : modulus() - fp(), modulus());
  return Coeff(mpq_class(-q()));
}

Coeff Coeff::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  if (is_fp()) return Coeff(inv_mod(fp(), modulus()), modulus());
  return Coeff(mpq_class(1 / q()));
}

bool Coeff::operator==(const Coeff& o) const {
  if (modulus() != o.modulus()) return false;
  return is_fp() ? fp() == o.fp() : q() == o.q();
}

bool Coeff::negative() const {
  if (is_fp()) return fp() > modulus() / 2;
  return sgn(q()) < 0;
}

std::string Coeff::str() const {
  if (is_fp()) {
    if (negative()) return "-" + std::to_string(modulus() - fp());
    return std::to_string(fp());
  }
  return q().get_str();
}

Field::Field(uint32_t p) : p_(p) {
  if (!is_prime_u32(p) || p >= (1u << 31)) throw std::invalid_argument("field characteristic must be a prime < 2^31");
}

Coeff Field::from_int(long v) const {
  if (!p_) return Coeff(mpq_class(v));
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Coeff(static_cast<uint32_t>(r), p_);
}

Coeff Field::from_rational(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (!p_) return Coeff(mpq_class(num, den));
  mpz_class n = num % p_, d = den % p_;
  if (n < 0) n += p_;
  if (d < 0) d += p_;
  if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
  Coeff cn(static_cast<uint32_t>(n.get_ui()), p_), cd(static_cast<uint32_t>(d.get_ui()), p_);
  return cn * cd.inv();
}

}  // namespace mfci
