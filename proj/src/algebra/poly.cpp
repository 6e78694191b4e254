#include "mfci/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "mfci/errors.hpp"

namespace mfci {

PolyRing::PolyRing(Field field, std::vector<std::string> xnames, std::vector<int> xdegrees,
                   std::vector<std::string> tnames, std::vector<std::string> auxnames)
    : field_(field) {
  if (xnames.size() != xdegrees.size()) throw std::invalid_argument("variable/degree count mismatch");
  for (size_t i = 0; i < xnames.size(); ++i) {
    if (xdegrees[i] < 1) throw std::invalid_argument("variable degrees must be >= 1");
    names_.push_back(xnames[i]);
    kinds_.push_back(VarKind::X);
    ow_.push_back(xdegrees[i]);
  }
  for (auto& n : tnames) {
    names_.push_back(n);
    kinds_.push_back(VarKind::T);
    ow_.push_back(1);
  }
  for (auto& n : auxnames) {
    names_.push_back(n);
    kinds_.push_back(VarKind::Aux);
    ow_.push_back(1);
  }
  nx_ = static_cast<int>(xnames.size());
  nt_ = static_cast<int>(tnames.size());
  if (nvars() > kMaxVars) throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
  for (int i = 0; i < nvars(); ++i)
    for (int j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name " + names_[i]);
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::shared_ptr<PolyRing> PolyRing::with_t(int c) const {
  std::vector<std::string> xn(names_.begin(), names_.begin() + nx_);
  std::vector<int> xd(ow_.begin(), ow_.begin() + nx_);
  std::vector<std::string> tn;
  for (int i = 1; i <= c; ++i) tn.push_back("T_" + std::to_string(i));
  return std::make_shared<PolyRing>(field_, xn, xd, tn);
}

std::shared_ptr<PolyRing> PolyRing::with_aux(const std::string& name) const {
  std::vector<std::string> xn(names_.begin(), names_.begin() + nx_);
  std::vector<int> xd(ow_.begin(), ow_.begin() + nx_);
  std::vector<std::string> tn, an;
  for (int i = nx_; i < nvars(); ++i) (kinds_[i] == VarKind::T ? tn : an).push_back(names_[i]);
  an.push_back(name);
  return std::make_shared<PolyRing>(field_, xn, xd, tn, an);
}

std::shared_ptr<PolyRing> PolyRing::x_part() const {
  std::vector<std::string> xn(names_.begin(), names_.begin() + nx_);
  std::vector<int> xd(ow_.begin(), ow_.begin() + nx_);
  return std::make_shared<PolyRing>(field_, xn, xd);
}

Monomial PolyRing::var(int i, int exp) const {
  Monomial m;
  m.e[i] = static_cast<uint16_t>(exp);
  m.deg = ow_[i] * exp;
  return m;
}

Monomial PolyRing::monomial(const std::vector<int>& exps) const {
  Monomial m;
  for (size_t i = 0; i < exps.size(); ++i) {
    m.e[i] = static_cast<uint16_t>(exps[i]);
    m.deg += ow_[i] * exps[i];
  }
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += ow_[i] * m.e[i];
  }
  return m;
}

int PolyRing::weighted(const Monomial& m, const std::vector<int>& w) const {
  int d = 0;
  for (size_t i = 0; i < w.size(); ++i) d += w[i] * m.e[i];
  return d;
}

int PolyRing::xdeg(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < nx_; ++i) d += ow_[i] * m.e[i];
  return d;
}

int PolyRing::tdeg(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < nvars(); ++i)
    if (kinds_[i] == VarKind::T) d += m.e[i];
  return d;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return field_ == o.field_ && names_ == o.names_ && ow_ == o.ow_ && kinds_ == o.kinds_;
}

Poly Poly::constant(const Coeff& c) {
  if (c.is_zero()) return Poly();
  return Poly({Term{Monomial(), c}});
}

Poly Poly::monomial(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return Poly();
  return Poly({Term{m, c}});
}

Poly Poly::from_unsorted(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) > 0; });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(t);
    if (out.back().c.is_zero()) out.pop_back();
  }
  return Poly(std::move(out));
}

Coeff Poly::constant_term() const {
  if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
  if (t_.empty()) throw std::logic_error("constant_term of zero polynomial needs a field");
  return t_.front().c - t_.front().c;
}

static Poly merge(const Poly& a, const Poly& b, bool subtract) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int c = i == x.size() ? -1 : j == y.size() ? 1 : grevlex_cmp(x[i].m, y[j].m);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{y[j].m, -y[j].c} : y[j]);
      ++j;
    } else {
      Coeff s = subtract ? x[i].c - y[j].c : x[i].c + y[j].c;
      if (!s.is_zero()) out.push_back(Term{x[i].m, s});
      ++i;
      ++j;
    }
  }
  return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& o) const { return merge(*this, o, false); }
Poly Poly::operator-(const Poly& o) const { return merge(*this, o, true); }

Poly Poly::operator-() const {
  std::vector<Term> out = t_;
  for (auto& t : out) t.c = -t.c;
  return Poly(std::move(out));
}

Poly Poly::mul_term(const Monomial& m, const Coeff& c) const {
  if (c.is_zero()) return Poly();
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    Coeff v = t.c * c;
    if (!v.is_zero()) out.push_back(Term{mono_mul(t.m, m), v});
  }
  return Poly(std::move(out));
}

Poly Poly::scale(const Coeff& c) const { return mul_term(Monomial(), c); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.size() == 1) return mul_term(o.t_[0].m, o.t_[0].c);
  if (size() == 1) return o.mul_term(t_[0].m, t_[0].c);
  std::vector<Term> all;
  all.reserve(size() * o.size());
  for (auto& a : t_)
    for (auto& b : o.t_) all.push_back(Term{mono_mul(a.m, b.m), a.c * b.c});
  return from_unsorted(std::move(all));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(lead().c.inv());
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

static int wdeg(const Monomial& m, const std::vector<int>& w) {
  int d = 0;
  for (size_t i = 0; i < w.size(); ++i) d += w[i] * m.e[i];
  return d;
}

bool Poly::homogeneous(const std::vector<int>& w, int* deg) const {
  if (t_.empty()) return true;
  int d0 = wdeg(t_[0].m, w);
  for (auto& t : t_)
    if (wdeg(t.m, w) != d0) return false;
  if (deg) *deg = d0;
  return true;
}

int Poly::max_weighted(const std::vector<int>& w) const {
  int best = 0;
  bool first = true;
  for (auto& t : t_) {
    int d = wdeg(t.m, w);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

std::string Poly::str(const PolyRing& r) const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : t_) {
    bool neg = t.c.negative();
    Coeff a = neg ? -t.c : t.c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? "-" : "+";
    first = false;
    std::string body;
    for (int i = 0; i < r.nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (!body.empty()) body += "*";
      body += r.name(i);
      if (t.m.e[i] > 1) body += "^" + std::to_string(t.m.e[i]);
    }
    if (body.empty())
      s += a.str();
    else if (a.is_one())
      s += body;
    else
      s += a.str() + "*" + body;
  }
  return s;
}

namespace {

struct Parser {
  const std::string& s;
  const PolyRing& r;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (size_t k = 0; k < i && k < s.size(); ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  mpz_class integer() {
    ws();
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("expected integer");
    return mpz_class(s.substr(st, i - st));
  }
  std::string ident() {
    ws();
    size_t st = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (st == i || std::isdigit(static_cast<unsigned char>(s[st]))) {
      i = st;
      fail("expected variable name");
    }
    return s.substr(st, i - st);
  }
  // factor := integer ['/' integer] | var ['^' integer]
  void factor(Coeff& c, Monomial& m) {
    ws();
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mpz_class num = integer(), den = 1;
      if (at('/')) {
        ++i;
        den = integer();
      }
      if (den == 0) fail("zero denominator");
      try {
        c *= r.field().from_rational(num, den);
      } catch (const std::domain_error& e) {
        fail(e.what());
      }
      return;
    }
    size_t st = i;
    std::string name = ident();
    int v = r.var_index(name);
    if (v < 0) {
      i = st;
      fail("unknown variable '" + name + "'");
    }
    int e = 1;
    if (at('^')) {
      ++i;
      mpz_class ex = integer();
      if (ex > 60000) fail("exponent too large");
      e = static_cast<int>(ex.get_si());
    }
    m = mono_mul(m, r.var(v, e));
  }
  Poly parse() {
    std::vector<Term> terms;
    ws();
    if (i >= s.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      ws();
      if (i >= s.size()) break;
      bool neg = false;
      if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Coeff c = r.field().one();
      Monomial m;
      factor(c, m);
      while (at('*')) {
        ++i;
        factor(c, m);
      }
      if (neg) c = -c;
      terms.push_back(Term{m, c});
    }
    return Poly::from_unsorted(std::move(terms));
  }
};

}  // namespace

Poly parse_poly(const std::string& s, const PolyRing& r) {
  Parser p{s, r};
  return p.parse();
}

Coeff parse_coeff(const std::string& s, const Field& f) {
  PolyRing r(f, {}, {});
  Poly p = parse_poly(s, r);
  if (!p.is_constant()) throw ParseError("expected a constant", 1, 1);
  return p.is_zero() ? f.zero() : p.lead().c;
}

Poly substitute(const Poly& p, const std::vector<Poly>& image, const PolyRing& target) {
  Poly out;
  for (auto& t : p.terms()) {
    Poly term = Poly::constant(t.c);
    for (size_t v = 0; v < image.size(); ++v)
      for (int k = 0; k < t.m.e[v]; ++k) term = term * image[v];
    out += term;
  }
  return out;
}

Poly set_t_to_one(const Poly& p, const PolyRing& r) {
  std::vector<Term> out;
  for (auto& t : p.terms()) {
    Monomial m = t.m;
    for (int i = 0; i < r.nvars(); ++i)
      if (r.kind(i) == VarKind::T) {
        m.deg -= r.order_weight(i) * m.e[i];
        m.e[i] = 0;
      }
    out.push_back(Term{m, t.c});
  }
  return Poly::from_unsorted(std::move(out));
}

std::vector<std::pair<Monomial, Poly>> split_t(const Poly& p, const PolyRing& r) {
  std::map<std::vector<int>, std::vector<Term>> parts;
  std::map<std::vector<int>, Monomial> tmon;
  for (auto& t : p.terms()) {
    Monomial x = t.m, tm;
    std::vector<int> key;
    for (int i = 0; i < r.nvars(); ++i)
      if (r.kind(i) == VarKind::T) {
        key.push_back(t.m.e[i]);
        tm.e[i] = t.m.e[i];
        tm.deg += r.order_weight(i) * t.m.e[i];
        x.deg -= r.order_weight(i) * x.e[i];
        x.e[i] = 0;
      }
    parts[key].push_back(Term{x, t.c});
    tmon[key] = tm;
  }
  std::vector<std::pair<Monomial, Poly>> out;
  for (auto& [k, v] : parts) out.emplace_back(tmon[k], Poly::from_unsorted(std::move(v)));
  std::stable_sort(out.begin(), out.end(),
                   [](auto& a, auto& b) { return grevlex_cmp(a.first, b.first) > 0; });
  return out;
}

}  // namespace mfci
