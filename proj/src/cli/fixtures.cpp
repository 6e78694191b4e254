#include "mfci/fixtures.hpp"

#include <random>

#include "mfci/errors.hpp"
#include "mfci/graded.hpp"
#include "mfci/ideal.hpp"
#include "mfci/koszul.hpp"
#include "mfci/resolution.hpp"

namespace mfci {

namespace {

RingPtr xring(int n) {
  static const char* names[] = {"x", "y", "z"};
  return std::make_shared<PolyRing>(Field(101), std::vector<std::string>(names, names + n), std::vector<int>(n, 1));
}

std::vector<Poly> parse_all(const RingCtx& Q, const std::vector<std::string>& s) {
  std::vector<Poly> out;
  for (auto& t : s) out.push_back(Q.parse(t));
  return out;
}

PolyMatrix row_of(const RingCtx& ctx, const std::vector<Poly>& a) {
  FreeModule src;
  for (auto& g : a) {
    int d = 0;
    if (!g.homogeneous(ctx.gw(), &d)) throw InhomogeneousInput("module generator is not homogeneous");
    src.tw.push_back(-d);
  }
  PolyMatrix m(src, FreeModule::free(1), 0);
  for (size_t j = 0; j < a.size(); ++j) m.at(0, int(j)) = a[j];
  return m;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"h1", "ci2", "ci2-rx", "ci2-ry", "ci3"}; }

Fixture make_fixture(const std::string& name, CtxPtr Q, std::vector<Poly> f, const PolyMatrix& pres_q) {
  Fixture fx;
  fx.name = name;
  fx.Q = Q;
  fx.f = std::move(f);
  if (!is_regular_sequence(*Q, fx.f)) throw NonRegularContext(name + ": f is not a regular sequence");
  fx.R = make_quotient_ctx(Q->ring_ptr(), fx.f, "R");
  fx.S = s_context(*Q, fx.f);
  fx.pres_q = pres_q;
  fx.pres_r = pres_q.nf(*fx.R);
  return fx;
}

Fixture make_fixture(const std::string& name, CtxPtr Q, std::vector<Poly> f, std::vector<Poly> a) {
  Fixture fx = make_fixture(name, Q, std::move(f), row_of(*Q, a));
  fx.a = std::move(a);
  return fx;
}

Fixture with_module(const Fixture& base, const std::string& spec) {
  const RingCtx& Q = *base.Q;
  std::vector<Poly> gens;
  if (spec == "k") {
    for (int v = 0; v < Q.ring().nx(); ++v) gens.push_back(Q.var(v));
  } else if (spec == "R") {
    gens = base.f;
  } else if (spec.rfind("R/(", 0) == 0 && spec.back() == ')') {
    std::string body = spec.substr(3, spec.size() - 4);
    size_t at = 0;
    while (at <= body.size()) {
      size_t comma = body.find(',', at);
      if (comma == std::string::npos) comma = body.size();
      gens.push_back(Q.parse(body.substr(at, comma - at)));
      at = comma + 1;
    }
    for (auto& g : base.f) gens.push_back(g);
    gens = ideal_reduce(Q, gens);
  } else {
    throw ParseError("module must be k, R or R/(...), got '" + spec + "'", 1, 1);
  }
  Fixture fx = base;
  fx.name = spec;
  fx.pres_q = row_of(Q, gens);
  fx.a = is_regular_sequence(Q, gens) ? gens : std::vector<Poly>{};
  fx.pres_r = fx.pres_q.nf(*fx.R);
  return fx;
}

Fixture fixture(const std::string& name) {
  if (name.rfind("random:", 0) == 0) return random_fixture(std::stoull(name.substr(7)));
  if (name == "h1") {
    auto Q = make_poly_ctx(xring(1));
    return make_fixture(name, Q, parse_all(*Q, {"x^2"}), parse_all(*Q, {"x"}));
  }
  if (name == "ci2" || name == "ci2-rx" || name == "ci2-ry") {
    auto Q = make_poly_ctx(xring(2));
    std::vector<std::string> a = name == "ci2" ? std::vector<std::string>{"x", "y"}
                                 : name == "ci2-rx" ? std::vector<std::string>{"x", "y^2"}
                                                    : std::vector<std::string>{"x^2", "y"};
    return make_fixture(name, Q, parse_all(*Q, {"x^2", "y^2"}), parse_all(*Q, a));
  }
  if (name == "ci3") {
    auto Q = make_poly_ctx(xring(3));
    return make_fixture(name, Q, parse_all(*Q, {"x^2", "y^2", "z^2"}), parse_all(*Q, {"x", "y", "z"}));
  }
  throw UnknownFixture("unknown fixture '" + name + "'");
}

Fixture random_fixture(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(0, 100);
  int n = std::uniform_int_distribution<int>(2, 3)(rng);
  auto Q = make_poly_ctx(xring(n));
  const PolyRing& r = Q->ring();
  auto form = [&](int d) {
    Poly p;
    for (auto& m : monomials_of_degree(r, std::vector<int>(n, 1), d)) p += Poly::monomial(m, Q->field().from_int(coef(rng)));
    return p;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int c = std::uniform_int_distribution<int>(1, n)(rng);
    int k = std::uniform_int_distribution<int>(c, n)(rng);
    std::vector<Poly> a, f;
    for (int i = 0; i < k; ++i) a.push_back(form(1));
    if (!is_regular_sequence(*Q, a)) continue;
    for (int j = 0; j < c; ++j) {
      int d = std::uniform_int_distribution<int>(2, 3)(rng);
      Poly g;
      for (int i = 0; i < k; ++i) g += form(d - 1) * a[i];
      f.push_back(g);
    }
    if (!is_regular_sequence(*Q, f)) continue;
    return make_fixture("random:" + std::to_string(seed), Q, f, a);
  }
  throw NonTermination("random_fixture: no regular sequence found");
}

ChainComplex q_resolution(const Fixture& fx) {
  if (!fx.a.empty()) return koszul(fx.Q, fx.a).complex;
  return complex_from_resolution(fx.Q, free_resolution(*fx.Q, fx.pres_q, 64));
}

HigherHomotopySystem fixture_homotopies(const Fixture& fx) { return higher_homotopies(q_resolution(fx), fx.f); }

GradedMF fixture_mf(const Fixture& fx, const HigherHomotopySystem& sys) { return build_mf(sys, fx.S); }

}  // namespace mfci
