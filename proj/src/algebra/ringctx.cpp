#include "mfci/ringctx.hpp"

#include "mfci/errors.hpp"
#include "mfci/groebner.hpp"

namespace mfci {

std::vector<int> x_weights(const PolyRing& r) {
  std::vector<int> w(r.nvars());
  for (int i = 0; i < r.nvars(); ++i) w[i] = r.xdegree(i);
  return w;
}

std::vector<int> t_weights(const PolyRing& r) {
  std::vector<int> w(r.nvars());
  for (int i = 0; i < r.nvars(); ++i) w[i] = r.kind(i) == VarKind::T ? 1 : 0;
  return w;
}

std::vector<int> internal_weights(const PolyRing& r, const std::vector<int>& fdeg) {
  std::vector<int> w = x_weights(r);
  int k = 0;
  for (int i = 0; i < r.nvars(); ++i)
    if (r.kind(i) == VarKind::T) w[i] = k < int(fdeg.size()) ? -fdeg[k++] : 0;
  return w;
}

Poly reduce_by(const Poly& p, const std::vector<Poly>& basis) {
  if (basis.empty() || p.is_zero()) return p;
  std::vector<Term> out;
  Poly cur = p;
  while (!cur.is_zero()) {
    const Term& t = cur.lead();
    const Poly* g = nullptr;
    for (auto& b : basis)
      if (mono_divides(b.lead().m, t.m)) {
        g = &b;
        break;
      }
    if (!g) {
      out.push_back(t);
      cur = Poly(std::vector<Term>(cur.terms().begin() + 1, cur.terms().end()));
      continue;
    }
    Monomial q = mono_div(t.m, g->lead().m);
    Coeff c = t.c * g->lead().c.inv();
    cur = cur - g->mul_term(q, c);
  }
  return Poly(std::move(out));
}

RingCtx::RingCtx(RingPtr ring, std::vector<Poly> relations, std::vector<int> gw, std::vector<int> iw,
                 std::string label)
    : ring_(std::move(ring)), relations_(std::move(relations)), gw_(std::move(gw)), iw_(std::move(iw)),
      label_(std::move(label)) {
  std::vector<Poly> nz;
  for (auto& r : relations_)
    if (!r.is_zero()) nz.push_back(r);
  if (!nz.empty()) gb_ = ideal_groebner(*this, nz, false);
}

bool RingCtx::positively_graded() const {
  for (int i = 0; i < ring_->nvars(); ++i)
    if (gw_[i] <= 0) return false;
  return true;
}

Poly RingCtx::nf(const Poly& p) const { return reduce_by(p, gb_); }

CtxPtr make_poly_ctx(RingPtr ring, const std::string& label) {
  auto w = ring->nt() > 0 ? t_weights(*ring) : x_weights(*ring);
  auto iw = x_weights(*ring);
  return std::make_shared<RingCtx>(ring, std::vector<Poly>{}, w, iw, label);
}

CtxPtr make_quotient_ctx(RingPtr ring, const std::vector<Poly>& rel, const std::string& label) {
  for (auto& f : rel)
    if (!f.homogeneous(x_weights(*ring))) throw InhomogeneousInput("relation is not homogeneous");
  auto w = x_weights(*ring);
  return std::make_shared<RingCtx>(ring, rel, w, w, label);
}

CtxPtr make_s_ctx(RingPtr sring, const std::vector<Poly>& f, const std::vector<Poly>& rel,
                  const std::string& label) {
  std::vector<int> fdeg;
  auto xw = x_weights(*sring);
  for (auto& g : f) {
    int d = 0;
    if (!g.homogeneous(xw, &d)) throw InhomogeneousInput("f_i is not homogeneous");
    fdeg.push_back(d);
  }
  return std::make_shared<RingCtx>(sring, rel, t_weights(*sring), internal_weights(*sring, fdeg), label);
}

}  // namespace mfci
