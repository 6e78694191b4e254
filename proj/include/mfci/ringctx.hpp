#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mfci/poly.hpp"

namespace mfci {

// A polynomial ring modulo a homogeneous ideal, with the Groebner basis of the
// ideal precomputed so that normal forms are canonical.
//
// Two gradings are tracked. The primary grading (weights gw) is the one free
// module twists refer to: the x-degree over Q and R, the T-degree over S and
// its quotients. The internal grading (weights iw) is the x-degree extended
// by deg(T_i) = -deg(f_i); W is internally homogeneous of degree 0.
class RingCtx {
 public:
  RingCtx(RingPtr ring, std::vector<Poly> relations, std::vector<int> gw, std::vector<int> iw,
          std::string label);

  const PolyRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<Poly>& gb() const { return gb_; }
  bool is_quotient() const { return !gb_.empty(); }
  const std::vector<int>& gw() const { return gw_; }
  const std::vector<int>& iw() const { return iw_; }
  const std::string& label() const { return label_; }
  // True if gw is positive on every variable (graded pieces finite-dimensional).
  bool positively_graded() const;

  Poly nf(const Poly& p) const;
  Poly one() const { return Poly::constant(field().one()); }
  Poly var(int i) const { return Poly::monomial(ring_->var(i), field().one()); }
  Poly constant(long v) const { return Poly::constant(field().from_int(v)); }
  Poly parse(const std::string& s) const { return nf(parse_poly(s, *ring_)); }
  std::string str(const Poly& p) const { return p.str(*ring_); }

 private:
  RingPtr ring_;
  std::vector<Poly> relations_;
  std::vector<Poly> gb_;
  std::vector<int> gw_, iw_;
  std::string label_;
};

using CtxPtr = std::shared_ptr<const RingCtx>;

// Standard contexts. f is the regular sequence; its ring is the x-ring.
CtxPtr make_poly_ctx(RingPtr ring, const std::string& label = "Q");
CtxPtr make_quotient_ctx(RingPtr ring, const std::vector<Poly>& rel, const std::string& label = "R");
// S = Q[T_1..T_c] graded by T-degree, internal degree deg T_i = -deg f_i.
CtxPtr make_s_ctx(RingPtr sring, const std::vector<Poly>& f, const std::vector<Poly>& rel,
                  const std::string& label);

// Weighted degree vectors.
std::vector<int> x_weights(const PolyRing& r);
std::vector<int> t_weights(const PolyRing& r);
std::vector<int> internal_weights(const PolyRing& r, const std::vector<int>& fdeg);

// Reduce p by a list of polynomials (full reduction, scanning in list order).
Poly reduce_by(const Poly& p, const std::vector<Poly>& basis);

}  // namespace mfci
