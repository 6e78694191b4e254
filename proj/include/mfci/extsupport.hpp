#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfci/dense.hpp"
#include "mfci/higher.hpp"
#include "mfci/mf.hpp"
#include "mfci/operators.hpp"

namespace mfci {

// Finite-length graded module N = coker(pres) over R as a graded k-space. The
// basis of N_d is the set of non-pivot coordinates of (tgt)_d modulo the image.
class FiniteModule {
 public:
  // Throws BudgetExceeded when N_d does not vanish by degree `cap` past the generators.
  FiniteModule(CtxPtr R, const PolyMatrix& pres, int cap = 64);

  const CtxPtr& ctx() const { return ctx_; }
  int dim() const { return int(deg_.size()); }
  int dim(int d) const;
  // Internal degree of every basis vector, ascending.
  const std::vector<int>& degrees() const { return deg_; }
  // Smallest L with m^L N = 0.
  int nilpotency() const { return nil_; }
  // Action of x_v, and of an arbitrary polynomial of R.
  const DenseMat& x_action(int v) const { return x_[v]; }
  DenseMat action(const Poly& p) const;

 private:
  CtxPtr ctx_;
  std::vector<int> deg_;
  std::vector<DenseMat> x_;
  int nil_ = 0;
  mutable std::map<std::vector<uint16_t>, DenseMat> mono_;
};

// A k-vector space with a basis graded by internal degree.
struct GradedSpace {
  std::vector<int> deg;

  int dim() const { return int(deg.size()); }
  std::map<int, int> hilbert() const;
  std::vector<int> indices(int d) const;
};

// Finitely generated module over ring = R or R[T_1..T_c] given degreewise.
// Level j carries the k-space X[j] with x-actions x[j][v] and T-actions
// t[j][k] : X[j] -> X[j+1]; nilpotency L means m^L kills every level.
struct LevelModule {
  std::vector<GradedSpace> X;
  std::vector<std::vector<DenseMat>> x, t;
  std::vector<int> xw, tw;  // internal degrees of x_v and T_k
  int L = 1;
};

// Presentation over `ring`: generator g sits in level gen_level[g] and
// internal degree gen_deg[g]; the target module has tw = -level, itw = -deg.
// Valid through level `top`; relations x^b g with |b| >= L are included.
struct ModulePresentation {
  CtxPtr ring;
  PolyMatrix pres;
  std::vector<int> gen_level, gen_deg, rel_level;
  int top = 0, L = 1;

  // No generators in the top third of the window.
  bool gulliksen() const;
};

ModulePresentation present_module(CtxPtr ring, const LevelModule& M);

// The k-span of a list of relation columns in level j, in the coordinates
// (generator, T-monomial, standard x-monomial of degree < L), by internal degree.
std::map<int, int> span_dims(const ModulePresentation& P, const std::vector<std::vector<Poly>>& cols,
                             const std::vector<int>& col_level, int j);
// Hilbert function of the level-j piece of coker(P) by internal degree, from
// the presentation alone.
std::map<int, int> level_hilbert(const ModulePresentation& P, int j);

struct ExtData {
  CtxPtr R, RT;  // RT = R[T_1..T_c]
  int n_max = 0, c = 0;
  std::vector<int> fdeg;
  std::vector<GradedSpace> ext;                 // ext[n], n <= n_max
  std::vector<std::vector<DenseMat>> x, t;      // x[n][v], t[n][k] : ext[n] -> ext[n+2]
  ModulePresentation ev, odd;

  std::vector<int> dims() const;
  LevelModule levels(int parity) const;
};

// Ext^n_R(M, N) for M resolved by the standard resolution of sys, N of finite length.
ExtData ext_modules(const HigherHomotopySystem& sys, CtxPtr R, const FiniteModule& N, int n_max);
// Ext^n as an R-module.
ModulePresentation ext_degree_presentation(const ExtData& X, int n);
// H^n Hom(C, N) for a complex of free R-modules with C^{-n} = C_n, as a
// one-level module with its x-action. C must contain C_{n-1}..C_{n+1}
// where they are nonzero.
LevelModule hom_homology(const ChainComplex& C, const FiniteModule& N, int n);

struct StablePiece {
  int q = 0;
  int dim = 0;
  std::map<int, int> hilbert;
};

struct StableExtTable {
  int q0 = 0;
  int top_torsion = -1;  // top T-degree of H^0_T(Ext^ev (+) Ext^odd); -1 if none
  ModulePresentation ev_sat, odd_sat;
  std::vector<StablePiece> pieces;

  const StablePiece* at(int q) const;
};

// Pieces for q in [qa, qb] (none when qa > qb). Below q0 only for c = 1, by periodicity; otherwise
// NegativeDegreeUnsupported.
StableExtTable stable_ext(const ExtData& X, int qa, int qb);
// Two-periodicity of the computed pieces (c = 1): piece(q+2) is piece(q)
// shifted by -deg f.
bool two_periodic(const StableExtTable& S, int fdeg);

// Complete resolution of M over a hypersurface, homological degrees [lo, hi].
struct CompleteResolution {
  AffineMF mf;
  int lo = 0, hi = 0, splice = 0;
  ChainComplex T;                      // T^{-n} = T_n
  ChainComplex P;                      // standard resolution, degrees 0..hi
  std::map<int, PolyMatrix> gamma;     // gamma[n] : T_n -> P_n, 0 <= n <= hi
  bool acyclic = false, dual_acyclic = false, gamma_chain = false;
  bool ok() const { return acyclic && dual_acyclic && gamma_chain; }
};

CompleteResolution complete_resolution_c1(const HigherHomotopySystem& sys, const GradedMF& E, CtxPtr R, int lo,
                                          int hi);
// H^q Hom(T, N) as a graded k-space (R-module presentation included);
// WindowTooSmall unless lo < q < hi.
StablePiece stable_ext_via_compres(const CompleteResolution& CR, const FiniteModule& N, int q,
                                   ModulePresentation* pres = nullptr);

struct SupportIdeal {
  CtxPtr ring;                 // R[T]
  std::vector<Poly> ideal;     // saturated w.r.t. (T)
  std::vector<Poly> ann_ev, ann_odd;
  bool empty() const;
};

SupportIdeal support_set(const ExtData& X);
// Radical equality of the Ext route (plus f) with supp_tpc(hom_mf(E_M, E_N)) in S.
// Throws RouteMismatch.
void check_support_route(const SupportIdeal& V, const GradedMF& EM, const GradedMF& EN);
// Annihilator over k[T] of Ext (x) k, returned as generators free of x.
std::vector<Poly> ab_support(const ExtData& X);

// Singular locus of Y = V(W) in S: (W, dW/dx, dW/dT) saturated w.r.t. (T).
std::vector<Poly> sing_ideal(const GradedMF& E);
Poly derivative(const Poly& p, int var, const PolyRing& r);

// Pairwise data for support identities over a family of modules.
struct SupportFamily {
  std::vector<std::string> names;
  std::vector<std::vector<SupportIdeal>> V;     // V[i][j] = V(M_i, M_j)
  std::vector<std::vector<ExtData>> ext;
  std::vector<std::vector<int>> q0;
};

struct PropertyCheck {
  std::string name;
  bool ok = false;
  std::string witness;
};

// Ext and supports for every ordered pair from modules[i] resolved by sys[i].
SupportFamily support_family(const std::vector<std::string>& names, const std::vector<HigherHomotopySystem>& sys,
                             const std::vector<FiniteModule>& modules, CtxPtr R, int n_max);

// (1) V(M,N) empty iff Ext^n = 0 on [q0, q0 + 6]; (2) and (3) as radical
// equalities; containment in Sing(Y) when `sing` is non-empty (ideal in S).
std::vector<PropertyCheck> check_support_properties(const SupportFamily& F, const std::vector<Poly>& sing,
                                                    CtxPtr S);

}  // namespace mfci
