#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfci/mf.hpp"

namespace mfci {

// Strict morphism: F.g1 a1 = a0 E.g1 and F.g0 a0 = a1(1) E.g0.
struct MFMap {
  GradedMF src, tgt;
  PolyMatrix a1, a0;
};

MFCheck check_mf_map(const MFMap& a);
MFMap identity_mf_map(const GradedMF& E);
MFMap compose(const MFMap& g, const MFMap& f);  // g o f
MFMap tensor_map(const MFMap& a, const MFMap& b);
// a : E -> F gives F^dual -> E^dual.
MFMap dual_map(const MFMap& a);
// Two-sided inverse of a map with constant components, if it exists.
std::optional<MFMap> constant_inverse(const MFMap& a);

// Graded permutation matching basis labels of E and F, with the Koszul sign
// (-1)^{pq} for every pair of leaves whose order is exchanged.
MFMap label_iso(const GradedMF& E, const GradedMF& F);

MFMap unit_iso(const GradedMF& E);                                      // E (x) O -> E
MFMap comm_iso(const GradedMF& E, const GradedMF& F);                   // E (x) F -> F (x) E
MFMap assoc_iso(const GradedMF& E, const GradedMF& F, const GradedMF& G);  // (EF)G -> E(FG)
MFMap hom_tensor_iso(const GradedMF& E, const GradedMF& F);             // E^dual (x) F -> Hom(E, F)
MFMap dual_tensor_iso(const GradedMF& E, const GradedMF& F);            // (E (x) F)^dual -> E^dual (x) F^dual
MFMap double_dual_iso(const GradedMF& E);                               // E^dual^dual -> E
MFMap hom_dual_swap(const GradedMF& E, const GradedMF& F);              // Hom(E, F)^dual -> Hom(F, E)
// Hom(E1, E2) (x) Hom(E3, E4) -> Hom(E1, E4) (x) Hom(E3, E2)
MFMap switch_iso(const GradedMF& E1, const GradedMF& E2, const GradedMF& E3, const GradedMF& E4);

struct IsoCertificate {
  std::string name;
  bool morphism = false, invertible = false, same_twists = false;
  std::string where;
  bool ok() const { return morphism && invertible && same_twists; }
};

IsoCertificate certify(const std::string& name, const MFMap& a);
// Builds and certifies every canonical iso on the given objects (in parallel).
std::vector<IsoCertificate> canonical_isos(const GradedMF& E, const GradedMF& F, const GradedMF& G,
                                           const GradedMF& H);
// Throws VerificationFailure naming the first failing certificate.
void require_isos(const std::vector<IsoCertificate>& certs);

}  // namespace mfci
