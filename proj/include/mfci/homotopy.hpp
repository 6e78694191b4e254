#pragma once

#include "mfci/complex.hpp"

namespace mfci {

// h of degree g.deg - 1 with g = d_D h + (-1)^{g.deg} h d_C, built from the top
// of D downward. D must be exact below its top term; at the top the two
// adjacent components are solved jointly. Throws NotNullhomotopic.
ChainMap nullhomotopy(const ChainMap& g, const ChainComplex& C, const ChainComplex& D);

// Re-checks g = d h + (-1)^{g.deg} h d on every degree inside both windows.
bool verify_homotopy(const ChainMap& g, const ChainMap& h, const ChainComplex& C, const ChainComplex& D,
                     int* bad = nullptr);

}  // namespace mfci
