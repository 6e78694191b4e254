#pragma once

#include "mfci/complex.hpp"

namespace mfci {

// Minimal complex homotopy equivalent to C, with the comparison data
// iota : M -> C, proj : C -> M and h on C such that proj iota = 1 and
// 1 - iota proj = d h + h d.
struct Minimized {
  ChainComplex complex;
  ChainMap iota, proj, h;
};

// Cancels unit (nonzero constant) entries of the differentials one at a time.
// With track = false only the complex is produced.
Minimized minimize(const ChainComplex& C, bool track = true);

}  // namespace mfci
