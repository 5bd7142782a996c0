#pragma once

// The knot family K_n (genus-one knots with companion J_n of Alexander
// polynomial one). Its branched double cover is n^2-surgery on
// T(n-1, n) # (3n-1)/2 Wh(T(2,3)); the staircase generator set of that
// connected sum drives the whole d computation.

#include "staircase.hpp"

#include <cstdint>
#include <string>

namespace dcover {

struct SurgeryComplex {
    GenSet generators;
    std::int64_t N = 1;  // surgery coefficient = |H_1| = n^2
    std::string source;
};

// n = 1 gives the trivial complex {(0,0)} with N = 1. Otherwise n must be
// odd, n >= 15 and n = 3 (mod 4), so that (3n-1)/2 Whitehead doubles exist
// and the T(n-1,n) staircase model applies.
SurgeryComplex branched_cover_complex(std::int64_t n);

}  // namespace dcover
