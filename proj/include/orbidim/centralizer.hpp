#pragma once

#include <cstdint>
#include <string>

#include "orbidim/errors.hpp"
#include "orbidim/lie.hpp"

namespace orbidim::centralizer {

// dim of the fixed subalgebra of a principal order-k rotation:
// sum over exponents of (2 floor(d/k) + 1). k = 1 recovers dim g.
inline std::int64_t stab_dim_cyclic(const lie::LieType& g, std::int64_t k) {
    if (k < 1) throw value_error("cyclic stabilizer needs k >= 1, got " + std::to_string(k));
    std::int64_t total = 0;
    for (int d : lie::exponents(g)) total += 2 * (d / k) + 1;
    return total;
}

// dim of the fixed subalgebra of a principal dihedral pair (order-k rotation
// plus a reflection): sum of floor(d/k) plus the number of even exponents.
// k = 1 is the plain reflection (mirror) case.
inline std::int64_t stab_dim_dihedral(const lie::LieType& g, std::int64_t k) {
    if (k < 1) throw value_error("dihedral stabilizer needs k >= 1, got " + std::to_string(k));
    std::int64_t total = 0;
    for (int d : lie::exponents(g)) total += d / k + (d % 2 == 0 ? 1 : 0);
    return total;
}

// dim of the corner (dihedral vertex) centralizer from the rotation
// centralizer `ck` and the two adjacent reflection centralizers `s1`, `s2`
// inside a Lie algebra of dimension `g`: (ck + s1 + s2 - g) / 2.
inline std::int64_t corner_center(std::int64_t ck, std::int64_t s1, std::int64_t s2,
                                  std::int64_t g) {
    std::int64_t twice = ck + s1 + s2 - g;
    if (twice % 2 != 0)
        throw inconsistency_error("corner centralizer parity violated: ck + s1 + s2 - g = " +
                                  std::to_string(twice) + " is odd");
    return twice / 2;
}

// Twisted cohomology of an interval with mirror endpoints (pi_1 = D_infty):
// reflections with centralizer dims s1, s2, their product with centralizer
// dim `prod`, ambient dimension g.
struct DinftyDims {
    std::int64_t chi_tilde;  // s1 + s2 - g
    std::int64_t h0;         // (prod + s1 + s2 - g) / 2
    std::int64_t h1;         // (prod - s1 - s2 + g) / 2
};

inline DinftyDims dinfty_dims(std::int64_t s1, std::int64_t s2, std::int64_t prod,
                              std::int64_t g) {
    std::int64_t twice_h0 = prod + s1 + s2 - g;
    std::int64_t twice_h1 = prod - s1 - s2 + g;
    if (twice_h0 % 2 != 0 || twice_h1 % 2 != 0)
        throw inconsistency_error("D-infinity cohomology parity violated");
    return {s1 + s2 - g, twice_h0 / 2, twice_h1 / 2};
}

}  // namespace orbidim::centralizer
