#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "orbidim/errors.hpp"
#include "orbidim/lie.hpp"
#include "orbidim/orbifold.hpp"
#include "orbidim/rational.hpp"

// Independent transcriptions of the published closed forms for the exponent
// catalog, the S2(3,3,4) Hitchin dimensions, the Euclidean character-variety
// tables and the piecewise Whitehead formulas. The selftest verb and the test
// suite diff engine output against these; the two transcriptions share no
// code paths beyond sigma().

namespace orbidim::reference {

inline std::vector<int> exponents_closed_form(const lie::LieType& g) {
    using lie::Family;
    std::vector<int> out;
    switch (g.family) {
        case Family::PSL:
            out.resize(static_cast<std::size_t>(g.param - 1));
            std::iota(out.begin(), out.end(), 1);
            return out;
        case Family::PSp:
        case Family::POodd:
            for (int d = 1; d <= 2 * g.param - 1; d += 2) out.push_back(d);
            return out;
        case Family::POeven:
            for (int d = 1; d <= 2 * g.param - 3; d += 2) out.push_back(d);
            out.push_back(g.param - 1);
            return out;
        case Family::G2: return {1, 5};
        case Family::F4: return {1, 5, 7, 11};
        case Family::E6: return {1, 4, 5, 7, 8, 11};
        case Family::E7: return {1, 5, 7, 9, 11, 13, 17};
        case Family::E8: return {1, 7, 11, 13, 17, 19, 23, 29};
    }
    throw value_error("unknown family");
}

inline std::int64_t dim_closed_form(const lie::LieType& g) {
    using lie::Family;
    std::int64_t p = g.param;
    switch (g.family) {
        case Family::PSL: return p * p - 1;
        case Family::PSp:
        case Family::POodd: return 2 * p * p + p;
        case Family::POeven: return 2 * p * p - p;
        case Family::G2: return 14;
        case Family::F4: return 52;
        case Family::E6: return 78;
        case Family::E7: return 133;
        case Family::E8: return 248;
    }
    throw value_error("unknown family");
}

inline int rank_closed_form(const lie::LieType& g) {
    using lie::Family;
    switch (g.family) {
        case Family::PSL: return g.param - 1;
        case Family::PSp:
        case Family::POodd:
        case Family::POeven: return g.param;
        case Family::G2: return 2;
        case Family::F4: return 4;
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
    }
    throw value_error("unknown family");
}

// dim Hit(S2(3,3,4), PGL(n,R)) as a function of n mod 12.
inline std::int64_t hitchin_s2334_closed_form(int n) {
    if (n < 2) throw value_error("need n >= 2");
    std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    switch (n % 12) {
        case 0: return n2 / 12 + 2;
        case 1: case 5: case 7: case 11: return (n2 - 1) / 12;
        case 2: case 10: return (n2 - 4) / 12;
        case 3: case 9: return (n2 + 15) / 12;
        case 4: case 8: return (n2 + 8) / 12;
        case 6: return n2 / 12 + 1;
    }
    throw inconsistency_error("unreachable residue");
}

// Hitchin dimension of a hyperbolic sphere S2(k_1..k_cp) for PGL(n):
// (cp - 2)(n^2 - 1) - sum (sigma(n,k_i) - 1).
inline std::int64_t sphere_hitchin_closed_form(int n, const std::vector<int>& cones) {
    std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    std::int64_t total = (static_cast<std::int64_t>(cones.size()) - 2) * (n2 - 1);
    for (int k : cones) total -= lie::sigma(n, k) - 1;
    return total;
}

// Columns of the two Euclidean tables, in class order T2, S2(2,2,2,2),
// S2(3,3,3), S2(2,4,4), S2(2,3,6).

inline std::int64_t char_dim_closed_form(const lie::LieType& g,
                                         orbifold::EuclideanClass cls) {
    using lie::Family;
    using orbifold::EuclideanClass;
    std::int64_t n = g.param;
    std::int64_t m = g.param;
    switch (g.family) {
        case Family::PSL:
            switch (cls) {
                case EuclideanClass::T2: return 2 * (n - 1);
                case EuclideanClass::S2222: return 2 * (n / 2);
                case EuclideanClass::S333: return 2 * (n / 3);
                case EuclideanClass::S244: return 2 * (n / 4);
                case EuclideanClass::S236: return 2 * (n / 6);
            }
            break;
        case Family::PSp:
        case Family::POodd:
            switch (cls) {
                case EuclideanClass::T2: return 2 * m;
                case EuclideanClass::S2222: return 2 * m;
                case EuclideanClass::S333: return 2 * (m / 3);
                case EuclideanClass::S244: return 2 * (m / 2);
                case EuclideanClass::S236: return 2 * (m / 3);
            }
            break;
        case Family::POeven:
            switch (cls) {
                case EuclideanClass::T2: return 2 * m + 2;
                case EuclideanClass::S2222: return 4 * (m / 2);
                case EuclideanClass::S333: return 2 * (m / 3);
                case EuclideanClass::S244: return 2 * (m / 4 + (m + 1) / 4);
                case EuclideanClass::S236: return 2 * (m / 6 + (m + 2) / 6);
            }
            break;
        case Family::G2: {
            const std::int64_t row[5] = {4, 4, 2, 0, 2};
            return row[static_cast<int>(cls)];
        }
        case Family::F4: {
            const std::int64_t row[5] = {8, 8, 4, 4, 4};
            return row[static_cast<int>(cls)];
        }
        case Family::E6: {
            const std::int64_t row[5] = {12, 8, 4, 4, 6};
            return row[static_cast<int>(cls)];
        }
        case Family::E7: {
            const std::int64_t row[5] = {14, 14, 6, 4, 6};
            return row[static_cast<int>(cls)];
        }
        case Family::E8: {
            const std::int64_t row[5] = {16, 16, 8, 8, 8};
            return row[static_cast<int>(cls)];
        }
    }
    throw value_error("unknown family");
}

// Cells where the published character-variety table disagrees with the
// exponent formula. PO(2m) at T2 prints 2m+2 where the formula gives 2m;
// the E6 entries at S2(3,3,3) and S2(2,3,6) are transposed in print (the
// formula forces 6 and 4: no E6 exponent is divisible by 3, so the printed
// 4 would need a stabilizer sum of 74, which 3 does not divide).
// Returns an explanation when (computed, printed) is a documented pair.
inline const char* char_dim_known_deviation(const lie::LieType& g,
                                            orbifold::EuclideanClass cls,
                                            std::int64_t computed, std::int64_t printed) {
    using orbifold::EuclideanClass;
    if (g.family == lie::Family::POeven && cls == EuclideanClass::T2 &&
        printed == computed + 2)
        return "published value exceeds the exponent formula by 2";
    if (g.family == lie::Family::E6 && cls == EuclideanClass::S333 && computed == 6 &&
        printed == 4)
        return "published E6 values at S2(3,3,3)/S2(2,3,6) are transposed";
    if (g.family == lie::Family::E6 && cls == EuclideanClass::S236 && computed == 4 &&
        printed == 6)
        return "published E6 values at S2(3,3,3)/S2(2,3,6) are transposed";
    return nullptr;
}

// True for every cell listed in char_dim_known_deviation, independent of the
// values; regression uses this to notice a deviation that silently vanishes.
inline bool char_dim_deviation_cell(const lie::LieType& g, orbifold::EuclideanClass cls) {
    using orbifold::EuclideanClass;
    return (g.family == lie::Family::POeven && cls == EuclideanClass::T2) ||
           (g.family == lie::Family::E6 &&
            (cls == EuclideanClass::S333 || cls == EuclideanClass::S236));
}

inline std::int64_t invariant_dim_closed_form(const lie::LieType& g,
                                              orbifold::EuclideanClass cls) {
    using lie::Family;
    using orbifold::EuclideanClass;
    std::int64_t n = g.param;
    std::int64_t m = g.param;
    auto divides = [](std::int64_t k, std::int64_t a) { return a % k == 0 ? 1 : 0; };
    switch (g.family) {
        case Family::PSL:
            switch (cls) {
                case EuclideanClass::T2: return n - 1;
                case EuclideanClass::S2222: return (n - 1) / 2;
                case EuclideanClass::S333: return (n - 1) / 3;
                case EuclideanClass::S244: return (n - 1) / 4;
                case EuclideanClass::S236: return (n - 1) / 6;
            }
            break;
        case Family::PSp:
        case Family::POodd:
            switch (cls) {
                case EuclideanClass::T2: return m;
                case EuclideanClass::S2222: return 0;
                case EuclideanClass::S333: return (m + 1) / 3;
                case EuclideanClass::S244: return 0;
                case EuclideanClass::S236: return 0;
            }
            break;
        case Family::POeven:
            switch (cls) {
                case EuclideanClass::T2: return m;
                case EuclideanClass::S2222: return divides(2, m - 1);
                case EuclideanClass::S333: return m / 3 + divides(3, m - 1);
                case EuclideanClass::S244: return divides(4, m - 1);
                case EuclideanClass::S236: return divides(6, m - 1);
            }
            break;
        case Family::G2: {
            const std::int64_t row[5] = {2, 0, 0, 0, 0};
            return row[static_cast<int>(cls)];
        }
        case Family::F4: {
            const std::int64_t row[5] = {4, 0, 0, 0, 0};
            return row[static_cast<int>(cls)];
        }
        case Family::E6: {
            const std::int64_t row[5] = {6, 2, 0, 2, 0};
            return row[static_cast<int>(cls)];
        }
        case Family::E7: {
            const std::int64_t row[5] = {7, 0, 1, 0, 0};
            return row[static_cast<int>(cls)];
        }
        case Family::E8: {
            const std::int64_t row[5] = {8, 0, 0, 0, 0};
            return row[static_cast<int>(cls)];
        }
    }
    throw value_error("unknown family");
}

// Piecewise forms for the Hitchin dimensions of the one-holed discs D2(3,3),
// D2(2,4), D2(2,3) for PGL(n). The n = 4 mod 6 branch of d23 is not part of
// the published list; (n^2+2)/6 is the value of the sigma formula there.
inline std::int64_t whitehead_d33_closed_form(int n) {
    std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    return n % 3 == 0 ? n2 / 3 + 1 : (n2 - 1) / 3;
}

inline std::int64_t whitehead_d24_closed_form(int n) {
    std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    if (n % 4 == 0) return n2 / 4 + 1;
    if (n % 2 == 1) return (n2 - 1) / 4;
    return n2 / 4;
}

inline std::int64_t whitehead_d23_closed_form(int n) {
    std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    switch (n % 6) {
        case 0: return n2 / 6 + 1;
        case 1: case 5: return (n2 - 1) / 6;
        case 2: case 4: return (n2 + 2) / 6;
        case 3: return (n2 + 3) / 6;
    }
    throw inconsistency_error("unreachable residue");
}

// Centralizer dimensions at the principal point, as sigma-based closed forms.

inline std::int64_t psl_cyclic_closed_form(int n, int k) {
    return lie::sigma(n, k) - 1;
}

inline std::int64_t psl_dihedral_closed_form(int n, int k) {
    std::int64_t eps = (n % 2 == 0) ? 2 : 1;
    return (lie::sigma(n, k) - eps) / 2;
}

inline std::int64_t psp_cyclic_closed_form(int m, int k) {
    std::int64_t q = 2 * m / k;
    Rational value = Rational(lie::sigma(2 * m, k), 2);
    if (k % 2 == 1) value += Rational((q + 1) / 2);
    return value.as_integer();
}

inline std::int64_t psp_dihedral_closed_form(int m, int k) {
    std::int64_t q = 2 * m / k;
    Rational value = Rational(lie::sigma(2 * m, k), 4) - Rational(m, 2);
    if (k % 2 == 1) value += Rational((q + 1) / 2, 2);
    return value.as_integer();
}

inline std::int64_t psp_mirror_closed_form(int m) {
    return static_cast<std::int64_t>(m) * m;
}

// Worked G2 Hitchin formula: -14 chi(|O|) + 8 cp_2 + 10 cp_{3..5} + 12 cp_{>=6}
// + 4 cr_2 + 5 cr_{3..5} + 6 cr_{>=6} + 8 b.
inline std::int64_t g2_hitchin_closed_form(const orbifold::OrbifoldSignature& o) {
    std::int64_t total = -14 * o.underlying_euler_char();
    for (int k : o.cones) total += k == 2 ? 8 : (k <= 5 ? 10 : 12);
    for (int l : o.corners) total += l == 2 ? 4 : (l <= 5 ? 5 : 6);
    total += 8 * static_cast<std::int64_t>(o.mirror_intervals);
    return total;
}

}  // namespace orbidim::reference
