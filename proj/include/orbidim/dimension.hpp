#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbidim/centralizer.hpp"
#include "orbidim/errors.hpp"
#include "orbidim/lie.hpp"
#include "orbidim/orbifold.hpp"
#include "orbidim/rational.hpp"

namespace orbidim::dimension {

// One cell of a CW structure together with the dimension of the subalgebra
// fixed by its stabilizer.
struct Cell {
    int cell_dimension = 0;  // 0..3
    std::int64_t stab_dim = 0;
};

using CellList = std::vector<Cell>;

// Twisted Euler characteristic of a CW complex: alternating sum of fixed
// subalgebra dimensions over cells.
inline std::int64_t twisted_euler_cw(const CellList& cells) {
    std::int64_t total = 0;
    for (const Cell& c : cells) {
        if (c.cell_dimension < 0 || c.cell_dimension > 3)
            throw value_error("cell dimension must be 0..3, got " +
                              std::to_string(c.cell_dimension));
        total += (c.cell_dimension % 2 == 0) ? c.stab_dim : -c.stab_dim;
    }
    return total;
}

// Twisted Euler characteristic of a compact 2-orbifold at the principal
// (Hitchin-type) holonomy. Mirror edges are 1-cells, so the reflection
// stabilizer enters with a minus sign; corner vertices enter positively.
// With cp cones, cr corners and b mirror intervals,
//   chi~ = (chi(|O|) - cp - b) dim g + sum_i cyclic(k_i) + sum_j dihedral(l_j)
//          - (cr - b) dihedral(1).
inline std::int64_t twisted_euler_2orbifold(const orbifold::OrbifoldSignature& o,
                                            const lie::LieType& g) {
    orbifold::validate(o);
    if (orbifold::euler_char(o).sign() > 0)
        throw geometry_error("twisted Euler characteristic unsupported for spherical input");
    std::int64_t dim_g = lie::dim(g);
    std::int64_t cp = static_cast<std::int64_t>(o.cones.size());
    std::int64_t cr = static_cast<std::int64_t>(o.corners.size());
    std::int64_t b = o.mirror_intervals;
    std::int64_t total = (o.underlying_euler_char() - cp - b) * dim_g;
    for (int k : o.cones) total += centralizer::stab_dim_cyclic(g, k);
    for (int l : o.corners) total += centralizer::stab_dim_dihedral(g, l);
    total -= (cr - b) * centralizer::stab_dim_dihedral(g, 1);
    return total;
}

struct TraceEntry {
    std::string label;
    std::int64_t value = 0;
};

// Dimension together with the summands it came from, so a regression failure
// points at a single formula term.
struct DimReport {
    std::int64_t value = 0;
    std::vector<TraceEntry> trace;
};

namespace detail {
inline void require_hyperbolic(const orbifold::OrbifoldSignature& o) {
    orbifold::validate(o);
    if (orbifold::euler_char(o).sign() >= 0)
        throw geometry_error("operation needs a hyperbolic signature (chi < 0), got chi = " +
                             orbifold::euler_char(o).str());
}
}  // namespace detail

// Hitchin component dimension: -chi(|O|) dim g plus one correction per cone
// (2 sum_a (d_a - floor(d_a/k))), per corner (sum_a (d_a - floor(d_a/l)))
// and per mirror interval (2 sum_a floor((d_a+1)/2)).
inline DimReport hitchin_dim(const orbifold::OrbifoldSignature& o, const lie::LieType& g) {
    detail::require_hyperbolic(o);
    auto exps = lie::exponents(g);
    DimReport report;
    std::int64_t base = -static_cast<std::int64_t>(o.underlying_euler_char()) * lie::dim(g);
    report.trace.push_back({"-chi(|O|) * dim", base});
    for (int k : o.cones) {
        std::int64_t v = 0;
        for (int d : exps) v += 2 * (d - d / k);
        report.trace.push_back({"cone k=" + std::to_string(k), v});
    }
    for (int l : o.corners) {
        std::int64_t v = 0;
        for (int d : exps) v += d - d / l;
        report.trace.push_back({"corner 2l=" + std::to_string(2 * l), v});
    }
    if (o.mirror_intervals > 0) {
        std::int64_t per = 0;
        for (int d : exps) per += 2 * ((d + 1) / 2);
        report.trace.push_back(
            {"mirror intervals b=" + std::to_string(o.mirror_intervals),
             o.mirror_intervals * per});
    }
    for (const TraceEntry& t : report.trace) report.value += t.value;
    return report;
}

// Closed form for PGL(n): -(n^2-1) chi(|O|) + sum_i (n^2 - sigma(n,k_i))
// + sum_j (n^2 - sigma(n,l_j))/2 + b floor(n^2/2).
inline std::int64_t hitchin_dim_pgl_closed_form(const orbifold::OrbifoldSignature& o, int n) {
    if (n < 2) throw value_error("PGL(n) needs n >= 2");
    detail::require_hyperbolic(o);
    std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    std::int64_t total = -(n2 - 1) * o.underlying_euler_char();
    for (int k : o.cones) total += n2 - lie::sigma(n, k);
    for (int l : o.corners) total += (n2 - lie::sigma(n, l)) / 2;
    total += static_cast<std::int64_t>(o.mirror_intervals) * (n2 / 2);
    return total;
}

// chi~ of the five closed orientable Euclidean classes at the principal
// parabolic-type holonomy: (chi(|O|) - cp) dim g + sum of cyclic stabilizers.
inline std::int64_t twisted_euler_euclidean(orbifold::EuclideanClass cls, const lie::LieType& g) {
    auto cones = orbifold::euclidean_cones(cls);
    std::int64_t chi_underlying = (cls == orbifold::EuclideanClass::T2) ? 0 : 2;
    std::int64_t total =
        (chi_underlying - static_cast<std::int64_t>(cones.size())) * lie::dim(g);
    for (int k : cones) total += centralizer::stab_dim_cyclic(g, k);
    return total;
}

// dim of the subalgebra fixed by the whole Euclidean holonomy group:
// the number of exponents divisible by the rotation order k.
inline std::int64_t euclidean_invariant_dim(orbifold::EuclideanClass cls, const lie::LieType& g) {
    int k = orbifold::euclidean_k(cls);
    std::int64_t count = 0;
    for (int d : lie::exponents(g))
        if (d % k == 0) ++count;
    return count;
}

// dim of the character variety at the principal Euclidean point.
inline std::int64_t euclidean_char_dim(orbifold::EuclideanClass cls, const lie::LieType& g) {
    return -twisted_euler_euclidean(cls, g) + 2 * euclidean_invariant_dim(cls, g);
}

// dim of the representation variety at the same point.
inline std::int64_t rep_variety_dim_euclidean(orbifold::EuclideanClass cls,
                                              const lie::LieType& g) {
    return -twisted_euler_euclidean(cls, g) + lie::dim(g) + euclidean_invariant_dim(cls, g);
}

// dim of the relative (boundary-fixing) deformation space:
// -chi~ - (c + b/2) rank + chi~(boundary)/2, where circles contribute 0 to
// chi~(boundary) and each mirror interval contributes 2 dihedral(1) - dim g.
inline std::int64_t relative_dim(const orbifold::OrbifoldSignature& o, const lie::LieType& g) {
    detail::require_hyperbolic(o);
    std::int64_t chi_t = twisted_euler_2orbifold(o, g);
    std::int64_t b = o.mirror_intervals;
    std::int64_t chi_boundary = b * (2 * centralizer::stab_dim_dihedral(g, 1) - lie::dim(g));
    Rational value = Rational(-chi_t) -
                     (Rational(o.boundary_circles) + Rational(b, 2)) * Rational(lie::rank(g)) +
                     Rational(chi_boundary, 2);
    if (!value.is_integer())
        throw inconsistency_error("relative dimension is not an integer: " + value.str());
    return value.num();
}

// Offset of the Hitchin dimension from its quadratic growth term
// -chi(O) n^2; an exact rational, periodic in n.
inline Rational growth_defect(const orbifold::OrbifoldSignature& o, int n) {
    std::int64_t d = hitchin_dim(o, lie::psl(n)).value;
    return Rational(d) + orbifold::euler_char(o) * Rational(static_cast<std::int64_t>(n) * n);
}

// Symplectic analogue: subtracts both the quadratic term chi dim PSp(2m) and
// the linear term m (sum_{k_i even} 1/k_i + sum_{l_j even} 1/(2 l_j) + b/2).
inline Rational growth_defect_psp(const orbifold::OrbifoldSignature& o, int m) {
    std::int64_t d = hitchin_dim(o, lie::psp(m)).value;
    Rational linear(0);
    for (int k : o.cones)
        if (k % 2 == 0) linear += Rational(1, k);
    for (int l : o.corners)
        if (l % 2 == 0) linear += Rational(1, 2 * l);
    linear += Rational(o.mirror_intervals, 2);
    return Rational(d) + orbifold::euler_char(o) * Rational(lie::dim(lie::psp(m))) -
           linear * Rational(m);
}

}  // namespace orbidim::dimension
