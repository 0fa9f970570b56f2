#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbidim/dimension.hpp"
#include "orbidim/errors.hpp"
#include "orbidim/lie.hpp"
#include "orbidim/orbifold.hpp"

namespace orbidim::threeorb {

// Boundary component of a cusped/boundary 3-orbifold. Hyperbolic components
// carry a full signature; Euclidean components one of the five closed
// orientable classes; spherical components are accepted only as a
// (chi_tilde, invariant_dim) pair, which the identity chi~ = 2 dim g^Gamma
// forces to contribute zero.
struct BoundaryComponent {
    enum class Kind { Hyperbolic, Euclidean, Spherical };

    Kind kind = Kind::Euclidean;
    orbifold::OrbifoldSignature signature;  // Kind::Hyperbolic
    orbifold::EuclideanClass euclidean_class = orbifold::EuclideanClass::T2;
    std::int64_t spherical_chi_tilde = 0;    // Kind::Spherical
    std::int64_t spherical_invariant = 0;
    std::string description;

    static BoundaryComponent hyperbolic(orbifold::OrbifoldSignature sig) {
        BoundaryComponent b;
        b.kind = Kind::Hyperbolic;
        b.description = orbifold::render_signature(sig);
        b.signature = std::move(sig);
        return b;
    }

    static BoundaryComponent euclidean(orbifold::EuclideanClass cls) {
        BoundaryComponent b;
        b.kind = Kind::Euclidean;
        b.euclidean_class = cls;
        b.description = orbifold::euclidean_name(cls);
        return b;
    }

    static BoundaryComponent spherical(std::int64_t chi_tilde, std::int64_t invariant_dim) {
        BoundaryComponent b;
        b.kind = Kind::Spherical;
        b.spherical_chi_tilde = chi_tilde;
        b.spherical_invariant = invariant_dim;
        b.description = "spherical(chi~=" + std::to_string(chi_tilde) +
                        ",inv=" + std::to_string(invariant_dim) + ")";
        return b;
    }
};

using BoundaryList = std::vector<BoundaryComponent>;

// Classifies a closed orientable signature as Euclidean (one of the five
// classes) or hyperbolic; anything else cannot bound a cusped orientable
// hyperbolic 3-orbifold in this model.
inline BoundaryComponent boundary_from_signature(const orbifold::OrbifoldSignature& o) {
    if (auto cls = orbifold::euclidean_class_of(o))
        return BoundaryComponent::euclidean(*cls);
    if (!o.closed() || !o.orbifold_orientable())
        throw value_error("boundary components must be closed orientable 2-orbifolds");
    if (orbifold::classify_geometry(o) != orbifold::Geometry::Hyperbolic)
        throw value_error("boundary component is neither Euclidean nor hyperbolic: " +
                          orbifold::render_signature(o));
    return BoundaryComponent::hyperbolic(o);
}

struct BoundaryDim {
    std::string description;
    std::int64_t full_dim = 0;  // dim of the boundary character variety
    std::int64_t half_dim = 0;
};

struct CanonicalReport {
    std::int64_t total = 0;
    std::vector<BoundaryDim> per_boundary;
    lie::LieType group;
    std::vector<std::string> assumptions;
};

// dim at the canonical (holonomy) component: half the boundary character
// variety dimension, summed over boundary components.
inline CanonicalReport canonical_dim(const BoundaryList& boundary, const lie::LieType& g) {
    CanonicalReport report;
    report.group = g;
    report.assumptions = {
        "ambient 3-orbifold is hyperbolic with the given cusp/boundary cross-sections "
        "(asserted by the caller, not verified)",
        "holonomy restricted to each boundary component is principal and the canonical "
        "component is smooth at it (not verified)",
    };
    for (const BoundaryComponent& b : boundary) {
        std::int64_t full = 0;
        switch (b.kind) {
            case BoundaryComponent::Kind::Hyperbolic:
                full = -dimension::twisted_euler_2orbifold(b.signature, g);
                break;
            case BoundaryComponent::Kind::Euclidean:
                full = dimension::euclidean_char_dim(b.euclidean_class, g);
                break;
            case BoundaryComponent::Kind::Spherical:
                if (b.spherical_chi_tilde != 2 * b.spherical_invariant)
                    throw inconsistency_error(
                        "spherical boundary data must satisfy chi~ = 2 * invariant_dim, got " +
                        b.description);
                full = -b.spherical_chi_tilde + 2 * b.spherical_invariant;
                break;
        }
        if (full % 2 != 0)
            throw inconsistency_error("boundary character variety dimension is odd for " +
                                      b.description);
        if (full < 0)
            throw inconsistency_error("boundary character variety dimension is negative for " +
                                      b.description);
        report.per_boundary.push_back({b.description, full, full / 2});
        report.total += full / 2;
    }
    return report;
}

// Lower bound for the dimension of the canonical component of any filling /
// any component through the given boundary behavior: the same sum of halves.
inline std::int64_t lower_bound_dim(const BoundaryList& boundary, const lie::LieType& g) {
    return canonical_dim(boundary, g).total;
}

// True iff every boundary class forces the SL(3) canonical component to have
// the dimension of the PSL(2) one: Euclidean classes S2(2,2,2,2), S2(2,4,4)
// and S2(2,3,6) only. When true, equality of the two dimensions is asserted.
inline bool sl3_psl2_coincidence(const BoundaryList& boundary) {
    using EC = orbifold::EuclideanClass;
    for (const BoundaryComponent& b : boundary) {
        if (b.kind != BoundaryComponent::Kind::Euclidean) return false;
        if (b.euclidean_class != EC::S2222 && b.euclidean_class != EC::S244 &&
            b.euclidean_class != EC::S236)
            return false;
    }
    std::int64_t d3 = canonical_dim(boundary, lie::psl(3)).total;
    std::int64_t d2 = canonical_dim(boundary, lie::psl(2)).total;
    if (d3 != d2)
        throw inconsistency_error("coincidence predicate true but dimensions differ: " +
                                  std::to_string(d3) + " vs " + std::to_string(d2));
    return true;
}

// Component dimensions of the three exceptional fillings of the figure-eight
// knot complement: Seifert fibered over S2(3,3,4), S2(2,4,5) and S2(2,3,7).
struct Fig8Dims {
    std::int64_t d334 = 0;
    std::int64_t d245 = 0;
    std::int64_t d237 = 0;
};

inline Fig8Dims fig8_component_dims(int n) {
    auto sphere = [n](std::initializer_list<int> cones) {
        orbifold::OrbifoldSignature o;
        o.cones = cones;
        return dimension::hitchin_dim_pgl_closed_form(o, n);
    };
    return {sphere({3, 3, 4}), sphere({2, 4, 5}), sphere({2, 3, 7})};
}

// Component dimensions of the three exceptional fillings on one cusp of the
// Whitehead link orbifold: bases D2(3,3), D2(2,4) and D2(2,3), one remaining
// boundary circle each.
struct WhiteheadDims {
    std::int64_t d33 = 0;
    std::int64_t d24 = 0;
    std::int64_t d23 = 0;
};

inline WhiteheadDims whitehead_component_dims(int n) {
    auto disc = [n](int k1, int k2) {
        orbifold::OrbifoldSignature o;
        o.cones = {k1, k2};
        o.underlying_boundary_circles = 1;
        o.boundary_circles = 1;
        return dimension::hitchin_dim_pgl_closed_form(o, n);
    };
    return {disc(3, 3), disc(2, 4), disc(2, 3)};
}

}  // namespace orbidim::threeorb
