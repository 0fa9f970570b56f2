#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbidim/errors.hpp"
#include "orbidim/rational.hpp"

namespace orbidim::orbifold {

// Compact 2-orbifold signature. The underlying surface has `genus` handles
// (orientable) or cross-caps (non-orientable) and `underlying_boundary_circles`
// boundary circles. Each underlying boundary circle is either a plain orbifold
// boundary circle, a full mirror circle, or mixed (mirror arcs alternating
// with `mirror_intervals` orbifold boundary arcs).
struct OrbifoldSignature {
    bool underlying_orientable = true;
    int genus = 0;
    int underlying_boundary_circles = 0;
    std::vector<int> cones;    // rotation orders k_i >= 2
    std::vector<int> corners;  // corner of order 2*l_j stored as l_j >= 2
    int boundary_circles = 0;      // pure boundary circles (c)
    int mirror_intervals = 0;      // boundary arcs with mirror endpoints (b)
    int full_mirror_circles = 0;

    bool orbifold_orientable() const {
        return underlying_orientable && corners.empty() && mirror_intervals == 0 &&
               full_mirror_circles == 0;
    }

    // Mirror boundary is not orbifold boundary; only circles and intervals are.
    bool closed() const { return boundary_circles == 0 && mirror_intervals == 0; }

    bool has_mirror() const {
        return full_mirror_circles > 0 || mirror_intervals > 0 || !corners.empty();
    }

    int underlying_euler_char() const {
        int g2 = underlying_orientable ? 2 * genus : genus;
        return 2 - g2 - underlying_boundary_circles;
    }

    friend bool operator==(const OrbifoldSignature& a, const OrbifoldSignature& b) {
        return a.underlying_orientable == b.underlying_orientable && a.genus == b.genus &&
               a.underlying_boundary_circles == b.underlying_boundary_circles &&
               a.cones == b.cones && a.corners == b.corners &&
               a.boundary_circles == b.boundary_circles &&
               a.mirror_intervals == b.mirror_intervals &&
               a.full_mirror_circles == b.full_mirror_circles;
    }
    friend bool operator!=(const OrbifoldSignature& a, const OrbifoldSignature& b) {
        return !(a == b);
    }
};

// Structural consistency of the boundary-circle tagging.
inline void validate(const OrbifoldSignature& o) {
    if (o.genus < 0) throw value_error("negative genus");
    if (!o.underlying_orientable && o.genus < 1)
        throw value_error("non-orientable surface needs at least one cross-cap");
    for (int k : o.cones)
        if (k < 2) throw value_error("cone order must be >= 2");
    for (int l : o.corners)
        if (l < 2) throw value_error("corner parameter must be >= 2");
    int mixed = o.underlying_boundary_circles - o.boundary_circles - o.full_mirror_circles;
    if (mixed < 0)
        throw value_error("boundary tagging exceeds underlying boundary circles");
    if (mixed == 0 && o.mirror_intervals > 0)
        throw value_error("mirror intervals require a mixed boundary circle");
    if (mixed > 0 && o.mirror_intervals < mixed)
        throw value_error("each mixed boundary circle carries at least one mirror interval");
    if (!o.corners.empty() && o.full_mirror_circles + mixed == 0)
        throw value_error("corners require a mirror boundary circle");
}

// chi(O) = chi(|O|) - sum (1 - 1/k_i) - 1/2 sum (1 - 1/l_j).
inline Rational euler_char(const OrbifoldSignature& o) {
    Rational chi(o.underlying_euler_char());
    for (int k : o.cones) chi -= Rational(k - 1, k);
    for (int l : o.corners) chi -= Rational(l - 1, 2 * l);
    return chi;
}

enum class Geometry { Bad, Spherical, Euclidean, Hyperbolic };

inline std::string geometry_name(Geometry g) {
    switch (g) {
        case Geometry::Bad: return "bad";
        case Geometry::Spherical: return "spherical";
        case Geometry::Euclidean: return "euclidean";
        case Geometry::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

// Teardrops, spindles with distinct orders, and their mirror quotients
// (polygon with one corner, or two corners of distinct orders).
inline bool is_bad(const OrbifoldSignature& o) {
    if (!o.closed()) return false;
    bool sphere_shape = o.underlying_orientable && o.genus == 0 &&
                        o.underlying_boundary_circles == 0 && o.corners.empty() &&
                        o.full_mirror_circles == 0;
    if (sphere_shape) {
        if (o.cones.size() == 1) return true;
        if (o.cones.size() == 2 && o.cones[0] != o.cones[1]) return true;
        return false;
    }
    bool mirror_polygon = o.underlying_orientable && o.genus == 0 &&
                          o.underlying_boundary_circles == 1 && o.full_mirror_circles == 1 &&
                          o.cones.empty();
    if (mirror_polygon) {
        if (o.corners.size() == 1) return true;
        if (o.corners.size() == 2 && o.corners[0] != o.corners[1]) return true;
        return false;
    }
    return false;
}

inline Geometry classify_geometry(const OrbifoldSignature& o) {
    if (!o.closed())
        throw not_implemented_error("geometry classification supports closed orbifolds only");
    if (is_bad(o)) return Geometry::Bad;
    int s = euler_char(o).sign();
    if (s > 0) return Geometry::Spherical;
    if (s == 0) return Geometry::Euclidean;
    return Geometry::Hyperbolic;
}

// Orientation double cover of a pure mirror disc (reflection polygons and
// disc signatures D(cones; corners)): the sphere with every cone doubled and
// every order-2l corner contributing one cone of order l.
inline OrbifoldSignature orientation_double(const OrbifoldSignature& o) {
    if (o.orbifold_orientable())
        throw not_implemented_error("orientation double of an orientable orbifold");
    bool mirror_disc = o.underlying_orientable && o.genus == 0 &&
                       o.underlying_boundary_circles == 1 && o.boundary_circles == 0 &&
                       o.mirror_intervals == 0 && o.full_mirror_circles == 1;
    if (!mirror_disc)
        throw not_implemented_error("orientation double implemented for pure mirror discs only");
    OrbifoldSignature d;
    for (int k : o.cones) {
        d.cones.push_back(k);
        d.cones.push_back(k);
    }
    for (int l : o.corners) d.cones.push_back(l);
    return d;
}

namespace detail {

// Whitespace-stripped, uppercased view of the input that still reports byte
// offsets into the original string.
struct Cursor {
    std::string norm;
    std::vector<std::size_t> pos;
    std::size_t i = 0;

    explicit Cursor(std::string_view text) {
        for (std::size_t b = 0; b < text.size(); ++b) {
            unsigned char c = static_cast<unsigned char>(text[b]);
            if (std::isspace(c)) continue;
            norm.push_back(static_cast<char>(std::toupper(c)));
            pos.push_back(b);
        }
    }

    std::size_t offset() const { return i < pos.size() ? pos[i] : (pos.empty() ? 0 : pos.back() + 1); }
    bool done() const { return i >= norm.size(); }

    bool peek(std::string_view lit) const { return norm.compare(i, lit.size(), lit) == 0; }

    bool eat(std::string_view lit) {
        if (!peek(lit)) return false;
        i += lit.size();
        return true;
    }

    void expect(std::string_view lit, const char* what) {
        if (!eat(lit)) throw parse_error("unexpected input", offset(), what);
    }

    long long integer() {
        if (done() || !std::isdigit(static_cast<unsigned char>(norm[i])))
            throw parse_error("expected integer", offset(), "digit");
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(norm[i]))) {
            v = v * 10 + (norm[i] - '0');
            if (v > 1'000'000) throw parse_error("integer too large", offset(), "smaller integer");
            ++i;
        }
        return v;
    }

    std::vector<int> orders() {
        std::vector<int> out;
        do {
            std::size_t at = offset();
            long long v = integer();
            if (v < 2) throw parse_error("order must be at least 2", at, "integer >= 2");
            out.push_back(static_cast<int>(v));
        } while (eat(","));
        return out;
    }
};

}  // namespace detail

// Grammar (whitespace-insensitive, case-insensitive):
//   sig    := closed | disc | mirror
//   closed := "S2(" orders ")" | "T2"
//           | "Sg(g=" INT ")" ["(" orders ")"] | "Ng(g=" INT ")" ["(" orders ")"]
//   disc   := "D2(" orders [";c=" INT] ")"
//   mirror := "T(" orders ")" | "Q(" orders ")" | "P(" orders ")"
//           | "D(" orders ";" orders ")" [";b=" INT]
//   orders := INT {"," INT}          each >= 2
inline OrbifoldSignature parse_signature(std::string_view text) {
    detail::Cursor c(text);
    OrbifoldSignature o;

    auto finish = [&](OrbifoldSignature sig) {
        if (!c.done())
            throw parse_error("trailing characters", c.offset(), "end of input");
        validate(sig);
        return sig;
    };

    if (c.eat("S2(")) {
        o.cones = c.orders();
        c.expect(")", "')'");
        return finish(o);
    }
    if (c.eat("T2")) {
        o.genus = 1;
        return finish(o);
    }
    if (c.peek("SG(") || c.peek("NG(")) {
        bool orientable = c.norm[c.i] == 'S';
        c.i += 3;
        c.expect("G=", "'g='");
        long long g = c.integer();
        c.expect(")", "')'");
        if (!orientable && g < 1)
            throw parse_error("cross-cap count must be at least 1", c.offset(), "g >= 1");
        o.underlying_orientable = orientable;
        o.genus = static_cast<int>(g);
        if (c.eat("(")) {
            o.cones = c.orders();
            c.expect(")", "')'");
        }
        return finish(o);
    }
    if (c.eat("D2(")) {
        o.cones = c.orders();
        long long circles = 1;
        if (c.eat(";")) {
            c.expect("C=", "'c='");
            std::size_t at = c.offset();
            circles = c.integer();
            if (circles < 1) throw parse_error("boundary circle count must be >= 1", at, "c >= 1");
        }
        c.expect(")", "')'");
        o.underlying_boundary_circles = static_cast<int>(circles);
        o.boundary_circles = static_cast<int>(circles);
        return finish(o);
    }
    if (c.peek("T(") || c.peek("Q(") || c.peek("P(")) {
        char kind = c.norm[c.i];
        c.i += 2;
        o.corners = c.orders();
        c.expect(")", "')'");
        if (kind == 'T' && o.corners.size() != 3)
            throw parse_error("T(...) takes exactly 3 corner orders", 0, "3 orders");
        if (kind == 'Q' && o.corners.size() != 4)
            throw parse_error("Q(...) takes exactly 4 corner orders", 0, "4 orders");
        o.underlying_boundary_circles = 1;
        o.full_mirror_circles = 1;
        return finish(o);
    }
    if (c.eat("D(")) {
        o.cones = c.orders();
        c.expect(";", "';'");
        o.corners = c.orders();
        c.expect(")", "')'");
        long long b = 0;
        if (c.eat(";")) {
            c.expect("B=", "'b='");
            b = c.integer();
        }
        o.underlying_boundary_circles = 1;
        o.mirror_intervals = static_cast<int>(b);
        o.full_mirror_circles = b > 0 ? 0 : 1;
        return finish(o);
    }
    throw parse_error("unrecognized signature", c.offset(),
                      "S2(, T2, Sg(g=, Ng(g=, D2(, T(, Q(, P( or D(");
}

namespace detail {
inline std::string join_orders(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(v[i]);
    }
    return s;
}
}  // namespace detail

// Canonical text form; parse_signature(render_signature(o)) == o for every
// signature the grammar can produce.
inline std::string render_signature(const OrbifoldSignature& o) {
    validate(o);
    bool plain = o.full_mirror_circles == 0 && o.mirror_intervals == 0 && o.corners.empty();
    if (plain && o.underlying_boundary_circles == 0) {
        if (!o.underlying_orientable) {
            std::string s = "Ng(g=" + std::to_string(o.genus) + ")";
            if (!o.cones.empty()) s += "(" + detail::join_orders(o.cones) + ")";
            return s;
        }
        if (o.genus == 0 && !o.cones.empty()) return "S2(" + detail::join_orders(o.cones) + ")";
        if (o.genus == 1 && o.cones.empty()) return "T2";
        std::string s = "Sg(g=" + std::to_string(o.genus) + ")";
        if (!o.cones.empty()) s += "(" + detail::join_orders(o.cones) + ")";
        return s;
    }
    if (plain && o.underlying_orientable && o.genus == 0 &&
        o.boundary_circles == o.underlying_boundary_circles && !o.cones.empty()) {
        std::string s = "D2(" + detail::join_orders(o.cones);
        if (o.boundary_circles != 1) s += ";c=" + std::to_string(o.boundary_circles);
        return s + ")";
    }
    bool mirror_disc = o.underlying_orientable && o.genus == 0 &&
                       o.underlying_boundary_circles == 1 && o.boundary_circles == 0 &&
                       !o.corners.empty();
    if (mirror_disc && o.cones.empty() && o.mirror_intervals == 0) {
        if (o.corners.size() == 3) return "T(" + detail::join_orders(o.corners) + ")";
        if (o.corners.size() == 4) return "Q(" + detail::join_orders(o.corners) + ")";
        return "P(" + detail::join_orders(o.corners) + ")";
    }
    if (mirror_disc && !o.cones.empty()) {
        std::string s =
            "D(" + detail::join_orders(o.cones) + ";" + detail::join_orders(o.corners) + ")";
        if (o.mirror_intervals > 0) s += ";b=" + std::to_string(o.mirror_intervals);
        return s;
    }
    throw not_implemented_error("signature has no textual form in this grammar");
}

// The five closed orientable Euclidean classes; k is the order of the
// holonomy rotation, the divisor that drives every invariant-dimension count.
enum class EuclideanClass { T2, S2222, S333, S244, S236 };

inline int euclidean_k(EuclideanClass c) {
    switch (c) {
        case EuclideanClass::T2: return 1;
        case EuclideanClass::S2222: return 2;
        case EuclideanClass::S333: return 3;
        case EuclideanClass::S244: return 4;
        case EuclideanClass::S236: return 6;
    }
    return 0;
}

inline std::vector<int> euclidean_cones(EuclideanClass c) {
    switch (c) {
        case EuclideanClass::T2: return {};
        case EuclideanClass::S2222: return {2, 2, 2, 2};
        case EuclideanClass::S333: return {3, 3, 3};
        case EuclideanClass::S244: return {2, 4, 4};
        case EuclideanClass::S236: return {2, 3, 6};
    }
    return {};
}

inline std::string euclidean_name(EuclideanClass c) {
    switch (c) {
        case EuclideanClass::T2: return "T2";
        case EuclideanClass::S2222: return "S2(2,2,2,2)";
        case EuclideanClass::S333: return "S2(3,3,3)";
        case EuclideanClass::S244: return "S2(2,4,4)";
        case EuclideanClass::S236: return "S2(2,3,6)";
    }
    return "?";
}

inline std::optional<EuclideanClass> euclidean_class_of(const OrbifoldSignature& o) {
    if (!o.closed() || !o.underlying_orientable || o.has_mirror() ||
        o.underlying_boundary_circles != 0)
        return std::nullopt;
    if (o.genus == 1 && o.cones.empty()) return EuclideanClass::T2;
    if (o.genus != 0) return std::nullopt;
    std::vector<int> k = o.cones;
    std::sort(k.begin(), k.end());
    if (k == std::vector<int>{2, 2, 2, 2}) return EuclideanClass::S2222;
    if (k == std::vector<int>{3, 3, 3}) return EuclideanClass::S333;
    if (k == std::vector<int>{2, 4, 4}) return EuclideanClass::S244;
    if (k == std::vector<int>{2, 3, 6}) return EuclideanClass::S236;
    return std::nullopt;
}

inline EuclideanClass parse_euclidean(std::string_view text) {
    auto cls = euclidean_class_of(parse_signature(text));
    if (!cls)
        throw value_error("not a closed orientable Euclidean class: " + std::string(text));
    return *cls;
}

}  // namespace orbidim::orbifold
