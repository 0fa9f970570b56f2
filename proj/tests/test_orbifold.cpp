#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "orbidim/orbifold.hpp"

using namespace orbidim;
using orbifold::OrbifoldSignature;

TEST_CASE("parsing shorthand signatures") {
    SECTION("sphere with cone points") {
        auto o = orbifold::parse_signature("S2(3,3,4)");
        CHECK(o.underlying_orientable);
        CHECK(o.genus == 0);
        CHECK(o.cones == std::vector<int>{3, 3, 4});
        CHECK(o.closed());
        CHECK(o.orbifold_orientable());
    }
    SECTION("torus and higher genus") {
        auto t = orbifold::parse_signature("T2");
        CHECK(t.genus == 1);
        CHECK(t.cones.empty());
        auto s = orbifold::parse_signature("Sg(g=2)");
        CHECK(s.genus == 2);
        auto sc = orbifold::parse_signature("Sg(g=2)(5,7)");
        CHECK(sc.cones == std::vector<int>{5, 7});
        auto n = orbifold::parse_signature("Ng(g=3)(2,2)");
        CHECK_FALSE(n.underlying_orientable);
        CHECK(n.genus == 3);
        CHECK(n.cones == std::vector<int>{2, 2});
    }
    SECTION("disc with boundary circles") {
        auto d = orbifold::parse_signature("D2(3,3)");
        CHECK(d.boundary_circles == 1);
        CHECK(d.cones == std::vector<int>{3, 3});
        CHECK_FALSE(d.closed());
        auto d2 = orbifold::parse_signature("D2(2,4;c=2)");
        CHECK(d2.boundary_circles == 2);
        CHECK(d2.underlying_boundary_circles == 2);
    }
    SECTION("mirror polygons") {
        auto t = orbifold::parse_signature("T(3,3,4)");
        CHECK(t.corners == std::vector<int>{3, 3, 4});
        CHECK(t.full_mirror_circles == 1);
        CHECK(t.closed());
        CHECK_FALSE(t.orbifold_orientable());
        auto q = orbifold::parse_signature("Q(2,2,2,2)");
        CHECK(q.corners.size() == 4);
        auto p = orbifold::parse_signature("P(2,3,4,5,6)");
        CHECK(p.corners.size() == 5);
    }
    SECTION("mirror disc with cones") {
        auto d = orbifold::parse_signature("D(3;4)");
        CHECK(d.cones == std::vector<int>{3});
        CHECK(d.corners == std::vector<int>{4});
        CHECK(d.mirror_intervals == 0);
        CHECK(d.full_mirror_circles == 1);
        auto db = orbidim::orbifold::parse_signature("D(3;4);b=2");
        CHECK(db.mirror_intervals == 2);
        CHECK(db.full_mirror_circles == 0);
        CHECK_FALSE(db.closed());
    }
    SECTION("whitespace and case insensitivity") {
        CHECK(orbifold::parse_signature(" s2( 3 , 3 ,4) ") ==
              orbifold::parse_signature("S2(3,3,4)"));
        CHECK(orbifold::parse_signature("t2") == orbifold::parse_signature("T2"));
    }
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset_of = [](const std::string& text) {
        try {
            orbifold::parse_signature(text);
        } catch (const parse_error& e) {
            return static_cast<long long>(e.offset);
        }
        return -1LL;
    };
    CHECK(offset_of("S2(3,3") == 6);
    CHECK(offset_of("S2(3,1,4)") == 5);
    CHECK(offset_of("S2(3,,4)") == 5);
    CHECK(offset_of("X(3)") == 0);
    CHECK(offset_of("S2(3,3,4)z") == 9);
    CHECK(offset_of("T(3,3,4") == 7);
    CHECK_THROWS_AS(orbifold::parse_signature("T(3,3)"), parse_error);
    CHECK_THROWS_AS(orbifold::parse_signature("Q(2,2,2)"), parse_error);
    CHECK_THROWS_AS(orbifold::parse_signature("D2(3;c=0)"), parse_error);
    CHECK_THROWS_AS(orbifold::parse_signature("Ng(g=0)"), parse_error);
}

TEST_CASE("euler characteristics") {
    auto chi = [](const char* s) { return orbifold::euler_char(orbifold::parse_signature(s)); };
    CHECK(chi("S2(3,3,4)") == Rational(-1, 12));
    CHECK(chi("T2") == Rational(0));
    CHECK(chi("S2(2,2,2,2)") == Rational(0));
    CHECK(chi("S2(3,3,3)") == Rational(0));
    CHECK(chi("S2(2,4,4)") == Rational(0));
    CHECK(chi("S2(2,3,6)") == Rational(0));
    CHECK(chi("D2(3,3)") == Rational(-1, 3));
    CHECK(chi("T(3,3,4)") == Rational(-1, 24));
    CHECK(chi("T(2,3,7)") == Rational(-1, 84));
    CHECK(chi("S2(2,3,7)") == Rational(-1, 42));
    CHECK(chi("Sg(g=2)") == Rational(-2));
    CHECK(chi("Ng(g=1)(2,2)") == Rational(0));  // mirrorless Klein-type quotient
    CHECK(chi("D(3;4)") == Rational(1) - Rational(2, 3) - Rational(3, 8));
    CHECK(chi("Q(2,2,2,2)") == Rational(0));
    CHECK(chi("T(2,4,4)") == Rational(0));
    CHECK(chi("T(2,3,6)") == Rational(0));
    CHECK(chi("T(3,3,3)") == Rational(0));
    CHECK(chi("P(2,2,2,2,2)") == Rational(-1, 4));
}

TEST_CASE("geometry classification") {
    auto geo = [](const char* s) {
        return orbifold::classify_geometry(orbifold::parse_signature(s));
    };
    using G = orbifold::Geometry;
    CHECK(geo("S2(2,3,6)") == G::Euclidean);
    CHECK(geo("S2(3,3,4)") == G::Hyperbolic);
    CHECK(geo("S2(5)") == G::Bad);
    CHECK(geo("S2(2,3)") == G::Bad);
    CHECK(geo("S2(3,3)") == G::Spherical);
    CHECK(geo("S2(2,3,5)") == G::Spherical);
    CHECK(geo("S2(2,3,7)") == G::Hyperbolic);
    CHECK(geo("T2") == G::Euclidean);
    CHECK(geo("Sg(g=2)") == G::Hyperbolic);
    CHECK(geo("Q(2,2,2,2)") == G::Euclidean);
    CHECK(geo("T(3,3,3)") == G::Euclidean);
    CHECK(geo("T(2,4,4)") == G::Euclidean);
    CHECK(geo("T(2,3,6)") == G::Euclidean);
    CHECK(geo("T(2,3,7)") == G::Hyperbolic);
    CHECK(geo("P(3)") == G::Bad);
    CHECK(geo("P(3,4)") == G::Bad);
    CHECK(geo("P(4,4)") == G::Spherical);
    CHECK_THROWS_AS(geo("D2(3,3)"), not_implemented_error);
}

TEST_CASE("orientation double cover") {
    auto dbl = [](const char* s) {
        return orbifold::orientation_double(orbifold::parse_signature(s));
    };
    CHECK(dbl("T(3,3,4)") == orbifold::parse_signature("S2(3,3,4)"));
    CHECK(dbl("D(3;4)") == orbifold::parse_signature("S2(3,3,4)"));
    CHECK(dbl("Q(2,3,4,5)") == orbifold::parse_signature("S2(2,3,4,5)"));
    CHECK(dbl("D(2,5;3,3)") == orbifold::parse_signature("S2(2,2,5,5,3,3)"));
    CHECK_THROWS_AS(dbl("S2(3,3,4)"), not_implemented_error);
    CHECK_THROWS_AS(dbl("D(3;4);b=1"), not_implemented_error);

    // covering multiplicativity chi(double) = 2 chi over assorted mirror inputs
    for (const char* s : {"T(3,3,4)", "T(2,3,7)", "Q(2,2,2,3)", "P(2,2,3,3,4)", "D(3;4)",
                          "D(2,2;5)", "D(7;2,2,2)"}) {
        auto o = orbifold::parse_signature(s);
        INFO(s);
        CHECK(orbifold::euler_char(orbifold::orientation_double(o)) ==
              Rational(2) * orbifold::euler_char(o));
    }
}

TEST_CASE("signature render and parse round-trip") {
    for (const char* s :
         {"S2(3,3,4)", "T2", "Sg(g=2)", "Sg(g=1)(2)", "Ng(g=2)(3,4)", "D2(3,3)", "D2(2,4;c=3)",
          "T(3,3,4)", "Q(2,2,2,2)", "P(2,2,3,3,4)", "D(3;4)", "D(3;4);b=2", "D(2,2;3,5)"}) {
        auto o = orbifold::parse_signature(s);
        INFO(s);
        CHECK(orbifold::parse_signature(orbifold::render_signature(o)) == o);
    }
    CHECK(orbifold::render_signature(orbifold::parse_signature("s2(3, 3, 4)")) == "S2(3,3,4)");
    CHECK(orbifold::render_signature(orbifold::parse_signature("d(3;4); b = 2")) == "D(3;4);b=2");
}

TEST_CASE("euclidean class detection") {
    using EC = orbifold::EuclideanClass;
    CHECK(orbifold::parse_euclidean("T2") == EC::T2);
    CHECK(orbifold::parse_euclidean("S2(2,2,2,2)") == EC::S2222);
    CHECK(orbifold::parse_euclidean("S2(3,3,3)") == EC::S333);
    CHECK(orbifold::parse_euclidean("S2(4,2,4)") == EC::S244);  // order-insensitive
    CHECK(orbifold::parse_euclidean("S2(2,3,6)") == EC::S236);
    CHECK_THROWS_AS(orbifold::parse_euclidean("S2(3,3,4)"), value_error);
    CHECK_THROWS_AS(orbifold::parse_euclidean("T(3,3,3)"), value_error);
    CHECK(orbifold::euclidean_k(EC::S244) == 4);
    CHECK(orbifold::euclidean_cones(EC::S236) == std::vector<int>{2, 3, 6});
    for (EC c : {EC::T2, EC::S2222, EC::S333, EC::S244, EC::S236})
        CHECK(orbifold::euclidean_class_of(
                  orbifold::parse_signature(orbifold::euclidean_name(c))) == c);
}

TEST_CASE("validate rejects inconsistent structures") {
    OrbifoldSignature o;
    o.cones = {1};
    CHECK_THROWS_AS(orbifold::validate(o), value_error);
    o = {};
    o.corners = {3};
    CHECK_THROWS_AS(orbifold::validate(o), value_error);  // corner without mirror circle
    o = {};
    o.boundary_circles = 1;
    CHECK_THROWS_AS(orbifold::validate(o), value_error);  // tag exceeds underlying circles
    o = {};
    o.underlying_boundary_circles = 1;
    o.full_mirror_circles = 1;
    o.mirror_intervals = 1;
    CHECK_THROWS_AS(orbifold::validate(o), value_error);  // intervals need a mixed circle
}
