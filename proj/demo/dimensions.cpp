// Walks through the 2- and 3-orbifold dimension computations on a few
// signatures. Build target: demo_dimensions.
#include <cstdio>

#include "orbidim/orbidim.hpp"

using namespace orbidim;

int main() {
    auto o = orbifold::parse_signature("S2(3,3,4)");
    std::printf("chi(%s) = %s\n", orbifold::render_signature(o).c_str(),
                orbifold::euler_char(o).str().c_str());

    for (int n : {2, 3, 4, 6, 7, 12}) {
        auto rep = dimension::hitchin_dim(o, lie::psl(n));
        std::printf("hitchin dim at PGL(%d) = %lld   [", n,
                    static_cast<long long>(rep.value));
        for (std::size_t i = 0; i < rep.trace.size(); ++i)
            std::printf("%s%s = %lld", i ? ", " : "", rep.trace[i].label.c_str(),
                        static_cast<long long>(rep.trace[i].value));
        std::printf("]\n");
    }

    auto g2 = lie::exceptional(lie::Family::G2);
    std::printf("hitchin dim at G2 = %lld\n",
                static_cast<long long>(dimension::hitchin_dim(o, g2).value));

    std::printf("\nmirror quotients of S2(3,3,4):\n");
    for (const char* s : {"T(3,3,4)", "D(3;4)"}) {
        auto m = orbifold::parse_signature(s);
        std::printf("  %-10s chi = %-6s hitchin dim at PSL(3) = %lld\n", s,
                    orbifold::euler_char(m).str().c_str(),
                    static_cast<long long>(dimension::hitchin_dim(m, lie::psl(3)).value));
    }

    std::printf("\neuclidean cusp cross-sections at PSL(3):\n");
    for (auto cls : tables::kEuclideanClasses)
        std::printf("  %-12s char dim = %lld, invariant dim = %lld\n",
                    orbifold::euclidean_name(cls).c_str(),
                    static_cast<long long>(dimension::euclidean_char_dim(cls, lie::psl(3))),
                    static_cast<long long>(dimension::euclidean_invariant_dim(cls, lie::psl(3))));

    std::printf("\ncanonical component of a two-cusped 3-orbifold at PSL(4):\n");
    threeorb::BoundaryList cusps = {
        threeorb::boundary_from_signature(orbifold::parse_signature("T2")),
        threeorb::boundary_from_signature(orbifold::parse_signature("S2(3,3,3)")),
    };
    auto report = threeorb::canonical_dim(cusps, lie::psl(4));
    for (const auto& b : report.per_boundary)
        std::printf("  boundary %-12s contributes %lld/2 = %lld\n", b.description.c_str(),
                    static_cast<long long>(b.full_dim), static_cast<long long>(b.half_dim));
    std::printf("  total = %lld\n", static_cast<long long>(report.total));

    std::printf("\nexceptional fillings of the figure-eight complement, PGL(12): ");
    auto d = threeorb::fig8_component_dims(12);
    std::printf("(%lld, %lld, %lld)\n", static_cast<long long>(d.d334),
                static_cast<long long>(d.d245), static_cast<long long>(d.d237));
    return 0;
}
