// Acceptance gate: one line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "orbidim/orbidim.hpp"

namespace {

using namespace orbidim;
using Clock = std::chrono::steady_clock;

struct Criterion {
    int id;
    std::string description;
    bool pass = true;
    std::vector<std::string> notes = {};
    double ms = 0;

    void fail(const std::string& why) {
        pass = false;
        if (notes.size() < 20) notes.push_back(why);
    }
    void note(const std::string& what) {
        if (notes.size() < 60) notes.push_back(what);
    }
};

std::vector<lie::LieType> all_groups(int psl_max, int psp_max) {
    std::vector<lie::LieType> gs;
    for (int n = 2; n <= psl_max; ++n) gs.push_back(lie::psl(n));
    for (int m = 1; m <= psp_max; ++m) {
        gs.push_back(lie::psp(m));
        gs.push_back(lie::po_odd(m));
    }
    for (int m = 3; m <= psp_max; ++m) gs.push_back(lie::po_even(m));
    for (lie::Family f : {lie::Family::G2, lie::Family::F4, lie::Family::E6, lie::Family::E7,
                          lie::Family::E8})
        gs.push_back(lie::exceptional(f));
    return gs;
}

void check_exponent_catalog(Criterion& c) {
    for (const auto& g : all_groups(200, 100)) {
        std::int64_t sum = 0;
        for (int d : lie::exponents(g)) sum += 2 * d + 1;
        if (sum != lie::dim(g))
            c.fail(lie::render(g) + ": sum(2d+1) = " + std::to_string(sum) + ", dim = " +
                   std::to_string(lie::dim(g)));
        if (static_cast<int>(lie::exponents(g).size()) != lie::rank(g))
            c.fail(lie::render(g) + ": exponent count differs from rank");
    }
}

void check_triangle_series(Criterion& c) {
    auto o = orbifold::parse_signature("S2(3,3,4)");
    for (int n = 2; n <= 120; ++n) {
        std::int64_t engine = dimension::hitchin_dim(o, lie::psl(n)).value;
        std::int64_t closed = reference::hitchin_s2334_closed_form(n);
        if (engine != closed)
            c.fail("n=" + std::to_string(n) + ": engine " + std::to_string(engine) +
                   ", closed form " + std::to_string(closed));
    }
    if (dimension::hitchin_dim(o, lie::psl(12)).value != 14) c.fail("n=12 is not 14");
    if (dimension::hitchin_dim(o, lie::psl(7)).value != 4) c.fail("n=7 is not 4");
}

void check_euclidean_tables(Criterion& c) {
    int documented = 0;
    for (const auto& g : all_groups(40, 40)) {
        for (int col = 0; col < 5; ++col) {
            auto cls = tables::kEuclideanClasses[col];
            std::int64_t chr = dimension::euclidean_char_dim(cls, g);
            std::int64_t chr_ref = reference::char_dim_closed_form(g, cls);
            if (chr != chr_ref) {
                const char* why = reference::char_dim_known_deviation(g, cls, chr, chr_ref);
                if (why) {
                    ++documented;
                    c.note(std::string("documented deviation, char table, ") + lie::render(g) +
                           " @ " + tables::kEuclideanColumns[col] + ": computed " +
                           std::to_string(chr) + ", reference prints " +
                           std::to_string(chr_ref) + " (" + why + ")");
                } else {
                    c.fail(std::string("char table, ") + lie::render(g) + " @ " +
                           tables::kEuclideanColumns[col] + ": computed " + std::to_string(chr) +
                           ", reference " + std::to_string(chr_ref));
                }
            }
            std::int64_t inv = dimension::euclidean_invariant_dim(cls, g);
            std::int64_t inv_ref = reference::invariant_dim_closed_form(g, cls);
            if (inv != inv_ref)
                c.fail(std::string("invariant table, ") + lie::render(g) + " @ " +
                       tables::kEuclideanColumns[col] + ": computed " + std::to_string(inv) +
                       ", reference " + std::to_string(inv_ref));
        }
    }
    // 38 even-orthogonal torus cells (m = 3..40) plus the two transposed E6 cells
    if (documented != 40)
        c.fail("expected exactly 40 documented deviations, saw " + std::to_string(documented));
}

void check_stabilizer_closed_forms(Criterion& c) {
    for (int n = 2; n <= 120; ++n) {
        auto g = lie::psl(n);
        for (int k = 1; k <= 60; ++k) {
            if (centralizer::stab_dim_cyclic(g, k) != reference::psl_cyclic_closed_form(n, k))
                c.fail("PSL cyclic n=" + std::to_string(n) + " k=" + std::to_string(k));
            if (centralizer::stab_dim_dihedral(g, k) != reference::psl_dihedral_closed_form(n, k))
                c.fail("PSL dihedral n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    for (int m = 1; m <= 60; ++m) {
        auto g = lie::psp(m);
        for (int k = 1; k <= 40; ++k) {
            if (centralizer::stab_dim_cyclic(g, k) != reference::psp_cyclic_closed_form(m, k))
                c.fail("PSp cyclic m=" + std::to_string(m) + " k=" + std::to_string(k));
            if (centralizer::stab_dim_dihedral(g, k) != reference::psp_dihedral_closed_form(m, k))
                c.fail("PSp dihedral m=" + std::to_string(m) + " k=" + std::to_string(k));
        }
        if (centralizer::stab_dim_dihedral(g, 1) != reference::psp_mirror_closed_form(m))
            c.fail("PSp mirror m=" + std::to_string(m));
    }
}

orbifold::OrbifoldSignature random_mirror_signature(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> order(2, 9);
    std::uniform_int_distribution<int> corner_count(1, 5);
    std::uniform_int_distribution<int> cone_count(0, 3);
    for (;;) {
        orbifold::OrbifoldSignature o;
        o.underlying_boundary_circles = 1;
        o.full_mirror_circles = 1;
        int cr = corner_count(rng);
        for (int i = 0; i < cr; ++i) o.corners.push_back(order(rng));
        int cp = cone_count(rng);
        for (int i = 0; i < cp; ++i) o.cones.push_back(order(rng));
        if (orbifold::euler_char(o).sign() < 0) return o;
    }
}

void check_halving_and_parity(Criterion& c) {
    auto groups = all_groups(40, 40);
    std::mt19937_64 rng(20240229);
    for (int i = 0; i < 200; ++i) {
        auto o = random_mirror_signature(rng);
        auto d = orbifold::orientation_double(o);
        for (const auto& g : groups) {
            std::int64_t half = dimension::hitchin_dim(o, g).value;
            std::int64_t full = dimension::hitchin_dim(d, g).value;
            if (2 * half != full) {
                c.fail("halving fails for " + orbifold::render_signature(o) + " at " +
                       lie::render(g) + ": " + std::to_string(half) + " vs " +
                       std::to_string(full));
                return;
            }
            if (full % 2 != 0) {
                c.fail("odd closed orientable dimension for " + orbifold::render_signature(d) +
                       " at " + lie::render(g));
                return;
            }
        }
    }
}

void check_growth_defect_periodicity(Criterion& c) {
    auto o = orbifold::parse_signature("S2(3,3,4)");
    for (int n = 2; n + 12 <= 360; ++n)
        if (dimension::growth_defect(o, n) != dimension::growth_defect(o, n + 12)) {
            c.fail("PGL defect differs between n=" + std::to_string(n) + " and n+12");
            break;
        }
    for (const char* s : {"S2(3,3,4)", "T(3,3,4)", "D(3;4)"}) {
        auto sig = orbifold::parse_signature(s);
        for (int m = 1; m + 6 <= 180; ++m)
            if (dimension::growth_defect_psp(sig, m) !=
                dimension::growth_defect_psp(sig, m + 6)) {
                c.fail(std::string("PSp defect differs for ") + s + " between m=" +
                       std::to_string(m) + " and m+6");
                break;
            }
    }
}

void check_canonical_dims(Criterion& c) {
    using threeorb::BoundaryComponent;
    threeorb::BoundaryList torus = {BoundaryComponent::euclidean(orbifold::EuclideanClass::T2)};
    threeorb::BoundaryList two_tori = {torus[0], torus[0]};
    for (int n = 2; n <= 60; ++n) {
        if (threeorb::canonical_dim(torus, lie::psl(n)).total != n - 1)
            c.fail("[T2] at PSL(" + std::to_string(n) + ") is not n-1");
        if (threeorb::canonical_dim(two_tori, lie::psl(n)).total != 2 * n - 2)
            c.fail("[T2,T2] at PSL(" + std::to_string(n) + ") is not 2n-2");
    }
    threeorb::BoundaryList turnovers = {
        BoundaryComponent::euclidean(orbifold::EuclideanClass::S333),
        BoundaryComponent::euclidean(orbifold::EuclideanClass::S333)};
    if (threeorb::canonical_dim(turnovers, lie::psl(3)).total != 2)
        c.fail("[S2(3,3,3) x 2] at SL(3) is not 2");
}

void check_fig8_growth(Criterion& c) {
    auto d12 = threeorb::fig8_component_dims(12);
    if (d12.d334 != 14 || d12.d245 != 8 || d12.d237 != 4)
        c.fail("n=12 is (" + std::to_string(d12.d334) + "," + std::to_string(d12.d245) + "," +
               std::to_string(d12.d237) + "), expected (14,8,4)");
    int n = 1000;
    auto d = threeorb::fig8_component_dims(n);
    double n2 = static_cast<double>(n) * n;
    struct {
        std::int64_t value;
        int denom;
    } rows[] = {{d.d334, 12}, {d.d245, 20}, {d.d237, 42}};
    for (auto [value, denom] : rows) {
        double ratio = static_cast<double>(denom) * static_cast<double>(value) / n2;
        if (std::abs(ratio - 1.0) >= 0.01)
            c.fail("n=1000: " + std::to_string(denom) +
                   " d / n^2 = " + std::to_string(ratio) + ", not within 1%");
    }
}

void check_whitehead_piecewise(Criterion& c) {
    for (int n = 2; n <= 120; ++n) {
        auto d = threeorb::whitehead_component_dims(n);
        if (d.d33 != reference::whitehead_d33_closed_form(n))
            c.fail("d33 branch fails at n=" + std::to_string(n));
        if (d.d24 != reference::whitehead_d24_closed_form(n))
            c.fail("d24 branch fails at n=" + std::to_string(n));
        if (d.d23 != reference::whitehead_d23_closed_form(n))
            c.fail("d23 branch fails at n=" + std::to_string(n));
    }
}

void check_trace_identity(Criterion& c) {
    std::mt19937_64 rng(42);
    double max_residual = 0;
    double max_ch = 0;
    for (int i = 0; i < 10000; ++i) {
        auto A = lawton::random_unimodular(rng);
        auto B = lawton::random_unimodular(rng);
        max_residual = std::max(max_residual, lawton::lawton_residual(A, B, 1e-6));
        max_ch = std::max(max_ch, lawton::cayley_hamilton_residual(A));
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max residual %.3e, max Cayley-Hamilton %.3e", max_residual,
                  max_ch);
    c.note(buf);
    if (max_residual > 1e-8) c.fail("trace identity residual exceeds 1e-8");
    if (max_ch > 1e-9) c.fail("Cayley-Hamilton residual exceeds 1e-9");
}

void check_reference_points(Criterion& c) {
    auto checks = lawton::verify_reference_points();
    if (checks.size() < 9) c.fail("reference battery shrank");
    for (const auto& p : checks) {
        if (!p.pass) c.fail(p.name + ": " + p.detail);
        if (!p.exact) c.fail(p.name + " fell back to floating point");
    }
}

void check_euler_characteristics(Criterion& c) {
    auto expect = [&](const char* s, Rational want) {
        Rational got = orbifold::euler_char(orbifold::parse_signature(s));
        if (got != want)
            c.fail(std::string(s) + ": chi = " + got.str() + ", expected " + want.str());
    };
    expect("T2", Rational(0));
    expect("S2(2,2,2,2)", Rational(0));
    expect("S2(3,3,3)", Rational(0));
    expect("S2(2,4,4)", Rational(0));
    expect("S2(2,3,6)", Rational(0));
    expect("S2(3,3,4)", Rational(-1, 12));
    expect("D2(3,3)", Rational(-1, 3));
    expect("T(3,3,4)", Rational(-1, 24));
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "exponent catalog: sum(2d+1) = dim, classical parameters to 200 and exceptionals"},
        {2, "S2(3,3,4) Hitchin series matches the mod-12 closed forms, n = 2..120"},
        {3, "euclidean character/invariant tables match the reference transcription"},
        {4, "stabilizer dimensions match the sigma closed forms (PGL n<=120, PSp m<=60)"},
        {5, "mirror halving and parity over 200 generated signatures, groups up to 40"},
        {6, "growth defect periodicity (PGL period 12 to n=360, PSp period 6)"},
        {7, "canonical dimensions: [T2] -> n-1, [T2,T2] -> 2n-2, [S2(3,3,3) x 2] -> 2"},
        {8, "figure-eight fillings: (14,8,4) at n=12, quadratic growth within 1% at n=1000"},
        {9, "Whitehead fillings match every piecewise branch, n = 2..120"},
        {10, "trace identity residual <= 1e-8 on 10000 seeded pairs, Cayley-Hamilton <= 1e-9"},
        {11, "exact reference-point battery on the SL(3,C) character hypersurface"},
        {12, "orbifold Euler characteristics of the reference signatures"},
    };

    void (*runners[])(Criterion&) = {
        check_exponent_catalog,   check_triangle_series,      check_euclidean_tables,
        check_stabilizer_closed_forms, check_halving_and_parity, check_growth_defect_periodicity,
        check_canonical_dims,     check_fig8_growth,          check_whitehead_piecewise,
        check_trace_identity,     check_reference_points,     check_euler_characteristics,
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion& c = criteria[i];
        auto start = Clock::now();
        try {
            runners[i](c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        c.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if ((c.id == 1 || c.id == 2) && c.ms > 1000) c.fail("took longer than 1 s");
        if (c.id == 3 && c.ms > 2000) c.fail("took longer than 2 s");
        if (c.id == 10 && c.ms > 5000) c.fail("took longer than 5 s");

        std::printf("[%s] criterion %d: %s (%.0f ms)\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.description.c_str(), c.ms);
        for (const auto& n : c.notes) std::printf("    - %s\n", n.c_str());
        if (!c.pass) ++failures;
    }

    if (failures == 0)
        std::printf("acceptance: all %zu criteria pass\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
