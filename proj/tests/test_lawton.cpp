#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdint>
#include <random>

#include "orbidim/lawton.hpp"
#include "orbidim/quadratic.hpp"

using namespace orbidim;
using namespace orbidim::lawton;

namespace {

// Independent transcription of the two trace polynomials, written as plain
// expressions rather than term lists. Integer inputs keep every intermediate
// value exact, so any disagreement with the term lists is a transcription bug
// in one of the two copies.
long long p_display(long long x, long long y, long long z, long long u, long long v, long long w,
                    long long r, long long s) {
    return x * u * y * v - u * y * r - x * v * s - u * v * z - x * y * w + r * s + x * u + y * v +
           z * w - 3;
}

long long q_display(long long x, long long y, long long z, long long u, long long v, long long w,
                    long long r, long long s) {
    return v * u * u * x * x * y + u * v * v * y * y * x - r * y * x * u * u - u * x * v * r * w -
           r * y * y * v * u + r * x * x * v * v - r * z * y * x * v + s * u * u * y * y -
           s * w * v * u * y - s * v * u * x * x - u * x * y * s * z - s * v * v * y * x -
           u * u * u * v * y + u * u * v * v * w - z * u * u * x * v - u * v * v * v * x -
           z * v * v * y * u - w * x * x * u * y - u * y * y * y * x - w * y * y * v * x -
           x * x * x * v * y + x * x * y * y * z + u * w * r * r - 2 * r * r * x * v +
           r * r * z * y + s * u * r * x + s * v * r * y + w * s * z * r + r * z * u * u +
           r * u * v * v + r * v * z * z + x * r * w * w + r * w * y * y + x * x * y * r -
           2 * s * s * u * y + s * s * w * v + x * z * s * s + u * u * v * s + u * s * z * z +
           s * z * v * v + s * y * w * w + s * w * x * x + s * x * y * y + u * u * w * y -
           2 * w * w * v * u + x * u * y * v + w * u * z * x + u * y * y * z + x * v * v * w +
           w * v * z * y + x * x * z * v - 2 * z * z * y * x + r * r * r + 3 * u * y * r -
           3 * r * v * w - 3 * r * z * x + s * s * s - 3 * s * w * u + 3 * x * v * s -
           3 * s * y * z + u * u * u + 3 * u * v * z + v * v * v + w * w * w + 3 * x * y * w +
           x * x * x + y * y * y + z * z * z - 6 * r * s - 6 * x * u - 6 * y * v - 6 * z * w + 9;
}

Mat3<cdouble> conjugate(const Mat3<cdouble>& g, const Mat3<cdouble>& a) {
    return mat3_mul(g, mat3_mul(a, mat3_inverse(g)));
}

}  // namespace

TEST_CASE("matrix helpers") {
    auto I = mat3_identity<cdouble>();
    CHECK(mat3_trace(I) == cdouble(3));
    CHECK(mat3_det(I) == cdouble(1));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto A = random_unimodular(rng);
        CHECK(std::abs(mat3_det(A) - cdouble(1)) < 1e-12);
        auto Ai = mat3_inverse(A);
        auto P = mat3_mul(A, Ai);
        for (int k = 0; k < 9; ++k) CHECK(std::abs(P[k] - I[k]) < 1e-10);
        auto B = random_unimodular(rng);
        CHECK(std::abs(mat3_det(mat3_mul(A, B)) - mat3_det(A) * mat3_det(B)) < 1e-10);
        CHECK(std::abs(mat3_trace(mat3_mul(A, B)) - mat3_trace(mat3_mul(B, A))) < 1e-10);
    }

    Mat3<cdouble> singular{};  // all zeros
    CHECK_THROWS_AS(mat3_inverse(singular), validation_error);
}

TEST_CASE("term lists match the expression transcription") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> val(-9, 9);
    for (int i = 0; i < 400; ++i) {
        std::array<long long, 8> a{};
        for (auto& e : a) e = val(rng);
        auto [x, y, z, u, v, w, r, s] = a;
        INFO(x << "," << y << "," << z << "," << u << "," << v << "," << w << "," << r << ","
               << s);
        CHECK(eval_P(a) == p_display(x, y, z, u, v, w, r, s));
        CHECK(eval_Q(a) == q_display(x, y, z, u, v, w, r, s));
    }
    // degenerate corners of the cube too
    for (long long c : {-9LL, 0LL, 1LL, 9LL}) {
        std::array<long long, 8> a{c, c, c, c, c, c, c, c};
        CHECK(eval_P(a) == p_display(c, c, c, c, c, c, c, c));
        CHECK(eval_Q(a) == q_display(c, c, c, c, c, c, c, c));
    }
    CHECK(eval_P(std::array<long long, 8>{0, 0, 1, 0, 0, 1, 1, 1}) == -1);
    CHECK(eval_Q(std::array<long long, 8>{0, 0, 1, 0, 0, 1, 1, 1}) == 2);
}

TEST_CASE("polynomial symmetries") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> val(-6, 6);
    for (int i = 0; i < 200; ++i) {
        long long x = val(rng), y = val(rng), z = val(rng), u = val(rng), v = val(rng),
                  w = val(rng), r = val(rng), s = val(rng);
        // generator swap a<->b: x<->y, u<->v, r<->s
        CHECK(eval_P(std::array<long long, 8>{x, y, z, u, v, w, r, s}) ==
              eval_P(std::array<long long, 8>{y, x, z, v, u, w, s, r}));
        CHECK(eval_Q(std::array<long long, 8>{x, y, z, u, v, w, r, s}) ==
              eval_Q(std::array<long long, 8>{y, x, z, v, u, w, s, r}));
        // inversion a->a^-1, b->b^-1: x<->u, y<->v, z<->w, r<->s
        CHECK(eval_P(std::array<long long, 8>{x, y, z, u, v, w, r, s}) ==
              eval_P(std::array<long long, 8>{u, v, w, x, y, z, s, r}));
        CHECK(eval_Q(std::array<long long, 8>{x, y, z, u, v, w, r, s}) ==
              eval_Q(std::array<long long, 8>{u, v, w, x, y, z, s, r}));
    }
}

TEST_CASE("trace coordinates of explicit matrices") {
    auto I = mat3_identity<cdouble>();
    auto c = trace_coords(I, I);
    CHECK(std::abs(c.x - cdouble(3)) < 1e-14);
    CHECK(std::abs(c.tau - cdouble(3)) < 1e-14);
    CHECK(std::abs(eval_P(c) - cdouble(6)) < 1e-12);
    CHECK(std::abs(eval_Q(c) - cdouble(9)) < 1e-12);
    CHECK(lawton_residual(c) < 1e-12);

    Mat3<cdouble> twoI{};
    for (int i = 0; i < 9; i += 4) twoI[i] = cdouble(2);
    CHECK_THROWS_AS(trace_coords(twoI, I), validation_error);
}

TEST_CASE("trace identity on random pairs") {
    std::mt19937_64 rng(42);
    double max_res = 0, max_ch = 0;
    for (int i = 0; i < 500; ++i) {
        auto A = random_unimodular(rng);
        auto B = random_unimodular(rng);
        max_res = std::max(max_res, lawton_residual(A, B));
        max_ch = std::max(max_ch, cayley_hamilton_residual(A));
    }
    CHECK(max_res < 1e-8);
    CHECK(max_ch < 1e-9);
}

TEST_CASE("companion root is the reversed commutator") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        auto A = random_unimodular(rng);
        auto B = random_unimodular(rng);
        auto c = trace_coords(A, B);
        cdouble P = eval_P(c);
        cdouble Q = eval_Q(c);
        auto Ai = mat3_inverse(A);
        auto Bi = mat3_inverse(B);
        cdouble tau2 = mat3_trace(mat3_mul(mat3_mul(B, A), mat3_mul(Bi, Ai)));
        double scale = std::max({1.0, std::abs(P), std::abs(Q)});
        CHECK(std::abs(c.tau + tau2 - P) / scale < 1e-9);
        CHECK(std::abs(c.tau * tau2 - Q) / scale < 1e-9);

        // swapping the generators lands on the companion root
        auto cs = trace_coords(B, A);
        CHECK(std::abs(cs.x - c.y) < 1e-9);
        CHECK(std::abs(cs.u - c.v) < 1e-9);
        CHECK(std::abs(cs.z - c.z) < 1e-9);
        CHECK(std::abs(cs.r - c.s) < 1e-9);
        CHECK(std::abs(cs.tau - tau2) < 1e-9);

        // inverting both generators fixes every coordinate up to x<->u type swaps
        auto ci = trace_coords(Ai, Bi);
        CHECK(std::abs(ci.x - c.u) < 1e-9);
        CHECK(std::abs(ci.z - c.w) < 1e-9);
        CHECK(std::abs(ci.r - c.s) < 1e-9);
        CHECK(std::abs(ci.tau - c.tau) < 1e-9);
    }
}

TEST_CASE("trace coordinates are conjugation invariant") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        auto A = random_unimodular(rng);
        auto B = random_unimodular(rng);
        auto g = random_unimodular(rng);
        auto c = trace_coords(A, B);
        auto cc = trace_coords(conjugate(g, A), conjugate(g, B), 1e-6);
        CHECK(std::abs(cc.x - c.x) < 1e-7);
        CHECK(std::abs(cc.y - c.y) < 1e-7);
        CHECK(std::abs(cc.z - c.z) < 1e-7);
        CHECK(std::abs(cc.u - c.u) < 1e-7);
        CHECK(std::abs(cc.v - c.v) < 1e-7);
        CHECK(std::abs(cc.w - c.w) < 1e-7);
        CHECK(std::abs(cc.r - c.r) < 1e-7);
        CHECK(std::abs(cc.s - c.s) < 1e-7);
        CHECK(std::abs(cc.tau - c.tau) < 1e-7);
    }
}

TEST_CASE("quadratic field arithmetic") {
    using Q2 = Quad<2>;
    Q2 root(Rational(0), Rational(1));
    CHECK(root * root == Q2(2));
    CHECK((Q2(1) + root) * (Q2(1) - root) == Q2(-1));
    CHECK(Q2(Rational(1, 2), Rational(3, 4)).conj() == Q2(Rational(1, 2), Rational(-3, 4)));

    using QI = Quad<-1>;
    QI i(Rational(0), Rational(1));
    CHECK(i * i == QI(-1));
    CHECK((QI(2) + i) * (QI(2) - i) == QI(5));

    using Q3 = Quad<-3>;
    Q3 omega(Rational(-1, 2), Rational(1, 2));
    CHECK(omega * omega * omega == Q3(1));
    CHECK(omega * omega + omega + Q3(1) == Q3(0));
    CHECK((omega * omega).is_zero() == false);
}

TEST_CASE("exact evaluation over quadratic fields") {
    using QI = Quad<-1>;
    // an isolated point: z and w determine the slice, all other traces vanish
    QI z(Rational(-1), Rational(2));
    QI w(Rational(-1), Rational(-2));
    std::array<QI, 8> vars{QI(0), QI(0), z, QI(0), QI(0), w, QI(0), QI(0)};
    QI P = eval_P(vars);
    QI Q = eval_Q(vars);
    QI tau(1);
    CHECK((tau * tau - P * tau + Q).is_zero());
    CHECK((P * P - QI(4) * Q).is_zero());  // double root: the point is isolated
}

TEST_CASE("reference point battery") {
    auto checks = verify_reference_points();
    CHECK(checks.size() >= 9);
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.exact);
        CHECK(c.pass);
    }
}
