#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orbidim/errors.hpp"
#include "orbidim/quadratic.hpp"
#include "orbidim/rational.hpp"

namespace orbidim::lawton {

using cdouble = std::complex<double>;

template <typename T>
using Mat3 = std::array<T, 9>;  // row-major

template <typename T>
Mat3<T> mat3_identity() {
    return {T(1), T(0), T(0), T(0), T(1), T(0), T(0), T(0), T(1)};
}

template <typename T>
Mat3<T> mat3_mul(const Mat3<T>& a, const Mat3<T>& b) {
    Mat3<T> c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T sum = T(0);
            for (int k = 0; k < 3; ++k) sum = sum + a[3 * i + k] * b[3 * k + j];
            c[3 * i + j] = sum;
        }
    return c;
}

template <typename T>
T mat3_trace(const Mat3<T>& a) {
    return a[0] + a[4] + a[8];
}

template <typename T>
T mat3_det(const Mat3<T>& a) {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

// Transposed cofactor matrix; equals the inverse when det = 1.
template <typename T>
Mat3<T> mat3_adjugate(const Mat3<T>& a) {
    Mat3<T> c{};
    c[0] = a[4] * a[8] - a[5] * a[7];
    c[1] = a[2] * a[7] - a[1] * a[8];
    c[2] = a[1] * a[5] - a[2] * a[4];
    c[3] = a[5] * a[6] - a[3] * a[8];
    c[4] = a[0] * a[8] - a[2] * a[6];
    c[5] = a[2] * a[3] - a[0] * a[5];
    c[6] = a[3] * a[7] - a[4] * a[6];
    c[7] = a[1] * a[6] - a[0] * a[7];
    c[8] = a[0] * a[4] - a[1] * a[3];
    return c;
}

inline Mat3<cdouble> mat3_inverse(const Mat3<cdouble>& a) {
    cdouble d = mat3_det(a);
    if (std::abs(d) < 1e-14) throw validation_error("matrix is numerically singular");
    Mat3<cdouble> adj = mat3_adjugate(a);
    for (cdouble& e : adj) e /= d;
    return adj;
}

inline double mat3_frobenius(const Mat3<cdouble>& a) {
    double s = 0;
    for (const cdouble& e : a) s += std::norm(e);
    return std::sqrt(s);
}

// Monomials over the eight trace coordinates in the fixed order
// (x, y, z, u, v, w, r, s).
struct PolyTerm {
    int coeff;
    std::array<std::uint8_t, 8> exps;
};

// P = xuyv - uyr - xvs - uvz - xyw + rs + xu + yv + zw - 3.
inline constexpr std::array<PolyTerm, 10> kPTerms{{
    {+1, {1, 1, 0, 1, 1, 0, 0, 0}},  // x y u v
    {-1, {0, 1, 0, 1, 0, 0, 1, 0}},  // - u y r
    {-1, {1, 0, 0, 0, 1, 0, 0, 1}},  // - x v s
    {-1, {0, 0, 1, 1, 1, 0, 0, 0}},  // - u v z
    {-1, {1, 1, 0, 0, 0, 1, 0, 0}},  // - x y w
    {+1, {0, 0, 0, 0, 0, 0, 1, 1}},  // r s
    {+1, {1, 0, 0, 1, 0, 0, 0, 0}},  // x u
    {+1, {0, 1, 0, 0, 1, 0, 0, 0}},  // y v
    {+1, {0, 0, 1, 0, 0, 1, 0, 0}},  // z w
    {-3, {0, 0, 0, 0, 0, 0, 0, 0}},
}};

// Q, 73 monomials.
inline constexpr std::array<PolyTerm, 73> kQTerms{{
    {+1, {2, 1, 0, 2, 1, 0, 0, 0}},  // x^2 y u^2 v
    {+1, {1, 2, 0, 1, 2, 0, 0, 0}},  // x y^2 u v^2
    {-1, {1, 1, 0, 2, 0, 0, 1, 0}},  // - x y u^2 r
    {-1, {1, 0, 0, 1, 1, 1, 1, 0}},  // - x u v w r
    {-1, {0, 2, 0, 1, 1, 0, 1, 0}},  // - y^2 u v r
    {+1, {2, 0, 0, 0, 2, 0, 1, 0}},  // x^2 v^2 r
    {-1, {1, 1, 1, 0, 1, 0, 1, 0}},  // - x y z v r
    {+1, {0, 2, 0, 2, 0, 0, 0, 1}},  // y^2 u^2 s
    {-1, {0, 1, 0, 1, 1, 1, 0, 1}},  // - y u v w s
    {-1, {2, 0, 0, 1, 1, 0, 0, 1}},  // - x^2 u v s
    {-1, {1, 1, 1, 1, 0, 0, 0, 1}},  // - x y z u s
    {-1, {1, 1, 0, 0, 2, 0, 0, 1}},  // - x y v^2 s
    {-1, {0, 1, 0, 3, 1, 0, 0, 0}},  // - y u^3 v
    {+1, {0, 0, 0, 2, 2, 1, 0, 0}},  // u^2 v^2 w
    {-1, {1, 0, 1, 2, 1, 0, 0, 0}},  // - x z u^2 v
    {-1, {1, 0, 0, 1, 3, 0, 0, 0}},  // - x u v^3
    {-1, {0, 1, 1, 1, 2, 0, 0, 0}},  // - y z u v^2
    {-1, {2, 1, 0, 1, 0, 1, 0, 0}},  // - x^2 y u w
    {-1, {1, 3, 0, 1, 0, 0, 0, 0}},  // - x y^3 u
    {-1, {1, 2, 0, 0, 1, 1, 0, 0}},  // - x y^2 v w
    {-1, {3, 1, 0, 0, 1, 0, 0, 0}},  // - x^3 y v
    {+1, {2, 2, 1, 0, 0, 0, 0, 0}},  // x^2 y^2 z
    {+1, {0, 0, 0, 1, 0, 1, 2, 0}},  // u w r^2
    {-2, {1, 0, 0, 0, 1, 0, 2, 0}},  // -2 x v r^2
    {+1, {0, 1, 1, 0, 0, 0, 2, 0}},  // y z r^2
    {+1, {1, 0, 0, 1, 0, 0, 1, 1}},  // x u r s
    {+1, {0, 1, 0, 0, 1, 0, 1, 1}},  // y v r s
    {+1, {0, 0, 1, 0, 0, 1, 1, 1}},  // z w r s
    {+1, {0, 0, 1, 2, 0, 0, 1, 0}},  // z u^2 r
    {+1, {0, 0, 0, 1, 2, 0, 1, 0}},  // u v^2 r
    {+1, {0, 0, 2, 0, 1, 0, 1, 0}},  // z^2 v r
    {+1, {1, 0, 0, 0, 0, 2, 1, 0}},  // x w^2 r
    {+1, {0, 2, 0, 0, 0, 1, 1, 0}},  // y^2 w r
    {+1, {2, 1, 0, 0, 0, 0, 1, 0}},  // x^2 y r
    {-2, {0, 1, 0, 1, 0, 0, 0, 2}},  // -2 y u s^2
    {+1, {0, 0, 0, 0, 1, 1, 0, 2}},  // v w s^2
    {+1, {1, 0, 1, 0, 0, 0, 0, 2}},  // x z s^2
    {+1, {0, 0, 0, 2, 1, 0, 0, 1}},  // u^2 v s
    {+1, {0, 0, 2, 1, 0, 0, 0, 1}},  // z^2 u s
    {+1, {0, 0, 1, 0, 2, 0, 0, 1}},  // z v^2 s
    {+1, {0, 1, 0, 0, 0, 2, 0, 1}},  // y w^2 s
    {+1, {2, 0, 0, 0, 0, 1, 0, 1}},  // x^2 w s
    {+1, {1, 2, 0, 0, 0, 0, 0, 1}},  // x y^2 s
    {+1, {0, 1, 0, 2, 0, 1, 0, 0}},  // y u^2 w
    {-2, {0, 0, 0, 1, 1, 2, 0, 0}},  // -2 u v w^2
    {+1, {1, 1, 0, 1, 1, 0, 0, 0}},  // x y u v
    {+1, {1, 0, 1, 1, 0, 1, 0, 0}},  // x z u w
    {+1, {0, 2, 1, 1, 0, 0, 0, 0}},  // y^2 z u
    {+1, {1, 0, 0, 0, 2, 1, 0, 0}},  // x v^2 w
    {+1, {0, 1, 1, 0, 1, 1, 0, 0}},  // y z v w
    {+1, {2, 0, 1, 0, 1, 0, 0, 0}},  // x^2 z v
    {-2, {1, 1, 2, 0, 0, 0, 0, 0}},  // -2 x y z^2
    {+1, {0, 0, 0, 0, 0, 0, 3, 0}},  // r^3
    {+3, {0, 1, 0, 1, 0, 0, 1, 0}},  // 3 y u r
    {-3, {0, 0, 0, 0, 1, 1, 1, 0}},  // -3 v w r
    {-3, {1, 0, 1, 0, 0, 0, 1, 0}},  // -3 x z r
    {+1, {0, 0, 0, 0, 0, 0, 0, 3}},  // s^3
    {-3, {0, 0, 0, 1, 0, 1, 0, 1}},  // -3 u w s
    {+3, {1, 0, 0, 0, 1, 0, 0, 1}},  // 3 x v s
    {-3, {0, 1, 1, 0, 0, 0, 0, 1}},  // -3 y z s
    {+1, {0, 0, 0, 3, 0, 0, 0, 0}},  // u^3
    {+3, {0, 0, 1, 1, 1, 0, 0, 0}},  // 3 u v z
    {+1, {0, 0, 0, 0, 3, 0, 0, 0}},  // v^3
    {+1, {0, 0, 0, 0, 0, 3, 0, 0}},  // w^3
    {+3, {1, 1, 0, 0, 0, 1, 0, 0}},  // 3 x y w
    {+1, {3, 0, 0, 0, 0, 0, 0, 0}},  // x^3
    {+1, {0, 3, 0, 0, 0, 0, 0, 0}},  // y^3
    {+1, {0, 0, 3, 0, 0, 0, 0, 0}},  // z^3
    {-6, {0, 0, 0, 0, 0, 0, 1, 1}},  // -6 r s
    {-6, {1, 0, 0, 1, 0, 0, 0, 0}},  // -6 x u
    {-6, {0, 1, 0, 0, 1, 0, 0, 0}},  // -6 y v
    {-6, {0, 0, 1, 0, 0, 1, 0, 0}},  // -6 z w
    {+9, {0, 0, 0, 0, 0, 0, 0, 0}},
}};

template <typename T, std::size_t N>
T eval_poly(const std::array<PolyTerm, N>& terms, const std::array<T, 8>& vars) {
    T total = T(0);
    for (const PolyTerm& t : terms) {
        T prod = T(t.coeff);
        for (int i = 0; i < 8; ++i)
            for (int e = 0; e < t.exps[i]; ++e) prod = prod * vars[i];
        total = total + prod;
    }
    return total;
}

template <typename T>
T eval_P(const std::array<T, 8>& vars) {
    return eval_poly(kPTerms, vars);
}

template <typename T>
T eval_Q(const std::array<T, 8>& vars) {
    return eval_poly(kQTerms, vars);
}

struct TraceCoordinates {
    cdouble x, y, z, u, v, w, r, s;
    cdouble tau;

    std::array<cdouble, 8> vars() const { return {x, y, z, u, v, w, r, s}; }
};

inline cdouble eval_P(const TraceCoordinates& c) { return eval_P(c.vars()); }
inline cdouble eval_Q(const TraceCoordinates& c) { return eval_Q(c.vars()); }

// x=tr A, y=tr B, z=tr AB, u=tr A^-1, v=tr B^-1, w=tr (AB)^-1,
// r=tr AB^-1, s=tr A^-1 B, tau=tr ABA^-1B^-1.
inline TraceCoordinates trace_coords(const Mat3<cdouble>& A, const Mat3<cdouble>& B,
                                     double tol = 1e-9) {
    cdouble dA = mat3_det(A);
    cdouble dB = mat3_det(B);
    if (std::abs(dA - cdouble(1)) > tol || std::abs(dB - cdouble(1)) > tol)
        throw validation_error("trace coordinates need unimodular matrices, |det-1| exceeds " +
                               std::to_string(tol));
    Mat3<cdouble> Ai = mat3_inverse(A);
    Mat3<cdouble> Bi = mat3_inverse(B);
    Mat3<cdouble> AB = mat3_mul(A, B);
    TraceCoordinates c{};
    c.x = mat3_trace(A);
    c.y = mat3_trace(B);
    c.z = mat3_trace(AB);
    c.u = mat3_trace(Ai);
    c.v = mat3_trace(Bi);
    c.w = mat3_trace(mat3_inverse(AB));
    c.r = mat3_trace(mat3_mul(A, Bi));
    c.s = mat3_trace(mat3_mul(Ai, B));
    c.tau = mat3_trace(mat3_mul(AB, mat3_mul(Ai, Bi)));
    return c;
}

// |tau^2 - P tau + Q| / max(1, |P|, |Q|).
inline double lawton_residual(const TraceCoordinates& c) {
    cdouble P = eval_P(c);
    cdouble Q = eval_Q(c);
    double scale = std::max({1.0, std::abs(P), std::abs(Q)});
    return std::abs(c.tau * c.tau - P * c.tau + Q) / scale;
}

inline double lawton_residual(const Mat3<cdouble>& A, const Mat3<cdouble>& B,
                              double tol = 1e-9) {
    return lawton_residual(trace_coords(A, B, tol));
}

// Normalized norm of A^3 - (tr A) A^2 + (tr A^-1) A - Id.
inline double cayley_hamilton_residual(const Mat3<cdouble>& A) {
    Mat3<cdouble> A2 = mat3_mul(A, A);
    Mat3<cdouble> A3 = mat3_mul(A2, A);
    cdouble x = mat3_trace(A);
    cdouble u = mat3_trace(mat3_inverse(A));
    Mat3<cdouble> M{};
    Mat3<cdouble> I = mat3_identity<cdouble>();
    for (int i = 0; i < 9; ++i) M[i] = A3[i] - x * A2[i] + u * A[i] - I[i];
    double a = mat3_frobenius(A);
    return mat3_frobenius(M) / std::max(1.0, a * a * a);
}

// Random complex matrix normalized by a cube root of its determinant;
// near-singular draws are rejected.
inline Mat3<cdouble> random_unimodular(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (;;) {
        Mat3<cdouble> A{};
        for (cdouble& e : A) e = cdouble(unit(rng), unit(rng));
        cdouble d = mat3_det(A);
        if (std::abs(d) < 1e-6) continue;
        cdouble scale = std::pow(d, 1.0 / 3.0);
        for (cdouble& e : A) e /= scale;
        return A;
    }
}

// ---- exact verification of the reference points on X(F_2, SL(3,C)) ----

struct PointCheck {
    std::string name;
    bool exact = true;
    bool pass = false;
    std::string detail;
};

namespace detail {

// Coefficient map of a polynomial restricted to x=y=u=v=0, as a polynomial
// in (r,s); optionally z=w=1, otherwise (z,w) must also be substituted.
using RSPoly = std::map<std::pair<int, int>, long long>;

template <std::size_t N>
RSPoly restrict_zw1(const std::array<PolyTerm, N>& terms) {
    RSPoly out;
    for (const PolyTerm& t : terms) {
        if (t.exps[0] || t.exps[1] || t.exps[3] || t.exps[4]) continue;  // x,y,u,v = 0
        auto key = std::make_pair<int, int>(t.exps[6], t.exps[7]);
        out[key] += t.coeff;
        if (out[key] == 0) out.erase(key);
    }
    return out;
}

inline std::string rs_poly_str(const RSPoly& p) {
    std::string s;
    for (const auto& [key, c] : p) {
        s += (c >= 0 && !s.empty()) ? "+" : "";
        s += std::to_string(c) + "*r^" + std::to_string(key.first) + "*s^" +
             std::to_string(key.second) + " ";
    }
    return s.empty() ? "0" : s;
}

template <typename T>
std::array<T, 8> coords_zwrs(T z, T w, T r, T s) {
    return {T(0), T(0), z, T(0), T(0), w, r, s};
}

}  // namespace detail

// Checks the published solution set of the SL(3) two-generator character
// variety at its distinguished points, in exact arithmetic throughout.
inline std::vector<PointCheck> verify_reference_points() {
    std::vector<PointCheck> checks;
    auto add = [&checks](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({name, true, pass, detail});
    };

    // (a) restricting to x=y=u=v=0, z=w=1 gives P = rs-2, Q = r^3+s^3-5rs+5.
    {
        detail::RSPoly p = detail::restrict_zw1(kPTerms);
        detail::RSPoly q = detail::restrict_zw1(kQTerms);
        detail::RSPoly p_want{{{1, 1}, 1}, {{0, 0}, -2}};
        detail::RSPoly q_want{{{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, -5}, {{0, 0}, 5}};
        add("(a) restriction x=y=u=v=0, z=w=1", p == p_want && q == q_want,
            "P|= " + detail::rs_poly_str(p) + ", Q|= " + detail::rs_poly_str(q));
        std::array<long long, 8> one{0, 0, 1, 0, 0, 1, 1, 1};
        add("(a) Q(0,0,1,0,0,1,1,1) = 2", eval_Q(one) == 2,
            "Q = " + std::to_string(eval_Q(one)));
    }

    // (b) the three isolated points with x=y=u=v=r=s=0: quadric and
    // discriminant vanish over Q(i).
    {
        using QI = Quad<-1>;
        struct IsolatedPoint {
            QI z, w, tau;
        };
        const QI i = QI::root();
        const IsolatedPoint pts[3] = {
            {QI(-1) + QI(2) * i, QI(-1) - QI(2) * i, QI(1)},
            {QI(-1) - QI(2) * i, QI(-1) + QI(2) * i, QI(1)},
            {QI(-1), QI(-1), QI(-1)},
        };
        bool all = true;
        std::string detail_s;
        for (int k = 0; k < 3; ++k) {
            auto vars = detail::coords_zwrs(pts[k].z, pts[k].w, QI(0), QI(0));
            QI P = eval_P(vars);
            QI Q = eval_Q(vars);
            QI tau = pts[k].tau;
            bool quadric = (tau * tau - P * tau + Q).is_zero();
            bool disc = (P * P - QI(4) * Q).is_zero();
            all = all && quadric && disc;
            if (k == 0)
                detail_s = "first point: P = " + P.str() + ", Q = " + Q.str();
        }
        add("(b) isolated points (z,w,tau), quadric and P^2-4Q = 0", all, detail_s);
    }

    // (c) (r,s,tau) = (2+2sqrt2, 2+2sqrt2, 5+4sqrt2) on the restricted quadric.
    {
        using Q2 = Quad<2>;
        const Q2 rt = Q2::root();
        Q2 r = Q2(2) + Q2(2) * rt;
        Q2 tau = Q2(5) + Q2(4) * rt;
        auto vars = detail::coords_zwrs(Q2(1), Q2(1), r, r);
        Q2 P = eval_P(vars);
        Q2 Q = eval_Q(vars);
        Q2 res = tau * tau - P * tau + Q;
        add("(c) (2+2sqrt2, 2+2sqrt2, 5+4sqrt2) on the quadric", res.is_zero(),
            "tau^2 - P tau + Q = " + res.str());
    }

    // (d) symmetric slice r = s: curve tau^2 - (r^2-2) tau + (2r^3-5r^2+5),
    // singular at (2,1); discriminant (r-2)^2 (r^2-4r-4) with roots 2, 2+-2sqrt2.
    {
        detail::RSPoly p = detail::restrict_zw1(kPTerms);
        detail::RSPoly q = detail::restrict_zw1(kQTerms);
        // substitute s = r: collect by total degree
        std::array<long long, 4> pc{}, qc{};  // coefficients of r^0..r^3
        for (const auto& [key, c] : p) pc[key.first + key.second] += c;
        for (const auto& [key, c] : q) qc[key.first + key.second] += c;
        bool slice_ok = pc == std::array<long long, 4>{-2, 0, 1, 0} &&
                        qc == std::array<long long, 4>{5, 0, -5, 2};

        auto F = [&](long long r, long long t) {
            long long P = r * r - 2, Q = 2 * r * r * r - 5 * r * r + 5;
            return t * t - P * t + Q;
        };
        auto Ft = [&](long long r, long long t) { return 2 * t - (r * r - 2); };
        auto Fr = [&](long long r, long long t) { return -2 * r * t + 6 * r * r - 10 * r; };
        bool singular = F(2, 1) == 0 && Ft(2, 1) == 0 && Fr(2, 1) == 0;

        // (r^2-2)^2 - 4(2r^3-5r^2+5) expanded, lowest degree first
        std::array<long long, 5> disc{};
        disc[4] += 1;
        disc[2] += -4;
        disc[0] += 4;
        disc[3] += -8;
        disc[2] += 20;
        disc[0] += -20;
        // (r-2)^2 (r^2-4r-4) = (r^2-4r+4)(r^2-4r-4)
        std::array<long long, 5> factored{};
        const long long a[3] = {4, -4, 1};   // r^2-4r+4
        const long long b[3] = {-4, -4, 1};  // r^2-4r-4
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) factored[i + j] += a[i] * b[j];
        bool disc_ok = disc == factored;

        auto disc_at = [&](const Quad<2>& r) {
            Quad<2> acc(0), pw(1);
            for (int i = 0; i < 5; ++i) {
                acc = acc + Quad<2>(disc[i]) * pw;
                pw = pw * r;
            }
            return acc;
        };
        const Quad<2> rt = Quad<2>::root();
        Quad<2> r1 = Quad<2>(2) + Quad<2>(2) * rt;
        Quad<2> r2 = Quad<2>(2) - Quad<2>(2) * rt;
        bool roots_ok = disc_at(Quad<2>(2)).is_zero() && disc_at(r1).is_zero() &&
                        disc_at(r2).is_zero() &&
                        (r1 * r1 - Quad<2>(4) * r1 - Quad<2>(4)).is_zero();

        add("(d) symmetric slice singular at (2,1), discriminant (r-2)^2(r^2-4r-4)",
            slice_ok && singular && disc_ok && roots_ok,
            std::string("slice ") + (slice_ok ? "ok" : "BAD") + ", singular " +
                (singular ? "ok" : "BAD") + ", disc " + (disc_ok ? "ok" : "BAD") + ", roots " +
                (roots_ok ? "ok" : "BAD"));
    }

    // (e) discriminant in (r,s) equals r^2 s^2 - 4r^3 - 4s^3 + 16 rs - 16 and
    // vanishes at r = s = 2+2sqrt2.
    {
        detail::RSPoly p = detail::restrict_zw1(kPTerms);
        detail::RSPoly q = detail::restrict_zw1(kQTerms);
        detail::RSPoly disc;
        auto accumulate = [&disc](std::pair<int, int> key, long long c) {
            disc[key] += c;
            if (disc[key] == 0) disc.erase(key);
        };
        for (const auto& [k1, c1] : p)
            for (const auto& [k2, c2] : p)
                accumulate({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
        for (const auto& [key, c] : q) accumulate(key, -4 * c);
        detail::RSPoly want{
            {{2, 2}, 1}, {{3, 0}, -4}, {{0, 3}, -4}, {{1, 1}, 16}, {{0, 0}, -16}};
        bool expand_ok = disc == want;

        const Quad<2> rt = Quad<2>::root();
        Quad<2> r = Quad<2>(2) + Quad<2>(2) * rt;
        Quad<2> val = r * r * r * r - Quad<2>(8) * r * r * r + Quad<2>(16) * r * r - Quad<2>(16);
        add("(e) P^2-4Q slice r^2s^2-4r^3-4s^3+16rs-16 = 0 at r=s=2+2sqrt2",
            expand_ok && val.is_zero(),
            "expansion " + std::string(expand_ok ? "ok" : "BAD") + ", value " + val.str());
    }

    // (f) positive-dimensional component x=y=u=v=P=Q=0: the point
    // r=s=(-3+i sqrt3)/2, z=w=conjugate, over Q(i sqrt3); and its matrix
    // realization A=diag(1,omega,omega^2), B a 3-cycle.
    {
        using Q3 = Quad<-3>;
        Q3 alpha(Rational(-3, 2), Rational(1, 2));
        Q3 beta = alpha.conj();
        auto vars = detail::coords_zwrs(beta, beta, alpha, alpha);
        Q3 P = eval_P(vars);
        Q3 Q = eval_Q(vars);
        add("(f) Hopf component point: P = 0 and Q = 0", P.is_zero() && Q.is_zero(),
            "P = " + P.str() + ", Q = " + Q.str());

        Q3 omega(Rational(-1, 2), Rational(1, 2));
        Q3 omega2 = omega * omega;
        Mat3<Q3> A{Q3(1), Q3(0), Q3(0), Q3(0), omega, Q3(0), Q3(0), Q3(0), omega2};
        Mat3<Q3> B{Q3(0), Q3(0), Q3(1), Q3(1), Q3(0), Q3(0), Q3(0), Q3(1), Q3(0)};
        Mat3<Q3> I = mat3_identity<Q3>();
        bool unimodular = mat3_det(A) == Q3(1) && mat3_det(B) == Q3(1);
        bool order3 = mat3_mul(mat3_mul(A, A), A) == I && mat3_mul(mat3_mul(B, B), B) == I;

        Mat3<Q3> Ai = mat3_adjugate(A);
        Mat3<Q3> Bi = mat3_adjugate(B);
        Mat3<Q3> AB = mat3_mul(A, B);
        Mat3<Q3> comm = mat3_mul(AB, mat3_mul(Ai, Bi));
        bool comm_scalar = true;
        for (int i = 0; i < 9; ++i) {
            Q3 want = (i % 4 == 0) ? omega : Q3(0);
            comm_scalar = comm_scalar && comm[i] == want;
        }

        Q3 coords[8] = {mat3_trace(A),
                        mat3_trace(B),
                        mat3_trace(AB),
                        mat3_trace(Ai),
                        mat3_trace(Bi),
                        mat3_trace(mat3_adjugate(AB)),
                        mat3_trace(mat3_mul(A, Bi)),
                        mat3_trace(mat3_mul(Ai, B))};
        bool zeros = true;
        for (const Q3& c : coords) zeros = zeros && c.is_zero();

        Q3 tau = mat3_trace(comm);
        bool tau_ok = tau == Q3(3) * omega;
        // at all-zero coordinates the quadric is tau^2 + 3 tau + 9
        std::array<Q3, 8> zero{};
        Q3 P0 = eval_P(zero);
        Q3 Q0 = eval_Q(zero);
        bool quadric_ok = P0 == Q3(-3) && Q0 == Q3(9) && (tau * tau - P0 * tau + Q0).is_zero();

        add("(f) matrix pair: A^3=B^3=Id, [A,B]=omega Id, coords 0, tau^2+3tau+9=0",
            unimodular && order3 && comm_scalar && zeros && tau_ok && quadric_ok,
            "tau = " + tau.str());
    }

    // identity pair: every coordinate 3, tau = 3 a double root.
    {
        std::array<long long, 8> three{3, 3, 3, 3, 3, 3, 3, 3};
        long long P = eval_P(three);
        long long Q = eval_Q(three);
        bool ok = P == 6 && Q == 9 && (9 - P * 3 + Q) == 0 && (P * P - 4 * Q) == 0;
        add("identity pair: tau = 3 double root of tau^2 - 6 tau + 9", ok,
            "P = " + std::to_string(P) + ", Q = " + std::to_string(Q));
    }

    return checks;
}

}  // namespace orbidim::lawton
