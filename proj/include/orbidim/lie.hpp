#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbidim/errors.hpp"

namespace orbidim::lie {

enum class Family { PSL, PSp, POodd, POeven, G2, F4, E6, E7, E8 };

// A simple group of adjoint type. `param` is n for PSL(n), m for PSp(2m),
// PO(2m+1) and PO(2m), and 0 for the exceptional families.
struct LieType {
    Family family = Family::PSL;
    int param = 2;

    friend bool operator==(const LieType& a, const LieType& b) {
        return a.family == b.family && a.param == b.param;
    }
    friend bool operator!=(const LieType& a, const LieType& b) { return !(a == b); }
};

inline bool is_exceptional(Family f) {
    return f == Family::G2 || f == Family::F4 || f == Family::E6 || f == Family::E7 ||
           f == Family::E8;
}

inline LieType psl(int n) {
    if (n < 2) throw value_error("PSL(n) needs n >= 2, got n = " + std::to_string(n));
    return {Family::PSL, n};
}

inline LieType psp(int m) {
    if (m < 1) throw value_error("PSp(2m) needs m >= 1, got m = " + std::to_string(m));
    return {Family::PSp, m};
}

inline LieType po_odd(int m) {
    if (m < 1) throw value_error("PO(2m+1) needs m >= 1, got m = " + std::to_string(m));
    return {Family::POodd, m};
}

inline LieType po_even(int m) {
    if (m < 3) throw value_error("PO(2m) needs m >= 3, got m = " + std::to_string(m));
    return {Family::POeven, m};
}

inline LieType exceptional(Family f) {
    if (!is_exceptional(f)) throw value_error("not an exceptional family");
    return {f, 0};
}

namespace detail {
inline constexpr std::array<int, 2> kExpG2{1, 5};
inline constexpr std::array<int, 4> kExpF4{1, 5, 7, 11};
inline constexpr std::array<int, 6> kExpE6{1, 4, 5, 7, 8, 11};
inline constexpr std::array<int, 7> kExpE7{1, 5, 7, 9, 11, 13, 17};
inline constexpr std::array<int, 8> kExpE8{1, 7, 11, 13, 17, 19, 23, 29};
}  // namespace detail

// Exponents d_1,...,d_r of the Lie algebra; Ad composed with the principal
// SL(2) is the direct sum of Sym^{2 d_alpha}.
inline std::vector<int> exponents(const LieType& g) {
    std::vector<int> out;
    switch (g.family) {
        case Family::PSL:
            for (int d = 1; d < g.param; ++d) out.push_back(d);
            break;
        case Family::PSp:
        case Family::POodd:
            for (int d = 1; d <= 2 * g.param - 1; d += 2) out.push_back(d);
            break;
        case Family::POeven:
            for (int d = 1; d <= 2 * g.param - 3; d += 2) out.push_back(d);
            out.push_back(g.param - 1);
            break;
        case Family::G2:
            out.assign(detail::kExpG2.begin(), detail::kExpG2.end());
            break;
        case Family::F4:
            out.assign(detail::kExpF4.begin(), detail::kExpF4.end());
            break;
        case Family::E6:
            out.assign(detail::kExpE6.begin(), detail::kExpE6.end());
            break;
        case Family::E7:
            out.assign(detail::kExpE7.begin(), detail::kExpE7.end());
            break;
        case Family::E8:
            out.assign(detail::kExpE8.begin(), detail::kExpE8.end());
            break;
    }
    return out;
}

inline int rank(const LieType& g) {
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
    return 0;
}

inline std::int64_t dim(const LieType& g) {
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
    return 0;
}

// sigma(n,k) = q n + (q+1) r where n = q k + r: the sum of squared
// multiplicities when n objects are spread as evenly as possible over k
// classes. Governs centralizer dimensions of finite-order elements.
inline std::int64_t sigma(std::int64_t n, std::int64_t k) {
    if (k <= 0) throw value_error("sigma(n,k) needs k >= 1, got k = " + std::to_string(k));
    if (n < 0) throw value_error("sigma(n,k) needs n >= 0, got n = " + std::to_string(n));
    std::int64_t q = n / k;
    std::int64_t r = n % k;
    return q * n + (q + 1) * r;
}

inline std::string render(const LieType& g) {
    switch (g.family) {
        case Family::PSL: return "PSL(" + std::to_string(g.param) + ")";
        case Family::PSp: return "PSp(" + std::to_string(2 * g.param) + ")";
        case Family::POodd: return "PO(" + std::to_string(2 * g.param + 1) + ")";
        case Family::POeven: return "PO(" + std::to_string(2 * g.param) + ")";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    return "?";
}

// Accepts PSL(n) [aliases PGL, SL], PSp(2m) [alias Sp], PO(2m+1) and PO(2m)
// [aliases PSO, SO], and G2/F4/E6/E7/E8. Case-insensitive, whitespace ignored.
inline LieType parse(std::string_view text) {
    std::string s;
    std::vector<std::size_t> pos;  // byte offset in `text` of each kept char
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text[i]))));
            pos.push_back(i);
        }
    }
    auto offset_at = [&](std::size_t i) { return i < pos.size() ? pos[i] : text.size(); };

    std::size_t i = 0;
    std::string name;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) name.push_back(s[i++]);

    if (name == "G" || name == "F" || name == "E") {
        // exceptional names carry their digit: G2, F4, E6, E7, E8
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) name.push_back(s[i++]);
    }
    if (name == "G2" || name == "F4" || name == "E6" || name == "E7" || name == "E8") {
        if (i != s.size())
            throw parse_error("trailing characters after group name", offset_at(i), "end of input");
        if (name == "G2") return exceptional(Family::G2);
        if (name == "F4") return exceptional(Family::F4);
        if (name == "E6") return exceptional(Family::E6);
        if (name == "E7") return exceptional(Family::E7);
        return exceptional(Family::E8);
    }

    bool is_sl = name == "PSL" || name == "PGL" || name == "SL";
    bool is_sp = name == "PSP" || name == "SP";
    bool is_o = name == "PO" || name == "PSO" || name == "SO";
    if (!is_sl && !is_sp && !is_o)
        throw parse_error("unknown group family '" + name + "'", offset_at(0),
                          "PSL, PSp, PO, G2, F4, E6, E7 or E8");

    if (i >= s.size() || s[i] != '(')
        throw parse_error("missing parameter list", offset_at(i), "'('");
    ++i;
    std::size_t digits_start = i;
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000) throw value_error("group parameter too large");
        ++i;
    }
    if (i == digits_start) throw parse_error("missing integer parameter", offset_at(i), "digit");
    if (i >= s.size() || s[i] != ')')
        throw parse_error("unterminated parameter list", offset_at(i), "')'");
    ++i;
    if (i != s.size())
        throw parse_error("trailing characters after group name", offset_at(i), "end of input");

    int n = static_cast<int>(v);
    if (is_sl) return psl(n);
    if (is_sp) {
        if (n % 2 != 0) throw value_error("PSp parameter must be even, got " + std::to_string(n));
        return psp(n / 2);
    }
    if (n % 2 == 1) return po_odd((n - 1) / 2);
    return po_even(n / 2);
}

}  // namespace orbidim::lie
