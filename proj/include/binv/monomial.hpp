#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace binv {

// Coefficient variables of the three generic forms, in canonical order:
//   linear   l : c0, c1
//   cubic    c : a0, a1, a2, a3
//   quartic  q : b0, b1, b2, b3, b4
inline constexpr int kNumVars = 11;

inline constexpr const char* kVarNames[kNumVars] = {
    "c0", "c1", "a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "b4"};

// Torus weight of each variable (weight of u_j in an order-n form is n-2j).
inline constexpr int kVarWeight[kNumVars] = {1, -1, 3, 1, -1, -3, 4, 2, 0, -2, -4};

// Which form each variable belongs to: 0 = linear, 1 = cubic, 2 = quartic.
inline constexpr int kVarForm[kNumVars] = {0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 2};

// A monomial in the 11 coefficient variables, packed into one 64-bit word:
// 5 bits per exponent (var 0 in the highest field), total degree above them.
// Unsigned comparison of the packed word is exactly graded lexicographic
// order with c0 > c1 > a0 > ... > b4.  Exponents up to 31 and total degree
// up to 63 are representable; the pipeline stays far below both.
using Monomial = std::uint64_t;

inline constexpr int kExpBits = 5;
inline constexpr std::uint64_t kExpMask = (1u << kExpBits) - 1;
inline constexpr int kDegShift = kNumVars * kExpBits;  // 55
inline constexpr int kMaxExponent = static_cast<int>(kExpMask);

constexpr int mono_shift(int var) { return (kNumVars - 1 - var) * kExpBits; }

inline constexpr Monomial kMonoOne = 0;

constexpr int mono_exponent(Monomial m, int var) {
    return static_cast<int>((m >> mono_shift(var)) & kExpMask);
}

constexpr int mono_degree(Monomial m) {
    return static_cast<int>(m >> kDegShift);
}

constexpr Monomial mono_var(int var, int exp = 1) {
    return (static_cast<Monomial>(exp) << mono_shift(var)) |
           (static_cast<Monomial>(exp) << kDegShift);
}

// Product of monomials.  Throws if any exponent field would overflow.
inline Monomial mono_mul(Monomial a, Monomial b) {
    Monomial r = a + b;
    if (mono_degree(r) > kMaxExponent)
        throw std::overflow_error("monomial degree exceeds packing limit");
    for (int v = 0; v < kNumVars; ++v)
        if (mono_exponent(r, v) < mono_exponent(a, v))
            throw std::overflow_error("monomial exponent exceeds packing limit");
    return r;
}

// a / b, assuming b divides a (checked).
inline Monomial mono_div(Monomial a, Monomial b) {
    for (int v = 0; v < kNumVars; ++v)
        if (mono_exponent(a, v) < mono_exponent(b, v))
            throw std::domain_error("monomial division is not exact");
    return a - b;
}

constexpr int mono_weight(Monomial m) {
    int w = 0;
    for (int v = 0; v < kNumVars; ++v) w += kVarWeight[v] * mono_exponent(m, v);
    return w;
}

inline std::array<int, kNumVars> mono_exponents(Monomial m) {
    std::array<int, kNumVars> e{};
    for (int v = 0; v < kNumVars; ++v) e[v] = mono_exponent(m, v);
    return e;
}

inline Monomial mono_from_exponents(const std::array<int, kNumVars>& e) {
    Monomial m = 0;
    int deg = 0;
    for (int v = 0; v < kNumVars; ++v) {
        if (e[v] < 0 || e[v] > kMaxExponent)
            throw std::out_of_range("exponent outside packing range");
        m |= static_cast<Monomial>(e[v]) << mono_shift(v);
        deg += e[v];
    }
    if (deg > kMaxExponent) throw std::out_of_range("degree outside packing range");
    return m | (static_cast<Monomial>(deg) << kDegShift);
}

inline std::string mono_to_string(Monomial m) {
    if (m == kMonoOne) return "1";
    std::string s;
    for (int v = 0; v < kNumVars; ++v) {
        int e = mono_exponent(m, v);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += kVarNames[v];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// Degree triple (d_l, d_c, d_q) of a multihomogeneous object.
struct MultiDegree {
    int dl = 0;
    int dc = 0;
    int dq = 0;

    int total() const { return dl + dc + dq; }
    // Weight-0 monomials exist only when the top weight d_l + 3 d_c + 4 d_q
    // is even; odd blocks carry no invariants.
    bool admissible() const { return (dl + 3 * dc + 4 * dq) % 2 == 0; }
    auto operator<=>(const MultiDegree&) const = default;

    MultiDegree operator+(const MultiDegree& o) const {
        return {dl + o.dl, dc + o.dc, dq + o.dq};
    }
    std::string to_string() const {
        return "(" + std::to_string(dl) + "," + std::to_string(dc) + "," +
               std::to_string(dq) + ")";
    }
};

inline MultiDegree mono_multidegree(Monomial m) {
    MultiDegree d;
    for (int v = 0; v < kNumVars; ++v) {
        int e = mono_exponent(m, v);
        if (kVarForm[v] == 0) d.dl += e;
        else if (kVarForm[v] == 1) d.dc += e;
        else d.dq += e;
    }
    return d;
}

}  // namespace binv
