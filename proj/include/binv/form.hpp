#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "binv/poly.hpp"
#include "binv/tpoly.hpp"

namespace binv {

// A binary form of the given order whose coefficients are polynomials in the
// eleven generic coefficient variables: f = sum_j coeffs[j] * x^(order-j) y^j.
// coeffs holds the raw coefficients (no binomial factors) and always has
// order+1 entries.  Invariants are the order-0 forms.
template <class S>
struct BasicForm {
    int order = 0;
    std::vector<Poly<S>> coeffs;

    static BasicForm zero(int order) {
        return {order, std::vector<Poly<S>>(order + 1)};
    }
    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const BasicForm& o) const {
        return order == o.order && coeffs == o.coeffs;
    }
};

using Form = BasicForm<Rat>;

// The three generic ground forms.  Their coefficient variables enter with
// the classical binomial normalization:
//   l = c0 x + c1 y
//   c = a0 x^3 + 3 a1 x^2 y + 3 a2 x y^2 + a3 y^3
//   q = b0 x^4 + 4 b1 x^3 y + 6 b2 x^2 y^2 + 4 b3 x y^3 + b4 y^4
struct GenericForms {
    static Form linear();
    static Form cubic();
    static Form quartic();
};

Form form_add(const Form& f, const Form& g);
Form form_sub(const Form& f, const Form& g);
Form form_scale(const Form& f, const Rat& s);
Form form_mul(const Form& f, const Form& g);
Form form_pow(const Form& f, int e);

// Partial derivatives with respect to the form variables x and y.
Form form_dx(const Form& f);
Form form_dy(const Form& f);

// The p-th transvectant of forms of orders m and n:
//   (f,g)_p = ((m-p)!(n-p)!)/(m!n!) *
//             sum_{i=0..p} (-1)^i C(p,i) d^p f/dx^(p-i) dy^i * d^p g/dx^i dy^(p-i)
// Result has order m+n-2p.  Requires 0 <= p <= min(m,n).
Form transvectant(const Form& f, const Form& g, int p);

// For anything built from the ground forms, coefficient j is isobaric of
// torus weight order-2j and all coefficients share one multidegree (or are
// zero).  Checks that structural contract.
bool is_covariant_shaped(const Form& f);

// The invariant an order-0 form carries.
inline const CoeffPoly& invariant_of(const Form& f) {
    if (f.order != 0) throw std::domain_error("form has positive order");
    return f.coeffs[0];
}

// --- Group action on the coefficient variables -----------------------------

template <class S>
struct Mat2 {
    S a, b, c, d;  // row-major: [[a, b], [c, d]]
    S det() const { return a * d - b * c; }
};

using RatMat2 = Mat2<Rat>;
using TMat2 = Mat2<RatPoly>;

template <class S>
Mat2<S> mat_mul(const Mat2<S>& A, const Mat2<S>& B) {
    return {A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
            A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d};
}

// Substitution images of the coefficient variables under A: the generic form
// v of order n is re-expanded after the change of variables z -> A^{-1} z,
// and u_j maps to the new x^(n-j) y^j coefficient (binomial factor removed).
// Invariants of determinant-1 elements are fixed by the induced map.
template <class S>
std::array<Poly<S>, kNumVars> coefficient_substitution(const Mat2<S>& A) {
    S det = A.det();
    if (det == 0) throw std::domain_error("group element is singular");
    // Adjugate substitution first (no division): x -> d x - b y, y -> -c x + a y.
    // For an order-n variable group this scales u_j' by det^n, removed below.
    std::array<Poly<S>, kNumVars> img;
    struct Block { int base, n; };
    for (Block blk : {Block{0, 1}, Block{2, 3}, Block{6, 4}}) {
        // W[k] collects the x^(n-k) y^k coefficient of v(adj(A) z).
        std::vector<Poly<S>> W(blk.n + 1);
        std::vector<Rat> binom(blk.n + 1);
        binom[0] = 1;
        for (int k = 1; k <= blk.n; ++k)
            binom[k] = binom[k - 1] * (blk.n - k + 1) / k;
        for (int j = 0; j <= blk.n; ++j) {
            // Expand (d x - b y)^(n-j) * (-c x + a y)^j over y-degree.
            std::vector<S> row = {S(1)};
            for (int r = 0; r < blk.n - j; ++r) {
                std::vector<S> nxt(row.size() + 1, S(0));
                for (std::size_t k = 0; k < row.size(); ++k) {
                    nxt[k] = nxt[k] + row[k] * A.d;
                    nxt[k + 1] = nxt[k + 1] - row[k] * A.b;
                }
                row = std::move(nxt);
            }
            for (int r = 0; r < j; ++r) {
                std::vector<S> nxt(row.size() + 1, S(0));
                for (std::size_t k = 0; k < row.size(); ++k) {
                    nxt[k] = nxt[k] - row[k] * A.c;
                    nxt[k + 1] = nxt[k + 1] + row[k] * A.a;
                }
                row = std::move(nxt);
            }
            Poly<S> uj(mono_var(blk.base + j), S(1));
            for (int k = 0; k <= blk.n; ++k)
                W[k] += uj * Poly<S>(row[k] * S(binom[j]));
        }
        S scale = S(1);
        for (int r = 0; r < blk.n; ++r) scale = scale * det;
        for (int k = 0; k <= blk.n; ++k)
            img[blk.base + k] = W[k] * (S(1) / (S(binom[k]) * scale));
    }
    return img;
}

// Apply the induced coefficient map of A to a polynomial in the variables.
template <class S>
Poly<S> apply_group_element(const CoeffPoly& f, const Mat2<S>& A) {
    auto img = coefficient_substitution(A);
    std::array<std::vector<Poly<S>>, kNumVars> powers;
    for (int v = 0; v < kNumVars; ++v) powers[v] = {Poly<S>(S(1))};
    Poly<S> out;
    for (const auto& [m, c] : f.terms()) {
        auto term = Poly<S>(S(c));
        for (int v = 0; v < kNumVars; ++v) {
            int e = mono_exponent(m, v);
            while (static_cast<int>(powers[v].size()) <= e)
                powers[v].push_back(powers[v].back() * img[v]);
            if (e > 0) term *= powers[v][e];
        }
        out += term;
    }
    return out;
}

// Apply the coefficient map of A to every coefficient of a form.
template <class S>
BasicForm<S> apply_group_element(const Form& f, const Mat2<S>& A) {
    BasicForm<S> out = BasicForm<S>::zero(f.order);
    for (int j = 0; j <= f.order; ++j) out.coeffs[j] = apply_group_element(f.coeffs[j], A);
    return out;
}

// Lift an exact polynomial into the t-polynomial scalar ring.
Poly<RatPoly> lift_to_t(const CoeffPoly& f);

// One-parameter unipotent subgroups (determinant 1 for all t).
TMat2 unipotent_lower_t();  // fixes x, adds t*x to y after inversion
TMat2 unipotent_upper_t();

}  // namespace binv
