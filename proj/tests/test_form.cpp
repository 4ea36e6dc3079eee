#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binv/form.hpp"

using namespace binv;

namespace {
CoeffPoly var(int v) { return CoeffPoly(mono_var(v), 1); }

// Weighted sum over an evaluation point, for spot-checking against values
// computed with a plain bivariate polynomial model of the same forms.
Rat eval(const CoeffPoly& p, const std::array<Rat, kNumVars>& x) { return p.evaluate(x); }
}  // namespace

TEST_CASE("generic forms carry the binomial normalization") {
    Form l = GenericForms::linear();
    Form c = GenericForms::cubic();
    Form q = GenericForms::quartic();
    CHECK(l.order == 1);
    CHECK(c.order == 3);
    CHECK(q.order == 4);
    CHECK(l.coeffs[0] == var(0));
    CHECK(c.coeffs[1] == Rat(3) * var(3));
    CHECK(c.coeffs[3] == var(5));
    CHECK(q.coeffs[2] == Rat(6) * var(8));
    CHECK(is_covariant_shaped(l));
    CHECK(is_covariant_shaped(c));
    CHECK(is_covariant_shaped(q));
}

TEST_CASE("form product is the coefficient convolution") {
    Form l = GenericForms::linear();
    Form ll = form_mul(l, l);
    CHECK(ll.order == 2);
    CHECK(ll.coeffs[0] == var(0) * var(0));
    CHECK(ll.coeffs[1] == Rat(2) * (var(0) * var(1)));
    CHECK(ll.coeffs[2] == var(1) * var(1));
    CHECK(form_pow(l, 2) == ll);
    CHECK(form_pow(l, 0).order == 0);
    CHECK(invariant_of(form_pow(l, 0)) == CoeffPoly(Rat(1)));
    CHECK(is_covariant_shaped(ll));

    Form diff = form_sub(ll, ll);
    CHECK(diff.is_zero());
    CHECK(form_scale(ll, Rat(0)).is_zero());
}

TEST_CASE("x and y derivatives follow the raw coefficient rule") {
    Form c = GenericForms::cubic();
    Form cx = form_dx(c);
    Form cy = form_dy(c);
    CHECK(cx.order == 2);
    CHECK(cx.coeffs[0] == Rat(3) * var(2));
    CHECK(cx.coeffs[1] == Rat(6) * var(3));
    CHECK(cx.coeffs[2] == Rat(3) * var(4));
    CHECK(cy.coeffs[0] == Rat(3) * var(3));
    CHECK(cy.coeffs[1] == Rat(6) * var(4));
    CHECK(cy.coeffs[2] == Rat(3) * var(5));
}

TEST_CASE("transvectant basics") {
    Form l = GenericForms::linear();
    Form c = GenericForms::cubic();
    Form q = GenericForms::quartic();

    // Zeroth transvectant is the plain product.
    CHECK(transvectant(c, q, 0) == form_mul(c, q));

    // (l,l)_1 vanishes by antisymmetry.
    CHECK(transvectant(l, l, 1).is_zero());

    // Antisymmetry in general: (f,g)_p = (-1)^p (g,f)_p.
    for (int p = 1; p <= 3; ++p) {
        Form a = transvectant(c, q, p);
        Form b = transvectant(q, c, p);
        CHECK(a == (p % 2 ? form_scale(b, Rat(-1)) : b));
        CHECK(a.order == 7 - 2 * p);
        CHECK(is_covariant_shaped(a));
    }

    CHECK_THROWS_AS(transvectant(l, c, 2), std::domain_error);
    CHECK_THROWS_AS(transvectant(c, q, -1), std::domain_error);
}

TEST_CASE("known closed forms of small transvectants") {
    Form q = GenericForms::quartic();
    Form k2f = transvectant(q, q, 4);
    REQUIRE(k2f.order == 0);
    CoeffPoly k2 = invariant_of(k2f);
    CoeffPoly expect = Rat(2) * (var(6) * var(10)) - Rat(8) * (var(7) * var(9)) +
                       Rat(6) * (var(8) * var(8));
    CHECK(k2 == expect);

    // At b0 = b4 = 1, b1 = b2 = b3 = 0 (the quartic x^4 + y^4), k2 = 2.
    std::array<Rat, kNumVars> x{};
    x[6] = 1;
    x[10] = 1;
    CHECK(eval(k2, x) == 2);

    // The cubic Hessian: (c,c)_2 = 2(a0 a2 - a1^2) x^2 + 2(a0 a3 - a1 a2) xy
    //                              + 2(a1 a3 - a2^2) y^2.
    Form c = GenericForms::cubic();
    Form h = transvectant(c, c, 2);
    REQUIRE(h.order == 2);
    CHECK(h.coeffs[0] == Rat(2) * (var(2) * var(4)) - Rat(2) * (var(3) * var(3)));
    CHECK(h.coeffs[1] == Rat(2) * (var(2) * var(5)) - Rat(2) * (var(3) * var(4)));
    CHECK(h.coeffs[2] == Rat(2) * (var(3) * var(5)) - Rat(2) * (var(4) * var(4)));
    CHECK(is_covariant_shaped(h));
}

TEST_CASE("coefficient substitution of specific group elements") {
    // A = [[0,-1],[1,0]] sends (x,y) to (y,-x) after inversion; on the linear
    // form coefficients: c0 -> -c1, c1 -> c0.
    RatMat2 rot{Rat(0), Rat(-1), Rat(1), Rat(0)};
    auto img = coefficient_substitution(rot);
    CHECK(img[0] == -var(1));
    CHECK(img[1] == var(0));
    // Quartic: b_j -> b_{4-j} with sign (-1)^j.
    CHECK(img[6] == var(10));
    CHECK(img[7] == -var(9));
    CHECK(img[8] == var(8));
    CHECK(img[9] == -var(7));
    CHECK(img[10] == var(6));
    // Cubic: a_j -> -(-1)^j a_{3-j}.
    CHECK(img[2] == -var(5));
    CHECK(img[3] == var(4));

    CHECK_THROWS_AS(coefficient_substitution(RatMat2{Rat(1), Rat(2), Rat(2), Rat(4)}),
                    std::domain_error);
}

TEST_CASE("unipotent substitution acts as the raising derivation to first order") {
    auto img = coefficient_substitution(unipotent_lower_t());
    // u_j -> u_j + t (n-j) u_{j+1} + O(t^2), raw generic coefficients.
    static const int nn[kNumVars] = {1, 1, 3, 3, 3, 3, 4, 4, 4, 4, 4};
    static const int jj[kNumVars] = {0, 1, 0, 1, 2, 3, 0, 1, 2, 3, 4};
    for (int v = 0; v < kNumVars; ++v) {
        CHECK(img[v].coeff(mono_var(v)) == RatPoly(1));
        int up = nn[v] - jj[v];
        if (up > 0) {
            RatPoly c = img[v].coeff(mono_var(v + 1));
            CHECK(c.coeff(1) == up);
        }
    }
}

TEST_CASE("an order-0 transvectant is fixed by unipotents, symbolically in t") {
    Form q = GenericForms::quartic();
    Form c = GenericForms::cubic();
    Form l = GenericForms::linear();
    CoeffPoly k2 = invariant_of(transvectant(q, q, 4));
    CoeffPoly g = invariant_of(transvectant(form_mul(l, c), q, 4));
    CHECK(*g.multidegree() == MultiDegree{1, 1, 1});
    for (const TMat2& A : {unipotent_lower_t(), unipotent_upper_t()}) {
        CHECK(apply_group_element(k2, A) == lift_to_t(k2));
        CHECK(apply_group_element(g, A) == lift_to_t(g));
    }
}

TEST_CASE("diagonal elements scale an invariant by a determinant power") {
    // For an invariant of multidegree (dl,dc,dq), diag(s,1) multiplies it by
    // s^-(dl+3dc+4dq)/2.
    CoeffPoly k2 = invariant_of(transvectant(GenericForms::quartic(), GenericForms::quartic(), 4));
    RatMat2 diag{Rat(2), Rat(0), Rat(0), Rat(1)};
    CoeffPoly moved = apply_group_element(k2, diag);
    auto s = moved.proportionality(k2);
    REQUIRE(s.has_value());
    CHECK(*s == Rat(1, 16));
}

TEST_CASE("group action is compatible with products and composition") {
    Form c = GenericForms::cubic();
    Form q = GenericForms::quartic();
    Form l = GenericForms::linear();
    CoeffPoly f = invariant_of(transvectant(form_mul(l, c), q, 4));  // degree (1,1,1)
    RatMat2 A{Rat(1), Rat(2), Rat(1, 3), Rat(1)};
    RatMat2 B{Rat(-1), Rat(1, 2), Rat(0), Rat(2)};

    CoeffPoly k2 = invariant_of(transvectant(q, q, 4));
    CHECK(apply_group_element(k2 * f, A) ==
          apply_group_element(k2, A) * apply_group_element(f, A));

    // Applying B then A equals applying the single element B*A.
    CHECK(apply_group_element(apply_group_element(f, B), A) ==
          apply_group_element(f, mat_mul(B, A)));
}
