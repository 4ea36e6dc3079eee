#include "binv/form.hpp"

namespace binv {

Form GenericForms::linear() {
    Form f = Form::zero(1);
    f.coeffs[0] = CoeffPoly(mono_var(0), 1);
    f.coeffs[1] = CoeffPoly(mono_var(1), 1);
    return f;
}

Form GenericForms::cubic() {
    Form f = Form::zero(3);
    static const int binom[4] = {1, 3, 3, 1};
    for (int j = 0; j <= 3; ++j) f.coeffs[j] = CoeffPoly(mono_var(2 + j), binom[j]);
    return f;
}

Form GenericForms::quartic() {
    Form f = Form::zero(4);
    static const int binom[5] = {1, 4, 6, 4, 1};
    for (int j = 0; j <= 4; ++j) f.coeffs[j] = CoeffPoly(mono_var(6 + j), binom[j]);
    return f;
}

Form form_add(const Form& f, const Form& g) {
    if (f.order != g.order) throw std::domain_error("cannot add forms of different orders");
    Form r = f;
    for (int j = 0; j <= f.order; ++j) r.coeffs[j] += g.coeffs[j];
    return r;
}

Form form_sub(const Form& f, const Form& g) {
    if (f.order != g.order) throw std::domain_error("cannot subtract forms of different orders");
    Form r = f;
    for (int j = 0; j <= f.order; ++j) r.coeffs[j] -= g.coeffs[j];
    return r;
}

Form form_scale(const Form& f, const Rat& s) {
    Form r = f;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

Form form_mul(const Form& f, const Form& g) {
    Form r = Form::zero(f.order + g.order);
    for (int i = 0; i <= f.order; ++i) {
        if (f.coeffs[i].is_zero()) continue;
        for (int j = 0; j <= g.order; ++j)
            r.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
    return r;
}

Form form_pow(const Form& f, int e) {
    if (e < 0) throw std::domain_error("negative form power");
    Form r = Form::zero(0);
    r.coeffs[0] = CoeffPoly(Rat(1));
    Form base = f;
    while (e > 0) {
        if (e & 1) r = form_mul(r, base);
        e >>= 1;
        if (e > 0) base = form_mul(base, base);
    }
    return r;
}

Form form_dx(const Form& f) {
    if (f.order == 0) return Form::zero(0);
    Form r = Form::zero(f.order - 1);
    for (int j = 0; j <= f.order - 1; ++j) r.coeffs[j] = f.coeffs[j] * Rat(f.order - j);
    return r;
}

Form form_dy(const Form& f) {
    if (f.order == 0) return Form::zero(0);
    Form r = Form::zero(f.order - 1);
    for (int j = 0; j <= f.order - 1; ++j) r.coeffs[j] = f.coeffs[j + 1] * Rat(j + 1);
    return r;
}

Form transvectant(const Form& f, const Form& g, int p) {
    const int m = f.order, n = g.order;
    if (p < 0 || p > std::min(m, n))
        throw std::domain_error("transvectant index out of range for orders " +
                                std::to_string(m) + "," + std::to_string(n));
    // Pre-compute the p-fold partials d^p/dx^(p-i) dy^i of each argument.
    std::vector<Form> df = {f}, dg = {g};
    for (int i = 0; i < p; ++i) df.push_back(form_dy(df.back()));
    // df[i] holds d^i f / dy^i so far; apply the remaining x-derivatives.
    for (int i = 0; i <= p; ++i)
        for (int r = 0; r < p - i; ++r) df[i] = form_dx(df[i]);
    for (int i = 0; i < p; ++i) dg.push_back(form_dy(dg.back()));
    for (int i = 0; i <= p; ++i)
        for (int r = 0; r < p - i; ++r) dg[i] = form_dx(dg[i]);

    mpz_class den = 1;
    for (int r = m - p + 1; r <= m; ++r) den *= r;  // m!/(m-p)!
    for (int r = n - p + 1; r <= n; ++r) den *= r;  // n!/(n-p)!
    Rat scale(mpz_class(1), den);

    Form acc = Form::zero(m + n - 2 * p);
    mpz_class binom = 1;
    for (int i = 0; i <= p; ++i) {
        Rat c = Rat(binom) * scale;
        if (i % 2 == 1) c = -c;
        acc = form_add(acc, form_scale(form_mul(df[i], dg[p - i]), c));
        binom = binom * (p - i) / (i + 1);
    }
    return acc;
}

bool is_covariant_shaped(const Form& f) {
    if (static_cast<int>(f.coeffs.size()) != f.order + 1) return false;
    std::optional<MultiDegree> shared;
    for (int j = 0; j <= f.order; ++j) {
        const CoeffPoly& c = f.coeffs[j];
        if (c.is_zero()) continue;
        if (!c.is_isobaric(f.order - 2 * j)) return false;
        auto d = c.multidegree();
        if (!d) return false;
        if (shared && *shared != *d) return false;
        shared = d;
    }
    return true;
}

Poly<RatPoly> lift_to_t(const CoeffPoly& f) {
    std::vector<Poly<RatPoly>::Term> terms;
    terms.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) terms.emplace_back(m, RatPoly(c));
    return Poly<RatPoly>::from_terms(std::move(terms));
}

TMat2 unipotent_lower_t() {
    return TMat2{RatPoly(1), RatPoly(0), -RatPoly::t(), RatPoly(1)};
}

TMat2 unipotent_upper_t() {
    return TMat2{RatPoly(1), RatPoly::t(), RatPoly(0), RatPoly(1)};
}

}  // namespace binv
