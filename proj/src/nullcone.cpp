#include "binv/nullcone.hpp"

#include <cstddef>
#include <random>
#include <stdexcept>

#include "binv/named_invariants.hpp"

namespace binv {

namespace {

// ---- univariate layer: dense polynomials over Rat, coeff of t^i at [i] ----

using UPoly = std::vector<Rat>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }  // -1 if zero

UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    utrim(d);
    return d;
}

UPoly urem(UPoly a, const UPoly& b) {
    while (udeg(a) >= udeg(b)) {
        Rat f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();  // leading entry is exactly cancelled
        utrim(a);
        if (a.empty()) break;
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// ---- binary forms as plain coefficient vectors: f = sum f[i] x^(n-i) y^i ----

bool form_is_zero(const std::vector<Rat>& f) {
    for (const auto& c : f)
        if (c != 0) return false;
    return true;
}

// Dehomogenizations.  Every plain coefficient appears in each chart, so a
// nonzero form stays nonzero on both; only the root (1:0) (resp. (0:1)) is
// invisible on the first (resp. second).
UPoly chart_y1(const std::vector<Rat>& f) {  // f(t, 1)
    UPoly u(f.rbegin(), f.rend());
    utrim(u);
    return u;
}
UPoly chart_x1(const std::vector<Rat>& f) {  // f(1, s)
    UPoly u(f.begin(), f.end());
    utrim(u);
    return u;
}

// Quotient of f by the nonzero linear form l0 x + l1 y, if it divides.
std::optional<std::vector<Rat>> divide_linear(const std::vector<Rat>& f, const Rat& l0,
                                              const Rat& l1) {
    std::size_t n = f.size() - 1;
    std::vector<Rat> g(n);
    if (l0 != 0) {
        g[0] = f[0] / l0;
        for (std::size_t i = 1; i < n; ++i) g[i] = (f[i] - l1 * g[i - 1]) / l0;
        if (f[n] != l1 * g[n - 1]) return std::nullopt;
    } else {
        if (f[0] != 0) return std::nullopt;  // y | f needs no pure-x term
        for (std::size_t i = 0; i < n; ++i) g[i] = f[i + 1] / l1;
    }
    return g;
}

bool power_divides(const std::vector<Rat>& f, const Rat& l0, const Rat& l1, int k) {
    if (form_is_zero(f)) return true;
    std::vector<Rat> cur = f;
    for (int i = 0; i < k; ++i) {
        auto q = divide_linear(cur, l0, l1);
        if (!q) return false;
        cur = std::move(*q);
    }
    return true;
}

// A root of multiplicity >= k survives in gcd(p, p', ..., p^(k-1)).
void push_with_derivatives(std::vector<UPoly>& out, UPoly p, int k) {
    for (int i = 0; i + 1 < k; ++i) {
        out.push_back(p);
        p = uderiv(p);
    }
    out.push_back(std::move(p));
}

bool charts_share_root(const std::vector<Rat>& c, int kc, const std::vector<Rat>& q, int kq) {
    for (int chart = 0; chart < 2; ++chart) {
        auto deh = [&](const std::vector<Rat>& f) { return chart == 0 ? chart_y1(f) : chart_x1(f); };
        std::vector<UPoly> polys;
        if (!form_is_zero(c)) push_with_derivatives(polys, deh(c), kc);
        if (!form_is_zero(q)) push_with_derivatives(polys, deh(q), kq);
        UPoly g;
        for (auto& p : polys) g = ugcd(std::move(g), std::move(p));
        if (udeg(g) >= 1) return true;
    }
    return false;
}

std::vector<Rat> plain_cubic(const ConcretePoint& p) {
    return {p.c[0], Rat(3) * p.c[1], Rat(3) * p.c[2], p.c[3]};
}
std::vector<Rat> plain_quartic(const ConcretePoint& p) {
    return {p.q[0], Rat(4) * p.q[1], Rat(6) * p.q[2], Rat(4) * p.q[3], p.q[4]};
}

}  // namespace

std::array<Rat, kNumVars> ConcretePoint::coords() const {
    return {l[0], l[1], c[0], c[1], c[2], c[3], q[0], q[1], q[2], q[3], q[4]};
}

bool is_nullform(const ConcretePoint& p) {
    std::vector<Rat> c = plain_cubic(p);
    std::vector<Rat> q = plain_quartic(p);
    if (p.l[0] != 0 || p.l[1] != 0)
        return power_divides(c, p.l[0], p.l[1], 2) && power_divides(q, p.l[0], p.l[1], 3);
    bool c0 = form_is_zero(c), q0 = form_is_zero(q);
    if (c0 && q0) return true;
    // Common root of multiplicity >= 2 in the cubic and >= 3 in the quartic;
    // a vanishing component drops out of the gcd.
    return charts_share_root(c, 2, q, 3);
}

std::vector<std::pair<std::string, Rat>> evaluate_invariants(const ConcretePoint& p) {
    auto x = p.coords();
    std::vector<std::pair<std::string, Rat>> out;
    for (const auto& inv : named_invariants()) out.emplace_back(inv.name, inv.value.evaluate(x));
    return out;
}

namespace {

// ---- the three-case specialization replay ----

using Subs = std::vector<std::pair<int, CoeffPoly>>;

CoeffPoly specialized(const CoeffPoly& f, const Subs& subs) {
    CoeffPoly out = f;
    for (const auto& [v, r] : subs) out = out.substitute(v, r);
    return out;
}

CoeffPoly claim_poly(std::initializer_list<std::pair<Monomial, Rat>> terms) {
    std::vector<CoeffPoly::Term> v(terms.begin(), terms.end());
    return CoeffPoly::from_terms(std::move(v));
}

CaseStep proportional_step(std::string desc, CoeffPoly computed, CoeffPoly claimed) {
    CaseStep s;
    s.description = std::move(desc);
    s.relation = "proportional";
    s.computed = std::move(computed);
    s.claimed = std::move(claimed);
    auto scalar = s.computed.proportionality(s.claimed);
    if (scalar) s.scalar = *scalar;
    s.pass = scalar.has_value() && *scalar != 0;
    return s;
}

CaseStep divides_step(std::string desc, CoeffPoly computed, int var) {
    CaseStep s;
    s.description = std::move(desc);
    s.relation = "divides";
    s.computed = std::move(computed);
    s.claimed = CoeffPoly(mono_var(var), Rat(1));
    s.pass = true;
    for (const auto& [m, c] : s.computed.terms())
        if (mono_exponent(m, var) == 0) s.pass = false;
    return s;
}

// Reads a polynomial in the single variable `var` off into dense form.
UPoly univariate_in(const CoeffPoly& f, int var) {
    UPoly u;
    for (const auto& [m, c] : f.terms()) {
        for (int v = 0; v < kNumVars; ++v)
            if (v != var && mono_exponent(m, v) != 0)
                throw std::logic_error("specialization was expected to be univariate");
        int e = mono_exponent(m, var);
        if (static_cast<int>(u.size()) <= e) u.resize(e + 1, Rat(0));
        u[e] = c;
    }
    return u;
}

CaseStep coprime_step(std::string desc, CoeffPoly a, CoeffPoly b, int var) {
    CaseStep s;
    s.description = std::move(desc);
    s.relation = "coprime";
    s.claimed = std::move(a);
    s.computed = std::move(b);
    UPoly g = ugcd(univariate_in(s.claimed, var), univariate_in(s.computed, var));
    s.pass = udeg(g) == 0;
    return s;
}

const CoeffPoly& named(const char* n) { return named_invariant(n).value; }

CaseReport finish(CaseReport r) {
    r.pass = true;
    for (const auto& s : r.steps) r.pass = r.pass && s.pass;
    return r;
}

CaseReport case_one() {
    CaseReport r;
    r.case_id = 1;
    Subs base = {{4, CoeffPoly()}, {5, CoeffPoly()}};  // a2 = a3 = 0
    r.steps.push_back(proportional_step(
        "a2 = a3 = 0: k62 ~ a1^3 c1^3", specialized(named("k62"), base),
        claim_poly({{mono_mul(mono_var(3, 3), mono_var(1, 3)), Rat(1)}})));
    Subs more = base;
    more.emplace_back(3, CoeffPoly());  // a1 = 0
    r.steps.push_back(proportional_step(
        "a1 = a2 = a3 = 0: k42 + k43 ~ a0 c1^3",
        specialized(named("k42") + named("k43"), more),
        claim_poly({{mono_mul(mono_var(2), mono_var(1, 3)), Rat(1)}})));
    return finish(std::move(r));
}

CaseReport case_two() {
    CaseReport r;
    r.case_id = 2;
    Subs base;  // a2 = a3 = b0 = b1 = b2 = 0
    for (int v : {4, 5, 6, 7, 8}) base.emplace_back(v, CoeffPoly());
    r.steps.push_back(proportional_step(
        "a2 = a3 = b0 = b1 = b2 = 0: k61 ~ a1^4 b3^2", specialized(named("k61"), base),
        claim_poly({{mono_mul(mono_var(3, 4), mono_var(9, 2)), Rat(1)}})));

    Subs a1zero = base;
    a1zero.emplace_back(3, CoeffPoly());
    r.steps.push_back(proportional_step(
        "... and a1 = 0: k51 + k52 ~ a0^2 b3^3",
        specialized(named("k51") + named("k52"), a1zero),
        claim_poly({{mono_mul(mono_var(2, 2), mono_var(9, 3)), Rat(1)}})));
    r.steps.push_back(proportional_step(
        "... and a1 = 0: k7 ~ a0^4 b4^3", specialized(named("k7"), a1zero),
        claim_poly({{mono_mul(mono_var(2, 4), mono_var(10, 3)), Rat(1)}})));

    Subs b3zero = base;
    b3zero.emplace_back(9, CoeffPoly());
    r.steps.push_back(proportional_step(
        "... and b3 = 0: k51 + k52 ~ a1^4 b4",
        specialized(named("k51") + named("k52"), b3zero),
        claim_poly({{mono_mul(mono_var(3, 4), mono_var(10)), Rat(1)}})));
    r.steps.push_back(proportional_step(
        "... and b3 = 0: k7 ~ a0^4 b4^3", specialized(named("k7"), b3zero),
        claim_poly({{mono_mul(mono_var(2, 4), mono_var(10, 3)), Rat(1)}})));
    return finish(std::move(r));
}

CaseReport case_three() {
    CaseReport r;
    r.case_id = 3;
    Subs base = {{1, CoeffPoly()}, {10, CoeffPoly()}};  // c1 = b4 = 0
    r.steps.push_back(proportional_step(
        "c1 = b4 = 0: j7 ~ b3^2 c0^4", specialized(named("j7"), base),
        claim_poly({{mono_mul(mono_var(9, 2), mono_var(0, 4)), Rat(1)}})));

    base.emplace_back(9, CoeffPoly());  // b3 = 0
    r.steps.push_back(
        proportional_step("... and b3 = 0: j1 ~ b2^3", specialized(named("j1"), base),
                          claim_poly({{mono_var(8, 3), Rat(1)}})));

    base.emplace_back(8, CoeffPoly());  // b2 = 0
    r.steps.push_back(divides_step("... and b2 = 0: a3 divides j8",
                                   specialized(named("j8"), base), 5));

    Subs a3zero = base;
    a3zero.emplace_back(5, CoeffPoly());
    r.steps.push_back(proportional_step(
        "... and a3 = 0: j3 ~ a2^2 c0^2", specialized(named("j3"), a3zero),
        claim_poly({{mono_mul(mono_var(4, 2), mono_var(0, 2)), Rat(1)}})));

    base.emplace_back(5, CoeffPoly(Rat(1)));  // a3 = 1
    base.emplace_back(0, CoeffPoly(Rat(1)));  // c0 = 1
    r.steps.push_back(proportional_step(
        "... and a3 = c0 = 1: j3 ~ 3 a2^2 - 3 a1 - 2", specialized(named("j3"), base),
        claim_poly({{mono_var(4, 2), Rat(3)}, {mono_var(3), Rat(-3)}, {kMonoOne, Rat(-2)}})));

    // a1 = a2^2 - 2/3
    base.emplace_back(3, claim_poly({{mono_var(4, 2), Rat(1)}, {kMonoOne, Rat(-2) / 3}}));
    r.steps.push_back(proportional_step(
        "... and a1 = a2^2 - 2/3: j6 ~ 27 a2^3 - 54 a2 - 27 a0 - 256 b1^2",
        specialized(named("j6"), base),
        claim_poly({{mono_var(4, 3), Rat(27)},
                         {mono_var(4), Rat(-54)},
                         {mono_var(2), Rat(-27)},
                         {mono_var(7, 2), Rat(-256)}})));

    // a0 = a2^3 - 2 a2 - (256/27) b1^2
    base.emplace_back(2, claim_poly({{mono_var(4, 3), Rat(1)},
                                          {mono_var(4), Rat(-2)},
                                          {mono_var(7, 2), Rat(-256) / 27}}));
    r.steps.push_back(proportional_step(
        "... and a0 = a2^3 - 2 a2 - 256/27 b1^2: j4 ~ 36 b0 - 144 a2 b1 - 949 b1^3",
        specialized(named("j4"), base),
        claim_poly({{mono_var(6), Rat(36)},
                         {mono_mul(mono_var(4), mono_var(7)), Rat(-144)},
                         {mono_var(7, 3), Rat(-949)}})));

    // b0 = 4 a2 b1 + (949/36) b1^3
    base.emplace_back(6, claim_poly({{mono_mul(mono_var(4), mono_var(7)), Rat(4)},
                                          {mono_var(7, 3), Rat(949) / 36}}));
    CoeffPoly j2_claim =
        claim_poly({{kMonoOne, Rat(27)}, {mono_var(7, 4), Rat(-2048)}});
    r.steps.push_back(proportional_step(
        "... and b0 = 4 a2 b1 + 949/36 b1^3: j2 ~ 27 - 2048 b1^4",
        specialized(named("j2"), base), j2_claim));
    CoeffPoly j8_cofactor = claim_poly(
        {{kMonoOne, Rat(33205248)}, {mono_var(7, 4), Rat(-4273351745L)}});
    r.steps.push_back(proportional_step(
        "same substitutions: j8 ~ b1^5 (33205248 - 4273351745 b1^4)",
        specialized(named("j8"), base), CoeffPoly(mono_var(7, 5), Rat(1)) * j8_cofactor));

    r.steps.push_back(coprime_step(
        "27 - 2048 b1^4 and 33205248 - 4273351745 b1^4 share no root: no solution",
        j2_claim, j8_cofactor, 7));
    return finish(std::move(r));
}

// ---- independence sampling ----

Rat small_rat(std::mt19937_64& g) {
    long num = static_cast<long>(g() % 19) - 9;
    long den = static_cast<long>(g() % 4) + 1;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

int dense_rank(std::vector<std::array<Rat, kNumVars>> rows) {
    int rank = 0;
    for (int col = 0; col < kNumVars && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[rank][col];
            for (int c = col; c < kNumVars; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

const std::array<std::array<CoeffPoly, kNumVars>, 8>& jacobian_rows() {
    static const auto rows = [] {
        std::array<std::array<CoeffPoly, kNumVars>, 8> out;
        auto js = hsop();
        for (int i = 0; i < 8; ++i)
            for (int v = 0; v < kNumVars; ++v) out[i][v] = js[i]->derivative(v);
        return out;
    }();
    return rows;
}

}  // namespace

std::vector<CaseReport> verify_case_identities() {
    return {case_one(), case_two(), case_three()};
}

IndependenceReport independence_evidence(int sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw std::invalid_argument("sample_count must be at least 1");
    IndependenceReport rep;
    rep.seed = seed;
    const auto& jac = jacobian_rows();
    for (int i = 0; i < sample_count; ++i) {
        // Per-point generator, so samples are independent of batching.
        std::mt19937_64 g(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1)));
        ConcretePoint p;
        for (auto& v : p.l) v = small_rat(g);
        for (auto& v : p.c) v = small_rat(g);
        for (auto& v : p.q) v = small_rat(g);
        auto x = p.coords();
        std::vector<std::array<Rat, kNumVars>> m(8);
        for (int r = 0; r < 8; ++r)
            for (int v = 0; v < kNumVars; ++v) m[r][v] = jac[r][v].evaluate(x);
        int rank = dense_rank(std::move(m));
        rep.points.push_back(std::move(p));
        rep.ranks.push_back(rank);
        if (rank == 8) rep.independent = true;
    }
    return rep;
}

}  // namespace binv
