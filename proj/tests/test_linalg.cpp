#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <random>
#include <stdexcept>

#include "binv/form.hpp"
#include "binv/grading.hpp"
#include "binv/named_invariants.hpp"
#include "binv/sparse_linalg.hpp"
#include "doctest.h"

using namespace binv;

namespace {

Monomial mono(std::initializer_list<std::pair<int, int>> ve) {
    std::array<int, kNumVars> e{};
    for (auto& [v, k] : ve) e[v] += k;
    return mono_from_exponents(e);
}

// t-linear part of a symbolically transformed polynomial.
CoeffPoly t_linear(const Poly<RatPoly>& g) {
    std::vector<CoeffPoly::Term> acc;
    for (const auto& [m, c] : g.terms()) {
        Rat r = c.coeff(1);
        if (r != 0) acc.emplace_back(m, r);
    }
    return CoeffPoly::from_terms(std::move(acc));
}

CoeffPoly random_poly(std::mt19937_64& rng, int terms, int max_exp) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<CoeffPoly::Term> acc;
    for (int i = 0; i < terms; ++i) {
        std::array<int, kNumVars> e{};
        for (int v = 0; v < kNumVars; ++v) e[v] = exp(rng) == max_exp ? 1 : 0;
        int n = num(rng);
        if (n == 0) n = 1;
        Rat c(n, den(rng));
        c.canonicalize();
        acc.emplace_back(mono_from_exponents(e), c);
    }
    return CoeffPoly::from_terms(std::move(acc));
}

}  // namespace

TEST_CASE("64-bit primality testing and the prime pools") {
    CHECK(!is_prime_u64(0));
    CHECK(!is_prime_u64(1));
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(!is_prime_u64(4));
    CHECK(is_prime_u64(1000003));
    CHECK(!is_prime_u64(1000003ULL * 1000033ULL));
    CHECK(is_prime_u64(2305843009213693951ULL));   // 2^61 - 1, Mersenne
    CHECK(!is_prime_u64(2305843009213693953ULL));  // 2^61 + 1 = 3 * 715827883 * ...
    CHECK(!is_prime_u64(1ULL << 62));

    auto def = default_primes();
    REQUIRE(def.size() >= 2);
    auto ext = extension_primes();
    CHECK(ext.size() >= 8);
    std::vector<std::uint64_t> all = def;
    all.insert(all.end(), ext.begin(), ext.end());
    for (auto p : all) {
        CHECK(is_prime_u64(p));
        CHECK(p > (1ULL << 31));
    }
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("prime field arithmetic") {
    PrimeField F(1000003);
    CHECK(F.modulus() == 1000003);
    CHECK(F.add(1000000, 10) == 7);
    CHECK(F.sub(3, 10) == 999996);
    CHECK(F.neg(0) == 0);
    CHECK(F.mul(999999, 999999) == F.pow(999999, 2));
    for (std::uint64_t a : {1ULL, 2ULL, 999999ULL, 123456ULL})
        CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
    CHECK(F.pow(3, 1000002) == 1);  // Fermat
    CHECK(F.from_int(-5) == 999998);
    CHECK(F.mul(F.from_rat(Rat(22, 7)), 7) == 22);
    CHECK_THROWS_AS(F.from_rat(Rat(1, 1000003)), std::domain_error);
    CHECK_THROWS(PrimeField(4));
    CHECK_THROWS(PrimeField(0));

    // The big working primes survive a round trip on an awkward rational.
    for (auto p : default_primes()) {
        PrimeField G(p);
        Rat q(-355, 113);
        CHECK(G.mul(G.from_rat(q), G.from_int(113)) == G.from_int(-355));
    }
}

TEST_CASE("CRT accumulation and rational reconstruction") {
    auto def = default_primes();
    std::uint64_t p1 = def[0], p2 = def[1];
    Rat q(-22, 7);
    CrtAccumulator acc;
    acc.add(PrimeField(p1).from_rat(q), p1);
    acc.add(PrimeField(p2).from_rat(q), p2);
    CHECK(acc.modulus == mpz_class(p1) * mpz_class(p2));
    auto r = rational_reconstruct(acc.value, acc.modulus);
    REQUIRE(r.has_value());
    CHECK(*r == q);

    CHECK(*rational_reconstruct(mpz_class(2), mpz_class(101)) == 2);
    CHECK(*rational_reconstruct(mpz_class(99), mpz_class(101)) == -2);
    // 37 mod 101 has no representation with numerator and denominator below
    // sqrt(101/2) ~ 7.1, so reconstruction must refuse rather than guess.
    CHECK(!rational_reconstruct(mpz_class(37), mpz_class(101)).has_value());

    // An 87-bit integer exceeds the two-prime bound sqrt(M/2) ~ 2^60.5, so
    // reconstruction refuses; a third prime makes the modulus large enough.
    mpz_class big("123456789123456789123456789");
    CrtAccumulator acc2;
    acc2.add(mpz_class(big % p1).get_ui(), p1);
    acc2.add(mpz_class(big % p2).get_ui(), p2);
    CHECK(!rational_reconstruct(acc2.value, acc2.modulus).has_value());
    std::uint64_t p3 = extension_primes().front();
    acc2.add(mpz_class(big % p3).get_ui(), p3);
    auto r2 = rational_reconstruct(acc2.value, acc2.modulus);
    REQUIRE(r2.has_value());
    CHECK(r2->get_num() == big);
    CHECK(r2->get_den() == 1);
}

TEST_CASE("raising matrices on tiny blocks match hand calculations") {
    auto r0 = raising_matrix({0, 0, 0});
    CHECK(r0.domain.size() == 1);
    CHECK(r0.image.empty());
    CHECK(r0.m.rows == 1);
    CHECK(r0.m.cols == 0);
    CHECK(r0.m.entries.empty());

    auto r1 = raising_matrix({1, 0, 0});
    CHECK(r1.domain.empty());
    CHECK(r1.m.rows == 0);
    CHECK(r1.m.cols == 0);

    // Quadratic block of the quartic: domain b0b4 > b1b3 > b2^2, image
    // b1b4 > b2b3; the derivation sends b0b4 -> 4 b1b4,
    // b1b3 -> b1b4 + 3 b2b3, b2^2 -> 4 b2b3.
    auto r2 = raising_matrix({0, 0, 2});
    REQUIRE(r2.domain.size() == 3);
    REQUIRE(r2.image.size() == 2);
    CHECK(r2.domain[0] == mono({{6, 1}, {10, 1}}));
    CHECK(r2.domain[1] == mono({{7, 1}, {9, 1}}));
    CHECK(r2.domain[2] == mono({{8, 2}}));
    CHECK(r2.image[0] == mono({{7, 1}, {10, 1}}));
    CHECK(r2.image[1] == mono({{8, 1}, {9, 1}}));
    REQUIRE(r2.m.entries.size() == 4);
    CHECK(r2.m.entries[0].row == 0);
    CHECK(r2.m.entries[0].col == 0);
    CHECK(r2.m.entries[0].value == 4);
    CHECK(r2.m.entries[1].row == 1);
    CHECK(r2.m.entries[1].col == 0);
    CHECK(r2.m.entries[1].value == 1);
    CHECK(r2.m.entries[2].row == 1);
    CHECK(r2.m.entries[2].col == 1);
    CHECK(r2.m.entries[2].value == 3);
    CHECK(r2.m.entries[3].row == 2);
    CHECK(r2.m.entries[3].col == 1);
    CHECK(r2.m.entries[3].value == 4);

    auto t = transpose(r2.m);
    CHECK(t.rows == 2);
    CHECK(t.cols == 3);
    CHECK(t.entries.size() == 4);
    CHECK(t.entries[0].row == 0);
    CHECK(t.entries[0].col == 0);
    CHECK(t.entries[1].col == 1);
    CHECK(t.entries[2].row == 1);
}

TEST_CASE("derivations agree with the t-linear part of the unipotent substitutions") {
    std::mt19937_64 rng(20260814);
    // The lower-triangular substitution moves coefficients up with rate n-j;
    // the upper-triangular one moves them down with rate j and the opposite
    // parameter sign (it is the inverse-transposed subgroup).
    for (int i = 0; i < 25; ++i) {
        CoeffPoly f = random_poly(rng, 4, 3);
        CHECK(raise_poly(f) == t_linear(apply_group_element(f, unipotent_lower_t())));
        CHECK(lower_poly(f) == -t_linear(apply_group_element(f, unipotent_upper_t())));
    }
    // Leibniz rule.
    CoeffPoly f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2);
    CHECK(raise_poly(f * g) == raise_poly(f) * g + f * raise_poly(g));
    CHECK(lower_poly(f * g) == lower_poly(f) * g + f * lower_poly(g));
}

TEST_CASE("modular kernels have the combinatorially counted dimension") {
    PrimeField F(default_primes()[0]);
    for (int total = 2; total <= 6; ++total) {
        for (const auto& d : multidegrees_of_total(total)) {
            auto rm = raising_matrix(d);
            auto k = kernel_mod_p(transpose(rm.m), F);
            CHECK(static_cast<long long>(k.kernel.size()) == invariant_dimension(d));
            CHECK(k.pivot_cols.size() + k.free_cols.size() == rm.domain.size());
        }
    }
}

TEST_CASE("the quartic discriminant-degree block has the expected exact kernel") {
    auto basis = invariant_basis({0, 0, 2});
    REQUIRE(basis.size() == 1);
    const CoeffPoly& v = basis.front();
    CHECK(v.coeff(mono({{6, 1}, {10, 1}})) == Rat(1, 3));
    CHECK(v.coeff(mono({{7, 1}, {9, 1}})) == Rat(-4, 3));
    CHECK(v.coeff(mono({{8, 2}})) == 1);
    auto s = v.proportionality(named_invariant("k2").value);
    REQUIRE(s.has_value());
    CHECK(*s == Rat(1, 6));  // (q,q)_4 = 2 b0b4 - 8 b1b3 + 6 b2^2
}

TEST_CASE("exact invariant bases: sizes, normalization, and sl2-invariance") {
    auto b111 = invariant_basis({1, 1, 1});
    REQUIRE(b111.size() == 1);
    Form lc = form_mul(GenericForms::linear(), GenericForms::cubic());
    CoeffPoly g = invariant_of(transvectant(lc, GenericForms::quartic(), 4));
    CHECK(b111.front().proportionality(g).has_value());

    auto b243 = invariant_basis({2, 4, 3});
    CHECK(b243.size() == 8);
    auto b154 = invariant_basis({1, 5, 4});
    CHECK(b154.size() == 12);
    for (const auto& v : b243) {
        CHECK(raise_poly(v).is_zero());
        CHECK(lower_poly(v).is_zero());
    }
    for (const auto& v : b154) {
        CHECK(raise_poly(v).is_zero());
        CHECK(lower_poly(v).is_zero());
    }
    // Full symbolic group check on the small block.
    CHECK(apply_group_element(b111.front(), unipotent_lower_t()) == lift_to_t(b111.front()));
    CHECK(apply_group_element(b111.front(), unipotent_upper_t()) == lift_to_t(b111.front()));
}

TEST_CASE("basis size equals the dimension count on every block of total degree <= 10") {
    for (int total = 2; total <= 10; ++total)
        for (const auto& d : multidegrees_of_total(total))
            CHECK(invariant_basis(d).size() == static_cast<std::size_t>(invariant_dimension(d)));
}

TEST_CASE("span ranks: certificates, invariances, and exact agreement") {
    MultiDegree d{1, 5, 4};
    auto basis = invariant_basis(d);
    REQUIRE(basis.size() == 12);

    auto cert = span_rank(basis, d);
    CHECK(cert.agreed == 12);
    CHECK(cert.primes == default_primes());
    for (auto r : cert.ranks) CHECK(r == 12);
    CHECK(!cert.primes_disagreed);
    CHECK(!cert.exact_confirmed);

    // Scaling, permutation, and adding dependent vectors leave the rank alone.
    std::mt19937_64 rng(99);
    std::vector<CoeffPoly> tweaked = basis;
    std::uniform_int_distribution<int> num(1, 9);
    for (auto& v : tweaked) v *= Rat(num(rng), num(rng));
    std::shuffle(tweaked.begin(), tweaked.end(), rng);
    tweaked.push_back(tweaked[0] + tweaked[1] * Rat(3, 2));
    tweaked.push_back(tweaked[2]);
    CHECK(span_rank(tweaked, d).agreed == 12);

    // Early stop reports the requested bound from the first prime alone.
    SpanRankOptions stop;
    stop.early_stop = 5;
    auto c5 = span_rank(basis, d, stop);
    CHECK(c5.agreed == 5);
    CHECK(c5.ranks.size() == 1);
    CHECK(c5.note.find("early") != std::string::npos);

    // Exact confirmation agrees with the modular consensus.
    SpanRankOptions ex;
    ex.exact_confirm = true;
    std::vector<CoeffPoly> combos;
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int i = 0; i < 6; ++i) {
        CoeffPoly f;
        for (const auto& v : basis) f += v * Rat(coef(rng));
        combos.push_back(f);
    }
    auto ce = span_rank(combos, d, ex);
    CHECK(ce.exact_confirmed);
    CHECK(ce.agreed == rank_exact(combos, d));
    CHECK(ce.agreed <= 6);

    // Both pivot rules see the same rank.
    SpanRankOptions alt;
    alt.rule = PivotRule::LeftmostFirstRow;
    CHECK(span_rank(combos, d, alt).agreed == ce.agreed);

    CHECK(span_rank({}, d).agreed == 0);
    CHECK(rank_exact({}, d) == 0);

    // Vectors outside the block are rejected.
    MultiDegree q2{0, 0, 2};
    CoeffPoly wrong_block(Rat(1));
    CHECK_THROWS_AS(span_rank({wrong_block}, q2), std::invalid_argument);
    CoeffPoly wrong_weight = CoeffPoly::from_terms({{mono({{6, 1}, {9, 1}}), Rat(1)}});
    CHECK_THROWS_AS(span_rank({wrong_weight, wrong_weight}, q2), std::invalid_argument);
    CHECK_THROWS_AS(rank_exact({wrong_weight}, q2), std::invalid_argument);
}

TEST_CASE("a modular rank equal to the block dimension certifies fullness") {
    // The eight degree-(2,4,3) products span a 7-dimensional subspace of the
    // 8-dimensional block: modular and exact ranks agree on the deficiency.
    MultiDegree d{2, 4, 3};
    auto basis = invariant_basis(d);
    std::vector<CoeffPoly> seven(basis.begin(), basis.begin() + 7);
    seven.push_back(basis[0] * Rat(2) - basis[3]);
    SpanRankOptions ex;
    ex.exact_confirm = true;
    auto cert = span_rank(seven, d, ex);
    CHECK(cert.agreed == 7);
    CHECK(cert.exact_confirmed);
}
