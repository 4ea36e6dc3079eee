#include "binv/modp.hpp"

#include <stdexcept>

namespace binv {

namespace {

std::uint64_t mulmod_raw(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_raw(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_raw(r, a, m);
        a = mulmod_raw(a, a, m);
        e >>= 1;
    }
    return r;
}

mpz_class mpz_from_u64(std::uint64_t v) {
    mpz_class z(static_cast<unsigned long>(v >> 32));
    z <<= 32;
    z += static_cast<unsigned long>(v & 0xffffffffull);
    return z;
}

std::uint64_t u64_from_mpz(const mpz_class& z) {  // requires 0 <= z < 2^64
    return static_cast<std::uint64_t>(mpz_get_ui(z.get_mpz_t()));
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_raw(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_raw(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

const std::vector<std::uint64_t>& default_primes() {
    static const std::vector<std::uint64_t> v = {2305843009213693951ull,   // 2^61-1
                                                 4611686018427387847ull};
    return v;
}

const std::vector<std::uint64_t>& extension_primes() {
    static const std::vector<std::uint64_t> v = {
        4611686018427387817ull, 4611686018427387787ull, 4611686018427387761ull,
        4611686018427387751ull, 4611686018427387737ull, 4611686018427387733ull,
        4611686018427387709ull, 4611686018427387701ull, 4611686018427387631ull,
        4611686018427387617ull, 4611686018427387587ull, 4611686018427387461ull,
        4611686018427387421ull, 4611686018427387409ull, 4611686018427387329ull,
        4611686018427387323ull};
    return v;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (1ull << 63) || !is_prime_u64(p))
        throw std::invalid_argument("modulus is not a prime below 2^63: " +
                                    std::to_string(p));
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    return powmod_raw(a, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("inverse of zero");
    return powmod_raw(a, p_ - 2, p_);
}

std::uint64_t PrimeField::from_rat(const Rat& q) const {
    mpz_class pz = mpz_from_u64(p_);
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    std::uint64_t n = u64_from_mpz(num), d = u64_from_mpz(den);
    if (d == 0)
        throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    return mul(n, inv(d));
}

std::uint64_t PrimeField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(r);
}

void CrtAccumulator::add(std::uint64_t residue, std::uint64_t m) {
    // Solve x = value (mod modulus), x = residue (mod m).
    mpz_class mz = mpz_from_u64(m);
    mpz_class rz = mpz_from_u64(residue);

    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t(),
               mz.get_mpz_t());
    if (g != 1) throw std::invalid_argument("CRT moduli are not coprime");
    // x = value + modulus * s * (residue - value) mod (modulus*m)
    mpz_class big = modulus * mz;
    mpz_class x = value + modulus * s % big * ((rz - value) % big) % big;
    x %= big;
    if (x < 0) x += big;
    value = x;
    modulus = big;
}

std::optional<Rat> rational_reconstruct(const mpz_class& r, const mpz_class& M) {
    if (M <= 1) return std::nullopt;
    mpz_class bound;
    mpz_class half = M / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    // Half-extended Euclid on (M, r): stop when the remainder drops below the
    // numerator bound; the cofactor is the denominator candidate.
    mpz_class r0 = M, r1 = r % M;
    if (r1 < 0) r1 += M;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    mpz_class num = r1, den = t1;
    if (den < 0) { den = -den; num = -num; }
    if (den > bound || den == 0) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1 && num != 0) return std::nullopt;  // spurious, not a true fraction
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace binv
