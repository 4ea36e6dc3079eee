#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binv/rational.hpp"

namespace binv {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Default working primes (both > 2^31; the first is 2^61 - 1) and a reserve
// pool drawn on prime disagreement or when rational reconstruction needs a
// larger modulus.
const std::vector<std::uint64_t>& default_primes();
const std::vector<std::uint64_t>& extension_primes();

// Arithmetic in Z/p for a prime p < 2^63.
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p_ - a : 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws std::domain_error on 0

    // Reduce a rational; throws std::domain_error if the denominator
    // vanishes mod p (the prime is unusable for that input).
    std::uint64_t from_rat(const Rat& q) const;
    std::uint64_t from_int(long long v) const;

  private:
    std::uint64_t p_;
};

// Combine residues r_i mod m_i (pairwise coprime) into the residue mod
// prod(m_i), tracked exactly.
struct CrtAccumulator {
    mpz_class value = 0;    // canonical residue in [0, modulus)
    mpz_class modulus = 1;

    void add(std::uint64_t residue, std::uint64_t m);
};

// Recover num/den with |num|, den <= sqrt(M/2) from num*den^-1 = r (mod M).
// Returns nullopt if no such fraction exists (insufficient modulus).
std::optional<Rat> rational_reconstruct(const mpz_class& r, const mpz_class& M);

}  // namespace binv
