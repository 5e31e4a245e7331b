#pragma once

// Integer arithmetic layer: factorization, Euclid, the imph(n) function and
// root counting for the congruence x^2 - x + 1 = 0.

#include <cstdint>
#include <span>
#include <vector>

namespace cleantri {

inline constexpr std::uint64_t kMaxArgument = 0x7fffffffffffffffULL;  // 2^63 - 1
inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;
inline constexpr std::uint64_t kSieveLimit = 100'000'000;
inline constexpr std::uint64_t kRootListLimit = 10'000'000;

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Factorization {
public:
    Factorization() = default;
    Factorization(std::uint64_t n, std::vector<PrimePower> factors);

    std::uint64_t n() const noexcept { return n_; }
    std::span<const PrimePower> factors() const noexcept { return factors_; }

    // omega: distinct primes; big_omega: primes counted with multiplicity.
    unsigned omega() const noexcept { return static_cast<unsigned>(factors_.size()); }
    unsigned big_omega() const noexcept;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::uint64_t n_ = 1;
    std::vector<PrimePower> factors_;
};

struct GcdResult {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;

    friend bool operator==(const GcdResult&, const GcdResult&) = default;
};

bool is_prime(std::uint64_t n);

// Trial division for small cofactors, Pollard-Brent rho above that.
Factorization factorize(std::uint64_t n);

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) > 0.
///
/// The coefficients are the ones produced by the classical Euclidean
/// recurrence, except that when a divides b the pair (sign(a), 0) is returned.
/// Both |x| <= max(1, |b|/g) and |y| <= max(1, |a|/g) hold.
GcdResult extended_gcd(std::int64_t a, std::int64_t b);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// Inverse of a modulo n in [0, n). Throws errc::not_invertible when
/// gcd(a, n) > 1. For n = 1 the result is 0.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept;

// imph(n) = #{1 <= x <= n : gcd(x, n) = gcd(x - 1, n) = 1}
std::uint64_t imph(std::uint64_t n);
std::uint64_t imph(const Factorization& f) noexcept;
std::uint64_t imph(std::span<const PrimePower> factors) noexcept;

// Direct double-gcd count, n <= kBruteForceLimit. Does not factor n.
std::uint64_t imph_bruteforce(std::uint64_t n);

/// Table t with t[k] = imph(k) for 1 <= k <= x; t[0] is 0 and unused.
/// Fails with errc::memory_budget when the table would exceed the budget
/// returned by sieve_memory_budget().
std::vector<std::uint32_t> imph_sieve(std::uint64_t x);

// Legendre symbol (-3/p) by Euler's criterion, for primes p > 3.
int legendre_minus3(std::uint64_t p);

struct QuadRoots {
    std::uint64_t count;
    // Sorted roots in [0, p^k). Only filled when p^k <= kRootListLimit.
    std::vector<std::uint64_t> roots;
};

// Roots of x^2 - x + 1 modulo p^k for an odd prime p.
QuadRoots count_roots_quad(std::uint64_t p, unsigned k);

// Number of residues x in [0, n) with x^2 - x + 1 = 0 (mod n), n odd.
std::uint64_t count_roots_quad_n(std::uint64_t n);
std::uint64_t count_roots_quad_n(const Factorization& f) noexcept;
std::uint64_t count_roots_quad_n(std::span<const PrimePower> factors) noexcept;

// Sorted list of those residues, assembled by CRT; n odd, n <= kRootListLimit.
std::vector<std::uint64_t> quad_roots_mod(std::uint64_t n);

// Byte budget for sieve tables (CLEANTRI_SIEVE_MEMORY, default 1 GiB).
std::uint64_t sieve_memory_budget();
void check_sieve_budget(std::uint64_t entries, std::uint64_t bytes_per_entry, const char* what);

// Smallest prime factor table for 0..x (entries 0 and 1 are 0).
std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint64_t x);

}  // namespace cleantri
