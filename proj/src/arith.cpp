#include "cleantri/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "cleantri/error.hpp"

namespace cleantri {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kTrialDivisionBound = 1000;

void check_argument(std::uint64_t n, const char* what) {
    if (n == 0) fail(errc::invalid_argument, std::string(what) + ": argument must be positive");
    if (n > kMaxArgument) fail(errc::out_of_range, std::string(what) + ": argument exceeds 2^63-1");
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Brent's variant of Pollard rho with a fixed sequence of constants, so the
// factor found (and hence the output order before sorting) is reproducible.
std::uint64_t rho_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = rho_factor(n);
    split(d, primes);
    split(n / d, primes);
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > kMaxArgument / p) fail(errc::out_of_range, "prime power exceeds 2^63-1");
        r *= p;
    }
    return r;
}

std::uint64_t quad_root_count(std::uint64_t p, unsigned k) noexcept {
    if (p == 3) return k == 1 ? 1 : 0;
    return p % 6 == 1 ? 2 : 0;
}

std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

std::uint64_t quad_value(std::uint64_t x, std::uint64_t mod) {
    // x^2 - x + 1 mod `mod`, with x < mod
    std::uint64_t sq = mul_mod(x, x, mod);
    return (sq + mod - x + 1) % mod;
}

}  // namespace

Factorization::Factorization(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
    if (n == 0) fail(errc::invalid_argument, "factorization of zero");
    u128 product = 1;
    std::uint64_t previous = 1;
    for (const auto& [p, e] : factors_) {
        if (p <= previous || e == 0 || !is_prime(p))
            fail(errc::invalid_argument, "malformed factorization");
        previous = p;
        for (unsigned i = 0; i < e; ++i) {
            product *= p;
            if (product > n) fail(errc::invalid_argument, "factorization product mismatch");
        }
    }
    if (product != n) fail(errc::invalid_argument, "factorization product mismatch");
}

unsigned Factorization::big_omega() const noexcept {
    unsigned total = 0;
    for (const auto& f : factors_) total += f.exponent;
    return total;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept {
    if (n == 1) return 0;
    std::uint64_t result = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : bases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // These twelve bases are deterministic for all n < 3.3e24.
    for (auto a : bases) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    check_argument(n, "factorize");
    std::vector<PrimePower> factors;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p < kTrialDivisionBound && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.push_back({p, e});
    }
    if (rest > 1) {
        std::vector<std::uint64_t> primes;
        split(rest, primes);
        std::sort(primes.begin(), primes.end());
        for (auto p : primes) {
            if (!factors.empty() && factors.back().prime == p)
                ++factors.back().exponent;
            else
                factors.push_back({p, 1});
        }
    }
    return Factorization(n, std::move(factors));
}

GcdResult extended_gcd(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) fail(errc::invalid_argument, "extended_gcd(0, 0) is undefined");
    if (a == std::numeric_limits<std::int64_t>::min() || b == std::numeric_limits<std::int64_t>::min())
        fail(errc::out_of_range, "extended_gcd: argument out of range");
    if (a != 0 && b % a == 0) return {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};

    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t n) {
    if (n == 0) fail(errc::invalid_argument, "mod_inverse: modulus must be positive");
    if (n > kMaxArgument) fail(errc::out_of_range, "mod_inverse: modulus exceeds 2^63-1");
    if (n == 1) return 0;
    auto modulus = static_cast<std::int64_t>(n);
    std::int64_t r = a % modulus;
    if (r < 0) r += modulus;
    if (r == 0) fail(errc::not_invertible, "mod_inverse: " + std::to_string(a) + " is not invertible mod " + std::to_string(n));
    auto [g, x, y] = extended_gcd(r, modulus);
    (void)y;
    if (g != 1)
        fail(errc::not_invertible, "mod_inverse: gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") = " + std::to_string(g));
    x %= modulus;
    if (x < 0) x += modulus;
    return static_cast<std::uint64_t>(x);
}

std::uint64_t imph(const Factorization& f) noexcept { return imph(f.factors()); }

std::uint64_t imph(std::span<const PrimePower> factors) noexcept {
    std::uint64_t result = 1;
    for (const auto& [p, e] : factors) {
        if (p == 2) return 0;
        std::uint64_t term = p - 2;
        for (unsigned i = 1; i < e; ++i) term *= p;
        result *= term;
    }
    return result;
}

std::uint64_t imph(std::uint64_t n) {
    check_argument(n, "imph");
    if (n % 2 == 0) return 0;
    return imph(factorize(n));
}

std::uint64_t imph_bruteforce(std::uint64_t n) {
    check_argument(n, "imph_bruteforce");
    if (n > kBruteForceLimit) fail(errc::out_of_range, "imph_bruteforce: n above oracle bound 10^7");
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x <= n; ++x) {
        if (std::gcd(x, n) == 1 && std::gcd(x - 1, n) == 1) ++count;
    }
    return count;
}

std::vector<std::uint32_t> imph_sieve(std::uint64_t x) {
    if (x > kSieveLimit) fail(errc::out_of_range, "imph_sieve: bound exceeds 10^8");
    check_sieve_budget(x + 1, sizeof(std::uint32_t), "imph_sieve");
    std::vector<std::uint32_t> table(x + 1, 0);
    for (std::uint64_t k = 1; k <= x; k += 2) table[k] = static_cast<std::uint32_t>(k);
    // An odd entry still equal to its index has no smaller odd prime factor.
    for (std::uint64_t p = 3; p <= x; p += 2) {
        if (table[p] != p) continue;
        const auto p32 = static_cast<std::uint32_t>(p);
        for (std::uint64_t j = p; j <= x; j += 2 * p) table[j] = table[j] / p32 * (p32 - 2);
    }
    return table;
}

int legendre_minus3(std::uint64_t p) {
    if (p <= 3 || !is_prime(p)) fail(errc::invalid_argument, "legendre_minus3: p must be a prime > 3");
    std::uint64_t e = pow_mod(p - 3, (p - 1) / 2, p);
    int symbol = e == 1 ? 1 : -1;
    if (e != 1 && e != p - 1) fail(errc::invariant_violation, "Euler's criterion returned a non-unit");
    int expected = p % 6 == 1 ? 1 : -1;
    if (symbol != expected) fail(errc::invariant_violation, "(-3/p) disagrees with p mod 6");
    return symbol;
}

QuadRoots count_roots_quad(std::uint64_t p, unsigned k) {
    if (p == 2) fail(errc::invalid_argument, "count_roots_quad: p must be odd");
    if (k == 0) fail(errc::invalid_argument, "count_roots_quad: exponent must be positive");
    if (!is_prime(p)) fail(errc::invalid_argument, "count_roots_quad: p must be prime");
    const std::uint64_t modulus = checked_pow(p, k);

    QuadRoots out{quad_root_count(p, k), {}};
    if (out.count == 0 || modulus > kRootListLimit) return out;
    if (p == 3) {
        // The derivative 2x - 1 vanishes mod 3 at x = 2, so there is no lift.
        out.roots = {2};
        return out;
    }

    const std::uint64_t s = sqrt_mod_prime(p - 3, p);
    const std::uint64_t half = (p + 1) / 2;
    std::vector<std::uint64_t> roots = {mul_mod(1 + s, half, p), mul_mod(1 + p - s, half, p)};
    std::uint64_t mod = p;
    for (unsigned j = 2; j <= k; ++j) {
        mod *= p;
        for (auto& r : roots) {
            // Newton step r <- r - f(r) / f'(r) modulo p^j.
            std::uint64_t deriv = (2 * r + mod - 1) % mod;
            std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(deriv), mod);
            std::uint64_t step = mul_mod(quad_value(r, mod), inv, mod);
            r = (r + mod - step) % mod;
        }
    }
    std::sort(roots.begin(), roots.end());
    for (auto r : roots) {
        if (quad_value(r, modulus) != 0) fail(errc::invariant_violation, "Hensel lift produced a non-root");
    }
    out.roots = std::move(roots);
    return out;
}

std::uint64_t count_roots_quad_n(const Factorization& f) noexcept { return count_roots_quad_n(f.factors()); }

std::uint64_t count_roots_quad_n(std::span<const PrimePower> factors) noexcept {
    std::uint64_t count = 1;
    for (const auto& [p, e] : factors) {
        if (p == 2) return 0;
        count *= quad_root_count(p, e);
    }
    return count;
}

std::uint64_t count_roots_quad_n(std::uint64_t n) {
    check_argument(n, "count_roots_quad_n");
    if (n % 2 == 0) fail(errc::invalid_argument, "count_roots_quad_n: n must be odd");
    return count_roots_quad_n(factorize(n));
}

std::vector<std::uint64_t> quad_roots_mod(std::uint64_t n) {
    check_argument(n, "quad_roots_mod");
    if (n % 2 == 0) fail(errc::invalid_argument, "quad_roots_mod: n must be odd");
    if (n > kRootListLimit) fail(errc::out_of_range, "quad_roots_mod: root lists are only built for n <= 10^7");
    std::vector<std::uint64_t> roots = {0};
    std::uint64_t mod = 1;
    const Factorization f = factorize(n);
    for (const auto& [p, e] : f.factors()) {
        auto local = count_roots_quad(p, e);
        const std::uint64_t pe = checked_pow(p, e);
        std::vector<std::uint64_t> combined;
        // x = r (mod mod), x = s (mod pe)  =>  x = r + mod * ((s - r) * mod^-1 mod pe)
        const std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(mod % pe), pe);
        for (auto r : roots) {
            for (auto s : local.roots) {
                std::uint64_t diff = (s + pe - r % pe) % pe;
                combined.push_back(r + mod * mul_mod(diff, inv, pe));
            }
        }
        roots = std::move(combined);
        mod *= pe;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint64_t x) {
    if (x > kSieveLimit) fail(errc::out_of_range, "smallest_prime_factor_sieve: bound exceeds 10^8");
    check_sieve_budget(x + 1, sizeof(std::uint32_t), "smallest_prime_factor_sieve");
    std::vector<std::uint32_t> spf(x + 1, 0);
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (spf[i] != 0) continue;
        spf[i] = static_cast<std::uint32_t>(i);
        for (std::uint64_t j = i * i; j <= x; j += i) {
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    return spf;
}

}  // namespace cleantri
