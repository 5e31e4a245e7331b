#pragma once

// Test-only reference computations. Nothing here calls into the library's
// factorization, root-finding or reduction code.

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_division(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime_slow(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Residues x in [0, n) with x^2 - x + 1 = 0 (mod n), by direct scan.
inline std::vector<std::uint64_t> quad_roots_scan(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < n; ++x) {
        if ((x * x + n - x + 1) % n == 0) out.push_back(x);
    }
    return out;
}

inline std::uint64_t imph_scan(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x <= n; ++x)
        if (std::gcd(x, n) == 1 && std::gcd(x - 1, n) == 1) ++count;
    return count;
}

// 2^Omega(n) by trial division.
inline std::uint64_t two_pow_big_omega(std::uint64_t n) {
    std::uint64_t r = 1;
    for (const auto& [p, e] : trial_division(n)) r <<= e;
    return r;
}

// Orbit count under m -> m^-1 and m -> 1 - m by explicit closure, using
// inverses found by search.
inline std::uint64_t orbit_count_search(std::uint64_t n) {
    std::vector<std::uint64_t> ip;
    for (std::uint64_t x = 1; x <= n; ++x)
        if (std::gcd(x, n) == 1 && std::gcd(x - 1, n) == 1) ip.push_back(x);
    auto inverse = [n](std::uint64_t x) {
        for (std::uint64_t y = 1; y <= n; ++y)
            if ((x * y) % n == 1 % n) return y;
        return std::uint64_t{0};
    };
    std::vector<char> seen(n + 1, 0);
    std::uint64_t orbits = 0;
    for (auto start : ip) {
        if (seen[start]) continue;
        ++orbits;
        std::vector<std::uint64_t> stack = {start};
        seen[start] = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (std::uint64_t y : {inverse(x), (1 + n - x % n) % n == 0 ? n : (1 + n - x % n) % n}) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return orbits;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20261016);
    return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace oracle
