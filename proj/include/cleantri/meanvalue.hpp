#pragma once

// Summatory functions of imph and T, and the constants governing their
// growth: the odd Euler product prod_{p >= 3} (1 - 2/p^2), its Moebius-sum
// form, and the Feller-Tornier constant.

#include <cstdint>
#include <vector>

namespace cleantri {

inline constexpr std::uint64_t kPartialSumImphLimit = 100'000'000;
inline constexpr std::uint64_t kPartialSumTLimit = 10'000'000;
inline constexpr std::uint64_t kMeanValueLimit = 10'000'000;
inline constexpr std::uint64_t kDefaultPrimeBound = 10'000'000;
inline constexpr std::uint64_t kDefaultMoebiusBound = 1'000'000;

// A truncated product or sum. The untruncated value lies within
// [value - tail_bound, value + tail_bound].
struct ConstantEstimate {
    double value;
    std::uint64_t bound;  // largest prime (or d) included
    double tail_bound;
};

std::uint64_t partial_sum_imph(std::uint64_t x);
std::uint64_t partial_sum_T(std::uint64_t x);

// prod over primes 3 <= p <= prime_bound of (1 - 2/p^2)
ConstantEstimate euler_product_odd(std::uint64_t prime_bound);

struct FellerTornier {
    ConstantEstimate product_form;  // 1/2 + 1/2 prod_p (1 - 2/p^2)
    ConstantEstimate zeta_form;     // 1/2 (1 + zeta(2)^-1 prod_p (1 - 1/(p^2 - 1)))
};

FellerTornier feller_tornier(std::uint64_t prime_bound);

// 1 + sum over odd d in (1, d_bound] of mu(d) 2^omega(d) / d^2
ConstantEstimate moebius_sum_odd(std::uint64_t d_bound);

struct MeanValueReport {
    std::uint64_t x;
    std::uint64_t sum_imph;
    std::uint64_t sum_T;
    double ratio_imph;  // sum_imph / x^2
    double ratio_T;     // sum_T / x^2
    ConstantEstimate product;
    double limit_imph;  // product / 4
    double limit_T;     // product / 24
    double deviation_imph;  // relative: ratio / limit - 1
    double deviation_T;
    bool small_x;
};

inline constexpr std::uint64_t kSmallX = 10'000;

MeanValueReport mean_value_report(std::uint64_t x, std::uint64_t prime_bound = kDefaultPrimeBound);

struct GrosswaldPoint {
    std::uint64_t x;
    std::uint64_t sum;     // sum_{n <= x} 2^Omega(n)
    double ratio;          // sum / (x ln^2 x); NaN for x < 2
};

GrosswaldPoint grosswald_growth(std::uint64_t x);

// One sieve up to max(checkpoints); checkpoints are reported in input order.
std::vector<GrosswaldPoint> grosswald_series(const std::vector<std::uint64_t>& checkpoints);

// x0, 2 x0, 4 x0, ... below x_max, then x_max itself.
std::vector<std::uint64_t> doubling_sequence(std::uint64_t x0, std::uint64_t x_max);

}  // namespace cleantri
