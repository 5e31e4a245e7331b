#include "cleantri/meanvalue.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cleantri/arith.hpp"
#include "cleantri/counting.hpp"
#include "cleantri/error.hpp"

namespace cleantri {

namespace {

std::vector<bool> composite_sieve(std::uint64_t bound, const char* what) {
    check_sieve_budget(bound + 1, 1, what);
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i * i <= bound; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return composite;
}

// Primes ascending; `visit` receives each prime p with 2 <= p <= bound.
template <typename Visit>
void for_each_prime(std::uint64_t bound, const char* what, Visit visit) {
    if (bound < 2) return;
    const auto composite = composite_sieve(bound, what);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (!composite[p]) visit(p);
    }
}

void check_prime_bound(std::uint64_t bound, const char* what) {
    if (bound < 2) fail(errc::invalid_argument, std::string(what) + ": prime bound must be at least 2");
    if (bound > kSieveLimit) fail(errc::out_of_range, std::string(what) + ": prime bound above 10^8");
}

}  // namespace

std::uint64_t partial_sum_imph(std::uint64_t x) {
    if (x > kPartialSumImphLimit) fail(errc::out_of_range, "partial_sum_imph: bound above 10^8");
    if (x == 0) return 0;
    const auto table = imph_sieve(x);
    std::uint64_t sum = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        if (n % 2 == 0 && table[n] != 0) fail(errc::invariant_violation, "partial_sum_imph: nonzero even term");
        sum += table[n];
    }
    return sum;
}

std::uint64_t partial_sum_T(std::uint64_t x) {
    if (x > kPartialSumTLimit) fail(errc::out_of_range, "partial_sum_T: bound above 10^7");
    if (x == 0) return 0;
    const auto spf = smallest_prime_factor_sieve(x);
    std::uint64_t sum = 1;  // T(1)
    std::array<PrimePower, 16> factors{};
    for (std::uint64_t n = 3; n <= x; n += 2) {
        std::size_t count = 0;
        std::uint64_t rest = n;
        while (rest > 1) {
            const std::uint64_t p = spf[rest];
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            factors[count++] = {p, e};
        }
        sum += t_closed(std::span<const PrimePower>(factors.data(), count));
    }
    return sum;
}

ConstantEstimate euler_product_odd(std::uint64_t prime_bound) {
    check_prime_bound(prime_bound, "euler_product_odd");
    double product = 1.0;
    for_each_prime(prime_bound, "euler_product_odd", [&](std::uint64_t p) {
        if (p == 2) return;
        const double pp = static_cast<double>(p) * static_cast<double>(p);
        product *= 1.0 - 2.0 / pp;
    });
    // sum_{p > P} 2/p^2 < 2/(P - 1), and the product is at most 1.
    return {product, prime_bound, 2.0 / static_cast<double>(prime_bound - 1)};
}

FellerTornier feller_tornier(std::uint64_t prime_bound) {
    check_prime_bound(prime_bound, "feller_tornier");
    double two_over = 1.0;
    double one_over = 1.0;
    for_each_prime(prime_bound, "feller_tornier", [&](std::uint64_t p) {
        const double pp = static_cast<double>(p) * static_cast<double>(p);
        two_over *= 1.0 - 2.0 / pp;
        one_over *= 1.0 - 1.0 / (pp - 1.0);
    });
    const double inv_zeta2 = 6.0 / (std::numbers::pi * std::numbers::pi);
    const double big_p = static_cast<double>(prime_bound);
    FellerTornier out;
    out.product_form = {0.5 + 0.5 * two_over, prime_bound, 0.5 * 2.0 / (big_p - 1.0)};
    // sum_{p > P} 1/(p^2 - 1) < 1/P
    out.zeta_form = {0.5 * (1.0 + inv_zeta2 * one_over), prime_bound, 0.5 * inv_zeta2 / big_p};
    return out;
}

ConstantEstimate moebius_sum_odd(std::uint64_t d_bound) {
    if (d_bound == 0) fail(errc::invalid_argument, "moebius_sum_odd: bound must be positive");
    if (d_bound > kSieveLimit) fail(errc::out_of_range, "moebius_sum_odd: bound above 10^8");
    check_sieve_budget(d_bound + 1, sizeof(std::int16_t) + 1, "moebius_sum_odd");

    // coeff[d] = mu(d) 2^omega(d) for odd d
    std::vector<std::int16_t> coeff(d_bound + 1, 1);
    std::vector<bool> composite(d_bound + 1, false);
    for (std::uint64_t p = 3; p <= d_bound; p += 2) {
        if (composite[p]) continue;
        for (std::uint64_t j = p; j <= d_bound; j += 2 * p) {
            if (j != p) composite[j] = true;
            coeff[j] = static_cast<std::int16_t>(coeff[j] * -2);
        }
        if (p > d_bound / p) continue;
        for (std::uint64_t j = p * p; j <= d_bound; j += 2 * p * p) coeff[j] = 0;
    }
    double sum = 1.0;
    for (std::uint64_t d = 3; d <= d_bound; d += 2) {
        if (coeff[d] == 0) continue;
        const double dd = static_cast<double>(d) * static_cast<double>(d);
        sum += coeff[d] / dd;
    }
    // |tail| <= sum_{d > D} tau(d)/d^2 <= 2 (ln D + 2) / D
    const double big_d = static_cast<double>(d_bound);
    return {sum, d_bound, 2.0 * (std::log(big_d) + 2.0) / big_d};
}

MeanValueReport mean_value_report(std::uint64_t x, std::uint64_t prime_bound) {
    if (x == 0) fail(errc::invalid_argument, "mean_value_report: x must be positive");
    if (x > kMeanValueLimit) fail(errc::out_of_range, "mean_value_report: x above 10^7");
    MeanValueReport r{};
    r.x = x;
    r.sum_imph = partial_sum_imph(x);
    r.sum_T = partial_sum_T(x);
    const double xx = static_cast<double>(x) * static_cast<double>(x);
    r.ratio_imph = static_cast<double>(r.sum_imph) / xx;
    r.ratio_T = static_cast<double>(r.sum_T) / xx;
    r.product = euler_product_odd(prime_bound);
    r.limit_imph = r.product.value / 4.0;
    r.limit_T = r.product.value / 24.0;
    r.deviation_imph = r.ratio_imph / r.limit_imph - 1.0;
    r.deviation_T = r.ratio_T / r.limit_T - 1.0;
    r.small_x = x < kSmallX;
    return r;
}

std::vector<GrosswaldPoint> grosswald_series(const std::vector<std::uint64_t>& checkpoints) {
    if (checkpoints.empty()) return {};
    const std::uint64_t top = *std::max_element(checkpoints.begin(), checkpoints.end());
    if (*std::min_element(checkpoints.begin(), checkpoints.end()) == 0)
        fail(errc::invalid_argument, "grosswald_growth: x must be positive");
    if (top > kMeanValueLimit) fail(errc::out_of_range, "grosswald_growth: x above 10^7");

    check_sieve_budget(top + 1, sizeof(std::uint64_t) + sizeof(std::uint32_t), "grosswald_growth");
    const auto spf = smallest_prime_factor_sieve(top);
    // prefix[n] = sum_{k <= n} 2^Omega(k); 2^Omega(k) <= k keeps each term exact.
    std::vector<std::uint64_t> prefix(top + 1, 0);
    std::vector<std::uint32_t> power(top + 1, 1);
    for (std::uint64_t n = 1; n <= top; ++n) {
        if (n >= 2) power[n] = 2 * power[n / spf[n]];
        prefix[n] = prefix[n - 1] + power[n];
    }

    std::vector<GrosswaldPoint> out;
    for (auto x : checkpoints) {
        const double lx = std::log(static_cast<double>(x));
        const double ratio = x < 2 ? std::numeric_limits<double>::quiet_NaN()
                                   : static_cast<double>(prefix[x]) / (static_cast<double>(x) * lx * lx);
        out.push_back({x, prefix[x], ratio});
    }
    return out;
}

GrosswaldPoint grosswald_growth(std::uint64_t x) { return grosswald_series({x}).front(); }

std::vector<std::uint64_t> doubling_sequence(std::uint64_t x0, std::uint64_t x_max) {
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = std::max<std::uint64_t>(x0, 1); x < x_max; x *= 2) xs.push_back(x);
    xs.push_back(x_max);
    return xs;
}

}  // namespace cleantri
