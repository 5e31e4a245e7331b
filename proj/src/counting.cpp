#include "cleantri/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cleantri/error.hpp"
#include "cleantri/lattice.hpp"

namespace cleantri {

namespace {

void check_map_index(int i) {
    if (i < 1 || i > 6) fail(errc::invalid_argument, "map index must be in 1..6");
}

// All six images of m, assuming m in IP(n); values in [1, n].
std::array<std::uint64_t, 6> images(std::uint64_t m, std::uint64_t n) {
    auto lift = [n](std::uint64_t r) { return r % n == 0 ? n : r % n; };
    auto one_minus = [n](std::uint64_t r) { return (1 + n - r % n) % n; };
    auto inv = [n](std::uint64_t r) { return mod_inverse(static_cast<std::int64_t>(r % n), n); };
    const std::uint64_t m_inv = inv(m);
    return {lift(m),
            lift(m_inv),
            lift(one_minus(m)),
            lift(one_minus(m_inv)),
            lift(inv(one_minus(m))),
            lift(inv(one_minus(m_inv)))};
}

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

std::uint64_t exact_sixth(std::uint64_t numerator, const char* what) {
    if (numerator % 6 != 0) fail(errc::invariant_violation, std::string(what) + ": fixed-point sum not divisible by 6");
    return numerator / 6;
}

void check_positive(std::uint64_t n, const char* what) {
    if (n == 0) fail(errc::invalid_argument, std::string(what) + ": n must be positive");
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

bool in_ip_set(std::uint64_t m, std::uint64_t n) {
    return n > 0 && m >= 1 && m <= n && std::gcd(m, n) == 1 && std::gcd(m - 1, n) == 1;
}

IPSet ip_set(std::uint64_t n) {
    check_positive(n, "ip_set");
    if (n > kIpSetLimit) fail(errc::out_of_range, "ip_set: n above 10^7");
    IPSet out{n, {}};
    if (n % 2 == 0) return out;
    for (std::uint64_t x = 1; x <= n; ++x) {
        if (in_ip_set(x, n)) out.members.push_back(x);
    }
    return out;
}

std::uint64_t map_g(int i, std::uint64_t m, std::uint64_t n) {
    check_map_index(i);
    if (!in_ip_set(m, n))
        fail(errc::invalid_argument, "map_g: " + std::to_string(m) + " is not in IP(" + std::to_string(n) + ")");
    return images(m, n)[i - 1];
}

FixCounts fix_counts_bruteforce(std::uint64_t n) {
    check_positive(n, "fix_count_bruteforce");
    if (n > kBurnsideLimit) fail(errc::out_of_range, "fix_count_bruteforce: n above 10^5");
    FixCounts counts{};
    if (n % 2 == 0) return counts;
    for (auto m : ip_set(n).members) {
        const auto img = images(m, n);
        for (int i = 0; i < 6; ++i) counts[i] += img[i] == m;
    }
    return counts;
}

std::uint64_t fix_count_bruteforce(int i, std::uint64_t n) {
    check_map_index(i);
    return fix_counts_bruteforce(n)[i - 1];
}

std::uint64_t fix_count_closed(int i, const Factorization& f) {
    check_map_index(i);
    if (f.n() % 2 == 0) fail(errc::invalid_argument, "fix_count_closed: n must be odd");
    switch (i) {
        case 1: return imph(f);
        case 4:
        case 5: return count_roots_quad_n(f);
        default: return 1;  // n - 1, (n + 1)/2 and 2 respectively
    }
}

std::uint64_t fix_count_closed(int i, std::uint64_t n) {
    check_map_index(i);
    check_positive(n, "fix_count_closed");
    if (n % 2 == 0) fail(errc::invalid_argument, "fix_count_closed: n must be odd");
    return fix_count_closed(i, factorize(n));
}

FixCounts fix_counts_closed(std::uint64_t n) {
    check_positive(n, "fix_count_closed");
    if (n % 2 == 0) fail(errc::invalid_argument, "fix_count_closed: n must be odd");
    const Factorization f = factorize(n);
    FixCounts counts{};
    for (int i = 1; i <= 6; ++i) counts[i - 1] = fix_count_closed(i, f);
    return counts;
}

std::uint64_t t_burnside(std::uint64_t n) {
    check_positive(n, "t_burnside");
    if (n % 2 == 0) return 0;
    const FixCounts counts = fix_counts_bruteforce(n);
    return exact_sixth(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}), "t_burnside");
}

TheoremCase classify(std::span<const PrimePower> factors) noexcept {
    bool has_three = false;
    for (const auto& [p, e] : factors) {
        if (p == 3) {
            if (e >= 2) return TheoremCase::has_bad_prime;
            has_three = true;
        } else if (p % 6 != 1) {
            return TheoremCase::has_bad_prime;
        }
    }
    return has_three ? TheoremCase::three_exactly : TheoremCase::all_one_mod_six;
}

std::uint64_t t_closed(std::span<const PrimePower> factors) {
    if (!factors.empty() && factors.front().prime == 2) return 0;
    const std::uint64_t base = imph(factors) + 3;
    const auto omega = static_cast<unsigned>(factors.size());
    switch (classify(factors)) {
        case TheoremCase::has_bad_prime: return exact_sixth(base, "t_closed");
        case TheoremCase::three_exactly: return exact_sixth(base + pow2(omega), "t_closed");
        case TheoremCase::all_one_mod_six: return exact_sixth(base + pow2(omega + 1), "t_closed");
    }
    return 0;
}

std::uint64_t t_closed(const Factorization& f) { return t_closed(f.factors()); }

std::uint64_t t_closed(std::uint64_t n) {
    check_positive(n, "t_closed");
    if (n % 2 == 0) return 0;
    return t_closed(factorize(n));
}

std::uint64_t t_geometric(std::uint64_t n) {
    check_positive(n, "t_geometric");
    if (n > kGeometricLimit) fail(errc::out_of_range, "t_geometric: n above 2000");
    // Classes are separated by an explicit search for a unimodular map, not by
    // residue arithmetic, so this count is independent of the six maps.
    std::vector<LatticeTriangle> representatives;
    for (const auto& tri : enumerate_clean(static_cast<std::int64_t>(n))) {
        const bool seen = std::any_of(representatives.begin(), representatives.end(),
                                      [&](const LatticeTriangle& r) { return find_unimodular_map(tri, r).has_value(); });
        if (!seen) representatives.push_back(tri);
    }
    return representatives.size();
}

OrbitDecomposition orbit_decomposition(std::uint64_t n) {
    check_positive(n, "orbit_decomposition");
    if (n > kBurnsideLimit) fail(errc::out_of_range, "orbit_decomposition: n above 10^5");
    OrbitDecomposition out{n, {}};
    if (n % 2 == 0) return out;

    const auto members = ip_set(n).members;
    std::vector<std::size_t> index(n + 1, 0);
    for (std::size_t k = 0; k < members.size(); ++k) index[members[k]] = k;
    DisjointSets sets(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        for (auto image : images(members[k], n)) sets.unite(k, index[image]);
    }

    std::vector<std::vector<std::uint64_t>> by_root(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) by_root[sets.find(k)].push_back(members[k]);
    for (auto& orbit : by_root) {
        if (!orbit.empty()) out.orbits.push_back(std::move(orbit));
    }
    return out;
}

std::uint64_t canonical_m(std::int64_t m, std::int64_t n) {
    if (n <= 0) fail(errc::invalid_argument, "canonical_m: modulus must be positive");
    std::int64_t r = m % n;
    if (r <= 0) r += n;
    const auto un = static_cast<std::uint64_t>(n);
    const auto um = static_cast<std::uint64_t>(r);
    if (!in_ip_set(um, un))
        fail(errc::invalid_argument, "canonical_m: " + std::to_string(m) + " is not in IP(" + std::to_string(n) + ")");
    const auto img = images(um, un);
    return *std::min_element(img.begin(), img.end());
}

std::optional<CompositionTable> composition_table(std::uint64_t n) {
    check_positive(n, "composition_table");
    if (n > kBurnsideLimit) fail(errc::out_of_range, "composition_table: n above 10^5");
    const auto members = ip_set(n).members;
    std::vector<std::size_t> index(n + 1, 0);
    for (std::size_t k = 0; k < members.size(); ++k) index[members[k]] = k;

    // action[i][k] = position of g_{i+1}(members[k])
    std::array<std::vector<std::size_t>, 6> action;
    for (auto& a : action) a.resize(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        const auto img = images(members[k], n);
        for (int i = 0; i < 6; ++i) action[i][k] = index[img[i]];
    }

    CompositionTable table{};
    std::vector<std::size_t> composed(members.size());
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            for (std::size_t k = 0; k < members.size(); ++k) composed[k] = action[i][action[j][k]];
            const auto hit = std::find(action.begin(), action.end(), composed);
            if (hit == action.end()) return std::nullopt;
            table[i][j] = static_cast<int>(hit - action.begin());
        }
    }
    return table;
}

bool TCountReport::consistent() const noexcept {
    if (t_burnside && *t_burnside != t_closed) return false;
    if (t_geometric && *t_geometric != t_closed) return false;
    return true;
}

TCountReport tcount_report(std::uint64_t n) {
    check_positive(n, "tcount_report");
    TCountReport report{n, t_closed(n), std::nullopt, std::nullopt, std::nullopt};
    if (n <= kBurnsideLimit) {
        report.fix_counts = fix_counts_bruteforce(n);
        report.t_burnside = t_burnside(n);
    }
    if (n <= kGeometricLimit) report.t_geometric = t_geometric(n);
    return report;
}

}  // namespace cleantri
