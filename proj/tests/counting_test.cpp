#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cleantri/arith.hpp"
#include "cleantri/counting.hpp"
#include "cleantri/error.hpp"
#include "oracles.hpp"

using namespace cleantri;

namespace {

errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    return errc{};
}

using Orbits = std::vector<std::vector<std::uint64_t>>;

}  // namespace

TEST_CASE("ip_set") {
    CHECK(ip_set(15).members == std::vector<std::uint64_t>{2, 8, 14});
    CHECK(ip_set(7).members == std::vector<std::uint64_t>{2, 3, 4, 5, 6});
    CHECK(ip_set(4).members.empty());
    CHECK(ip_set(1).members == std::vector<std::uint64_t>{1});
    CHECK(code_of([] { ip_set(0); }) == errc::invalid_argument);
    for (std::uint64_t n = 1; n <= 400; ++n) REQUIRE(ip_set(n).members.size() == oracle::imph_scan(n));
}

TEST_CASE("map_g") {
    CHECK(map_g(2, 2, 7) == 4);
    CHECK(map_g(3, 2, 7) == 6);
    CHECK(map_g(4, 2, 7) == 4);
    CHECK(map_g(1, 2, 7) == 2);
    CHECK(map_g(5, 2, 7) == 6);  // (1 - 2)^-1 = 6^-1 = 6
    CHECK(map_g(6, 2, 7) == 2);  // (1 - 4)^-1 = 4^-1 = 2
    CHECK(map_g(1, 1, 1) == 1);
    CHECK(code_of([] { map_g(0, 2, 7); }) == errc::invalid_argument);
    CHECK(code_of([] { map_g(7, 2, 7); }) == errc::invalid_argument);
    CHECK(code_of([] { map_g(2, 1, 7); }) == errc::invalid_argument);
}

TEST_CASE("six maps agree with residue arithmetic") {
    for (std::uint64_t n = 3; n <= 301; n += 2) {
        for (auto m : ip_set(n).members) {
            // g2 and g5 checked by multiplying back.
            CHECK(m * map_g(2, m, n) % n == 1);
            CHECK((map_g(3, m, n) + m) % n == 1);
            CHECK(((1 + n - m) % n) * map_g(5, m, n) % n == 1 % n);
            CHECK((map_g(4, m, n) + map_g(2, m, n)) % n == 1);
            CHECK(((1 + n - map_g(2, m, n)) % n) * map_g(6, m, n) % n == 1 % n);
            for (int i = 1; i <= 6; ++i) REQUIRE(in_ip_set(map_g(i, m, n), n));
        }
    }
}

TEST_CASE("fixed-point counts") {
    CHECK(fix_count_bruteforce(1, 7) == 5);
    CHECK(fix_count_bruteforce(3, 9) == 1);
    CHECK(fix_count_bruteforce(4, 7) == 2);
    CHECK(fix_count_closed(2, 105) == 1);
    CHECK(fix_count_closed(4, 21) == 2);
    CHECK(fix_count_closed(6, 7) == 1);
    CHECK(code_of([] { fix_count_closed(1, 8); }) == errc::invalid_argument);
    CHECK(code_of([] { fix_count_bruteforce(1, kBurnsideLimit + 1); }) == errc::out_of_range);
    CHECK(fix_counts_bruteforce(8) == FixCounts{});
}

TEST_CASE("fixed points of g2, g3, g6 are n - 1, 2^-1 and 2") {
    for (std::uint64_t n = 3; n <= 501; n += 2) {
        const auto members = ip_set(n).members;
        std::vector<std::uint64_t> f2, f3, f6;
        for (auto m : members) {
            if (map_g(2, m, n) == m) f2.push_back(m);
            if (map_g(3, m, n) == m) f3.push_back(m);
            if (map_g(6, m, n) == m) f6.push_back(m);
        }
        CHECK(f2 == std::vector<std::uint64_t>{n - 1});
        CHECK(f3 == std::vector<std::uint64_t>{(n + 1) / 2});
        CHECK(f6 == std::vector<std::uint64_t>{2});
    }
}

TEST_CASE("closed fixed-point counts agree with brute force for odd n <= 2000") {
    for (std::uint64_t n = 1; n <= 2000; n += 2) REQUIRE(fix_counts_closed(n) == fix_counts_bruteforce(n));
}

TEST_CASE("g4 and g5 fix the same residues") {
    for (std::uint64_t n = 3; n <= 2001; n += 2) {
        for (auto m : ip_set(n).members) REQUIRE((map_g(4, m, n) == m) == (map_g(5, m, n) == m));
    }
}

TEST_CASE("T examples") {
    CHECK(t_burnside(7) == 2);
    CHECK(t_burnside(6) == 0);
    CHECK(t_burnside(1) == 1);
    CHECK(t_closed(5) == 1);
    CHECK(t_closed(21) == 2);
    CHECK(t_closed(7) == 2);
    CHECK(t_closed(9) == 1);
    CHECK(t_closed(1) == 1);
    CHECK(t_closed(3) == 1);
    CHECK(t_geometric(7) == 2);
    CHECK(t_geometric(3) == 1);
    CHECK(t_geometric(1) == 1);
    for (std::uint64_t n = 2; n <= 200; n += 2) {
        CHECK(t_closed(n) == 0);
        CHECK(t_burnside(n) == 0);
        CHECK(t_geometric(n) == 0);
    }
    CHECK(code_of([] { t_geometric(kGeometricLimit + 1); }) == errc::out_of_range);
    CHECK(code_of([] { t_closed(0); }) == errc::invalid_argument);
}

TEST_CASE("classify") {
    auto cls = [](std::uint64_t n) { return classify(factorize(n).factors()); };
    CHECK(cls(9) == TheoremCase::has_bad_prime);
    CHECK(cls(5) == TheoremCase::has_bad_prime);
    CHECK(cls(35) == TheoremCase::has_bad_prime);
    CHECK(cls(3) == TheoremCase::three_exactly);
    CHECK(cls(21) == TheoremCase::three_exactly);
    CHECK(cls(7) == TheoremCase::all_one_mod_six);
    CHECK(cls(91) == TheoremCase::all_one_mod_six);
    CHECK(cls(1) == TheoremCase::all_one_mod_six);
}

TEST_CASE("closed form agrees with Burnside for odd n <= 2001") {
    // The full range to 10^4 runs in the acceptance binary.
    for (std::uint64_t n = 1; n <= 2001; n += 2) REQUIRE(t_closed(n) == t_burnside(n));
}

TEST_CASE("T agrees with an orbit search written from scratch") {
    for (std::uint64_t n = 1; n <= 301; n += 2) REQUIRE(t_closed(n) == oracle::orbit_count_search(n));
}

TEST_CASE("geometric count agrees for odd n <= 151") {
    for (std::uint64_t n = 1; n <= 151; n += 2) REQUIRE(t_geometric(n) == t_closed(n));
}

TEST_CASE("Burnside numerator is divisible by 6") {
    for (std::uint64_t n = 1; n <= 3001; n += 2) {
        const auto f = fix_counts_closed(n);
        REQUIRE((imph(n) + f[1] + 2 * f[3] + 2) % 6 == 0);
        REQUIRE(std::accumulate(f.begin(), f.end(), std::uint64_t{0}) % 6 == 0);
    }
}

TEST_CASE("t_closed on large n is an integer and matches case arithmetic") {
    for (int i = 0; i < 300; ++i) {
        auto n = static_cast<std::uint64_t>(oracle::uniform(1, 1'000'000'000'000'000'000LL)) | 1;
        const auto f = factorize(n);
        const auto t = t_closed(f);
        const auto im = imph(f);
        const auto w = f.omega();
        switch (classify(f.factors())) {
            case TheoremCase::has_bad_prime: CHECK(6 * t == im + 3); break;
            case TheoremCase::three_exactly: CHECK(6 * t == im + (1ULL << w) + 3); break;
            case TheoremCase::all_one_mod_six: CHECK(6 * t == im + (2ULL << w) + 3); break;
        }
    }
    // 7 * 13 * 19 * 31 * 37 * 43: every prime is 1 mod 6
    const std::uint64_t n = 7ULL * 13 * 19 * 31 * 37 * 43;
    CHECK(t_closed(n) == (imph(n) + 128 + 3) / 6);
}

TEST_CASE("orbit_decomposition") {
    CHECK(orbit_decomposition(7).orbits == Orbits{{2, 4, 6}, {3, 5}});
    CHECK(orbit_decomposition(5).orbits == Orbits{{2, 3, 4}});
    CHECK(orbit_decomposition(3).orbits == Orbits{{2}});
    CHECK(orbit_decomposition(1).orbits == Orbits{{1}});
    CHECK(orbit_decomposition(10).orbits.empty());
}

TEST_CASE("orbits partition IP(n), are closed, sizes divide 6, count equals Burnside") {
    for (std::uint64_t n = 1; n <= 1501; n += 2) {
        const auto d = orbit_decomposition(n);
        std::vector<std::uint64_t> all;
        for (const auto& orbit : d.orbits) {
            REQUIRE(std::is_sorted(orbit.begin(), orbit.end()));
            REQUIRE(6 % orbit.size() == 0);
            const std::set<std::uint64_t> s(orbit.begin(), orbit.end());
            for (auto m : orbit)
                for (int i = 1; i <= 6; ++i) REQUIRE(s.count(map_g(i, m, n)) == 1);
            const auto c = canonical_m(static_cast<std::int64_t>(orbit.back()), static_cast<std::int64_t>(n));
            REQUIRE(c == orbit.front());
            all.insert(all.end(), orbit.begin(), orbit.end());
        }
        std::sort(all.begin(), all.end());
        REQUIRE(all == ip_set(n).members);
        REQUIRE(d.orbits.size() == t_burnside(n));
    }
}

TEST_CASE("canonical_m") {
    CHECK(canonical_m(6, 7) == 2);
    CHECK(canonical_m(5, 7) == 3);
    CHECK(canonical_m(2, 3) == 2);
    CHECK(canonical_m(-1, 7) == 2);  // -1 = 6 mod 7
    CHECK(canonical_m(13, 7) == 2);
    CHECK(code_of([] { canonical_m(1, 7); }) == errc::invalid_argument);
    CHECK(code_of([] { canonical_m(2, 0); }) == errc::invalid_argument);
}

TEST_CASE("the six maps form a group on IP(n)") {
    const auto t7 = composition_table(7);
    REQUIRE(t7.has_value());
    // g2 and g3 are involutions, g5 and g6 have order 3.
    CHECK((*t7)[1][1] == 0);
    CHECK((*t7)[2][2] == 0);
    for (std::uint64_t n = 1; n <= 301; n += 2) {
        const auto table = composition_table(n);
        REQUIRE(table.has_value());
        for (auto m : ip_set(n).members)
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j)
                    REQUIRE(map_g(i + 1, map_g(j + 1, m, n), n) == map_g((*table)[i][j] + 1, m, n));
    }
}

TEST_CASE("tcount_report") {
    const auto r = tcount_report(7);
    CHECK(r.t_closed == 2);
    CHECK(r.t_burnside == 2);
    CHECK(r.t_geometric == 2);
    REQUIRE(r.fix_counts.has_value());
    CHECK(*r.fix_counts == FixCounts{5, 1, 1, 2, 2, 1});
    CHECK(r.consistent());
    CHECK(6 * *r.t_burnside == std::accumulate(r.fix_counts->begin(), r.fix_counts->end(), std::uint64_t{0}));

    const auto big = tcount_report(1'000'001);
    CHECK_FALSE(big.t_burnside.has_value());
    CHECK_FALSE(big.t_geometric.has_value());
    CHECK(big.consistent());

    TCountReport bad{7, 2, 3, std::nullopt, std::nullopt};
    CHECK_FALSE(bad.consistent());
}
