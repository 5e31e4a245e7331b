#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "cleantri/cleantri.h"

namespace {

cleantri_triangle tri(int64_t x0, int64_t y0, int64_t x1, int64_t y1, int64_t x2, int64_t y2) {
    return cleantri_triangle{{{x0, y0}, {x1, y1}, {x2, y2}}};
}

}  // namespace

TEST_CASE("status strings and version") {
    CHECK(std::string(cleantri_status_string(CLEANTRI_OK)) == "ok");
    for (int s = 0; s <= 10; ++s) CHECK(std::strlen(cleantri_status_string(static_cast<cleantri_status>(s))) > 0);
    CHECK(std::string(cleantri_version()) == "1.0.0");
}

TEST_CASE("factorize") {
    cleantri_prime_power f[CLEANTRI_MAX_DISTINCT_PRIMES];
    size_t count = 0;
    REQUIRE(cleantri_factorize(9999, f, CLEANTRI_MAX_DISTINCT_PRIMES, &count) == CLEANTRI_OK);
    REQUIRE(count == 3);
    CHECK(f[0].prime == 3);
    CHECK(f[0].exponent == 2);
    CHECK(f[1].prime == 11);
    CHECK(f[2].prime == 101);

    CHECK(cleantri_factorize(1, f, 0, &count) == CLEANTRI_OK);
    CHECK(count == 0);
    CHECK(cleantri_factorize(30, f, 2, &count) == CLEANTRI_E_BUFFER_TOO_SMALL);
    CHECK(count == 3);
    CHECK(cleantri_factorize(0, f, 4, &count) == CLEANTRI_E_INVALID_ARGUMENT);
    CHECK(std::strlen(cleantri_last_error()) > 0);
    CHECK(cleantri_factorize(12, f, 4, nullptr) == CLEANTRI_E_NULL_POINTER);
}

TEST_CASE("euclid and inverses") {
    int64_t g = 0, x = 0, y = 0;
    REQUIRE(cleantri_extended_gcd(3, 5, &g, &x, &y) == CLEANTRI_OK);
    CHECK(g == 1);
    CHECK(x == 2);
    CHECK(y == -1);
    CHECK(cleantri_extended_gcd(0, 0, &g, &x, &y) == CLEANTRI_E_INVALID_ARGUMENT);

    uint64_t inv = 0;
    CHECK(cleantri_mod_inverse(2, 7, &inv) == CLEANTRI_OK);
    CHECK(inv == 4);
    CHECK(cleantri_mod_inverse(3, 6, &inv) == CLEANTRI_E_NOT_INVERTIBLE);
}

TEST_CASE("imph and roots") {
    uint64_t v = 0;
    CHECK(cleantri_imph(49, &v) == CLEANTRI_OK);
    CHECK(v == 35);
    CHECK(cleantri_imph_bruteforce(15, &v) == CLEANTRI_OK);
    CHECK(v == 3);
    CHECK(cleantri_imph(0, &v) == CLEANTRI_E_INVALID_ARGUMENT);
    CHECK(cleantri_imph(7, nullptr) == CLEANTRI_E_NULL_POINTER);

    int s = 0;
    CHECK(cleantri_legendre_minus3(13, &s) == CLEANTRI_OK);
    CHECK(s == 1);
    CHECK(cleantri_legendre_minus3(3, &s) == CLEANTRI_E_INVALID_ARGUMENT);

    CHECK(cleantri_count_roots_quad(7, 1, &v) == CLEANTRI_OK);
    CHECK(v == 2);
    CHECK(cleantri_count_roots_quad(3, 2, &v) == CLEANTRI_OK);
    CHECK(v == 0);
    CHECK(cleantri_count_roots_quad_n(21, &v) == CLEANTRI_OK);
    CHECK(v == 2);
    CHECK(cleantri_count_roots_quad_n(22, &v) == CLEANTRI_E_INVALID_ARGUMENT);
}

TEST_CASE("imph table handle") {
    cleantri_imph_table* table = nullptr;
    REQUIRE(cleantri_imph_table_create(1000, &table) == CLEANTRI_OK);
    CHECK(cleantri_imph_table_bound(table) == 1000);
    for (uint64_t n = 1; n <= 1000; ++n) {
        uint64_t a = 0, b = 0;
        REQUIRE(cleantri_imph_table_get(table, n, &a) == CLEANTRI_OK);
        REQUIRE(cleantri_imph(n, &b) == CLEANTRI_OK);
        REQUIRE(a == b);
    }
    uint64_t v = 0;
    CHECK(cleantri_imph_table_get(table, 0, &v) == CLEANTRI_E_OUT_OF_RANGE);
    CHECK(cleantri_imph_table_get(table, 1001, &v) == CLEANTRI_E_OUT_OF_RANGE);
    CHECK(cleantri_imph_table_get(nullptr, 1, &v) == CLEANTRI_E_NULL_POINTER);
    cleantri_imph_table_destroy(table);
    cleantri_imph_table_destroy(nullptr);
    CHECK(cleantri_imph_table_bound(nullptr) == 0);
}

TEST_CASE("counting") {
    uint64_t v = 0;
    CHECK(cleantri_tcount(7, CLEANTRI_METHOD_CLOSED, &v) == CLEANTRI_OK);
    CHECK(v == 2);
    CHECK(cleantri_tcount(7, CLEANTRI_METHOD_BURNSIDE, &v) == CLEANTRI_OK);
    CHECK(v == 2);
    CHECK(cleantri_tcount(7, CLEANTRI_METHOD_GEOMETRIC, &v) == CLEANTRI_OK);
    CHECK(v == 2);
    CHECK(cleantri_tcount(5001, CLEANTRI_METHOD_GEOMETRIC, &v) == CLEANTRI_E_OUT_OF_RANGE);
    CHECK(cleantri_tcount(7, static_cast<cleantri_method>(9), &v) == CLEANTRI_E_INVALID_ARGUMENT);

    CHECK(cleantri_map_g(2, 2, 7, &v) == CLEANTRI_OK);
    CHECK(v == 4);
    CHECK(cleantri_map_g(2, 7, 7, &v) == CLEANTRI_E_INVALID_ARGUMENT);

    uint64_t closed[6], brute[6];
    REQUIRE(cleantri_fix_counts(105, 0, closed) == CLEANTRI_OK);
    REQUIRE(cleantri_fix_counts(105, 1, brute) == CLEANTRI_OK);
    for (int i = 0; i < 6; ++i) CHECK(closed[i] == brute[i]);

    CHECK(cleantri_canonical_m(6, 7, &v) == CLEANTRI_OK);
    CHECK(v == 2);
}

TEST_CASE("orbits handle") {
    cleantri_orbits* orbits = nullptr;
    REQUIRE(cleantri_orbits_create(7, &orbits) == CLEANTRI_OK);
    REQUIRE(cleantri_orbits_count(orbits) == 2);
    CHECK(cleantri_orbits_size(orbits, 0) == 3);
    CHECK(cleantri_orbits_size(orbits, 1) == 2);
    CHECK(cleantri_orbits_size(orbits, 2) == 0);

    uint64_t members[6];
    size_t count = 0;
    CHECK(cleantri_orbits_get(orbits, 0, members, 1, &count) == CLEANTRI_E_BUFFER_TOO_SMALL);
    CHECK(count == 3);
    REQUIRE(cleantri_orbits_get(orbits, 0, members, 6, &count) == CLEANTRI_OK);
    CHECK(std::vector<uint64_t>(members, members + count) == std::vector<uint64_t>{2, 4, 6});
    CHECK(cleantri_orbits_get(orbits, 5, members, 6, &count) == CLEANTRI_E_OUT_OF_RANGE);
    cleantri_orbits_destroy(orbits);
    CHECK(cleantri_orbits_create(0, &orbits) == CLEANTRI_E_INVALID_ARGUMENT);
    CHECK(orbits == nullptr);
}

TEST_CASE("lattice") {
    const auto sample = tri(0, 0, -3, -3, 2, 4);
    cleantri_pick pick{};
    REQUIRE(cleantri_pick_counts(&sample, &pick) == CLEANTRI_OK);
    CHECK(pick.twice_area == 6);
    CHECK(2 * pick.interior + pick.boundary - 2 == pick.twice_area);

    int64_t interior = -1;
    const auto big = tri(0, 0, 5, 0, 0, 5);
    CHECK(cleantri_interior_count_enum(&big, &interior) == CLEANTRI_OK);
    CHECK(interior == 6);

    int clean = 0, empty = 0;
    const auto c = tri(0, 0, 1, 0, 2, 3);
    CHECK(cleantri_is_clean(&c, &clean, &empty) == CLEANTRI_OK);
    CHECK(clean == 1);
    CHECK(empty == 0);

    cleantri_base_form form{};
    cleantri_map map{};
    REQUIRE(cleantri_reduce(&sample, &form, &map) == CLEANTRI_OK);
    CHECK(form.b == 3);
    CHECK(form.m == 0);
    CHECK(form.h == 2);
    cleantri_triangle image{};
    REQUIRE(cleantri_apply_map(&map, &sample, &image) == CLEANTRI_OK);
    std::vector<std::pair<int64_t, int64_t>> pts;
    for (const auto& p : image.v) pts.emplace_back(p.x, p.y);
    std::sort(pts.begin(), pts.end());
    CHECK(pts == std::vector<std::pair<int64_t, int64_t>>{{0, 0}, {0, 2}, {3, 0}});

    const auto flat = tri(0, 0, 1, 1, 2, 2);
    CHECK(cleantri_reduce(&flat, &form, &map) == CLEANTRI_E_DEGENERATE);
    const cleantri_map bad{2, 0, 0, 1, {0, 0}};
    CHECK(cleantri_apply_map(&bad, &sample, &image) == CLEANTRI_E_INVALID_ARGUMENT);
}

TEST_CASE("equivalence") {
    const auto a = tri(0, 0, 1, 0, 2, 7);
    const auto b = tri(0, 0, 1, 0, 4, 7);
    const auto d = tri(0, 0, 1, 0, 3, 7);
    int eq = 0;
    cleantri_map w{};
    REQUIRE(cleantri_equivalent_clean(&a, &b, &eq, &w) == CLEANTRI_OK);
    CHECK(eq == 1);
    cleantri_triangle image{};
    REQUIRE(cleantri_apply_map(&w, &a, &image) == CLEANTRI_OK);
    CHECK(cleantri_equivalent_clean(&a, &d, &eq, nullptr) == CLEANTRI_OK);
    CHECK(eq == 0);
    const auto fat = tri(0, 0, 2, 0, 0, 2);
    CHECK(cleantri_equivalent_clean(&a, &fat, &eq, nullptr) == CLEANTRI_E_NOT_CLEAN);
}

TEST_CASE("scott") {
    const auto t = tri(1, 1, 1, 4, 4, 1);
    cleantri_scott s{};
    REQUIRE(cleantri_scott_check(&t, &s) == CLEANTRI_OK);
    CHECK(s.applicable == 1);
    CHECK(s.equality == 1);

    cleantri_scott_scan* scan = nullptr;
    REQUIRE(cleantri_scott_scan_create(4, &scan) == CLEANTRI_OK);
    CHECK(cleantri_scott_scan_violations(scan) == 0);
    const size_t n = cleantri_scott_scan_equality_count(scan);
    CHECK(n > 0);
    for (size_t i = 0; i < n; ++i) {
        cleantri_base_form f{};
        int legs3 = 0;
        REQUIRE(cleantri_scott_scan_equality_case(scan, i, nullptr, &f, &legs3) == CLEANTRI_OK);
        CHECK(legs3 == 1);
        CHECK(f.b == 3);
        CHECK(f.m == 0);
        CHECK(f.h == 3);
    }
    CHECK(cleantri_scott_scan_equality_case(scan, n, nullptr, nullptr, nullptr) == CLEANTRI_E_OUT_OF_RANGE);
    cleantri_scott_scan_destroy(scan);
    CHECK(cleantri_scott_scan_create(100, &scan) == CLEANTRI_E_OUT_OF_RANGE);
}

TEST_CASE("mean values") {
    uint64_t v = 0;
    CHECK(cleantri_partial_sum_imph(10, &v) == CLEANTRI_OK);
    CHECK(v == 13);
    CHECK(cleantri_partial_sum_t(10, &v) == CLEANTRI_OK);
    CHECK(v == 6);

    cleantri_constant e{}, p{}, z{}, m{};
    REQUIRE(cleantri_euler_product_odd(5, &e) == CLEANTRI_OK);
    CHECK(e.value == doctest::Approx(161.0 / 225.0));
    REQUIRE(cleantri_feller_tornier(2, &p, &z) == CLEANTRI_OK);
    CHECK(p.value == doctest::Approx(0.75));
    REQUIRE(cleantri_moebius_sum_odd(3, &m) == CLEANTRI_OK);
    CHECK(m.value == doctest::Approx(7.0 / 9.0));

    cleantri_mean_value mv{};
    REQUIRE(cleantri_mean_value_report(10, 1000, &mv) == CLEANTRI_OK);
    CHECK(mv.sum_imph == 13);
    CHECK(mv.small_x == 1);
    CHECK(cleantri_mean_value_report(0, 1000, &mv) == CLEANTRI_E_INVALID_ARGUMENT);

    const uint64_t xs[] = {1, 10};
    uint64_t sums[2];
    double ratios[2];
    REQUIRE(cleantri_grosswald(xs, 2, sums, ratios) == CLEANTRI_OK);
    CHECK(sums[0] == 1);
    CHECK(sums[1] == 33);
    CHECK(std::isnan(ratios[0]));
    CHECK(cleantri_grosswald(nullptr, 2, sums, ratios) == CLEANTRI_E_NULL_POINTER);
}
