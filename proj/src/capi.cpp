#include "cleantri/cleantri.h"

#include <cmath>
#include <new>
#include <string>
#include <vector>

#include "cleantri/arith.hpp"
#include "cleantri/counting.hpp"
#include "cleantri/error.hpp"
#include "cleantri/lattice.hpp"
#include "cleantri/meanvalue.hpp"

struct cleantri_imph_table {
    std::vector<std::uint32_t> values;
};

struct cleantri_orbits {
    cleantri::OrbitDecomposition decomposition;
};

struct cleantri_scott_scan {
    cleantri::ScottScanReport report;
};

namespace {

thread_local std::string last_error;

cleantri_status to_status(cleantri::errc code) {
    using cleantri::errc;
    switch (code) {
        case errc::invalid_argument: return CLEANTRI_E_INVALID_ARGUMENT;
        case errc::out_of_range: return CLEANTRI_E_OUT_OF_RANGE;
        case errc::degenerate: return CLEANTRI_E_DEGENERATE;
        case errc::not_invertible: return CLEANTRI_E_NOT_INVERTIBLE;
        case errc::not_clean: return CLEANTRI_E_NOT_CLEAN;
        case errc::memory_budget: return CLEANTRI_E_MEMORY_BUDGET;
        case errc::invariant_violation: return CLEANTRI_E_INVARIANT;
    }
    return CLEANTRI_E_INTERNAL;
}

template <typename Body>
cleantri_status guarded(Body&& body) noexcept {
    last_error.clear();
    try {
        body();
        return CLEANTRI_OK;
    } catch (const cleantri::error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CLEANTRI_E_MEMORY_BUDGET;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CLEANTRI_E_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return CLEANTRI_E_INTERNAL;
    }
}

#define CLEANTRI_REQUIRE(ptr)                                                            \
    do {                                                                                 \
        if ((ptr) == nullptr) {                                                          \
            last_error = "null pointer argument: " #ptr;                                 \
            return CLEANTRI_E_NULL_POINTER;                                              \
        }                                                                                \
    } while (0)

cleantri::LatticeTriangle from_c(const cleantri_triangle& t) {
    return cleantri::make_triangle({t.v[0].x, t.v[0].y}, {t.v[1].x, t.v[1].y}, {t.v[2].x, t.v[2].y});
}

cleantri_triangle to_c(const cleantri::LatticeTriangle& t) {
    cleantri_triangle out{};
    for (int i = 0; i < 3; ++i) out.v[i] = {t.v[i].x, t.v[i].y};
    return out;
}

cleantri_map to_c(const cleantri::AffineUnimodularMap& m) { return {m.a(), m.b(), m.c(), m.d(), {m.t().x, m.t().y}}; }

cleantri::AffineUnimodularMap from_c(const cleantri_map& m) { return {m.a, m.b, m.c, m.d, {m.t.x, m.t.y}}; }

cleantri_base_form to_c(const cleantri::BaseForm& f) { return {f.b, f.m, f.h}; }

cleantri_constant to_c(const cleantri::ConstantEstimate& c) { return {c.value, c.bound, c.tail_bound}; }

}  // namespace

extern "C" {

const char* cleantri_status_string(cleantri_status status) {
    switch (status) {
        case CLEANTRI_OK: return "ok";
        case CLEANTRI_E_INVALID_ARGUMENT: return "invalid argument";
        case CLEANTRI_E_OUT_OF_RANGE: return "argument out of range";
        case CLEANTRI_E_DEGENERATE: return "degenerate triangle";
        case CLEANTRI_E_NOT_INVERTIBLE: return "not invertible";
        case CLEANTRI_E_NOT_CLEAN: return "triangle is not clean";
        case CLEANTRI_E_MEMORY_BUDGET: return "memory budget exceeded";
        case CLEANTRI_E_INVARIANT: return "invariant violation";
        case CLEANTRI_E_NULL_POINTER: return "null pointer";
        case CLEANTRI_E_BUFFER_TOO_SMALL: return "buffer too small";
        case CLEANTRI_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* cleantri_last_error(void) { return last_error.c_str(); }

const char* cleantri_version(void) { return "1.0.0"; }

cleantri_status cleantri_factorize(uint64_t n, cleantri_prime_power* factors, size_t capacity, size_t* count) {
    CLEANTRI_REQUIRE(count);
    std::vector<cleantri::PrimePower> found;
    const cleantri_status status = guarded([&] {
        const auto f = cleantri::factorize(n);
        found.assign(f.factors().begin(), f.factors().end());
    });
    if (status != CLEANTRI_OK) return status;
    *count = found.size();
    if (capacity < found.size()) {
        last_error = "factor buffer too small";
        return CLEANTRI_E_BUFFER_TOO_SMALL;
    }
    if (!found.empty()) CLEANTRI_REQUIRE(factors);
    for (std::size_t i = 0; i < found.size(); ++i) factors[i] = {found[i].prime, found[i].exponent};
    return CLEANTRI_OK;
}

cleantri_status cleantri_extended_gcd(int64_t a, int64_t b, int64_t* g, int64_t* x, int64_t* y) {
    CLEANTRI_REQUIRE(g);
    CLEANTRI_REQUIRE(x);
    CLEANTRI_REQUIRE(y);
    return guarded([&] {
        const auto r = cleantri::extended_gcd(a, b);
        *g = r.g;
        *x = r.x;
        *y = r.y;
    });
}

cleantri_status cleantri_mod_inverse(int64_t a, uint64_t n, uint64_t* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::mod_inverse(a, n); });
}

cleantri_status cleantri_imph(uint64_t n, uint64_t* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::imph(n); });
}

cleantri_status cleantri_imph_bruteforce(uint64_t n, uint64_t* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::imph_bruteforce(n); });
}

cleantri_status cleantri_legendre_minus3(uint64_t p, int* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::legendre_minus3(p); });
}

cleantri_status cleantri_count_roots_quad(uint64_t p, uint32_t k, uint64_t* count) {
    CLEANTRI_REQUIRE(count);
    return guarded([&] { *count = cleantri::count_roots_quad(p, k).count; });
}

cleantri_status cleantri_count_roots_quad_n(uint64_t n, uint64_t* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::count_roots_quad_n(n); });
}

cleantri_status cleantri_imph_table_create(uint64_t x, cleantri_imph_table** out) {
    CLEANTRI_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new cleantri_imph_table{cleantri::imph_sieve(x)}; });
}

uint64_t cleantri_imph_table_bound(const cleantri_imph_table* table) {
    return table == nullptr ? 0 : table->values.size() - 1;
}

cleantri_status cleantri_imph_table_get(const cleantri_imph_table* table, uint64_t n, uint64_t* out) {
    CLEANTRI_REQUIRE(table);
    CLEANTRI_REQUIRE(out);
    return guarded([&] {
        if (n == 0 || n >= table->values.size()) cleantri::fail(cleantri::errc::out_of_range, "index outside table");
        *out = table->values[n];
    });
}

void cleantri_imph_table_destroy(cleantri_imph_table* table) { delete table; }

cleantri_status cleantri_tcount(uint64_t n, cleantri_method method, uint64_t* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] {
        switch (method) {
            case CLEANTRI_METHOD_CLOSED: *out = cleantri::t_closed(n); return;
            case CLEANTRI_METHOD_BURNSIDE: *out = cleantri::t_burnside(n); return;
            case CLEANTRI_METHOD_GEOMETRIC: *out = cleantri::t_geometric(n); return;
        }
        cleantri::fail(cleantri::errc::invalid_argument, "unknown method");
    });
}

cleantri_status cleantri_map_g(int i, uint64_t m, uint64_t n, uint64_t* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::map_g(i, m, n); });
}

cleantri_status cleantri_fix_counts(uint64_t n, int bruteforce, uint64_t counts[6]) {
    CLEANTRI_REQUIRE(counts);
    return guarded([&] {
        const auto c = bruteforce ? cleantri::fix_counts_bruteforce(n) : cleantri::fix_counts_closed(n);
        for (int i = 0; i < 6; ++i) counts[i] = c[i];
    });
}

cleantri_status cleantri_canonical_m(int64_t m, int64_t n, uint64_t* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::canonical_m(m, n); });
}

cleantri_status cleantri_orbits_create(uint64_t n, cleantri_orbits** out) {
    CLEANTRI_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new cleantri_orbits{cleantri::orbit_decomposition(n)}; });
}

size_t cleantri_orbits_count(const cleantri_orbits* orbits) {
    return orbits == nullptr ? 0 : orbits->decomposition.orbits.size();
}

size_t cleantri_orbits_size(const cleantri_orbits* orbits, size_t index) {
    if (orbits == nullptr || index >= orbits->decomposition.orbits.size()) return 0;
    return orbits->decomposition.orbits[index].size();
}

cleantri_status cleantri_orbits_get(const cleantri_orbits* orbits, size_t index, uint64_t* members, size_t capacity,
                                    size_t* count) {
    CLEANTRI_REQUIRE(orbits);
    CLEANTRI_REQUIRE(count);
    if (index >= orbits->decomposition.orbits.size()) {
        last_error = "orbit index out of range";
        return CLEANTRI_E_OUT_OF_RANGE;
    }
    const auto& orbit = orbits->decomposition.orbits[index];
    *count = orbit.size();
    if (capacity < orbit.size()) {
        last_error = "orbit buffer too small";
        return CLEANTRI_E_BUFFER_TOO_SMALL;
    }
    CLEANTRI_REQUIRE(members);
    for (std::size_t i = 0; i < orbit.size(); ++i) members[i] = orbit[i];
    return CLEANTRI_OK;
}

void cleantri_orbits_destroy(cleantri_orbits* orbits) { delete orbits; }

cleantri_status cleantri_pick_counts(const cleantri_triangle* t, cleantri_pick* out) {
    CLEANTRI_REQUIRE(t);
    CLEANTRI_REQUIRE(out);
    return guarded([&] {
        const auto pc = cleantri::pick_counts(from_c(*t));
        *out = {pc.interior, pc.boundary, pc.twice_area};
    });
}

cleantri_status cleantri_interior_count_enum(const cleantri_triangle* t, int64_t* out) {
    CLEANTRI_REQUIRE(t);
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::interior_count_enum(from_c(*t)); });
}

cleantri_status cleantri_is_clean(const cleantri_triangle* t, int* clean, int* empty) {
    CLEANTRI_REQUIRE(t);
    return guarded([&] {
        const auto tri = from_c(*t);
        if (clean != nullptr) *clean = cleantri::is_clean(tri);
        if (empty != nullptr) *empty = cleantri::is_empty(tri);
    });
}

cleantri_status cleantri_apply_map(const cleantri_map* map, const cleantri_triangle* t, cleantri_triangle* out) {
    CLEANTRI_REQUIRE(map);
    CLEANTRI_REQUIRE(t);
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = to_c(cleantri::apply_map(from_c(*map), from_c(*t))); });
}

cleantri_status cleantri_reduce(const cleantri_triangle* t, cleantri_base_form* form, cleantri_map* map) {
    CLEANTRI_REQUIRE(t);
    CLEANTRI_REQUIRE(form);
    return guarded([&] {
        const auto r = cleantri::reduce_to_base_form(from_c(*t));
        *form = to_c(r.form);
        if (map != nullptr) *map = to_c(r.map);
    });
}

cleantri_status cleantri_equivalent_clean(const cleantri_triangle* t1, const cleantri_triangle* t2, int* equivalent,
                                          cleantri_map* witness) {
    CLEANTRI_REQUIRE(t1);
    CLEANTRI_REQUIRE(t2);
    CLEANTRI_REQUIRE(equivalent);
    return guarded([&] {
        const auto eq = cleantri::equivalent_clean(from_c(*t1), from_c(*t2), witness != nullptr);
        *equivalent = eq.equivalent;
        if (witness != nullptr && eq.witness) *witness = to_c(*eq.witness);
    });
}

cleantri_status cleantri_scott_check(const cleantri_triangle* t, cleantri_scott* out) {
    CLEANTRI_REQUIRE(t);
    CLEANTRI_REQUIRE(out);
    return guarded([&] {
        const auto r = cleantri::scott_check(from_c(*t));
        *out = {r.applicable, r.holds, r.equality, r.interior, r.boundary};
    });
}

cleantri_status cleantri_scott_scan_create(int64_t grid_bound, cleantri_scott_scan** out) {
    CLEANTRI_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new cleantri_scott_scan{cleantri::scott_exhaustive(grid_bound)}; });
}

int64_t cleantri_scott_scan_triangles(const cleantri_scott_scan* scan) {
    return scan == nullptr ? 0 : scan->report.triangles;
}

int64_t cleantri_scott_scan_applicable(const cleantri_scott_scan* scan) {
    return scan == nullptr ? 0 : scan->report.applicable;
}

size_t cleantri_scott_scan_violations(const cleantri_scott_scan* scan) {
    return scan == nullptr ? 0 : scan->report.violations.size();
}

size_t cleantri_scott_scan_equality_count(const cleantri_scott_scan* scan) {
    return scan == nullptr ? 0 : scan->report.equality_cases.size();
}

cleantri_status cleantri_scott_scan_equality_case(const cleantri_scott_scan* scan, size_t index,
                                                  cleantri_triangle* triangle, cleantri_base_form* form,
                                                  int* matches_legs3) {
    CLEANTRI_REQUIRE(scan);
    if (index >= scan->report.equality_cases.size()) {
        last_error = "equality case index out of range";
        return CLEANTRI_E_OUT_OF_RANGE;
    }
    const auto& c = scan->report.equality_cases[index];
    if (triangle != nullptr) *triangle = to_c(c.triangle);
    if (form != nullptr) *form = to_c(c.form);
    if (matches_legs3 != nullptr) *matches_legs3 = c.matches_legs3;
    return CLEANTRI_OK;
}

void cleantri_scott_scan_destroy(cleantri_scott_scan* scan) { delete scan; }

cleantri_status cleantri_partial_sum_imph(uint64_t x, uint64_t* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::partial_sum_imph(x); });
}

cleantri_status cleantri_partial_sum_t(uint64_t x, uint64_t* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = cleantri::partial_sum_T(x); });
}

cleantri_status cleantri_euler_product_odd(uint64_t prime_bound, cleantri_constant* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = to_c(cleantri::euler_product_odd(prime_bound)); });
}

cleantri_status cleantri_feller_tornier(uint64_t prime_bound, cleantri_constant* product_form,
                                        cleantri_constant* zeta_form) {
    CLEANTRI_REQUIRE(product_form);
    CLEANTRI_REQUIRE(zeta_form);
    return guarded([&] {
        const auto ft = cleantri::feller_tornier(prime_bound);
        *product_form = to_c(ft.product_form);
        *zeta_form = to_c(ft.zeta_form);
    });
}

cleantri_status cleantri_moebius_sum_odd(uint64_t d_bound, cleantri_constant* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] { *out = to_c(cleantri::moebius_sum_odd(d_bound)); });
}

cleantri_status cleantri_mean_value_report(uint64_t x, uint64_t prime_bound, cleantri_mean_value* out) {
    CLEANTRI_REQUIRE(out);
    return guarded([&] {
        const auto r = cleantri::mean_value_report(x, prime_bound);
        *out = {r.x,          r.sum_imph,       r.sum_T,         r.ratio_imph, r.ratio_T, to_c(r.product),
                r.limit_imph, r.limit_T, r.deviation_imph, r.deviation_T, r.small_x};
    });
}

cleantri_status cleantri_grosswald(const uint64_t* xs, size_t count, uint64_t* sums, double* ratios) {
    if (count == 0) return CLEANTRI_OK;
    CLEANTRI_REQUIRE(xs);
    CLEANTRI_REQUIRE(sums);
    CLEANTRI_REQUIRE(ratios);
    return guarded([&] {
        const auto series = cleantri::grosswald_series(std::vector<std::uint64_t>(xs, xs + count));
        for (std::size_t i = 0; i < count; ++i) {
            sums[i] = series[i].sum;
            ratios[i] = series[i].ratio;
        }
    });
}

}  // extern "C"
