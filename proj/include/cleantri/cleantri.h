/*
 * cleantri C API
 *
 * Every entry point returns a cleantri_status. On failure a message is
 * available from cleantri_last_error() until the next call on the same
 * thread. Objects that own memory are opaque handles released with the
 * matching *_destroy function; destroying NULL is a no-op.
 */
#ifndef CLEANTRI_H
#define CLEANTRI_H

#include <stddef.h>
#include <stdint.h>

#if defined(CLEANTRI_BUILDING_LIBRARY)
#define CLEANTRI_API __attribute__((visibility("default")))
#else
#define CLEANTRI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cleantri_status {
    CLEANTRI_OK = 0,
    CLEANTRI_E_INVALID_ARGUMENT = 1,
    CLEANTRI_E_OUT_OF_RANGE = 2,
    CLEANTRI_E_DEGENERATE = 3,
    CLEANTRI_E_NOT_INVERTIBLE = 4,
    CLEANTRI_E_NOT_CLEAN = 5,
    CLEANTRI_E_MEMORY_BUDGET = 6,
    CLEANTRI_E_INVARIANT = 7,
    CLEANTRI_E_NULL_POINTER = 8,
    CLEANTRI_E_BUFFER_TOO_SMALL = 9,
    CLEANTRI_E_INTERNAL = 10
} cleantri_status;

CLEANTRI_API const char* cleantri_status_string(cleantri_status status);
CLEANTRI_API const char* cleantri_last_error(void);
CLEANTRI_API const char* cleantri_version(void);

/* ---- arithmetic ------------------------------------------------------- */

typedef struct cleantri_prime_power {
    uint64_t prime;
    uint32_t exponent;
} cleantri_prime_power;

/* A 64-bit integer has at most 15 distinct prime factors. */
#define CLEANTRI_MAX_DISTINCT_PRIMES 16

CLEANTRI_API cleantri_status cleantri_factorize(uint64_t n, cleantri_prime_power* factors, size_t capacity,
                                                size_t* count);
CLEANTRI_API cleantri_status cleantri_extended_gcd(int64_t a, int64_t b, int64_t* g, int64_t* x, int64_t* y);
CLEANTRI_API cleantri_status cleantri_mod_inverse(int64_t a, uint64_t n, uint64_t* out);
CLEANTRI_API cleantri_status cleantri_imph(uint64_t n, uint64_t* out);
CLEANTRI_API cleantri_status cleantri_imph_bruteforce(uint64_t n, uint64_t* out);
CLEANTRI_API cleantri_status cleantri_legendre_minus3(uint64_t p, int* out);
CLEANTRI_API cleantri_status cleantri_count_roots_quad(uint64_t p, uint32_t k, uint64_t* count);
CLEANTRI_API cleantri_status cleantri_count_roots_quad_n(uint64_t n, uint64_t* out);

/* imph(1..x) table */
typedef struct cleantri_imph_table cleantri_imph_table;

CLEANTRI_API cleantri_status cleantri_imph_table_create(uint64_t x, cleantri_imph_table** out);
CLEANTRI_API uint64_t cleantri_imph_table_bound(const cleantri_imph_table* table);
/* n must lie in [1, bound] */
CLEANTRI_API cleantri_status cleantri_imph_table_get(const cleantri_imph_table* table, uint64_t n, uint64_t* out);
CLEANTRI_API void cleantri_imph_table_destroy(cleantri_imph_table* table);

/* ---- Burnside counting ------------------------------------------------ */

typedef enum cleantri_method {
    CLEANTRI_METHOD_CLOSED = 0,
    CLEANTRI_METHOD_BURNSIDE = 1,
    CLEANTRI_METHOD_GEOMETRIC = 2
} cleantri_method;

CLEANTRI_API cleantri_status cleantri_tcount(uint64_t n, cleantri_method method, uint64_t* out);
CLEANTRI_API cleantri_status cleantri_map_g(int i, uint64_t m, uint64_t n, uint64_t* out);
/* counts[0..5] for g1..g6 */
CLEANTRI_API cleantri_status cleantri_fix_counts(uint64_t n, int bruteforce, uint64_t counts[6]);
CLEANTRI_API cleantri_status cleantri_canonical_m(int64_t m, int64_t n, uint64_t* out);

typedef struct cleantri_orbits cleantri_orbits;

CLEANTRI_API cleantri_status cleantri_orbits_create(uint64_t n, cleantri_orbits** out);
CLEANTRI_API size_t cleantri_orbits_count(const cleantri_orbits* orbits);
CLEANTRI_API size_t cleantri_orbits_size(const cleantri_orbits* orbits, size_t index);
/* Copies orbit `index` into members; *count receives its size. */
CLEANTRI_API cleantri_status cleantri_orbits_get(const cleantri_orbits* orbits, size_t index, uint64_t* members,
                                                 size_t capacity, size_t* count);
CLEANTRI_API void cleantri_orbits_destroy(cleantri_orbits* orbits);

/* ---- lattice geometry ------------------------------------------------- */

typedef struct cleantri_point {
    int64_t x;
    int64_t y;
} cleantri_point;

typedef struct cleantri_triangle {
    cleantri_point v[3];
} cleantri_triangle;

/* x -> [[a, b], [c, d]] x + t */
typedef struct cleantri_map {
    int64_t a, b, c, d;
    cleantri_point t;
} cleantri_map;

typedef struct cleantri_base_form {
    int64_t b, m, h;
} cleantri_base_form;

typedef struct cleantri_pick {
    int64_t interior;
    int64_t boundary;
    int64_t twice_area;
} cleantri_pick;

typedef struct cleantri_scott {
    int applicable;
    int holds;
    int equality;
    int64_t interior;
    int64_t boundary;
} cleantri_scott;

CLEANTRI_API cleantri_status cleantri_pick_counts(const cleantri_triangle* t, cleantri_pick* out);
CLEANTRI_API cleantri_status cleantri_interior_count_enum(const cleantri_triangle* t, int64_t* out);
CLEANTRI_API cleantri_status cleantri_is_clean(const cleantri_triangle* t, int* clean, int* empty);
CLEANTRI_API cleantri_status cleantri_apply_map(const cleantri_map* map, const cleantri_triangle* t,
                                                cleantri_triangle* out);
CLEANTRI_API cleantri_status cleantri_reduce(const cleantri_triangle* t, cleantri_base_form* form, cleantri_map* map);
/* witness may be NULL; it is written only when *equivalent is nonzero */
CLEANTRI_API cleantri_status cleantri_equivalent_clean(const cleantri_triangle* t1, const cleantri_triangle* t2,
                                                       int* equivalent, cleantri_map* witness);
CLEANTRI_API cleantri_status cleantri_scott_check(const cleantri_triangle* t, cleantri_scott* out);

typedef struct cleantri_scott_scan cleantri_scott_scan;

CLEANTRI_API cleantri_status cleantri_scott_scan_create(int64_t grid_bound, cleantri_scott_scan** out);
CLEANTRI_API int64_t cleantri_scott_scan_triangles(const cleantri_scott_scan* scan);
CLEANTRI_API int64_t cleantri_scott_scan_applicable(const cleantri_scott_scan* scan);
CLEANTRI_API size_t cleantri_scott_scan_violations(const cleantri_scott_scan* scan);
CLEANTRI_API size_t cleantri_scott_scan_equality_count(const cleantri_scott_scan* scan);
CLEANTRI_API cleantri_status cleantri_scott_scan_equality_case(const cleantri_scott_scan* scan, size_t index,
                                                               cleantri_triangle* triangle, cleantri_base_form* form,
                                                               int* matches_legs3);
CLEANTRI_API void cleantri_scott_scan_destroy(cleantri_scott_scan* scan);

/* ---- mean values and constants ---------------------------------------- */

typedef struct cleantri_constant {
    double value;
    uint64_t bound;
    double tail_bound;
} cleantri_constant;

typedef struct cleantri_mean_value {
    uint64_t x;
    uint64_t sum_imph;
    uint64_t sum_t;
    double ratio_imph;
    double ratio_t;
    cleantri_constant product;
    double limit_imph;
    double limit_t;
    double deviation_imph;
    double deviation_t;
    int small_x;
} cleantri_mean_value;

CLEANTRI_API cleantri_status cleantri_partial_sum_imph(uint64_t x, uint64_t* out);
CLEANTRI_API cleantri_status cleantri_partial_sum_t(uint64_t x, uint64_t* out);
CLEANTRI_API cleantri_status cleantri_euler_product_odd(uint64_t prime_bound, cleantri_constant* out);
CLEANTRI_API cleantri_status cleantri_feller_tornier(uint64_t prime_bound, cleantri_constant* product_form,
                                                     cleantri_constant* zeta_form);
CLEANTRI_API cleantri_status cleantri_moebius_sum_odd(uint64_t d_bound, cleantri_constant* out);
CLEANTRI_API cleantri_status cleantri_mean_value_report(uint64_t x, uint64_t prime_bound, cleantri_mean_value* out);
/* sums[i], ratios[i] for each xs[i]; ratio is NaN for x < 2 */
CLEANTRI_API cleantri_status cleantri_grosswald(const uint64_t* xs, size_t count, uint64_t* sums, double* ratios);

#ifdef __cplusplus
}
#endif

#endif /* CLEANTRI_H */
