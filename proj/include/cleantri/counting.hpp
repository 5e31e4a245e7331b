#pragma once

// Burnside counting of clean triangle classes on the residue set IP(n).
//
// The six maps, acting on m in IP(n):
//   g1: m          g2: m^-1          g3: 1 - m
//   g4: 1 - m^-1   g5: (1 - m)^-1    g6: (1 - m^-1)^-1
// Each one comes from relabelling the vertices of (0,0), (1,0), (m,n).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cleantri/arith.hpp"

namespace cleantri {

inline constexpr std::uint64_t kIpSetLimit = 10'000'000;
inline constexpr std::uint64_t kBurnsideLimit = 100'000;
inline constexpr std::uint64_t kGeometricLimit = 2'000;

struct IPSet {
    std::uint64_t n;
    std::vector<std::uint64_t> members;  // strictly increasing, in [1, n]
};

IPSet ip_set(std::uint64_t n);

bool in_ip_set(std::uint64_t m, std::uint64_t n);

// Result reduced into [1, n]. Throws unless m is in IP(n) and 1 <= i <= 6.
std::uint64_t map_g(int i, std::uint64_t m, std::uint64_t n);

std::uint64_t fix_count_bruteforce(int i, std::uint64_t n);
std::uint64_t fix_count_closed(int i, std::uint64_t n);
std::uint64_t fix_count_closed(int i, const Factorization& f);

using FixCounts = std::array<std::uint64_t, 6>;
FixCounts fix_counts_bruteforce(std::uint64_t n);
FixCounts fix_counts_closed(std::uint64_t n);

// Number of classes, three ways. All return 0 for even n.
std::uint64_t t_burnside(std::uint64_t n);
std::uint64_t t_closed(std::uint64_t n);
std::uint64_t t_closed(const Factorization& f);
// Same, from the prime powers of an odd n (ascending primes).
std::uint64_t t_closed(std::span<const PrimePower> factors);
std::uint64_t t_geometric(std::uint64_t n);

enum class TheoremCase { has_bad_prime, three_exactly, all_one_mod_six };
// Which of the three closed-form cases applies to odd n.
TheoremCase classify(std::span<const PrimePower> factors) noexcept;

struct OrbitDecomposition {
    std::uint64_t n;
    std::vector<std::vector<std::uint64_t>> orbits;  // each sorted; ordered by first element
};

OrbitDecomposition orbit_decomposition(std::uint64_t n);

// min of {g1(m), ..., g6(m)}; m is taken modulo n.
std::uint64_t canonical_m(std::int64_t m, std::int64_t n);

// table[i][j] = k with g_{i+1} o g_{j+1} == g_{k+1} pointwise on IP(n), or
// nullopt when some composition matches none of the six maps.
using CompositionTable = std::array<std::array<int, 6>, 6>;
std::optional<CompositionTable> composition_table(std::uint64_t n);

struct TCountReport {
    std::uint64_t n;
    std::uint64_t t_closed;
    std::optional<std::uint64_t> t_burnside;
    std::optional<std::uint64_t> t_geometric;
    std::optional<FixCounts> fix_counts;  // brute-force counts, when t_burnside ran

    bool consistent() const noexcept;
};

// Runs every method whose bound admits n.
TCountReport tcount_report(std::uint64_t n);

}  // namespace cleantri
