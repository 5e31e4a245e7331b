#pragma once

// Exact planar lattice geometry over Z^2.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace cleantri {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Vertices are stored in the order given. Construction does not reject
// degenerate triples; the geometric operations do.
struct LatticeTriangle {
    std::array<LatticePoint, 3> v;

    friend bool operator==(const LatticeTriangle&, const LatticeTriangle&) = default;
};

LatticeTriangle make_triangle(LatticePoint a, LatticePoint b, LatticePoint c);

// Order-independent vertex-set comparison.
bool same_vertex_set(const LatticeTriangle& a, const LatticeTriangle& b);

/// x -> M x + t with M = [[a, b], [c, d]] and det M = +-1.
class AffineUnimodularMap {
public:
    AffineUnimodularMap() = default;  // identity
    AffineUnimodularMap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, LatticePoint t = {});

    static AffineUnimodularMap translation(LatticePoint t) { return {1, 0, 0, 1, t}; }

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }
    LatticePoint t() const noexcept { return t_; }
    int det() const noexcept { return static_cast<int>(a_ * d_ - b_ * c_); }

    LatticePoint operator()(LatticePoint p) const noexcept;
    LatticeTriangle operator()(const LatticeTriangle& tri) const noexcept;

    // (*this) after `inner`.
    AffineUnimodularMap after(const AffineUnimodularMap& inner) const;
    AffineUnimodularMap inverse() const;

    bool is_identity() const noexcept { return *this == AffineUnimodularMap{}; }

    friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

private:
    std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
    LatticePoint t_{};
};

// Representative (0,0), (b,0), (m,h) with b, h > 0, 0 <= m < h and
// b >= gcd(m, h), gcd(m - b, h).
struct BaseForm {
    std::int64_t b;
    std::int64_t m;
    std::int64_t h;

    LatticeTriangle triangle() const { return make_triangle({0, 0}, {b, 0}, {m, h}); }
    bool valid() const noexcept;

    friend bool operator==(const BaseForm&, const BaseForm&) = default;
};

struct PickCounts {
    std::int64_t interior;
    std::int64_t boundary;
    std::int64_t twice_area;

    friend bool operator==(const PickCounts&, const PickCounts&) = default;
};

inline constexpr std::int64_t kInteriorScanLimit = 100'000'000;
inline constexpr std::int64_t kScottScanLimit = 8;
inline constexpr std::int64_t kEnumerateCleanLimit = 100'000;

std::int64_t twice_area(const LatticeTriangle& t);
std::int64_t boundary_count(const LatticeTriangle& t);
PickCounts pick_counts(const LatticeTriangle& t);

// Bounding-box scan with exact orientation tests; independent of Pick.
std::int64_t interior_count_enum(const LatticeTriangle& t);

bool is_clean(const LatticeTriangle& t);
bool is_empty(const LatticeTriangle& t);

inline LatticeTriangle apply_map(const AffineUnimodularMap& map, const LatticeTriangle& t) { return map(t); }

struct Reduction {
    BaseForm form;
    AffineUnimodularMap map;  // map(input) == form.triangle() as vertex sets
};

/// Horizontal-base normal form of a lattice triangle.
///
/// The base is the edge with the most lattice points; ties go to the edge
/// whose sorted endpoint pair is lexicographically smallest. The edge's first
/// vertex in the stored cyclic order (v0->v1->v2->v0) goes to the origin.
/// The edge direction is completed to a unimodular basis using extended_gcd,
/// the apex is reflected into the upper half plane if needed, and a
/// horizontal shear brings 0 <= m < h.
Reduction reduce_to_base_form(const LatticeTriangle& t);

// Searches the six vertex bijections for an affine unimodular map carrying
// `from` onto `to`. Works for any pair of non-degenerate triangles.
std::optional<AffineUnimodularMap> find_unimodular_map(const LatticeTriangle& from, const LatticeTriangle& to);

struct Equivalence {
    bool equivalent;
    std::optional<AffineUnimodularMap> witness;
};

/// Equivalence of two clean triangles via base forms and orbit
/// representatives. Throws errc::not_clean for any other input.
Equivalence equivalent_clean(const LatticeTriangle& t1, const LatticeTriangle& t2, bool want_witness = false);

struct ScottResult {
    bool applicable;  // false when I = 0
    bool holds;
    bool equality;
    std::int64_t interior;
    std::int64_t boundary;
};

ScottResult scott_check(const LatticeTriangle& t);

struct ScottEqualityCase {
    LatticeTriangle triangle;
    BaseForm form;
    bool matches_legs3;  // reduces to (3, 0, 3) and maps onto the legs-3 triangle
};

struct ScottScanReport {
    std::int64_t grid_bound = 0;
    std::int64_t triangles = 0;   // non-degenerate triangles visited
    std::int64_t applicable = 0;  // of those, with I >= 1
    std::vector<LatticeTriangle> violations;
    std::vector<ScottEqualityCase> equality_cases;

    bool all_equality_cases_legs3() const noexcept;
    void merge(const ScottScanReport& other);
};

/// All non-degenerate triangles with vertices in [0, grid_bound]^2.
ScottScanReport scott_exhaustive(std::int64_t grid_bound);

// The legs-3 right isosceles triangle (0,0), (3,0), (0,3).
LatticeTriangle scott_extremal_triangle();

/// Clean triangles (0,0), (1,0), (m,h) for m in IP(h); empty for even h.
std::vector<LatticeTriangle> enumerate_clean(std::int64_t h);

}  // namespace cleantri
