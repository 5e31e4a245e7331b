#include "cleantri/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cleantri/arith.hpp"
#include "cleantri/counting.hpp"
#include "cleantri/error.hpp"

namespace cleantri {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::out_of_range, "lattice coordinate overflow");
    return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::out_of_range, "lattice coordinate overflow");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(errc::out_of_range, "lattice coordinate overflow");
    return r;
}

LatticePoint operator-(LatticePoint p, LatticePoint q) { return {sub(p.x, q.x), sub(p.y, q.y)}; }

std::int64_t cross(LatticePoint u, LatticePoint v) { return sub(mul(u.x, v.y), mul(u.y, v.x)); }

std::int64_t signed_twice_area(const LatticeTriangle& t) { return cross(t.v[1] - t.v[0], t.v[2] - t.v[0]); }

std::int64_t edge_gcd(LatticePoint p, LatticePoint q) {
    auto d = p - q;
    return std::gcd(d.x, d.y);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void require_nondegenerate(const LatticeTriangle& t, const char* what) {
    if (signed_twice_area(t) == 0) fail(errc::degenerate, std::string(what) + ": degenerate (collinear) triangle");
}

}  // namespace

LatticeTriangle make_triangle(LatticePoint a, LatticePoint b, LatticePoint c) { return {{a, b, c}}; }

bool same_vertex_set(const LatticeTriangle& a, const LatticeTriangle& b) {
    auto x = a.v;
    auto y = b.v;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

AffineUnimodularMap::AffineUnimodularMap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, LatticePoint t)
    : a_(a), b_(b), c_(c), d_(d), t_(t) {
    const std::int64_t det = sub(mul(a, d), mul(b, c));
    if (det != 1 && det != -1) fail(errc::invalid_argument, "matrix determinant must be +1 or -1");
}

LatticePoint AffineUnimodularMap::operator()(LatticePoint p) const noexcept {
    return {a_ * p.x + b_ * p.y + t_.x, c_ * p.x + d_ * p.y + t_.y};
}

LatticeTriangle AffineUnimodularMap::operator()(const LatticeTriangle& tri) const noexcept {
    return {{(*this)(tri.v[0]), (*this)(tri.v[1]), (*this)(tri.v[2])}};
}

AffineUnimodularMap AffineUnimodularMap::after(const AffineUnimodularMap& g) const {
    return {add(mul(a_, g.a_), mul(b_, g.c_)),
            add(mul(a_, g.b_), mul(b_, g.d_)),
            add(mul(c_, g.a_), mul(d_, g.c_)),
            add(mul(c_, g.b_), mul(d_, g.d_)),
            {add(add(mul(a_, g.t_.x), mul(b_, g.t_.y)), t_.x), add(add(mul(c_, g.t_.x), mul(d_, g.t_.y)), t_.y)}};
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
    const std::int64_t s = det();
    const std::int64_t ia = s * d_, ib = -s * b_, ic = -s * c_, id = s * a_;
    return {ia, ib, ic, id, {-add(mul(ia, t_.x), mul(ib, t_.y)), -add(mul(ic, t_.x), mul(id, t_.y))}};
}

bool BaseForm::valid() const noexcept {
    if (b <= 0 || h <= 0 || m < 0 || m >= h) return false;
    return b >= std::gcd(m, h) && b >= std::gcd(m - b, h);
}

std::int64_t twice_area(const LatticeTriangle& t) {
    const std::int64_t s = signed_twice_area(t);
    if (s == 0) fail(errc::degenerate, "twice_area: degenerate (collinear) triangle");
    return s < 0 ? -s : s;
}

std::int64_t boundary_count(const LatticeTriangle& t) {
    require_nondegenerate(t, "boundary_count");
    return edge_gcd(t.v[0], t.v[1]) + edge_gcd(t.v[1], t.v[2]) + edge_gcd(t.v[2], t.v[0]);
}

PickCounts pick_counts(const LatticeTriangle& t) {
    const std::int64_t area2 = twice_area(t);
    const std::int64_t boundary = boundary_count(t);
    const std::int64_t twice_interior = area2 - boundary + 2;
    if (twice_interior < 0 || twice_interior % 2 != 0)
        fail(errc::invariant_violation, "pick_counts: non-integral interior count");
    return {twice_interior / 2, boundary, area2};
}

std::int64_t interior_count_enum(const LatticeTriangle& t) {
    const std::int64_t orientation = signed_twice_area(t);
    if (orientation == 0) fail(errc::degenerate, "interior_count_enum: degenerate (collinear) triangle");
    auto [xmin, xmax] = std::minmax({t.v[0].x, t.v[1].x, t.v[2].x});
    auto [ymin, ymax] = std::minmax({t.v[0].y, t.v[1].y, t.v[2].y});
    const std::int64_t w = sub(xmax, xmin) + 1, hgt = sub(ymax, ymin) + 1;
    if (w > kInteriorScanLimit / hgt) fail(errc::out_of_range, "interior_count_enum: bounding box exceeds 10^8 points");

    const int sign = orientation > 0 ? 1 : -1;
    std::int64_t count = 0;
    for (std::int64_t y = ymin; y <= ymax; ++y) {
        for (std::int64_t x = xmin; x <= xmax; ++x) {
            const LatticePoint p{x, y};
            bool inside = true;
            for (int i = 0; i < 3 && inside; ++i) {
                const std::int64_t c = cross(t.v[(i + 1) % 3] - t.v[i], p - t.v[i]);
                inside = (c > 0 && sign > 0) || (c < 0 && sign < 0);
            }
            if (inside) ++count;
        }
    }
    return count;
}

bool is_clean(const LatticeTriangle& t) { return boundary_count(t) == 3; }

bool is_empty(const LatticeTriangle& t) { return is_clean(t) && twice_area(t) == 1; }

Reduction reduce_to_base_form(const LatticeTriangle& t) {
    require_nondegenerate(t, "reduce_to_base_form");

    struct Edge {
        std::int64_t lattice_gcd;
        LatticePoint lo, hi;            // sorted endpoints, for tie-breaking
        LatticePoint start, end, apex;  // in stored cyclic order
    };
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i) {
        const auto p = t.v[i], q = t.v[(i + 1) % 3];
        edges.push_back({edge_gcd(p, q), std::min(p, q), std::max(p, q), p, q, t.v[(i + 2) % 3]});
    }
    const Edge base = *std::min_element(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
        if (l.lattice_gcd != r.lattice_gcd) return l.lattice_gcd > r.lattice_gcd;
        return std::pair(l.lo, l.hi) < std::pair(r.lo, r.hi);
    });

    const auto shift = AffineUnimodularMap::translation({-base.start.x, -base.start.y});
    const LatticePoint u = base.end - base.start;
    const LatticePoint v = base.apex - base.start;
    const std::int64_t b = base.lattice_gcd;
    const LatticePoint w{u.x / b, u.y / b};

    // Complete w to a basis (w, x) with det = 1; the inverse basis matrix
    // sends w to e1 and x to e2.
    const auto [g, s, r] = extended_gcd(w.x, w.y);
    (void)g;
    const LatticePoint xv{-r, s};
    AffineUnimodularMap to_axis(xv.y, -xv.x, -w.y, w.x);

    LatticePoint a = to_axis(v);
    if (a.y < 0) {
        to_axis = AffineUnimodularMap(1, 0, 0, -1).after(to_axis);
        a = to_axis(v);
    }
    const std::int64_t h = a.y;
    const std::int64_t q = floor_div(a.x, h);
    const std::int64_t m = a.x - q * h;
    const AffineUnimodularMap shear(1, -q, 0, 1);

    Reduction out{{b, m, h}, shear.after(to_axis).after(shift)};
    if (!out.form.valid() || !same_vertex_set(out.map(t), out.form.triangle()))
        fail(errc::invariant_violation, "reduce_to_base_form: witness check failed");
    return out;
}

std::optional<AffineUnimodularMap> find_unimodular_map(const LatticeTriangle& from, const LatticeTriangle& to) {
    require_nondegenerate(from, "find_unimodular_map");
    require_nondegenerate(to, "find_unimodular_map");
    const LatticePoint p1 = from.v[1] - from.v[0], p2 = from.v[2] - from.v[0];
    const std::int64_t det_a = cross(p1, p2);

    std::array<int, 3> perm = {0, 1, 2};
    do {
        const LatticePoint q0 = to.v[perm[0]];
        const LatticePoint q1 = to.v[perm[1]] - q0, q2 = to.v[perm[2]] - q0;
        // M * [p1 p2] = [q1 q2]  =>  M = [q1 q2] * adj([p1 p2]) / det
        const std::int64_t n00 = sub(mul(q1.x, p2.y), mul(q2.x, p1.y));
        const std::int64_t n01 = sub(mul(q2.x, p1.x), mul(q1.x, p2.x));
        const std::int64_t n10 = sub(mul(q1.y, p2.y), mul(q2.y, p1.y));
        const std::int64_t n11 = sub(mul(q2.y, p1.x), mul(q1.y, p2.x));
        if (n00 % det_a || n01 % det_a || n10 % det_a || n11 % det_a) continue;
        const std::int64_t a = n00 / det_a, b = n01 / det_a, c = n10 / det_a, d = n11 / det_a;
        const std::int64_t det = a * d - b * c;
        if (det != 1 && det != -1) continue;
        const AffineUnimodularMap linear(a, b, c, d);
        const LatticePoint image = linear(from.v[0]);
        return AffineUnimodularMap(a, b, c, d, q0 - image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

Equivalence equivalent_clean(const LatticeTriangle& t1, const LatticeTriangle& t2, bool want_witness) {
    if (!is_clean(t1) || !is_clean(t2)) fail(errc::not_clean, "equivalent_clean: both triangles must be clean");
    const Reduction r1 = reduce_to_base_form(t1);
    const Reduction r2 = reduce_to_base_form(t2);
    const auto h = r1.form.h;
    const bool equivalent = h == r2.form.h && canonical_m(r1.form.m, h) == canonical_m(r2.form.m, h);

    Equivalence out{equivalent, std::nullopt};
    if (!equivalent || !want_witness) return out;
    const auto bridge = find_unimodular_map(r1.form.triangle(), r2.form.triangle());
    if (!bridge) fail(errc::invariant_violation, "equivalent_clean: orbit match without a realizing map");
    const auto witness = r2.map.inverse().after(bridge->after(r1.map));
    if (!same_vertex_set(witness(t1), t2)) fail(errc::invariant_violation, "equivalent_clean: witness check failed");
    out.witness = witness;
    return out;
}

ScottResult scott_check(const LatticeTriangle& t) {
    const PickCounts pc = pick_counts(t);
    ScottResult out{pc.interior >= 1, false, false, pc.interior, pc.boundary};
    if (out.applicable) {
        out.holds = pc.boundary <= 2 * pc.interior + 7;
        out.equality = pc.boundary == 2 * pc.interior + 7;
    }
    return out;
}

LatticeTriangle scott_extremal_triangle() { return make_triangle({0, 0}, {3, 0}, {0, 3}); }

bool ScottScanReport::all_equality_cases_legs3() const noexcept {
    return std::all_of(equality_cases.begin(), equality_cases.end(),
                       [](const ScottEqualityCase& c) { return c.matches_legs3; });
}

void ScottScanReport::merge(const ScottScanReport& other) {
    grid_bound = std::max(grid_bound, other.grid_bound);
    triangles += other.triangles;
    applicable += other.applicable;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    equality_cases.insert(equality_cases.end(), other.equality_cases.begin(), other.equality_cases.end());
}

ScottScanReport scott_exhaustive(std::int64_t grid_bound) {
    if (grid_bound < 0) fail(errc::invalid_argument, "scott_exhaustive: grid bound must be nonnegative");
    if (grid_bound > kScottScanLimit) fail(errc::out_of_range, "scott_exhaustive: grid bound above 8");

    std::vector<LatticePoint> points;
    for (std::int64_t x = 0; x <= grid_bound; ++x)
        for (std::int64_t y = 0; y <= grid_bound; ++y) points.push_back({x, y});

    const BaseForm legs3{3, 0, 3};
    ScottScanReport report;
    report.grid_bound = grid_bound;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto tri = make_triangle(points[i], points[j], points[k]);
                if (signed_twice_area(tri) == 0) continue;
                ++report.triangles;
                const ScottResult res = scott_check(tri);
                if (!res.applicable) continue;
                ++report.applicable;
                if (!res.holds) report.violations.push_back(tri);
                if (res.equality) {
                    const BaseForm form = reduce_to_base_form(tri).form;
                    const bool matches = form == legs3 && find_unimodular_map(tri, scott_extremal_triangle()).has_value();
                    report.equality_cases.push_back({tri, form, matches});
                }
            }
        }
    }
    return report;
}

std::vector<LatticeTriangle> enumerate_clean(std::int64_t h) {
    if (h <= 0) fail(errc::invalid_argument, "enumerate_clean: height must be positive");
    if (h > kEnumerateCleanLimit) fail(errc::out_of_range, "enumerate_clean: height above 10^5");
    std::vector<LatticeTriangle> out;
    if (h % 2 == 0) return out;
    for (auto m : ip_set(static_cast<std::uint64_t>(h)).members)
        out.push_back(make_triangle({0, 0}, {1, 0}, {static_cast<std::int64_t>(m), h}));
    return out;
}

}  // namespace cleantri
