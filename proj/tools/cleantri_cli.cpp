// cleantri command-line front end. Talks to the library through the C API only.
//
// Exit codes: 0 success (including "not applicable"), 2 usage or argument
// errors, 3 invariant violations and method disagreements.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cleantri/cleantri.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct Failure {
    int code;
    std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw Failure{kExitUsage, message}; }

void check(cleantri_status s) {
    if (s == CLEANTRI_OK) return;
    std::string message = cleantri_last_error();
    if (message.empty()) message = cleantri_status_string(s);
    switch (s) {
        case CLEANTRI_E_INVARIANT: throw Failure{kExitInvariant, message};
        case CLEANTRI_E_INTERNAL: throw Failure{1, message};
        default: throw Failure{kExitUsage, message};
    }
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || p != end) usage(std::string("invalid ") + what + ": '" + text + "'");
    return v;
}

std::int64_t parse_i64(const std::string& text) {
    std::int64_t v = 0;
    const auto* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || p != end) usage("invalid coordinate: '" + text + "'");
    return v;
}

struct Range {
    std::uint64_t lo;
    std::uint64_t hi;
    bool single() const { return lo == hi; }
};

// "n" or inclusive "a..b", both ends >= 1
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    Range r{};
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_u64(text, "n");
    } else {
        r.lo = parse_u64(text.substr(0, dots), "range start");
        r.hi = parse_u64(text.substr(dots + 2), "range end");
    }
    if (r.lo == 0) usage("n must be positive");
    if (r.lo > r.hi) usage("empty range '" + text + "'");
    return r;
}

std::string fixed(double v, int digits = 7) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

cleantri_triangle parse_triangle(const std::vector<std::string>& c, std::size_t offset = 0) {
    cleantri_triangle t{};
    for (int i = 0; i < 3; ++i) {
        t.v[i].x = parse_i64(c[offset + 2 * i]);
        t.v[i].y = parse_i64(c[offset + 2 * i + 1]);
    }
    return t;
}

std::string show(const cleantri_point& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string show(const cleantri_triangle& t) { return show(t.v[0]) + " " + show(t.v[1]) + " " + show(t.v[2]); }

json to_json(const cleantri_triangle& t) {
    json out = json::array();
    for (const auto& p : t.v) out.push_back({p.x, p.y});
    return out;
}

json to_json(const cleantri_map& m) { return {{"matrix", {{m.a, m.b}, {m.c, m.d}}}, {"translation", {m.t.x, m.t.y}}}; }

json to_json(const cleantri_constant& c) {
    return {{"value", c.value}, {"bound", c.bound}, {"tail_bound", c.tail_bound}};
}

bool is_identity(const cleantri_map& m) {
    return m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1 && m.t.x == 0 && m.t.y == 0;
}

std::string show(const cleantri_map& m) {
    if (is_identity(m)) return "identity";
    std::ostringstream os;
    os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]] x + (" << m.t.x << ", " << m.t.y << ")";
    return os.str();
}

struct Output {
    bool json_mode = false;
    std::ostringstream text;
    json record;

    Output(bool as_json, const char* command) : json_mode(as_json) {
        record["command"] = command;
        record["inputs"] = json::object();
    }
    void emit() const {
        if (json_mode)
            std::cout << record.dump() << '\n';
        else
            std::cout << text.str();
    }
};

// ---- imph ------------------------------------------------------------------

struct ImphArgs {
    std::string n;
    bool bruteforce = false;
    bool bfile = false;
    bool json = false;
};

int run_imph(const ImphArgs& a) {
    const Range r = parse_range(a.n);
    Output out(a.json, "imph");
    out.record["inputs"] = {{"n", a.n}, {"bruteforce", a.bruteforce}};

    // Long ranges go through one sieve table instead of per-n factorization.
    cleantri_imph_table* table = nullptr;
    if (r.hi - r.lo >= 1000 && r.hi <= 100'000'000) check(cleantri_imph_table_create(r.hi, &table));
    struct Release {
        cleantri_imph_table* t;
        ~Release() { cleantri_imph_table_destroy(t); }
    } release{table};

    json values = json::array();
    bool agree = true;
    for (std::uint64_t n = r.lo;; ++n) {
        std::uint64_t v = 0;
        if (table)
            check(cleantri_imph_table_get(table, n, &v));
        else
            check(cleantri_imph(n, &v));
        std::optional<std::uint64_t> brute;
        if (a.bruteforce) {
            std::uint64_t b = 0;
            check(cleantri_imph_bruteforce(n, &b));
            brute = b;
            agree = agree && b == v;
        }
        if (a.json) {
            json entry = {{"n", n}, {"imph", v}};
            if (brute) entry["bruteforce"] = *brute;
            values.push_back(entry);
        } else if (a.bfile) {
            out.text << n << ' ' << v << '\n';
        } else if (brute) {
            out.text << "imph(" << n << ") = " << v << " bruteforce = " << *brute << (*brute == v ? "" : " MISMATCH")
                     << '\n';
        } else if (r.single()) {
            out.text << v << '\n';
        } else {
            out.text << "imph(" << n << ") = " << v << '\n';
        }
        if (n == r.hi) break;
    }
    out.record["result"] = values;
    out.record["provenance"] = {{"formula", table ? "sieve" : "multiplicative"},
                                {"oracle", a.bruteforce ? "double-gcd scan" : "none"},
                                {"agree", agree}};
    out.emit();
    if (!agree) {
        std::cerr << "imph: closed form and brute force disagree\n";
        return kExitInvariant;
    }
    return 0;
}

// ---- tcount ----------------------------------------------------------------

struct TcountArgs {
    std::string n;
    std::string method = "closed";
    bool bfile = false;
    bool json = false;
};

int run_tcount(const TcountArgs& a) {
    const Range r = parse_range(a.n);
    const bool all = a.method == "all";
    if (a.method == "geometric" && r.hi > 2000) usage("--method geometric only supports n <= 2000");
    if (a.method == "burnside" && r.hi > 100000) usage("--method burnside only supports n <= 100000");

    Output out(a.json, "tcount");
    out.record["inputs"] = {{"n", a.n}, {"method", a.method}};
    json values = json::array();
    bool agree = true;
    // Test hook: CLEANTRI_TEST_PERTURB=<method> shifts that method's values by one
    // so the disagreement path can be exercised end to end.
    const char* env = std::getenv("CLEANTRI_TEST_PERTURB");
    const std::optional<std::string> perturb = env ? std::optional<std::string>(env) : std::nullopt;

    for (std::uint64_t n = r.lo;; ++n) {
        std::vector<std::pair<const char*, std::uint64_t>> got;
        auto run = [&](const char* name, cleantri_method m) {
            std::uint64_t v = 0;
            check(cleantri_tcount(n, m, &v));
            if (perturb && perturb == name) ++v;
            got.emplace_back(name, v);
        };
        if (all) {
            run("closed", CLEANTRI_METHOD_CLOSED);
            if (n <= 100000) run("burnside", CLEANTRI_METHOD_BURNSIDE);
            if (n <= 2000) run("geometric", CLEANTRI_METHOD_GEOMETRIC);
        } else if (a.method == "closed") {
            run("closed", CLEANTRI_METHOD_CLOSED);
        } else if (a.method == "burnside") {
            run("burnside", CLEANTRI_METHOD_BURNSIDE);
        } else {
            run("geometric", CLEANTRI_METHOD_GEOMETRIC);
        }
        for (const auto& [name, v] : got) agree = agree && v == got.front().second;

        if (a.json) {
            json entry = {{"n", n}};
            for (const auto& [name, v] : got) entry[name] = v;
            values.push_back(entry);
        } else if (a.bfile) {
            out.text << n << ' ' << got.front().second << '\n';
        } else {
            std::string line;
            if (all) {
                for (const auto& [name, v] : got) {
                    if (!line.empty()) line += ' ';
                    line += std::string(name) + "=" + std::to_string(v);
                }
            } else {
                line = std::to_string(got.front().second);
            }
            if (r.single())
                out.text << line << '\n';
            else
                out.text << "T(" << n << ") " << line << '\n';
        }
        if (n == r.hi) break;
    }
    out.record["result"] = values;
    out.record["provenance"] = {{"methods", all ? json{"closed", "burnside", "geometric"} : json{a.method}},
                                {"agree", agree}};
    out.emit();
    if (!agree) {
        std::cerr << "tcount: methods disagree\n";
        return kExitInvariant;
    }
    return 0;
}

// ---- reduce ----------------------------------------------------------------

struct ReduceArgs {
    std::vector<std::string> coords;
    bool json = false;
};

int run_reduce(const ReduceArgs& a) {
    const auto t = parse_triangle(a.coords);
    cleantri_base_form form{};
    cleantri_map map{};
    check(cleantri_reduce(&t, &form, &map));
    cleantri_pick pick{};
    check(cleantri_pick_counts(&t, &pick));

    Output out(a.json, "reduce");
    out.record["inputs"] = {{"triangle", to_json(t)}};
    out.record["result"] = {{"b", form.b},
                            {"m", form.m},
                            {"h", form.h},
                            {"witness", to_json(map)},
                            {"interior", pick.interior},
                            {"boundary", pick.boundary},
                            {"twice_area", pick.twice_area}};
    out.record["provenance"] = {{"witness_verified", true}};
    out.text << "b=" << form.b << " m=" << form.m << " h=" << form.h << '\n';
    out.text << "witness: " << show(map) << '\n';
    out.text << "I=" << pick.interior << " B=" << pick.boundary << " twice_area=" << pick.twice_area << '\n';
    out.emit();
    return 0;
}

// ---- equiv -----------------------------------------------------------------

struct EquivArgs {
    std::vector<std::string> coords;
    bool json = false;
};

int run_equiv(const EquivArgs& a) {
    const auto t1 = parse_triangle(a.coords, 0);
    const auto t2 = parse_triangle(a.coords, 6);
    int equivalent = 0;
    cleantri_map witness{};
    check(cleantri_equivalent_clean(&t1, &t2, &equivalent, &witness));

    Output out(a.json, "equiv");
    out.record["inputs"] = {{"first", to_json(t1)}, {"second", to_json(t2)}};
    out.record["result"] = {{"equivalent", equivalent != 0}};
    if (equivalent) out.record["result"]["witness"] = to_json(witness);
    out.record["provenance"] = {{"method", "orbit representative"}, {"witness_verified", equivalent != 0}};
    if (equivalent) {
        out.text << "equivalent\n";
        out.text << "witness: " << show(witness) << '\n';
    } else {
        out.text << "not equivalent\n";
    }
    out.emit();
    return 0;
}

// ---- scott -----------------------------------------------------------------

struct ScottArgs {
    std::vector<std::string> coords;
    std::optional<std::int64_t> scan;
    bool json = false;
};

int run_scott_scan(std::int64_t bound, bool as_json) {
    cleantri_scott_scan* scan = nullptr;
    check(cleantri_scott_scan_create(bound, &scan));
    struct Release {
        cleantri_scott_scan* s;
        ~Release() { cleantri_scott_scan_destroy(s); }
    } release{scan};

    const auto violations = cleantri_scott_scan_violations(scan);
    const auto cases = cleantri_scott_scan_equality_count(scan);
    Output out(as_json, "scott");
    out.record["inputs"] = {{"scan", bound}};
    out.text << "grid bound " << bound << ": " << cleantri_scott_scan_triangles(scan) << " triangles, "
             << cleantri_scott_scan_applicable(scan) << " with I >= 1, " << violations << " violations\n";
    out.text << "equality cases: " << cases << '\n';

    json list = json::array();
    bool all_legs3 = true;
    for (std::size_t i = 0; i < cases; ++i) {
        cleantri_triangle t{};
        cleantri_base_form f{};
        int legs3 = 0;
        check(cleantri_scott_scan_equality_case(scan, i, &t, &f, &legs3));
        all_legs3 = all_legs3 && legs3;
        list.push_back({{"triangle", to_json(t)}, {"b", f.b}, {"m", f.m}, {"h", f.h}, {"legs3", legs3 != 0}});
        out.text << "  " << show(t) << " -> b=" << f.b << " m=" << f.m << " h=" << f.h << (legs3 ? "" : " UNEXPECTED")
                 << '\n';
    }
    out.record["result"] = {{"triangles", cleantri_scott_scan_triangles(scan)},
                            {"applicable", cleantri_scott_scan_applicable(scan)},
                            {"violations", violations},
                            {"equality_cases", list}};
    out.record["provenance"] = {{"method", "exhaustive"}, {"equality_cases_legs3", all_legs3}};
    out.emit();
    if (violations > 0 || !all_legs3) {
        std::cerr << "scott: inequality violated or unexpected equality case\n";
        return kExitInvariant;
    }
    return 0;
}

int run_scott(const ScottArgs& a) {
    if (a.scan) {
        if (!a.coords.empty()) usage("give either six coordinates or --scan, not both");
        return run_scott_scan(*a.scan, a.json);
    }
    if (a.coords.size() != 6) usage("scott needs six coordinates or --scan N");
    const auto t = parse_triangle(a.coords);
    cleantri_scott s{};
    check(cleantri_scott_check(&t, &s));

    Output out(a.json, "scott");
    out.record["inputs"] = {{"triangle", to_json(t)}};
    out.record["result"] = {{"applicable", s.applicable != 0},
                            {"holds", s.holds != 0},
                            {"equality", s.equality != 0},
                            {"interior", s.interior},
                            {"boundary", s.boundary}};
    out.record["provenance"] = {{"method", "pick counts"}};
    if (!s.applicable) {
        out.text << "not applicable (I=0) B=" << s.boundary << '\n';
    } else {
        out.text << (s.holds ? "holds" : "VIOLATED") << ", " << (s.equality ? "equality" : "strict")
                 << ", I=" << s.interior << " B=" << s.boundary << " bound=" << 2 * s.interior + 7 << '\n';
    }
    out.emit();
    if (s.applicable && !s.holds) return kExitInvariant;
    return 0;
}

// ---- orbits ----------------------------------------------------------------

struct OrbitsArgs {
    std::uint64_t n = 0;
    bool json = false;
};

int run_orbits(const OrbitsArgs& a) {
    if (a.n == 0) usage("n must be positive");
    cleantri_orbits* orbits = nullptr;
    check(cleantri_orbits_create(a.n, &orbits));
    struct Release {
        cleantri_orbits* o;
        ~Release() { cleantri_orbits_destroy(o); }
    } release{orbits};

    Output out(a.json, "orbits");
    out.record["inputs"] = {{"n", a.n}};
    const std::size_t count = cleantri_orbits_count(orbits);
    json list = json::array();
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::uint64_t> members(cleantri_orbits_size(orbits, i));
        std::size_t got = 0;
        check(cleantri_orbits_get(orbits, i, members.data(), members.size(), &got));
        list.push_back(members);
        out.text << '{';
        for (std::size_t k = 0; k < members.size(); ++k) out.text << (k ? ", " : "") << members[k];
        out.text << "}\n";
    }
    std::uint64_t t = 0;
    check(cleantri_tcount(a.n, CLEANTRI_METHOD_CLOSED, &t));
    out.text << "orbits: " << count << '\n';
    out.record["result"] = {{"orbits", list}, {"count", count}};
    out.record["provenance"] = {{"method", "union-find"}, {"closed_form", t}, {"agree", t == count}};
    out.emit();
    if (t != count) {
        std::cerr << "orbits: orbit count disagrees with the closed form\n";
        return kExitInvariant;
    }
    return 0;
}

// ---- meanvalue ---------------------------------------------------------------

struct MeanArgs {
    std::uint64_t x = 0;
    std::uint64_t primes = 10'000'000;
    std::uint64_t moebius = 1'000'000;
    bool json = false;
};

int run_meanvalue(const MeanArgs& a) {
    if (a.x == 0) usage("--x must be positive");
    cleantri_mean_value mv{};
    check(cleantri_mean_value_report(a.x, a.primes, &mv));
    cleantri_constant ft_product{}, ft_zeta{}, moebius{};
    check(cleantri_feller_tornier(a.primes, &ft_product, &ft_zeta));
    check(cleantri_moebius_sum_odd(a.moebius, &moebius));

    // Checkpoints 10, 100, ... below x, then x itself.
    std::vector<std::uint64_t> xs;
    for (std::uint64_t c = 10; c < a.x; c *= 10) xs.push_back(c);
    xs.push_back(a.x);
    std::vector<std::uint64_t> sums(xs.size());
    std::vector<double> ratios(xs.size());
    check(cleantri_grosswald(xs.data(), xs.size(), sums.data(), ratios.data()));

    // All three estimates of the odd product must overlap within their tails.
    const double from_zeta = 4.0 * (ft_zeta.value - 0.5);
    const double zeta_tail = 4.0 * ft_zeta.tail_bound;
    const double p = mv.product.value, pt = mv.product.tail_bound;
    const bool consistent = std::fabs(p - moebius.value) <= pt + moebius.tail_bound &&
                            std::fabs(p - from_zeta) <= pt + zeta_tail &&
                            std::fabs(moebius.value - from_zeta) <= moebius.tail_bound + zeta_tail;

    Output out(a.json, "meanvalue");
    out.record["inputs"] = {{"x", a.x}, {"primes", a.primes}, {"moebius", a.moebius}};
    json gross = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        json ratio = std::isnan(ratios[i]) ? json(nullptr) : json(ratios[i]);
        gross.push_back({{"x", xs[i]}, {"sum", sums[i]}, {"ratio", ratio}});
    }
    out.record["result"] = {{"sum_imph", mv.sum_imph},
                            {"sum_t", mv.sum_t},
                            {"ratio_imph", mv.ratio_imph},
                            {"ratio_t", mv.ratio_t},
                            {"odd_product", to_json(mv.product)},
                            {"limit_imph", mv.limit_imph},
                            {"limit_t", mv.limit_t},
                            {"deviation_imph", mv.deviation_imph},
                            {"deviation_t", mv.deviation_t},
                            {"moebius_sum", to_json(moebius)},
                            {"feller_tornier_product", to_json(ft_product)},
                            {"feller_tornier_zeta", to_json(ft_zeta)},
                            {"grosswald", gross},
                            {"small_x", mv.small_x != 0}};
    out.record["provenance"] = {{"sums", "sieve"}, {"representations_agree", consistent}};

    auto& o = out.text;
    o << "x = " << a.x << (mv.small_x ? " (small x: ratios are far from their limits)" : "") << '\n';
    o << "sum imph = " << mv.sum_imph << ", ratio " << fixed(mv.ratio_imph) << ", limit " << fixed(mv.limit_imph)
      << ", deviation " << fixed(100 * mv.deviation_imph, 4) << "%\n";
    o << "sum T    = " << mv.sum_t << ", ratio " << fixed(mv.ratio_t) << ", limit " << fixed(mv.limit_t)
      << ", deviation " << fixed(100 * mv.deviation_t, 4) << "%\n";
    o << "odd product (p <= " << a.primes << ") = " << fixed(p) << " +- " << sci(pt) << '\n';
    o << "moebius sum (d <= " << a.moebius << ") = " << fixed(moebius.value) << " +- " << sci(moebius.tail_bound)
      << '\n';
    o << "C_FT product form = " << fixed(ft_product.value) << " +- " << sci(ft_product.tail_bound) << '\n';
    o << "C_FT zeta form    = " << fixed(ft_zeta.value) << " +- " << sci(ft_zeta.tail_bound) << '\n';
    o << "representations " << (consistent ? "agree" : "DISAGREE") << " within tail bounds\n";
    o << "grosswald: x, sum 2^Omega(n), sum / (x ln^2 x)\n";
    for (std::size_t i = 0; i < xs.size(); ++i) o << "  " << xs[i] << ' ' << sums[i] << ' ' << fixed(ratios[i], 6) << '\n';
    out.emit();
    if (!consistent) {
        std::cerr << "meanvalue: constant representations disagree beyond their tail bounds\n";
        return kExitInvariant;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clean lattice triangles: counts, reductions and mean values"};
    app.set_version_flag("--version", cleantri_version());
    app.require_subcommand(1);

    ImphArgs imph;
    auto* c_imph = app.add_subcommand("imph", "imph(n): residues x with gcd(x, n) = gcd(x - 1, n) = 1");
    c_imph->add_option("n", imph.n, "n or inclusive range a..b")->required();
    c_imph->add_flag("--bruteforce", imph.bruteforce, "also count by direct scan and compare");
    c_imph->add_flag("--bfile", imph.bfile, "print \"n a(n)\" lines");
    c_imph->add_flag("--json", imph.json, "print one JSON record");

    TcountArgs tcount;
    auto* c_tcount = app.add_subcommand("tcount", "number of classes of clean triangles of area n/2");
    c_tcount->add_option("n", tcount.n, "n or inclusive range a..b")->required();
    c_tcount->add_option("--method", tcount.method, "closed, burnside, geometric or all")
        ->check(CLI::IsMember({"closed", "burnside", "geometric", "all"}));
    c_tcount->add_flag("--bfile", tcount.bfile, "print \"n a(n)\" lines");
    c_tcount->add_flag("--json", tcount.json, "print one JSON record");

    ReduceArgs reduce;
    auto* c_reduce = app.add_subcommand("reduce", "base form (b, m, h) of a lattice triangle, with witness map");
    c_reduce->add_option("coords", reduce.coords, "x0 y0 x1 y1 x2 y2")->expected(6)->required();
    c_reduce->add_flag("--json", reduce.json, "print one JSON record");

    EquivArgs equiv;
    auto* c_equiv = app.add_subcommand("equiv", "unimodular equivalence of two clean triangles");
    c_equiv->add_option("coords", equiv.coords, "twelve integers: two triangles")->expected(12)->required();
    c_equiv->add_flag("--json", equiv.json, "print one JSON record");

    ScottArgs scott;
    std::int64_t scan_bound = 0;
    auto* c_scott = app.add_subcommand("scott", "check B <= 2I + 7 for one triangle or a whole grid");
    c_scott->add_option("coords", scott.coords, "x0 y0 x1 y1 x2 y2")->expected(6);
    auto* scan_opt = c_scott->add_option("--scan", scan_bound, "scan all triangles in [0, N]^2 (N <= 8)");
    c_scott->add_flag("--json", scott.json, "print one JSON record");

    OrbitsArgs orbits;
    auto* c_orbits = app.add_subcommand("orbits", "orbits of the six residue maps on IP(n)");
    c_orbits->add_option("n", orbits.n, "odd n <= 100000")->required();
    c_orbits->add_flag("--json", orbits.json, "print one JSON record");

    MeanArgs mean;
    auto* c_mean = app.add_subcommand("meanvalue", "partial sums against their limits, and related constants");
    c_mean->add_option("--x", mean.x, "summation bound, 1..10^7")->required();
    c_mean->add_option("--primes", mean.primes, "prime bound for the Euler products")->capture_default_str();
    c_mean->add_option("--moebius", mean.moebius, "bound for the Moebius sum")->capture_default_str();
    c_mean->add_flag("--json", mean.json, "print one JSON record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_imph) return run_imph(imph);
        if (*c_tcount) return run_tcount(tcount);
        if (*c_reduce) return run_reduce(reduce);
        if (*c_equiv) return run_equiv(equiv);
        if (*c_scott) {
            if (*scan_opt) scott.scan = scan_bound;
            return run_scott(scott);
        }
        if (*c_orbits) return run_orbits(orbits);
        if (*c_mean) return run_meanvalue(mean);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return kExitUsage;
}
