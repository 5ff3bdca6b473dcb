#include "fourvertex/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "fourvertex/decomposition.hpp"
#include "fourvertex/evolute.hpp"
#include "fourvertex/io.hpp"

namespace fourvertex {

namespace {

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

bool has_radius_ties(const PredicateReport& r) {
    return !r.radius_tie_witness.empty();
}

}  // namespace

Polygon generate(const GeneratorConfig& cfg) {
    if (cfg.n < 3)
        throw GeometryError(Fault::TooFewVertices, "generator needs n >= 3");
    const double pert = cfg.perturbation.to_double();
    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + attempt * 0x2545f4914f6cdd1dULL +
                            cfg.n * 0x100000001b3ULL + static_cast<int>(cfg.kind));
        std::vector<double> angles(cfg.n);
        for (double& a : angles) a = unit_double(rng) * 2.0 * M_PI;
        std::sort(angles.begin(), angles.end());
        double min_gap = angles.front() + 2.0 * M_PI - angles.back();
        for (std::size_t i = 1; i < cfg.n; ++i)
            min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
        if (min_gap < 0.25 * 2.0 * M_PI / static_cast<double>(cfg.n)) continue;

        bool star = cfg.kind == PolygonKind::SimpleNonconvex;
        std::vector<Point> pts;
        pts.reserve(cfg.n);
        for (std::size_t i = 0; i < cfg.n; ++i) {
            double r = star ? 0.45 + 0.55 * unit_double(rng)
                            : 1.0 + pert * (2.0 * unit_double(rng) - 1.0);
            double x = r * std::cos(angles[i]);
            double y = r * std::sin(angles[i]);
            pts.push_back(Point{Rational::from_double_truncated(x, 6),
                                Rational::from_double_truncated(y, 6)});
        }
        Polygon p = [&]() -> Polygon {
            return Polygon::closed(std::move(pts));
        }();
        PredicateReport rep = polygon_predicates(p);
        if (!rep.simple || !rep.generic || has_radius_ties(rep)) continue;
        switch (cfg.kind) {
            case PolygonKind::ConvexGeneric:
                if (rep.convex) return p;
                break;
            case PolygonKind::ConvexGenericCoherent:
                if (rep.convex && rep.coherent) return p;
                break;
            case PolygonKind::SimpleNonconvex:
                if (!rep.convex) return p;
                break;
        }
    }
    throw GeometryError(Fault::RejectionBudgetExceeded,
                        "generator rejection budget exhausted");
}

std::vector<Point> CorpusEntry::points() const {
    std::vector<Point> pts;
    pts.reserve(x_row.size());
    for (std::size_t i = 0; i < x_row.size(); ++i)
        pts.push_back(Point{Rational::from_decimal(x_row[i]),
                            Rational::from_decimal(y_row[i])});
    return pts;
}

Polygon CorpusEntry::polygon(Polygon::Normalize norm) const {
    return Polygon::closed(points(), norm);
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"fig2.7",
         "figure 2.7",
         {"18.38", "17.59", "13.58", "26.21", "23.68", "21.88"},
         {"-2.05", "-2.41", "-6.13", "-5.82", "-3.54", "-2.9"}},
        {"fig4.1",
         "figure 4.1",
         {"1.46", "-2.19", "-2.79", "-2.74", "-1.48", "1.54", "4.72", "6.57",
          "7.78", "8.34", "6.53", "4.44"},
         {"5.59", "5.17", "2.55", "-0.49", "-2.08", "-2.72", "-2.04", "-0.62",
          "0.84", "2.39", "4.01", "5.22"}},
        {"fig4.2",
         "figure 4.2",
         {"1.78", "1.24", "0.37", "1", "1.32", "1.82", "2.48", "3", "3.36",
          "3.45", "3.32", "2.44"},
         {"4.76", "4.58", "3.77", "2.23", "1.86", "1.7", "1.7", "2", "2.41",
          "3.08", "4.3", "4.68"}},
        {"fig4.6",
         "figure 4.6",
         {"0.6", "-0.98", "-1.82", "-1.85", "-1.12", "0.62", "1.63", "2.23",
          "2.68", "3.24", "3.52", "3.52", "3.24", "2.15", "1.51"},
         {"5.12", "4.08", "2.39", "0.52", "-1.74", "-3.44", "-3.29", "-2.53",
          "-1.35", "0.23", "1.28", "1.86", "3.21", "4.32", "4.98"}},
        {"sec3.1-7gon",
         "section 3.1",
         {"2", "3", "2", "0", "-2", "-3", "-2"},
         {"0", "2", "4", "5", "4", "2", "0"}},
        {"sec3.1-9gon",
         "section 3.1",
         {"0", "1", "3", "4", "4", "1", "0", "-1", "-1"},
         {"1", "2", "1", "1", "5", "3", "5", "4", "2"}},
    };
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& id) {
    for (const auto& e : corpus())
        if (e.id == id) return e;
    throw GeometryError(Fault::ParseError, "unknown corpus id: " + id);
}

long PinnedFixture::at(const std::string& key) const {
    auto it = expected.find(key);
    if (it == expected.end())
        throw GeometryError(Fault::ParseError,
                            "fixture " + id + " misses key " + key);
    return it->second;
}

std::string default_fixture_path() {
    return std::string(FOURVERTEX_FIXTURE_DIR) + "/pinned.txt";
}

std::vector<PinnedFixture> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GeometryError(Fault::ParseError, "cannot open fixture file " + path);
    std::vector<PinnedFixture> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string id;
        if (!(ls >> id)) continue;
        PinnedFixture f;
        f.id = id;
        std::string kv;
        while (ls >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw GeometryError(Fault::ParseError, "bad fixture token " + kv);
            std::string key = kv.substr(0, eq);
            std::string val = kv.substr(eq + 1);
            if (key == "diagonal") {
                auto comma = val.find(',');
                if (comma == std::string::npos)
                    throw GeometryError(Fault::ParseError,
                                        "bad diagonal value " + val);
                f.diagonal = Diagonal{std::stoul(val.substr(0, comma)),
                                      std::stoul(val.substr(comma + 1))};
            } else {
                f.expected[key] = std::stol(val);
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

const PinnedFixture& fixture_for(const std::vector<PinnedFixture>& all,
                                 const std::string& id) {
    for (const auto& f : all)
        if (f.id == id) return f;
    throw GeometryError(Fault::ParseError, "no pinned fixture for " + id);
}

// ---------------------------------------------------------------------------
// suite
// ---------------------------------------------------------------------------

namespace {

struct Draw {
    Polygon polygon;
    PredicateReport predicates;
    GeneratorConfig config;
};

struct SuiteContext {
    const SuiteConfig& cfg;
    std::vector<Draw> convex;     // convex generic
    std::vector<Draw> coherent;   // convex generic coherent
    std::vector<Draw> nonconvex;  // simple generic nonconvex
    std::vector<PinnedFixture> fixtures;
    // diagonal audits are consumed by four different tags; compute once
    mutable std::vector<std::optional<AuditSummary>> convex_audits;

    const AuditSummary* audit_of(std::size_t i) const {
        const Polygon& p = convex[i].polygon;
        if (p.size() < 6) return nullptr;
        if (convex_audits.empty()) convex_audits.resize(convex.size());
        if (!convex_audits[i]) {
            AnalyzeOptions fast;
            fast.genericity = GenericityCheck::ConsecutiveOnly;
            fast.with_bose = false;
            convex_audits[i] = audit_all_diagonals(p, fast);
        }
        return &*convex_audits[i];
    }
};

using CheckFn = std::function<void(const SuiteContext&, SuiteEntry&)>;

struct Check {
    std::string tag;
    CheckFn fn;
};

void fail_case(SuiteEntry& e, const Polygon& p, const std::string& what) {
    ++e.failures;
    if (e.witnesses.size() < 4)
        e.witnesses.push_back(SuiteWitness{what, polygon_to_csv(p)});
}

std::vector<Draw> make_pool(const SuiteConfig& cfg, PolygonKind kind,
                            std::size_t count, std::size_t n_lo,
                            std::uint64_t salt) {
    std::vector<Draw> out;
    out.reserve(count);
    const std::size_t span = cfg.n_max - std::max(cfg.n_min, n_lo) + 1;
    for (std::size_t i = 0; i < count; ++i) {
        GeneratorConfig g;
        g.n = std::max(cfg.n_min, n_lo) + (i % span);
        g.seed = cfg.seed + salt * 1000003ULL + i;
        g.kind = kind;
        Polygon p = generate(g);
        PredicateReport rep = polygon_predicates(p);
        out.push_back(Draw{std::move(p), std::move(rep), g});
    }
    return out;
}

struct Labels {
    std::vector<Extremality> global, local;
    std::vector<VertexSign> sign;
    long s_minus = 0, s_plus = 0, l_minus = 0, l_plus = 0;
};

Labels full_labels(const Polygon& p) {
    Labels lab;
    const std::size_t n = p.size();
    lab.global.reserve(n);
    lab.local.reserve(n);
    lab.sign.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        lab.sign.push_back(vertex_sign(p, i));
        Extremality g = global_extremality(p, i);
        lab.global.push_back(g);
        if (g == Extremality::Max) ++lab.s_minus;
        if (g == Extremality::Min) ++lab.s_plus;
        Extremality l = local_extremality(p, i);
        lab.local.push_back(l);
        if (l == Extremality::Max) ++lab.l_minus;
        if (l == Extremality::Min) ++lab.l_plus;
    }
    return lab;
}

// ---- geometry-core invariants ----

void check_incircle_permutation(const SuiteContext& ctx, SuiteEntry& e) {
    std::mt19937_64 rng(ctx.cfg.seed ^ 0xabcdefULL);
    for (int c = 0; c < 200; ++c) {
        auto coord = [&]() {
            return Rational(static_cast<long>(rng() % 2001) - 1000, 100);
        };
        Point a{coord(), coord()}, b{coord(), coord()}, q{coord(), coord()};
        Point d{coord(), coord()};
        if (orientation(a, b, d) == Side::Collinear) continue;
        ++e.cases;
        CirclePosition base = in_circle(a, b, d, q);
        if (in_circle(b, d, a, q) != base || in_circle(d, a, b, q) != base ||
            in_circle(b, a, d, q) != base || in_circle(a, d, b, q) != base) {
            ++e.failures;
            e.notes.push_back("permutation variance at case " + std::to_string(c));
        }
    }
}

void check_circumcenter_equidistant(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.convex) {
        const Polygon& p = d.polygon;
        ++e.cases;
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) {
            auto k = static_cast<std::ptrdiff_t>(i);
            Point o = circumcenter(p.at(k - 1), p.at(k), p.at(k + 1));
            if (squared_distance(o, p.at(k - 1)) != squared_distance(o, p.at(k)) ||
                squared_distance(o, p.at(k)) != squared_distance(o, p.at(k + 1)))
                ok = false;
        }
        if (!ok) fail_case(e, p, "circumcenter not equidistant");
    }
}

void check_angle_sum(const SuiteContext& ctx, SuiteEntry& e) {
    auto test = [&](const Polygon& p) {
        ++e.cases;
        double sum = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i)
            sum += M_PI - left_angle(p, i).radians;
        if (std::abs(sum - 2.0 * M_PI) > 1e-9)
            fail_case(e, p, "turning sum != 2*pi, got " + std::to_string(sum));
    };
    for (const Draw& d : ctx.convex) test(d.polygon);
    for (const Draw& d : ctx.nonconvex) test(d.polygon);
}

void check_halfplane_exchange(const SuiteContext& ctx, SuiteEntry& e) {
    // Random generic A, B, C, X': the four disc/half-plane implications.
    std::mt19937_64 rng(ctx.cfg.seed ^ 0x5eedULL);
    for (int c = 0; c < 300; ++c) {
        auto coord = [&]() {
            return Rational(static_cast<long>(rng() % 4001) - 2000, 100);
        };
        Point a{coord(), coord()}, b{coord(), coord()}, cc{coord(), coord()},
            x{coord(), coord()};
        if (orientation(a, b, cc) == Side::Collinear ||
            orientation(a, b, x) == Side::Collinear)
            continue;
        CirclePosition x_in_cb = in_circle(a, b, cc, x);
        if (x_in_cb == CirclePosition::On) continue;
        if (in_circle(x, a, b, cc) == CirclePosition::On) continue;
        ++e.cases;
        bool same_side = orientation(a, b, x) == orientation(a, b, cc);
        CirclePosition c_in_ca = in_circle(x, a, b, cc);
        bool ok;
        if (same_side)
            ok = (x_in_cb == CirclePosition::Inside)
                     ? c_in_ca == CirclePosition::Outside
                     : c_in_ca == CirclePosition::Inside;
        else
            ok = (x_in_cb == CirclePosition::Inside)
                     ? c_in_ca == CirclePosition::Inside
                     : c_in_ca == CirclePosition::Outside;
        if (!ok) {
            ++e.failures;
            e.notes.push_back("exchange clause failed at case " + std::to_string(c));
        }
    }
}

// ---- extremality ----

void check_local_balance(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.convex) {
        ++e.cases;
        Labels lab = full_labels(d.polygon);
        if (lab.l_minus != lab.l_plus)
            fail_case(e, d.polygon, "l- != l+");
        long r_minus = 0, r_plus = 0;
        for (std::size_t i = 0; i < d.polygon.size(); ++i) {
            Extremality r = radial_extremality(d.polygon, i);
            if (r == Extremality::Max) ++r_minus;
            if (r == Extremality::Min) ++r_plus;
        }
        if (r_minus != r_plus) fail_case(e, d.polygon, "r- != r+");
    }
}

void check_existence(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.convex) {
        ++e.cases;
        Labels lab = full_labels(d.polygon);
        long r_minus = 0;
        for (std::size_t i = 0; i < d.polygon.size(); ++i)
            if (radial_extremality(d.polygon, i) == Extremality::Max) ++r_minus;
        if (lab.s_minus < 1 || lab.l_minus < 1 || r_minus < 1)
            fail_case(e, d.polygon, "missing a maximal-extremal vertex");
    }
}

void check_global_implies_local(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.convex) {
        ++e.cases;
        Labels lab = full_labels(d.polygon);
        for (std::size_t i = 0; i < d.polygon.size(); ++i) {
            if (lab.global[i] != Extremality::None &&
                lab.local[i] != lab.global[i]) {
                fail_case(e, d.polygon,
                          "global label not preserved locally at vertex " +
                              std::to_string(i));
                break;
            }
        }
    }
}

void check_coherent_local_radial(const SuiteContext& ctx, SuiteEntry& e) {
    // Coherent convex generic: local and radial extremal sets coincide with
    // Max/Min interchanged (curvature max <-> smallest neighboring radius).
    for (const Draw& d : ctx.coherent) {
        ++e.cases;
        const Polygon& p = d.polygon;
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) {
            Extremality l = local_extremality(p, i);
            Extremality r = radial_extremality(p, i);
            Extremality expect = l == Extremality::Max   ? Extremality::Min
                                 : l == Extremality::Min ? Extremality::Max
                                                         : Extremality::None;
            if (r != expect) ok = false;
        }
        if (!ok) fail_case(e, p, "local/radial correspondence failed");
    }
}

void check_bose(const SuiteContext& ctx, SuiteEntry& e) {
    detail::InCircleFn pred(&in_circle);
    if (ctx.cfg.mutate_incircle) {
        // Flip every answer for the first empty neighboring circle; the
        // census must notice.
        const Polygon& p0 = ctx.convex.front().polygon;
        std::size_t hot = 0;
        for (std::size_t i = 0; i < p0.size(); ++i)
            if (global_extremality(p0, i) == Extremality::Max) { hot = i; break; }
        auto k = static_cast<std::ptrdiff_t>(hot);
        std::vector<Point> tri{p0.at(k - 1), p0.at(k), p0.at(k + 1)};
        pred = [tri](const Point& a, const Point& b, const Point& c,
                     const Point& q) {
            auto is_tri = [&](const Point& x) {
                return x == tri[0] || x == tri[1] || x == tri[2];
            };
            CirclePosition r = in_circle(a, b, c, q);
            if (is_tri(a) && is_tri(b) && is_tri(c)) {
                if (r == CirclePosition::Inside) return CirclePosition::Outside;
                if (r == CirclePosition::Outside) return CirclePosition::Inside;
            }
            return r;
        };
    }
    for (const Draw& d : ctx.convex) {
        ++e.cases;
        const long n = static_cast<long>(d.polygon.size());
        BoseCounts b = detail::bose_counts_with_predicate(d.polygon, pred);
        bool ok = b.s_plus - b.t_plus == 2 && b.s_minus - b.t_minus == 2 &&
                  b.s_plus + b.t_plus + b.u_plus == n - 2 &&
                  b.s_minus + b.t_minus + b.u_minus == n - 2;
        if (!ok) fail_case(e, d.polygon, "bose identity violated");
        if (ctx.cfg.mutate_incircle) break;  // one corrupted case is the point
    }
}

void check_four_vertex_global(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.convex) {
        ++e.cases;
        Labels lab = full_labels(d.polygon);
        if (lab.s_minus + lab.s_plus < 4)
            fail_case(e, d.polygon, "fewer than four globally extremal vertices");
    }
}

void check_four_vertex_local(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.convex) {
        ++e.cases;
        Labels lab = full_labels(d.polygon);
        if (lab.l_minus + lab.l_plus < 4)
            fail_case(e, d.polygon, "fewer than four locally extremal vertices");
    }
}

void check_four_vertex_radial(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.coherent) {
        ++e.cases;
        long r_minus = 0, r_plus = 0;
        for (std::size_t i = 0; i < d.polygon.size(); ++i) {
            Extremality r = radial_extremality(d.polygon, i);
            if (r == Extremality::Max) ++r_minus;
            if (r == Extremality::Min) ++r_plus;
        }
        if (r_minus + r_plus < 4)
            fail_case(e, d.polygon, "fewer than four radially extremal vertices");
    }
}

void check_removal(const SuiteContext& ctx, SuiteEntry& e, Extremality which) {
    for (const Draw& d : ctx.convex) {
        const Polygon& p = d.polygon;
        if (p.size() < 5) continue;
        Labels lab = full_labels(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (lab.global[i] != which) continue;
            ++e.cases;
            Polygon q = remove_vertex(p, i);
            long before = which == Extremality::Max ? lab.s_minus : lab.s_plus;
            long after = 0;
            bool undefined = false;
            for (std::size_t j = 0; j < q.size(); ++j) {
                try {
                    if (global_extremality(q, j) == which) ++after;
                } catch (const GeometryError&) {
                    undefined = true;
                }
            }
            if (undefined) { --e.cases; continue; }
            long delta = before - after;
            if (delta != 0 && delta != 1)
                fail_case(e, p, "removal changed count by " + std::to_string(delta));
        }
    }
}

void check_removal_local(const SuiteContext& ctx, SuiteEntry& e) {
    // Local max vertex removed: a surviving neighbor-of-neighbor that is
    // locally maximal in P' was already locally maximal in P.
    for (const Draw& d : ctx.convex) {
        const Polygon& p = d.polygon;
        if (p.size() < 5) continue;
        Labels lab = full_labels(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (lab.local[i] != Extremality::Max) continue;
            Polygon q = remove_vertex(p, i);
            for (std::ptrdiff_t off : {-2, +2}) {
                std::size_t xi = p.wrap(static_cast<std::ptrdiff_t>(i) + off);
                std::size_t xq = xi < i ? xi : xi - 1;  // index shift after removal
                ++e.cases;
                try {
                    if (local_extremality(q, xq) == Extremality::Max &&
                        lab.local[xi] != Extremality::Max)
                        fail_case(e, p, "new local max appeared at a neighbor-of-neighbor");
                } catch (const GeometryError&) {
                    --e.cases;
                }
            }
        }
    }
}

void check_witness_asymmetry(const SuiteContext& ctx, SuiteEntry& e) {
    ++e.cases;
    Labels lab = full_labels(corpus_entry("fig4.1").polygon());
    if (lab.s_minus == lab.s_plus)
        fail_case(e, corpus_entry("fig4.1").polygon(),
                  "retained witness no longer has s- != s+");
    const auto& fx = fixture_for(ctx.fixtures, "fig4.1");
    if (lab.s_minus != fx.at("s_minus") || lab.s_plus != fx.at("s_plus"))
        fail_case(e, corpus_entry("fig4.1").polygon(),
                  "witness counts drifted from pinned values");
}

void check_witness_local_not_global(const SuiteContext& ctx, SuiteEntry& e) {
    ++e.cases;
    Polygon p = corpus_entry("fig4.1").polygon();
    Labels lab = full_labels(p);
    bool found = false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (lab.local[i] != Extremality::None &&
            lab.global[i] == Extremality::None)
            found = true;
    if (!found)
        fail_case(e, p, "no locally-but-not-globally extremal vertex retained");
    (void)ctx;
}

void check_witness_local_not_radial(const SuiteContext& ctx, SuiteEntry& e) {
    // Non-coherent witness: the local Max set escapes the radial Max set.
    ++e.cases;
    Polygon p = corpus_entry("fig2.7").polygon();
    PredicateReport rep = polygon_predicates(p);
    if (rep.coherent) {
        fail_case(e, p, "witness unexpectedly coherent");
        return;
    }
    bool escaped = false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (local_extremality(p, i) == Extremality::Max &&
            radial_extremality(p, i) != Extremality::Max)
            escaped = true;
    if (!escaped) fail_case(e, p, "local Max set contained in radial Max set");
    (void)ctx;
}

// ---- evolute ----

void check_evolute_equidistant(const SuiteContext& ctx, SuiteEntry& e) {
    auto test = [&](const Polygon& p) {
        ++e.cases;
        Evolute ev = evolute(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto k = static_cast<std::ptrdiff_t>(i);
            const Point& o = ev.centers[i];
            if (squared_distance(o, p.at(k - 1)) != squared_distance(o, p.at(k)) ||
                squared_distance(o, p.at(k)) != squared_distance(o, p.at(k + 1))) {
                fail_case(e, p, "evolute center not equidistant");
                return;
            }
        }
    };
    for (const Draw& d : ctx.convex) test(d.polygon);
    for (const Draw& d : ctx.nonconvex) test(d.polygon);
    for (const auto& entry : corpus()) test(entry.polygon());
}

void check_winding_reversal(const SuiteContext& ctx, SuiteEntry& e) {
    auto test = [&](const Polygon& p) {
        ++e.cases;
        WindingNumber w = winding_number(p);
        WindingNumber r = winding_number(p.reversed());
        if (w.value != -r.value || std::abs(w.raw + r.raw) > 1e-9)
            fail_case(e, p, "winding not antisymmetric under reversal");
    };
    for (const Draw& d : ctx.convex) test(d.polygon);
    for (const Draw& d : ctx.nonconvex) test(d.polygon);
}

void check_winding_simple(const SuiteContext& ctx, SuiteEntry& e) {
    auto test = [&](const Polygon& p) {
        ++e.cases;
        WindingNumber w = winding_number(p);
        if (w.value != 1 || w.residual() > 1e-9)
            fail_case(e, p, "simple CCW polygon winding != 1");
    };
    for (const Draw& d : ctx.convex) test(d.polygon);
    for (const Draw& d : ctx.nonconvex) test(d.polygon);
}

void check_evolute_identity(const SuiteContext& ctx, SuiteEntry& e) {
    auto test = [&](const Polygon& p) {
        ++e.cases;
        try {
            EvoluteIdentity id = verify_evolute_identity(p);
            if (!id.holds || id.wind_p.residual() > 1e-6 ||
                id.wind_e.residual() > 1e-6)
                fail_case(e, p, "winding identity violated");
        } catch (const GeometryError& err) {
            fail_case(e, p, std::string("identity not evaluable: ") + err.what());
        }
    };
    for (const Draw& d : ctx.convex) test(d.polygon);
    for (const Draw& d : ctx.nonconvex) test(d.polygon);
    e.notes.push_back(
        "corpus heptagon/nonagon excluded: exact consecutive concyclic "
        "quadruples make the identity undefined (see corpus tags)");
}

void check_cusp_agreement(const SuiteContext& ctx, SuiteEntry& e) {
    auto test = [&](const Polygon& p) {
        ++e.cases;
        try {
            auto flags = cusp_flags(p);  // cross-validates internally
            for (std::size_t i = 0; i < p.size(); ++i)
                if (!flags[i]) {
                    fail_case(e, p, "cusp flag undefined on a generic polygon");
                    return;
                }
        } catch (const GeometryError& err) {
            fail_case(e, p, std::string("cusp classification failed: ") + err.what());
        }
    };
    for (const Draw& d : ctx.convex) test(d.polygon);
    for (const Draw& d : ctx.nonconvex) test(d.polygon);
}

void check_convex_evolute_winding(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.convex) {
        ++e.cases;
        EvoluteIdentity id = verify_evolute_identity(d.polygon);
        if (id.n_minus != 0)
            fail_case(e, d.polygon, "negative local extreme on a convex polygon");
        if (2 * id.wind_e.value != 2 - id.n_plus)
            fail_case(e, d.polygon, "wind(E) != (2 - N+)/2");
    }
}

// ---- triangulation ----

void check_delaunay_unique(const SuiteContext& ctx, SuiteEntry& e) {
    std::mt19937_64 rng(ctx.cfg.seed ^ 0xf1195eedULL);
    for (std::size_t di = 0; di < ctx.convex.size(); di += 7) {
        const Polygon& p = ctx.convex[di].polygon;
        ++e.cases;
        Triangulation base = delaunay(p);
        Triangulation anti = anti_delaunay(p);
        bool ok = true;
        for (int trial = 0; trial < 3 && ok; ++trial) {
            std::uint64_t s = rng() | 1;
            ok = delaunay(p, s).diagonals == base.diagonals &&
                 anti_delaunay(p, s).diagonals == anti.diagonals;
        }
        if (!ok) fail_case(e, p, "triangulation depends on flip order");
    }
}

void check_delaunay_circles(const SuiteContext& ctx, SuiteEntry& e,
                            bool anti) {
    for (const Draw& d : ctx.convex) {
        const Polygon& p = d.polygon;
        ++e.cases;
        Triangulation t = anti ? anti_delaunay(p) : delaunay(p);
        if (t.triangles.size() != p.size() - 2 ||
            t.diagonals.size() != p.size() - 3) {
            fail_case(e, p, "triangle/diagonal count wrong");
            continue;
        }
        for (const Triangle& tr : t.triangles) {
            auto c = classify_circle(p, tr[0], tr[1], tr[2]);
            if (c.containment !=
                (anti ? Containment::Full : Containment::Empty)) {
                fail_case(e, p, anti ? "anti-delaunay circle not full"
                                     : "delaunay circle not empty");
                break;
            }
        }
    }
}

void check_delaunay_bose_consistency(const SuiteContext& ctx, SuiteEntry& e) {
    for (std::size_t di = 0; di < ctx.convex.size(); di += 5) {
        const Polygon& p = ctx.convex[di].polygon;
        ++e.cases;
        BoseCounts b = bose_counts(p);
        long n = static_cast<long>(p.size());
        long empties = b.s_minus + b.t_minus + b.u_minus;
        long fulls = b.s_plus + b.t_plus + b.u_plus;
        long dt = static_cast<long>(delaunay(p).triangles.size());
        long adt = static_cast<long>(anti_delaunay(p).triangles.size());
        if (empties != n - 2 || empties != dt || fulls != n - 2 || fulls != adt)
            fail_case(e, p, "empty/full census disagrees with triangulations");
    }
}

void check_balanced_small(const SuiteContext&, SuiteEntry& e) {
    for (std::size_t n : {7UL, 8UL}) {
        auto all = enumerate_triangulations(n);
        std::size_t expect = n == 7 ? 42 : 132;
        ++e.cases;
        if (all.size() != expect) {
            ++e.failures;
            e.notes.push_back("triangulation census wrong at n=" +
                              std::to_string(n));
            continue;
        }
        for (const auto& diags : all) {
            ++e.cases;
            bool found = false;
            for (const auto& d : diags)
                if (diagonal_is_balanced(n, d.first, d.second)) found = true;
            if (!found) {
                ++e.failures;
                e.notes.push_back("unbalanced triangulation at n=" +
                                  std::to_string(n));
            }
        }
    }
    // the hexagon snowflake is the known failure mode
    ++e.cases;
    std::vector<Diagonal> snowflake{{1, 3}, {3, 5}, {1, 5}};
    bool found = false;
    for (const auto& d : snowflake)
        if (diagonal_is_balanced(6, d.first, d.second)) found = true;
    if (found) {
        ++e.failures;
        e.notes.push_back("hexagon snowflake unexpectedly balanced");
    }
}

void check_balanced_random(const SuiteContext& ctx, SuiteEntry& e) {
    std::mt19937_64 rng(ctx.cfg.seed ^ 0xba1a9cedULL);
    // uniform-ish random triangulation by recursive interval splitting
    auto random_triangulation = [&rng](std::size_t n) {
        std::vector<Diagonal> diags;
        auto split = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
            if (hi - lo < 2) return;
            std::size_t k = lo + 1 + rng() % (hi - lo - 1);
            if (k - lo >= 2) diags.push_back({lo, k});
            if (hi - k >= 2) diags.push_back({k, hi});
            self(self, lo, k);
            self(self, k, hi);
        };
        split(split, 0, n - 1);
        return diags;
    };
    for (std::size_t n = 9; n <= 14; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            auto diags = random_triangulation(n);
            ++e.cases;
            bool found = false;
            for (const auto& d : diags)
                if (diagonal_is_balanced(n, d.first, d.second)) found = true;
            if (!found) {
                ++e.failures;
                e.notes.push_back("missing balanced diagonal at n=" +
                                  std::to_string(n));
            }
        }
    }
}

void check_edge_kind_bruteforce(const SuiteContext& ctx, SuiteEntry& e) {
    // Def-style oracle: a Delaunay (anti-Delaunay) edge admits an empty
    // (full) witness circle through a third vertex.
    auto witness_exists = [](const Polygon& p, std::size_t i, std::size_t j,
                             bool full) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k == i || k == j) continue;
            if (orientation(p[i], p[j], p[k]) == Side::Collinear) continue;
            bool ok = true;
            for (std::size_t m = 0; m < p.size() && ok; ++m) {
                if (m == i || m == j || m == k) continue;
                CirclePosition pos = in_circle(p[i], p[j], p[k], p[m]);
                if (pos == CirclePosition::On) { ok = false; break; }
                if (full ? pos != CirclePosition::Inside
                         : pos != CirclePosition::Outside)
                    ok = false;
            }
            if (ok) return true;
        }
        return false;
    };
    for (std::size_t di = 0; di < ctx.convex.size(); di += 11) {
        const Polygon& p = ctx.convex[di].polygon;
        if (p.size() > 9) continue;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 2; j < p.size(); ++j) {
                if (i == 0 && j == p.size() - 1) continue;
                ++e.cases;
                EdgeKind kind = edge_kind(p, i, j);
                bool dt = witness_exists(p, i, j, false);
                bool adt = witness_exists(p, i, j, true);
                EdgeKind expect = dt && adt ? EdgeKind::Both
                                  : dt      ? EdgeKind::Delaunay
                                  : adt     ? EdgeKind::AntiDelaunay
                                            : EdgeKind::Neither;
                if (kind != expect) {
                    fail_case(e, p, "edge kind disagrees with witness search");
                    return;
                }
            }
    }
}

// ---- decomposition ----

void check_parts_generic_convex(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.convex) {
        const Polygon& p = d.polygon;
        if (p.size() < 6) continue;
        Decomposition dec = decompose(p, 0, 3);
        for (const Polygon* part : {&dec.part1, &dec.part2}) {
            ++e.cases;
            PredicateReport rep = polygon_predicates(*part);
            if (!rep.convex || !rep.generic)
                fail_case(e, p, "decomposition part lost convexity/genericity");
        }
    }
}

void check_decomposition_bounds(const SuiteContext& ctx, SuiteEntry& e,
                                const std::string& record_name) {
    for (std::size_t di = 0; di < ctx.convex.size(); ++di) {
        const Polygon& p = ctx.convex[di].polygon;
        const AuditSummary* audit = ctx.audit_of(di);
        if (!audit) continue;
        for (const auto& rep : audit->reports) {
            const InequalityRecord* r = rep.find(record_name);
            if (!r) continue;
            bool balanced = diagonal_is_balanced(p.size(), rep.diagonal.first,
                                                 rep.diagonal.second);
            bool is_kind_record = record_name == "global-delaunay-minus-2" ||
                                  record_name == "global-antidelaunay-minus-2";
            if (is_kind_record && !balanced) continue;  // logged, not asserted
            ++e.cases;
            if (!r->holds)
                fail_case(e, p, record_name + " violated at diagonal (" +
                                    std::to_string(rep.diagonal.first) + "," +
                                    std::to_string(rep.diagonal.second) + ")");
        }
    }
}

void check_label_persistence(const SuiteContext& ctx, SuiteEntry& e) {
    // A vertex keeping its whole neighborhood inside one part keeps its
    // parent-empty neighboring circle, hence its global Max label.
    for (const Draw& d : ctx.convex) {
        const Polygon& p = d.polygon;
        if (p.size() < 6) continue;
        Labels lab = full_labels(p);
        AuditSummary audit;
        for (std::size_t a = 0; a < p.size(); ++a) {
            std::size_t b = (a + 4) % p.size();
            std::size_t lo = std::min(a, b), hi = std::max(a, b);
            if (std::min(hi - lo + 1, p.size() - (hi - lo) + 1) < 4) continue;
            Decomposition dec = decompose(p, lo, hi);
            auto check_part = [&](const Polygon& part,
                                  const std::vector<std::size_t>& idx) {
                for (std::size_t t = 2; t + 2 < idx.size(); ++t) {
                    // interior of the part: whole neighborhood preserved
                    std::size_t parent_i = idx[t];
                    if (lab.global[parent_i] == Extremality::None) continue;
                    ++e.cases;
                    if (global_extremality(part, t) != lab.global[parent_i])
                        fail_case(e, p, "extremal circle lost after cutting");
                }
            };
            check_part(dec.part1, dec.part1_indices);
            check_part(dec.part2, dec.part2_indices);
        }
        (void)audit;
    }
}

void check_certificates(const SuiteContext& ctx, SuiteEntry& e) {
    for (const Draw& d : ctx.convex) {
        const Polygon& p = d.polygon;
        if (p.size() < 6) continue;
        ++e.cases;
        try {
            FourVertexCertificate cert = four_vertex_via_decomposition(p);
            if (!cert.holds)
                fail_case(e, p, "certificate failed to establish the bounds");
            if (p.size() >= 10 &&
                std::max({cert.s_minus.depth(), cert.s_plus.depth(),
                          cert.l_minus.depth()}) < 2)
                fail_case(e, p, "certificate depth too small");
        } catch (const GeometryError& err) {
            fail_case(e, p, std::string("certificate error: ") + err.what());
        }
    }
}

// ---- corpus regressions ----

void check_corpus_integrity(const SuiteContext& ctx, SuiteEntry& e) {
    struct Expect {
        const char* id;
        std::size_t columns;
        const char* first_x;
        const char* first_y;
    };
    const Expect expects[] = {
        {"fig2.7", 6, "18.38", "-2.05"},   {"fig4.1", 12, "1.46", "5.59"},
        {"fig4.2", 12, "1.78", "4.76"},    {"fig4.6", 15, "0.6", "5.12"},
        {"sec3.1-7gon", 7, "2", "0"},      {"sec3.1-9gon", 9, "0", "1"},
    };
    for (const auto& ex : expects) {
        ++e.cases;
        const CorpusEntry& c = corpus_entry(ex.id);
        if (c.columns() != ex.columns || c.x_row[0] != ex.first_x ||
            c.y_row[0] != ex.first_y) {
            ++e.failures;
            e.notes.push_back(std::string("corpus drift in ") + ex.id);
        }
        // decimal round trip must be bit-exact
        for (std::size_t i = 0; i < c.columns(); ++i) {
            Rational x = Rational::from_decimal(c.x_row[i]);
            DecimalString back = rational_to_decimal(x);
            if (!back.exact ||
                !(Rational::from_decimal(back.text) == x)) {
                ++e.failures;
                e.notes.push_back("round-trip failure in " + std::string(ex.id));
            }
        }
    }
    (void)ctx;
}

void check_corpus_hexagon(const SuiteContext& ctx, SuiteEntry& e) {
    ++e.cases;
    const auto& fx = fixture_for(ctx.fixtures, "fig2.7");
    Polygon p = corpus_entry("fig2.7").polygon();
    PredicateReport rep = polygon_predicates(p);
    long radial = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (radial_extremality(p, i) != Extremality::None) ++radial;
    if (!rep.convex || !rep.generic)
        fail_case(e, p, "hexagon corpus lost convexity/genericity");
    if (rep.coherent != (fx.at("coherent") != 0))
        fail_case(e, p, "hexagon coherence drifted");
    if (radial != fx.at("radial_extremal"))
        fail_case(e, p, "hexagon radial census drifted");
    if (fx.at("radial_extremal") != fx.at("radial_published"))
        e.notes.push_back(
            "narrative-mismatch: published value claims " +
            std::to_string(fx.at("radial_published")) +
            " radial extremes; exact census on the printed coordinates gives " +
            std::to_string(fx.at("radial_extremal")));
}

void check_corpus_12gon_counterexample(const SuiteContext& ctx, SuiteEntry& e) {
    ++e.cases;
    const auto& fx = fixture_for(ctx.fixtures, "fig4.1");
    Polygon p = corpus_entry("fig4.1").polygon();
    Labels lab = full_labels(p);
    Diagonal d = *fx.diagonal;
    Decomposition dec = decompose(p, d.first, d.second);
    Labels lab1 = full_labels(dec.part1);
    Labels lab2 = full_labels(dec.part2);
    if (lab.s_minus != fx.at("s_minus") || lab.s_plus != fx.at("s_plus") ||
        lab1.s_minus != fx.at("s_minus_part1") ||
        lab2.s_minus != fx.at("s_minus_part2") ||
        lab1.s_plus != fx.at("s_plus_part1") ||
        lab2.s_plus != fx.at("s_plus_part2"))
        fail_case(e, p, "pinned counterexample counts drifted");
    // the naive sum bound must fail on one global species
    if (!(lab.s_plus > lab1.s_plus + lab2.s_plus ||
          lab.s_minus > lab1.s_minus + lab2.s_minus))
        fail_case(e, p, "naive sum failure no longer exhibited");
    // while the -3 bound holds for both
    if (lab.s_minus < lab1.s_minus + lab2.s_minus - 3 ||
        lab.s_plus < lab1.s_plus + lab2.s_plus - 3)
        fail_case(e, p, "-3 bound violated on the counterexample");
    if (fx.at("s_minus") != fx.at("s_minus_published"))
        e.notes.push_back(
            "narrative-mismatch: published story reports s-=" +
            std::to_string(fx.at("s_minus_published")) +
            "; exact census gives s-=" + std::to_string(fx.at("s_minus")) +
            " and s+=" + std::to_string(fx.at("s_plus")) +
            " (the stated story holds with empty/full interchanged)");
}

void check_corpus_12gon_equality(const SuiteContext& ctx, SuiteEntry& e) {
    ++e.cases;
    const auto& fx = fixture_for(ctx.fixtures, "fig4.2");
    Polygon p = corpus_entry("fig4.2").polygon();
    Diagonal d = *fx.diagonal;
    Decomposition dec = decompose(p, d.first, d.second);
    Labels lab = full_labels(p);
    Labels lab1 = full_labels(dec.part1);
    Labels lab2 = full_labels(dec.part2);
    if (lab.s_minus != fx.at("s_minus_parent") ||
        lab1.s_minus != fx.at("s_minus_part1") ||
        lab2.s_minus != fx.at("s_minus_part2") ||
        lab.l_minus != fx.at("l_minus_parent") ||
        lab1.l_minus != fx.at("l_minus_part1") ||
        lab2.l_minus != fx.at("l_minus_part2"))
        fail_case(e, p, "pinned equality-example counts drifted");
    if (!(lab.s_minus > lab1.s_minus + lab2.s_minus))
        fail_case(e, p, "global naive sum failure lost");
    if (lab.l_minus != lab1.l_minus + lab2.l_minus)
        fail_case(e, p, "local equality lost");
}

void check_corpus_15gon_tightness(const SuiteContext& ctx, SuiteEntry& e) {
    ++e.cases;
    const auto& fx = fixture_for(ctx.fixtures, "fig4.6");
    Polygon p = corpus_entry("fig4.6").polygon();
    PredicateReport rep = polygon_predicates(p);
    if (rep.convex)
        e.notes.push_back("printed 15-gon unexpectedly became convex");
    Diagonal d = *fx.diagonal;
    Decomposition dec = decompose(p, d.first, d.second);
    Labels lab = full_labels(p);
    Labels lab1 = full_labels(dec.part1);
    Labels lab2 = full_labels(dec.part2);
    if (lab.s_minus != fx.at("s_minus_parent") ||
        lab1.s_minus != fx.at("s_minus_part1") ||
        lab2.s_minus != fx.at("s_minus_part2"))
        fail_case(e, p, "pinned tightness counts drifted");
    long slack = lab.s_minus - (lab1.s_minus + lab2.s_minus - 3);
    if (slack != 0)
        fail_case(e, p, "pinned diagonal no longer achieves slack 0");
    if (fx.at("s_minus_parent") != fx.at("s_minus_published"))
        e.notes.push_back(
            "narrative-mismatch: published worked example has s-=" +
            std::to_string(fx.at("s_minus_published")) +
            " on a convex 15-gon; the printed coordinates are non-convex at "
            "vertex 13 (turn determinant -9/1000) and give s-=" +
            std::to_string(fx.at("s_minus_parent")) +
            ", with slack 0 achieved through parts (2,5)");
}

void check_corpus_heptagon(const SuiteContext& ctx, SuiteEntry& e) {
    ++e.cases;
    Polygon p = corpus_entry("sec3.1-7gon").polygon();
    PredicateReport rep = polygon_predicates(p);
    if (rep.generic) {
        fail_case(e, p, "heptagon unexpectedly generic");
        return;
    }
    Evolute ev = evolute(p);
    // exact pinned centers
    const std::pair<long, long> num_den[7][2] = {
        {{0, 1}, {9, 4}},  {{1, 2}, {2, 1}},  {{-1, 2}, {3, 2}},
        {{0, 1}, {5, 2}},  {{1, 2}, {3, 2}},  {{-1, 2}, {2, 1}},
        {{0, 1}, {9, 4}},
    };
    for (int i = 0; i < 7; ++i) {
        Point expect{Rational(num_den[i][0].first, num_den[i][0].second),
                     Rational(num_den[i][1].first, num_den[i][1].second)};
        if (!(ev.centers[i] == expect)) {
            fail_case(e, p, "heptagon evolute centers drifted");
            return;
        }
    }
    if (!(ev.centers[6] == ev.centers[0]))
        fail_case(e, p, "expected coincident adjacent centers (6,0)");
    if (winding_number(p).value != 1)
        fail_case(e, p, "heptagon winding != 1");
    if (evolute_winding(ev).value != -2)
        fail_case(e, p, "collapsed evolute winding != -2");
    // local labels on the defined range; cusp agreement there
    const Extremality expect_local[5] = {Extremality::Max, Extremality::Min,
                                         Extremality::Max, Extremality::Min,
                                         Extremality::Max};
    for (std::size_t i = 1; i <= 5; ++i)
        if (local_extremality(p, i) != expect_local[i - 1]) {
            fail_case(e, p, "heptagon local labels drifted");
            return;
        }
    for (std::size_t i : {0UL, 6UL}) {
        try {
            local_extremality(p, i);
            fail_case(e, p, "expected on-circle degeneracy at the seam");
        } catch (const GeometryError& err) {
            if (err.fault() != Fault::OnCircleDegenerate)
                fail_case(e, p, "wrong degeneracy fault at the seam");
        }
    }
    auto flags = cusp_flags(p);
    for (std::size_t i = 1; i <= 5; ++i)
        if (!flags[i] || *flags[i] != CuspFlag::Cusp)
            fail_case(e, p, "heptagon cusp census drifted");
    for (std::size_t i : {0UL, 6UL})
        if (flags[i]) fail_case(e, p, "cusp defined across a zero evolute edge");
    e.notes.push_back(
        "heptagon carries an exact consecutive concyclic quadruple "
        "(5,6,0,1); labels undefined there by construction");
    (void)ctx;
}

void check_corpus_nonagon(const SuiteContext& ctx, SuiteEntry& e) {
    ++e.cases;
    Polygon p = corpus_entry("sec3.1-9gon").polygon();
    PredicateReport rep = polygon_predicates(p);
    if (rep.convex || rep.generic) {
        fail_case(e, p, "nonagon shape expectations drifted");
        return;
    }
    Evolute ev = evolute(p);
    if (!(ev.centers[7] == ev.centers[8]))
        fail_case(e, p, "expected coincident adjacent centers (7,8)");
    if (!(ev.centers[7] == Point{Rational(1), Rational(3)}))
        fail_case(e, p, "nonagon evolute center (1,3) drifted");
    if (winding_number(p).value != 1) fail_case(e, p, "nonagon winding != 1");
    if (evolute_winding(ev).value != 0)
        fail_case(e, p, "collapsed evolute winding != 0");
    const Extremality expect_local[7] = {
        Extremality::None, Extremality::Max, Extremality::Min,
        Extremality::Max,  Extremality::Min, Extremality::Max,
        Extremality::None};
    for (std::size_t i = 0; i <= 6; ++i)
        if (local_extremality(p, i) != expect_local[i]) {
            fail_case(e, p, "nonagon local labels drifted");
            return;
        }
    auto flags = cusp_flags(p);
    for (std::size_t i = 0; i <= 6; ++i) {
        bool cusp = expect_local[i] != Extremality::None;
        if (!flags[i] || (*flags[i] == CuspFlag::Cusp) != cusp)
            fail_case(e, p, "nonagon cusp census drifted");
    }
    for (std::size_t i : {7UL, 8UL})
        if (flags[i]) fail_case(e, p, "cusp defined across a zero evolute edge");
    (void)ctx;
}

// ---- generator meta ----

void check_generator_determinism(const SuiteContext& ctx, SuiteEntry& e) {
    for (PolygonKind kind :
         {PolygonKind::ConvexGeneric, PolygonKind::ConvexGenericCoherent,
          PolygonKind::SimpleNonconvex}) {
        ++e.cases;
        GeneratorConfig g;
        g.n = 8;
        g.seed = ctx.cfg.seed + 42;
        g.kind = kind;
        Polygon a = generate(g);
        Polygon b = generate(g);
        if (!(a.points() == b.points())) {
            ++e.failures;
            e.notes.push_back("generator not deterministic");
        }
    }
}

void check_generator_acceptance(const SuiteContext& ctx, SuiteEntry& e) {
    for (const auto* pool : {&ctx.convex, &ctx.coherent, &ctx.nonconvex}) {
        for (const Draw& d : *pool) {
            ++e.cases;
            const PredicateReport& r = d.predicates;
            bool ok = r.simple && r.generic && r.radius_tie_witness.empty();
            switch (d.config.kind) {
                case PolygonKind::ConvexGeneric: ok = ok && r.convex; break;
                case PolygonKind::ConvexGenericCoherent:
                    ok = ok && r.convex && r.coherent;
                    break;
                case PolygonKind::SimpleNonconvex: ok = ok && !r.convex; break;
            }
            if (!ok) fail_case(e, d.polygon, "draw violates its kind contract");
        }
    }
}

std::vector<Check> make_checks() {
    std::vector<Check> checks;
    auto add = [&](std::string tag, CheckFn fn) {
        checks.push_back(Check{std::move(tag), std::move(fn)});
    };
    add("incircle-permutation", check_incircle_permutation);
    add("circumcenter-equidistant", check_circumcenter_equidistant);
    add("angle-sum", check_angle_sum);
    add("halfplane-circle-exchange", check_halfplane_exchange);
    add("local-max-min-balance", check_local_balance);
    add("extremal-existence", check_existence);
    add("global-implies-local", check_global_implies_local);
    add("coherent-local-radial", check_coherent_local_radial);
    add("bose-identities", check_bose);
    add("four-vertex-global", check_four_vertex_global);
    add("four-vertex-local", check_four_vertex_local);
    add("four-vertex-radial", check_four_vertex_radial);
    add("removal-global-max", [](const SuiteContext& c, SuiteEntry& e) {
        check_removal(c, e, Extremality::Max);
    });
    add("removal-global-min", [](const SuiteContext& c, SuiteEntry& e) {
        check_removal(c, e, Extremality::Min);
    });
    add("removal-local-max", check_removal_local);
    add("witness-global-asymmetry", check_witness_asymmetry);
    add("witness-local-not-global", check_witness_local_not_global);
    add("witness-local-not-radial", check_witness_local_not_radial);
    add("evolute-equidistant", check_evolute_equidistant);
    add("winding-reversal", check_winding_reversal);
    add("winding-simple", check_winding_simple);
    add("evolute-winding-identity", check_evolute_identity);
    add("cusp-local-agreement", check_cusp_agreement);
    add("convex-evolute-winding", check_convex_evolute_winding);
    add("delaunay-unique", check_delaunay_unique);
    add("delaunay-empty-circles", [](const SuiteContext& c, SuiteEntry& e) {
        check_delaunay_circles(c, e, false);
    });
    add("antidelaunay-full-circles", [](const SuiteContext& c, SuiteEntry& e) {
        check_delaunay_circles(c, e, true);
    });
    add("delaunay-bose-consistency", check_delaunay_bose_consistency);
    add("balanced-diagonal-small-n", check_balanced_small);
    add("balanced-diagonal-random", check_balanced_random);
    add("edge-kind-bruteforce", check_edge_kind_bruteforce);
    add("decomp-parts-generic-convex", check_parts_generic_convex);
    add("decomp-global-bound", [](const SuiteContext& c, SuiteEntry& e) {
        check_decomposition_bounds(c, e, "global-minus-3");
    });
    add("decomp-local-bound", [](const SuiteContext& c, SuiteEntry& e) {
        check_decomposition_bounds(c, e, "local-minus-2");
    });
    add("decomp-delaunay-bound", [](const SuiteContext& c, SuiteEntry& e) {
        check_decomposition_bounds(c, e, "global-delaunay-minus-2");
    });
    add("decomp-antidelaunay-bound", [](const SuiteContext& c, SuiteEntry& e) {
        check_decomposition_bounds(c, e, "global-antidelaunay-minus-2");
    });
    add("decomp-label-persistence", check_label_persistence);
    add("four-vertex-certificates", check_certificates);
    add("corpus-integrity", check_corpus_integrity);
    add("corpus-hexagon", check_corpus_hexagon);
    add("corpus-counterexample-12gon", check_corpus_12gon_counterexample);
    add("corpus-equality-12gon", check_corpus_12gon_equality);
    add("corpus-tightness-15gon", check_corpus_15gon_tightness);
    add("corpus-heptagon", check_corpus_heptagon);
    add("corpus-nonagon", check_corpus_nonagon);
    add("generator-determinism", check_generator_determinism);
    add("generator-acceptance", check_generator_acceptance);
    return checks;
}

}  // namespace

std::vector<std::string> suite_tags() {
    std::vector<std::string> tags;
    for (const auto& c : make_checks()) tags.push_back(c.tag);
    return tags;
}

bool SuiteReport::all_passed() const {
    for (const auto& e : entries)
        if (!e.skipped && e.failures > 0) return false;
    return true;
}

const SuiteEntry* SuiteReport::find(const std::string& tag) const {
    for (const auto& e : entries)
        if (e.tag == tag) return &e;
    return nullptr;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteContext ctx{cfg, {}, {}, {}, {}, {}};
    ctx.convex = make_pool(cfg, PolygonKind::ConvexGeneric, cfg.count, 4, 1);
    ctx.coherent = make_pool(cfg, PolygonKind::ConvexGenericCoherent,
                             std::max<std::size_t>(cfg.count / 2, 16), 4, 2);
    ctx.nonconvex = make_pool(cfg, PolygonKind::SimpleNonconvex,
                              std::max<std::size_t>(cfg.count / 4, 16), 5, 3);
    ctx.fixtures = load_fixtures(
        cfg.fixtures_path.empty() ? default_fixture_path() : cfg.fixtures_path);

    SuiteReport report;
    for (const Check& check : make_checks()) {
        if (!cfg.tags.empty() &&
            std::find(cfg.tags.begin(), cfg.tags.end(), check.tag) ==
                cfg.tags.end())
            continue;
        SuiteEntry entry;
        entry.tag = check.tag;
        try {
            check.fn(ctx, entry);
        } catch (const std::exception& ex) {
            ++entry.failures;
            entry.notes.push_back(std::string("check aborted: ") + ex.what());
        }
        report.entries.push_back(std::move(entry));
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

}  // namespace fourvertex
