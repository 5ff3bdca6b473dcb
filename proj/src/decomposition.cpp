#include "fourvertex/decomposition.hpp"

#include <algorithm>

namespace fourvertex {

namespace {

bool point_in_polygon(const Polygon& p, const Point& q) {
    // exact even-odd ray cast, ray toward +x
    bool inside = false;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& c = p[i];
        const Point& d = p[(i + 1) % n];
        bool c_above = c.y > q.y, d_above = d.y > q.y;
        if (c_above == d_above) continue;
        // x coordinate where the edge crosses the horizontal through q
        Rational xin = c.x + (q.y - c.y) * (d.x - c.x) / (d.y - c.y);
        if (xin > q.x) inside = !inside;
    }
    return inside;
}

bool diagonal_interior(const Polygon& p, std::size_t a, std::size_t b) {
    const std::size_t n = p.size();
    const Point& A = p[a];
    const Point& B = p[b];
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        if (i == a || i == b || j == a || j == b) continue;
        if (segments_cross(A, B, p[i], p[j])) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i == a || i == b) continue;
        if (orientation(A, B, p[i]) == Side::Collinear) {
            Rational lox = std::min(A.x, B.x), hix = std::max(A.x, B.x);
            Rational loy = std::min(A.y, B.y), hiy = std::max(A.y, B.y);
            if (lox <= p[i].x && p[i].x <= hix && loy <= p[i].y && p[i].y <= hiy)
                return false;  // a vertex sits on the diagonal
        }
    }
    Point mid{(A.x + B.x) / 2, (A.y + B.y) / 2};
    return point_in_polygon(p, mid);
}

}  // namespace

Decomposition decompose(const Polygon& p, std::size_t a, std::size_t b) {
    const std::size_t n = p.size();
    if (a >= n || b >= n || a == b)
        throw GeometryError(Fault::AdjacentEndpoints, "bad diagonal indices",
                            {a, b});
    if ((a + 1) % n == b || (b + 1) % n == a)
        throw GeometryError(Fault::AdjacentEndpoints,
                            "diagonal endpoints are adjacent", {a, b});

    std::vector<std::size_t> idx1, idx2;
    for (std::size_t i = a;; i = (i + 1) % n) {
        idx1.push_back(i);
        if (i == b) break;
    }
    for (std::size_t i = b;; i = (i + 1) % n) {
        idx2.push_back(i);
        if (i == a) break;
    }
    if (idx1.size() < 4 || idx2.size() < 4)
        throw GeometryError(Fault::PartTooSmall,
                            "both parts need at least 4 vertices", {a, b});
    if (!diagonal_interior(p, a, b))
        throw GeometryError(Fault::DiagonalOutside,
                            "diagonal leaves the polygon", {a, b});

    auto build = [&](const std::vector<std::size_t>& idx) {
        std::vector<Point> pts;
        pts.reserve(idx.size());
        for (std::size_t i : idx) pts.push_back(p[i]);
        return Polygon::closed(std::move(pts), Polygon::Normalize::AsGiven);
    };
    Diagonal d = a < b ? Diagonal{a, b} : Diagonal{b, a};
    return Decomposition{p, d, build(idx1), build(idx2), std::move(idx1),
                         std::move(idx2)};
}

const InequalityRecord* InequalityReport::find(const std::string& name) const {
    for (const auto& r : records)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

struct ParentCounts {
    long s_minus = 0, s_plus = 0, l_minus = 0;
    bool convex = false;
};

long need(const std::optional<long>& v, const char* what) {
    if (!v)
        throw GeometryError(Fault::OnCircleWitness,
                            std::string("count undefined: ") + what);
    return *v;
}

ParentCounts parent_counts(const Polygon& p, const AnalyzeOptions& opt) {
    AnalyzeOptions sub = opt;
    sub.with_bose = false;
    ExtremalityReport rep = analyze(p, sub);
    return ParentCounts{need(rep.s_minus, "s- parent"),
                        need(rep.s_plus, "s+ parent"),
                        need(rep.l_minus, "l- parent"), rep.predicates.convex};
}

InequalityReport build_report(const Decomposition& d, const AnalyzeOptions& opt,
                              const ParentCounts& parent, EdgeKind kind) {
    AnalyzeOptions sub = opt;
    sub.with_bose = false;
    ExtremalityReport p1 = analyze(d.part1, sub);
    ExtremalityReport p2 = analyze(d.part2, sub);

    InequalityReport rep;
    rep.diagonal = d.diagonal;
    rep.part_sizes = {d.part1.size(), d.part2.size()};
    rep.diagonal_kind = kind;
    rep.s_minus_parent = parent.s_minus;
    rep.s_minus_part1 = need(p1.s_minus, "s- part1");
    rep.s_minus_part2 = need(p2.s_minus, "s- part2");
    rep.s_plus_parent = parent.s_plus;
    rep.s_plus_part1 = need(p1.s_plus, "s+ part1");
    rep.s_plus_part2 = need(p2.s_plus, "s+ part2");
    rep.l_minus_parent = parent.l_minus;
    rep.l_minus_part1 = need(p1.l_minus, "l- part1");
    rep.l_minus_part2 = need(p2.l_minus, "l- part2");

    auto add = [&](const std::string& name, long lhs, long rhs) {
        rep.records.push_back(
            InequalityRecord{name, lhs, rhs, lhs - rhs, lhs >= rhs});
    };
    add("global-minus-3", rep.s_minus_parent,
        rep.s_minus_part1 + rep.s_minus_part2 - 3);
    if (d.parent.size() == 6)
        add("global-hexagon-minus-2", rep.s_minus_parent,
            rep.s_minus_part1 + rep.s_minus_part2 - 2);
    if (kind == EdgeKind::Delaunay)
        add("global-delaunay-minus-2", rep.s_minus_parent,
            rep.s_minus_part1 + rep.s_minus_part2 - 2);
    if (kind == EdgeKind::AntiDelaunay)
        add("global-antidelaunay-minus-2", rep.s_plus_parent,
            rep.s_plus_part1 + rep.s_plus_part2 - 2);
    add("local-minus-2", rep.l_minus_parent,
        rep.l_minus_part1 + rep.l_minus_part2 - 2);
    return rep;
}

}  // namespace

InequalityReport verify_inequalities(const Decomposition& d,
                                     const AnalyzeOptions& opt) {
    ParentCounts parent = parent_counts(d.parent, opt);
    EdgeKind kind =
        parent.convex ? edge_kind(d.parent, d.diagonal.first, d.diagonal.second)
                      : EdgeKind::Neither;
    return build_report(d, opt, parent, kind);
}

AuditSummary audit_all_diagonals(const Polygon& p, const AnalyzeOptions& opt) {
    AuditSummary out;
    const std::size_t n = p.size();
    ParentCounts parent = parent_counts(p, opt);
    // classify all diagonals once instead of re-triangulating per cut
    std::optional<Triangulation> dt, adt;
    if (parent.convex) {
        dt = delaunay(p);
        adt = anti_delaunay(p);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            std::size_t k = b - a;
            if (std::min(k + 1, n - k + 1) < 4) continue;
            EdgeKind kind = EdgeKind::Neither;
            if (parent.convex) {
                bool in_dt = dt->has_diagonal(a, b);
                bool in_adt = adt->has_diagonal(a, b);
                kind = in_dt && in_adt ? EdgeKind::Both
                       : in_dt         ? EdgeKind::Delaunay
                       : in_adt        ? EdgeKind::AntiDelaunay
                                       : EdgeKind::Neither;
            }
            InequalityReport rep;
            try {
                rep = build_report(decompose(p, a, b), opt, parent, kind);
            } catch (const GeometryError& e) {
                if (e.fault() == Fault::DiagonalOutside) continue;
                throw;
            }
            for (const auto& r : rep.records) {
                auto it = out.worst_slack.find(r.name);
                if (it == out.worst_slack.end() || r.slack < it->second)
                    out.worst_slack[r.name] = r.slack;
            }
            out.reports.push_back(std::move(rep));
        }
    return out;
}

int CertificateNode::depth() const {
    int d = 0;
    for (const auto& c : children) d = std::max(d, c.depth());
    return d + 1;
}

namespace {

enum class GlobalKind { SMinus, SPlus };

long count_global(const Polygon& p, GlobalKind kind) {
    long c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Extremality e = global_extremality(p, i);
        if (kind == GlobalKind::SMinus ? e == Extremality::Max
                                       : e == Extremality::Min)
            ++c;
    }
    return c;
}

long count_local_max(const Polygon& p) {
    long c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (local_extremality(p, i) == Extremality::Max) ++c;
    return c;
}

// Any balanced diagonal of a hexagon: the long diagonal (0, 3).
Diagonal hexagon_cut() { return {0, 3}; }

CertificateNode prove_global(const Polygon& p, GlobalKind kind) {
    CertificateNode node;
    node.n = p.size();
    node.count = count_global(p, kind);
    node.bound = 2;
    if (p.size() <= 5) {
        node.rule = "base";
        // quadrilaterals carry exactly two of each label; pentagons at least
        if (p.size() == 4 ? node.count != 2 : node.count < 2)
            throw GeometryError(Fault::RecursionBaseViolated,
                                "base polygon misses its guaranteed count");
        node.checked = true;
        return node;
    }
    Diagonal d;
    if (p.size() == 6) {
        node.rule = "hexagon-cut";
        d = hexagon_cut();
    } else {
        node.rule = kind == GlobalKind::SMinus ? "delaunay-cut"
                                               : "antidelaunay-cut";
        Triangulation t = kind == GlobalKind::SMinus ? delaunay(p)
                                                     : anti_delaunay(p);
        d = balanced_diagonal(t);
    }
    node.diagonal = d;
    Decomposition dec = decompose(p, d.first, d.second);
    node.children.push_back(prove_global(dec.part1, kind));
    node.children.push_back(prove_global(dec.part2, kind));
    long c1 = node.children[0].count;
    long c2 = node.children[1].count;
    // the -2 bound instance this recursion step relies on
    if (node.count < c1 + c2 - 2)
        throw GeometryError(Fault::RecursionBaseViolated,
                            "decomposition bound failed at an inner node",
                            {d.first, d.second});
    node.checked = node.count >= node.bound &&
                   node.children[0].checked && node.children[1].checked;
    if (!node.checked)
        throw GeometryError(Fault::RecursionBaseViolated,
                            "certificate bound not met");
    return node;
}

CertificateNode prove_local(const Polygon& p) {
    CertificateNode node;
    node.n = p.size();
    node.count = count_local_max(p);
    node.bound = 2;
    if (p.size() <= 5) {
        node.rule = "base";
        if (p.size() == 4 ? node.count != 2 : node.count < 2)
            throw GeometryError(Fault::RecursionBaseViolated,
                                "base polygon misses its local count");
        node.checked = true;
        return node;
    }
    Diagonal d =
        p.size() == 6 ? hexagon_cut() : balanced_diagonal(delaunay(p));
    node.rule = p.size() == 6 ? "hexagon-cut" : "balanced-cut";
    node.diagonal = d;
    Decomposition dec = decompose(p, d.first, d.second);
    node.children.push_back(prove_local(dec.part1));
    node.children.push_back(prove_local(dec.part2));
    long c1 = node.children[0].count;
    long c2 = node.children[1].count;
    if (node.count < c1 + c2 - 2)
        throw GeometryError(Fault::RecursionBaseViolated,
                            "local bound failed at an inner node",
                            {d.first, d.second});
    node.checked = node.count >= node.bound &&
                   node.children[0].checked && node.children[1].checked;
    if (!node.checked)
        throw GeometryError(Fault::RecursionBaseViolated,
                            "local certificate bound not met");
    return node;
}

}  // namespace

FourVertexCertificate four_vertex_via_decomposition(const Polygon& p) {
    if (p.size() < 6)
        throw GeometryError(Fault::TooFewVertices,
                            "certificate recursion starts at n >= 6");
    PredicateReport pred = polygon_predicates(p);
    if (!pred.convex)
        throw GeometryError(Fault::NotConvex, "certificate needs convexity",
                            pred.nonconvex_witness);
    if (!pred.generic) {
        std::vector<std::size_t> w;
        if (!pred.concyclic_witness.empty())
            w.assign(pred.concyclic_witness[0].begin(),
                     pred.concyclic_witness[0].end());
        else if (!pred.collinear_witness.empty())
            w.assign(pred.collinear_witness[0].begin(),
                     pred.collinear_witness[0].end());
        throw GeometryError(Fault::NotGeneric, "certificate needs genericity", w);
    }

    FourVertexCertificate cert;
    cert.s_minus = prove_global(p, GlobalKind::SMinus);
    cert.s_plus = prove_global(p, GlobalKind::SPlus);
    cert.l_minus = prove_local(p);

    long l_minus_count = cert.l_minus.count;
    long l_plus_count = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (local_extremality(p, i) == Extremality::Min) ++l_plus_count;

    cert.s_total = cert.s_minus.count + cert.s_plus.count;
    cert.l_total = l_minus_count + l_plus_count;
    cert.holds = cert.s_minus.checked && cert.s_plus.checked &&
                 cert.l_minus.checked && cert.s_total >= 4 && cert.l_total >= 4;
    return cert;
}

}  // namespace fourvertex
