#include "fourvertex/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fourvertex {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim
        std::size_t a = cell.find_first_not_of(" \t\r");
        std::size_t b = cell.find_last_not_of(" \t\r");
        if (a == std::string::npos) continue;
        out.push_back(cell.substr(a, b - a + 1));
    }
    return out;
}

}  // namespace

std::vector<Point> ParsedPolygonFile::points() const {
    if (x_row.size() != y_row.size())
        throw GeometryError(Fault::ParseError, "row lengths differ");
    std::vector<Point> pts;
    pts.reserve(x_row.size());
    for (std::size_t i = 0; i < x_row.size(); ++i)
        pts.push_back(Point{Rational::from_decimal(x_row[i]),
                            Rational::from_decimal(y_row[i])});
    return pts;
}

Polygon ParsedPolygonFile::polygon(Polygon::Normalize norm) const {
    return Polygon::closed(points(), norm);
}

ParsedPolygonFile parse_polygon_csv(std::istream& in) {
    ParsedPolygonFile f;
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto row = split_row(line);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.size() != 2)
        throw GeometryError(Fault::ParseError,
                            "expected exactly two coordinate rows, got " +
                                std::to_string(rows.size()));
    f.x_row = std::move(rows[0]);
    f.y_row = std::move(rows[1]);
    if (f.x_row.size() != f.y_row.size())
        throw GeometryError(Fault::ParseError, "row lengths differ");
    return f;
}

ParsedPolygonFile parse_polygon_json(std::istream& in) {
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw GeometryError(Fault::ParseError, e.what());
    }
    if (j.is_object() && j.contains("vertices")) j = j["vertices"];
    if (!j.is_array())
        throw GeometryError(Fault::ParseError, "expected a JSON array of [x, y]");
    ParsedPolygonFile f;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw GeometryError(Fault::ParseError, "vertex must be a [x, y] pair");
        auto cell = [](const Json& v) -> std::string {
            if (v.is_string()) return v.get<std::string>();
            if (v.is_number_integer())
                return std::to_string(v.get<long long>());
            throw GeometryError(Fault::ParseError,
                                "coordinates must be decimal strings");
        };
        f.x_row.push_back(cell(item[0]));
        f.y_row.push_back(cell(item[1]));
    }
    return f;
}

ParsedPolygonFile parse_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GeometryError(Fault::ParseError, "cannot open " + path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return parse_polygon_json(in);
    return parse_polygon_csv(in);
}

std::string decimal_or_approx(const Rational& r) {
    DecimalString d = rational_to_decimal(r);
    return d.exact ? d.text : d.text + "~";
}

std::string points_to_csv(const std::vector<Point>& pts) {
    std::ostringstream x, y;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) { x << ","; y << ","; }
        x << decimal_or_approx(pts[i].x);
        y << decimal_or_approx(pts[i].y);
    }
    return x.str() + "\n" + y.str() + "\n";
}

std::string polygon_to_csv(const Polygon& p) { return points_to_csv(p.points()); }

Json polygon_to_json(const Polygon& p) {
    Json verts = Json::array();
    for (const Point& pt : p.points())
        verts.push_back(Json::array({decimal_or_approx(pt.x),
                                     decimal_or_approx(pt.y)}));
    return Json{{"n", p.size()}, {"vertices", verts}};
}

namespace {

const char* extremality_name(Extremality e) {
    switch (e) {
        case Extremality::Max: return "max";
        case Extremality::Min: return "min";
        case Extremality::None: return "none";
    }
    return "?";
}

Json label_row(const std::vector<std::optional<Extremality>>& v) {
    Json out = Json::array();
    for (const auto& e : v)
        out.push_back(e ? Json(extremality_name(*e)) : Json(nullptr));
    return out;
}

template <typename T>
Json opt_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json witness_list(const std::vector<std::size_t>& w) {
    Json out = Json::array();
    for (auto i : w) out.push_back(i);
    return out;
}

template <std::size_t N>
Json witness_list(const std::vector<std::array<std::size_t, N>>& w) {
    Json out = Json::array();
    for (const auto& arr : w) {
        Json row = Json::array();
        for (auto i : arr) row.push_back(i);
        out.push_back(row);
    }
    return out;
}

}  // namespace

Json report_to_json(const ExtremalityReport& rep) {
    const PredicateReport& pr = rep.predicates;
    Json predicates{
        {"convex", pr.convex},
        {"simple", pr.simple},
        {"ccw", pr.ccw},
        {"generic", pr.generic},
        {"coherent", pr.coherent},
        {"genericity_mode", pr.genericity_mode == GenericityCheck::Full
                                ? "full"
                                : "consecutive-only"},
        {"witnesses",
         Json{{"nonconvex", witness_list(pr.nonconvex_witness)},
              {"crossings", witness_list(pr.crossing_witness)},
              {"collinear", witness_list(pr.collinear_witness)},
              {"concyclic", witness_list(pr.concyclic_witness)},
              {"incoherent", witness_list(pr.incoherent_witness)},
              {"radius_ties", witness_list(pr.radius_tie_witness)}}},
    };
    Json signs = Json::array();
    for (const auto& s : rep.sign)
        signs.push_back(s ? Json(*s == VertexSign::Positive ? "+" : "-")
                          : Json(nullptr));
    Json counts{
        {"s_minus", opt_json(rep.s_minus)}, {"s_plus", opt_json(rep.s_plus)},
        {"l_minus", opt_json(rep.l_minus)}, {"l_plus", opt_json(rep.l_plus)},
        {"r_minus", opt_json(rep.r_minus)}, {"r_plus", opt_json(rep.r_plus)},
    };
    Json out{
        {"n", rep.n},
        {"predicates", predicates},
        {"signs", signs},
        {"labels",
         Json{{"global", label_row(rep.global)},
              {"local", label_row(rep.local)},
              {"radial", label_row(rep.radial)}}},
        {"counts", counts},
    };
    if (rep.bose) {
        long n = static_cast<long>(rep.n);
        out["bose"] = Json{
            {"s_minus", rep.bose->s_minus}, {"s_plus", rep.bose->s_plus},
            {"t_minus", rep.bose->t_minus}, {"t_plus", rep.bose->t_plus},
            {"u_minus", rep.bose->u_minus}, {"u_plus", rep.bose->u_plus},
            {"residuals",
             Json{{"s_minus_minus_t_minus_minus_2",
                   rep.bose->s_minus - rep.bose->t_minus - 2},
                  {"s_plus_minus_t_plus_minus_2",
                   rep.bose->s_plus - rep.bose->t_plus - 2},
                  {"empty_total_minus_nm2",
                   rep.bose->s_minus + rep.bose->t_minus + rep.bose->u_minus -
                       (n - 2)},
                  {"full_total_minus_nm2",
                   rep.bose->s_plus + rep.bose->t_plus + rep.bose->u_plus -
                       (n - 2)}}},
        };
    } else {
        out["bose"] = nullptr;
    }
    return out;
}

Json evolute_to_json(const Polygon& p, const Evolute& e) {
    Json centers = Json::array();
    for (const Point& c : e.centers)
        centers.push_back(Json::array({decimal_or_approx(c.x),
                                       decimal_or_approx(c.y)}));
    Json out{{"n", p.size()},
             {"degenerate", e.degenerate},
             {"centers", centers}};
    WindingNumber wp = winding_number(p);
    out["winding_p"] = Json{{"value", wp.value}, {"raw", wp.raw}};
    if (!e.degenerate && e.distinct_cycle().size() >= 3) {
        WindingNumber we = evolute_winding(e);
        out["winding_e"] = Json{{"value", we.value}, {"raw", we.raw}};
    } else {
        out["winding_e"] = nullptr;
    }
    try {
        auto flags = cusp_flags(p);
        Json cusps = Json::array();
        for (std::size_t i = 0; i < flags.size(); ++i)
            if (flags[i] && *flags[i] == CuspFlag::Cusp) cusps.push_back(i);
        out["cusps"] = cusps;
    } catch (const GeometryError&) {
        out["cusps"] = nullptr;
    }
    return out;
}

Json inequality_report_to_json(const InequalityReport& rep) {
    Json records = Json::array();
    for (const auto& r : rep.records)
        records.push_back(Json{{"name", r.name},
                               {"lhs", r.lhs},
                               {"rhs", r.rhs},
                               {"slack", r.slack},
                               {"holds", r.holds}});
    const char* kind = rep.diagonal_kind == EdgeKind::Delaunay ? "delaunay"
                       : rep.diagonal_kind == EdgeKind::AntiDelaunay
                           ? "anti-delaunay"
                       : rep.diagonal_kind == EdgeKind::Both ? "both"
                                                             : "neither";
    return Json{
        {"diagonal", Json::array({rep.diagonal.first, rep.diagonal.second})},
        {"part_sizes", Json::array({rep.part_sizes[0], rep.part_sizes[1]})},
        {"diagonal_kind", kind},
        {"counts",
         Json{{"s_minus", Json::array({rep.s_minus_parent, rep.s_minus_part1,
                                       rep.s_minus_part2})},
              {"s_plus", Json::array({rep.s_plus_parent, rep.s_plus_part1,
                                      rep.s_plus_part2})},
              {"l_minus", Json::array({rep.l_minus_parent, rep.l_minus_part1,
                                       rep.l_minus_part2})}}},
        {"records", records}};
}

Json audit_to_json(const AuditSummary& audit) {
    Json reports = Json::array();
    for (const auto& r : audit.reports)
        reports.push_back(inequality_report_to_json(r));
    Json worst = Json::object();
    for (const auto& [name, slack] : audit.worst_slack) worst[name] = slack;
    return Json{{"diagonals", reports}, {"worst_slack", worst}};
}

namespace {

Json certificate_node_to_json(const CertificateNode& node) {
    Json out{{"n", node.n},
             {"rule", node.rule},
             {"count", node.count},
             {"bound", node.bound},
             {"checked", node.checked}};
    out["diagonal"] = node.diagonal
                          ? Json::array({node.diagonal->first,
                                         node.diagonal->second})
                          : Json(nullptr);
    Json children = Json::array();
    for (const auto& c : node.children)
        children.push_back(certificate_node_to_json(c));
    out["children"] = children;
    return out;
}

}  // namespace

Json certificate_to_json(const FourVertexCertificate& cert) {
    return Json{{"holds", cert.holds},
                {"s_total", cert.s_total},
                {"l_total", cert.l_total},
                {"s_minus", certificate_node_to_json(cert.s_minus)},
                {"s_plus", certificate_node_to_json(cert.s_plus)},
                {"l_minus", certificate_node_to_json(cert.l_minus)}};
}

Json suite_to_json(const SuiteReport& rep) {
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json witnesses = Json::array();
        for (const auto& w : e.witnesses)
            witnesses.push_back(Json{{"description", w.description},
                                     {"polygon_csv", w.polygon_csv}});
        entries.push_back(Json{{"tag", e.tag},
                               {"cases", e.cases},
                               {"failures", e.failures},
                               {"skipped", e.skipped},
                               {"passed", e.passed()},
                               {"notes", e.notes},
                               {"witnesses", witnesses}});
    }
    return Json{{"entries", entries},
                {"elapsed_seconds", rep.elapsed_seconds},
                {"all_passed", rep.all_passed()}};
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

namespace {

struct Bounds {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    void include(const Point& p) {
        double x = p.x.to_double(), y = p.y.to_double();
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
};

}  // namespace

std::string render_svg(const Polygon& p, const std::optional<Evolute>& e,
                       const RenderSpec& spec, const ExtremalityReport* labels) {
    Bounds b;
    b.min_x = b.min_y = 1e300;
    b.max_x = b.max_y = -1e300;
    for (const Point& pt : p.points()) b.include(pt);
    if (e)
        for (const Point& c : e->centers) b.include(c);
    double span = std::max(b.max_x - b.min_x, b.max_y - b.min_y);
    if (span <= 0) span = 1.0;
    double margin = 0.06 * span;
    double scale = spec.canvas / (span + 2 * margin);
    auto X = [&](const Point& pt) {
        return (pt.x.to_double() - b.min_x + margin) * scale;
    };
    auto Y = [&](const Point& pt) {
        // SVG y grows downward
        return spec.canvas - (pt.y.to_double() - b.min_y + margin) * scale;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << spec.canvas << "\" height=\"" << spec.canvas
        << "\" viewBox=\"0 0 " << spec.canvas << " " << spec.canvas << "\">\n";

    const std::size_t n = p.size();
    if (spec.show_circles) {
        for (std::size_t i = 0; i < n; ++i) {
            auto k = static_cast<std::ptrdiff_t>(i);
            try {
                Circle c = circumcircle(p.at(k - 1), p.at(k), p.at(k + 1));
                double r = std::sqrt(c.radius_sq.to_double()) * scale;
                svg << "  <circle class=\"neighboring-circle\" cx=\""
                    << X(c.center) << "\" cy=\"" << Y(c.center) << "\" r=\"" << r
                    << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
            } catch (const GeometryError&) {}
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p[i];
        const Point& c = p[(i + 1) % n];
        svg << "  <line class=\"polygon-edge\" x1=\"" << X(a) << "\" y1=\""
            << Y(a) << "\" x2=\"" << X(c) << "\" y2=\"" << Y(c)
            << "\" stroke=\"" << spec.polygon_color
            << "\" stroke-width=\"1.5\"/>\n";
    }
    if (e) {
        const auto& centers = e->centers;
        for (std::size_t i = 0; i < centers.size(); ++i) {
            const Point& a = centers[i];
            const Point& c = centers[(i + 1) % centers.size()];
            svg << "  <line class=\"evolute-edge\" x1=\"" << X(a) << "\" y1=\""
                << Y(a) << "\" x2=\"" << X(c) << "\" y2=\"" << Y(c)
                << "\" stroke=\"" << spec.evolute_color
                << "\" stroke-width=\"1\"/>\n";
        }
    }
    if (labels) {
        for (std::size_t i = 0; i < n && i < labels->local.size(); ++i) {
            if (!labels->local[i] || *labels->local[i] == Extremality::None)
                continue;
            bool is_max = *labels->local[i] == Extremality::Max;
            svg << "  <circle class=\"extremal-marker\" cx=\"" << X(p[i])
                << "\" cy=\"" << Y(p[i]) << "\" r=\"4\" fill=\""
                << (is_max ? spec.max_color : spec.min_color) << "\"/>\n";
        }
    }
    if (spec.label_vertices) {
        for (std::size_t i = 0; i < n; ++i)
            svg << "  <text class=\"vertex-label\" x=\"" << X(p[i]) + 5
                << "\" y=\"" << Y(p[i]) - 5 << "\" font-size=\"11\">" << i
                << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace fourvertex
