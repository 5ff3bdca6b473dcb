#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fourvertex/decomposition.hpp"
#include "fourvertex/evolute.hpp"
#include "fourvertex/extremality.hpp"
#include "fourvertex/harness.hpp"
#include "fourvertex/polygon.hpp"

namespace fourvertex {

using Json = nlohmann::ordered_json;

/// Two-row CSV (x row then y row) or JSON list of [x, y] decimal strings.
struct ParsedPolygonFile {
    std::vector<std::string> x_row;
    std::vector<std::string> y_row;

    std::vector<Point> points() const;
    Polygon polygon(Polygon::Normalize norm = Polygon::Normalize::ToCcw) const;
};

ParsedPolygonFile parse_polygon_csv(std::istream& in);
ParsedPolygonFile parse_polygon_json(std::istream& in);
/// Dispatch on extension (.json vs anything else = CSV).
ParsedPolygonFile parse_polygon_file(const std::string& path);

/// Two-row CSV emission; exact decimal expansion when finite, otherwise 15
/// significant digits with a trailing '~'.
std::string polygon_to_csv(const Polygon& p);
std::string points_to_csv(const std::vector<Point>& pts);
std::string decimal_or_approx(const Rational& r);

Json polygon_to_json(const Polygon& p);
Json report_to_json(const ExtremalityReport& rep);
Json evolute_to_json(const Polygon& p, const Evolute& e);
Json inequality_report_to_json(const InequalityReport& rep);
Json audit_to_json(const AuditSummary& audit);
Json certificate_to_json(const FourVertexCertificate& cert);
Json suite_to_json(const SuiteReport& rep);

struct RenderSpec {
    double canvas = 640.0;      // square canvas, viewBox fitted to content
    bool show_evolute = true;
    bool show_circles = false;  // neighboring circumcircles
    bool label_vertices = false;
    std::string polygon_color = "blue";
    std::string evolute_color = "green";
    std::string max_color = "#d62728";
    std::string min_color = "#ff7f0e";
};

/// SVG 1.1 document. Emits one <line> element per polygon edge (and per
/// evolute edge when enabled) so output stays mechanically checkable.
std::string render_svg(const Polygon& p, const std::optional<Evolute>& e,
                       const RenderSpec& spec,
                       const ExtremalityReport* labels = nullptr);

}  // namespace fourvertex
