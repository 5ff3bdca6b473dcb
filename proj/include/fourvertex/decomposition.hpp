#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourvertex/extremality.hpp"
#include "fourvertex/triangulation.hpp"

namespace fourvertex {

/// A diagonal cut: part1 runs a..b in parent order, part2 runs b..a; both
/// contain the diagonal endpoints and have >= 4 vertices.
struct Decomposition {
    Polygon parent;
    Diagonal diagonal;
    Polygon part1;
    Polygon part2;
    std::vector<std::size_t> part1_indices;  // parent indices of part1
    std::vector<std::size_t> part2_indices;
};

/// Throws AdjacentEndpoints / PartTooSmall / DiagonalOutside. The diagonal
/// interiority check makes this usable on simple non-convex parents too;
/// for convex parents every non-adjacent diagonal is interior.
Decomposition decompose(const Polygon& p, std::size_t a, std::size_t b);

struct InequalityRecord {
    std::string name;
    long lhs = 0;
    long rhs = 0;
    long slack = 0;
    bool holds = false;
};

struct InequalityReport {
    Diagonal diagonal;
    std::array<std::size_t, 2> part_sizes{};
    EdgeKind diagonal_kind = EdgeKind::Neither;
    long s_minus_parent = 0, s_minus_part1 = 0, s_minus_part2 = 0;
    long s_plus_parent = 0, s_plus_part1 = 0, s_plus_part2 = 0;
    long l_minus_parent = 0, l_minus_part1 = 0, l_minus_part2 = 0;
    std::vector<InequalityRecord> records;

    const InequalityRecord* find(const std::string& name) const;
};

/// Evaluate the decomposition bounds on one cut:
///   global-minus-3        s-(P) >= s-(P1) + s-(P2) - 3
///   global-hexagon-minus-2 (parent n == 6 only)
///   global-delaunay-minus-2 (diagonal in DT(P) only)
///   global-antidelaunay-minus-2 (s+ version, diagonal in ADT(P) only)
///   local-minus-2         l-(P) >= l-(P1) + l-(P2) - 2
/// Delaunay membership is only consulted for convex parents.
InequalityReport verify_inequalities(const Decomposition& d,
                                     const AnalyzeOptions& opt = {});

struct AuditSummary {
    std::vector<InequalityReport> reports;
    /// Minimum slack seen per record name (only over applicable records).
    std::map<std::string, long> worst_slack;
};

/// verify_inequalities over every valid diagonal of p.
AuditSummary audit_all_diagonals(const Polygon& p, const AnalyzeOptions& opt = {});

/// One level of the inductive four-vertex argument, with everything
/// recomputed and checked rather than assumed.
struct CertificateNode {
    std::size_t n = 0;
    std::string rule;                  // "base", "hexagon-cut", "delaunay-cut", ...
    std::optional<Diagonal> diagonal;  // in local indices of this node's polygon
    long count = 0;                    // the measured count at this node
    long bound = 2;                    // what the recursion proves (>= bound)
    bool checked = false;              // inequality instance verified numerically
    std::vector<CertificateNode> children;

    int depth() const;
};

struct FourVertexCertificate {
    CertificateNode s_minus;
    CertificateNode s_plus;
    CertificateNode l_minus;
    long s_total = 0;  // s-(P) + s+(P)
    long l_total = 0;  // l-(P) + l+(P)
    bool holds = false;
};

/// Runs the decomposition proof recipe as a computation: Delaunay (resp.
/// Anti-Delaunay) triangulation -> balanced diagonal -> recursive descent to
/// quadrilateral/pentagon/hexagon bases, machine-checking each inequality
/// instance and each base count. Throws NotGeneric / NotConvex up front and
/// RecursionBaseViolated if a base count contradicts the quadrilateral
/// facts.
FourVertexCertificate four_vertex_via_decomposition(const Polygon& p);

}  // namespace fourvertex
