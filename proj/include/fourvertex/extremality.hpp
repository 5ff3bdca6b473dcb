#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fourvertex/polygon.hpp"

namespace fourvertex {

enum class VertexSign { Positive, Negative };
enum class CurvatureRelation { Greater, Less };
enum class Extremality { Max, Min, None };

enum class Containment { Empty, Full, Mixed };
enum class Adjacency { Neighboring, Intermediate, Disjoint };

struct CircleClassification {
    Containment containment;
    Adjacency adjacency;
};

/// Positive iff the left angle at V_i is at most pi, decided exactly via the
/// orientation of the vertex triple (CCW traversal assumed).
VertexSign vertex_sign(const Polygon& p, std::size_t i);

/// Discrete curvature comparison of V_i against V_{i+1}: Greater iff
/// (V_{i+1} positive and V_{i+2} outside the circle through
/// V_{i-1},V_i,V_{i+1}) or (V_{i+1} negative and V_{i+2} inside it).
/// Throws OnCircleDegenerate when V_{i+2} is exactly on that circle.
CurvatureRelation curvature_compare(const Polygon& p, std::size_t i);

/// Max iff V_{i-1} < V_i > V_{i+1}, Min iff V_{i-1} > V_i < V_{i+1}.
Extremality local_extremality(const Polygon& p, std::size_t i);

struct RadialOptions {
    /// Treat tied neighboring radii as extremal on both sides instead of
    /// raising RadiusTie. Exploratory mode; count identities assume it off.
    bool lenient_ties = false;
};

/// Classification kernel on a bare radius triple.
Extremality radial_from_radii(const Rational& prev, const Rational& cur,
                              const Rational& next, RadialOptions opt = {});

/// Max iff R_{i-1} < R_i > R_{i+1} (exact squared-radius comparison).
/// Throws RadiusTie with the tied pair unless lenient.
Extremality radial_extremality(const Polygon& p, std::size_t i,
                               RadialOptions opt = {});

Adjacency adjacency_class(std::size_t n, std::size_t i, std::size_t j,
                          std::size_t k);

/// Exhaustive exact containment of every other vertex against the circle
/// through vertices i, j, k, plus the cyclic adjacency class. Throws
/// OnCircleWitness when some fourth vertex is exactly on the circle.
CircleClassification classify_circle(const Polygon& p, std::size_t i,
                                     std::size_t j, std::size_t k);

/// Global label of V_i from its neighboring circle: Max iff empty, Min iff
/// full, None iff mixed.
Extremality global_extremality(const Polygon& p, std::size_t i);

struct BoseCounts {
    long s_minus = 0, s_plus = 0;  // neighboring empty / full
    long t_minus = 0, t_plus = 0;  // disjoint
    long u_minus = 0, u_plus = 0;  // intermediate
};

/// Classify all C(n,3) circles of a generic convex polygon.
BoseCounts bose_counts(const Polygon& p);

namespace detail {
using InCircleFn = std::function<CirclePosition(
    const Point&, const Point&, const Point&, const Point&)>;
/// bose_counts with a injectable predicate; exists so the harness can prove
/// the suite notices a corrupted predicate.
BoseCounts bose_counts_with_predicate(const Polygon& p, const InCircleFn& fn);
}  // namespace detail

struct AnalyzeOptions {
    GenericityCheck genericity = GenericityCheck::Full;
    bool lenient_ties = false;
    bool with_bose = true;
};

/// Aggregate report. Per-vertex labels are nullopt where an exact
/// degeneracy makes the classifier undefined (with the witness recorded in
/// `predicates`); each count is present only when every label of its
/// classifier is defined.
struct ExtremalityReport {
    std::size_t n = 0;
    PredicateReport predicates;
    std::vector<std::optional<VertexSign>> sign;
    std::vector<std::optional<Extremality>> global;
    std::vector<std::optional<Extremality>> local;
    std::vector<std::optional<Extremality>> radial;
    std::optional<long> s_minus, s_plus;
    std::optional<long> l_minus, l_plus;
    std::optional<long> r_minus, r_plus;
    std::optional<BoseCounts> bose;  // generic convex polygons only
};

ExtremalityReport analyze(const Polygon& p, const AnalyzeOptions& opt = {});

/// Polygon with vertex i removed, order preserved. Throws TooFewVertices
/// below n = 4.
Polygon remove_vertex(const Polygon& p, std::size_t i);

}  // namespace fourvertex
