#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourvertex/rational.hpp"

namespace fourvertex {

enum class Fault {
    ParseError,
    CollinearInput,
    DegenerateAngle,
    OnCircleDegenerate,
    OnCircleWitness,
    RadiusTie,
    TooFewVertices,
    NotClosed,
    DuplicateVertex,
    AdjacentEndpoints,
    PartTooSmall,
    DiagonalOutside,
    NotConvex,
    NotGeneric,
    NoBalancedDiagonal,
    DegenerateEvolute,
    UnclassifiableAngle,
    RecursionBaseViolated,
    RejectionBudgetExceeded,
    InternalError,
};

const char* fault_name(Fault f);

/// Single error type for the whole library: a fault kind plus the vertex
/// indices that witness it (e.g. the tied pair for RadiusTie, the concyclic
/// quadruple for OnCircleWitness).
class GeometryError : public std::runtime_error {
public:
    GeometryError(Fault fault, const std::string& message,
                  std::vector<std::size_t> witness = {});

    Fault fault() const { return fault_; }
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    Fault fault_;
    std::vector<std::size_t> witness_;
};

struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

struct Circle {
    Point center;
    Rational radius_sq;
};

/// Angle in radians, open interval (0, 2*pi) for a non-degenerate vertex.
struct Angle {
    double radians = 0.0;
};

enum class Side { Left, Right, Collinear };
enum class CirclePosition { Inside, Outside, On };

/// Sign of det(b - a, c - a). Exact.
Side orientation(const Point& a, const Point& b, const Point& c);

Rational squared_distance(const Point& a, const Point& b);

/// Circumcenter of a nondegenerate triangle, via the 2x2 perpendicular
/// bisector system solved in exact arithmetic. Throws CollinearInput.
Point circumcenter(const Point& a, const Point& b, const Point& c);

/// Squared circumradius (kept squared so comparisons stay exact).
Rational circumradius_sq(const Point& a, const Point& b, const Point& c);

Circle circumcircle(const Point& a, const Point& b, const Point& c);

/// Position of q relative to the circle through a, b, c. Exact, and
/// independent of the order of a, b, c. Throws CollinearInput.
CirclePosition in_circle(const Point& a, const Point& b, const Point& c,
                         const Point& q);

/// Interior angle on the left of the traversal a -> b -> c, in (0, 2*pi).
/// The reflex branch is decided by the exact orientation predicate; only the
/// magnitude comes from floating point. Throws DegenerateAngle.
Angle left_angle(const Point& a, const Point& b, const Point& c);

/// True when q lies in the closed convex cone with apex `apex` spanned by
/// the directions toward d1 and d2. Throws CollinearInput if the cone is
/// degenerate (d1, apex, d2 collinear).
bool in_cone(const Point& apex, const Point& d1, const Point& d2, const Point& q);

/// Proper (interior) crossing of segments ab and cd. Shared endpoints do
/// not count.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace fourvertex
