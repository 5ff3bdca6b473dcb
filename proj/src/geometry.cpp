#include "fourvertex/geometry.hpp"

#include <cmath>

namespace fourvertex {

const char* fault_name(Fault f) {
    switch (f) {
        case Fault::ParseError: return "ParseError";
        case Fault::CollinearInput: return "CollinearInput";
        case Fault::DegenerateAngle: return "DegenerateAngle";
        case Fault::OnCircleDegenerate: return "OnCircleDegenerate";
        case Fault::OnCircleWitness: return "OnCircleWitness";
        case Fault::RadiusTie: return "RadiusTie";
        case Fault::TooFewVertices: return "TooFewVertices";
        case Fault::NotClosed: return "NotClosed";
        case Fault::DuplicateVertex: return "DuplicateVertex";
        case Fault::AdjacentEndpoints: return "AdjacentEndpoints";
        case Fault::PartTooSmall: return "PartTooSmall";
        case Fault::DiagonalOutside: return "DiagonalOutside";
        case Fault::NotConvex: return "NotConvex";
        case Fault::NotGeneric: return "NotGeneric";
        case Fault::NoBalancedDiagonal: return "NoBalancedDiagonal";
        case Fault::DegenerateEvolute: return "DegenerateEvolute";
        case Fault::UnclassifiableAngle: return "UnclassifiableAngle";
        case Fault::RecursionBaseViolated: return "RecursionBaseViolated";
        case Fault::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
        case Fault::InternalError: return "InternalError";
    }
    return "UnknownFault";
}

GeometryError::GeometryError(Fault fault, const std::string& message,
                             std::vector<std::size_t> witness)
    : std::runtime_error(std::string(fault_name(fault)) + ": " + message),
      fault_(fault),
      witness_(std::move(witness)) {}

Side orientation(const Point& a, const Point& b, const Point& c) {
    Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    int s = det.sign();
    if (s > 0) return Side::Left;
    if (s < 0) return Side::Right;
    return Side::Collinear;
}

Rational squared_distance(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

Point circumcenter(const Point& a, const Point& b, const Point& c) {
    // 2*(a-c) . O = |a|^2 - |c|^2, 2*(b-c) . O = |b|^2 - |c|^2
    Rational a11 = (a.x - c.x) * 2, a12 = (a.y - c.y) * 2;
    Rational a21 = (b.x - c.x) * 2, a22 = (b.y - c.y) * 2;
    Rational det = a11 * a22 - a12 * a21;
    if (det.is_zero())
        throw GeometryError(Fault::CollinearInput, "circumcenter of collinear points");
    Rational b1 = a.x * a.x + a.y * a.y - c.x * c.x - c.y * c.y;
    Rational b2 = b.x * b.x + b.y * b.y - c.x * c.x - c.y * c.y;
    return Point{(b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det};
}

Rational circumradius_sq(const Point& a, const Point& b, const Point& c) {
    return squared_distance(circumcenter(a, b, c), a);
}

Circle circumcircle(const Point& a, const Point& b, const Point& c) {
    Point o = circumcenter(a, b, c);
    return Circle{o, squared_distance(o, a)};
}

CirclePosition in_circle(const Point& a, const Point& b, const Point& c,
                         const Point& q) {
    // Distance to the circumcenter rather than the 4x4 determinant: the
    // comparison is exact either way, and this form is insensitive to the
    // order of a, b, c by construction.
    Point o = circumcenter(a, b, c);
    Rational r2 = squared_distance(o, a);
    Rational d2 = squared_distance(o, q);
    if (d2 < r2) return CirclePosition::Inside;
    if (d2 > r2) return CirclePosition::Outside;
    return CirclePosition::On;
}

Angle left_angle(const Point& a, const Point& b, const Point& c) {
    Side o = orientation(a, b, c);
    if (o == Side::Collinear)
        throw GeometryError(Fault::DegenerateAngle, "collinear angle triple");
    double s1x = (a.x - b.x).to_double(), s1y = (a.y - b.y).to_double();
    double s2x = (c.x - b.x).to_double(), s2y = (c.y - b.y).to_double();
    double m1 = std::hypot(s1x, s1y), m2 = std::hypot(s2x, s2y);
    double cosv = (s1x * s2x + s1y * s2y) / (m1 * m2);
    cosv = std::max(-1.0, std::min(1.0, cosv));
    double theta = std::acos(cosv);
    // Left turn keeps the principal value, right turn reflexes it.
    return Angle{o == Side::Left ? theta : 2.0 * M_PI - theta};
}

bool in_cone(const Point& apex, const Point& d1, const Point& d2, const Point& q) {
    Rational u1 = d1.x - apex.x, u2 = d1.y - apex.y;
    Rational v1 = d2.x - apex.x, v2 = d2.y - apex.y;
    Rational w1 = q.x - apex.x, w2 = q.y - apex.y;
    Rational cuv = u1 * v2 - u2 * v1;
    int s = cuv.sign();
    if (s == 0)
        throw GeometryError(Fault::CollinearInput, "degenerate cone");
    Rational cuw = u1 * w2 - u2 * w1;
    Rational cwv = w1 * v2 - w2 * v1;
    if (s < 0) { cuw = -cuw; cwv = -cwv; }
    return cuw.sign() >= 0 && cwv.sign() >= 0;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    auto side_val = [](Side s) { return s == Side::Left ? 1 : s == Side::Right ? -1 : 0; };
    int o1 = side_val(orientation(a, b, c));
    int o2 = side_val(orientation(a, b, d));
    int o3 = side_val(orientation(c, d, a));
    int o4 = side_val(orientation(c, d, b));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace fourvertex
