#include "fourvertex/polygon.hpp"

#include <algorithm>

namespace fourvertex {

namespace {

Rational twice_signed_area(const std::vector<Point>& pts) {
    Rational s = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % pts.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

void check_distinct(const std::vector<Point>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw GeometryError(Fault::DuplicateVertex, "repeated vertex",
                                    {i, j});
}

bool on_closed_segment(const Point& a, const Point& b, const Point& q) {
    if (orientation(a, b, q) != Side::Collinear) return false;
    Rational lox = std::min(a.x, b.x), hix = std::max(a.x, b.x);
    Rational loy = std::min(a.y, b.y), hiy = std::max(a.y, b.y);
    return lox <= q.x && q.x <= hix && loy <= q.y && q.y <= hiy;
}

// Any shared point at all (proper crossing, touch, or collinear overlap).
bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (segments_cross(a, b, c, d)) return true;
    return on_closed_segment(a, b, c) || on_closed_segment(a, b, d) ||
           on_closed_segment(c, d, a) || on_closed_segment(c, d, b);
}

}  // namespace

Polygon::Polygon(std::vector<Point> pts, bool closed, bool reversed)
    : pts_(std::move(pts)),
      area2_(twice_signed_area(pts_)),
      closed_(closed),
      reversed_(reversed) {}

Polygon Polygon::closed(std::vector<Point> pts, Normalize norm) {
    if (pts.size() < 3)
        throw GeometryError(Fault::TooFewVertices, "polygon needs >= 3 vertices");
    check_distinct(pts);
    bool reversed = false;
    if (norm == Normalize::ToCcw && twice_signed_area(pts).sign() < 0) {
        std::reverse(pts.begin(), pts.end());
        reversed = true;
    }
    return Polygon(std::move(pts), true, reversed);
}

Polygon Polygon::open_curve(std::vector<Point> pts) {
    if (pts.size() < 3)
        throw GeometryError(Fault::TooFewVertices, "curve needs >= 3 vertices");
    check_distinct(pts);
    return Polygon(std::move(pts), false, false);
}

std::size_t Polygon::wrap(std::ptrdiff_t i) const {
    auto n = static_cast<std::ptrdiff_t>(pts_.size());
    std::ptrdiff_t m = i % n;
    if (m < 0) m += n;
    return static_cast<std::size_t>(m);
}

Polygon Polygon::reversed() const {
    std::vector<Point> pts(pts_.rbegin(), pts_.rend());
    return Polygon(std::move(pts), closed_, !reversed_);
}

Angle left_angle(const Polygon& p, std::size_t i) {
    if (!p.is_closed())
        throw GeometryError(Fault::NotClosed, "angles need a closed polygon");
    auto k = static_cast<std::ptrdiff_t>(i);
    return left_angle(p.at(k - 1), p.at(k), p.at(k + 1));
}

PredicateReport polygon_predicates(const Polygon& p, GenericityCheck mode) {
    if (!p.is_closed())
        throw GeometryError(Fault::NotClosed, "predicates need a closed polygon");
    const std::size_t n = p.size();
    PredicateReport r;
    r.genericity_mode = mode;
    r.ccw = p.stored_ccw();

    for (std::size_t i = 0; i < n; ++i) {
        auto k = static_cast<std::ptrdiff_t>(i);
        if (orientation(p.at(k - 1), p.at(k), p.at(k + 1)) != Side::Left)
            r.nonconvex_witness.push_back(i);
    }
    r.convex = r.nonconvex_witness.empty();

    // Simple: non-adjacent edges must not touch; adjacent edges must not
    // fold back over each other.
    r.simple = true;
    for (std::size_t i = 0; i < n && r.crossing_witness.size() < 8; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Point& a = p[i];
            const Point& b = p[(i + 1) % n];
            const Point& c = p[j];
            const Point& d = p[(j + 1) % n];
            if (adjacent) {
                const Point& shared = (j == i + 1) ? b : a;
                const Point& e1 = (j == i + 1) ? a : b;
                const Point& e2 = (j == i + 1) ? d : c;
                if (orientation(e1, shared, e2) == Side::Collinear) {
                    // fold-back iff the outer endpoints sit on the same ray
                    Rational dot = (e1.x - shared.x) * (e2.x - shared.x) +
                                   (e1.y - shared.y) * (e2.y - shared.y);
                    if (dot.sign() > 0) {
                        r.simple = false;
                        r.crossing_witness.push_back({i, j});
                    }
                }
            } else if (segments_touch(a, b, c, d)) {
                r.simple = false;
                r.crossing_witness.push_back({i, j});
            }
        }
    }

    // Genericity: no 3 collinear, no 4 concyclic.
    if (mode == GenericityCheck::Full) {
        for (std::size_t i = 0; i < n && r.collinear_witness.size() < 8; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (orientation(p[i], p[j], p[k]) == Side::Collinear)
                        r.collinear_witness.push_back({i, j, k});
        for (std::size_t i = 0; i < n && r.concyclic_witness.size() < 8; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    if (orientation(p[i], p[j], p[k]) == Side::Collinear) continue;
                    for (std::size_t l = k + 1; l < n; ++l)
                        if (in_circle(p[i], p[j], p[k], p[l]) == CirclePosition::On)
                            r.concyclic_witness.push_back({i, j, k, l});
                }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            auto k = static_cast<std::ptrdiff_t>(i);
            if (orientation(p.at(k - 1), p.at(k), p.at(k + 1)) == Side::Collinear)
                r.collinear_witness.push_back({p.wrap(k - 1), i, p.wrap(k + 1)});
        }
        for (std::size_t i = 0; i < n; ++i) {
            auto k = static_cast<std::ptrdiff_t>(i);
            if (orientation(p.at(k - 1), p.at(k), p.at(k + 1)) == Side::Collinear)
                continue;
            if (in_circle(p.at(k - 1), p.at(k), p.at(k + 1), p.at(k + 2)) ==
                CirclePosition::On)
                r.concyclic_witness.push_back(
                    {p.wrap(k - 1), i, p.wrap(k + 1), p.wrap(k + 2)});
        }
    }
    r.generic = r.collinear_witness.empty() && r.concyclic_witness.empty();

    // Coherence: each circumcenter inside the closed cone at its vertex.
    // Radius ties between neighboring circles are reported alongside.
    bool angles_ok = true;
    std::vector<Rational> radii(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto k = static_cast<std::ptrdiff_t>(i);
        if (orientation(p.at(k - 1), p.at(k), p.at(k + 1)) == Side::Collinear) {
            angles_ok = false;
            r.incoherent_witness.push_back(i);
            continue;
        }
        Point o = circumcenter(p.at(k - 1), p.at(k), p.at(k + 1));
        radii[i] = squared_distance(o, p.at(k));
        if (!in_cone(p.at(k), p.at(k - 1), p.at(k + 1), o))
            r.incoherent_witness.push_back(i);
    }
    r.coherent = r.incoherent_witness.empty();
    if (angles_ok) {
        for (std::size_t i = 0; i < n; ++i)
            if (radii[i] == radii[(i + 1) % n])
                r.radius_tie_witness.push_back({i, (i + 1) % n});
    }

    return r;
}

}  // namespace fourvertex
