#include "fourvertex/evolute.hpp"

#include <cmath>
#include <cstdlib>

namespace fourvertex {

std::vector<Point> Evolute::distinct_cycle() const {
    std::vector<Point> out;
    const std::size_t n = centers.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (out.empty() || !(centers[i] == out.back())) out.push_back(centers[i]);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

Evolute evolute(const Polygon& p) {
    if (!p.is_closed())
        throw GeometryError(Fault::NotClosed, "evolute needs a closed polygon");
    Evolute e;
    e.centers.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto k = static_cast<std::ptrdiff_t>(i);
        if (orientation(p.at(k - 1), p.at(k), p.at(k + 1)) == Side::Collinear)
            throw GeometryError(Fault::CollinearInput,
                                "collinear consecutive triple",
                                {p.wrap(k - 1), i, p.wrap(k + 1)});
        e.centers.push_back(circumcenter(p.at(k - 1), p.at(k), p.at(k + 1)));
    }
    e.degenerate = true;
    for (const Point& c : e.centers)
        if (!(c == e.centers.front())) { e.degenerate = false; break; }
    return e;
}

double WindingNumber::residual() const {
    return std::abs(raw / (2.0 * M_PI) - static_cast<double>(value));
}

namespace {

WindingNumber winding_of_cycle(const std::vector<Point>& pts) {
    double raw = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        Angle a = left_angle(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
        raw += M_PI - a.radians;
    }
    WindingNumber w;
    w.raw = raw;
    w.value = std::lround(raw / (2.0 * M_PI));
    return w;
}

}  // namespace

WindingNumber winding_number(const Polygon& p) {
    if (!p.is_closed())
        throw GeometryError(Fault::NotClosed, "winding needs a closed polygon");
    return winding_of_cycle(p.points());
}

WindingNumber evolute_winding(const Evolute& e) {
    if (e.degenerate)
        throw GeometryError(Fault::DegenerateEvolute,
                            "winding of a point evolute is undefined");
    std::vector<Point> cycle = e.distinct_cycle();
    if (cycle.size() < 3)
        throw GeometryError(Fault::DegenerateEvolute,
                            "fewer than three distinct evolute vertices");
    return winding_of_cycle(cycle);
}

std::vector<std::optional<CuspFlag>> cusp_flags(const Polygon& p,
                                                const CuspOptions& opt) {
    Evolute e = evolute(p);
    if (e.degenerate)
        throw GeometryError(Fault::DegenerateEvolute,
                            "cusps of a point evolute are undefined");
    const std::size_t n = p.size();
    std::vector<std::optional<CuspFlag>> flags(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = e.centers[(i + n - 1) % n];
        const Point& cur = e.centers[i];
        const Point& next = e.centers[(i + 1) % n];
        if (prev == cur || cur == next) continue;  // zero-length evolute edge
        double diff;
        try {
            Angle av = left_angle(p, i);
            Angle ao = left_angle(prev, cur, next);
            diff = av.radians - ao.radians;
        } catch (const GeometryError&) {
            continue;  // collinear evolute triple: angle undefined
        }
        if (std::abs(std::abs(diff) - M_PI) < opt.tolerance)
            flags[i] = CuspFlag::Cusp;
        else if (std::abs(diff) < opt.tolerance)
            flags[i] = CuspFlag::Flat;
        else
            throw GeometryError(Fault::UnclassifiableAngle,
                                "angle difference near neither 0 nor pi", {i});
        if (opt.cross_validate) {
            try {
                Extremality le = local_extremality(p, i);
                bool extremal = le != Extremality::None;
                if (extremal != (flags[i] == CuspFlag::Cusp))
                    throw GeometryError(
                        Fault::InternalError,
                        "cusp classification disagrees with local extremality",
                        {i});
            } catch (const GeometryError& err) {
                if (err.fault() == Fault::InternalError) throw;
                // local label undefined here; nothing to validate against
            }
        }
    }
    return flags;
}

EvoluteIdentity verify_evolute_identity(const Polygon& p) {
    EvoluteIdentity out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Extremality le = local_extremality(p, i);
        if (le == Extremality::None) continue;
        if (vertex_sign(p, i) == VertexSign::Positive)
            ++out.n_plus;
        else
            ++out.n_minus;
    }
    out.wind_p = winding_number(p);
    out.wind_e = evolute_winding(evolute(p));
    out.holds =
        out.n_plus - out.n_minus == 2 * out.wind_p.value - 2 * out.wind_e.value;
    return out;
}

namespace {

Polygon sample_curve(std::size_t m, const std::function<void(double, double&, double&)>& f) {
    if (m < 8)
        throw GeometryError(Fault::TooFewVertices, "need at least 8 samples");
    std::vector<Point> pts;
    pts.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        double t = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(m);
        double x, y;
        f(t, x, y);
        pts.push_back(Point{Rational::from_double_truncated(x, 12),
                            Rational::from_double_truncated(y, 12)});
    }
    return Polygon::closed(std::move(pts), Polygon::Normalize::AsGiven);
}

}  // namespace

Polygon sample_ellipse(const EllipseParams& params, std::size_t m) {
    return sample_curve(m, [&](double t, double& x, double& y) {
        x = params.a * std::cos(t);
        y = params.b * std::sin(t);
    });
}

Polygon sample_flower(const FlowerParams& params, std::size_t m) {
    return sample_curve(m, [&](double t, double& x, double& y) {
        double r = 1.0 + params.amplitude * std::sin(params.k * t);
        x = r * std::cos(t);
        y = r * std::sin(t);
    });
}

}  // namespace fourvertex
