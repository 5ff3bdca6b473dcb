#include "fourvertex/extremality.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace fourvertex {

VertexSign vertex_sign(const Polygon& p, std::size_t i) {
    auto k = static_cast<std::ptrdiff_t>(i);
    Side s = orientation(p.at(k - 1), p.at(k), p.at(k + 1));
    if (s == Side::Collinear)
        throw GeometryError(Fault::DegenerateAngle, "collinear vertex triple",
                            {p.wrap(k - 1), i, p.wrap(k + 1)});
    return s == Side::Left ? VertexSign::Positive : VertexSign::Negative;
}

CurvatureRelation curvature_compare(const Polygon& p, std::size_t i) {
    if (p.size() < 4)
        throw GeometryError(Fault::TooFewVertices,
                            "curvature comparison needs n >= 4");
    auto k = static_cast<std::ptrdiff_t>(i);
    VertexSign next_sign = vertex_sign(p, p.wrap(k + 1));
    CirclePosition pos = in_circle(p.at(k - 1), p.at(k), p.at(k + 1), p.at(k + 2));
    if (pos == CirclePosition::On)
        throw GeometryError(
            Fault::OnCircleDegenerate, "fourth vertex exactly on circle",
            {p.wrap(k - 1), i, p.wrap(k + 1), p.wrap(k + 2)});
    bool greater = next_sign == VertexSign::Positive
                       ? pos == CirclePosition::Outside
                       : pos == CirclePosition::Inside;
    return greater ? CurvatureRelation::Greater : CurvatureRelation::Less;
}

Extremality local_extremality(const Polygon& p, std::size_t i) {
    if (p.size() < 4)
        throw GeometryError(Fault::TooFewVertices,
                            "local extremality needs n >= 4");
    auto k = static_cast<std::ptrdiff_t>(i);
    // V_{i-1} vs V_i and V_i vs V_{i+1}
    CurvatureRelation before = curvature_compare(p, p.wrap(k - 1));
    CurvatureRelation after = curvature_compare(p, i);
    if (before == CurvatureRelation::Less && after == CurvatureRelation::Greater)
        return Extremality::Max;
    if (before == CurvatureRelation::Greater && after == CurvatureRelation::Less)
        return Extremality::Min;
    return Extremality::None;
}

Extremality radial_from_radii(const Rational& prev, const Rational& cur,
                              const Rational& next, RadialOptions opt) {
    if (!opt.lenient_ties) {
        if (prev == cur)
            throw GeometryError(Fault::RadiusTie, "equal neighboring radii");
        if (cur == next)
            throw GeometryError(Fault::RadiusTie, "equal neighboring radii");
        if (prev < cur && cur > next) return Extremality::Max;
        if (prev > cur && cur < next) return Extremality::Min;
        return Extremality::None;
    }
    // Lenient: a tied vertex counts as extremal on both sides of the tie.
    bool up = prev <= cur && cur >= next && !(prev == cur && cur == next);
    bool down = prev >= cur && cur <= next && !(prev == cur && cur == next);
    if (up) return Extremality::Max;
    if (down) return Extremality::Min;
    return Extremality::None;
}

Extremality radial_extremality(const Polygon& p, std::size_t i,
                               RadialOptions opt) {
    auto k = static_cast<std::ptrdiff_t>(i);
    Rational rp = circumradius_sq(p.at(k - 2), p.at(k - 1), p.at(k));
    Rational rc = circumradius_sq(p.at(k - 1), p.at(k), p.at(k + 1));
    Rational rn = circumradius_sq(p.at(k), p.at(k + 1), p.at(k + 2));
    try {
        return radial_from_radii(rp, rc, rn, opt);
    } catch (const GeometryError& e) {
        if (e.fault() != Fault::RadiusTie) throw;
        std::size_t a = rp == rc ? p.wrap(k - 1) : i;
        std::size_t b = rp == rc ? i : p.wrap(k + 1);
        throw GeometryError(Fault::RadiusTie, "equal neighboring radii", {a, b});
    }
}

Adjacency adjacency_class(std::size_t n, std::size_t i, std::size_t j,
                          std::size_t k) {
    std::array<std::size_t, 3> t{i, j, k};
    std::sort(t.begin(), t.end());
    auto adjacent = [n](std::size_t a, std::size_t b) {
        return (a + 1) % n == b || (b + 1) % n == a;
    };
    int pairs = adjacent(t[0], t[1]) + adjacent(t[1], t[2]) + adjacent(t[0], t[2]);
    if (pairs >= 2) return Adjacency::Neighboring;
    if (pairs == 1) return Adjacency::Intermediate;
    return Adjacency::Disjoint;
}

namespace {

Containment containment_with(const Polygon& p, std::size_t i, std::size_t j,
                             std::size_t k, const detail::InCircleFn& fn) {
    if (orientation(p[i], p[j], p[k]) == Side::Collinear)
        throw GeometryError(Fault::CollinearInput, "collinear circle triple",
                            {i, j, k});
    std::size_t inside = 0, outside = 0;
    for (std::size_t m = 0; m < p.size(); ++m) {
        if (m == i || m == j || m == k) continue;
        CirclePosition pos = fn(p[i], p[j], p[k], p[m]);
        if (pos == CirclePosition::On)
            throw GeometryError(Fault::OnCircleWitness,
                                "fourth vertex exactly on circle", {i, j, k, m});
        (pos == CirclePosition::Inside ? inside : outside) += 1;
    }
    if (inside == 0) return Containment::Empty;  // vacuously empty at n = 3
    if (outside == 0) return Containment::Full;
    return Containment::Mixed;
}

}  // namespace

CircleClassification classify_circle(const Polygon& p, std::size_t i,
                                     std::size_t j, std::size_t k) {
    return CircleClassification{
        containment_with(p, i, j, k, detail::InCircleFn(&in_circle)),
        adjacency_class(p.size(), i, j, k)};
}

Extremality global_extremality(const Polygon& p, std::size_t i) {
    auto k = static_cast<std::ptrdiff_t>(i);
    auto c = classify_circle(p, p.wrap(k - 1), i, p.wrap(k + 1));
    if (c.containment == Containment::Empty) return Extremality::Max;
    if (c.containment == Containment::Full) return Extremality::Min;
    return Extremality::None;
}

namespace detail {

BoseCounts bose_counts_with_predicate(const Polygon& p, const InCircleFn& fn) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto k = static_cast<std::ptrdiff_t>(i);
        if (orientation(p.at(k - 1), p.at(k), p.at(k + 1)) != Side::Left)
            throw GeometryError(Fault::NotConvex, "bose counts need a convex polygon",
                                {i});
    }
    BoseCounts counts;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Containment c;
                try {
                    c = containment_with(p, i, j, k, fn);
                } catch (const GeometryError& e) {
                    if (e.fault() == Fault::OnCircleWitness ||
                        e.fault() == Fault::CollinearInput)
                        throw GeometryError(Fault::NotGeneric, e.what(),
                                            e.witness());
                    throw;
                }
                Adjacency a = adjacency_class(n, i, j, k);
                if (c == Containment::Mixed) continue;
                long& slot = c == Containment::Empty
                                 ? (a == Adjacency::Neighboring ? counts.s_minus
                                    : a == Adjacency::Disjoint  ? counts.t_minus
                                                                : counts.u_minus)
                                 : (a == Adjacency::Neighboring ? counts.s_plus
                                    : a == Adjacency::Disjoint  ? counts.t_plus
                                                                : counts.u_plus);
                slot += 1;
            }
    return counts;
}

}  // namespace detail

BoseCounts bose_counts(const Polygon& p) {
    return detail::bose_counts_with_predicate(p, detail::InCircleFn(&in_circle));
}

ExtremalityReport analyze(const Polygon& p, const AnalyzeOptions& opt) {
    ExtremalityReport rep;
    rep.n = p.size();
    rep.predicates = polygon_predicates(p, opt.genericity);

    const std::size_t n = p.size();
    rep.sign.resize(n);
    rep.global.resize(n);
    rep.local.resize(n);
    rep.radial.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        try {
            rep.sign[i] = vertex_sign(p, i);
        } catch (const GeometryError&) {}
        try {
            rep.global[i] = global_extremality(p, i);
        } catch (const GeometryError&) {}
        if (n >= 4) {
            try {
                rep.local[i] = local_extremality(p, i);
            } catch (const GeometryError&) {}
        }
        try {
            rep.radial[i] =
                radial_extremality(p, i, RadialOptions{opt.lenient_ties});
        } catch (const GeometryError&) {}
    }

    auto count_if_total = [n](const std::vector<std::optional<Extremality>>& v,
                              std::optional<long>& lo, std::optional<long>& hi) {
        long maxc = 0, minc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!v[i]) return;  // some label undefined: counts unreliable
            if (*v[i] == Extremality::Max) ++maxc;
            if (*v[i] == Extremality::Min) ++minc;
        }
        lo = maxc;  // "-" counts maxima, "+" counts minima
        hi = minc;
    };
    count_if_total(rep.global, rep.s_minus, rep.s_plus);
    count_if_total(rep.local, rep.l_minus, rep.l_plus);
    count_if_total(rep.radial, rep.r_minus, rep.r_plus);

#ifndef NDEBUG
    // Convex cross-check: the pattern definition must agree with the
    // two-point test against C_i (both outside -> Max, both inside -> Min).
    if (rep.predicates.convex && n >= 4) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!rep.local[i]) continue;
            auto k = static_cast<std::ptrdiff_t>(i);
            try {
                CirclePosition back =
                    in_circle(p.at(k - 1), p.at(k), p.at(k + 1), p.at(k - 2));
                CirclePosition fwd =
                    in_circle(p.at(k - 1), p.at(k), p.at(k + 1), p.at(k + 2));
                Extremality expect =
                    back == CirclePosition::Outside && fwd == CirclePosition::Outside
                        ? Extremality::Max
                    : back == CirclePosition::Inside && fwd == CirclePosition::Inside
                        ? Extremality::Min
                        : Extremality::None;
                assert(*rep.local[i] == expect);
            } catch (const GeometryError&) {}
        }
    }
#endif

    if (opt.with_bose && rep.predicates.convex && rep.predicates.generic &&
        opt.genericity == GenericityCheck::Full) {
        try {
            rep.bose = bose_counts(p);
        } catch (const GeometryError&) {}
    }
    return rep;
}

Polygon remove_vertex(const Polygon& p, std::size_t i) {
    if (p.size() < 4)
        throw GeometryError(Fault::TooFewVertices,
                            "cannot remove a vertex of a triangle");
    std::vector<Point> pts;
    pts.reserve(p.size() - 1);
    for (std::size_t j = 0; j < p.size(); ++j)
        if (j != i) pts.push_back(p[j]);
    return Polygon::closed(std::move(pts), Polygon::Normalize::AsGiven);
}

}  // namespace fourvertex
