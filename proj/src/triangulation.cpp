#include "fourvertex/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace fourvertex {

namespace {

Diagonal norm_pair(std::size_t a, std::size_t b) {
    return a < b ? Diagonal{a, b} : Diagonal{b, a};
}

Triangle norm_tri(std::size_t a, std::size_t b, std::size_t c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

void require_convex(const Polygon& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto k = static_cast<std::ptrdiff_t>(i);
        if (orientation(p.at(k - 1), p.at(k), p.at(k + 1)) != Side::Left)
            throw GeometryError(Fault::NotConvex,
                                "triangulation needs a convex CCW polygon", {i});
    }
}

bool is_boundary(std::size_t n, std::size_t a, std::size_t b) {
    return (a + 1) % n == b || (b + 1) % n == a;
}

// Edge-flip loop shared by both triangulations. `want_inside` is the legal
// position of the opposite vertex relative to a triangle circumcircle:
// Outside for Delaunay, Inside for Anti-Delaunay.
Triangulation flip_triangulate(const Polygon& p, CirclePosition legal_pos,
                               std::uint64_t flip_seed) {
    require_convex(p);
    const std::size_t n = p.size();
    std::vector<Triangle> tris;
    for (std::size_t k = 1; k + 1 < n; ++k) tris.push_back(norm_tri(0, k, k + 1));

    std::mt19937_64 rng(flip_seed);
    const std::size_t flip_budget = 8 * n * n + 64;
    std::size_t flips = 0;

    for (;;) {
        // diagonal -> the two triangles sharing it
        std::map<Diagonal, std::vector<std::size_t>> by_edge;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const Triangle& tr = tris[t];
            for (int e = 0; e < 3; ++e) {
                Diagonal d = norm_pair(tr[e], tr[(e + 1) % 3]);
                if (!is_boundary(n, d.first, d.second)) by_edge[d].push_back(t);
            }
        }
        std::vector<Diagonal> order;
        order.reserve(by_edge.size());
        for (const auto& [d, owners] : by_edge) order.push_back(d);
        if (flip_seed != 0) std::shuffle(order.begin(), order.end(), rng);

        bool flipped = false;
        for (const Diagonal& d : order) {
            const auto& owners = by_edge[d];
            if (owners.size() != 2)
                throw GeometryError(Fault::InternalError,
                                    "diagonal not shared by two triangles",
                                    {d.first, d.second});
            auto third = [&](const Triangle& tr) {
                for (std::size_t v : tr)
                    if (v != d.first && v != d.second) return v;
                throw GeometryError(Fault::InternalError, "degenerate triangle");
            };
            std::size_t b = third(tris[owners[0]]);
            std::size_t c = third(tris[owners[1]]);
            CirclePosition pos = in_circle(p[d.first], p[b], p[d.second], p[c]);
            if (pos == CirclePosition::On)
                throw GeometryError(Fault::NotGeneric,
                                    "concyclic quadruple during flips",
                                    {d.first, b, d.second, c});
            if (pos != legal_pos) {
                tris[owners[0]] = norm_tri(b, c, d.first);
                tris[owners[1]] = norm_tri(b, c, d.second);
                flipped = true;
                if (++flips > flip_budget)
                    throw GeometryError(Fault::InternalError,
                                        "flip budget exceeded");
                break;
            }
        }
        if (!flipped) break;
    }

    Triangulation out{p, {}, {}};
    std::set<Diagonal> diags;
    for (const Triangle& tr : tris)
        for (int e = 0; e < 3; ++e) {
            Diagonal d = norm_pair(tr[e], tr[(e + 1) % 3]);
            if (!is_boundary(n, d.first, d.second)) diags.insert(d);
        }
    out.diagonals.assign(diags.begin(), diags.end());
    std::sort(tris.begin(), tris.end());
    out.triangles = std::move(tris);
    return out;
}

}  // namespace

bool Triangulation::has_diagonal(std::size_t a, std::size_t b) const {
    Diagonal d = norm_pair(a, b);
    return std::binary_search(diagonals.begin(), diagonals.end(), d);
}

Triangulation delaunay(const Polygon& p, std::uint64_t flip_seed) {
    return flip_triangulate(p, CirclePosition::Outside, flip_seed);
}

Triangulation anti_delaunay(const Polygon& p, std::uint64_t flip_seed) {
    return flip_triangulate(p, CirclePosition::Inside, flip_seed);
}

EdgeKind edge_kind(const Polygon& p, std::size_t i, std::size_t j) {
    if (i == j)
        throw GeometryError(Fault::AdjacentEndpoints, "degenerate edge", {i, j});
    if (is_boundary(p.size(), i, j)) return EdgeKind::Both;
    bool dt = delaunay(p).has_diagonal(i, j);
    bool adt = anti_delaunay(p).has_diagonal(i, j);
    if (dt && adt) return EdgeKind::Both;
    if (dt) return EdgeKind::Delaunay;
    if (adt) return EdgeKind::AntiDelaunay;
    return EdgeKind::Neither;
}

bool diagonal_is_balanced(std::size_t n, std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    std::size_t k = b - a;
    return k + 1 >= 4 && n - k + 1 >= 4;
}

Diagonal balanced_diagonal(const Triangulation& t) {
    const std::size_t n = t.polygon.size();
    for (const Diagonal& d : t.diagonals)
        if (diagonal_is_balanced(n, d.first, d.second)) return d;
    throw GeometryError(Fault::NoBalancedDiagonal,
                        "no diagonal leaves >= 4 vertices on both sides");
}

std::vector<Diagonal> fan_diagonals(std::size_t n, std::size_t apex) {
    std::vector<Diagonal> out;
    for (std::size_t k = 2; k + 1 < n; ++k)
        out.push_back(norm_pair(apex, (apex + k) % n));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Triangulations of the fan interval [i..j]; diagonals only.
void enumerate_range(std::size_t i, std::size_t j,
                     std::vector<Diagonal>& acc,
                     std::vector<std::vector<Diagonal>>& out) {
    if (j - i < 2) {
        if (j - i == 1) out.push_back(acc);
        return;
    }
    if (j - i == 2) {
        out.push_back(acc);
        return;
    }
    for (std::size_t k = i + 1; k < j; ++k) {
        std::size_t added = 0;
        if (k - i >= 2) { acc.push_back({i, k}); ++added; }
        if (j - k >= 2) { acc.push_back({k, j}); ++added; }
        // recurse on both sub-intervals; combine by nested enumeration
        std::vector<std::vector<Diagonal>> left;
        {
            std::vector<Diagonal> tmp;
            enumerate_range(i, k, tmp, left);
        }
        std::vector<std::vector<Diagonal>> right;
        {
            std::vector<Diagonal> tmp;
            enumerate_range(k, j, tmp, right);
        }
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Diagonal> full = acc;
                full.insert(full.end(), l.begin(), l.end());
                full.insert(full.end(), r.begin(), r.end());
                std::sort(full.begin(), full.end());
                out.push_back(std::move(full));
            }
        while (added--) acc.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Diagonal>> enumerate_triangulations(std::size_t n) {
    if (n < 3)
        throw GeometryError(Fault::TooFewVertices, "nothing to triangulate");
    std::vector<std::vector<Diagonal>> out;
    std::vector<Diagonal> acc;
    enumerate_range(0, n - 1, acc, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Triangle> triangles_from_diagonals(
    std::size_t n, const std::vector<Diagonal>& diagonals) {
    std::set<Diagonal> edges(diagonals.begin(), diagonals.end());
    auto has_edge = [&](std::size_t a, std::size_t b) {
        if (is_boundary(n, a, b)) return true;
        return edges.count(norm_pair(a, b)) > 0;
    };
    std::vector<Triangle> out;
    // Split the interval [a..b] at the unique m with edges (a,m), (m,b).
    auto split = [&](auto&& self, std::size_t a, std::size_t b) -> void {
        if (b - a < 2) return;
        for (std::size_t m = a + 1; m < b; ++m) {
            if (has_edge(a, m) && has_edge(m, b)) {
                out.push_back(norm_tri(a, m, b));
                self(self, a, m);
                self(self, m, b);
                return;
            }
        }
        throw GeometryError(Fault::InternalError,
                            "diagonal set is not a triangulation", {a, b});
    };
    split(split, 0, n - 1);
    std::sort(out.begin(), out.end());
    if (out.size() != n - 2)
        throw GeometryError(Fault::InternalError,
                            "triangle count mismatch");
    return out;
}

}  // namespace fourvertex
