#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "fourvertex/geometry.hpp"

namespace fourvertex {

/// Cyclic, oriented vertex sequence. Vertices are pairwise distinct; all
/// index arithmetic is modulo the vertex count.
class Polygon {
public:
    enum class Normalize { ToCcw, AsGiven };

    /// Closed polygon. With Normalize::ToCcw a clockwise input is reversed
    /// and the reversal recorded.
    static Polygon closed(std::vector<Point> pts, Normalize norm = Normalize::ToCcw);

    /// Open polygonal curve (no wrap-around edge).
    static Polygon open_curve(std::vector<Point> pts);

    std::size_t size() const { return pts_.size(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }

    /// Index reduced modulo n (accepts negatives).
    std::size_t wrap(std::ptrdiff_t i) const;
    const Point& at(std::ptrdiff_t i) const { return pts_[wrap(i)]; }

    bool is_closed() const { return closed_; }
    bool was_reversed() const { return reversed_; }

    /// Twice the signed area of the stored sequence (exact).
    const Rational& signed_area2() const { return area2_; }
    bool stored_ccw() const { return area2_.sign() > 0; }

    /// Same vertex set, traversal reversed. Orientation flags recomputed.
    Polygon reversed() const;

private:
    Polygon(std::vector<Point> pts, bool closed, bool reversed);

    std::vector<Point> pts_;
    Rational area2_;
    bool closed_ = true;
    bool reversed_ = false;
};

/// How expensive a genericity scan to run. Full is the exhaustive
/// no-3-collinear / no-4-concyclic check (O(n^3), O(n^4)); ConsecutiveOnly
/// restricts both scans to the sliding windows the per-vertex operations
/// actually consume, which is what large sampled curves need.
enum class GenericityCheck { Full, ConsecutiveOnly };

struct PredicateReport {
    bool convex = false;
    bool simple = false;
    bool ccw = false;
    bool generic = false;
    bool coherent = false;
    GenericityCheck genericity_mode = GenericityCheck::Full;

    std::vector<std::size_t> nonconvex_witness;                // non-left turns
    std::vector<std::array<std::size_t, 2>> crossing_witness;  // edge index pairs
    std::vector<std::array<std::size_t, 3>> collinear_witness;
    std::vector<std::array<std::size_t, 4>> concyclic_witness;
    std::vector<std::size_t> incoherent_witness;               // cone test failures
    /// Equal neighboring circumradii, reported separately from concyclicity.
    std::vector<std::array<std::size_t, 2>> radius_tie_witness;
};

/// Report-style predicate bundle; never throws on a degenerate polygon, it
/// records witnesses instead.
PredicateReport polygon_predicates(const Polygon& p,
                                   GenericityCheck mode = GenericityCheck::Full);

/// Left interior angle at vertex i of a closed polygon.
Angle left_angle(const Polygon& p, std::size_t i);

}  // namespace fourvertex
