#pragma once

#include <optional>
#include <vector>

#include "fourvertex/extremality.hpp"
#include "fourvertex/polygon.hpp"

namespace fourvertex {

/// The cyclic sequence of circumcenters O_i of the neighboring circles, in
/// source order. Centers may coincide (the type deliberately does not
/// enforce Polygon's distinct-vertex rule); `degenerate` means all centers
/// are a single point, as for any concyclic source polygon.
struct Evolute {
    std::vector<Point> centers;
    bool degenerate = false;

    /// Centers with cyclically-consecutive duplicates collapsed. This is the
    /// vertex cycle of the evolute as a geometric figure.
    std::vector<Point> distinct_cycle() const;
};

/// Throws CollinearInput (with the triple) when three consecutive vertices
/// are collinear.
Evolute evolute(const Polygon& p);

struct WindingNumber {
    long value = 0;   // nearest integer of raw / 2*pi
    double raw = 0.0; // sum of (pi - angle_i) before division
    double residual() const;  // |raw/2pi - value|
};

/// Discrete winding number (1/2pi) * sum(pi - angle_i) of a closed polygon.
WindingNumber winding_number(const Polygon& p);

/// Winding of the evolute figure; consecutive duplicate centers are
/// collapsed first. Throws DegenerateEvolute when fewer than three distinct
/// centers remain.
WindingNumber evolute_winding(const Evolute& e);

enum class CuspFlag { Cusp, Flat };

struct CuspOptions {
    double tolerance = 1e-6;
    /// Assert index-by-index agreement with local_extremality wherever both
    /// sides are defined.
    bool cross_validate = true;
};

/// Per-vertex cusp classification of the evolute: angle difference within
/// tolerance of +-pi -> Cusp, of 0 -> Flat. Entries are nullopt where either
/// angle is undefined (coincident adjacent centers). Throws
/// UnclassifiableAngle when a difference lands near neither value, and
/// DegenerateEvolute for a point evolute.
std::vector<std::optional<CuspFlag>> cusp_flags(const Polygon& p,
                                                const CuspOptions& opt = {});

struct EvoluteIdentity {
    long n_plus = 0;   // positive locally extremal vertices
    long n_minus = 0;  // negative locally extremal vertices
    WindingNumber wind_p;
    WindingNumber wind_e;
    bool holds = false;
};

/// Checks N+ - N- == 2*wind(P) - 2*wind(E(P)) with integer windings.
EvoluteIdentity verify_evolute_identity(const Polygon& p);

struct EllipseParams {
    double a = 1.0;
    double b = 0.63;
};

struct FlowerParams {
    int k = 6;
    double amplitude = 0.01;  // r(t) = 1 + amplitude * sin(k t)
};

/// Uniform parameter samples converted to exact rationals by decimal
/// truncation (12 digits). m >= 8.
Polygon sample_ellipse(const EllipseParams& params, std::size_t m);
Polygon sample_flower(const FlowerParams& params, std::size_t m);

}  // namespace fourvertex
