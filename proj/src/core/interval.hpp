#pragma once

#include <utility>
#include <vector>

#include "core/rational.hpp"

namespace fintopo {

// Nonempty rational interval with per-endpoint openness.  A single point is
// the degenerate case lo == hi with both ends closed.
struct RationalInterval {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static RationalInterval point(Rational p) { return {p, p, true, true}; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const;
    bool intersects(const RationalInterval& o) const;
    bool operator==(const RationalInterval&) const = default;
};

// Finite union of intervals and isolated points, kept normalized: sorted,
// pairwise disjoint, and with touching pieces fused.  (a,b) and (b,c) do
// NOT fuse — b itself is missing, and that distinction is what decides
// projection to the quotient space.
class RationalIntervalSet {
public:
    RationalIntervalSet() = default;

    void add(RationalInterval iv);
    bool contains(const Rational& x) const;
    bool intersects(const RationalInterval& iv) const;
    bool empty() const { return parts_.empty(); }
    const std::vector<RationalInterval>& parts() const { return parts_; }

    bool operator==(const RationalIntervalSet&) const = default;

private:
    std::vector<RationalInterval> parts_;
};

// Continuous piecewise-linear self-map of [0,1], given by breakpoints
// 0 = x_0 < ... < x_m = 1 with values in [0,1]; linear in between.
class PiecewiseLinear {
public:
    explicit PiecewiseLinear(std::vector<std::pair<Rational, Rational>> breakpoints);

    // "0:3/4 1/4:1/4 1:1/2" — breakpoint:value pairs.
    static PiecewiseLinear parse(std::string_view text);

    const std::vector<std::pair<Rational, Rational>>& breakpoints() const {
        return points_;
    }

    Rational evaluate(const Rational& x) const;  // throws out_of_domain

    // Exact image of one quotient cell (a cut point or an open interval),
    // with endpoint openness tracked per linear segment.
    RationalIntervalSet image(const RationalInterval& cell) const;

    std::string to_string() const;

private:
    std::vector<std::pair<Rational, Rational>> points_;
};

}  // namespace fintopo
