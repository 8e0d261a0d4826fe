#pragma once

#include "core/interval.hpp"
#include "core/maps.hpp"
#include "core/space.hpp"

namespace fintopo {

// Quotient of [0,1] onto a finite COTS: cut points 0 = t_0 < ... < t_k = 1
// collapse to single points, the open intervals between them likewise.
// The quotient space has 2k+1 points, alternating cut point (even index)
// and interval point (odd index); U(interval point) = itself, U(cut point)
// = itself plus the adjacent interval points.
class CotsQuotient {
public:
    explicit CotsQuotient(std::vector<Rational> cuts);

    // "0,1/2,1" — comma-separated cut list.
    static CotsQuotient parse(std::string_view text);

    const std::vector<Rational>& cuts() const { return cuts_; }
    const Space& space() const { return space_; }
    int point_count() const { return space_.size(); }
    bool is_cut_point(int i) const { return i % 2 == 0; }

    // Fiber of a quotient point: {t_i} or (t_i, t_{i+1}).
    RationalInterval fiber(int i) const;

    // Quotient points whose fiber meets s.
    PointSet project(const RationalIntervalSet& s) const;
    PointSet project_point(const Rational& x) const;

    // g(y) = project(f(fiber(y))), the induced multifunction on the COTS.
    Multifunction induced(const PiecewiseLinear& f) const;

private:
    std::vector<Rational> cuts_;
    Space space_;
};

}  // namespace fintopo
