#pragma once

#include <vector>

#include "core/space.hpp"

namespace fintopo {

// Total single-valued function between finite spaces.  Owns copies of both
// spaces so handles stay valid independently of their origin.
class PointFunction {
public:
    PointFunction(Space source, Space target, std::vector<int> image);

    const Space& source() const { return source_; }
    const Space& target() const { return target_; }
    int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& image_table() const { return image_; }

    PointSet image_of(PointSet s) const;
    PointSet preimage_of(PointSet t) const;

private:
    Space source_, target_;
    std::vector<int> image_;
};

// Total set-valued function; every value nonempty.
class Multifunction {
public:
    Multifunction(Space source, Space target, std::vector<PointSet> image);

    const Space& source() const { return source_; }
    const Space& target() const { return target_; }
    PointSet operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
    const std::vector<PointSet>& image_table() const { return image_; }

    PointSet image_of(PointSet s) const;  // union of values over s

private:
    Space source_, target_;
    std::vector<PointSet> image_;
};

namespace maps {

bool continuous_minbase(const PointFunction& f);   // f(U_x) subset U_f(x) everywhere
bool continuous_preimage(const PointFunction& f);  // preimages of opens are open
// Both routes; they provably agree, and a mismatch raises internal_error.
bool is_continuous(const PointFunction& f);

struct ContinuityClass {
    bool continuous = false;
    bool precontinuous = false;
    bool semicontinuous = false;
    bool gamma_continuous = false;
};
ContinuityClass continuity_class(const PointFunction& f);

struct OpennessClass {
    bool open = false;
    bool preopen = false;
    bool semiopen = false;
    bool gamma_open = false;
};
OpennessClass openness_class(const PointFunction& f);

bool is_open_map(const PointFunction& f);
bool is_closed_map(const PointFunction& f);

// Verdict of a semicontinuity check with the failure witness when it fails.
// For the minimal-base route: `point` is x, `got`/`bound` are the compared
// sets, and for L.S.C `via_point`/`target_point` are the violating pair
// (x', y).  For the definitional route `bound` holds the violating open V.
struct MultiVerdict {
    bool holds = true;
    int point = -1;
    int via_point = -1;
    int target_point = -1;
    PointSet got, bound;
};

MultiVerdict usc_minbase(const Multifunction& f);
MultiVerdict usc_definitional(const Multifunction& f);
MultiVerdict lsc_minbase(const Multifunction& f);
MultiVerdict lsc_definitional(const Multifunction& f);
// Both routes, agreement enforced; returns the minimal-base verdict.
MultiVerdict is_usc(const Multifunction& f);
MultiVerdict is_lsc(const Multifunction& f);

// Open-map theorem checker: hypotheses (continuity, singleton fibers over
// closed points, fiber-closure condition) and the conclusion evaluated
// independently.  Requires a T0 target of dimension <= 1.
struct OpenMapTheorem {
    bool hypotheses_hold = false;
    bool is_open = false;
};
OpenMapTheorem check_open_map_theorem(const PointFunction& f);

PointFunction as_function(const Multifunction& f);  // all values singletons
Multifunction as_multifunction(const PointFunction& f);

}  // namespace maps
}  // namespace fintopo
