#include "core/maps.hpp"

#include "core/operators.hpp"
#include "core/properties.hpp"

namespace fintopo {

PointFunction::PointFunction(Space source, Space target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (static_cast<int>(image_.size()) != source_.size())
        throw domain_error(errc::invalid_argument, "function must be total");
    for (int v : image_)
        if (v < 0 || v >= target_.size())
            throw domain_error(errc::invalid_argument,
                               "image point outside the target universe");
}

PointSet PointFunction::image_of(PointSet s) const {
    PointSet out;
    for (int x : points(s)) out |= PointSet::single((*this)(x));
    return out;
}

PointSet PointFunction::preimage_of(PointSet t) const {
    PointSet out;
    for (int x = 0; x < source_.size(); ++x)
        if (t.test((*this)(x))) out |= PointSet::single(x);
    return out;
}

Multifunction::Multifunction(Space source, Space target, std::vector<PointSet> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (static_cast<int>(image_.size()) != source_.size())
        throw domain_error(errc::invalid_argument, "multifunction must be total");
    for (std::size_t x = 0; x < image_.size(); ++x) {
        if (image_[x].none())
            throw domain_error(errc::empty_image,
                               "multifunction value at " +
                                   source_.label(static_cast<int>(x)) + " is empty",
                               static_cast<int>(x));
        if (!image_[x].subset_of(target_.universe()))
            throw domain_error(errc::invalid_argument,
                               "multifunction value outside the target universe",
                               static_cast<int>(x));
    }
}

PointSet Multifunction::image_of(PointSet s) const {
    PointSet out;
    for (int x : points(s)) out |= (*this)(x);
    return out;
}

namespace maps {

bool continuous_minbase(const PointFunction& f) {
    for (int x = 0; x < f.source().size(); ++x)
        if (!f.image_of(f.source().min_nbhd(x)).subset_of(f.target().min_nbhd(f(x))))
            return false;
    return true;
}

bool continuous_preimage(const PointFunction& f) {
    for (PointSet v : f.target().opens())
        if (!f.source().is_open(f.preimage_of(v))) return false;
    return true;
}

bool is_continuous(const PointFunction& f) {
    const bool a = continuous_minbase(f);
    const bool b = continuous_preimage(f);
    if (a != b)
        throw domain_error(errc::internal,
                           "minimal-base and preimage continuity disagree");
    return a;
}

ContinuityClass continuity_class(const PointFunction& f) {
    ContinuityClass c;
    c.continuous = is_continuous(f);
    c.precontinuous = c.semicontinuous = c.gamma_continuous = true;
    for (PointSet v : f.target().opens()) {
        const PointSet pre = f.preimage_of(v);
        c.precontinuous = c.precontinuous && ops::is_preopen(f.source(), pre);
        c.semicontinuous = c.semicontinuous && ops::is_semiopen(f.source(), pre);
        c.gamma_continuous = c.gamma_continuous && ops::is_gamma_open(f.source(), pre);
    }
    return c;
}

OpennessClass openness_class(const PointFunction& f) {
    OpennessClass c;
    c.open = c.preopen = c.semiopen = c.gamma_open = true;
    for (PointSet g : f.source().opens()) {
        const PointSet img = f.image_of(g);
        c.open = c.open && f.target().is_open(img);
        c.preopen = c.preopen && ops::is_preopen(f.target(), img);
        c.semiopen = c.semiopen && ops::is_semiopen(f.target(), img);
        c.gamma_open = c.gamma_open && ops::is_gamma_open(f.target(), img);
    }
    return c;
}

bool is_open_map(const PointFunction& f) {
    for (PointSet g : f.source().opens())
        if (!f.target().is_open(f.image_of(g))) return false;
    return true;
}

bool is_closed_map(const PointFunction& f) {
    for (PointSet g : f.source().opens())
        if (!f.target().is_closed(f.image_of(g.complement_in(f.source().universe()))))
            return false;
    return true;
}

MultiVerdict usc_minbase(const Multifunction& f) {
    for (int x = 0; x < f.source().size(); ++x) {
        const PointSet got = f.image_of(f.source().min_nbhd(x));
        PointSet bound;
        for (int y : points(f(x))) bound |= f.target().min_nbhd(y);
        if (!got.subset_of(bound)) return {false, x, -1, -1, got, bound};
    }
    return {};
}

MultiVerdict usc_definitional(const Multifunction& f) {
    for (int x = 0; x < f.source().size(); ++x)
        for (PointSet v : f.target().opens()) {
            if (!f(x).subset_of(v)) continue;
            bool some_u = false;
            for (PointSet u : f.source().opens())
                if (u.test(x) && f.image_of(u).subset_of(v)) {
                    some_u = true;
                    break;
                }
            if (!some_u) return {false, x, -1, -1, f(x), v};
        }
    return {};
}

MultiVerdict lsc_minbase(const Multifunction& f) {
    for (int x = 0; x < f.source().size(); ++x)
        for (int xp : points(f.source().min_nbhd(x)))
            for (int y : points(f(x)))
                if (!f(xp).intersects(f.target().min_nbhd(y)))
                    return {false, x, xp, y, f(xp), f.target().min_nbhd(y)};
    return {};
}

MultiVerdict lsc_definitional(const Multifunction& f) {
    for (int x = 0; x < f.source().size(); ++x)
        for (PointSet v : f.target().opens()) {
            if (!f(x).intersects(v)) continue;
            bool some_u = false;
            for (PointSet u : f.source().opens()) {
                if (!u.test(x)) continue;
                bool all_meet = true;
                for (int xp : points(u))
                    if (!f(xp).intersects(v)) {
                        all_meet = false;
                        break;
                    }
                if (all_meet) {
                    some_u = true;
                    break;
                }
            }
            if (!some_u) return {false, x, -1, -1, f(x), v};
        }
    return {};
}

MultiVerdict is_usc(const Multifunction& f) {
    const MultiVerdict a = usc_minbase(f);
    if (a.holds != usc_definitional(f).holds)
        throw domain_error(errc::internal, "U.S.C check routes disagree");
    return a;
}

MultiVerdict is_lsc(const Multifunction& f) {
    const MultiVerdict a = lsc_minbase(f);
    if (a.holds != lsc_definitional(f).holds)
        throw domain_error(errc::internal, "L.S.C check routes disagree");
    return a;
}

OpenMapTheorem check_open_map_theorem(const PointFunction& f) {
    const Space& target = f.target();
    if (!props::is_t0(target) || props::dimension_inductive(target) > 1)
        throw domain_error(errc::target_not_one_dimensional_t0,
                           "theorem requires a T0 target of dimension at most 1");

    OpenMapTheorem out;
    bool hyp = is_continuous(f);
    const PointSet closed = props::closed_points(target);
    const PointSet open = props::open_points(target);
    for (int y : points(closed)) {
        if (!hyp) break;
        const PointSet fiber = f.preimage_of(PointSet::single(y));
        if (fiber.count() != 1) {
            hyp = false;
            break;
        }
        for (int z : points(target.min_nbhd(y) & open)) {
            const PointSet zfiber = f.preimage_of(PointSet::single(z));
            if (!fiber.subset_of(ops::closure(f.source(), zfiber))) {
                hyp = false;
                break;
            }
        }
    }
    out.hypotheses_hold = hyp;
    out.is_open = is_open_map(f);
    return out;
}

PointFunction as_function(const Multifunction& f) {
    std::vector<int> image;
    image.reserve(static_cast<std::size_t>(f.source().size()));
    for (int x = 0; x < f.source().size(); ++x) {
        if (f(x).count() != 1)
            throw domain_error(errc::invalid_argument,
                               "multifunction is not single-valued at " +
                                   f.source().label(x),
                               x);
        image.push_back(f(x).lowest());
    }
    return {f.source(), f.target(), std::move(image)};
}

Multifunction as_multifunction(const PointFunction& f) {
    std::vector<PointSet> image;
    image.reserve(static_cast<std::size_t>(f.source().size()));
    for (int x = 0; x < f.source().size(); ++x)
        image.push_back(PointSet::single(f(x)));
    return {f.source(), f.target(), std::move(image)};
}

}  // namespace maps
}  // namespace fintopo
