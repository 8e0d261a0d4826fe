#include "core/interval.hpp"

#include <algorithm>

namespace fintopo {

Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw domain_error(errc::parse,
                           "bad rational '" + std::string(text) + "' (want p/q or integer)");
    };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        if (part.empty() || part == "-") fail();
        for (std::size_t i = 0; i < part.size(); ++i) {
            const char c = part[i];
            if (!((c >= '0' && c <= '9') || (c == '-' && i == 0))) fail();
        }
        return boost::multiprecision::cpp_int(std::string(part));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const auto num = parse_int(text.substr(0, slash));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool RationalInterval::contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

bool RationalInterval::intersects(const RationalInterval& o) const {
    // tightest common bounds; a bound is closed only when closed on the
    // side(s) that attain it
    const RationalInterval* lo_side = this;
    if (o.lo > lo) lo_side = &o;
    bool lo_ok = lo == o.lo ? (lo_closed && o.lo_closed) : lo_side->lo_closed;
    const RationalInterval* hi_side = this;
    if (o.hi < hi) hi_side = &o;
    bool hi_ok = hi == o.hi ? (hi_closed && o.hi_closed) : hi_side->hi_closed;
    if (lo_side->lo < hi_side->hi) return true;
    return lo_side->lo == hi_side->hi && lo_ok && hi_ok;
}

void RationalIntervalSet::add(RationalInterval iv) {
    parts_.push_back(std::move(iv));
    std::sort(parts_.begin(), parts_.end(), [](const RationalInterval& a,
                                               const RationalInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<RationalInterval> merged;
    for (const RationalInterval& p : parts_) {
        if (!merged.empty()) {
            RationalInterval& cur = merged.back();
            const bool overlaps = p.lo < cur.hi;
            const bool touches = p.lo == cur.hi && (p.lo_closed || cur.hi_closed);
            if (overlaps || touches) {
                if (p.hi > cur.hi) {
                    cur.hi = p.hi;
                    cur.hi_closed = p.hi_closed;
                } else if (p.hi == cur.hi) {
                    cur.hi_closed = cur.hi_closed || p.hi_closed;
                }
                continue;
            }
        }
        merged.push_back(p);
    }
    parts_ = std::move(merged);
}

bool RationalIntervalSet::contains(const Rational& x) const {
    for (const RationalInterval& p : parts_)
        if (p.contains(x)) return true;
    return false;
}

bool RationalIntervalSet::intersects(const RationalInterval& iv) const {
    for (const RationalInterval& p : parts_)
        if (p.intersects(iv)) return true;
    return false;
}

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<Rational, Rational>> breakpoints)
    : points_(std::move(breakpoints)) {
    if (points_.size() < 2)
        throw domain_error(errc::invalid_argument,
                           "piecewise-linear map needs at least breakpoints 0 and 1");
    if (points_.front().first != 0 || points_.back().first != 1)
        throw domain_error(errc::invalid_argument,
                           "breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        if (!(points_[i].first < points_[i + 1].first))
            throw domain_error(errc::invalid_argument,
                               "breakpoints must be strictly increasing");
    for (const auto& [x, v] : points_)
        if (v < 0 || v > 1)
            throw domain_error(errc::invalid_argument,
                               "value " + format_rational(v) + " at breakpoint " +
                                   format_rational(x) + " leaves [0,1]");
}

PiecewiseLinear PiecewiseLinear::parse(std::string_view text) {
    std::vector<std::pair<Rational, Rational>> pts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ') ++j;
        const std::string_view tok = text.substr(i, j - i);
        const auto colon = tok.find(':');
        if (colon == std::string_view::npos)
            throw domain_error(errc::parse, "expected breakpoint:value, got '" +
                                                std::string(tok) + "'");
        pts.emplace_back(parse_rational(tok.substr(0, colon)),
                         parse_rational(tok.substr(colon + 1)));
        i = j;
    }
    return PiecewiseLinear(std::move(pts));
}

Rational PiecewiseLinear::evaluate(const Rational& x) const {
    if (x < 0 || x > 1)
        throw domain_error(errc::out_of_domain,
                           format_rational(x) + " is outside [0,1]");
    std::size_t i = 0;
    while (i + 2 < points_.size() && points_[i + 1].first <= x) ++i;
    const auto& [x0, v0] = points_[i];
    const auto& [x1, v1] = points_[i + 1];
    return v0 + (x - x0) * (v1 - v0) / (x1 - x0);
}

RationalIntervalSet PiecewiseLinear::image(const RationalInterval& cell) const {
    RationalIntervalSet out;
    if (cell.is_point()) {
        out.add(RationalInterval::point(evaluate(cell.lo)));
        return out;
    }
    // split the cell at interior breakpoints; interior endpoints are
    // attained, the cell's own endpoints keep their openness
    std::vector<std::pair<Rational, bool>> stops;  // (x, closed here)
    stops.emplace_back(cell.lo, cell.lo_closed);
    for (const auto& [x, v] : points_)
        if (cell.lo < x && x < cell.hi) stops.emplace_back(x, true);
    stops.emplace_back(cell.hi, cell.hi_closed);

    for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
        const auto& [s, s_closed] = stops[i];
        const auto& [e, e_closed] = stops[i + 1];
        const Rational fs = evaluate(s), fe = evaluate(e);
        if (fs == fe) {
            // constant segment: the value is attained at interior points
            out.add(RationalInterval::point(fs));
        } else if (fs < fe) {
            out.add({fs, fe, s_closed, e_closed});
        } else {
            out.add({fe, fs, e_closed, s_closed});
        }
    }
    return out;
}

std::string PiecewiseLinear::to_string() const {
    std::string out;
    for (const auto& [x, v] : points_) {
        if (!out.empty()) out += ' ';
        out += format_rational(x) + ":" + format_rational(v);
    }
    return out;
}

}  // namespace fintopo
