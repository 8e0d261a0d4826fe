#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "core/pointset.hpp"

namespace fintopo {

enum class errc {
    invalid_argument,
    parse,
    missing_empty_or_full,
    not_closed_under_union,
    not_closed_under_intersection,
    not_reflexive,
    not_transitive,
    point_not_in_own_neighborhood,
    inconsistent_base,
    not_t0,
    n_out_of_range,
    out_of_domain,
    target_not_one_dimensional_t0,
    empty_image,
    family_too_large,
    internal,
};

constexpr const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument: return "invalid_argument";
        case errc::parse: return "parse_error";
        case errc::missing_empty_or_full: return "missing_empty_or_full";
        case errc::not_closed_under_union: return "not_closed_under_union";
        case errc::not_closed_under_intersection: return "not_closed_under_intersection";
        case errc::not_reflexive: return "not_reflexive";
        case errc::not_transitive: return "not_transitive";
        case errc::point_not_in_own_neighborhood: return "point_not_in_own_neighborhood";
        case errc::inconsistent_base: return "inconsistent_base";
        case errc::not_t0: return "not_t0";
        case errc::n_out_of_range: return "n_out_of_range";
        case errc::out_of_domain: return "out_of_domain";
        case errc::target_not_one_dimensional_t0: return "target_not_one_dimensional_t0";
        case errc::empty_image: return "empty_image";
        case errc::family_too_large: return "family_too_large";
        case errc::internal: return "internal_error";
    }
    return "unknown";
}

// Domain failure with up to three point witnesses and two set witnesses, so
// callers (and tests) can inspect exactly what went wrong.
class domain_error : public std::runtime_error {
public:
    domain_error(errc code, const std::string& msg, int p0 = -1, int p1 = -1,
                 int p2 = -1, PointSet s0 = {}, PointSet s1 = {})
        : std::runtime_error(msg), code_(code), points_{p0, p1, p2}, sets_{s0, s1} {}

    errc code() const { return code_; }
    int point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    PointSet set(int i) const { return sets_[static_cast<std::size_t>(i)]; }

private:
    errc code_;
    std::array<int, 3> points_;
    std::array<PointSet, 2> sets_;
};

// Text-format failure with a 1-based source position.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace fintopo
