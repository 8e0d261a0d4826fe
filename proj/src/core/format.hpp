#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/maps.hpp"
#include "core/space.hpp"

namespace fintopo::format {

// Space text format, line-oriented, '#' starts a comment:
//   points: x y z
// followed by exactly one of
//   opens: {} {x} {x y} {x y z}
//   minbase: x:{x} y:{y} z:{x y z}
//   order: a<b b<c        (u<v declares u <= v; closure applied)
// Parse failures throw parse_error with 1-based line and column.
Space parse_space(std::string_view text);

std::string format_space_opens(const Space& sp);
std::string format_space_minbase(const Space& sp);

// "{a b c}" against a space's labels.
PointSet parse_point_set(const Space& sp, std::string_view text);
std::string set_to_string(const Space& sp, PointSet s);

// "x:x y:z z:y" — every source point exactly once.
PointFunction parse_point_map(const Space& src, const Space& dst, std::string_view text);
// "a:{a b} b:{a}"
Multifunction parse_multi_map(const Space& src, const Space& dst, std::string_view text);

// DOT digraph of the covering relation; edges point upward (u -> v means v
// covers u).  Neighborhood-equivalent points merge into one node labeled
// with the member list.
std::string hasse_dot(const Space& sp);

}  // namespace fintopo::format
