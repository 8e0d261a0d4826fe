#pragma once

#include <optional>
#include <vector>

#include "core/space.hpp"

namespace fintopo::props {

bool is_t0(const Space& sp);  // minimal neighborhoods pairwise distinct
bool is_t1(const Space& sp);  // every singleton closed; finite case: discrete
bool is_discrete(const Space& sp);
bool is_indiscrete(const Space& sp);

PointSet open_points(const Space& sp);    // {x : U_x = {x}}
PointSet closed_points(const Space& sp);  // {x : cl{x} = {x}}
bool has_isolated_point(const Space& sp);
bool is_t_half(const Space& sp);  // every singleton open or closed

// Inductive dimension over the minimal base: -1 for the empty space,
// otherwise max over x of dim(boundary of U_x as a subspace) + 1.
int dimension_inductive(const Space& sp);

// Number of elements of a longest strictly increasing chain.  Throws
// not_t0 when the specialization relation is not a partial order.
int poset_height(const Space& sp);

// Every dense subset open.  Definitional sweep for small spaces; for
// larger ones the equivalent neighborhood criterion (see is_submaximal
// in properties.cpp) is used.
bool is_submaximal(const Space& sp);

// Classes of the symmetric-transitive closure of comparability, each a
// clopen set; ordered by smallest member.
std::vector<PointSet> connected_components(const Space& sp);
bool is_connected(const Space& sp);

// Connected, and among any three points one separates the other two into
// distinct components of its complement subspace.
bool is_cots(const Space& sp);

bool has_clopen_base(const Space& sp);  // every U_x clopen

struct SpaceReport {
    bool t0 = false, t1 = false, t_half = false;
    bool discrete = false, indiscrete = false, submaximal = false;
    bool connected = false, cots = false;
    int dim_inductive = -1;
    std::optional<int> height;  // empty when not T0
    PointSet open_points, closed_points, isolated_points;
    std::vector<PointSet> components;
};

SpaceReport report(const Space& sp);

}  // namespace fintopo::props
