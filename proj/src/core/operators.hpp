#pragma once

#include "core/space.hpp"

namespace fintopo::ops {

// Every operator comes in two flavours: the default one computed from the
// specialization order (O(n) mask work) and a `_def` one computed straight
// from the open-set family.  They must agree everywhere; the family route
// is the oracle the order route is tested against.

PointSet closure(const Space& sp, PointSet a);       // lower bounds of points of a
PointSet closure_def(const Space& sp, PointSet a);   // smallest closed superset
PointSet interior(const Space& sp, PointSet a);      // {x in a : U_x subset a}
PointSet interior_def(const Space& sp, PointSet a);  // largest open subset
PointSet boundary(const Space& sp, PointSet a);
PointSet boundary_def(const Space& sp, PointSet a);
PointSet exterior(const Space& sp, PointSet a);
PointSet exterior_def(const Space& sp, PointSet a);
PointSet derived_set(const Space& sp, PointSet a);      // (U_x \ {x}) meets a
PointSet derived_set_def(const Space& sp, PointSet a);  // over all opens G containing x

PointSet closure_of_interior(const Space& sp, PointSet a);
PointSet interior_of_closure(const Space& sp, PointSet a);

// Order characterizations via maximal elements; valid for T0 spaces, where
// the maximal elements are exactly the open points.
PointSet closure_of_interior_via_maximal(const Space& sp, PointSet a);
PointSet interior_of_closure_via_maximal(const Space& sp, PointSet a);

bool is_semiopen(const Space& sp, PointSet a);    // a subset cl int a
bool is_preopen(const Space& sp, PointSet a);     // a subset int cl a
bool is_gamma_open(const Space& sp, PointSet a);  // a subset int cl a | cl int a
bool is_dense(const Space& sp, PointSet a);

struct SetClassification {
    bool open = false;
    bool closed = false;
    bool clopen = false;
    bool semiopen = false;
    bool preopen = false;
    bool gamma_open = false;
    bool dense = false;
    bool codense = false;          // int a empty
    bool nowhere_dense = false;    // int cl a empty
    bool dense_in_itself = false;  // a == d(a)
    bool no_isolated_points = false;  // a subset d(a)
};

SetClassification classify_set(const Space& sp, PointSet a);

}  // namespace fintopo::ops
