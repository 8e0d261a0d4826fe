#include "core/operators.hpp"

namespace fintopo::ops {

PointSet closure(const Space& sp, PointSet a) {
    PointSet out;
    for (int p : points(a)) out |= sp.point_closure(p);
    return out;
}

PointSet closure_def(const Space& sp, PointSet a) {
    PointSet out = sp.universe();
    for (PointSet g : sp.opens()) {
        const PointSet closed = g.complement_in(sp.universe());
        if (a.subset_of(closed)) out &= closed;
    }
    return out;
}

PointSet interior(const Space& sp, PointSet a) {
    PointSet out;
    for (int p : points(a))
        if (sp.min_nbhd(p).subset_of(a)) out |= PointSet::single(p);
    return out;
}

PointSet interior_def(const Space& sp, PointSet a) {
    PointSet out;
    for (PointSet g : sp.opens())
        if (g.subset_of(a)) out |= g;
    return out;
}

PointSet boundary(const Space& sp, PointSet a) {
    return closure(sp, a) & closure(sp, a.complement_in(sp.universe()));
}

PointSet boundary_def(const Space& sp, PointSet a) {
    return closure_def(sp, a) - interior_def(sp, a);
}

PointSet exterior(const Space& sp, PointSet a) {
    return closure(sp, a).complement_in(sp.universe());
}

PointSet exterior_def(const Space& sp, PointSet a) {
    return interior_def(sp, a.complement_in(sp.universe()));
}

PointSet derived_set(const Space& sp, PointSet a) {
    PointSet out;
    for (int x = 0; x < sp.size(); ++x)
        if ((sp.min_nbhd(x).without(x) & a).any()) out |= PointSet::single(x);
    return out;
}

PointSet derived_set_def(const Space& sp, PointSet a) {
    PointSet out;
    for (int x = 0; x < sp.size(); ++x) {
        bool accumulation = true;
        for (PointSet g : sp.opens())
            if (g.test(x) && (g.without(x) & a).none()) {
                accumulation = false;
                break;
            }
        if (accumulation) out |= PointSet::single(x);
    }
    return out;
}

PointSet closure_of_interior(const Space& sp, PointSet a) {
    return closure(sp, interior(sp, a));
}

PointSet interior_of_closure(const Space& sp, PointSet a) {
    return interior(sp, closure(sp, a));
}

namespace {
PointSet maximal_points(const Space& sp) {
    // in a T0 space these are the open points U_x = {x}
    PointSet out;
    for (int x = 0; x < sp.size(); ++x)
        if (sp.min_nbhd(x) == PointSet::single(x)) out |= PointSet::single(x);
    return out;
}
}  // namespace

PointSet closure_of_interior_via_maximal(const Space& sp, PointSet a) {
    // lower bounds of the maximal elements of X that lie in a
    return closure(sp, maximal_points(sp) & a);
}

PointSet interior_of_closure_via_maximal(const Space& sp, PointSet a) {
    // points whose maximal upper bounds all lie in a
    const PointSet max = maximal_points(sp);
    PointSet out;
    for (int x = 0; x < sp.size(); ++x)
        if ((sp.min_nbhd(x) & max).subset_of(a)) out |= PointSet::single(x);
    return out;
}

bool is_semiopen(const Space& sp, PointSet a) {
    return a.subset_of(closure_of_interior(sp, a));
}

bool is_preopen(const Space& sp, PointSet a) {
    return a.subset_of(interior_of_closure(sp, a));
}

bool is_gamma_open(const Space& sp, PointSet a) {
    return a.subset_of(interior_of_closure(sp, a) | closure_of_interior(sp, a));
}

bool is_dense(const Space& sp, PointSet a) {
    return closure(sp, a) == sp.universe();
}

SetClassification classify_set(const Space& sp, PointSet a) {
    SetClassification c;
    c.open = sp.is_open(a);
    c.closed = sp.is_closed(a);
    c.clopen = c.open && c.closed;
    c.semiopen = is_semiopen(sp, a);
    c.preopen = is_preopen(sp, a);
    c.gamma_open = is_gamma_open(sp, a);
    c.dense = is_dense(sp, a);
    c.codense = interior(sp, a).none();
    c.nowhere_dense = interior_of_closure(sp, a).none();
    const PointSet d = derived_set(sp, a);
    c.dense_in_itself = a == d;
    c.no_isolated_points = a.subset_of(d);
    return c;
}

}  // namespace fintopo::ops
