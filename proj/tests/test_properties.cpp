#include "doctest.h"
#include "helpers.hpp"

using namespace fintopo;
using testutil::ps;
using testutil::tau;

TEST_CASE("T0 on the catalog") {
    for (int i : {1, 2, 3, 5, 7}) CHECK(props::is_t0(tau(i)));
    for (int i : {4, 6, 8, 9}) CHECK_FALSE(props::is_t0(tau(i)));
    CHECK(props::is_t0(testutil::discrete(1)));
}

TEST_CASE("open and closed points") {
    CHECK(props::open_points(tau(3)) == ps({0, 1}));
    CHECK(props::closed_points(tau(3)) == ps({2}));
    const Space d = testutil::discrete(3);
    CHECK(props::open_points(d) == d.universe());
    CHECK(props::closed_points(d) == d.universe());
    CHECK(props::open_points(tau(2)) == ps({0, 1}));
    CHECK(props::closed_points(tau(2)) == ps({1, 2}));
}

TEST_CASE("open (closed) points are the maximal (minimal) elements in T0 spaces") {
    testutil::forall_spaces_upto(4, [](const Space& sp) {
        if (!props::is_t0(sp)) return;
        PointSet maximal, minimal;
        for (int x = 0; x < sp.size(); ++x) {
            if (sp.min_nbhd(x) == PointSet::single(x)) maximal |= PointSet::single(x);
            if (sp.point_closure(x) == PointSet::single(x)) minimal |= PointSet::single(x);
        }
        CHECK(props::open_points(sp) == maximal);
        CHECK(props::closed_points(sp) == minimal);
    });
}

TEST_CASE("every nonempty T0 space has an isolated point (n<=4)") {
    testutil::forall_spaces_upto(4, [](const Space& sp) {
        if (props::is_t0(sp)) CHECK(props::has_isolated_point(sp));
    });
    CHECK_FALSE(props::has_isolated_point(testutil::indiscrete(2)));
    CHECK(props::has_isolated_point(tau(4)));  // isolated but not T0
}

TEST_CASE("every open set of a T0 space contains an isolated point (n<=4)") {
    testutil::forall_spaces_upto(4, [](const Space& sp) {
        if (!props::is_t0(sp)) return;
        const PointSet iso = props::open_points(sp);
        for (PointSet g : sp.opens())
            if (g.any()) CHECK((g & iso).any());
    });
}

TEST_CASE("T1/2 via singletons") {
    CHECK(props::is_t_half(tau(3)));
    CHECK_FALSE(props::is_t_half(testutil::chain3()));
    CHECK(props::is_t_half(testutil::discrete(4)));
}

TEST_CASE("inductive dimension of the standard examples") {
    CHECK(props::dimension_inductive(testutil::discrete(3)) == 0);
    CHECK(props::dimension_inductive(tau(3)) == 1);
    CHECK(props::dimension_inductive(testutil::chain3()) == 2);
    CHECK(props::dimension_inductive(tau(3).subspace(ps({}))) == -1);
    CHECK(props::dimension_inductive(testutil::indiscrete(2)) == 0);
    CHECK(props::dimension_inductive(tau(6)) == 0);
}

TEST_CASE("dimension agrees with a naive subspace recursion (n<=4)") {
    // oracle: materialize every boundary subspace instead of masking
    std::function<int(const Space&)> naive = [&](const Space& sp) -> int {
        if (sp.size() == 0) return -1;
        int dim = -1;
        for (PointSet u : sp.minimal_base()) {
            const PointSet bd = ops::closure_def(sp, u) - ops::interior_def(sp, u);
            dim = std::max(dim, naive(sp.subspace(bd)) + 1);
        }
        return dim;
    };
    testutil::forall_spaces_upto(4, [&](const Space& sp) {
        CHECK(props::dimension_inductive(sp) == naive(sp));
    });
}

TEST_CASE("poset height") {
    CHECK(props::poset_height(testutil::discrete(3)) == 1);
    CHECK(props::poset_height(tau(3)) == 2);
    CHECK(props::poset_height(testutil::chain3()) == 3);
    try {
        props::poset_height(tau(9));
        FAIL("expected not_t0");
    } catch (const domain_error& e) {
        CHECK(e.code() == errc::not_t0);
    }
}

TEST_CASE("dim = height - 1 and dim<=1 iff T1/2, all T0 spaces n<=4") {
    testutil::forall_spaces_upto(4, [](const Space& sp) {
        if (!props::is_t0(sp)) return;
        CHECK(props::dimension_inductive(sp) == props::poset_height(sp) - 1);
        CHECK((props::dimension_inductive(sp) <= 1) == props::is_t_half(sp));
    });
}

TEST_CASE("dim = 0 iff clopen base; clopen base + T0 implies discrete") {
    testutil::forall_spaces_upto(4, [](const Space& sp) {
        CHECK((props::dimension_inductive(sp) == 0) ==
              (props::has_clopen_base(sp) && sp.size() > 0));
        if (props::is_t0(sp) && props::has_clopen_base(sp))
            CHECK(props::is_discrete(sp));
    });
    // tau6 has the clopen base {{x},{y,z}} but is not discrete (not T0)
    CHECK(props::has_clopen_base(tau(6)));
    CHECK_FALSE(props::is_discrete(tau(6)));
    CHECK_FALSE(props::is_t0(tau(6)));
}

TEST_CASE("closed-point/open-point decompositions give discrete subspaces (n<=4)") {
    testutil::forall_spaces_upto(4, [](const Space& sp) {
        const PointSet open = props::open_points(sp);
        const PointSet closed = props::closed_points(sp);
        testutil::forall_subsets(sp, [&](PointSet c) {
            const PointSet v = c.complement_in(sp.universe());
            if (!c.subset_of(closed) || !v.subset_of(open)) return;
            CHECK(props::is_discrete(sp.subspace(c)));
            CHECK(props::is_discrete(sp.subspace(v)));
        });
    });
}

TEST_CASE("submaximal examples") {
    CHECK(props::is_submaximal(testutil::discrete(3)));
    CHECK(props::is_submaximal(testutil::sierpinski()));
    CHECK_FALSE(props::is_submaximal(testutil::chain3()));
    // {a c} witnesses the chain: dense (contains the open point c) but not open
    CHECK(ops::is_dense(testutil::chain3(), ps({0, 2})));
    CHECK_FALSE(testutil::chain3().is_open(ps({0, 2})));
}

TEST_CASE("tau7 refutes the at-most-one-non-isolated-point characterization") {
    // Every dense subset of tau7 is open, yet y and z are both non-isolated.
    const Space t7 = tau(7);
    CHECK(props::is_submaximal(t7));
    CHECK(props::open_points(t7).count() == 1);
    testutil::forall_subsets(t7, [&](PointSet a) {
        if (ops::is_dense(t7, a)) CHECK(t7.is_open(a));
    });
}

TEST_CASE("submaximal equals the neighborhood criterion on T0 spaces (n<=4)") {
    testutil::forall_spaces_upto(4, [](const Space& sp) {
        bool criterion = props::is_t0(sp);
        if (criterion) {
            const PointSet open = props::open_points(sp);
            for (int x = 0; x < sp.size(); ++x)
                if (!sp.min_nbhd(x).without(x).subset_of(open)) criterion = false;
        }
        CHECK(props::is_submaximal(sp) == criterion);
    });
}

TEST_CASE("submaximal T0 implies T1/2 implies dim<=1 (n<=4)") {
    testutil::forall_spaces_upto(4, [](const Space& sp) {
        if (!props::is_t0(sp)) return;
        if (props::is_submaximal(sp)) CHECK(props::is_t_half(sp));
        if (props::is_t_half(sp)) CHECK(props::dimension_inductive(sp) <= 1);
    });
}

TEST_CASE("connected components") {
    const auto comps = props::connected_components(tau(6));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == ps({0}));
    CHECK(comps[1] == ps({1, 2}));
    CHECK(props::is_connected(tau(3)));
    CHECK_FALSE(props::is_connected(testutil::discrete(2)));
}

TEST_CASE("components are clopen and connected via the clopen criterion (n<=4)") {
    testutil::forall_spaces_upto(4, [](const Space& sp) {
        const auto comps = props::connected_components(sp);
        PointSet all;
        for (PointSet c : comps) {
            CHECK_FALSE((all & c).any());  // partition
            all |= c;
            CHECK(sp.is_open(c));
            CHECK(sp.is_closed(c));
            // no proper nonempty clopen set inside the component's subspace
            const Space sub = sp.subspace(c);
            for (PointSet g : sub.opens())
                if (g.any() && !(g == sub.universe())) CHECK_FALSE(sub.is_closed(g));
        }
        CHECK(all == sp.universe());
    });
}

TEST_CASE("COTS checks") {
    CHECK(props::is_cots(testutil::cots5()));
    CHECK_FALSE(props::is_cots(testutil::discrete(3)));
    CHECK_FALSE(props::is_cots(tau(6)));
    CHECK_FALSE(props::is_cots(testutil::chain3()));
    CHECK(props::is_cots(tau(3)));  // 3-point COTS with two open endpoints
    CHECK(props::is_cots(tau(7)));  // 3-point COTS with two closed endpoints
}

TEST_CASE("report on tau3 matches the catalog") {
    const auto r = props::report(tau(3));
    CHECK(r.t0);
    CHECK_FALSE(r.t1);
    CHECK(r.t_half);
    CHECK_FALSE(r.discrete);
    CHECK_FALSE(r.indiscrete);
    CHECK(r.submaximal);
    CHECK(r.connected);
    CHECK(r.cots);
    CHECK(r.dim_inductive == 1);
    CHECK(r.height == 2);
    CHECK(r.open_points == ps({0, 1}));
    CHECK(r.closed_points == ps({2}));
    CHECK(r.isolated_points == ps({0, 1}));
    REQUIRE(r.components.size() == 1);
}

TEST_CASE("report height is absent exactly for non-T0 spaces") {
    for (int i = 1; i <= 9; ++i) {
        const auto r = props::report(tau(i));
        CHECK(r.height.has_value() == r.t0);
    }
}
