#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "core/maps.hpp"

using namespace fintopo;
using testutil::ps;
using testutil::tau;

namespace {

// all functions src -> dst via an odometer over point images
void forall_functions(const Space& src, const Space& dst,
                      const std::function<void(const PointFunction&)>& fn) {
    const int n = src.size(), m = dst.size();
    std::vector<int> image(static_cast<std::size_t>(n), 0);
    for (;;) {
        fn(PointFunction(src, dst, image));
        int i = 0;
        while (i < n && ++image[static_cast<std::size_t>(i)] == m) {
            image[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }
}

Space cots3() {
    return Space::from_minbase(3, {ps({0, 1}), ps({1}), ps({1, 2})}, {"A", "B", "C"});
}

}  // namespace

TEST_CASE("identity is continuous; the tau3 -> tau5 swap is not") {
    const Space t3 = tau(3);
    CHECK(maps::is_continuous(PointFunction(t3, t3, {0, 1, 2})));
    CHECK_FALSE(maps::is_continuous(PointFunction(t3, tau(5), {0, 2, 1})));
}

TEST_CASE("the induced self-map of the 5-point COTS is continuous") {
    const Space c5 = testutil::cots5();
    // a->c, b->d, c->e, d->e, e->e
    CHECK(maps::is_continuous(PointFunction(c5, c5, {2, 3, 4, 4, 4})));
}

TEST_CASE("continuity class of the tau3 -> tau5 swap") {
    const auto c = maps::continuity_class(PointFunction(tau(3), tau(5), {0, 2, 1}));
    CHECK_FALSE(c.continuous);
    CHECK_FALSE(c.precontinuous);
    CHECK(c.semicontinuous);
    CHECK(c.gamma_continuous);
}

TEST_CASE("constant map to a closed point is continuous") {
    const Space t3 = tau(3);
    const auto c = maps::continuity_class(PointFunction(t3, t3, {2, 2, 2}));
    CHECK(c.continuous);
    CHECK(c.precontinuous);
    CHECK(c.semicontinuous);
    CHECK(c.gamma_continuous);
}

TEST_CASE("openness class of the identity") {
    const Space t3 = tau(3);
    const auto c = maps::openness_class(PointFunction(t3, t3, {0, 1, 2}));
    CHECK(c.open);
    CHECK(c.preopen);
    CHECK(c.semiopen);
    CHECK(c.gamma_open);
}

TEST_CASE("some tau5 -> 4-point function is gamma-open but not preopen") {
    const Space four = Space::from_minbase(
        4, {ps({0}), ps({1}), ps({0, 1, 2, 3}), ps({0, 1, 2, 3})},
        {"a", "b", "c", "d"});
    int found = 0;
    forall_functions(tau(5), four, [&](const PointFunction& f) {
        const auto c = maps::openness_class(f);
        if (c.gamma_open && !c.preopen) ++found;
    });
    CHECK(found > 0);
    MESSAGE("gamma-open-not-preopen witnesses among the 64 functions: ", found);
}

TEST_CASE("minimal-base continuity equals preimage continuity (all pairs n<=3)") {
    std::vector<Space> all;
    for (int n = 1; n <= 3; ++n)
        testutil::forall_spaces(n, [&](const Space& sp) { all.push_back(sp); });
    for (const Space& src : all)
        for (const Space& dst : all)
            forall_functions(src, dst, [](const PointFunction& f) {
                CHECK(maps::continuous_minbase(f) == maps::continuous_preimage(f));
            });
}

TEST_CASE("implication diagrams for continuity and openness (all pairs n<=3)") {
    std::vector<Space> all;
    for (int n = 1; n <= 3; ++n)
        testutil::forall_spaces(n, [&](const Space& sp) { all.push_back(sp); });
    for (const Space& src : all)
        for (const Space& dst : all) {
            const bool src_t0 = props::is_t0(src);
            const bool dst_t0 = props::is_t0(dst);
            forall_functions(src, dst, [&](const PointFunction& f) {
                const auto c = maps::continuity_class(f);
                if (c.continuous) CHECK(c.precontinuous);
                if (c.precontinuous) CHECK(c.gamma_continuous);
                if (c.semicontinuous) CHECK(c.gamma_continuous);
                if (src_t0) {  // the finite-space collapse needs T0 preimage side
                    if (c.precontinuous) CHECK(c.semicontinuous);
                    CHECK(c.semicontinuous == c.gamma_continuous);
                }
                const auto o = maps::openness_class(f);
                if (o.open) CHECK(o.preopen);
                if (o.preopen) CHECK(o.gamma_open);
                if (o.semiopen) CHECK(o.gamma_open);
                if (dst_t0) {
                    if (o.preopen) CHECK(o.semiopen);
                    CHECK(o.semiopen == o.gamma_open);
                }
            });
        }
}

TEST_CASE("two-point multifunction F: L.S.C but not U.S.C") {
    const Space s = testutil::sierpinski();
    const Multifunction f(s, s, {ps({0, 1}), ps({0})});
    const auto usc = maps::is_usc(f);
    CHECK_FALSE(usc.holds);
    CHECK(usc.point == 1);  // fails at b
    CHECK(usc.got == ps({0, 1}));
    CHECK(usc.bound == ps({0}));
    CHECK(maps::is_lsc(f).holds);
}

TEST_CASE("corrected companion G: U.S.C but not L.S.C") {
    const Space s = testutil::sierpinski();
    const Multifunction g(s, s, {ps({1}), ps({0, 1})});
    CHECK(maps::is_usc(g).holds);
    const auto lsc = maps::is_lsc(g);
    CHECK_FALSE(lsc.holds);
    CHECK(lsc.point == 1);       // at b
    CHECK(lsc.via_point == 0);   // x' = a
    CHECK(lsc.target_point == 0);  // y = a: G(a) misses U_a
    // the variant with G(a)={a} is L.S.C, so only this G witnesses
    // the U.S.C-without-L.S.C side
    const Multifunction variant(s, s, {ps({0}), ps({0, 1})});
    CHECK(maps::is_lsc(variant).holds);
}

TEST_CASE("identity-as-multifunction is U.S.C and L.S.C") {
    const Space t3 = tau(3);
    const Multifunction id(t3, t3, {ps({0}), ps({1}), ps({2})});
    CHECK(maps::is_usc(id).holds);
    CHECK(maps::is_lsc(id).holds);
}

TEST_CASE("empty multifunction values are rejected") {
    const Space s = testutil::sierpinski();
    try {
        Multifunction(s, s, {ps({0}), ps({})});
        FAIL("expected empty_image");
    } catch (const domain_error& e) {
        CHECK(e.code() == errc::empty_image);
        CHECK(e.point(0) == 1);
    }
}

TEST_CASE("minimal-base vs definitional U.S.C/L.S.C, all 2-point multifunctions") {
    std::vector<Space> twos;
    testutil::forall_spaces(2, [&](const Space& sp) { twos.push_back(sp); });
    const PointSet values[] = {ps({0}), ps({1}), ps({0, 1})};
    bool usc_not_lsc = false, lsc_not_usc = false;
    for (const Space& src : twos)
        for (const Space& dst : twos)
            for (PointSet va : values)
                for (PointSet vb : values) {
                    const Multifunction f(src, dst, {va, vb});
                    const bool usc = maps::usc_minbase(f).holds;
                    const bool lsc = maps::lsc_minbase(f).holds;
                    CHECK(usc == maps::usc_definitional(f).holds);
                    CHECK(lsc == maps::lsc_definitional(f).holds);
                    usc_not_lsc = usc_not_lsc || (usc && !lsc);
                    lsc_not_usc = lsc_not_usc || (lsc && !usc);
                }
    // the two notions are independent already on two points
    CHECK(usc_not_lsc);
    CHECK(lsc_not_usc);
}

TEST_CASE("minimal-base vs definitional on 10^4 random 3-point multifunctions") {
    std::vector<Space> threes;
    testutil::forall_spaces(3, [&](const Space& sp) { threes.push_back(sp); });
    std::mt19937 rng(20020901);
    std::uniform_int_distribution<std::size_t> pick_space(0, threes.size() - 1);
    std::uniform_int_distribution<std::uint64_t> pick_value(1, 7);
    for (int trial = 0; trial < 10000; ++trial) {
        const Space& src = threes[pick_space(rng)];
        const Space& dst = threes[pick_space(rng)];
        std::vector<PointSet> image;
        for (int x = 0; x < 3; ++x) image.push_back(PointSet{pick_value(rng)});
        const Multifunction f(src, dst, std::move(image));
        CHECK(maps::usc_minbase(f).holds == maps::usc_definitional(f).holds);
        CHECK(maps::lsc_minbase(f).holds == maps::lsc_definitional(f).holds);
    }
}

TEST_CASE("single-valued multifunction: U.S.C and L.S.C iff continuous (n<=3)") {
    std::vector<Space> all;
    for (int n = 1; n <= 3; ++n)
        testutil::forall_spaces(n, [&](const Space& sp) { all.push_back(sp); });
    for (const Space& src : all)
        for (const Space& dst : all)
            forall_functions(src, dst, [](const PointFunction& f) {
                const Multifunction m = maps::as_multifunction(f);
                const bool both = maps::is_usc(m).holds && maps::is_lsc(m).holds;
                CHECK(both == maps::is_continuous(f));
            });
}

TEST_CASE("round trip between functions and singleton multifunctions") {
    const Space t3 = tau(3);
    const PointFunction f(t3, t3, {2, 2, 0});
    const PointFunction back = maps::as_function(maps::as_multifunction(f));
    CHECK(back.image_table() == f.image_table());
    const Multifunction not_single(t3, t3, {ps({0, 1}), ps({2}), ps({0})});
    CHECK_THROWS_AS(maps::as_function(not_single), domain_error);
}

TEST_CASE("open-map theorem on the COTS refinement") {
    const Space c5 = testutil::cots5();
    const Space c3 = cots3();
    // a,b,c,d,e -> A,B,B,B,C
    const PointFunction pi(c5, c3, {0, 1, 1, 1, 2});
    const auto r = maps::check_open_map_theorem(pi);
    CHECK(r.hypotheses_hold);
    CHECK(r.is_open);
    CHECK_FALSE(maps::is_closed_map(pi));  // image of the closed {c} is {B}
}

TEST_CASE("open-map theorem: identity and constant-to-open-point") {
    const Space t3 = tau(3);
    const auto id = maps::check_open_map_theorem(PointFunction(t3, t3, {0, 1, 2}));
    CHECK(id.is_open);

    const Space s = testutil::sierpinski();
    // constant onto the open point a: the closed point b has an empty fiber
    const auto c = maps::check_open_map_theorem(PointFunction(s, s, {0, 0}));
    CHECK_FALSE(c.hypotheses_hold);
    CHECK(c.is_open);
}

TEST_CASE("open-map theorem rejects unsuitable targets") {
    const Space t3 = tau(3);
    try {
        maps::check_open_map_theorem(PointFunction(t3, tau(5), {0, 0, 0}));
        FAIL("expected target_not_one_dimensional_t0");  // tau5 has dimension 2
    } catch (const domain_error& e) {
        CHECK(e.code() == errc::target_not_one_dimensional_t0);
    }
    CHECK_THROWS_AS(maps::check_open_map_theorem(PointFunction(t3, tau(9), {0, 0, 0})),
                    domain_error);
}

TEST_CASE("theorem property: hypotheses imply openness (exhaustive 3-point)") {
    std::vector<Space> threes;
    testutil::forall_spaces(3, [&](const Space& sp) { threes.push_back(sp); });
    for (const Space& src : threes)
        for (const Space& dst : threes) {
            if (!props::is_t0(dst) || props::dimension_inductive(dst) > 1) continue;
            forall_functions(src, dst, [](const PointFunction& f) {
                const auto r = maps::check_open_map_theorem(f);
                if (r.hypotheses_hold) CHECK(r.is_open);
            });
        }
}
