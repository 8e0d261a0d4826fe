#pragma once

// Shared fixtures and independent oracles for the unit suites.  The oracles
// here deliberately avoid the implementation paths they check: the family
// counter filters raw set families instead of enumerating preorders, and
// the canonicalization oracle minimizes over explicit permutations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "core/enumeration.hpp"
#include "core/operators.hpp"
#include "core/properties.hpp"
#include "core/space.hpp"

namespace testutil {

using namespace fintopo;

inline PointSet ps(std::initializer_list<int> pts) {
    PointSet s;
    for (int p : pts) s |= PointSet::single(p);
    return s;
}

// Minimal-neighborhood tables of tau_1..tau_9 on {x, y, z}.
inline Space tau(int i) {
    static const std::vector<std::vector<PointSet>> nb = {
        {ps({0}), ps({1}), ps({2})},             // tau1 discrete
        {ps({0}), ps({1}), ps({0, 2})},          // tau2
        {ps({0}), ps({1}), ps({0, 1, 2})},       // tau3
        {ps({0}), ps({0, 1, 2}), ps({0, 1, 2})}, // tau4
        {ps({0}), ps({0, 1}), ps({0, 1, 2})},    // tau5
        {ps({0}), ps({1, 2}), ps({1, 2})},       // tau6
        {ps({0}), ps({0, 1}), ps({0, 2})},       // tau7
        {ps({0, 1}), ps({0, 1}), ps({0, 1, 2})}, // tau8
        {ps({0, 1, 2}), ps({0, 1, 2}), ps({0, 1, 2})}, // tau9 indiscrete
    };
    return Space::from_minbase(3, nb[static_cast<std::size_t>(i - 1)], {"x", "y", "z"});
}

inline Space sierpinski() {
    return Space::from_opens(2, {ps({}), ps({0}), ps({0, 1})}, {"a", "b"});
}

// up-set topology of the chain a < b < c
inline Space chain3() {
    return Space::from_preorder(
        Preorder::from_leq_pairs(3, {{0, 1}, {1, 2}}), {"a", "b", "c"});
}

inline Space cots5() {
    return Space::from_minbase(
        5, {ps({0, 1}), ps({1}), ps({1, 2, 3}), ps({3}), ps({3, 4})},
        {"a", "b", "c", "d", "e"});
}

inline Space indiscrete(int n) {
    std::vector<PointSet> nb(static_cast<std::size_t>(n), PointSet::universe(n));
    return Space::from_minbase(n, nb);
}

inline Space discrete(int n) {
    std::vector<PointSet> nb;
    for (int i = 0; i < n; ++i) nb.push_back(PointSet::single(i));
    return Space::from_minbase(n, nb);
}

inline void forall_spaces(int n, const std::function<void(const Space&)>& fn) {
    enumeration::enumerate_labeled(n, fn);
}

inline void forall_spaces_upto(int max_n, const std::function<void(const Space&)>& fn) {
    for (int n = 1; n <= max_n; ++n) forall_spaces(n, fn);
}

inline void forall_subsets(const Space& sp, const std::function<void(PointSet)>& fn) {
    const std::uint64_t total = sp.universe().bits;
    for (std::uint64_t bits = 0;; ++bits) {
        fn(PointSet{bits});
        if (bits == total) break;
    }
}

// Independent count of the topologies on n labeled points: filter every
// family of subsets containing the empty and full sets for closure under
// pairwise union and intersection.  Only feasible for tiny n.
inline std::uint64_t brute_force_topology_count(int n) {
    const int subsets = 1 << n;
    const std::uint64_t full = static_cast<std::uint64_t>(subsets - 1);
    const int middle = subsets - 2;  // candidates besides {} and X
    std::uint64_t count = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle); ++pick) {
        std::vector<std::uint64_t> family{0, full};
        for (int i = 0; i < middle; ++i)
            if ((pick >> i) & 1u) family.push_back(static_cast<std::uint64_t>(i + 1));
        std::vector<bool> member(static_cast<std::size_t>(subsets), false);
        for (auto s : family) member[static_cast<std::size_t>(s)] = true;
        bool ok = true;
        for (std::size_t i = 0; ok && i < family.size(); ++i)
            for (std::size_t j = i + 1; ok && j < family.size(); ++j) {
                if (!member[static_cast<std::size_t>(family[i] | family[j])]) ok = false;
                if (ok && !member[static_cast<std::size_t>(family[i] & family[j])])
                    ok = false;
            }
        if (ok) ++count;
    }
    return count;
}

// Canonicalization oracle: minimum serialized quotient over all explicit
// permutations of the classes.  Exponential, fine for tiny spaces.
inline std::string permutation_canonical_form(const Space& sp) {
    std::vector<int> cls(static_cast<std::size_t>(sp.size()), -1);
    std::vector<int> rep;
    for (int x = 0; x < sp.size(); ++x) {
        for (std::size_t r = 0; r < rep.size(); ++r)
            if (sp.min_nbhd(x) == sp.min_nbhd(rep[r])) {
                cls[static_cast<std::size_t>(x)] = static_cast<int>(r);
                break;
            }
        if (cls[static_cast<std::size_t>(x)] < 0) {
            cls[static_cast<std::size_t>(x)] = static_cast<int>(rep.size());
            rep.push_back(x);
        }
    }
    const int k = static_cast<int>(rep.size());
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    for (int x = 0; x < sp.size(); ++x) ++size[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])];

    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::string best;
    do {
        std::string form;
        form.push_back(static_cast<char>(k));
        for (int i = 0; i < k; ++i)
            form.push_back(static_cast<char>(size[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]));
        unsigned byte = 0;
        int nbits = 0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const bool leq = sp.leq(rep[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                                        rep[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
                byte = (byte << 1) | (leq ? 1u : 0u);
                if (++nbits == 8) {
                    form.push_back(static_cast<char>(byte));
                    byte = 0;
                    nbits = 0;
                }
            }
        if (nbits) form.push_back(static_cast<char>(byte << (8 - nbits)));
        if (best.empty() || form < best) best = form;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Definition-level homeomorphism oracle: some bijection carries the open
// family of a onto the open family of b.  Factorial, tiny spaces only.
inline bool homeomorphic_bruteforce(const Space& a, const Space& b) {
    if (a.size() != b.size() || a.opens().size() != b.opens().size()) return false;
    const int n = a.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        std::vector<PointSet> mapped;
        mapped.reserve(a.opens().size());
        for (PointSet g : a.opens()) {
            PointSet m;
            for (int p : points(g)) m |= PointSet::single(perm[static_cast<std::size_t>(p)]);
            mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end(), family_less);
        if (mapped == b.opens()) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace testutil
