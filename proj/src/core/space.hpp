#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"
#include "core/pointset.hpp"

namespace fintopo {

// Reflexive transitive relation on point indices.  geq[y] is the set of x
// with y >= x, i.e. the closure of {y} once the relation comes from a space.
struct Preorder {
    int n = 0;
    std::vector<PointSet> geq;

    bool operator==(const Preorder&) const = default;

    // Identity relation plus the given u <= v pairs, closed transitively.
    static Preorder from_leq_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs);

    bool is_reflexive(int* witness = nullptr) const;
    // On failure fills (y, x, w): y >= x and x >= w but not y >= w.
    bool is_transitive(int* wy = nullptr, int* wx = nullptr, int* ww = nullptr) const;
    bool is_antisymmetric() const;

    // {y : y >= x}; equals the minimal neighborhood of x in the induced space.
    PointSet up_set(int x) const;
};

// A finite topological space on points 0..n-1 with the full open family
// materialized, plus cached minimal neighborhoods U_x and the specialization
// preorder (y >= x iff U_y is a subset of U_x).  Immutable once built.
class Space {
public:
    Space() = default;

    // Validates the topology axioms: empty and full set present, closed
    // under pairwise union and intersection.  Duplicates collapse, input
    // order is irrelevant.  Labels default to p0, p1, ...
    static Space from_opens(int n, std::vector<PointSet> opens,
                            std::vector<std::string> labels = {});

    // Builds the topology whose minimal base is the given per-point
    // assignment.  Rejects assignments that cannot be minimal neighborhoods:
    // x must lie in its own set, and y in U_x must satisfy U_y subset U_x.
    static Space from_minbase(int n, const std::vector<PointSet>& min_nbhds,
                              std::vector<std::string> labels = {});

    // Up-set (Alexandroff) topology of a preorder; validates reflexivity
    // and transitivity with witnesses.
    static Space from_preorder(const Preorder& order,
                               std::vector<std::string> labels = {});

    int size() const { return n_; }
    PointSet universe() const { return PointSet::universe(n_); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int p) const { return labels_[static_cast<std::size_t>(p)]; }
    int point(std::string_view label) const;  // -1 when absent

    const std::vector<PointSet>& opens() const { return family_; }
    bool is_open(PointSet s) const;
    bool is_closed(PointSet s) const;

    PointSet min_nbhd(int x) const { return up_[static_cast<std::size_t>(x)]; }
    PointSet point_closure(int x) const { return down_[static_cast<std::size_t>(x)]; }
    bool geq(int y, int x) const { return down_[static_cast<std::size_t>(y)].test(x); }
    bool leq(int x, int y) const { return geq(y, x); }

    // The specialization preorder, rows geq[y] = cl{y}.
    Preorder specialization() const { return Preorder{n_, down_}; }

    // Duplicate-free {U_x}, in canonical family order.  Smallest base.
    std::vector<PointSet> minimal_base() const;

    // Subspace topology {G ∩ s}; points re-indexed ascending, labels kept.
    Space subspace(PointSet s) const;

    bool operator==(const Space& o) const {
        return n_ == o.n_ && labels_ == o.labels_ && family_ == o.family_;
    }

private:
    static Space build_from_up_sets(int n, std::vector<PointSet> up,
                                    std::vector<std::string> labels);
    void build_caches();  // fills up_ and down_ from family_

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<PointSet> family_;  // sorted by family_less
    std::vector<PointSet> up_;      // U_x
    std::vector<PointSet> down_;    // cl{x}
};

std::vector<std::string> default_labels(int n);

}  // namespace fintopo
