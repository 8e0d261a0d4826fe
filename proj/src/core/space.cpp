#include "core/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace fintopo {

namespace {

// Union closure of a minimal base can have up to 2^n members; keep a hard
// cap so a 64-point antichain fails loudly instead of exhausting memory.
constexpr std::size_t max_family_size = std::size_t{1} << 20;

std::string set_text(const std::vector<std::string>& labels, PointSet s) {
    std::string out = "{";
    bool first = true;
    for (int p : points(s)) {
        if (!first) out += ' ';
        out += labels[static_cast<std::size_t>(p)];
        first = false;
    }
    return out + "}";
}

void check_n(int n, int min_n) {
    if (n < min_n || n > PointSet::max_points)
        throw domain_error(errc::n_out_of_range,
                           "point count must be between " + std::to_string(min_n) +
                               " and 64, got " + std::to_string(n));
}

std::vector<std::string> finalize_labels(int n, std::vector<std::string> labels) {
    if (labels.empty()) return default_labels(n);
    if (static_cast<int>(labels.size()) != n)
        throw domain_error(errc::invalid_argument, "expected " + std::to_string(n) +
                                                       " labels, got " +
                                                       std::to_string(labels.size()));
    return labels;
}

void check_within_universe(int n, const std::vector<PointSet>& sets) {
    const PointSet univ = PointSet::universe(n);
    for (PointSet s : sets)
        if (!s.subset_of(univ))
            throw domain_error(errc::invalid_argument,
                               "set uses point indices beyond the universe", -1, -1,
                               -1, s);
}

}  // namespace

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

Preorder Preorder::from_leq_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs) {
    Preorder p;
    p.n = n;
    p.geq.assign(static_cast<std::size_t>(n), PointSet::empty_set());
    for (int i = 0; i < n; ++i) p.geq[static_cast<std::size_t>(i)] = PointSet::single(i);
    for (auto [u, v] : leq_pairs) p.geq[static_cast<std::size_t>(v)] |= PointSet::single(u);
    // transitive closure; masks make each sweep O(n^2)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < n; ++y) {
            PointSet row = p.geq[static_cast<std::size_t>(y)];
            PointSet acc = row;
            for (int x : points(row)) acc |= p.geq[static_cast<std::size_t>(x)];
            if (!(acc == row)) {
                p.geq[static_cast<std::size_t>(y)] = acc;
                changed = true;
            }
        }
    }
    return p;
}

bool Preorder::is_reflexive(int* witness) const {
    for (int y = 0; y < n; ++y)
        if (!geq[static_cast<std::size_t>(y)].test(y)) {
            if (witness) *witness = y;
            return false;
        }
    return true;
}

bool Preorder::is_transitive(int* wy, int* wx, int* ww) const {
    for (int y = 0; y < n; ++y)
        for (int x : points(geq[static_cast<std::size_t>(y)]))
            if (!geq[static_cast<std::size_t>(x)].subset_of(geq[static_cast<std::size_t>(y)])) {
                PointSet missing =
                    geq[static_cast<std::size_t>(x)] - geq[static_cast<std::size_t>(y)];
                if (wy) *wy = y;
                if (wx) *wx = x;
                if (ww) *ww = missing.lowest();
                return false;
            }
    return true;
}

bool Preorder::is_antisymmetric() const {
    for (int y = 0; y < n; ++y)
        for (int x : points(geq[static_cast<std::size_t>(y)]))
            if (x != y && geq[static_cast<std::size_t>(x)].test(y)) return false;
    return true;
}

PointSet Preorder::up_set(int x) const {
    PointSet up;
    for (int y = 0; y < n; ++y)
        if (geq[static_cast<std::size_t>(y)].test(x)) up |= PointSet::single(y);
    return up;
}

Space Space::from_opens(int n, std::vector<PointSet> opens,
                        std::vector<std::string> labels) {
    check_n(n, 1);
    labels = finalize_labels(n, labels);
    check_within_universe(n, opens);

    std::sort(opens.begin(), opens.end(), family_less);
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

    const PointSet univ = PointSet::universe(n);
    const bool has_empty = !opens.empty() && opens.front().none();
    const bool has_full = !opens.empty() && opens.back() == univ;
    if (!has_empty || !has_full)
        throw domain_error(errc::missing_empty_or_full,
                           std::string("the family must contain ") +
                               (!has_empty ? "the empty set" : "the full set"));

    std::unordered_set<std::uint64_t> members;
    for (PointSet s : opens) members.insert(s.bits);
    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            const PointSet a = opens[i], b = opens[j];
            if (!members.count((a | b).bits))
                throw domain_error(errc::not_closed_under_union,
                                   "union of " + set_text(labels, a) + " and " +
                                       set_text(labels, b) + " is missing",
                                   -1, -1, -1, a, b);
            if (!members.count((a & b).bits))
                throw domain_error(errc::not_closed_under_intersection,
                                   "intersection of " + set_text(labels, a) + " and " +
                                       set_text(labels, b) + " is missing",
                                   -1, -1, -1, a, b);
        }

    Space s;
    s.n_ = n;
    s.labels_ = std::move(labels);
    s.family_ = std::move(opens);
    s.build_caches();
    return s;
}

Space Space::from_minbase(int n, const std::vector<PointSet>& min_nbhds,
                          std::vector<std::string> labels) {
    check_n(n, 1);
    labels = finalize_labels(n, labels);
    if (static_cast<int>(min_nbhds.size()) != n)
        throw domain_error(errc::invalid_argument,
                           "every point needs a neighborhood assignment");
    check_within_universe(n, min_nbhds);

    for (int x = 0; x < n; ++x)
        if (!min_nbhds[static_cast<std::size_t>(x)].test(x))
            throw domain_error(errc::point_not_in_own_neighborhood,
                               labels[static_cast<std::size_t>(x)] +
                                   " does not belong to its own neighborhood",
                               x);
    // the minimal-neighborhood consistency law: y in U_x forces U_y subset U_x
    for (int x = 0; x < n; ++x)
        for (int y : points(min_nbhds[static_cast<std::size_t>(x)]))
            if (!min_nbhds[static_cast<std::size_t>(y)].subset_of(
                    min_nbhds[static_cast<std::size_t>(x)]))
                throw domain_error(
                    errc::inconsistent_base,
                    labels[static_cast<std::size_t>(y)] + " lies in U(" +
                        labels[static_cast<std::size_t>(x)] + ") but U(" +
                        labels[static_cast<std::size_t>(y)] + ") is not contained in U(" +
                        labels[static_cast<std::size_t>(x)] + ")",
                    x, y);

    return build_from_up_sets(n, min_nbhds, std::move(labels));
}

Space Space::from_preorder(const Preorder& order, std::vector<std::string> labels) {
    const int n = order.n;
    check_n(n, 0);
    labels = finalize_labels(n, labels);
    if (static_cast<int>(order.geq.size()) != n)
        throw domain_error(errc::invalid_argument, "relation size mismatch");
    check_within_universe(n, order.geq);

    int w0 = -1, w1 = -1, w2 = -1;
    if (!order.is_reflexive(&w0))
        throw domain_error(errc::not_reflexive,
                           "relation is not reflexive at " +
                               labels[static_cast<std::size_t>(w0)],
                           w0);
    if (!order.is_transitive(&w0, &w1, &w2))
        throw domain_error(errc::not_transitive,
                           "relation is not transitive: " +
                               labels[static_cast<std::size_t>(w0)] + " >= " +
                               labels[static_cast<std::size_t>(w1)] + " >= " +
                               labels[static_cast<std::size_t>(w2)] +
                               " but the outer pair is missing",
                           w0, w1, w2);

    std::vector<PointSet> up(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) up[static_cast<std::size_t>(x)] = order.up_set(x);
    return build_from_up_sets(n, std::move(up), std::move(labels));
}

Space Space::build_from_up_sets(int n, std::vector<PointSet> up,
                                std::vector<std::string> labels) {
    // The open sets of an Alexandroff space are exactly the unions of
    // minimal neighborhoods; close {∅} under single-set unions.
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> work{0};
    while (!work.empty()) {
        const std::uint64_t s = work.back();
        work.pop_back();
        for (int x = 0; x < n; ++x) {
            const std::uint64_t t = s | up[static_cast<std::size_t>(x)].bits;
            if (seen.insert(t).second) {
                if (seen.size() > max_family_size)
                    throw domain_error(errc::family_too_large,
                                       "open family exceeds " +
                                           std::to_string(max_family_size) + " sets");
                work.push_back(t);
            }
        }
    }

    Space s;
    s.n_ = n;
    s.labels_ = std::move(labels);
    s.family_.reserve(seen.size());
    for (std::uint64_t bits : seen) s.family_.push_back(PointSet{bits});
    std::sort(s.family_.begin(), s.family_.end(), family_less);
    s.up_ = std::move(up);
    s.down_.assign(static_cast<std::size_t>(n), PointSet::empty_set());
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if (s.up_[static_cast<std::size_t>(y)].subset_of(s.up_[static_cast<std::size_t>(x)]))
                s.down_[static_cast<std::size_t>(y)] |= PointSet::single(x);
    return s;
}

void Space::build_caches() {
    up_.assign(static_cast<std::size_t>(n_), PointSet::empty_set());
    down_.assign(static_cast<std::size_t>(n_), PointSet::empty_set());
    for (int x = 0; x < n_; ++x) {
        PointSet acc = universe();
        for (PointSet g : family_)
            if (g.test(x)) acc &= g;
        up_[static_cast<std::size_t>(x)] = acc;
    }
    for (int y = 0; y < n_; ++y)
        for (int x = 0; x < n_; ++x)
            if (up_[static_cast<std::size_t>(y)].subset_of(up_[static_cast<std::size_t>(x)]))
                down_[static_cast<std::size_t>(y)] |= PointSet::single(x);
}

int Space::point(std::string_view label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    return -1;
}

bool Space::is_open(PointSet s) const {
    return std::binary_search(family_.begin(), family_.end(), s, family_less);
}

bool Space::is_closed(PointSet s) const { return is_open(s.complement_in(universe())); }

std::vector<PointSet> Space::minimal_base() const {
    std::vector<PointSet> base = up_;
    std::sort(base.begin(), base.end(), family_less);
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return base;
}

Space Space::subspace(PointSet s) const {
    s &= universe();
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    std::vector<std::string> labels;
    int m = 0;
    for (int p : points(s)) {
        pos[static_cast<std::size_t>(p)] = m++;
        labels.push_back(labels_[static_cast<std::size_t>(p)]);
    }

    auto remap = [&](PointSet g) {
        PointSet out;
        for (int p : points(g & s)) out |= PointSet::single(pos[static_cast<std::size_t>(p)]);
        return out;
    };

    std::unordered_set<std::uint64_t> seen;
    std::vector<PointSet> fam;
    for (PointSet g : family_) {
        const PointSet r = remap(g);
        if (seen.insert(r.bits).second) fam.push_back(r);
    }
    std::sort(fam.begin(), fam.end(), family_less);

    Space out;
    out.n_ = m;
    out.labels_ = std::move(labels);
    out.family_ = std::move(fam);
    out.build_caches();
    return out;
}

}  // namespace fintopo
