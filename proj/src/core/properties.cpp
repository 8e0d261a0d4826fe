#include "core/properties.hpp"

#include <unordered_map>

#include "core/operators.hpp"

namespace fintopo::props {

bool is_t0(const Space& sp) {
    for (int x = 0; x < sp.size(); ++x)
        for (int y = x + 1; y < sp.size(); ++y)
            if (sp.min_nbhd(x) == sp.min_nbhd(y)) return false;
    return true;
}

bool is_t1(const Space& sp) {
    for (int x = 0; x < sp.size(); ++x)
        if (!(sp.point_closure(x) == PointSet::single(x))) return false;
    return true;
}

bool is_discrete(const Space& sp) {
    for (int x = 0; x < sp.size(); ++x)
        if (!(sp.min_nbhd(x) == PointSet::single(x))) return false;
    return true;
}

bool is_indiscrete(const Space& sp) {
    for (int x = 0; x < sp.size(); ++x)
        if (!(sp.min_nbhd(x) == sp.universe())) return false;
    return true;
}

PointSet open_points(const Space& sp) {
    PointSet out;
    for (int x = 0; x < sp.size(); ++x)
        if (sp.min_nbhd(x) == PointSet::single(x)) out |= PointSet::single(x);
    return out;
}

PointSet closed_points(const Space& sp) {
    PointSet out;
    for (int x = 0; x < sp.size(); ++x)
        if (sp.point_closure(x) == PointSet::single(x)) out |= PointSet::single(x);
    return out;
}

bool has_isolated_point(const Space& sp) { return open_points(sp).any(); }

bool is_t_half(const Space& sp) {
    const PointSet ok = open_points(sp) | closed_points(sp);
    return ok == sp.universe();
}

namespace {

// Relative operators on a subset mask of the root space; the subspace
// order is the restriction of the root order, so boundaries of minimal
// neighborhoods never need a materialized subspace.
int dim_mask(const Space& sp, PointSet s,
             std::unordered_map<std::uint64_t, int>& memo) {
    if (s.none()) return -1;
    if (auto it = memo.find(s.bits); it != memo.end()) return it->second;
    int dim = -1;
    for (int x : points(s)) {
        const PointSet u = sp.min_nbhd(x) & s;  // minimal nbhd within s; open there
        PointSet cl;
        for (int a : points(u)) cl |= sp.point_closure(a);
        cl &= s;
        PointSet in;
        for (int a : points(u))
            if ((sp.min_nbhd(a) & s).subset_of(u)) in |= PointSet::single(a);
        const PointSet bd = cl - in;
        const int d = dim_mask(sp, bd, memo) + 1;
        if (d > dim) dim = d;
    }
    memo.emplace(s.bits, dim);
    return dim;
}

}  // namespace

int dimension_inductive(const Space& sp) {
    std::unordered_map<std::uint64_t, int> memo;
    return dim_mask(sp, sp.universe(), memo);
}

int poset_height(const Space& sp) {
    if (!is_t0(sp))
        throw domain_error(errc::not_t0, "height requires a T0 space (partial order)");
    std::vector<int> h(static_cast<std::size_t>(sp.size()), 0);
    // chain length ending upward from x; memoized DFS over the strict order
    auto rec = [&](auto&& self, int x) -> int {
        int& hx = h[static_cast<std::size_t>(x)];
        if (hx) return hx;
        hx = 1;
        for (int y : points(sp.min_nbhd(x).without(x))) hx = std::max(hx, self(self, y) + 1);
        return hx;
    };
    int best = 0;
    for (int x = 0; x < sp.size(); ++x) best = std::max(best, rec(rec, x));
    return best;
}

bool is_submaximal(const Space& sp) {
    if (sp.size() <= 20) {
        const std::uint64_t total = PointSet::universe(sp.size()).bits;
        for (std::uint64_t bits = 0; bits <= total; ++bits) {
            const PointSet a{bits};
            if (ops::is_dense(sp, a) && !sp.is_open(a)) return false;
            if (bits == total) break;
        }
        return true;
    }
    // Equivalent criterion: the space is T0 and every minimal neighborhood
    // consists of its own point plus open points only.
    if (!is_t0(sp)) return false;
    const PointSet open = open_points(sp);
    for (int x = 0; x < sp.size(); ++x)
        if (!sp.min_nbhd(x).without(x).subset_of(open)) return false;
    return true;
}

std::vector<PointSet> connected_components(const Space& sp) {
    std::vector<PointSet> comps;
    PointSet done;
    for (int x = 0; x < sp.size(); ++x) {
        if (done.test(x)) continue;
        PointSet comp = PointSet::single(x);
        PointSet frontier = comp;
        while (frontier.any()) {
            PointSet next;
            for (int p : points(frontier))
                next |= sp.min_nbhd(p) | sp.point_closure(p);
            frontier = next - comp;
            comp |= next;
        }
        comps.push_back(comp);
        done |= comp;
    }
    return comps;
}

bool is_connected(const Space& sp) { return connected_components(sp).size() <= 1; }

namespace {

// component ids of the comparability graph restricted to mask s
std::vector<int> component_ids(const Space& sp, PointSet s) {
    std::vector<int> id(static_cast<std::size_t>(sp.size()), -1);
    int next = 0;
    for (int x : points(s)) {
        if (id[static_cast<std::size_t>(x)] >= 0) continue;
        PointSet comp = PointSet::single(x);
        PointSet frontier = comp;
        while (frontier.any()) {
            PointSet grow;
            for (int p : points(frontier))
                grow |= (sp.min_nbhd(p) | sp.point_closure(p)) & s;
            frontier = grow - comp;
            comp |= grow;
        }
        for (int p : points(comp)) id[static_cast<std::size_t>(p)] = next;
        ++next;
    }
    return id;
}

}  // namespace

bool is_cots(const Space& sp) {
    if (!is_connected(sp)) return false;
    const int n = sp.size();
    if (n < 3) return true;
    std::vector<std::vector<int>> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y)
        ids.push_back(component_ids(sp, sp.universe().without(y)));
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r) {
                const int tri[3] = {p, q, r};
                bool separated = false;
                for (int i = 0; i < 3 && !separated; ++i) {
                    const int y = tri[i];
                    const int u = tri[(i + 1) % 3], v = tri[(i + 2) % 3];
                    separated = ids[static_cast<std::size_t>(y)][static_cast<std::size_t>(u)] !=
                                ids[static_cast<std::size_t>(y)][static_cast<std::size_t>(v)];
                }
                if (!separated) return false;
            }
    return true;
}

bool has_clopen_base(const Space& sp) {
    for (PointSet u : sp.minimal_base())
        if (!sp.is_closed(u)) return false;
    return true;
}

SpaceReport report(const Space& sp) {
    SpaceReport r;
    r.t0 = is_t0(sp);
    r.t1 = is_t1(sp);
    r.t_half = is_t_half(sp);
    r.discrete = is_discrete(sp);
    r.indiscrete = is_indiscrete(sp);
    r.submaximal = is_submaximal(sp);
    r.components = connected_components(sp);
    r.connected = r.components.size() <= 1;
    r.cots = is_cots(sp);
    r.dim_inductive = dimension_inductive(sp);
    if (r.t0) r.height = poset_height(sp);
    r.open_points = open_points(sp);
    r.closed_points = closed_points(sp);
    r.isolated_points = r.open_points;
    return r;
}

}  // namespace fintopo::props
