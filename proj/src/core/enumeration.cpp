#include "core/enumeration.hpp"

#include <algorithm>
#include <map>

#include "core/properties.hpp"

namespace fintopo::enumeration {

int max_enumeration_n(bool allow_large) { return allow_large ? 6 : 5; }

namespace {

void check_range(int n, bool allow_large) {
    if (n < 1 || n > max_enumeration_n(allow_large))
        throw domain_error(errc::n_out_of_range,
                           "enumeration supports 1 <= n <= " +
                               std::to_string(max_enumeration_n(allow_large)));
}

std::vector<std::string> letter_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return labels;
}

// Row-by-row DFS.  Row y is the set of x with y >= x; the diagonal bit is
// forced.  Transitivity over already-placed rows prunes the search, and at
// a leaf every pair has been checked.
void dfs_rows(int n, int y, std::vector<PointSet>& rows,
              const std::function<void(const Preorder&)>& visit) {
    if (y == n) {
        visit(Preorder{n, rows});
        return;
    }
    const std::uint64_t universe = PointSet::universe(n).bits;
    const std::uint64_t self = std::uint64_t{1} << y;
    const std::uint64_t others = universe & ~self;
    std::uint64_t rest = 0;
    for (;;) {
        const PointSet row{rest | self};
        bool ok = true;
        for (int x : points(row)) {
            if (x >= y) continue;
            if (!rows[static_cast<std::size_t>(x)].subset_of(row)) {
                ok = false;
                break;
            }
        }
        for (int i = 0; ok && i < y; ++i)
            if (rows[static_cast<std::size_t>(i)].test(y) &&
                !row.subset_of(rows[static_cast<std::size_t>(i)]))
                ok = false;
        if (ok) {
            rows[static_cast<std::size_t>(y)] = row;
            dfs_rows(n, y + 1, rows, visit);
        }
        rest = (rest - others) & others;  // next subset, ascending
        if (rest == 0) break;
    }
}

}  // namespace

void enumerate_preorders(int n, const std::function<void(const Preorder&)>& visit,
                         bool allow_large) {
    check_range(n, allow_large);
    std::vector<PointSet> rows(static_cast<std::size_t>(n));
    dfs_rows(n, 0, rows, visit);
}

void enumerate_labeled(int n, const std::function<void(const Space&)>& visit,
                       bool allow_large) {
    const auto labels = letter_labels(n);
    enumerate_preorders(
        n, [&](const Preorder& p) { visit(Space::from_preorder(p, labels)); },
        allow_large);
}

std::uint64_t count_labeled(int n, bool allow_large) {
    std::uint64_t count = 0;
    enumerate_preorders(n, [&](const Preorder&) { ++count; }, allow_large);
    return count;
}

namespace {

// Quotient of the space by neighborhood equivalence: classes of equal U_x,
// their sizes, and the induced partial order between classes.
struct Quotient {
    int k = 0;
    std::vector<int> size;
    std::vector<std::vector<bool>> leq;  // leq[i][j]: class i <= class j
};

Quotient quotient_poset(const Space& sp) {
    Quotient q;
    std::vector<int> cls(static_cast<std::size_t>(sp.size()), -1);
    std::vector<int> rep;
    for (int x = 0; x < sp.size(); ++x) {
        for (int r = 0; r < static_cast<int>(rep.size()); ++r)
            if (sp.min_nbhd(x) == sp.min_nbhd(rep[static_cast<std::size_t>(r)])) {
                cls[static_cast<std::size_t>(x)] = r;
                break;
            }
        if (cls[static_cast<std::size_t>(x)] < 0) {
            cls[static_cast<std::size_t>(x)] = static_cast<int>(rep.size());
            rep.push_back(x);
        }
    }
    q.k = static_cast<int>(rep.size());
    q.size.assign(static_cast<std::size_t>(q.k), 0);
    for (int x = 0; x < sp.size(); ++x) ++q.size[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])];
    q.leq.assign(static_cast<std::size_t>(q.k),
                 std::vector<bool>(static_cast<std::size_t>(q.k), false));
    for (int i = 0; i < q.k; ++i)
        for (int j = 0; j < q.k; ++j)
            q.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                sp.leq(rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]);
    return q;
}

CanonicalForm serialize(const Quotient& q, const std::vector<int>& order) {
    CanonicalForm out;
    out.push_back(static_cast<char>(q.k));
    for (int c : order) out.push_back(static_cast<char>(q.size[static_cast<std::size_t>(c)]));
    unsigned byte = 0;
    int nbits = 0;
    for (int i = 0; i < q.k; ++i)
        for (int j = 0; j < q.k; ++j) {
            byte = (byte << 1) |
                   (q.leq[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
                         [static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]
                        ? 1u
                        : 0u);
            if (++nbits == 8) {
                out.push_back(static_cast<char>(byte));
                byte = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>(byte << (8 - nbits)));
    return out;
}

// Equitable refinement: split cells by (size, relations to every current
// cell) until stable.  Cell ids are assigned in sorted key order, so the
// partition is isomorphism-invariant.
std::vector<int> refine(const Quotient& q, std::vector<int> cell) {
    const int k = q.k;
    for (;;) {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) {
            auto& key = keys[static_cast<std::size_t>(c)];
            key.push_back(cell[static_cast<std::size_t>(c)]);
            key.push_back(q.size[static_cast<std::size_t>(c)]);
            std::vector<int> rel;
            for (int d = 0; d < k; ++d) {
                if (d == c) continue;
                const bool up = q.leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
                const bool dn = q.leq[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)];
                if (up || dn)
                    rel.push_back(cell[static_cast<std::size_t>(d)] * 4 + (up ? 2 : 0) +
                                  (dn ? 1 : 0));
            }
            std::sort(rel.begin(), rel.end());
            key.insert(key.end(), rel.begin(), rel.end());
        }
        std::vector<std::vector<int>> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c)
            next[static_cast<std::size_t>(c)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<std::size_t>(c)]) -
                sorted.begin());
        if (next == cell) return cell;
        cell = std::move(next);
    }
}

// u and v are interchangeable when transposing them is an automorphism of
// the weighted quotient poset; branching on one representative then covers
// the whole swap class (this is what keeps antichains linear, not k!).
bool swappable(const Quotient& q, int u, int v) {
    if (q.size[static_cast<std::size_t>(u)] != q.size[static_cast<std::size_t>(v)]) return false;
    if (q.leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
        q.leq[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
        return false;
    for (int w = 0; w < q.k; ++w) {
        if (w == u || w == v) continue;
        if (q.leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] !=
                q.leq[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] ||
            q.leq[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] !=
                q.leq[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)])
            return false;
    }
    return true;
}

void search(const Quotient& q, std::vector<int> cell, CanonicalForm& best, bool& have) {
    cell = refine(q, cell);
    const int k = q.k;
    // find the first non-singleton cell
    int target = -1;
    for (int id = 0; id < k && target < 0; ++id) {
        int count = 0;
        for (int c = 0; c < k; ++c)
            if (cell[static_cast<std::size_t>(c)] == id) ++count;
        if (count > 1) target = id;
    }
    if (target < 0) {
        std::vector<int> order(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) order[static_cast<std::size_t>(cell[static_cast<std::size_t>(c)])] = c;
        CanonicalForm form = serialize(q, order);
        if (!have || form < best) {
            best = std::move(form);
            have = true;
        }
        return;
    }
    std::vector<int> members;
    for (int c = 0; c < k; ++c)
        if (cell[static_cast<std::size_t>(c)] == target) members.push_back(c);
    std::vector<int> branch;
    for (int m : members) {
        bool dup = false;
        for (int b : branch)
            if (swappable(q, b, m)) {
                dup = true;
                break;
            }
        if (!dup) branch.push_back(m);
    }
    for (int m : branch) {
        // individualize m: give it its own cell ordered before the rest
        std::vector<int> next(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) {
            int id = cell[static_cast<std::size_t>(c)] * 2;
            if (cell[static_cast<std::size_t>(c)] == target && c != m) id += 1;
            next[static_cast<std::size_t>(c)] = id;
        }
        search(q, std::move(next), best, have);
    }
}

}  // namespace

CanonicalForm canonical_form(const Space& sp) {
    const Quotient q = quotient_poset(sp);
    CanonicalForm best;
    bool have = false;
    search(q, std::vector<int>(static_cast<std::size_t>(q.k), 0), best, have);
    return best;
}

std::string canonical_hex(const CanonicalForm& form) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : form) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

bool is_homeomorphic(const Space& a, const Space& b) {
    if (a.size() != b.size() || a.opens().size() != b.opens().size()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<TopologyClass> enumerate_classes(int n, bool t0_only, bool allow_large) {
    std::map<CanonicalForm, TopologyClass> classes;
    enumerate_labeled(
        n,
        [&](const Space& sp) {
            if (t0_only && !props::is_t0(sp)) return;
            CanonicalForm form = canonical_form(sp);
            auto [it, inserted] = classes.try_emplace(form);
            if (inserted) {
                it->second.form = form;
                it->second.representative = sp;
            }
            ++it->second.labeled_count;
        },
        allow_large);
    std::vector<TopologyClass> out;
    out.reserve(classes.size());
    for (auto& [form, cls] : classes) out.push_back(std::move(cls));
    return out;
}

}  // namespace fintopo::enumeration
