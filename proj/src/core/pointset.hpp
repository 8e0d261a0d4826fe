#pragma once

#include <bit>
#include <cstdint>

namespace fintopo {

// A subset of a space's points, one bit per point index.  Spaces are capped
// at 64 points, so every set operation is a single machine-word op.
struct PointSet {
    std::uint64_t bits = 0;

    static constexpr int max_points = 64;

    static constexpr PointSet empty_set() { return {}; }
    static constexpr PointSet single(int p) { return {std::uint64_t{1} << p}; }
    static constexpr PointSet universe(int n) {
        return {n >= 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << (n < 0 ? 0 : n)) - 1};
    }

    constexpr bool test(int p) const { return (bits >> p) & 1u; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool none() const { return bits == 0; }
    constexpr bool any() const { return bits != 0; }
    constexpr bool subset_of(PointSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(PointSet o) const { return (bits & o.bits) != 0; }
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr PointSet with(int p) const { return {bits | (std::uint64_t{1} << p)}; }
    constexpr PointSet without(int p) const { return {bits & ~(std::uint64_t{1} << p)}; }
    constexpr PointSet complement_in(PointSet univ) const { return {univ.bits & ~bits}; }

    friend constexpr PointSet operator|(PointSet a, PointSet b) { return {a.bits | b.bits}; }
    friend constexpr PointSet operator&(PointSet a, PointSet b) { return {a.bits & b.bits}; }
    friend constexpr PointSet operator-(PointSet a, PointSet b) { return {a.bits & ~b.bits}; }
    constexpr PointSet& operator|=(PointSet o) { bits |= o.bits; return *this; }
    constexpr PointSet& operator&=(PointSet o) { bits &= o.bits; return *this; }
    friend constexpr bool operator==(PointSet a, PointSet b) { return a.bits == b.bits; }
};

// Canonical family order: by cardinality, then numeric value.
constexpr bool family_less(PointSet a, PointSet b) {
    const int ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a.bits < b.bits;
}

// Range over the members of a set, ascending point index.
struct PointIter {
    std::uint64_t rest = 0;
    int operator*() const { return std::countr_zero(rest); }
    PointIter& operator++() { rest &= rest - 1; return *this; }
    friend bool operator!=(PointIter a, PointIter b) { return a.rest != b.rest; }
};
struct PointRange {
    std::uint64_t bits;
    PointIter begin() const { return {bits}; }
    PointIter end() const { return {0}; }
};
inline PointRange points(PointSet s) { return {s.bits}; }

}  // namespace fintopo
