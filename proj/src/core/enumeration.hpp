#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core/space.hpp"

namespace fintopo::enumeration {

// Hard generation limits: n <= 5 normally, 6 behind the explicit flag.
// Preorders on 6 points already number 209527; beyond that exhaustive
// sweeps stop being a test tool.
int max_enumeration_n(bool allow_large);

// Every reflexive transitive relation on n points, exactly once, in
// lexicographic order of the row-major relation matrix (row 0 most
// significant, rows ordered by numeric mask value).
void enumerate_preorders(int n, const std::function<void(const Preorder&)>& visit,
                         bool allow_large = false);

// Every topology on n labeled points via the Alexandroff bijection;
// same deterministic order as enumerate_preorders.
void enumerate_labeled(int n, const std::function<void(const Space&)>& visit,
                       bool allow_large = false);

std::uint64_t count_labeled(int n, bool allow_large = false);

// Byte string identifying a space up to homeomorphism: canonically labeled
// quotient poset of neighborhood-equivalence classes plus class sizes.
// Canonical labeling by ordered-partition refinement with backtracking.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Space& sp);
std::string canonical_hex(const CanonicalForm& form);
bool is_homeomorphic(const Space& a, const Space& b);

struct TopologyClass {
    CanonicalForm form;
    Space representative;  // first labeled space hitting the class
    std::uint64_t labeled_count = 0;
};

// Homeomorphism classes, sorted by canonical form.
std::vector<TopologyClass> enumerate_classes(int n, bool t0_only = false,
                                             bool allow_large = false);

}  // namespace fintopo::enumeration
