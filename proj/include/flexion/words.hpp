#pragma once

#include <functional>
#include <map>
#include <vector>

#include "flexion/rational.hpp"

namespace flexion {

// Abstract word over integer letter identifiers.
using Word = std::vector<int>;

// Formal integer combination of words; doubles as a multiset.
using WordSum = std::map<Word, long>;

// Recursive shuffle product, multiplicities included.
WordSum shuffle_set(const Word& u, const Word& v);

// Shuffle of index patterns (1..r) with (r+1..r+s): the words are the
// images of (1,...,r+s) under inverses of Sh(r,s) permutations.
std::vector<Word> shuffle_patterns(int r, int s);

// Order-preserving surjection with fibers of size one or two, every
// two-element fiber mixing the two blocks.
struct StuffleSurjection {
    int target_size = 0;
    std::vector<int> assignment;  // length r+s, values 1..target_size

    // Positions (0-based) of the collapsed targets, as (k, l) with k in the
    // first block and l in the second.
    std::vector<std::pair<int, int>> collapsed_pairs(int r) const;
};

// All surjections for block lengths (r, s), ordered lexicographically by
// assignment vector.
std::vector<StuffleSurjection> stuffle_surjections(int r, int s);

// Quasi-shuffle via the surjection set; add_rule combines the letters of a
// two-element fiber.
WordSum stuffle_set(const Word& u, const Word& v,
                    const std::function<int(int, int)>& add_rule);

}  // namespace flexion
