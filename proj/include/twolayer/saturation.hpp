#pragma once

#include <set>

#include "twolayer/network.hpp"
#include "twolayer/wordrep.hpp"

// A two-layer network is saturated when it is non-redundant and no
// comparator added to the second layer (other than one duplicating a
// first-layer comparator) produces an output set contained in the original.
// Three interchangeable checks: the semantic definition, the forbidden
// two-layer patterns, and the word-level criterion.

namespace twolayer {

enum class PatternId { P1, P2a, P2b, P2c, P3a, P3b };

// Pattern tests on layer-2-unused channels:
//   P1       an unused min and an unused max on two different layer-1
//            comparators
//   P2a/b/c  an unused free channel together with another layer-2-unused
//            channel that is free / min / max
//   P3a/P3b  two unused min (max) channels whose layer-1 partners are joined
//            by a layer-2 comparator
std::set<PatternId> forbidden_patterns(const Network& net);

bool is_saturated_semantic(const Network& net);

// Non-redundant (no layer-2 comparator repeats a layer-1 comparator) and no
// forbidden pattern.  First layer must be F_n.
bool is_saturated_syntactic(const Network& net);

// Word-level criterion on a canonical sentence:
//   1. if "0" or "12" occurs, every other word is a cycle
//   2. no stick of length 4
//   3. every stick of length >= 4 begins and ends with the same symbol
//   4. the unused-end symbols of all heads and sticks coincide
//      (the last character of a head, both end characters of a stick;
//       "0" and "12" are exempt)
//   5. no doubled pair "1"
bool word_saturation_check(const Sentence& s);

const char* pattern_name(PatternId id);

}  // namespace twolayer
