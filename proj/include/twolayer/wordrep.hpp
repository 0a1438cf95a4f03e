#pragma once

#include <string>
#include <vector>

#include "twolayer/network.hpp"

// Path words for two-layer networks with a maximal first layer.  Each
// connected component of the comparator graph is a path or a cycle; reading
// channel roles (0 free, 1 min, 2 max) along a canonical traversal names the
// component, and the sorted multiset of words ("sentence") names the
// network's equivalence class under channel permutation.

namespace twolayer {

enum class WordKind { Head, Stick, Cycle };

using Sentence = std::vector<std::string>;  // words, kept sorted

// Validates well-formedness and returns the kind:
//   Head  0(12+21)*        Stick (12+21)+        Cycle 12(12+21)*(1+2)
// plus "1", the two-channel doubled pair, as a Cycle.
WordKind classify_word(const std::string& w);

int word_channel_count(const std::string& w);

// Connected components of the (one- or two-layer) comparator adjacency
// relation; a missing second layer counts as empty.  First layer must be
// maximal.  Components are sorted channel lists.
std::vector<std::vector<int>> components(const Network& net);

std::string word_of_component(const Network& net, const std::vector<int>& comp);

Sentence sentence_of(const Network& net);

// Builds the component's second-layer comparators onto `layer2`, occupying
// first-layer blocks block_offset, block_offset+1, ... of `first`.  Head
// words additionally use `free_channel`.
void add_word_component(const std::string& w, const Layer& first, int block_offset,
                        int free_channel, Layer& layer2);

// Standalone component network on word_channel_count(w) channels with first
// layer F_n.
Network net_of_word(const std::string& w);

// Components laid out over F_n in the given order, except that the Head (if
// any) is placed last so its free channel is channel n.
Network net_of_sentence(const Sentence& sentence, int n);

// True iff w is the fixed point of reading back its own component.
bool is_canonical(const std::string& w);

// Swap roles 1<->2 and recanonicalize; matches network-level reflect.
std::string reflect_word(const std::string& w);

// Lexicographically smallest of the 2m full readings of a cycle written as
// its 2m-character role string, with the final character dropped.
std::string canonical_cycle_word(const std::string& full);
// Number of the 2m readings equal to `full` itself (the cycle's labeled
// self-symmetry count).
int cycle_self_symmetry(const std::string& full);
// Full 2m-character reading of a canonical cycle word (re-appends the
// dropped final role).
std::string cycle_full_string(const std::string& w);

std::string sentence_to_string(const Sentence& s);
Sentence parse_sentence(const std::string& line);

}  // namespace twolayer
