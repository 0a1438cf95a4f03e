#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twolayer/network.hpp"

// Independent brute-force ground truth for the fast generator: exhaustive
// second-layer enumeration, permutation equivalence, graph isomorphism,
// output subsumption, and the saturated-subsumption conjecture checker.

namespace twolayer {

// All matchings on n channels (the empty one included), n <= 14.
void for_each_second_layer(int n, const std::function<void(const Layer&)>& fn);
std::vector<Layer> enumerate_second_layers(int n);

// True iff some channel permutation pi makes untangle(pi(b)) equal a
// layer by layer.  By default the search is restricted to permutations
// preserving the layer-1 pair structure (untangling cancels within-pair
// swaps, so nothing else can match); full_search scans all of S_n.
bool equivalent_brute(const Network& a, const Network& b, bool full_search = false);

// Directed comparator graph: vertex per comparator; each output port (min
// and max) feeds at most one later comparator.
struct NetworkGraph {
    int vertex_count = 0;
    std::vector<int> out_min;  // fed vertex, or -1
    std::vector<int> out_max;
};

NetworkGraph to_graph(const Network& net);
bool graphs_isomorphic(const NetworkGraph& g1, const NetworkGraph& g2);

// A permutation pi with outputs(F_n;lb) contained in pi(outputs(F_n;la)),
// if one exists.  Backtracking over partial assignments with per-vector
// candidate pruning; n <= 10.
std::optional<Permutation> subsumes(const Layer& la, const Layer& lb, int n);

struct ConjectureResult {
    bool holds = true;
    // (subsuming sentence, subsumed sentence) pairs
    std::vector<std::pair<std::string, std::string>> counterexamples;
};

// No saturated class's outputs fit inside a permuted image of another's.
ConjectureResult check_conjecture(int n);

struct BruteRow {
    int n = 0;
    long long G = -1;   // labeled second layers
    long long S = -1;   // labeled, semantically saturated
    long long RG = -1;  // classes
    long long RS = -1;  // saturated classes
    long long R = -1;   // saturated classes modulo reflection
    // R-column provenance: pairwise equivalent_brute for n <= 8, sentence
    // dedup beyond (cross-check, not an independent oracle).
    bool classes_by_permutation_search = false;
};

BruteRow brute_force_table(int n, int jobs = 1);

}  // namespace twolayer
