#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twolayer/wordrep.hpp"

// Grammar-driven, isomorph-free generation of canonical sentences.  Every
// equivalence class of two-layer prefixes on n channels is emitted exactly
// once, as multisets of canonical words assembled under the variant's
// constraints; no post-hoc deduplication is needed.

namespace twolayer {

using BigInt = boost::multiprecision::cpp_int;

enum class GrammarVariant {
    Full,                       // all classes, R(G_n)
    Saturated,                  // saturated classes, R(S_n)
    SaturatedModuloReflection,  // one per reflection pair, R_n
};

GrammarVariant parse_variant(const std::string& name);  // "RG" | "RS" | "R"

// All canonical words of one kind using at most `channel_budget` channels,
// lexicographically sorted.
std::vector<std::string> enumerate_canonical_words(int channel_budget, WordKind kind);

// Deterministic single-threaded enumeration (order is an implementation
// detail; use generate_classes for the sorted contract order).
void for_each_class(int n, GrammarVariant variant,
                    const std::function<void(const Sentence&)>& sink);

// Sorted (byte order of the joined form), each class exactly once.
// Enumeration is partitioned by leading word; any jobs count yields
// byte-identical output.
std::vector<std::string> generate_classes(int n, GrammarVariant variant, int jobs = 1);

std::uint64_t count_classes(int n, GrammarVariant variant, int jobs = 1);

Sentence reflect_sentence(const Sentence& s);

// Number of labeled second layers over F_n whose sentence equals s:
// (n/2)! divided by the stabilizer of the block-permutation action
// (multiplicities of equal words times each component's self-symmetry).
BigInt orbit_size(const Sentence& s, int n);

// Labeled count: sum of orbit sizes over the variant's classes
// (|G_n| for Full, |S_n| for Saturated).
BigInt sum_orbit_sizes(int n, GrammarVariant variant);

}  // namespace twolayer
