#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Comparator networks on n channels with exact binary semantics.
// Channels are 1-based throughout, matching the usual layer notation
// (2k-1,2k).  A packed input/output vector stores channel c in bit c-1,
// so the string form "0100" (channel 2 set) is the integer 2.

namespace twolayer {

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A comparator routes the smaller input to channel `lo` and the larger to
// `hi`.  Standard comparators have lo < hi; a generalized one has lo > hi.
struct Comparator {
    int lo = 0;
    int hi = 0;

    friend bool operator==(const Comparator&, const Comparator&) = default;
    friend auto operator<=>(const Comparator&, const Comparator&) = default;
};

// A layer touches each channel at most once.  Kept sorted by (lo,hi) so
// layers compare as sets.
using Layer = std::vector<Comparator>;

struct Network {
    int n = 0;
    std::vector<Layer> layers;

    bool standard() const;
    int size() const;  // total comparator count
    int depth() const { return static_cast<int>(layers.size()); }

    friend bool operator==(const Network&, const Network&) = default;
};

enum class ChannelRole { Min, Max, Free };

// Exact output set of a network over all 2^n binary inputs, stored as the
// sorted list of packed vectors.
struct OutputSet {
    int n = 0;
    std::vector<std::uint64_t> values;  // sorted, unique

    bool contains(std::uint64_t v) const;
    bool subset_of(const OutputSet& other) const;
    std::size_t size() const { return values.size(); }

    friend bool operator==(const OutputSet&, const OutputSet&) = default;
};

Layer sorted_layer(Layer layer);
void validate_layer(const Layer& layer, int n, bool allow_generalized);
void validate_network(const Network& net);
bool layer_is_maximal(const Layer& layer, int n);

// F_n = {(2k-1,2k)}: the standard first layer.
Layer first_layer_parberry(int n);
// F'_n = {(i, n-i+1)}: the reflection-invariant first layer.
Layer first_layer_reflective(int n);

std::uint64_t apply(const Network& net, std::uint64_t input);
std::string apply(const Network& net, const std::string& input);

std::uint64_t parse_bits(const std::string& s);
std::string format_bits(std::uint64_t v, int n);

// Channel cap for outputs(); default 24, overridable via the
// TWOLAYER_OUTPUT_CAP environment variable or the explicit argument.
int output_channel_cap();
OutputSet outputs(const Network& net);
OutputSet outputs(const Network& net, int channel_cap);

bool is_sorting_network(const Network& net);

using Permutation = std::vector<int>;  // pi[i] = image of channel i; pi[0] unused

Permutation identity_permutation(int n);
void validate_permutation(const Permutation& pi, int n);

// Relabels channels; the result may be generalized.
Network permute(const Network& net, const Permutation& pi);

// Classical wire-relabeling untangling: scan layers left to right, flipping
// descending comparators and swapping the two wire labels from then on.
Network untangle(const Network& net);

// (i,j) -> (n-j+1, n-i+1) followed by untangling.
Network reflect(const Network& net);

// True iff deleting some single comparator leaves outputs unchanged.
bool is_redundant(const Network& net);

// Roles are determined by layer 1 alone.
std::map<int, ChannelRole> channel_roles(const Network& net);

// Text format: "n=<int>" then one line per layer, comparators as
// "(lo,hi)" separated by single spaces; blank line or EOF ends a block.
// A trailing empty layer has no representation and is dropped on write.
std::string write_network(const Network& net);
Network read_network(std::istream& in);
Network read_network_string(const std::string& text);

}  // namespace twolayer
