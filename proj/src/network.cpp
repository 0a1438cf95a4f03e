#include "twolayer/network.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <sstream>

namespace twolayer {

bool Network::standard() const {
    for (const Layer& layer : layers)
        for (const Comparator& c : layer)
            if (c.lo > c.hi) return false;
    return true;
}

int Network::size() const {
    int total = 0;
    for (const Layer& layer : layers) total += static_cast<int>(layer.size());
    return total;
}

bool OutputSet::contains(std::uint64_t v) const {
    return std::binary_search(values.begin(), values.end(), v);
}

bool OutputSet::subset_of(const OutputSet& other) const {
    return std::includes(other.values.begin(), other.values.end(),
                         values.begin(), values.end());
}

Layer sorted_layer(Layer layer) {
    std::sort(layer.begin(), layer.end());
    return layer;
}

void validate_layer(const Layer& layer, int n, bool allow_generalized) {
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (const Comparator& c : layer) {
        if (c.lo < 1 || c.lo > n || c.hi < 1 || c.hi > n)
            throw std::invalid_argument("comparator channel out of range");
        if (c.lo == c.hi) throw std::invalid_argument("comparator with equal channels");
        if (!allow_generalized && c.lo > c.hi)
            throw std::invalid_argument("generalized comparator in standard network");
        if (used[c.lo] || used[c.hi])
            throw std::invalid_argument("channel used twice in one layer");
        used[c.lo] = used[c.hi] = 1;
    }
}

void validate_network(const Network& net) {
    if (net.n < 1) throw std::invalid_argument("network needs at least one channel");
    for (const Layer& layer : net.layers) validate_layer(layer, net.n, true);
}

bool layer_is_maximal(const Layer& layer, int n) {
    return static_cast<int>(layer.size()) == n / 2;
}

Layer first_layer_parberry(int n) {
    if (n < 2) throw std::invalid_argument("first layer needs n >= 2");
    Layer layer;
    for (int k = 1; 2 * k <= n; ++k) layer.push_back({2 * k - 1, 2 * k});
    return layer;
}

Layer first_layer_reflective(int n) {
    if (n < 2) throw std::invalid_argument("first layer needs n >= 2");
    Layer layer;
    for (int i = 1; 2 * i <= n; ++i) layer.push_back({i, n - i + 1});
    return layer;
}

std::uint64_t apply(const Network& net, std::uint64_t input) {
    std::uint64_t x = input;
    for (const Layer& layer : net.layers) {
        std::uint64_t next = x;
        for (const Comparator& c : layer) {
            std::uint64_t a = (x >> (c.lo - 1)) & 1u;
            std::uint64_t b = (x >> (c.hi - 1)) & 1u;
            next &= ~((std::uint64_t{1} << (c.lo - 1)) | (std::uint64_t{1} << (c.hi - 1)));
            next |= (a & b) << (c.lo - 1);
            next |= (a | b) << (c.hi - 1);
        }
        x = next;
    }
    return x;
}

std::string apply(const Network& net, const std::string& input) {
    if (static_cast<int>(input.size()) != net.n)
        throw std::invalid_argument("input length does not match channel count");
    return format_bits(apply(net, parse_bits(input)), net.n);
}

std::uint64_t parse_bits(const std::string& s) {
    if (s.empty() || s.size() > 64) throw std::invalid_argument("bad bit vector");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v |= std::uint64_t{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bad bit vector");
    }
    return v;
}

std::string format_bits(std::uint64_t v, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((v >> i) & 1u) s[i] = '1';
    return s;
}

int output_channel_cap() {
    if (const char* env = std::getenv("TWOLAYER_OUTPUT_CAP")) {
        int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return 24;
}

OutputSet outputs(const Network& net) { return outputs(net, output_channel_cap()); }

OutputSet outputs(const Network& net, int channel_cap) {
    if (net.n > channel_cap)
        throw resource_limit_error("outputs: channel count exceeds cap");
    OutputSet out;
    out.n = net.n;
    out.values.reserve(std::size_t{1} << std::min(net.n, 20));
    const std::uint64_t total = std::uint64_t{1} << net.n;
    for (std::uint64_t x = 0; x < total; ++x) out.values.push_back(apply(net, x));
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
    return out;
}

bool is_sorting_network(const Network& net) {
    // Sorted binary vectors are 0^k 1^(n-k), i.e. packed values 2^n - 2^k.
    OutputSet out = outputs(net);
    for (std::uint64_t v : out.values) {
        std::uint64_t ones = std::uint64_t(std::popcount(v));
        std::uint64_t sorted =
            (std::uint64_t{1} << net.n) - (std::uint64_t{1} << (net.n - ones));
        if (v != sorted) return false;
    }
    return true;
}

Permutation identity_permutation(int n) {
    Permutation pi(static_cast<std::size_t>(n) + 1);
    std::iota(pi.begin(), pi.end(), 0);
    return pi;
}

void validate_permutation(const Permutation& pi, int n) {
    if (static_cast<int>(pi.size()) != n + 1)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int v = pi[i];
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a bijection on 1..n");
        seen[v] = 1;
    }
}

Network permute(const Network& net, const Permutation& pi) {
    validate_permutation(pi, net.n);
    Network result;
    result.n = net.n;
    result.layers.reserve(net.layers.size());
    for (const Layer& layer : net.layers) {
        Layer mapped;
        mapped.reserve(layer.size());
        for (const Comparator& c : layer) mapped.push_back({pi[c.lo], pi[c.hi]});
        result.layers.push_back(sorted_layer(std::move(mapped)));
    }
    return result;
}

Network untangle(const Network& net) {
    // p[w] is the channel currently carrying original channel w's value.
    Permutation p = identity_permutation(net.n);
    Network result;
    result.n = net.n;
    result.layers.reserve(net.layers.size());
    for (const Layer& layer : net.layers) {
        Layer emitted;
        emitted.reserve(layer.size());
        for (const Comparator& c : layer) {
            int a = p[c.lo], b = p[c.hi];
            if (a < b) {
                emitted.push_back({a, b});
            } else {
                emitted.push_back({b, a});
                std::swap(p[c.lo], p[c.hi]);
            }
        }
        result.layers.push_back(sorted_layer(std::move(emitted)));
    }
    return result;
}

Network reflect(const Network& net) {
    // (lo,hi) -> (n-hi+1, n-lo+1): channels reverse and the min output moves
    // to the image of the old max end, so standard stays standard.
    Network result;
    result.n = net.n;
    result.layers.reserve(net.layers.size());
    for (const Layer& layer : net.layers) {
        Layer mapped;
        mapped.reserve(layer.size());
        for (const Comparator& c : layer)
            mapped.push_back({net.n - c.hi + 1, net.n - c.lo + 1});
        result.layers.push_back(sorted_layer(std::move(mapped)));
    }
    return result.standard() ? result : untangle(result);
}

bool is_redundant(const Network& net) {
    OutputSet base = outputs(net);
    for (std::size_t li = 0; li < net.layers.size(); ++li) {
        for (std::size_t ci = 0; ci < net.layers[li].size(); ++ci) {
            Network smaller = net;
            smaller.layers[li].erase(smaller.layers[li].begin() +
                                     static_cast<std::ptrdiff_t>(ci));
            if (outputs(smaller) == base) return true;
        }
    }
    return false;
}

std::map<int, ChannelRole> channel_roles(const Network& net) {
    if (net.layers.empty()) throw std::invalid_argument("network has no layers");
    std::map<int, ChannelRole> roles;
    for (int c = 1; c <= net.n; ++c) roles[c] = ChannelRole::Free;
    for (const Comparator& c : net.layers.front()) {
        roles[c.lo] = ChannelRole::Min;
        roles[c.hi] = ChannelRole::Max;
    }
    return roles;
}

std::string write_network(const Network& net) {
    std::ostringstream out;
    out << "n=" << net.n << "\n";
    for (const Layer& layer : net.layers) {
        if (layer.empty()) continue;  // no representation; see read side
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (i) out << ' ';
            out << '(' << layer[i].lo << ',' << layer[i].hi << ')';
        }
        out << "\n";
    }
    out << "\n";
    return out.str();
}

namespace {

Layer parse_layer_line(const std::string& line) {
    Layer layer;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (line[pos] == ' ') {
            ++pos;
            continue;
        }
        if (line[pos] != '(') throw std::invalid_argument("expected '(' in layer line");
        std::size_t close = line.find(')', pos);
        std::size_t comma = line.find(',', pos);
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw std::invalid_argument("malformed comparator");
        int lo = std::stoi(line.substr(pos + 1, comma - pos - 1));
        int hi = std::stoi(line.substr(comma + 1, close - comma - 1));
        layer.push_back({lo, hi});
        pos = close + 1;
    }
    return sorted_layer(std::move(layer));
}

}  // namespace

Network read_network(std::istream& in) {
    std::string line;
    // skip leading blank lines
    while (std::getline(in, line)) {
        if (!line.empty()) break;
    }
    if (line.rfind("n=", 0) != 0) throw std::invalid_argument("expected 'n=<int>' header");
    Network net;
    net.n = std::stoi(line.substr(2));
    while (std::getline(in, line)) {
        if (line.empty()) break;
        net.layers.push_back(parse_layer_line(line));
    }
    validate_network(net);
    return net;
}

Network read_network_string(const std::string& text) {
    std::istringstream in(text);
    return read_network(in);
}

}  // namespace twolayer
