#include "twolayer/saturation.hpp"

#include <algorithm>

namespace twolayer {

namespace {

struct TwoLayerView {
    const Network* net;
    Layer layer2;
    std::vector<char> role;    // '0'/'1'/'2' per channel
    std::vector<int> l1p;      // layer-1 partner, 0 if none
    std::vector<char> unused;  // not touched by layer 2

    explicit TwoLayerView(const Network& n) : net(&n) {
        if (n.layers.empty() || n.layers.size() > 2)
            throw std::invalid_argument("saturation needs a two-layer network");
        if (!layer_is_maximal(n.layers[0], n.n))
            throw std::invalid_argument("first layer must be maximal");
        if (n.layers.size() == 2) layer2 = n.layers[1];
        role.assign(static_cast<std::size_t>(n.n) + 1, '0');
        l1p.assign(static_cast<std::size_t>(n.n) + 1, 0);
        unused.assign(static_cast<std::size_t>(n.n) + 1, 1);
        for (const Comparator& c : n.layers[0]) {
            role[c.lo] = '1';
            role[c.hi] = '2';
            l1p[c.lo] = c.hi;
            l1p[c.hi] = c.lo;
        }
        for (const Comparator& c : layer2) unused[c.lo] = unused[c.hi] = 0;
    }

    bool layer2_has(int a, int b) const {
        Comparator c{std::min(a, b), std::max(a, b)};
        return std::find(layer2.begin(), layer2.end(), c) != layer2.end();
    }
};

}  // namespace

std::set<PatternId> forbidden_patterns(const Network& net) {
    TwoLayerView v(net);
    std::set<PatternId> found;
    std::vector<int> un;
    for (int c = 1; c <= net.n; ++c)
        if (v.unused[c]) un.push_back(c);
    for (int a : un) {
        for (int b : un) {
            if (a == b) continue;
            if (v.role[a] == '1' && v.role[b] == '2' && v.l1p[a] != b)
                found.insert(PatternId::P1);
            if (v.role[a] == '0' && v.role[b] == '0') found.insert(PatternId::P2a);
            if (v.role[a] == '0' && v.role[b] == '1') found.insert(PatternId::P2b);
            if (v.role[a] == '0' && v.role[b] == '2') found.insert(PatternId::P2c);
            if (a < b && v.role[a] == '1' && v.role[b] == '1' &&
                v.layer2_has(v.l1p[a], v.l1p[b]))
                found.insert(PatternId::P3a);
            if (a < b && v.role[a] == '2' && v.role[b] == '2' &&
                v.layer2_has(v.l1p[a], v.l1p[b]))
                found.insert(PatternId::P3b);
        }
    }
    return found;
}

bool is_saturated_semantic(const Network& net) {
    TwoLayerView v(net);
    Network two = net;
    if (two.layers.size() == 1) two.layers.push_back({});
    if (is_redundant(two)) return false;
    OutputSet base = outputs(two);
    for (int a = 1; a <= net.n; ++a) {
        if (!v.unused[a]) continue;
        for (int b = a + 1; b <= net.n; ++b) {
            if (!v.unused[b]) continue;
            // Added comparators may be generalized; only the exact duplicate
            // of a layer-1 comparator is excluded (it recreates a redundant
            // network with unchanged outputs).
            for (Comparator c : {Comparator{a, b}, Comparator{b, a}}) {
                if (v.l1p[c.lo] == c.hi && c.lo < c.hi) continue;
                Network ext = two;
                ext.layers[1] = sorted_layer([&] {
                    Layer l = ext.layers[1];
                    l.push_back(c);
                    return l;
                }());
                if (outputs(ext).subset_of(base)) return false;
            }
        }
    }
    return true;
}

bool is_saturated_syntactic(const Network& net) {
    if (net.layers.empty() || net.layers[0] != first_layer_parberry(net.n))
        throw std::invalid_argument("syntactic check needs first layer F_n");
    TwoLayerView v(net);
    for (const Comparator& c : v.layer2)
        if (v.l1p[c.lo] == c.hi) return false;  // duplicate comparator: redundant
    return forbidden_patterns(net).empty();
}

bool word_saturation_check(const Sentence& s) {
    for (const std::string& w : s)
        if (!is_canonical(w)) throw std::invalid_argument("sentence word is not canonical");

    bool has_neutral = false;  // "0" or "12" present
    for (const std::string& w : s)
        if (w == "0" || w == "12") has_neutral = true;

    std::set<char> polarity;
    bool neutral_seen = false;
    for (const std::string& w : s) {
        if (w == "1") return false;  // doubled pair: redundant
        WordKind kind = classify_word(w);
        if (has_neutral) {
            if (w == "0" || w == "12") {
                if (neutral_seen) return false;  // second non-cycle word
                neutral_seen = true;
                continue;
            }
            if (kind != WordKind::Cycle) return false;
        }
        if (kind == WordKind::Stick && w != "12") {
            if (w.size() == 4) return false;
            if (w.size() >= 4 && w.front() != w.back()) return false;
            polarity.insert(w.front());
            polarity.insert(w.back());
        }
        if (kind == WordKind::Head && w != "0") polarity.insert(w.back());
    }
    return polarity.size() <= 1;
}

const char* pattern_name(PatternId id) {
    switch (id) {
        case PatternId::P1: return "P1";
        case PatternId::P2a: return "P2a";
        case PatternId::P2b: return "P2b";
        case PatternId::P2c: return "P2c";
        case PatternId::P3a: return "P3a";
        case PatternId::P3b: return "P3b";
    }
    return "?";
}

}  // namespace twolayer
