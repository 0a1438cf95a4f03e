#include "twolayer/wordrep.hpp"

#include <algorithm>
#include <sstream>

namespace twolayer {

namespace {

bool valid_pair_run(const std::string& w, std::size_t from) {
    if ((w.size() - from) % 2 != 0) return false;
    for (std::size_t i = from; i < w.size(); i += 2) {
        bool ok = (w[i] == '1' && w[i + 1] == '2') || (w[i] == '2' && w[i + 1] == '1');
        if (!ok) return false;
    }
    return true;
}

char role_char(ChannelRole r) {
    switch (r) {
        case ChannelRole::Free: return '0';
        case ChannelRole::Min: return '1';
        case ChannelRole::Max: return '2';
    }
    return '?';
}

struct Adjacency {
    std::vector<int> l1;  // partner in layer 1, 0 if none
    std::vector<int> l2;  // partner in layer 2, 0 if none
    std::vector<char> role;
};

Adjacency build_adjacency(const Network& net) {
    if (net.layers.empty() || net.layers.size() > 2)
        throw std::invalid_argument("word representation needs a two-layer network");
    if (!net.standard()) throw std::invalid_argument("network must be standard");
    if (!layer_is_maximal(net.layers[0], net.n))
        throw std::invalid_argument("first layer must be maximal");
    Adjacency adj;
    adj.l1.assign(static_cast<std::size_t>(net.n) + 1, 0);
    adj.l2.assign(static_cast<std::size_t>(net.n) + 1, 0);
    adj.role.assign(static_cast<std::size_t>(net.n) + 1, '0');
    for (const Comparator& c : net.layers[0]) {
        adj.l1[c.lo] = c.hi;
        adj.l1[c.hi] = c.lo;
        adj.role[c.lo] = '1';
        adj.role[c.hi] = '2';
    }
    if (net.layers.size() == 2) {
        for (const Comparator& c : net.layers[1]) {
            adj.l2[c.lo] = c.hi;
            adj.l2[c.hi] = c.lo;
        }
    }
    return adj;
}

// Role word of the alternating path starting at `start`, first edge in the
// layer selected by `first_l1`, traversing `len` channels.
std::string walk(const Adjacency& adj, int start, bool first_l1, std::size_t len) {
    std::string w;
    w.reserve(len);
    int cur = start;
    bool use_l1 = first_l1;
    w += adj.role[cur];
    while (w.size() < len) {
        cur = use_l1 ? adj.l1[cur] : adj.l2[cur];
        w += adj.role[cur];
        use_l1 = !use_l1;
    }
    return w;
}

}  // namespace

WordKind classify_word(const std::string& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    for (char ch : w)
        if (ch != '0' && ch != '1' && ch != '2') throw std::invalid_argument("bad word symbol");
    if (w[0] == '0') {
        if (!valid_pair_run(w, 1)) throw std::invalid_argument("malformed head word");
        return WordKind::Head;
    }
    if (w.size() % 2 == 0) {
        if (!valid_pair_run(w, 0)) throw std::invalid_argument("malformed stick word");
        return WordKind::Stick;
    }
    std::string full = w;
    full += static_cast<char>('1' + '2' - w.back());
    if (!valid_pair_run(full, 0)) throw std::invalid_argument("malformed cycle word");
    return WordKind::Cycle;
}

int word_channel_count(const std::string& w) {
    WordKind kind = classify_word(w);
    int len = static_cast<int>(w.size());
    return kind == WordKind::Cycle ? len + 1 : len;
}

std::vector<std::vector<int>> components(const Network& net) {
    Adjacency adj = build_adjacency(net);
    std::vector<char> seen(static_cast<std::size_t>(net.n) + 1, 0);
    std::vector<std::vector<int>> comps;
    for (int c = 1; c <= net.n; ++c) {
        if (seen[c]) continue;
        std::vector<int> comp;
        std::vector<int> stack{c};
        seen[c] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : {adj.l1[v], adj.l2[v]}) {
                if (w != 0 && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::string word_of_component(const Network& net, const std::vector<int>& comp) {
    Adjacency adj = build_adjacency(net);
    const std::size_t len = comp.size();
    if (len == 1) {
        if (adj.role[comp[0]] != '0')
            throw std::invalid_argument("singleton component must be the free channel");
        return "0";
    }
    int free_channel = 0;
    std::vector<int> unused_l2;
    for (int c : comp) {
        if (adj.role[c] == '0') free_channel = c;
        if (adj.l2[c] == 0) unused_l2.push_back(c);
    }
    if (free_channel != 0) return walk(adj, free_channel, /*first_l1=*/false, len);
    if (!unused_l2.empty()) {
        if (unused_l2.size() != 2)
            throw std::invalid_argument("path component must have two layer-2-unused channels");
        return std::min(walk(adj, unused_l2[0], true, len), walk(adj, unused_l2[1], true, len));
    }
    // Cycle: minimal reading over all starts (both directions arise from the
    // two ends of each first-layer comparator), last letter dropped.
    std::string best;
    for (int c : comp) {
        std::string cand = walk(adj, c, true, len);
        if (best.empty() || cand < best) best = std::move(cand);
    }
    best.pop_back();
    return best;
}

Sentence sentence_of(const Network& net) {
    Sentence words;
    for (const std::vector<int>& comp : components(net))
        words.push_back(word_of_component(net, comp));
    std::sort(words.begin(), words.end());
    return words;
}

void add_word_component(const std::string& w, const Layer& first, int block_offset,
                        int free_channel, Layer& layer2) {
    WordKind kind = classify_word(w);
    auto channel_of = [&](int block, char role) {
        const Comparator& c = first[static_cast<std::size_t>(block_offset + block)];
        return role == '1' ? c.lo : c.hi;
    };
    if (kind == WordKind::Head) {
        if (w.size() == 1) return;  // isolated free channel
        int a = channel_of(0, w[1]);
        layer2.push_back({std::min(a, free_channel), std::max(a, free_channel)});
        for (std::size_t i = 2; i + 1 < w.size(); i += 2) {
            int u = channel_of(static_cast<int>(i / 2) - 1, w[i]);
            int v = channel_of(static_cast<int>(i / 2), w[i + 1]);
            layer2.push_back({std::min(u, v), std::max(u, v)});
        }
        return;
    }
    const int blocks = word_channel_count(w) / 2;
    std::vector<char> used(static_cast<std::size_t>(2 * blocks) + 1, 0);
    for (std::size_t i = 1; i + 1 < w.size(); i += 2) {
        int u = channel_of(static_cast<int>((i - 1) / 2), w[i]);
        int v = channel_of(static_cast<int>((i + 1) / 2), w[i + 1]);
        layer2.push_back({std::min(u, v), std::max(u, v)});
    }
    if (kind == WordKind::Cycle) {
        // close the two remaining channels (in the first and last block)
        std::vector<int> remaining;
        for (int b = 0; b < blocks; ++b) {
            for (char role : {'1', '2'}) {
                int ch = channel_of(b, role);
                bool taken = false;
                for (const Comparator& c : layer2)
                    if (c.lo == ch || c.hi == ch) taken = true;
                if (!taken) remaining.push_back(ch);
            }
        }
        layer2.push_back({std::min(remaining[0], remaining[1]),
                          std::max(remaining[0], remaining[1])});
    }
}

Network net_of_word(const std::string& w) {
    int n = word_channel_count(w);
    Network net;
    net.n = n;
    net.layers.push_back(n >= 2 ? first_layer_parberry(n) : Layer{});
    Layer layer2;
    add_word_component(w, net.layers[0], 0, n, layer2);
    net.layers.push_back(sorted_layer(std::move(layer2)));
    return net;
}

Network net_of_sentence(const Sentence& sentence, int n) {
    int total = 0;
    const std::string* head = nullptr;
    for (const std::string& w : sentence) {
        total += word_channel_count(w);
        if (classify_word(w) == WordKind::Head) {
            if (head) throw std::invalid_argument("sentence has more than one head word");
            head = &w;
        }
    }
    if (total != n) throw std::invalid_argument("sentence channel count does not match n");
    if (head && n % 2 == 0) throw std::invalid_argument("head word needs odd n");
    if (!head && n % 2 == 1) throw std::invalid_argument("odd n needs a head word");

    Network net;
    net.n = n;
    net.layers.push_back(n >= 2 ? first_layer_parberry(n) : Layer{});
    Layer layer2;
    int block_offset = 0;
    for (const std::string& w : sentence) {
        if (&w == head) continue;
        add_word_component(w, net.layers[0], block_offset, 0, layer2);
        block_offset += word_channel_count(w) / 2;
    }
    if (head) add_word_component(*head, net.layers[0], block_offset, n, layer2);
    net.layers.push_back(sorted_layer(std::move(layer2)));
    return net;
}

bool is_canonical(const std::string& w) {
    Network net = net_of_word(w);
    std::vector<std::vector<int>> comps = components(net);
    if (comps.size() != 1) return false;
    return word_of_component(net, comps[0]) == w;
}

std::string canonical_cycle_word(const std::string& full) {
    std::string best;
    for (int dir = 0; dir < 2; ++dir) {
        std::string s = dir ? std::string(full.rbegin(), full.rend()) : full;
        for (std::size_t off = 0; off < s.size(); off += 2) {
            std::string cand = s.substr(off) + s.substr(0, off);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    best.pop_back();
    return best;
}

int cycle_self_symmetry(const std::string& full) {
    int count = 0;
    for (int dir = 0; dir < 2; ++dir) {
        std::string s = dir ? std::string(full.rbegin(), full.rend()) : full;
        for (std::size_t off = 0; off < s.size(); off += 2)
            if (s.substr(off) + s.substr(0, off) == full) ++count;
    }
    return count;
}

std::string cycle_full_string(const std::string& w) {
    std::string full = w;
    full += static_cast<char>('1' + '2' - w.back());
    return full;
}

std::string reflect_word(const std::string& w) {
    WordKind kind = classify_word(w);
    auto swapped = [](std::string s) {
        for (char& ch : s) {
            if (ch == '1')
                ch = '2';
            else if (ch == '2')
                ch = '1';
        }
        return s;
    };
    switch (kind) {
        case WordKind::Head:
            return swapped(w);
        case WordKind::Stick: {
            std::string s = swapped(w);
            std::string rev(s.rbegin(), s.rend());
            return std::min(s, rev);
        }
        case WordKind::Cycle:
            return canonical_cycle_word(swapped(cycle_full_string(w)));
    }
    throw std::logic_error("unreachable");
}

std::string sentence_to_string(const Sentence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ';';
        out += s[i];
    }
    return out;
}

Sentence parse_sentence(const std::string& line) {
    Sentence words;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, ';')) {
        classify_word(cur);  // validates
        words.push_back(cur);
    }
    if (words.empty()) throw std::invalid_argument("empty sentence");
    return words;
}

}  // namespace twolayer
