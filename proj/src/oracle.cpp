#include "twolayer/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "twolayer/generator.hpp"
#include "twolayer/saturation.hpp"
#include "twolayer/wordrep.hpp"

namespace twolayer {

namespace {

void matchings_rec(int n, std::uint32_t used, Layer& current,
                   const std::function<void(const Layer&)>& fn) {
    int c = 0;
    for (int i = 1; i <= n; ++i) {
        if (!(used & (1u << i))) {
            c = i;
            break;
        }
    }
    if (c == 0) {
        fn(current);
        return;
    }
    for (int d = c + 1; d <= n; ++d) {
        if (used & (1u << d)) continue;
        current.push_back({c, d});
        matchings_rec(n, used | (1u << c) | (1u << d), current, fn);
        current.pop_back();
    }
    matchings_rec(n, used | (1u << c), current, fn);
}

}  // namespace

void for_each_second_layer(int n, const std::function<void(const Layer&)>& fn) {
    if (n < 1 || n > 14) throw resource_limit_error("second-layer enumeration needs n <= 14");
    Layer current;
    matchings_rec(n, 0, current, fn);
}

std::vector<Layer> enumerate_second_layers(int n) {
    std::vector<Layer> out;
    for_each_second_layer(n, [&](const Layer& l) { out.push_back(l); });
    return out;
}

namespace {

struct PairStructure {
    std::vector<Comparator> pairs;  // layer-1 comparators, sorted
    int free_channel = 0;           // 0 if none
};

PairStructure pair_structure(const Network& net) {
    if (net.layers.empty()) throw std::invalid_argument("network has no layers");
    PairStructure ps;
    ps.pairs = net.layers[0];
    std::vector<char> used(static_cast<std::size_t>(net.n) + 1, 0);
    for (const Comparator& c : ps.pairs) used[c.lo] = used[c.hi] = 1;
    for (int c = 1; c <= net.n; ++c)
        if (!used[c]) ps.free_channel = c;
    return ps;
}

}  // namespace

bool equivalent_brute(const Network& a, const Network& b, bool full_search) {
    if (a.n != b.n || a.layers.size() != b.layers.size()) return false;
    for (std::size_t i = 0; i < a.layers.size(); ++i)
        if (a.layers[i].size() != b.layers[i].size()) return false;
    const int n = a.n;
    if (full_search) {
        if (n > 8) throw resource_limit_error("full permutation search needs n <= 8");
        Permutation pi = identity_permutation(n);
        std::vector<int> order(pi.begin() + 1, pi.end());
        do {
            std::copy(order.begin(), order.end(), pi.begin() + 1);
            if (untangle(permute(b, pi)) == a) return true;
        } while (std::next_permutation(order.begin(), order.end()));
        return false;
    }
    if (n > 12) throw resource_limit_error("equivalence search needs n <= 12");
    PairStructure pa = pair_structure(a), pb = pair_structure(b);
    if (pa.pairs.size() != pb.pairs.size()) return false;
    if ((pa.free_channel == 0) != (pb.free_channel == 0)) return false;
    const int m = static_cast<int>(pa.pairs.size());
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 0);
    Permutation pi(static_cast<std::size_t>(n) + 1, 0);
    do {
        for (std::uint32_t twist = 0; twist < (1u << m); ++twist) {
            for (int k = 0; k < m; ++k) {
                const Comparator& src = pb.pairs[static_cast<std::size_t>(k)];
                const Comparator& dst = pa.pairs[static_cast<std::size_t>(sigma[k])];
                bool flip = (twist >> k) & 1u;
                pi[src.lo] = flip ? dst.hi : dst.lo;
                pi[src.hi] = flip ? dst.lo : dst.hi;
            }
            if (pb.free_channel != 0) pi[pb.free_channel] = pa.free_channel;
            if (untangle(permute(b, pi)) == a) return true;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

NetworkGraph to_graph(const Network& net) {
    NetworkGraph g;
    // last comparator touching each channel, with the port it left on
    std::vector<int> last(static_cast<std::size_t>(net.n) + 1, -1);
    std::vector<char> port(static_cast<std::size_t>(net.n) + 1, 0);  // 0 min, 1 max
    for (const Layer& layer : net.layers) {
        for (const Comparator& c : layer) {
            int v = g.vertex_count++;
            g.out_min.push_back(-1);
            g.out_max.push_back(-1);
            for (int ch : {c.lo, c.hi}) {
                if (last[ch] >= 0) {
                    if (port[ch] == 0)
                        g.out_min[static_cast<std::size_t>(last[ch])] = v;
                    else
                        g.out_max[static_cast<std::size_t>(last[ch])] = v;
                }
            }
            last[c.lo] = v;
            port[c.lo] = 0;
            last[c.hi] = v;
            port[c.hi] = 1;
        }
    }
    return g;
}

namespace {

// Iteratively refined vertex signatures (labels + in/out structure).
std::vector<std::string> graph_signatures(const NetworkGraph& g) {
    const int nv = g.vertex_count;
    std::vector<std::string> sig(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        sig[v] = std::string(1, char('a' + (g.out_min[v] >= 0))) +
                 std::string(1, char('a' + (g.out_max[v] >= 0)));
    for (int round = 0; round < nv; ++round) {
        std::vector<std::string> next(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v) {
            std::string in_min, in_max;
            std::vector<std::string> mins, maxs;
            for (int u = 0; u < nv; ++u) {
                if (g.out_min[u] == v) mins.push_back(sig[u]);
                if (g.out_max[u] == v) maxs.push_back(sig[u]);
            }
            std::sort(mins.begin(), mins.end());
            std::sort(maxs.begin(), maxs.end());
            next[v] = sig[v] + "|";
            next[v] += g.out_min[v] >= 0 ? sig[g.out_min[v]] : std::string("-");
            next[v] += ",";
            next[v] += g.out_max[v] >= 0 ? sig[g.out_max[v]] : std::string("-");
            for (const std::string& s : mins) next[v] += "<" + s;
            for (const std::string& s : maxs) next[v] += ">" + s;
        }
        // compress to small ids to keep strings short
        std::map<std::string, int> ids;
        for (const std::string& s : next) ids.emplace(s, 0);
        int id = 0;
        for (auto& [k, val] : ids) val = id++;
        for (int v = 0; v < nv; ++v) sig[v] = std::to_string(ids[next[v]]);
    }
    return sig;
}

bool iso_rec(const NetworkGraph& g1, const NetworkGraph& g2,
             const std::vector<std::string>& s1, const std::vector<std::string>& s2,
             std::vector<int>& map12, std::vector<char>& used2, int v) {
    const int nv = g1.vertex_count;
    if (v == nv) return true;
    for (int w = 0; w < nv; ++w) {
        if (used2[w] || s1[v] != s2[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            int fu = map12[u];
            if ((g1.out_min[v] == u) != (g2.out_min[w] == fu)) ok = false;
            if ((g1.out_max[v] == u) != (g2.out_max[w] == fu)) ok = false;
            if ((g1.out_min[u] == v) != (g2.out_min[fu] == w)) ok = false;
            if ((g1.out_max[u] == v) != (g2.out_max[fu] == w)) ok = false;
        }
        if (!ok) continue;
        map12[v] = w;
        used2[w] = 1;
        if (iso_rec(g1, g2, s1, s2, map12, used2, v + 1)) return true;
        used2[w] = 0;
    }
    return false;
}

}  // namespace

bool graphs_isomorphic(const NetworkGraph& g1, const NetworkGraph& g2) {
    if (g1.vertex_count != g2.vertex_count) return false;
    std::vector<std::string> s1 = graph_signatures(g1), s2 = graph_signatures(g2);
    std::vector<std::string> m1 = s1, m2 = s2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return false;
    std::vector<int> map12(static_cast<std::size_t>(g1.vertex_count), -1);
    std::vector<char> used2(static_cast<std::size_t>(g1.vertex_count), 0);
    return iso_rec(g1, g2, s1, s2, map12, used2, 0);
}

namespace {

struct SubsumeSearch {
    int n;
    std::vector<std::uint64_t> target;            // outputs(F;lb) values
    std::vector<std::vector<std::uint64_t>> col;  // per channel: bitset over source rows
    std::size_t words;
    std::vector<int> rho;  // channel map being built (target -> source), 1-based
    std::vector<char> taken;

    bool extend(int depth, std::vector<std::vector<std::uint64_t>>& cand) {
        if (depth > n) return true;
        for (int j = 1; j <= n; ++j) {
            if (taken[j]) continue;
            std::vector<std::vector<std::uint64_t>> next = cand;
            bool alive = true;
            for (std::size_t t = 0; t < target.size() && alive; ++t) {
                bool bit = (target[t] >> (depth - 1)) & 1u;
                std::uint64_t any = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t mask = bit ? col[j][w] : ~col[j][w];
                    next[t][w] &= mask;
                    any |= next[t][w];
                }
                if (!any) alive = false;
            }
            if (!alive) continue;
            rho[depth] = j;
            taken[j] = 1;
            if (extend(depth + 1, next)) return true;
            taken[j] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Permutation> subsumes(const Layer& la, const Layer& lb, int n) {
    if (n > 10) throw resource_limit_error("subsumption search needs n <= 10");
    Network na{n, {first_layer_parberry(n), sorted_layer(la)}};
    Network nb{n, {first_layer_parberry(n), sorted_layer(lb)}};
    OutputSet source = outputs(na);
    OutputSet target = outputs(nb);
    if (target.size() > source.size()) return std::nullopt;
    // popcount-level counts must embed
    std::vector<int> ls(static_cast<std::size_t>(n) + 1, 0), lt = ls;
    for (std::uint64_t v : source.values) ++ls[static_cast<std::size_t>(std::popcount(v))];
    for (std::uint64_t v : target.values) ++lt[static_cast<std::size_t>(std::popcount(v))];
    for (int k = 0; k <= n; ++k)
        if (lt[k] > ls[k]) return std::nullopt;

    SubsumeSearch search;
    search.n = n;
    search.target = target.values;
    search.words = (source.size() + 63) / 64;
    search.col.assign(static_cast<std::size_t>(n) + 1,
                      std::vector<std::uint64_t>(search.words, 0));
    for (std::size_t r = 0; r < source.values.size(); ++r)
        for (int j = 1; j <= n; ++j)
            if ((source.values[r] >> (j - 1)) & 1u) search.col[j][r / 64] |= 1ull << (r % 64);
    search.rho.assign(static_cast<std::size_t>(n) + 1, 0);
    search.taken.assign(static_cast<std::size_t>(n) + 1, 0);

    // seed candidates: all source rows, with the tail word trimmed
    std::vector<std::vector<std::uint64_t>> cand(
        target.values.size(), std::vector<std::uint64_t>(search.words, ~0ull));
    std::size_t tail = source.size() % 64;
    if (tail)
        for (auto& row : cand) row.back() = (1ull << tail) - 1;

    if (!search.extend(1, cand)) return std::nullopt;
    // rho maps target channels into source channels; the witness permutation
    // is its inverse.
    Permutation pi(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pi[search.rho[i]] = i;
    return pi;
}

ConjectureResult check_conjecture(int n) {
    if (n > 10) throw resource_limit_error("conjecture check needs n <= 10");
    ConjectureResult result;
    std::vector<std::string> classes = generate_classes(n, GrammarVariant::Saturated);
    std::vector<Layer> layers;
    layers.reserve(classes.size());
    for (const std::string& s : classes) {
        Network net = net_of_sentence(parse_sentence(s), n);
        layers.push_back(net.layers[1]);
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (i == j) continue;
            if (subsumes(layers[i], layers[j], n)) {
                result.holds = false;
                result.counterexamples.emplace_back(classes[i], classes[j]);
            }
        }
    }
    return result;
}

namespace {

// Outputs of F_n (and of F_n minus one comparator) as raw image lists; a
// second layer's outputs come from applying it to each image value.
struct L1Image {
    int n = 0;
    std::vector<std::uint32_t> base;
    std::vector<std::vector<std::uint32_t>> minus;
};

L1Image build_l1_image(int n) {
    L1Image img;
    img.n = n;
    const int m = n / 2;
    auto product = [&](int skip) {
        std::vector<std::uint32_t> vals{0};
        for (int k = 0; k < m; ++k) {
            std::vector<std::uint32_t> choices;
            std::uint32_t lo = 1u << (2 * k), hi = 1u << (2 * k + 1);
            if (k == skip)
                choices = {0, lo, hi, lo | hi};
            else
                choices = {0, hi, lo | hi};
            std::vector<std::uint32_t> next;
            next.reserve(vals.size() * choices.size());
            for (std::uint32_t v : vals)
                for (std::uint32_t c : choices) next.push_back(v | c);
            vals = std::move(next);
        }
        if (n % 2) {
            std::vector<std::uint32_t> next;
            next.reserve(vals.size() * 2);
            std::uint32_t free_bit = 1u << (n - 1);
            for (std::uint32_t v : vals) {
                next.push_back(v);
                next.push_back(v | free_bit);
            }
            vals = std::move(next);
        }
        return vals;
    };
    img.base = product(-1);
    for (int k = 0; k < m; ++k) img.minus.push_back(product(k));
    return img;
}

// Output sets as bitsets over the 2^n packed vectors.
struct SatScratch {
    std::vector<std::uint64_t> base, work;
    Layer layer;

    void size_for(int n) {
        std::size_t words = (std::size_t{1} << n) / 64 + 1;
        base.assign(words, 0);
        work.assign(words, 0);
    }
};

void layer_output_bits(const std::vector<std::uint32_t>& img, const Layer& l2,
                       std::vector<std::uint64_t>& bits) {
    std::fill(bits.begin(), bits.end(), 0);
    for (std::uint32_t v : img) {
        std::uint32_t x = v;
        for (const Comparator& c : l2) {
            std::uint32_t a = (x >> (c.lo - 1)) & 1u;
            std::uint32_t b = (x >> (c.hi - 1)) & 1u;
            x &= ~((1u << (c.lo - 1)) | (1u << (c.hi - 1)));
            x |= (a & b) << (c.lo - 1);
            x |= (a | b) << (c.hi - 1);
        }
        bits[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
}

bool bits_subset(const std::vector<std::uint64_t>& sub,
                 const std::vector<std::uint64_t>& super) {
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (sub[i] & ~super[i]) return false;
    return true;
}

// Semantic saturation specialized to F_n plus a second layer.
bool saturated_semantic_fast(const L1Image& img, const Layer& l2, SatScratch& s) {
    const int n = img.n;
    layer_output_bits(img.base, l2, s.base);
    // redundant? deletions from layer 2, then from layer 1
    for (std::size_t i = 0; i < l2.size(); ++i) {
        s.layer = l2;
        s.layer.erase(s.layer.begin() + static_cast<std::ptrdiff_t>(i));
        layer_output_bits(img.base, s.layer, s.work);
        if (s.work == s.base) return false;
    }
    for (const auto& m : img.minus) {
        layer_output_bits(m, l2, s.work);
        if (s.work == s.base) return false;
    }
    // additions between layer-2-unused channels, generalized orientations
    // included; only the exact duplicate of a layer-1 comparator is excluded
    std::uint32_t used = 0;
    for (const Comparator& c : l2) used |= (1u << (c.lo - 1)) | (1u << (c.hi - 1));
    for (int a = 1; a <= n; ++a) {
        if (used & (1u << (a - 1))) continue;
        for (int b = a + 1; b <= n; ++b) {
            if (used & (1u << (b - 1))) continue;
            const bool duplicate = (b == a + 1 && a % 2 == 1);
            for (Comparator c : {Comparator{a, b}, Comparator{b, a}}) {
                if (duplicate && c.lo < c.hi) continue;
                s.layer = l2;
                s.layer.push_back(c);
                layer_output_bits(img.base, s.layer, s.work);
                if (bits_subset(s.work, s.base)) return false;
            }
        }
    }
    return true;
}

}  // namespace

BruteRow brute_force_table(int n, int jobs) {
    if (n < 2 || n > 13) throw resource_limit_error("brute-force table needs 2 <= n <= 13");
    BruteRow row;
    row.n = n;

    // Labeled counts: split work by the choice made for channel 1.
    struct Task {
        Layer prefix;
        std::uint32_t used = 0;
    };
    std::vector<Task> tasks;
    for (int d = 2; d <= n; ++d)
        tasks.push_back({{{1, d}}, (1u << 1) | (1u << d)});
    tasks.push_back({{}, (1u << 1)});

    const L1Image img = build_l1_image(n);
    std::vector<long long> g_counts(tasks.size(), 0), s_counts(tasks.size(), 0);
    std::atomic<std::size_t> next_task{0};
    auto worker = [&] {
        SatScratch scratch;
        scratch.size_for(n);
        for (;;) {
            std::size_t ti = next_task.fetch_add(1);
            if (ti >= tasks.size()) return;
            Layer current = tasks[ti].prefix;
            matchings_rec(n, tasks[ti].used, current, [&](const Layer& l2) {
                ++g_counts[ti];
                if (saturated_semantic_fast(img, l2, scratch)) ++s_counts[ti];
            });
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    row.G = std::accumulate(g_counts.begin(), g_counts.end(), 0ll);
    row.S = std::accumulate(s_counts.begin(), s_counts.end(), 0ll);

    if (n <= 8) {
        // class representatives by pairwise permutation search
        row.classes_by_permutation_search = true;
        const Layer f = first_layer_parberry(n);
        std::vector<Network> reps;
        std::vector<bool> rep_saturated;
        SatScratch scratch;
        scratch.size_for(n);
        for_each_second_layer(n, [&](const Layer& l2) {
            Network net{n, {f, l2}};
            for (const Network& rep : reps)
                if (equivalent_brute(rep, net)) return;
            reps.push_back(net);
            rep_saturated.push_back(saturated_semantic_fast(img, l2, scratch));
        });
        row.RG = static_cast<long long>(reps.size());
        row.RS = std::count(rep_saturated.begin(), rep_saturated.end(), true);
        // reflection pairing on saturated classes
        long long orbits = 0;
        std::vector<char> seen(reps.size(), 0);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (!rep_saturated[i] || seen[i]) continue;
            ++orbits;
            seen[i] = 1;
            Network mirrored = reflect(reps[i]);
            for (std::size_t j = 0; j < reps.size(); ++j) {
                if (!seen[j] && rep_saturated[j] && equivalent_brute(reps[j], mirrored)) {
                    seen[j] = 1;
                    break;
                }
            }
        }
        row.R = orbits;
    } else {
        // sentence-based class counts (cross-check tier)
        std::unordered_set<std::string> all, saturated, modref;
        const Layer f = first_layer_parberry(n);
        SatScratch scratch;
        scratch.size_for(n);
        for_each_second_layer(n, [&](const Layer& l2) {
            Network net{n, {f, l2}};
            std::string s = sentence_to_string(sentence_of(net));
            all.insert(s);
            if (saturated_semantic_fast(img, l2, scratch)) {
                saturated.insert(s);
                Sentence refl;
                for (const std::string& w : sentence_of(net)) refl.push_back(reflect_word(w));
                std::sort(refl.begin(), refl.end());
                modref.insert(std::min(s, sentence_to_string(refl)));
            }
        });
        row.RG = static_cast<long long>(all.size());
        row.RS = static_cast<long long>(saturated.size());
        row.R = static_cast<long long>(modref.size());
    }
    return row;
}

}  // namespace twolayer
