#include "twolayer/generator.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace twolayer {

GrammarVariant parse_variant(const std::string& name) {
    if (name == "RG") return GrammarVariant::Full;
    if (name == "RS") return GrammarVariant::Saturated;
    if (name == "R") return GrammarVariant::SaturatedModuloReflection;
    throw std::invalid_argument("unknown class set: " + name);
}

namespace {

// All (12+21)^m strings for m = 1..max_pairs.
template <typename Fn>
void for_each_pair_string(int max_pairs, Fn&& fn) {
    std::string w;
    for (int m = 1; m <= max_pairs; ++m) {
        w.assign(static_cast<std::size_t>(2 * m), '1');
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            for (int k = 0; k < m; ++k) {
                bool flip = (mask >> k) & 1u;
                w[static_cast<std::size_t>(2 * k)] = flip ? '2' : '1';
                w[static_cast<std::size_t>(2 * k + 1)] = flip ? '1' : '2';
            }
            fn(w);
        }
    }
}

std::vector<std::string> canonical_heads(int budget) {
    std::vector<std::string> heads;
    if (budget >= 1) heads.push_back("0");
    for_each_pair_string((budget - 1) / 2,
                         [&](const std::string& w) { heads.push_back("0" + w); });
    std::sort(heads.begin(), heads.end());
    return heads;
}

std::vector<std::string> canonical_sticks(int budget) {
    std::vector<std::string> sticks;
    for_each_pair_string(budget / 2, [&](const std::string& w) {
        std::string rev(w.rbegin(), w.rend());
        if (w <= rev) sticks.push_back(w);
    });
    std::sort(sticks.begin(), sticks.end());
    return sticks;
}

std::vector<std::string> canonical_cycles(int budget) {
    std::unordered_set<std::string> seen;
    std::vector<std::string> cycles;
    for_each_pair_string(budget / 2, [&](const std::string& full) {
        std::string w = canonical_cycle_word(full);
        if (seen.insert(w).second) cycles.push_back(std::move(w));
    });
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

// Word pool ordered by (channel count, word): with sizes ascending, the
// feasible choices at every recursion level form one contiguous interval.
struct Pool {
    std::vector<std::string> words;
    std::vector<int> channels;
    std::vector<char> is_stick;

    void build(std::vector<std::string> list) {
        std::sort(list.begin(), list.end(), [](const std::string& a, const std::string& b) {
            int ca = word_channel_count(a), cb = word_channel_count(b);
            return ca != cb ? ca < cb : a < b;
        });
        words = std::move(list);
        channels.clear();
        is_stick.clear();
        for (const std::string& w : words) {
            channels.push_back(word_channel_count(w));
            is_stick.push_back(classify_word(w) == WordKind::Stick);
        }
    }
};

struct Task {
    const Pool* pool = nullptr;
    Sentence prefix;
    int budget = 0;
    std::size_t min_index = 0;
    bool need_stick = false;
};

class ClassEnumeration {
public:
    ClassEnumeration(int n, GrammarVariant variant) : variant_(variant) {
        if (n < 1 || n > 64) throw std::invalid_argument("class generation needs 1 <= n <= 64");
        build_pools(n);
        build_tasks(n);
        if (variant_ == GrammarVariant::SaturatedModuloReflection) {
            add_reflections(heads_);
            add_reflections(cycles_.words);
            add_reflections(polarity_[0].words);
            add_reflections(polarity_[1].words);
            add_reflections({"12"});
        }
    }

    std::size_t task_count() const { return tasks_.size(); }

    void run(std::size_t ti, const std::function<void(const Sentence&)>& sink) const {
        const Task& task = tasks_[ti];
        Sentence stack = task.prefix;
        auto emit = [&] {
            Sentence sorted = stack;
            std::sort(sorted.begin(), sorted.end());
            if (variant_ == GrammarVariant::SaturatedModuloReflection && !keep(sorted)) return;
            sink(sorted);
        };
        if (task.pool == nullptr || task.budget == 0) {
            if (!task.need_stick) emit();
            return;
        }
        const Pool& pool = *task.pool;
        auto rec = [&](auto&& self, int budget, std::size_t min_i, bool need) -> void {
            if (budget == 0) {
                if (!need) emit();
                return;
            }
            for (std::size_t i = min_i; i < pool.words.size(); ++i) {
                if (pool.channels[i] > budget) break;  // sizes ascending
                stack.push_back(pool.words[i]);
                self(self, budget - pool.channels[i], i, need && !pool.is_stick[i]);
                stack.pop_back();
            }
        };
        rec(rec, task.budget, task.min_index, task.need_stick);
    }

private:
    void build_pools(int budget) {
        std::vector<std::string> sticks = canonical_sticks(budget);
        std::vector<std::string> cycles = canonical_cycles(budget);

        std::vector<std::string> evens = sticks;
        evens.insert(evens.end(), cycles.begin(), cycles.end());
        full_.build(std::move(evens));

        std::vector<std::string> sat_cycles;
        for (const std::string& w : cycles)
            if (w != "1") sat_cycles.push_back(w);
        cycles_.build(sat_cycles);

        for (int p = 0; p < 2; ++p) {
            char symbol = static_cast<char>('1' + p);
            std::vector<std::string> pool_words = sat_cycles;
            for (const std::string& w : sticks)
                if (w.size() >= 6 && w.front() == symbol && w.back() == symbol)
                    pool_words.push_back(w);
            polarity_[p].build(std::move(pool_words));
        }
        heads_ = canonical_heads(budget);
    }

    void build_tasks(int n) {
        auto branch = [&](Sentence prefix, const Pool& pool, int budget, bool need_stick) {
            if (budget < 0) return;
            if (budget == 0) {
                if (!need_stick)
                    tasks_.push_back({nullptr, std::move(prefix), 0, 0, false});
                return;
            }
            for (std::size_t i = 0; i < pool.words.size(); ++i) {
                if (pool.channels[i] > budget) break;
                Sentence p = prefix;
                p.push_back(pool.words[i]);
                tasks_.push_back({&pool, std::move(p), budget - pool.channels[i], i,
                                  need_stick && !pool.is_stick[i]});
            }
        };
        const bool saturated = variant_ != GrammarVariant::Full;
        if (n % 2 == 1) {
            for (const std::string& h : heads_) {
                int budget = n - word_channel_count(h);
                if (budget < 0) continue;
                if (!saturated)
                    branch({h}, full_, budget, false);
                else if (h == "0")
                    branch({h}, cycles_, budget, false);
                else
                    branch({h}, polarity_[h.back() - '1'], budget, false);
            }
        } else if (!saturated) {
            branch({}, full_, n, false);
        } else {
            branch({}, cycles_, n, false);          // cycles only
            branch({"12"}, cycles_, n - 2, false);  // lone pair plus cycles
            branch({}, polarity_[0], n, true);      // min-polarity sticks
            branch({}, polarity_[1], n, true);      // max-polarity sticks
        }
    }

    void add_reflections(const std::vector<std::string>& words) {
        for (const std::string& w : words)
            if (!reflected_.count(w)) reflected_.emplace(w, reflect_word(w));
    }

    bool keep(const Sentence& sorted) const {
        Sentence mirror;
        mirror.reserve(sorted.size());
        for (const std::string& w : sorted) mirror.push_back(reflected_.at(w));
        std::sort(mirror.begin(), mirror.end());
        return sentence_to_string(sorted) <= sentence_to_string(mirror);
    }

    GrammarVariant variant_;
    Pool full_, cycles_, polarity_[2];
    std::vector<std::string> heads_;
    std::vector<Task> tasks_;
    std::unordered_map<std::string, std::string> reflected_;
};

template <typename PerTask>
void run_all_tasks(const ClassEnumeration& gen, int jobs, PerTask&& per_task) {
    const std::size_t count = gen.task_count();
    if (jobs <= 1) {
        for (std::size_t ti = 0; ti < count; ++ti) per_task(ti);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(jobs, 1); ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t ti = next.fetch_add(1);
                if (ti >= count) return;
                per_task(ti);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<std::string> enumerate_canonical_words(int channel_budget, WordKind kind) {
    if (channel_budget < 1) throw std::invalid_argument("budget must be at least 1");
    switch (kind) {
        case WordKind::Head: return canonical_heads(channel_budget);
        case WordKind::Stick: return canonical_sticks(channel_budget);
        case WordKind::Cycle: return canonical_cycles(channel_budget);
    }
    throw std::logic_error("unreachable");
}

void for_each_class(int n, GrammarVariant variant,
                    const std::function<void(const Sentence&)>& sink) {
    ClassEnumeration gen(n, variant);
    for (std::size_t ti = 0; ti < gen.task_count(); ++ti) gen.run(ti, sink);
}

std::vector<std::string> generate_classes(int n, GrammarVariant variant, int jobs) {
    ClassEnumeration gen(n, variant);
    std::vector<std::vector<std::string>> buckets(gen.task_count());
    run_all_tasks(gen, jobs, [&](std::size_t ti) {
        gen.run(ti, [&](const Sentence& s) { buckets[ti].push_back(sentence_to_string(s)); });
    });
    std::vector<std::string> merged;
    for (auto& bucket : buckets)
        merged.insert(merged.end(), std::make_move_iterator(bucket.begin()),
                      std::make_move_iterator(bucket.end()));
    std::sort(merged.begin(), merged.end());
    return merged;
}

std::uint64_t count_classes(int n, GrammarVariant variant, int jobs) {
    ClassEnumeration gen(n, variant);
    std::vector<std::uint64_t> counts(gen.task_count(), 0);
    run_all_tasks(gen, jobs, [&](std::size_t ti) {
        gen.run(ti, [&](const Sentence&) { ++counts[ti]; });
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
}

Sentence reflect_sentence(const Sentence& s) {
    Sentence out;
    out.reserve(s.size());
    for (const std::string& w : s) out.push_back(reflect_word(w));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

BigInt word_self_symmetry(const std::string& w) {
    switch (classify_word(w)) {
        case WordKind::Head: return 1;
        case WordKind::Stick: {
            std::string rev(w.rbegin(), w.rend());
            return w == rev ? 2 : 1;
        }
        case WordKind::Cycle: return cycle_self_symmetry(cycle_full_string(w));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

BigInt orbit_size(const Sentence& s, int n) {
    Sentence sorted = s;
    std::sort(sorted.begin(), sorted.end());
    int total = 0;
    BigInt stabilizer = 1;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        stabilizer *= factorial(static_cast<int>(j - i));
        total += static_cast<int>(j - i) * word_channel_count(sorted[i]);
        for (std::size_t k = i; k < j; ++k) stabilizer *= word_self_symmetry(sorted[i]);
        i = j;
    }
    if (total != n) throw std::invalid_argument("sentence channel count does not match n");
    BigInt orbit = factorial(n / 2);
    if (orbit % stabilizer != 0) throw std::logic_error("stabilizer does not divide m!");
    return orbit / stabilizer;
}

BigInt sum_orbit_sizes(int n, GrammarVariant variant) {
    BigInt sum = 0;
    for_each_class(n, variant, [&](const Sentence& s) { sum += orbit_size(s, n); });
    return sum;
}

}  // namespace twolayer
