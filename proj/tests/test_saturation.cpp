#include <doctest.h>

#include "twolayer/oracle.hpp"
#include "twolayer/saturation.hpp"

using namespace twolayer;

namespace {

Network two_layer(int n, Layer l2) {
    return Network{n, {first_layer_parberry(n), sorted_layer(std::move(l2))}};
}

}  // namespace

TEST_CASE("semantic saturation on the four-channel cases") {
    CHECK(is_saturated_semantic(two_layer(4, {{1, 3}, {2, 4}})));
    CHECK(is_saturated_semantic(two_layer(4, {{1, 4}, {2, 3}})));
    CHECK(!is_saturated_semantic(two_layer(4, {{2, 4}})));  // extension shrinks outputs
    CHECK(!is_saturated_semantic(two_layer(4, {{1, 3}})));
    CHECK(!is_saturated_semantic(two_layer(4, {})));
    CHECK(!is_saturated_semantic(two_layer(4, {{1, 2}})));  // redundant

    // a lone pair next to a cycle: only the duplicating addition remains
    CHECK(is_saturated_semantic(two_layer(6, {{3, 5}, {4, 6}})));
}

TEST_CASE("forbidden patterns") {
    auto pats = forbidden_patterns(two_layer(4, {{2, 4}}));
    CHECK(pats == std::set<PatternId>{PatternId::P3a});

    pats = forbidden_patterns(two_layer(4, {{1, 3}}));
    CHECK(pats == std::set<PatternId>{PatternId::P3b});

    pats = forbidden_patterns(two_layer(4, {{2, 3}}));
    CHECK(pats == std::set<PatternId>{PatternId::P1});

    pats = forbidden_patterns(two_layer(5, {{1, 3}}));
    CHECK(pats.count(PatternId::P2c));  // free channel 5 unused, max unused
    CHECK(pats.count(PatternId::P3b));

    CHECK(forbidden_patterns(two_layer(4, {{1, 3}, {2, 4}})).empty());
}

TEST_CASE("pattern soundness: a hit implies a witness extension") {
    for (int n = 2; n <= 7; ++n) {
        const Layer f = first_layer_parberry(n);
        for_each_second_layer(n, [&](const Layer& l2) {
            Network net{n, {f, l2}};
            if (forbidden_patterns(net).empty() || is_redundant(net)) return;
            OutputSet base = outputs(net);
            std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
            for (const Comparator& c : l2) used[c.lo] = used[c.hi] = 1;
            bool witness = false;
            for (int a = 1; a <= n && !witness; ++a)
                for (int b = a + 1; b <= n && !witness; ++b) {
                    if (used[a] || used[b]) continue;
                    bool duplicate = (b == a + 1 && a % 2 == 1);
                    for (Comparator c : {Comparator{a, b}, Comparator{b, a}}) {
                        if (duplicate && c.lo < c.hi) continue;
                        Network ext = net;
                        ext.layers[1] = sorted_layer([&] {
                            Layer l = ext.layers[1];
                            l.push_back(c);
                            return l;
                        }());
                        witness = witness || outputs(ext).subset_of(base);
                    }
                }
            CHECK(witness);
        });
    }
}

TEST_CASE("the three checks agree") {
    for (int n = 2; n <= 8; ++n) {
        const Layer f = first_layer_parberry(n);
        int saturated = 0;
        for_each_second_layer(n, [&](const Layer& l2) {
            Network net{n, {f, l2}};
            bool sem = is_saturated_semantic(net);
            bool syn = is_saturated_syntactic(net);
            bool word = word_saturation_check(sentence_of(net));
            CHECK(sem == syn);
            CHECK(syn == word);
            saturated += sem;
        });
        if (n == 4) CHECK(saturated == 2);
        if (n == 5) CHECK(saturated == 10);
    }
}

TEST_CASE("saturation is a class property") {
    for (int n = 2; n <= 7; ++n) {
        const Layer f = first_layer_parberry(n);
        std::map<std::string, bool> by_class;
        for_each_second_layer(n, [&](const Layer& l2) {
            Network net{n, {f, l2}};
            std::string s = sentence_to_string(sentence_of(net));
            bool sat = is_saturated_semantic(net);
            auto [it, fresh] = by_class.emplace(s, sat);
            if (!fresh) CHECK(it->second == sat);
        });
    }
}

TEST_CASE("word-level check") {
    CHECK(word_saturation_check(parse_sentence("12;122;122")));
    CHECK(!word_saturation_check(parse_sentence("1221")));  // length-4 stick
    CHECK(word_saturation_check(parse_sentence("0;121")));
    CHECK(!word_saturation_check(parse_sentence("0;12")));  // condition 1
    CHECK(!word_saturation_check(parse_sentence("1;122")));
    CHECK(!word_saturation_check(parse_sentence("121221;211212")));  // mixed ends
    CHECK(word_saturation_check(parse_sentence("121221;121221")));
    CHECK(!word_saturation_check(parse_sentence("021;121212")));  // stick ends differ
    CHECK_THROWS_AS(word_saturation_check(parse_sentence("2121")), std::invalid_argument);
}
