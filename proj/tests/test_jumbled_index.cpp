#include "doctest.h"

#include <random>
#include <vector>

#include "oracles.hpp"
#include "pnw/jumbled_index.hpp"

using namespace pnw;

namespace {

using Values = std::vector<std::size_t>;

Values values_of(const OnesProfile& p) { return {p.values().begin(), p.values().end()}; }

const Word table1_word("ababbaabaabbbaaabbab");
const Values table1_fa{0, 1, 2, 3, 3, 4, 4, 4, 5, 5, 6, 7, 7, 7, 8, 8, 9, 9, 9, 10, 10};
const Values table1_fb{0, 1, 2, 3, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 10, 10};

ParikhSet to_parikh_set(const std::set<std::pair<std::size_t, std::size_t>>& raw) {
    ParikhSet out;
    for (auto [a, b] : raw) out.insert({a, b});
    return out;
}

}  // namespace

TEST_CASE("build_index") {
    const auto empty = build_index(Word());
    CHECK(empty.n() == 0);
    CHECK(values_of(empty.max_a()) == Values{0});
    CHECK(values_of(empty.min_a()) == Values{0});

    const auto ix = build_index(table1_word);
    CHECK(values_of(ix.max_a()) == table1_fa);
    for (std::size_t k = 0; k <= 20; ++k) CHECK(ix.min_a()[k] == k - table1_fb[k]);

    const auto aabb = build_index(Word("aabb"));
    CHECK(values_of(aabb.max_a()) == Values{0, 1, 2, 2, 2});
    CHECK(values_of(aabb.min_a()) == Values{0, 0, 0, 1, 2});
}

TEST_CASE("query") {
    const auto ix = build_index(table1_word);
    CHECK(query(ix, {0, 0}));
    CHECK(query(build_index(Word()), {0, 0}));
    CHECK(query(ix, {4, 1}));
    CHECK_FALSE(query(ix, {5, 0}));
    CHECK(query(build_index(Word("aabb")), {1, 1}));
    CHECK_FALSE(query(ix, {11, 10}));
    CHECK(query(ix, {10, 10}));
}

TEST_CASE("JumbledIndex validates its profiles") {
    CHECK_THROWS_AS(JumbledIndex(OnesProfile(ProfileKind::max_a, {0, 0}), OnesProfile(ProfileKind::min_a, {0, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(JumbledIndex(OnesProfile(ProfileKind::max_a, {0, 1}), OnesProfile(ProfileKind::min_a, {0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(JumbledIndex(OnesProfile(ProfileKind::max_b, {0, 1}), OnesProfile(ProfileKind::min_a, {0, 0})),
                    std::invalid_argument);
}

TEST_CASE("index_from_pnf and pnf_from_index") {
    const PnfPair example{Word("aaababbabaabbababbab"), Word("bbbaababababaabababa")};
    CHECK(index_from_pnf(example) == build_index(table1_word));
    CHECK(pnf_from_index(build_index(table1_word)) == example);

    CHECK_THROWS_AS(index_from_pnf({Word("aaaa"), Word("bbbb")}), std::invalid_argument);
    CHECK_THROWS_AS(index_from_pnf({Word("ba"), Word("ba")}), std::invalid_argument);
    CHECK_THROWS_AS(index_from_pnf({Word("ab"), Word("ab")}), std::invalid_argument);
    CHECK_THROWS_AS(index_from_pnf({Word("ab"), Word("bab")}), std::invalid_argument);

    const auto ab = index_from_pnf({Word("ab"), Word("ba")});
    CHECK(values_of(ab.max_a()) == Values{0, 1, 1});
    CHECK(values_of(ab.min_a()) == Values{0, 0, 1});

    CHECK(pnf_from_index(build_index(Word())) == PnfPair{Word(), Word()});
    CHECK(pnf_from_index(build_index(Word("aabb"))) == PnfPair{Word("aabb"), Word("bbaa")});
}

TEST_CASE("parikh_set_equal") {
    CHECK(parikh_set_equal(Word("aabb"), Word("bbaa")));
    CHECK_FALSE(parikh_set_equal(Word("abba"), Word("abab")));
    CHECK_FALSE(parikh_set_equal(Word("ab"), Word("abb")));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const Word w(oracle::random_word_upto(rng, 60));
        CHECK(parikh_set_equal(w, reverse(w)));
    }
}

TEST_CASE("parikh_set_oracle") {
    CHECK(parikh_set_oracle(Word()) == ParikhSet{{0, 0}});
    CHECK(parikh_set_oracle(Word("ab")) == ParikhSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(parikh_set_oracle(Word("aa")) == ParikhSet{{0, 0}, {1, 0}, {2, 0}});
    CHECK_THROWS_AS(parikh_set_oracle(Word::repeat(Symbol::a, 11), 10), std::length_error);
}

TEST_CASE("queries, interval property and round trips for every text up to length 12") {
    oracle::for_all_words(12, [](const std::string& s) {
        const Word w(s);
        const auto ix = build_index(w);
        const auto brute = to_parikh_set(oracle::parikh_set(s));
        REQUIRE(parikh_set_oracle(w) == brute);
        for (std::size_t k = 0; k <= w.size() + 1; ++k) {
            std::size_t lo = k + 1, hi = 0, hits = 0;
            for (std::size_t x = 0; x <= k; ++x) {
                const bool occurs = ix.query({x, k - x});
                REQUIRE(occurs == (brute.count({x, k - x}) == 1));
                if (occurs) {
                    lo = std::min(lo, x);
                    hi = std::max(hi, x);
                    ++hits;
                }
            }
            if (k <= w.size()) {
                REQUIRE(lo == ix.min_a()[k]);
                REQUIRE(hi == ix.max_a()[k]);
                REQUIRE(hits == hi - lo + 1);
            } else {
                REQUIRE(hits == 0);
            }
        }
        const auto pair = pnf_from_index(ix);
        REQUIRE(pair == build_pnf_pair(w));
        REQUIRE(index_from_pnf(pair) == ix);
        REQUIRE(pnf_from_index(index_from_pnf(pair)) == pair);
        REQUIRE(index_from_json(index_to_json(ix)) == ix);
    });
}

TEST_CASE("parikh_set_equal matches brute force on all pairs up to length 10") {
    for (std::size_t n = 0; n <= 10; ++n) {
        std::vector<Word> words;
        std::vector<ParikhSet> sets;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const auto s = oracle::word_of(bits, n);
            words.emplace_back(s);
            sets.push_back(to_parikh_set(oracle::parikh_set(s)));
        }
        std::vector<PnfPair> pairs;
        for (const auto& w : words) pairs.push_back(build_pnf_pair(w));
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i; j < words.size(); ++j) {
                const bool by_sets = sets[i] == sets[j];
                REQUIRE((pairs[i] == pairs[j]) == by_sets);
            }
        }
        // spot-check the public entry point on the same pairs
        for (std::size_t i = 0; i < words.size(); i += 7) {
            for (std::size_t j = 0; j < words.size(); j += 5)
                REQUIRE(parikh_set_equal(words[i], words[j]) == (sets[i] == sets[j]));
        }
    }
}

TEST_CASE("random texts agree with the oracle") {
    std::mt19937_64 rng(697);
    for (int t = 0; t < 400; ++t) {
        const Word w(oracle::random_word_upto(rng, 200));
        const auto ix = build_index(w);
        const auto set = parikh_set_oracle(w);
        for (std::size_t k = 0; k <= w.size(); ++k) {
            for (std::size_t x = 0; x <= k; ++x) REQUIRE(ix.query({x, k - x}) == (set.count({x, k - x}) == 1));
        }
    }
}

TEST_CASE("index JSON format") {
    const auto ix = build_index(Word("aabb"));
    CHECK(index_to_json(ix) == R"({"version":1,"n":4,"maxA":[0,1,2,2,2],"minA":[0,0,0,1,2]})");
    CHECK(index_from_json(R"({"version":1,"n":4,"maxA":[0,1,2,2,2],"minA":[0,0,0,1,2]})") == ix);
    CHECK_THROWS_AS(index_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(index_from_json(R"({"version":2,"n":0,"maxA":[0],"minA":[0]})"), std::invalid_argument);
    CHECK_THROWS_AS(index_from_json(R"({"version":1,"n":1,"maxA":[0],"minA":[0]})"), std::invalid_argument);
    CHECK_THROWS_AS(index_from_json(R"({"version":1,"n":1,"maxA":[0,2],"minA":[0,0]})"), std::invalid_argument);
    CHECK_THROWS_AS(index_from_json(R"({"version":1,"n":1,"maxA":[0,0],"minA":[0,1]})"), std::invalid_argument);
    CHECK_THROWS_AS(index_from_json(R"([1,2])"), std::invalid_argument);
}
