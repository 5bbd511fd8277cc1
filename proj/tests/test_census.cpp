#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pnw/census.hpp"
#include "pnw/lyndon.hpp"
#include "pnw/pnf.hpp"

using namespace pnw;

TEST_CASE("count_prefix_normal") {
    CHECK(count_prefix_normal(1) == 2);
    CHECK(count_prefix_normal(4) == 8);
    CHECK(count_prefix_normal(8) == 70);
    CHECK(count_prefix_normal(12) == 697);
    CHECK(count_prefix_normal(16) == 7568);
    CHECK(count_prefix_normal(0) == 1);
    CHECK_THROWS_AS(count_prefix_normal(25), std::length_error);
    CHECK_THROWS_AS(count_prefix_normal(9, {.bound = 8}), std::length_error);
}

TEST_CASE("count_pre_necklaces") {
    CHECK(count_pre_necklaces(7) == 41);
    CHECK(count_pre_necklaces(8) == 71);
    CHECK(count_pre_necklaces(16) == 8800);
    CHECK_THROWS_AS(count_pre_necklaces(25), std::length_error);
}

TEST_CASE("backtracking agrees with exhaustive filtering up to length 14") {
    for (std::size_t n = 0; n <= 14; ++n) {
        CAPTURE(n);
        std::uint64_t brute_normal = 0, brute_pl = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const auto s = oracle::word_of(bits, n);
            if (oracle::prefix_normal(s)) ++brute_normal;
            if (oracle::pre_necklace_by_prefix_powers(s)) ++brute_pl;
        }
        CHECK(count_prefix_normal(n) == brute_normal);
        CHECK(count_prefix_normal_exhaustive(n) == brute_normal);
        CHECK(count_pre_necklaces(n) == brute_pl);
        CHECK(count_prefix_normal(n) <= count_pre_necklaces(n));
    }
}

TEST_CASE("counts do not depend on the number of workers") {
    for (unsigned jobs : {1u, 2u, 3u, 8u}) {
        CAPTURE(jobs);
        CHECK(count_prefix_normal(18, {.jobs = jobs}) == count_prefix_normal(18));
        CHECK(count_pre_necklaces(18, {.jobs = jobs}) == count_pre_necklaces(18));
        CHECK(count_prefix_normal_exhaustive(12, {.jobs = jobs}) == 697);
    }
    const auto serial = class_census(12);
    const auto parallel = class_census(12, {.jobs = 4});
    CHECK(serial.classes == parallel.classes);
}

TEST_CASE("pnf_a_bits matches build_pnf_a") {
    oracle::for_all_words(12, [](const std::string& s) {
        const Word w(s);
        REQUIRE(from_bits(pnf_a_bits(static_cast<std::uint32_t>(to_bits(w)), w.size()), w.size()) ==
                build_pnf_a(w));
    });
}

TEST_CASE("class_census for length 4") {
    const auto census = class_census(4);
    CHECK(census.n == 4);
    CHECK(census.total_words == 16);
    const std::map<Word, std::uint64_t> expected{
        {Word("aaaa"), 1}, {Word("aaab"), 2}, {Word("aaba"), 2}, {Word("aabb"), 3},
        {Word("abab"), 2}, {Word("abba"), 1}, {Word("abbb"), 4}, {Word("bbbb"), 1}};
    CHECK(census.classes == expected);
}

TEST_CASE("class_census for length 8") {
    const auto census = class_census(8);
    CHECK(census.classes.size() == 70);
    CHECK(census.classes.at(Word("aababbbb")) == 10);
    const std::map<std::uint64_t, std::size_t> histogram{{1, 7}, {2, 24}, {3, 5}, {4, 16}, {5, 2},
                                                         {6, 9}, {7, 1}, {8, 4},  {9, 1}, {10, 1}};
    CHECK(census.histogram() == histogram);
}

TEST_CASE("census partitions every length up to 12") {
    for (std::size_t n = 0; n <= 12; ++n) {
        CAPTURE(n);
        const auto census = class_census(n);
        std::uint64_t sum = 0;
        for (const auto& [pnf, size] : census.classes) {
            sum += size;
            REQUIRE(pnf.size() == n);
            REQUIRE(is_prefix_normal(pnf));
        }
        CHECK(sum == (std::uint64_t{1} << n));
        CHECK(census.total_words == sum);
        CHECK(census.classes.size() == count_prefix_normal(n));
    }
}

TEST_CASE("max_class_size") {
    CHECK(max_class_size(1) == 1);
    CHECK(max_class_size(7) == 8);
    CHECK(max_class_size(10) == 18);
    CHECK(max_class_size(16) == 111);
    CHECK_THROWS_AS(max_class_size(21), std::length_error);
}

TEST_CASE("class_members") {
    const std::vector<Word> six{Word("aabababa"), Word("aabbaaba"), Word("abaababa"),
                                Word("abaabbaa"), Word("ababaaba"), Word("abababaa")};
    CHECK(class_members(Word("aabababa")) == six);
    CHECK(class_members(Word("abba")) == std::vector<Word>{Word("abba")});
    CHECK(class_members(Word("aabb")) == std::vector<Word>{Word("aabb"), Word("baab"), Word("bbaa")});
    CHECK_THROWS_AS(class_members(Word("ba")), std::invalid_argument);
    CHECK(class_members(Word("aabababa"), {.jobs = 3}) == six);
}

TEST_CASE("each class holds exactly its representative as normal member and is closed under reversal") {
    const auto census = class_census(9);
    for (const auto& [pnf, size] : census.classes) {
        const auto members = class_members(pnf);
        REQUIRE(members.size() == size);
        REQUIRE(std::is_sorted(members.begin(), members.end()));
        const std::set<Word> as_set(members.begin(), members.end());
        std::size_t normal = 0;
        for (const auto& m : members) {
            REQUIRE(build_pnf_a(m) == pnf);
            REQUIRE(as_set.count(reverse(m)) == 1);
            if (is_prefix_normal(m)) {
                ++normal;
                REQUIRE(m == pnf);
            }
        }
        REQUIRE(normal == 1);
    }
}

TEST_CASE("counts_table") {
    const auto rows = counts_table(8, {.prefix_normal = true, .pre_necklace = true, .max_class_size = true});
    REQUIRE(rows.size() == 8);
    CHECK(rows[7].n == 8);
    CHECK(rows[7].count_prefix_normal == 70u);
    CHECK(rows[7].count_pre_necklace == 71u);
    CHECK(rows[7].max_class_size == 10u);
    const auto only_pl = counts_table(3, {.prefix_normal = false, .pre_necklace = true});
    CHECK_FALSE(only_pl[0].count_prefix_normal.has_value());
    CHECK(only_pl[2].count_pre_necklace == 5u);
}
