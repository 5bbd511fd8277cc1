#include "doctest.h"

#include <string>

#include "oracles.hpp"
#include "pnw/geometry.hpp"
#include "pnw/jumbled_index.hpp"
#include "pnw/pnf.hpp"

using namespace pnw;

namespace {

std::vector<long> ordinates(const std::vector<LatticePoint>& path) {
    std::vector<long> out;
    for (const auto& p : path) out.push_back(p.y);
    return out;
}

std::size_t occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++count;
    return count;
}

}  // namespace

TEST_CASE("word_path") {
    CHECK(word_path(Word()) == std::vector<LatticePoint>{{0, 0}});
    CHECK(word_path(Word("ab")) == std::vector<LatticePoint>{{0, 0}, {1, 1}, {2, 0}});
    CHECK(word_path(Word("aab")) == std::vector<LatticePoint>{{0, 0}, {1, 1}, {2, 2}, {3, 1}});
}

TEST_CASE("region") {
    const auto r = region(Word("ababbaabaabbbaaabbab"));
    CHECK(r.upper[5] == 3);
    CHECK(r.lower[5] == -1);
    const auto aaaa = region(Word("aaaa"));
    CHECK(aaaa.upper == std::vector<long>{0, 1, 2, 3, 4});
    CHECK(aaaa.lower == std::vector<long>{0, 1, 2, 3, 4});
    const auto ab = region(Word("ab"));
    CHECK(ab.upper == std::vector<long>{0, 1, 0});
    CHECK(ab.lower == std::vector<long>{0, -1, 0});
    CHECK(ab.contains(1, 1));
    CHECK_FALSE(ab.contains(1, 0));
    CHECK_FALSE(ab.contains(3, 1));
    CHECK(RegionProfile::parikh_of(3, 1) == ParikhVector{2, 1});
}

TEST_CASE("region polygon has 2(n+1) vertices") {
    for (const char* s : {"", "a", "ab", "ababbaabaabbbaaabbab"}) {
        const Word w(s);
        CHECK(region_polygon(region(w)).size() == 2 * (w.size() + 1));
    }
}

TEST_CASE("region is exactly the Parikh set for every word up to length 12") {
    oracle::for_all_words(12, [](const std::string& s) {
        const Word w(s);
        const auto r = region(w);
        const auto ix = build_index(w);
        const long n = static_cast<long>(w.size());
        for (long x = 0; x <= n; ++x) {
            for (long y = -x; y <= x; ++y) {
                if ((x - y) % 2 != 0) {
                    REQUIRE_FALSE(r.contains(x, y));
                    continue;
                }
                REQUIRE(r.contains(x, y) == ix.query(RegionProfile::parikh_of(x, y)));
            }
        }
        REQUIRE(ordinates(word_path(build_pnf_a(w))) == r.upper);
        REQUIRE(ordinates(word_path(build_pnf_b(w))) == r.lower);
        for (std::size_t start = 1; start <= w.size(); ++start) {
            for (const auto& p : word_path(w.factor(start, w.size() - start + 1))) REQUIRE(r.contains(p.x, p.y));
        }
        for (std::size_t k = 1; k <= w.size(); ++k) {
            REQUIRE(std::abs(r.upper[k] - r.upper[k - 1]) == 1);
            REQUIRE(std::abs(r.lower[k] - r.lower[k - 1]) == 1);
            REQUIRE(r.lower[k] <= r.upper[k]);
        }
    });
}

TEST_CASE("render_svg") {
    const Word w("ababbaabaabbbaaabbab");
    const auto svg = render_svg(w);
    CHECK(svg == render_svg(w));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(occurrences(svg, "<polygon") == 1);
    CHECK(occurrences(svg, "id=\"pnf-a\"") == 1);
    CHECK(occurrences(svg, "id=\"pnf-b\"") == 1);
    CHECK(occurrences(svg, "<polyline") == 3);

    const auto with_suffixes = render_svg(w, {.unit = 10, .suffix_paths = true});
    CHECK(occurrences(with_suffixes, "<polyline") == 3 + 19);
    CHECK(with_suffixes == render_svg(w, {.unit = 10, .suffix_paths = true}));

    const auto empty = render_svg(Word());
    CHECK(occurrences(empty, "<circle") == 1);
    CHECK(occurrences(empty, "<polyline") == 0);
    CHECK(occurrences(empty, "<polygon") == 0);

    CHECK_THROWS_AS(render_svg(Word::repeat(Symbol::a, render_bound + 1)), std::length_error);
    CHECK_THROWS_AS(render_svg(w, {.unit = 0}), std::invalid_argument);
}

TEST_CASE("svg boundary polylines trace the two normal forms") {
    // unit 1, margin 1, y_top = max upper; boundary vertex k sits at (1 + k, 1 + y_top - y)
    const Word w("ababbaabaabbbaaabbab");
    const auto svg = render_svg(w, {.unit = 1});
    const auto upper = ordinates(word_path(Word("aaababbabaabbababbab")));
    const auto lower = ordinates(word_path(Word("bbbaababababaabababa")));
    const long top = *std::max_element(upper.begin(), upper.end());
    auto expect_points = [&](const std::vector<long>& ys) {
        std::string out;
        for (std::size_t k = 0; k < ys.size(); ++k) {
            if (k) out += ' ';
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.2f,%.2f", 1.0 + static_cast<double>(k),
                          1.0 + static_cast<double>(top - ys[k]));
            out += buf;
        }
        return out;
    };
    CHECK(svg.find("id=\"pnf-a\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\"" +
                   expect_points(upper) + "\"") != std::string::npos);
    CHECK(svg.find("id=\"pnf-b\" fill=\"none\" stroke=\"#b0413e\" stroke-width=\"2\" points=\"" +
                   expect_points(lower) + "\"") != std::string::npos);
}

TEST_CASE("region_csv") {
    CHECK(region_csv(Word("ab")) == "k,upper_y,lower_y,F_a,f_a\n0,0,0,0,0\n1,1,-1,1,0\n2,0,0,1,1\n");
}
