#include "pnw/tables.hpp"

#include <algorithm>

#include "pnw/census.hpp"

namespace pnw {

const ReferenceTables& reference_tables() {
    static const ReferenceTables tables{
        .prefix_normal_counts = {2, 3, 5, 8, 14, 23, 41, 70, 125, 218, 395, 697, 1273, 2279, 4185, 7568},
        .pre_necklace_counts = {2, 3, 5, 8, 14, 23, 41, 71, 127, 226, 412, 747, 1377, 2538, 4720, 8800},
        .max_class_sizes = {1, 2, 3, 4, 5, 6, 8, 10, 12, 18, 24, 30, 40, 60, 80, 111},
        .classes_length4 = {{"aaaa", 1}, {"aaab", 2}, {"aaba", 2}, {"aabb", 3},
                            {"abab", 2}, {"abba", 1}, {"abbb", 4}, {"bbbb", 1}},
        .classes_length8 = {
            {"aaaaaaaa", 1}, {"aaaaaaab", 2}, {"aaaaaaba", 2}, {"aaaaaabb", 3},
            {"aaaaabaa", 2}, {"aaaaabab", 4}, {"aaaaabba", 2}, {"aaaaabbb", 4},
            {"aaaabaaa", 2}, {"aaaabaab", 4}, {"aaaababa", 3}, {"aaaababb", 6},
            {"aaaabbaa", 2}, {"aaaabbab", 4}, {"aaaabbba", 2}, {"aaaabbbb", 5},
            {"aaabaaab", 2}, {"aaabaaba", 4}, {"aaabaabb", 6}, {"aaababaa", 2},
            {"aaababab", 6}, {"aaababba", 4}, {"aaababbb", 8}, {"aaabbaaa", 1},
            {"aaabbaab", 4}, {"aaabbaba", 2}, {"aaabbabb", 6}, {"aaabbbaa", 2},
            {"aaabbbab", 4}, {"aaabbbba", 2}, {"aaabbbbb", 6}, {"aabaabaa", 1},
            {"aabaabab", 4}, {"aabaabba", 2}, {"aabaabbb", 4}, {"aababaab", 2},
            {"aabababa", 6}, {"aabababb", 9}, {"aababbaa", 2}, {"aababbab", 8},
            {"aababbba", 4}, {"aababbbb", 10}, {"aabbaabb", 3}, {"aabbabab", 4},
            {"aabbabba", 3}, {"aabbabbb", 8}, {"aabbbaab", 2}, {"aabbbaba", 2},
            {"aabbbabb", 6}, {"aabbbbaa", 1}, {"aabbbbab", 4}, {"aabbbbba", 2},
            {"aabbbbbb", 7}, {"abababab", 2}, {"abababba", 2}, {"abababbb", 4},
            {"ababbaba", 1}, {"ababbabb", 6}, {"ababbbab", 4}, {"ababbbba", 2},
            {"ababbbbb", 6}, {"abbabbab", 2}, {"abbabbba", 2}, {"abbabbbb", 5},
            {"abbbabbb", 4}, {"abbbbabb", 3}, {"abbbbbab", 2}, {"abbbbbba", 1},
            {"abbbbbbb", 8}, {"bbbbbbbb", 1},
        },
        .histogram_length8 = {{1, 7}, {2, 24}, {3, 5}, {4, 16}, {5, 2}, {6, 9}, {7, 1}, {8, 4}, {9, 1}, {10, 1}},
    };
    return tables;
}

std::size_t TableReport::failures() const noexcept {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const CellCheck& c) { return !c.pass(); }));
}

namespace {

void check_classes(TableReport& report, const std::string& table,
                   const std::vector<std::pair<std::string, std::uint64_t>>& expected, const ClassCensus& census) {
    report.cells.push_back({table, "class count", expected.size(), census.classes.size()});
    for (const auto& [pnf, size] : expected) {
        const auto it = census.classes.find(Word(pnf));
        report.cells.push_back({table, pnf, size, it == census.classes.end() ? 0 : it->second});
    }
}

}  // namespace

TableReport verify_tables(const ReferenceTables& expected, const VerifyOptions& options) {
    TableReport report;
    const CountOptions count{.jobs = options.jobs};
    const CensusOptions census{.jobs = options.jobs};

    for (std::size_t i = 0; i < expected.prefix_normal_counts.size() && i + 1 <= options.max_n; ++i)
        report.cells.push_back({"counts", "L_a n=" + std::to_string(i + 1), expected.prefix_normal_counts[i],
                                count_prefix_normal(i + 1, count)});
    for (std::size_t i = 0; i < expected.pre_necklace_counts.size() && i + 1 <= options.max_n; ++i)
        report.cells.push_back({"counts", "PL n=" + std::to_string(i + 1), expected.pre_necklace_counts[i],
                                count_pre_necklaces(i + 1, count)});

    if (options.max_n >= 4 && !expected.classes_length4.empty())
        check_classes(report, "classes n=4", expected.classes_length4, class_census(4, census));

    if (options.max_n >= 8 && !expected.classes_length8.empty()) {
        const auto census8 = class_census(8, census);
        check_classes(report, "classes n=8", expected.classes_length8, census8);
        const auto histogram = census8.histogram();
        for (const auto& [size, classes] : expected.histogram_length8) {
            const auto it = histogram.find(size);
            report.cells.push_back({"classes n=8", "classes of size " + std::to_string(size), classes,
                                    it == histogram.end() ? 0 : it->second});
        }
    }

    for (std::size_t i = 0; i < expected.max_class_sizes.size() && i + 1 <= options.max_n; ++i)
        report.cells.push_back({"max class", "max class n=" + std::to_string(i + 1), expected.max_class_sizes[i],
                                max_class_size(i + 1, census)});
    return report;
}

}  // namespace pnw
