#include "doctest.h"

#include "pnw/tables.hpp"

using namespace pnw;

TEST_CASE("reference data is internally consistent") {
    const auto& ref = reference_tables();
    CHECK(ref.prefix_normal_counts.size() == 16);
    CHECK(ref.pre_necklace_counts.size() == 16);
    CHECK(ref.max_class_sizes.size() == 16);
    CHECK(ref.classes_length4.size() == 8);
    CHECK(ref.classes_length8.size() == 70);
    std::uint64_t total = 0;
    std::map<std::uint64_t, std::size_t> histogram;
    for (const auto& [pnf, size] : ref.classes_length8) {
        total += size;
        ++histogram[size];
    }
    CHECK(total == 256);
    CHECK(histogram == ref.histogram_length8);
}

TEST_CASE("small verification passes quickly") {
    const auto report = verify_tables(reference_tables(), {.max_n = 8});
    CHECK(report.all_pass());
    CHECK(report.cells.size() == 8 + 8 + (1 + 8) + (1 + 70 + 10) + 8);
}

TEST_CASE("an injected off-by-one is flagged") {
    auto broken = reference_tables();
    broken.pre_necklace_counts[7] += 1;
    broken.classes_length8[41].second -= 1;
    const auto report = verify_tables(broken, {.max_n = 8});
    CHECK(report.failures() == 2);
    for (const auto& cell : report.cells) {
        if (!cell.pass()) CHECK((cell.cell == "PL n=8" || cell.cell == broken.classes_length8[41].first));
    }
}
