// tables.hpp -- published reference counts and a cell-by-cell recomputation check

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pnw {

struct ReferenceTables {
    /// Index i holds the value for n = i + 1.
    std::vector<std::uint64_t> prefix_normal_counts;
    std::vector<std::uint64_t> pre_necklace_counts;
    std::vector<std::uint64_t> max_class_sizes;

    /// (PNF, class cardinality) for all classes of length 4 and 8.
    std::vector<std::pair<std::string, std::uint64_t>> classes_length4;
    std::vector<std::pair<std::string, std::uint64_t>> classes_length8;
    /// class size -> number of classes, length 8
    std::map<std::uint64_t, std::size_t> histogram_length8;
};

/// Counts for lengths 1..16 and the full class listings for lengths 4 and 8.
const ReferenceTables& reference_tables();

struct CellCheck {
    std::string table;
    std::string cell;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
    bool pass() const noexcept { return expected == actual; }
};

struct TableReport {
    std::vector<CellCheck> cells;

    std::size_t failures() const noexcept;
    bool all_pass() const noexcept { return failures() == 0; }
};

struct VerifyOptions {
    std::size_t max_n = 16;  ///< cells for longer words are skipped
    unsigned jobs = 1;
};

/// Recomputes every numeric cell of `expected` with n <= max_n.
TableReport verify_tables(const ReferenceTables& expected = reference_tables(), const VerifyOptions& options = {});

}  // namespace pnw
