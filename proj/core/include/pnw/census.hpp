// census.hpp -- exhaustive and backtracking enumeration of prefix normal
// words, pre-necklaces and prefix-normal-form equivalence classes

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

inline constexpr std::size_t default_count_bound = 24;
inline constexpr std::size_t default_census_bound = 20;

/// `jobs == 0` means one worker per hardware thread. Results never depend on `jobs`.
struct CountOptions {
    unsigned jobs = 1;
    std::size_t bound = default_count_bound;
};

struct CensusOptions {
    unsigned jobs = 1;
    std::size_t bound = default_census_bound;
};

/// |L_a ∩ Σ^n| by depth-first search over the prefix-closed tree of prefix
/// normal words, extending by a only where the suffix/prefix test allows.
/// Throws std::length_error if n exceeds the bound.
std::uint64_t count_prefix_normal(std::size_t n, const CountOptions& options = {});

/// Same count by testing every one of the 2^n words.
std::uint64_t count_prefix_normal_exhaustive(std::size_t n, const CountOptions& options = {});

/// Number of pre-necklaces of length n, by backtracking on the Lyndon period.
std::uint64_t count_pre_necklaces(std::size_t n, const CountOptions& options = {});

/// Partition of Σ^n by PNF_a. Keys are the prefix normal forms, ordered lexicographically.
struct ClassCensus {
    std::size_t n = 0;
    std::map<Word, std::uint64_t> classes;
    std::uint64_t total_words = 0;

    std::uint64_t max_class_size() const;
    /// class size -> number of classes of that size
    std::map<std::uint64_t, std::size_t> histogram() const;
};

ClassCensus class_census(std::size_t n, const CensusOptions& options = {});

std::uint64_t max_class_size(std::size_t n, const CensusOptions& options = {});

/// All words of length |pnf| with prefix normal form `pnf`, in lexicographic
/// order. Throws std::invalid_argument if pnf is not prefix normal.
std::vector<Word> class_members(const Word& pnf, const CensusOptions& options = {});

/// PNF_a on packed words (see to_bits), for enumeration hot loops. length <= 32.
std::uint32_t pnf_a_bits(std::uint32_t bits, std::size_t length) noexcept;

struct CountsRow {
    std::size_t n = 0;
    std::optional<std::uint64_t> count_prefix_normal;
    std::optional<std::uint64_t> count_pre_necklace;
    std::optional<std::uint64_t> max_class_size;
};

struct CountsSelection {
    bool prefix_normal = true;
    bool pre_necklace = true;
    bool max_class_size = false;
};

/// Rows for n = 1..max_n.
std::vector<CountsRow> counts_table(std::size_t max_n, const CountsSelection& what, unsigned jobs = 1);

}  // namespace pnw
