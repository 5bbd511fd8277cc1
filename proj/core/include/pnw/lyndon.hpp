// lyndon.hpp -- Lyndon words, necklaces and pre-necklaces (order a < b)

#pragma once

#include <cstddef>

#include "pnw/word.hpp"

namespace pnw {

/// Nonempty and strictly smaller than each of its proper nonempty suffixes.
bool is_lyndon(const Word& w);
/// A power of a Lyndon word. The empty word counts as the zeroth power.
bool is_necklace(const Word& w);
/// A prefix of a power of a Lyndon word (includes the empty word).
bool is_pre_necklace(const Word& w);

/// Length of the longest Lyndon prefix that w is a fractional power of, or 0
/// when w is not a pre-necklace. Single left-to-right scan.
std::size_t lyndon_prefix_period(const Word& w);

/// is_lyndon(w b^|w|). Requires |w|_a > 0, otherwise std::invalid_argument.
bool lyndon_completion_check(const Word& w);

struct WordClass {
    bool is_lyndon = false;
    bool is_necklace = false;
    bool is_pre_necklace = false;
    bool is_prefix_normal = false;

    friend bool operator==(const WordClass&, const WordClass&) = default;
};

WordClass classify(const Word& w);

}  // namespace pnw
