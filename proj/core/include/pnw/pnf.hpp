// pnf.hpp -- prefix normal forms and prefix normality tests
//
// A word is prefix normal (w.r.t. a) when no factor of length k holds more
// a's than the prefix of length k. The prefix normal form PNF_a(w) is the
// unique prefix normal word whose prefix a-counts equal F_a(w, .).

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

Word build_pnf_a(const Word& w);
/// complement(build_pnf_a(complement(w)))
Word build_pnf_b(const Word& w);

struct PnfPair {
    Word pnf_a;
    Word pnf_b;

    std::size_t source_length() const noexcept { return pnf_a.size(); }
    friend bool operator==(const PnfPair&, const PnfPair&) = default;
};

PnfPair build_pnf_pair(const Word& w);

/// Equivalent characterizations of prefix normality. All must agree.
enum class NormalityTest {
    profile,             ///< F_a(w,k) == P_a(w,k) for every k
    prefix_subadditive,  ///< P_a(j) - P_a(i) <= P_a(j - i) for all i <= j
    factor_length,       ///< every factor with i a's is at least pos_a(i) long
    positions,           ///< pos_a(i) + pos_a(j) - 1 <= pos_a(i + j - 1), O(|w|_a^2)
    online,              ///< left-to-right scan with the a-extension test
};

bool is_prefix_normal(const Word& w, NormalityTest test = NormalityTest::profile);

/// Prefix normality with respect to b.
bool is_prefix_normal_b(const Word& w);

/// A factor with more a's than the prefix of the same length.
struct NormalityWitness {
    std::size_t start;   ///< 1-based
    std::size_t length;
    Word factor;
    std::size_t factor_a_count;
    std::size_t prefix_a_count;
};

/// Shortest violating factor, leftmost among the shortest; nullopt if w is prefix normal.
std::optional<NormalityWitness> find_witness(const Word& w);

enum class Precondition { assume, verify };

/// Whether w.a is prefix normal, given that w is. Extending by b always is.
/// With Precondition::verify a non-normal w throws std::invalid_argument.
bool can_extend_with_a(const Word& w, Precondition check = Precondition::assume);

/// Feeds a word one symbol at a time and reports prefix normality of the
/// word read so far. O(n) per symbol. Not safe for concurrent mutation.
class OnlineTester {
public:
    bool feed(Symbol s);
    bool normal() const noexcept { return normal_; }
    std::size_t length() const noexcept { return length_; }

private:
    bool normal_ = true;
    std::size_t length_ = 0;
    std::vector<std::size_t> prefix_a_{0};  // P_a(k), k = 0..length
    std::vector<std::size_t> suffix_a_{0};  // a-count of the suffix of length k
};

}  // namespace pnw
