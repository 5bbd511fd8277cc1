// jumbled_index.hpp -- constant-time Parikh vector occurrence queries
//
// For a binary text the a-counts of length-k factors form the contiguous
// interval [f_a(k), F_a(k)], so storing both profiles answers every
// "does some factor have Parikh vector (x, y)?" question with two reads.

#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "pnw/pnf.hpp"
#include "pnw/profiles.hpp"
#include "pnw/word.hpp"

namespace pnw {

class JumbledIndex {
public:
    /// Throws std::invalid_argument unless kinds are max-a/min-a, lengths
    /// agree and min_a[k] <= max_a[k] for every k.
    JumbledIndex(OnesProfile max_a, OnesProfile min_a);

    std::size_t n() const noexcept { return max_a_.n(); }
    const OnesProfile& max_a() const noexcept { return max_a_; }
    const OnesProfile& min_a() const noexcept { return min_a_; }

    /// Factors longer than the text never occur, so such queries are false.
    bool query(ParikhVector q) const noexcept {
        const std::size_t k = q.length();
        if (k > n()) return false;
        return min_a_.values()[k] <= q.a_count && q.a_count <= max_a_.values()[k];
    }

    friend bool operator==(const JumbledIndex&, const JumbledIndex&) = default;

private:
    OnesProfile max_a_;
    OnesProfile min_a_;
};

JumbledIndex build_index(const Word& w);

inline bool query(const JumbledIndex& ix, ParikhVector q) noexcept { return ix.query(q); }

/// Linear-time conversion. Rejects pairs whose components are not prefix
/// normal (w.r.t. a and b respectively), differ in length, or cannot stem
/// from one word (|pnf_a|_a + |pnf_b|_b must equal n).
JumbledIndex index_from_pnf(const PnfPair& p);

/// Linear-time inverse of index_from_pnf.
PnfPair pnf_from_index(const JumbledIndex& ix);

/// Parikh sets of the two words coincide iff both prefix normal forms do.
bool parikh_set_equal(const Word& lhs, const Word& rhs);

using ParikhSet = std::set<ParikhVector>;

inline constexpr std::size_t default_oracle_bound = 1000;

/// Brute-force enumeration of every factor; throws std::length_error above `bound`.
ParikhSet parikh_set_oracle(const Word& w, std::size_t bound = default_oracle_bound);

/// `{"version":1,"n":..,"maxA":[..],"minA":[..]}`
std::string index_to_json(const JumbledIndex& ix);
/// Throws std::invalid_argument on a malformed document or unsupported version.
JumbledIndex index_from_json(const std::string& text);

}  // namespace pnw
