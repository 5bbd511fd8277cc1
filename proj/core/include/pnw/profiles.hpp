// profiles.hpp -- per-length extremal letter counts over all factors of a word

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

enum class ProfileKind {
    max_a,  ///< F_a: most a's in any factor of length k
    min_a,  ///< f_a: fewest a's in any factor of length k
    max_b,  ///< F_b: most b's in any factor of length k
};

const char* to_string(ProfileKind kind) noexcept;

/// values[k] for k = 0..n. Every profile starts at 0, never exceeds k and
/// grows by 0 or 1 per unit of length.
class OnesProfile {
public:
    /// Validates the invariants above; throws std::invalid_argument.
    OnesProfile(ProfileKind kind, std::vector<std::size_t> values);

    ProfileKind kind() const noexcept { return kind_; }
    std::size_t n() const noexcept { return values_.size() - 1; }
    std::span<const std::size_t> values() const noexcept { return values_; }
    std::size_t operator[](std::size_t k) const { return values_.at(k); }

    friend bool operator==(const OnesProfile&, const OnesProfile&) = default;

private:
    ProfileKind kind_;
    std::vector<std::size_t> values_;
};

/// Sliding window per length: O(n^2) time, O(n) space.
OnesProfile max_a_profile(const Word& w);
OnesProfile max_b_profile(const Word& w);
/// k - F_b(w,k).
OnesProfile min_a_profile(const Word& w);

/// Prefix counts P_s(w,0..n) in one pass.
std::vector<std::size_t> prefix_counts(const Word& w, Symbol s = Symbol::a);

}  // namespace pnw
