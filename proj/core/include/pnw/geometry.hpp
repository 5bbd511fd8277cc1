// geometry.hpp -- lattice-path picture of a word and its Parikh set
//
// A word is drawn from the origin with an up-step for every a and a
// down-step for every b. Point (x, y) with x = |v| and y = |v|_a - |v|_b is
// reached by some factor v exactly when lower[x] <= y <= upper[x] and
// x, y have equal parity.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

struct LatticePoint {
    long x = 0;
    long y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// (i, P_a(i) - (i - P_a(i))) for i = 0..n.
std::vector<LatticePoint> word_path(const Word& w);

struct RegionProfile {
    std::size_t n = 0;
    std::vector<long> upper;  ///< 2 F_a(k) - k
    std::vector<long> lower;  ///< 2 f_a(k) - k

    bool contains(long x, long y) const noexcept;
    /// Parikh vector of a lattice point; requires contains(x, y).
    static ParikhVector parikh_of(long x, long y) noexcept;
};

RegionProfile region(const Word& w);

/// Upper boundary left to right, then lower boundary right to left: 2(n + 1) vertices.
std::vector<LatticePoint> region_polygon(const RegionProfile& r);

inline constexpr std::size_t render_bound = 10'000;

struct SvgOptions {
    double unit = 16.0;  ///< pixels per lattice step
    bool suffix_paths = false;
};

/// Deterministic SVG. Throws std::length_error above render_bound.
std::string render_svg(const Word& w, const SvgOptions& options = {});

/// Columns: k, upper_y, lower_y, F_a, f_a.
std::string region_csv(const Word& w);

}  // namespace pnw
