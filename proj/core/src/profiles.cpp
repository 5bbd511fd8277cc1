#include "pnw/profiles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pnw {

const char* to_string(ProfileKind kind) noexcept {
    switch (kind) {
        case ProfileKind::max_a: return "max-a";
        case ProfileKind::min_a: return "min-a";
        case ProfileKind::max_b: return "max-b";
    }
    return "?";
}

OnesProfile::OnesProfile(ProfileKind kind, std::vector<std::size_t> values)
    : kind_(kind), values_(std::move(values)) {
    if (values_.empty() || values_[0] != 0)
        throw std::invalid_argument(std::string(to_string(kind)) + " profile must start at 0");
    for (std::size_t k = 1; k < values_.size(); ++k) {
        if (values_[k] < values_[k - 1] || values_[k] - values_[k - 1] > 1)
            throw std::invalid_argument(std::string(to_string(kind)) + " profile step at k=" +
                                        std::to_string(k) + " is not 0 or 1");
    }
}

std::vector<std::size_t> prefix_counts(const Word& w, Symbol s) {
    std::vector<std::size_t> counts(w.size() + 1, 0);
    const char c = static_cast<char>(s);
    for (std::size_t i = 0; i < w.size(); ++i) counts[i + 1] = counts[i] + (w.str()[i] == c ? 1 : 0);
    return counts;
}

namespace {

std::vector<std::size_t> max_window_counts(const Word& w, Symbol s) {
    const auto prefix = prefix_counts(w, s);
    const std::size_t n = w.size();
    std::vector<std::size_t> best(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t m = 0;
        for (std::size_t i = 0; i + k <= n; ++i) m = std::max(m, prefix[i + k] - prefix[i]);
        best[k] = m;
    }
    return best;
}

}  // namespace

OnesProfile max_a_profile(const Word& w) {
    return OnesProfile(ProfileKind::max_a, max_window_counts(w, Symbol::a));
}

OnesProfile max_b_profile(const Word& w) {
    return OnesProfile(ProfileKind::max_b, max_window_counts(w, Symbol::b));
}

OnesProfile min_a_profile(const Word& w) {
    auto values = max_window_counts(w, Symbol::b);
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = k - values[k];
    return OnesProfile(ProfileKind::min_a, std::move(values));
}

}  // namespace pnw
