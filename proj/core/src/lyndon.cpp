#include "pnw/lyndon.hpp"

#include <stdexcept>

#include "pnw/pnf.hpp"

namespace pnw {

std::size_t lyndon_prefix_period(const Word& w) {
    const std::string& s = w.str();
    if (s.empty()) return 0;
    std::size_t period = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < s[i - period]) return 0;
        if (s[i] > s[i - period]) period = i + 1;
    }
    return period;
}

bool is_lyndon(const Word& w) { return !w.empty() && lyndon_prefix_period(w) == w.size(); }

bool is_necklace(const Word& w) {
    if (w.empty()) return true;
    const std::size_t period = lyndon_prefix_period(w);
    return period != 0 && w.size() % period == 0;
}

bool is_pre_necklace(const Word& w) { return w.empty() || lyndon_prefix_period(w) != 0; }

bool lyndon_completion_check(const Word& w) {
    if (parikh(w).a_count == 0)
        throw std::invalid_argument("lyndon_completion_check needs at least one 'a'");
    return is_lyndon(w + Word::repeat(Symbol::b, w.size()));
}

WordClass classify(const Word& w) {
    return {is_lyndon(w), is_necklace(w), is_pre_necklace(w), is_prefix_normal(w)};
}

}  // namespace pnw
