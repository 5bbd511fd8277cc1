#include "pnw/jumbled_index.hpp"

#include <stdexcept>
#include <vector>

namespace pnw {

JumbledIndex::JumbledIndex(OnesProfile max_a, OnesProfile min_a)
    : max_a_(std::move(max_a)), min_a_(std::move(min_a)) {
    if (max_a_.kind() != ProfileKind::max_a || min_a_.kind() != ProfileKind::min_a)
        throw std::invalid_argument("index needs a max-a and a min-a profile");
    if (max_a_.n() != min_a_.n()) throw std::invalid_argument("index profiles differ in length");
    for (std::size_t k = 0; k <= n(); ++k) {
        if (min_a_[k] > max_a_[k])
            throw std::invalid_argument("index has min_a > max_a at k=" + std::to_string(k));
    }
}

JumbledIndex build_index(const Word& w) { return JumbledIndex(max_a_profile(w), min_a_profile(w)); }

JumbledIndex index_from_pnf(const PnfPair& p) {
    const std::size_t n = p.pnf_a.size();
    if (p.pnf_b.size() != n) throw std::invalid_argument("PNF pair components differ in length");
    if (!is_prefix_normal(p.pnf_a))
        throw std::invalid_argument("'" + p.pnf_a.str() + "' is not prefix normal w.r.t. a");
    if (!is_prefix_normal_b(p.pnf_b))
        throw std::invalid_argument("'" + p.pnf_b.str() + "' is not prefix normal w.r.t. b");

    std::vector<std::size_t> max_a(n + 1, 0);
    std::vector<std::size_t> min_a(n + 1, 0);
    std::size_t a_seen = 0;
    std::size_t b_seen = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (p.pnf_a.str()[k - 1] == 'a') ++a_seen;
        if (p.pnf_b.str()[k - 1] == 'b') ++b_seen;
        max_a[k] = a_seen;
        min_a[k] = k - b_seen;
    }
    if (a_seen + b_seen != n)
        throw std::invalid_argument("PNF pair is inconsistent: " + std::to_string(a_seen) + " a's and " +
                                    std::to_string(b_seen) + " b's for length " + std::to_string(n));
    return JumbledIndex(OnesProfile(ProfileKind::max_a, std::move(max_a)),
                        OnesProfile(ProfileKind::min_a, std::move(min_a)));
}

PnfPair pnf_from_index(const JumbledIndex& ix) {
    const std::size_t n = ix.n();
    std::string pnf_a(n, 'b');
    std::string pnf_b(n, 'a');
    for (std::size_t k = 1; k <= n; ++k) {
        // profile steps are 0/1 by OnesProfile construction
        if (ix.max_a()[k] != ix.max_a()[k - 1]) pnf_a[k - 1] = 'a';
        if (ix.min_a()[k] == ix.min_a()[k - 1]) pnf_b[k - 1] = 'b';
    }
    return {Word(pnf_a), Word(pnf_b)};
}

bool parikh_set_equal(const Word& lhs, const Word& rhs) {
    return lhs.size() == rhs.size() && build_pnf_a(lhs) == build_pnf_a(rhs) &&
           build_pnf_b(lhs) == build_pnf_b(rhs);
}

ParikhSet parikh_set_oracle(const Word& w, std::size_t bound) {
    if (w.size() > bound)
        throw std::length_error("oracle bound " + std::to_string(bound) + " exceeded by length " +
                                std::to_string(w.size()));
    ParikhSet out{{0, 0}};
    for (std::size_t start = 0; start < w.size(); ++start) {
        ParikhVector v;
        for (std::size_t end = start; end < w.size(); ++end) {
            (w.str()[end] == 'a' ? v.a_count : v.b_count)++;
            out.insert(v);
        }
    }
    return out;
}

}  // namespace pnw
