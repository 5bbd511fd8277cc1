#include "pnw/pnf.hpp"

#include <stdexcept>
#include <string>

#include "pnw/profiles.hpp"

namespace pnw {

namespace {

Word word_from_steps(std::span<const std::size_t> values, Symbol rising) {
    std::string letters(values.size() - 1, static_cast<char>(other(rising)));
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k] == values[k - 1] + 1) letters[k - 1] = static_cast<char>(rising);
    }
    return Word(letters);
}

bool profile_matches_prefix(const Word& w) {
    const auto best = max_a_profile(w);
    const auto prefix = prefix_counts(w);
    for (std::size_t k = 0; k <= w.size(); ++k) {
        if (best[k] != prefix[k]) return false;
    }
    return true;
}

bool prefix_subadditive(const Word& w) {
    const auto p = prefix_counts(w);
    for (std::size_t j = 0; j < p.size(); ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            if (p[j] - p[i] > p[j - i]) return false;
        }
    }
    return true;
}

// positions_of_a[i] = pos_a(w, i), 1-based, index 0 unused.
std::vector<std::size_t> positions_of_a(const Word& w) {
    std::vector<std::size_t> out{0};
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w.str()[k] == 'a') out.push_back(k + 1);
    }
    return out;
}

bool factor_length_bound(const Word& w) {
    const auto pos = positions_of_a(w);
    const std::size_t n = w.size();
    for (std::size_t start = 0; start < n; ++start) {
        std::size_t count = 0;
        for (std::size_t end = start; end < n; ++end) {
            if (w.str()[end] == 'a') ++count;
            if (count > 0 && end - start + 1 < pos[count]) return false;
        }
    }
    return true;
}

bool position_superadditive(const Word& w) {
    const auto pos = positions_of_a(w);
    const std::size_t total = pos.size() - 1;
    for (std::size_t i = 1; i <= total; ++i) {
        for (std::size_t j = 1; i + j - 1 <= total; ++j) {
            if (pos[i] + pos[j] - 1 > pos[i + j - 1]) return false;
        }
    }
    return true;
}

bool online_scan(const Word& w) {
    OnlineTester tester;
    for (char c : w) {
        if (!tester.feed(static_cast<Symbol>(c))) return false;
    }
    return true;
}

}  // namespace

Word build_pnf_a(const Word& w) { return word_from_steps(max_a_profile(w).values(), Symbol::a); }

Word build_pnf_b(const Word& w) { return word_from_steps(max_b_profile(w).values(), Symbol::b); }

PnfPair build_pnf_pair(const Word& w) { return {build_pnf_a(w), build_pnf_b(w)}; }

bool is_prefix_normal(const Word& w, NormalityTest test) {
    switch (test) {
        case NormalityTest::profile: return profile_matches_prefix(w);
        case NormalityTest::prefix_subadditive: return prefix_subadditive(w);
        case NormalityTest::factor_length: return factor_length_bound(w);
        case NormalityTest::positions: return position_superadditive(w);
        case NormalityTest::online: return online_scan(w);
    }
    throw std::invalid_argument("unknown normality test");
}

bool is_prefix_normal_b(const Word& w) { return is_prefix_normal(complement(w)); }

std::optional<NormalityWitness> find_witness(const Word& w) {
    const auto p = prefix_counts(w);
    const std::size_t n = w.size();
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i + k <= n; ++i) {
            const std::size_t count = p[i + k] - p[i];
            if (count > p[k]) return NormalityWitness{i + 1, k, w.factor(i + 1, k), count, p[k]};
        }
    }
    return std::nullopt;
}

bool can_extend_with_a(const Word& w, Precondition check) {
    if (check == Precondition::verify && !is_prefix_normal(w))
        throw std::invalid_argument("can_extend_with_a: '" + w.str() + "' is not prefix normal");
    const auto p = prefix_counts(w);
    const std::size_t n = w.size();
    for (std::size_t k = 0; k < n; ++k) {
        // a-count of the suffix of length k against the prefix of length k + 1
        if (p[n] - p[n - k] >= p[k + 1]) return false;
    }
    return true;
}

bool OnlineTester::feed(Symbol s) {
    ++length_;
    if (!normal_) return false;

    const std::size_t n = length_ - 1;
    if (s == Symbol::a) {
        for (std::size_t k = 0; k < n; ++k) {
            if (suffix_a_[k] >= prefix_a_[k + 1]) {
                normal_ = false;
                // prefix closure: no extension can recover, stop tracking
                prefix_a_.clear();
                suffix_a_.clear();
                return false;
            }
        }
    }

    const std::size_t add = (s == Symbol::a) ? 1 : 0;
    prefix_a_.push_back(prefix_a_.back() + add);
    suffix_a_.push_back(0);
    for (std::size_t k = n + 1; k > 0; --k) suffix_a_[k] = suffix_a_[k - 1] + add;
    suffix_a_[0] = 0;
    return true;
}

}  // namespace pnw
