#include "pnw/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "pnw/lyndon.hpp"
#include "pnw/pnf.hpp"

namespace pnw {

namespace {

// Symbols in the search trees: 0 is a, 1 is b, so integer order is letter order.
constexpr std::uint8_t sym_a = 0;
constexpr std::uint8_t sym_b = 1;

constexpr std::size_t split_depth = 10;

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

void check_bound(std::size_t n, std::size_t bound, const char* what) {
    if (n > bound)
        throw std::length_error(std::string(what) + ": length " + std::to_string(n) + " exceeds bound " +
                                std::to_string(bound));
}

// Prefix normal words grown one symbol at a time. An a may be appended iff
// every suffix of length k has fewer a's than the prefix of length k + 1.
class NormalSearch {
public:
    std::size_t depth() const noexcept { return prefix_.size() - 1; }

    bool can_push(std::uint8_t s) const noexcept {
        if (s == sym_b) return true;
        const std::size_t d = depth();
        const auto& suffix = suffix_[d];
        for (std::size_t k = 0; k < d; ++k) {
            if (suffix[k] >= prefix_[k + 1]) return false;
        }
        return true;
    }

    void push(std::uint8_t s) {
        const std::uint32_t add = (s == sym_a) ? 1 : 0;
        const std::size_t d = depth();
        prefix_.push_back(prefix_.back() + add);
        if (suffix_.size() < d + 2) suffix_.emplace_back();
        auto& next = suffix_[d + 1];
        const auto& cur = suffix_[d];
        next.assign(d + 2, 0);
        for (std::size_t k = 0; k <= d; ++k) next[k + 1] = cur[k] + add;
    }

    void pop() { prefix_.pop_back(); }

private:
    std::vector<std::uint32_t> prefix_{0};
    std::vector<std::vector<std::uint32_t>> suffix_{{0}};
};

// Pre-necklaces grown one symbol at a time, tracking the Lyndon period.
class PreNecklaceSearch {
public:
    std::size_t depth() const noexcept { return word_.size(); }

    bool can_push(std::uint8_t s) const noexcept {
        if (word_.empty()) return true;
        return s >= word_[word_.size() - period_.back()];
    }

    void push(std::uint8_t s) {
        if (word_.empty()) {
            period_.push_back(1);
        } else if (s > word_[word_.size() - period_.back()]) {
            period_.push_back(word_.size() + 1);
        } else {
            period_.push_back(period_.back());
        }
        word_.push_back(s);
    }

    void pop() {
        word_.pop_back();
        period_.pop_back();
    }

private:
    std::vector<std::uint8_t> word_;
    std::vector<std::size_t> period_;
};

template <class Search>
std::uint64_t count_leaves(Search& search, std::size_t n) {
    if (search.depth() == n) return 1;
    std::uint64_t total = 0;
    for (std::uint8_t s : {sym_a, sym_b}) {
        if (!search.can_push(s)) continue;
        search.push(s);
        total += count_leaves(search, n);
        search.pop();
    }
    return total;
}

template <class Search>
void collect_frontier(Search& search, std::size_t depth, std::vector<std::uint8_t>& path,
                      std::vector<std::vector<std::uint8_t>>& out) {
    if (search.depth() == depth) {
        out.push_back(path);
        return;
    }
    for (std::uint8_t s : {sym_a, sym_b}) {
        if (!search.can_push(s)) continue;
        search.push(s);
        path.push_back(s);
        collect_frontier(search, depth, path, out);
        path.pop_back();
        search.pop();
    }
}

// Splits the tree at a fixed depth and hands whole subtrees to workers.
template <class Search>
std::uint64_t count_tree(std::size_t n, unsigned jobs) {
    jobs = resolve_jobs(jobs);
    if (jobs == 1 || n <= split_depth) {
        Search search;
        return count_leaves(search, n);
    }

    std::vector<std::vector<std::uint8_t>> frontier;
    {
        Search search;
        std::vector<std::uint8_t> path;
        collect_frontier(search, split_depth, path, frontier);
    }

    std::vector<std::uint64_t> partial(frontier.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < frontier.size(); i = next++) {
            Search search;
            for (std::uint8_t s : frontier[i]) search.push(s);
            partial[i] = count_leaves(search, n);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

// Runs body(lo, hi, slot) over [0, 2^n) split into contiguous chunks.
template <class Body>
void for_each_chunk(std::size_t n, unsigned jobs, std::size_t slots, Body body) {
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t step = (total + slots - 1) / slots;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t slot = next++; slot < slots; slot = next++) {
            const std::uint64_t lo = std::min(total, slot * step);
            const std::uint64_t hi = std::min(total, lo + step);
            body(lo, hi, slot);
        }
    };
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), slots));
    if (workers <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

std::size_t chunk_count(std::size_t n, unsigned jobs) {
    const unsigned workers = resolve_jobs(jobs);
    if (workers == 1) return 1;
    return std::min<std::uint64_t>(std::uint64_t{1} << n, std::uint64_t{workers} * 8);
}

}  // namespace

std::uint32_t pnf_a_bits(std::uint32_t bits, std::size_t length) noexcept {
    std::array<std::uint8_t, 33> prefix{};
    for (std::size_t i = 0; i < length; ++i) {
        const bool is_b = (bits >> (length - 1 - i)) & 1u;
        prefix[i + 1] = static_cast<std::uint8_t>(prefix[i] + (is_b ? 0 : 1));
    }
    std::uint32_t out = 0;
    std::size_t best = 0;
    for (std::size_t k = 1; k <= length; ++k) {
        // F_a(k) is F_a(k-1) or F_a(k-1) + 1
        bool rises = false;
        for (std::size_t i = 0; i + k <= length; ++i) {
            if (static_cast<std::size_t>(prefix[i + k] - prefix[i]) > best) {
                rises = true;
                break;
            }
        }
        if (rises) {
            ++best;
            out <<= 1;
        } else {
            out = (out << 1) | 1u;
        }
    }
    return out;
}

std::uint64_t count_prefix_normal(std::size_t n, const CountOptions& options) {
    check_bound(n, options.bound, "count_prefix_normal");
    return count_tree<NormalSearch>(n, options.jobs);
}

std::uint64_t count_prefix_normal_exhaustive(std::size_t n, const CountOptions& options) {
    check_bound(n, options.bound, "count_prefix_normal_exhaustive");
    const std::size_t slots = chunk_count(n, options.jobs);
    std::vector<std::uint64_t> partial(slots, 0);
    for_each_chunk(n, options.jobs, slots, [&](std::uint64_t lo, std::uint64_t hi, std::size_t slot) {
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            if (is_prefix_normal(from_bits(bits, n))) ++partial[slot];
        }
    });
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

std::uint64_t count_pre_necklaces(std::size_t n, const CountOptions& options) {
    check_bound(n, options.bound, "count_pre_necklaces");
    return count_tree<PreNecklaceSearch>(n, options.jobs);
}

std::uint64_t ClassCensus::max_class_size() const {
    std::uint64_t best = 0;
    for (const auto& [pnf, size] : classes) best = std::max(best, size);
    return best;
}

std::map<std::uint64_t, std::size_t> ClassCensus::histogram() const {
    std::map<std::uint64_t, std::size_t> out;
    for (const auto& [pnf, size] : classes) ++out[size];
    return out;
}

ClassCensus class_census(std::size_t n, const CensusOptions& options) {
    check_bound(n, std::min<std::size_t>(options.bound, 32), "class_census");
    const std::size_t slots = chunk_count(n, options.jobs);
    std::vector<std::unordered_map<std::uint32_t, std::uint64_t>> partial(slots);
    for_each_chunk(n, options.jobs, slots, [&](std::uint64_t lo, std::uint64_t hi, std::size_t slot) {
        auto& counter = partial[slot];
        for (std::uint64_t bits = lo; bits < hi; ++bits) ++counter[pnf_a_bits(static_cast<std::uint32_t>(bits), n)];
    });

    std::map<std::uint32_t, std::uint64_t> merged;
    for (const auto& counter : partial) {
        for (const auto& [key, size] : counter) merged[key] += size;
    }

    ClassCensus census;
    census.n = n;
    census.total_words = std::uint64_t{1} << n;
    for (const auto& [key, size] : merged) census.classes.emplace_hint(census.classes.end(), from_bits(key, n), size);
    return census;
}

std::uint64_t max_class_size(std::size_t n, const CensusOptions& options) {
    return class_census(n, options).max_class_size();
}

std::vector<Word> class_members(const Word& pnf, const CensusOptions& options) {
    const std::size_t n = pnf.size();
    check_bound(n, std::min<std::size_t>(options.bound, 32), "class_members");
    if (!is_prefix_normal(pnf)) throw std::invalid_argument("'" + pnf.str() + "' is not prefix normal");

    const auto target = static_cast<std::uint32_t>(to_bits(pnf));
    const std::size_t slots = chunk_count(n, options.jobs);
    std::vector<std::vector<std::uint32_t>> partial(slots);
    for_each_chunk(n, options.jobs, slots, [&](std::uint64_t lo, std::uint64_t hi, std::size_t slot) {
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            if (pnf_a_bits(static_cast<std::uint32_t>(bits), n) == target)
                partial[slot].push_back(static_cast<std::uint32_t>(bits));
        }
    });

    // chunks are contiguous and ascending, so concatenation stays sorted
    std::vector<Word> members;
    for (const auto& chunk : partial) {
        for (auto bits : chunk) members.push_back(from_bits(bits, n));
    }
    return members;
}

std::vector<CountsRow> counts_table(std::size_t max_n, const CountsSelection& what, unsigned jobs) {
    std::vector<CountsRow> rows;
    for (std::size_t n = 1; n <= max_n; ++n) {
        CountsRow row;
        row.n = n;
        if (what.prefix_normal) row.count_prefix_normal = count_prefix_normal(n, {.jobs = jobs});
        if (what.pre_necklace) row.count_pre_necklace = count_pre_necklaces(n, {.jobs = jobs});
        if (what.max_class_size) row.max_class_size = max_class_size(n, {.jobs = jobs});
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pnw
