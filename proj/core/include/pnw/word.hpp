// word.hpp -- binary words over the ordered alphabet a < b

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pnw {

enum class Symbol : char { a = 'a', b = 'b' };

constexpr Symbol other(Symbol s) noexcept { return s == Symbol::a ? Symbol::b : Symbol::a; }

/// Textual encodings accepted when parsing words. Output is always `a`/`b`.
enum class Alphabet {
    ab,      ///< `a` and `b`
    binary,  ///< `1` is a, `0` is b
};

/// Raised when text cannot be read as a word. `position()` is 1-based.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, char found);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Immutable binary word. Public positions are 1-based (w_1 ... w_n).
class Word {
public:
    Word() = default;

    /// Throws ParseError on any character other than `a`/`b`.
    explicit Word(std::string_view letters);

    static Word repeat(Symbol s, std::size_t count);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// Symbol at 1-based position; throws std::out_of_range.
    Symbol at(std::size_t position) const;

    const std::string& str() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// First `length` symbols.
    Word prefix(std::size_t length) const;
    /// Factor w_{start} ... w_{start+length-1}, 1-based start.
    Word factor(std::size_t start, std::size_t length) const;

    Word operator+(const Word& rhs) const;
    Word operator+(Symbol s) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
        return lhs.letters_.compare(rhs.letters_) <=> 0;
    }

private:
    struct trusted_tag {};
    Word(std::string letters, trusted_tag) : letters_(std::move(letters)) {}

    std::string letters_;

    friend Word reverse(const Word&);
    friend Word complement(const Word&);
    friend Word from_bits(std::uint64_t, std::size_t);
};

struct ParikhVector {
    std::size_t a_count = 0;
    std::size_t b_count = 0;

    std::size_t length() const noexcept { return a_count + b_count; }
    friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

Word parse_word(std::string_view text, Alphabet alphabet = Alphabet::ab);

ParikhVector parikh(const Word& w) noexcept;

/// Number of occurrences of `s` among the first i symbols; 0 <= i <= |w|.
std::size_t prefix_count(const Word& w, std::size_t i, Symbol s = Symbol::a);

/// 1-based position of the i-th occurrence of `s`; 1 <= i <= |w|_s.
std::size_t pos(const Word& w, std::size_t i, Symbol s = Symbol::a);
inline std::size_t pos_a(const Word& w, std::size_t i) { return pos(w, i, Symbol::a); }

Word reverse(const Word& w);
Word complement(const Word& w);

// Packed form used by the enumerators: bit (n-1-i) holds w_{i+1}, set means `b`.
// Numeric order of packed words of one length is lexicographic order.
std::uint64_t to_bits(const Word& w);
Word from_bits(std::uint64_t bits, std::size_t length);

}  // namespace pnw
