#include "pnw/word.hpp"

#include <algorithm>
#include <string>

namespace pnw {

namespace {

std::string describe(std::size_t position, char found) {
    std::string msg = "invalid symbol '";
    msg += found;
    msg += "' at position " + std::to_string(position);
    return msg;
}

}  // namespace

ParseError::ParseError(std::size_t position, char found)
    : std::invalid_argument(describe(position, found)), position_(position) {}

Word::Word(std::string_view letters) : letters_(letters) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] != 'a' && letters_[i] != 'b') throw ParseError(i + 1, letters_[i]);
    }
}

Word Word::repeat(Symbol s, std::size_t count) {
    return Word(std::string(count, static_cast<char>(s)), trusted_tag{});
}

Symbol Word::at(std::size_t position) const {
    if (position == 0 || position > letters_.size())
        throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                                std::to_string(letters_.size()));
    return static_cast<Symbol>(letters_[position - 1]);
}

Word Word::prefix(std::size_t length) const {
    if (length > size()) throw std::out_of_range("prefix longer than word");
    return Word(letters_.substr(0, length), trusted_tag{});
}

Word Word::factor(std::size_t start, std::size_t length) const {
    if (start == 0 || start - 1 + length > size()) throw std::out_of_range("factor outside word");
    return Word(letters_.substr(start - 1, length), trusted_tag{});
}

Word Word::operator+(const Word& rhs) const { return Word(letters_ + rhs.letters_, trusted_tag{}); }

Word Word::operator+(Symbol s) const { return Word(letters_ + static_cast<char>(s), trusted_tag{}); }

Word parse_word(std::string_view text, Alphabet alphabet) {
    if (alphabet == Alphabet::ab) return Word(text);
    std::string letters(text.size(), 'a');
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '1': letters[i] = 'a'; break;
            case '0': letters[i] = 'b'; break;
            default: throw ParseError(i + 1, text[i]);
        }
    }
    return Word(letters);
}

ParikhVector parikh(const Word& w) noexcept {
    auto a = static_cast<std::size_t>(std::count(w.begin(), w.end(), 'a'));
    return {a, w.size() - a};
}

std::size_t prefix_count(const Word& w, std::size_t i, Symbol s) {
    if (i > w.size())
        throw std::out_of_range("prefix length " + std::to_string(i) + " exceeds word length " +
                                std::to_string(w.size()));
    return static_cast<std::size_t>(std::count(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i),
                                               static_cast<char>(s)));
}

std::size_t pos(const Word& w, std::size_t i, Symbol s) {
    if (i == 0) throw std::out_of_range("occurrence rank starts at 1");
    std::size_t seen = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w.str()[k] == static_cast<char>(s) && ++seen == i) return k + 1;
    }
    throw std::out_of_range("word has only " + std::to_string(seen) + " occurrences of '" +
                            static_cast<char>(s) + "'");
}

Word reverse(const Word& w) {
    return Word(std::string(w.letters_.rbegin(), w.letters_.rend()), Word::trusted_tag{});
}

Word complement(const Word& w) {
    std::string out = w.letters_;
    for (char& c : out) c = (c == 'a') ? 'b' : 'a';
    return Word(std::move(out), Word::trusted_tag{});
}

std::uint64_t to_bits(const Word& w) {
    if (w.size() > 64) throw std::length_error("packed words hold at most 64 symbols");
    std::uint64_t bits = 0;
    for (char c : w) bits = (bits << 1) | (c == 'b' ? 1u : 0u);
    return bits;
}

Word from_bits(std::uint64_t bits, std::size_t length) {
    if (length > 64) throw std::length_error("packed words hold at most 64 symbols");
    std::string out(length, 'a');
    for (std::size_t i = 0; i < length; ++i) {
        if ((bits >> (length - 1 - i)) & 1u) out[i] = 'b';
    }
    return Word(std::move(out), Word::trusted_tag{});
}

}  // namespace pnw
