#include "paldef/word.hpp"

#include <algorithm>
#include <vector>

namespace paldef {

Alphabet::Alphabet(std::string_view glyphs) : glyphs_(glyphs) {
    std::string sorted(glyphs);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("alphabet has duplicate glyphs");
}

Alphabet Alphabet::from_text(std::string_view text) {
    std::string sorted(text);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return Alphabet(sorted);
}

Letter Alphabet::glyph(std::size_t index) const {
    if (index >= glyphs_.size()) throw std::out_of_range("alphabet index out of range");
    return glyphs_[index];
}

std::optional<std::size_t> Alphabet::index_of(Letter g) const {
    auto pos = glyphs_.find(g);
    if (pos == std::string::npos) return std::nullopt;
    return pos;
}

Word::Word(Alphabet alphabet, std::string text)
    : alphabet_(std::move(alphabet)), text_(std::move(text)) {
    for (Letter g : text_)
        if (!alphabet_.contains(g))
            throw std::invalid_argument(std::string("letter '") + g + "' not in alphabet");
}

Word Word::parse(std::string_view text) {
    return Word(Alphabet::from_text(text), std::string(text));
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
    return Word(std::move(alphabet), std::string(text));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos > text_.size() || pos + len > text_.size())
        throw std::out_of_range("subword out of range");
    return Word(alphabet_, text_.substr(pos, len));
}

Word Word::reversed() const {
    return Word(alphabet_, reversed_text(text_));
}

bool Word::palindrome() const { return is_palindrome(text_); }

Word reverse(const Word& w) { return w.reversed(); }

bool is_palindrome(const Word& w) { return w.palindrome(); }

std::string reversed_text(std::string_view s) {
    return std::string(s.rbegin(), s.rend());
}

bool is_palindrome(std::string_view s) {
    for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j)
        if (s[i] != s[j - 1]) return false;
    return true;
}

std::size_t primitive_root_length(std::string_view s) {
    const std::size_t n = s.size();
    if (n == 0) return 0;
    // border array (longest proper border per prefix)
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t b = border[i - 1];
        while (b > 0 && s[i] != s[b]) b = border[b - 1];
        if (s[i] == s[b]) ++b;
        border[i] = b;
    }
    const std::size_t p = n - border[n - 1];
    return (n % p == 0) ? p : n;
}

bool is_primitive(std::string_view s) {
    return !s.empty() && primitive_root_length(s) == s.size();
}

} // namespace paldef
