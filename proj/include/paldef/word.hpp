#ifndef PALDEF_WORD_HPP
#define PALDEF_WORD_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paldef {

/// A letter is a single display glyph; algorithms treat it as an opaque symbol.
using Letter = char;

/// Ordered set of glyphs. The position of a glyph is its dense symbol index,
/// used for extension bitmasks and as the canonical (lexicographic) order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view glyphs);

    /// Alphabet of the distinct glyphs of `text`, sorted.
    static Alphabet from_text(std::string_view text);

    std::size_t size() const { return glyphs_.size(); }
    Letter glyph(std::size_t index) const;
    std::optional<std::size_t> index_of(Letter g) const;
    bool contains(Letter g) const { return index_of(g).has_value(); }
    const std::string& glyphs() const { return glyphs_; }

    bool operator==(const Alphabet&) const = default;

private:
    std::string glyphs_;
};

/// A finite word over an Alphabet. The empty word is valid.
class Word {
public:
    Word() = default;
    Word(Alphabet alphabet, std::string text);

    /// Word over the sorted distinct glyphs of `text`.
    static Word parse(std::string_view text);
    /// Word over a fixed alphabet; rejects glyphs outside it.
    static Word parse(std::string_view text, Alphabet alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& text() const { return text_; }
    std::string_view view() const { return text_; }
    std::size_t size() const { return text_.size(); }
    bool empty() const { return text_.empty(); }
    Letter at(std::size_t i) const { return text_.at(i); }

    Word subword(std::size_t pos, std::size_t len) const;
    Word reversed() const;
    bool palindrome() const;

    friend bool operator==(const Word& a, const Word& b) { return a.text_ == b.text_; }
    friend auto operator<=>(const Word& a, const Word& b) { return a.text_ <=> b.text_; }

private:
    Alphabet alphabet_;
    std::string text_;
};

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

std::string reversed_text(std::string_view s);
bool is_palindrome(std::string_view s);

/// Length of the primitive root of `s` (== |s| iff s is primitive).
std::size_t primitive_root_length(std::string_view s);
bool is_primitive(std::string_view s);

} // namespace paldef

#endif
