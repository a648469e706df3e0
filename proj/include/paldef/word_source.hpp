#ifndef PALDEF_WORD_SOURCE_HPP
#define PALDEF_WORD_SOURCE_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "paldef/word.hpp"

namespace paldef {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a source cannot produce a prefix of the requested length.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Substitution on letters; every letter has a nonempty image.
struct Morphism {
    Alphabet alphabet;
    std::vector<std::string> images; // indexed by alphabet symbol index

    Morphism(Alphabet alphabet, std::map<Letter, std::string> letter_images);

    const std::string& image(Letter g) const;
    std::string apply(std::string_view s) const;

    /// image(seed) begins with seed and has length >= 2.
    bool prolongable_on(Letter seed) const;
};

/// Deterministic generator of prefixes of an infinite word. Immutable;
/// prefix(L1) is a prefix of prefix(L2) whenever L1 <= L2.
class WordSource {
public:
    static WordSource explicit_word(Word w);
    static WordSource periodic(Word period);
    static WordSource morphism_fixed_point(Morphism m, Letter seed);
    /// One of: ab-omega, rote, ternary-oddity, fibonacci, thue-morse.
    static WordSource builtin(std::string_view name);
    static const std::vector<std::string>& builtin_names();

    /// Config document: {kind, alphabet?, word?, period?, images?, seed?, name?}.
    static WordSource from_config_text(std::string_view json_text);
    static WordSource from_config_file(const std::string& path);

    Word prefix(std::size_t length) const;
    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& id() const { return id_; }

private:
    struct Explicit { Word word; };
    struct Periodic { Word period; };
    struct FixedPoint {
        Morphism morphism;
        Letter seed;
    };
    // u_0 = a, u_{n+1} = u_n b^{n+1} c^{n+1} u_n, limit word over {a,b,c}
    struct TernaryBlocks {};

    using Kind = std::variant<Explicit, Periodic, FixedPoint, TernaryBlocks>;

    WordSource(Kind kind, Alphabet alphabet, std::string id);

    Kind kind_;
    Alphabet alphabet_;
    std::string id_;
};

} // namespace paldef

#endif
