#ifndef PALDEF_FACTOR_INDEX_HPP
#define PALDEF_FACTOR_INDEX_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "paldef/word.hpp"

namespace paldef {

enum class Side { left, right };

/// An unordered pair {v, reverse(v)} with v != reverse(v), where one of the
/// two is a complete return word of the witness palindrome. Stored with
/// v < v_reversed lexicographically; the recorded witness is the shortest.
struct Oddity {
    std::string v;
    std::string v_reversed;
    std::string witness;

    friend bool operator==(const Oddity&, const Oddity&) = default;
};

struct CompleteReturnWords {
    std::size_t occurrence_count = 0;
    std::vector<std::string> words; // sorted; empty when occurrence_count < 2
};

/// Registry of the distinct factors of a word for every length up to
/// n_max + 1, with sorted occurrence lists and extension sets per factor.
/// All queries are exact with respect to the finite word: the suffix factor
/// of each length has one occurrence with no right extension, the prefix
/// factor one with no left extension, and suffix_factor_unioccurrent /
/// prefix_factor_unioccurrent report when extension data is missing
/// entirely. Immutable once built.
class FactorIndex {
public:
    /// Requires n_max + 1 <= |w|.
    static FactorIndex build(const Word& w, std::size_t n_max);

    const Word& word() const { return word_; }
    std::string_view text() const { return *text_; }
    std::size_t n_max() const { return n_max_; }

    /// C(n) for n <= n_max + 1.
    std::size_t factor_complexity(std::size_t n) const;

    /// Distinct factors of length n, sorted. n <= n_max + 1.
    std::vector<std::string> factors(std::size_t n) const;

    /// Factors of length n with at least two extensions on the given side.
    /// n <= n_max.
    std::vector<std::string> special_factors(std::size_t n, Side side) const;
    bool is_special(std::string_view f, Side side) const;
    bool is_special_either(std::string_view f) const;

    /// Extension letters of f on a side, sorted. f must have length <= n_max.
    std::string extensions(std::string_view f, Side side) const;

    bool is_closed_under_reversal(std::size_t n) const;

    /// Occurrence positions of f; cached for |f| <= n_max + 1, direct scan
    /// otherwise. Empty when f does not occur.
    std::vector<std::size_t> occurrences(std::string_view f) const;

    CompleteReturnWords complete_return_words(std::string_view f) const;

    /// max_pal_len <= n_max.
    std::vector<Oddity> oddities(std::size_t max_pal_len) const;

    /// All halves w with |w| >= max(1, min_half) and ww a factor; sorted by
    /// (length, text). With primitive_only, non-primitive halves are dropped.
    std::vector<std::string> squares(std::size_t min_half, bool primitive_only = false) const;

    std::string_view prefix_factor(std::size_t n) const;
    std::string_view suffix_factor(std::size_t n) const;
    /// True when the length-n suffix factor occurs only at the boundary,
    /// i.e. it has no right extension in the word at all.
    bool suffix_factor_unioccurrent(std::size_t n) const;
    bool prefix_factor_unioccurrent(std::size_t n) const;

    /// Rows n,C,left_special,right_special,reversal_closed for n = 0..n_max.
    void write_complexity_csv(std::ostream& out) const;

private:
    FactorIndex() = default;

    struct Entry {
        std::string_view key;
        std::vector<std::uint32_t> occurrences;
        std::uint32_t left_mask = 0;
        std::uint32_t right_mask = 0;
    };
    struct Level {
        std::vector<Entry> entries;
        std::unordered_map<std::string_view, std::uint32_t> lookup;
    };

    const Entry* find(std::string_view f) const;
    std::size_t mask_bit(Letter g) const;

    Word word_;
    // stored views point into this shared buffer, which copies of the index share
    std::shared_ptr<const std::string> text_;
    std::size_t n_max_ = 0;
    std::vector<Level> levels_; // index by length, 1..n_max+1
};

/// JSON array of {v, v_reversed, witness} records.
std::string oddities_to_json(const std::vector<Oddity>& oddities);

} // namespace paldef

#endif
