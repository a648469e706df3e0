#ifndef PALDEF_PAL_INDEX_HPP
#define PALDEF_PAL_INDEX_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "paldef/word.hpp"

namespace paldef {

/// Index of all distinct palindromic factors of a word, built by one-letter
/// extensions (an eertree with suffix links). For every prefix u^(i) it keeps
/// the longest palindromic suffix, whether that palindrome first occurs
/// ending at i, and the running defect
///
///     D(u^(i)) = i + 1 - #distinct palindromic factors of u^(i)
///
/// which increases by one exactly at positions whose longest palindromic
/// suffix already occurred earlier. Immutable once built; queries are
/// safe to run concurrently.
class PalIndex {
public:
    static PalIndex build(const Word& w);

    const Word& word() const { return word_; }
    std::size_t word_length() const { return word_.size(); }

    /// D(u^(i)) for 0 <= i <= |w|; non-decreasing, steps of 0 or 1.
    const std::vector<std::uint32_t>& defect_profile() const { return defect_; }
    long long defect_at(std::size_t i) const;
    long long defect() const { return defect_.back(); }

    /// Number of distinct palindromic factors of length n; P(0) = 1.
    std::size_t palindromic_complexity(std::size_t n) const;
    /// Counts per length, index 0 holds the empty word.
    const std::vector<std::uint32_t>& complexity_histogram() const { return by_length_; }
    /// Distinct palindromic factors including the empty word.
    std::size_t distinct_palindromes() const { return node_count_ + 1; }
    std::size_t max_palindrome_length() const;

    std::size_t lps_length(std::size_t i) const;
    Word longest_palindromic_suffix(std::size_t i) const;

    /// new(i): the longest palindromic suffix of u^(i) first ends at i
    /// (equivalently, it is unioccurrent in u^(i)).
    bool is_new_palindrome_at(std::size_t i) const;

    /// Positions i >= 1 with D(u^(i)) = D(u^(i-1)) + 1.
    std::vector<std::size_t> defective_positions() const;

    /// Calls f(start, length) once per distinct nonempty palindromic factor,
    /// shortest first within equal first occurrence order.
    void for_each_palindrome(const std::function<void(std::size_t, std::size_t)>& f) const;

    /// Rows i,defect,lps_length,new for i = 0..|w|.
    void write_defect_csv(std::ostream& out) const;

private:
    PalIndex() = default;

    struct Node {
        std::int32_t length = 0;
        std::int32_t link = 0;
        std::uint32_t first_end = 0; // prefix length at which the palindrome first ends
        std::vector<std::pair<Letter, std::int32_t>> next;
    };

    std::int32_t transition(std::int32_t node, Letter c) const;

    Word word_;
    std::vector<Node> nodes_;
    std::size_t node_count_ = 0; // nonempty palindromes
    std::vector<std::uint32_t> defect_;
    std::vector<std::int32_t> lps_node_;
    std::vector<std::uint8_t> new_at_;
    std::vector<std::uint32_t> by_length_;
};

/// |w| + 1 minus the number of distinct palindromic factors of w (empty word
/// included); equals the last entry of the defect profile.
long long defect(const Word& w);

} // namespace paldef

#endif
