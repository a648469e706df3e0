#ifndef PALDEF_T_SERIES_HPP
#define PALDEF_T_SERIES_HPP

#include <optional>
#include <vector>

#include "paldef/factor_index.hpp"
#include "paldef/pal_index.hpp"

namespace paldef {

/// T(n) = C(n+1) - C(n) + 2 - P(n+1) - P(n) for 0 <= n <= n_max.
/// Negative entries certify that the language is not closed under reversal;
/// they are reported, never clamped.
struct TSeries {
    struct Negative {
        std::size_t n;
        bool closed_at_n;
        bool closed_at_n1;
    };

    std::vector<long long> values;
    /// Smallest N with T(n) = 0 for all N <= n <= n_max; absent when
    /// T(n_max) != 0.
    std::optional<std::size_t> tail_zero_from;
    std::vector<Negative> negatives;

    long long sum() const;
    std::size_t n_max() const { return values.size() - 1; }
};

/// Both indices must be built on the same word and cover n_max + 1.
TSeries t_series(const FactorIndex& fidx, const PalIndex& pidx, std::size_t n_max);

/// Factor complexity C(0..max_len) of `text` computed in one streaming pass
/// per length; O(#distinct factors) memory per length, no occurrence lists.
std::vector<std::size_t> factor_count_profile(std::string_view text, std::size_t max_len);

/// Palindromic complexity P(0..max_len) of `text`.
std::vector<std::size_t> palindrome_count_profile(std::string_view text, std::size_t max_len);

TSeries t_series_from_profiles(const std::vector<std::size_t>& c_profile,
                               const std::vector<std::size_t>& p_profile,
                               std::size_t n_max);

} // namespace paldef

#endif
