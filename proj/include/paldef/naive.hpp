#ifndef PALDEF_NAIVE_HPP
#define PALDEF_NAIVE_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace paldef::naive {

// Reference implementations by direct enumeration. Deliberately independent
// of the index structures so they can serve as oracles.

/// All distinct nonempty palindromic factors (center expansion).
std::set<std::string> distinct_palindromic_factors(std::string_view s);

/// |s| + 1 - (#distinct palindromic factors including the empty word).
long long defect(std::string_view s);

/// Defect of every prefix, index 0..|s|.
std::vector<long long> defect_profile(std::string_view s);

std::set<std::string> factors(std::string_view s, std::size_t n);

std::vector<std::size_t> occurrences(std::string_view s, std::string_view f);

std::vector<std::string> complete_return_words(std::string_view s, std::string_view f);

/// Halves w with |w| >= min_half and ww a factor of s.
std::set<std::string> squares(std::string_view s, std::size_t min_half);

std::string longest_palindromic_suffix(std::string_view s);

/// Unordered pairs {v, reverse(v)}, v non-palindromic, v a complete return
/// word of some palindromic factor of length <= max_pal_len.
std::size_t oddity_count(std::string_view s, std::size_t max_pal_len);

} // namespace paldef::naive

#endif
