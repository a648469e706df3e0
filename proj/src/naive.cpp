#include "paldef/naive.hpp"

#include <algorithm>

#include "paldef/word.hpp"

namespace paldef::naive {

std::set<std::string> distinct_palindromic_factors(std::string_view s) {
    std::set<std::string> out;
    const std::size_t n = s.size();
    auto expand = [&](std::size_t l, std::size_t r) {
        while (true) {
            if (s[l] != s[r]) break;
            out.emplace(s.substr(l, r - l + 1));
            if (l == 0 || r + 1 == n) break;
            --l;
            ++r;
        }
    };
    for (std::size_t c = 0; c < n; ++c) {
        expand(c, c);
        if (c + 1 < n) expand(c, c + 1);
    }
    return out;
}

long long defect(std::string_view s) {
    return static_cast<long long>(s.size()) + 1 -
           (static_cast<long long>(distinct_palindromic_factors(s).size()) + 1);
}

std::vector<long long> defect_profile(std::string_view s) {
    std::vector<long long> profile(s.size() + 1, 0);
    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        // palindromic suffixes of s[0..i)
        for (std::size_t j = 0; j < i; ++j) {
            std::string_view suffix = s.substr(j, i - j);
            if (is_palindrome(suffix)) seen.emplace(suffix);
        }
        profile[i] = static_cast<long long>(i) + 1 -
                     (static_cast<long long>(seen.size()) + 1);
    }
    return profile;
}

std::set<std::string> factors(std::string_view s, std::size_t n) {
    std::set<std::string> out;
    if (n > s.size()) return out;
    if (n == 0) return {std::string()};
    for (std::size_t i = 0; i + n <= s.size(); ++i) out.emplace(s.substr(i, n));
    return out;
}

std::vector<std::size_t> occurrences(std::string_view s, std::string_view f) {
    std::vector<std::size_t> out;
    if (f.empty()) {
        for (std::size_t i = 0; i <= s.size(); ++i) out.push_back(i);
        return out;
    }
    for (std::size_t i = s.find(f); i != std::string_view::npos; i = s.find(f, i + 1))
        out.push_back(i);
    return out;
}

std::vector<std::string> complete_return_words(std::string_view s, std::string_view f) {
    const auto occ = occurrences(s, f);
    std::set<std::string> out;
    for (std::size_t k = 0; k + 1 < occ.size(); ++k)
        out.emplace(s.substr(occ[k], occ[k + 1] + f.size() - occ[k]));
    return {out.begin(), out.end()};
}

std::set<std::string> squares(std::string_view s, std::size_t min_half) {
    std::set<std::string> out;
    const std::size_t lo = std::max<std::size_t>(1, min_half);
    for (std::size_t l = lo; 2 * l <= s.size(); ++l)
        for (std::size_t i = 0; i + 2 * l <= s.size(); ++i)
            if (s.substr(i, l) == s.substr(i + l, l)) out.emplace(s.substr(i, l));
    return out;
}

std::string longest_palindromic_suffix(std::string_view s) {
    for (std::size_t j = 0; j < s.size(); ++j)
        if (is_palindrome(s.substr(j))) return std::string(s.substr(j));
    return {};
}

std::size_t oddity_count(std::string_view s, std::size_t max_pal_len) {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const std::string& p : distinct_palindromic_factors(s)) {
        if (p.size() > max_pal_len) continue;
        for (const std::string& v : complete_return_words(s, p)) {
            if (is_palindrome(v)) continue;
            std::string r = reversed_text(v);
            pairs.emplace(std::min(v, r), std::max(v, r));
        }
    }
    return pairs.size();
}

} // namespace paldef::naive
