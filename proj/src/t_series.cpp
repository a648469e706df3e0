#include "paldef/t_series.hpp"

#include <numeric>
#include <unordered_map>

namespace paldef {

long long TSeries::sum() const {
    return std::accumulate(values.begin(), values.end(), 0ll);
}

namespace {

void finish(TSeries& t) {
    const std::size_t count = t.values.size();
    std::size_t tail = count;
    while (tail > 0 && t.values[tail - 1] == 0) --tail;
    if (tail < count) t.tail_zero_from = tail;
}

} // namespace

TSeries t_series(const FactorIndex& fidx, const PalIndex& pidx, std::size_t n_max) {
    if (fidx.word() != pidx.word())
        throw std::invalid_argument("t_series: indices built on different words");
    if (n_max > fidx.n_max())
        throw std::out_of_range("t_series: n_max above factor index cap");

    TSeries t;
    t.values.resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const long long c1 = static_cast<long long>(fidx.factor_complexity(n + 1));
        const long long c0 = static_cast<long long>(fidx.factor_complexity(n));
        const long long p1 = static_cast<long long>(pidx.palindromic_complexity(n + 1));
        const long long p0 = static_cast<long long>(pidx.palindromic_complexity(n));
        t.values[n] = c1 - c0 + 2 - p1 - p0;
        if (t.values[n] < 0)
            t.negatives.push_back(TSeries::Negative{
                n, fidx.is_closed_under_reversal(n), fidx.is_closed_under_reversal(n + 1)});
    }
    finish(t);
    return t;
}

std::vector<std::size_t> factor_count_profile(std::string_view text, std::size_t max_len) {
    std::vector<std::size_t> counts(max_len + 1, 0);
    counts[0] = 1;
    const std::size_t L = text.size();
    // rolling hash buckets; entries inside a bucket are compared directly
    constexpr std::uint64_t kBase = 1000003937ull;
    std::vector<std::uint64_t> pow(L + 1, 1), pref(L + 1, 0);
    for (std::size_t i = 0; i < L; ++i) {
        pow[i + 1] = pow[i] * kBase;
        pref[i + 1] = pref[i] * kBase + static_cast<unsigned char>(text[i]);
    }
    auto window_hash = [&](std::size_t i, std::size_t n) {
        return pref[i + n] - pref[i] * pow[n];
    };
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    for (std::size_t n = 1; n <= max_len; ++n) {
        if (n > L) break;
        buckets.clear();
        std::size_t distinct = 0;
        for (std::size_t i = 0; i + n <= L; ++i) {
            auto& reps = buckets[window_hash(i, n)];
            bool fresh = true;
            for (std::uint32_t r : reps)
                if (text.compare(r, n, text, i, n) == 0) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                reps.push_back(static_cast<std::uint32_t>(i));
                ++distinct;
            }
        }
        counts[n] = distinct;
    }
    return counts;
}

std::vector<std::size_t> palindrome_count_profile(std::string_view text, std::size_t max_len) {
    const PalIndex idx = PalIndex::build(Word::parse(text));
    std::vector<std::size_t> counts(max_len + 1, 0);
    for (std::size_t n = 0; n <= max_len; ++n) counts[n] = idx.palindromic_complexity(n);
    return counts;
}

TSeries t_series_from_profiles(const std::vector<std::size_t>& c_profile,
                               const std::vector<std::size_t>& p_profile,
                               std::size_t n_max) {
    if (c_profile.size() < n_max + 2 || p_profile.size() < n_max + 2)
        throw std::invalid_argument("t_series_from_profiles: profiles too short");
    TSeries t;
    t.values.resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        t.values[n] = static_cast<long long>(c_profile[n + 1]) -
                      static_cast<long long>(c_profile[n]) + 2 -
                      static_cast<long long>(p_profile[n + 1]) -
                      static_cast<long long>(p_profile[n]);
    finish(t);
    return t;
}

} // namespace paldef
