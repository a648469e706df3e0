#include "paldef/lce.hpp"

#include <algorithm>
#include <numeric>

namespace paldef {

Lce::Lce(std::string_view text) : n_(text.size()) {
    const std::int32_t n = static_cast<std::int32_t>(n_);
    sa_.resize(n_);
    rank_.resize(n_);
    if (n_ == 0) return;

    std::iota(sa_.begin(), sa_.end(), 0);
    std::vector<std::int32_t> cls(n_), tmp(n_);
    for (std::int32_t i = 0; i < n; ++i) cls[i] = static_cast<unsigned char>(text[i]);
    for (std::int32_t len = 1;; len *= 2) {
        auto key = [&](std::int32_t i) {
            return std::pair<std::int32_t, std::int32_t>(
                cls[i], i + len < n ? cls[i + len] : -1);
        };
        std::sort(sa_.begin(), sa_.end(),
                  [&](std::int32_t a, std::int32_t b) { return key(a) < key(b); });
        tmp[sa_[0]] = 0;
        for (std::int32_t k = 1; k < n; ++k)
            tmp[sa_[k]] = tmp[sa_[k - 1]] + (key(sa_[k - 1]) < key(sa_[k]) ? 1 : 0);
        cls.swap(tmp);
        if (cls[sa_[n - 1]] == n - 1) break;
    }
    for (std::int32_t k = 0; k < n; ++k) rank_[sa_[k]] = k;

    // Kasai
    lcp_.assign(n_, 0);
    std::int32_t h = 0;
    for (std::int32_t i = 0; i < n; ++i) {
        if (rank_[i] == n - 1) {
            h = 0;
            continue;
        }
        const std::int32_t j = sa_[rank_[i] + 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp_[rank_[i]] = h;
        if (h > 0) --h;
    }

    log_.assign(n_ + 1, 0);
    for (std::size_t i = 2; i <= n_; ++i) log_[i] = log_[i / 2] + 1;
    const std::int32_t levels = log_[n_] + 1;
    table_.assign(levels, {});
    table_[0] = lcp_;
    for (std::int32_t lvl = 1; lvl < levels; ++lvl) {
        const std::int32_t span = 1 << lvl;
        table_[lvl].resize(n_ >= static_cast<std::size_t>(span) ? n_ - span + 1 : 0);
        for (std::size_t i = 0; i + span <= n_; ++i)
            table_[lvl][i] =
                std::min(table_[lvl - 1][i], table_[lvl - 1][i + span / 2]);
    }
}

std::size_t Lce::lce(std::size_t i, std::size_t j) const {
    if (i == j) return n_ - i;
    std::size_t a = rank_[i], b = rank_[j];
    if (a > b) std::swap(a, b);
    const std::int32_t lvl = log_[b - a];
    return static_cast<std::size_t>(
        std::min(table_[lvl][a], table_[lvl][b - (std::size_t(1) << lvl)]));
}

bool Lce::equal(std::size_t i, std::size_t j, std::size_t len) const {
    if (i + len > n_ || j + len > n_) return false;
    return i == j || lce(i, j) >= len;
}

} // namespace paldef
