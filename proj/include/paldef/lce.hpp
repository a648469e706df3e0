#ifndef PALDEF_LCE_HPP
#define PALDEF_LCE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace paldef {

/// Suffix array + LCP with a sparse table, answering longest-common-extension
/// queries between two suffixes in O(1). Construction is O(n log^2 n).
class Lce {
public:
    explicit Lce(std::string_view text);

    std::size_t size() const { return n_; }
    std::size_t lce(std::size_t i, std::size_t j) const;
    /// Rank of suffix i in lexicographic suffix order.
    std::size_t rank(std::size_t i) const { return static_cast<std::size_t>(rank_[i]); }
    bool equal(std::size_t i, std::size_t j, std::size_t len) const;

private:
    std::size_t n_;
    std::vector<std::int32_t> sa_, rank_, lcp_;
    std::vector<std::vector<std::int32_t>> table_;
    std::vector<std::int32_t> log_;
};

} // namespace paldef

#endif
