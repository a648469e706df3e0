#include "paldef/factor_index.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <set>

#include <json.hpp>

#include "paldef/lce.hpp"

namespace paldef {

std::size_t FactorIndex::mask_bit(Letter g) const {
    auto idx = word_.alphabet().index_of(g);
    return idx ? *idx : 0;
}

FactorIndex FactorIndex::build(const Word& w, std::size_t n_max) {
    if (n_max + 1 > w.size())
        throw std::invalid_argument("factor index: n_max + 1 exceeds word length");
    if (w.alphabet().size() > 32)
        throw std::invalid_argument("factor index: alphabet larger than 32 letters");

    FactorIndex idx;
    idx.word_ = w;
    idx.text_ = std::make_shared<const std::string>(w.text());
    idx.n_max_ = n_max;
    idx.levels_.resize(n_max + 2);

    const std::string_view text = *idx.text_;
    const std::size_t L = text.size();
    for (std::size_t n = 1; n <= n_max + 1; ++n) {
        Level& level = idx.levels_[n];
        level.lookup.reserve(L - n + 1);
        for (std::size_t i = 0; i + n <= L; ++i) {
            const std::string_view key = text.substr(i, n);
            auto [it, inserted] = level.lookup.try_emplace(
                key, static_cast<std::uint32_t>(level.entries.size()));
            if (inserted) level.entries.push_back(Entry{key, {}, 0, 0});
            Entry& e = level.entries[it->second];
            e.occurrences.push_back(static_cast<std::uint32_t>(i));
            if (i > 0) e.left_mask |= 1u << idx.mask_bit(text[i - 1]);
            if (i + n < L) e.right_mask |= 1u << idx.mask_bit(text[i + n]);
        }
    }
    return idx;
}

std::size_t FactorIndex::factor_complexity(std::size_t n) const {
    if (n == 0) return 1;
    if (n > n_max_ + 1)
        throw std::out_of_range("factor_complexity: length above cap");
    return levels_[n].entries.size();
}

std::vector<std::string> FactorIndex::factors(std::size_t n) const {
    if (n == 0) return {std::string()};
    if (n > n_max_ + 1) throw std::out_of_range("factors: length above cap");
    std::vector<std::string> out;
    out.reserve(levels_[n].entries.size());
    for (const Entry& e : levels_[n].entries) out.emplace_back(e.key);
    std::sort(out.begin(), out.end());
    return out;
}

const FactorIndex::Entry* FactorIndex::find(std::string_view f) const {
    const std::size_t n = f.size();
    if (n == 0 || n > n_max_ + 1) return nullptr;
    auto it = levels_[n].lookup.find(f);
    return it == levels_[n].lookup.end() ? nullptr : &levels_[n].entries[it->second];
}

std::vector<std::string> FactorIndex::special_factors(std::size_t n, Side side) const {
    if (n > n_max_) throw std::out_of_range("special_factors: length above cap");
    std::vector<std::string> out;
    if (n == 0) {
        // the empty factor extends by every letter that occurs
        if (word_.alphabet().size() >= 2 && factor_complexity(1) >= 2)
            out.emplace_back();
        return out;
    }
    for (const Entry& e : levels_[n].entries) {
        const std::uint32_t mask = side == Side::right ? e.right_mask : e.left_mask;
        if (std::popcount(mask) >= 2) out.emplace_back(e.key);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool FactorIndex::is_special(std::string_view f, Side side) const {
    if (f.empty()) return factor_complexity(1) >= 2;
    const Entry* e = find(f);
    if (!e) return false;
    return std::popcount(side == Side::right ? e->right_mask : e->left_mask) >= 2;
}

bool FactorIndex::is_special_either(std::string_view f) const {
    return is_special(f, Side::left) || is_special(f, Side::right);
}

std::string FactorIndex::extensions(std::string_view f, Side side) const {
    std::string out;
    if (f.size() > n_max_ + 1) throw std::out_of_range("extensions: factor longer than cap");
    if (f.empty()) {
        for (const Entry& e : levels_[1].entries) out += e.key[0];
        std::sort(out.begin(), out.end());
        return out;
    }
    const Entry* e = find(f);
    if (!e) return out;
    const std::uint32_t mask = side == Side::right ? e->right_mask : e->left_mask;
    for (std::size_t b = 0; b < word_.alphabet().size(); ++b)
        if (mask & (1u << b)) out += word_.alphabet().glyph(b);
    return out;
}

bool FactorIndex::is_closed_under_reversal(std::size_t n) const {
    if (n > n_max_ + 1)
        throw std::out_of_range("is_closed_under_reversal: length above cap");
    if (n <= 1) return true;
    const Level& level = levels_[n];
    for (const Entry& e : level.entries)
        if (!level.lookup.contains(reversed_text(e.key))) return false;
    return true;
}

std::vector<std::size_t> FactorIndex::occurrences(std::string_view f) const {
    std::vector<std::size_t> out;
    if (f.empty()) {
        for (std::size_t i = 0; i <= word_.size(); ++i) out.push_back(i);
        return out;
    }
    if (f.size() <= n_max_ + 1) {
        if (const Entry* e = find(f))
            out.assign(e->occurrences.begin(), e->occurrences.end());
        return out;
    }
    const std::string_view text = *text_;
    for (std::size_t i = text.find(f); i != std::string_view::npos; i = text.find(f, i + 1))
        out.push_back(i);
    return out;
}

CompleteReturnWords FactorIndex::complete_return_words(std::string_view f) const {
    CompleteReturnWords out;
    const auto occ = occurrences(f);
    out.occurrence_count = occ.size();
    if (occ.size() < 2) return out;
    const std::string_view text = *text_;
    std::set<std::string_view> words;
    for (std::size_t k = 0; k + 1 < occ.size(); ++k)
        words.insert(text.substr(occ[k], occ[k + 1] + f.size() - occ[k]));
    out.words.assign(words.begin(), words.end());
    return out;
}

std::vector<Oddity> FactorIndex::oddities(std::size_t max_pal_len) const {
    if (max_pal_len > n_max_) throw std::out_of_range("oddities: cap above n_max");
    const std::string_view text = *text_;
    std::map<std::pair<std::string, std::string>, std::string> found;
    for (std::size_t n = 1; n <= max_pal_len; ++n) {
        for (const Entry& e : levels_[n].entries) {
            if (!is_palindrome(e.key) || e.occurrences.size() < 2) continue;
            for (std::size_t k = 0; k + 1 < e.occurrences.size(); ++k) {
                const std::string_view v =
                    text.substr(e.occurrences[k], e.occurrences[k + 1] + n - e.occurrences[k]);
                if (is_palindrome(v)) continue;
                std::string a(v), b = reversed_text(v);
                if (b < a) std::swap(a, b);
                // palindrome lengths ascend, so the first witness is the shortest
                found.try_emplace({std::move(a), std::move(b)}, std::string(e.key));
            }
        }
    }
    std::vector<Oddity> out;
    out.reserve(found.size());
    for (auto& [pair, witness] : found)
        out.push_back(Oddity{pair.first, pair.second, witness});
    return out;
}

std::vector<std::string> FactorIndex::squares(std::size_t min_half, bool primitive_only) const {
    const std::string_view text = *text_;
    const std::size_t L = text.size();
    std::vector<std::string> out;
    const Lce lce(text);
    const std::size_t lo = std::max<std::size_t>(1, min_half);
    std::vector<std::uint32_t> hits;
    for (std::size_t half = lo; 2 * half <= L; ++half) {
        hits.clear();
        for (std::size_t i = 0; i + 2 * half <= L; ++i)
            if (lce.lce(i, i + half) >= half) hits.push_back(static_cast<std::uint32_t>(i));
        if (hits.empty()) continue;
        // distinct halves: equal substrings are adjacent in suffix-rank order
        std::sort(hits.begin(), hits.end(), [&](std::uint32_t a, std::uint32_t b) {
            return lce.rank(a) < lce.rank(b);
        });
        for (std::size_t k = 0; k < hits.size(); ++k) {
            if (k > 0 && lce.lce(hits[k - 1], hits[k]) >= half) continue;
            const std::string_view w = text.substr(hits[k], half);
            if (primitive_only && !is_primitive(w)) continue;
            out.emplace_back(w);
        }
    }
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::string_view FactorIndex::prefix_factor(std::size_t n) const {
    if (n == 0 || n > n_max_ + 1) throw std::out_of_range("prefix_factor: bad length");
    return std::string_view(*text_).substr(0, n);
}

std::string_view FactorIndex::suffix_factor(std::size_t n) const {
    if (n == 0 || n > n_max_ + 1) throw std::out_of_range("suffix_factor: bad length");
    return std::string_view(*text_).substr(word_.size() - n, n);
}

bool FactorIndex::suffix_factor_unioccurrent(std::size_t n) const {
    return find(suffix_factor(n))->occurrences.size() == 1;
}

bool FactorIndex::prefix_factor_unioccurrent(std::size_t n) const {
    return find(prefix_factor(n))->occurrences.size() == 1;
}

void FactorIndex::write_complexity_csv(std::ostream& out) const {
    out << "n,C,left_special,right_special,reversal_closed\n";
    for (std::size_t n = 0; n <= n_max_; ++n)
        out << n << ',' << factor_complexity(n) << ','
            << special_factors(n, Side::left).size() << ','
            << special_factors(n, Side::right).size() << ','
            << (is_closed_under_reversal(n) ? 1 : 0) << '\n';
}

std::string oddities_to_json(const std::vector<Oddity>& oddities) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Oddity& o : oddities) {
        nlohmann::ordered_json rec;
        rec["v"] = o.v;
        rec["v_reversed"] = o.v_reversed;
        rec["witness"] = o.witness;
        arr.push_back(std::move(rec));
    }
    return arr.dump(2);
}

} // namespace paldef
