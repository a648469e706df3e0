#include "paldef/pal_index.hpp"

#include <ostream>

namespace paldef {

std::int32_t PalIndex::transition(std::int32_t node, Letter c) const {
    for (const auto& [g, to] : nodes_[node].next)
        if (g == c) return to;
    return -1;
}

PalIndex PalIndex::build(const Word& w) {
    PalIndex idx;
    idx.word_ = w;
    const std::string& s = w.text();
    const std::size_t L = s.size();

    idx.nodes_.reserve(L + 2);
    idx.nodes_.push_back(Node{-1, 0, 0, {}}); // node 0: imaginary root
    idx.nodes_.push_back(Node{0, 0, 0, {}});  // node 1: empty palindrome

    idx.defect_.assign(L + 1, 0);
    idx.lps_node_.assign(L + 1, 1);
    idx.new_at_.assign(L + 1, 0);

    std::int32_t last = 1;
    for (std::size_t i = 0; i < L; ++i) {
        const Letter c = s[i];
        // longest palindromic suffix of u^(i) extendable by c
        std::int32_t cur = last;
        while (true) {
            const auto len = idx.nodes_[cur].length;
            if (static_cast<std::int64_t>(i) - len - 1 >= 0 && s[i - len - 1] == c) break;
            cur = idx.nodes_[cur].link;
        }
        std::int32_t to = idx.transition(cur, c);
        bool created = false;
        if (to < 0) {
            created = true;
            Node node;
            node.length = idx.nodes_[cur].length + 2;
            node.first_end = static_cast<std::uint32_t>(i + 1);
            if (node.length == 1) {
                node.link = 1;
            } else {
                std::int32_t t = idx.nodes_[cur].link;
                while (true) {
                    const auto len = idx.nodes_[t].length;
                    if (static_cast<std::int64_t>(i) - len - 1 >= 0 && s[i - len - 1] == c) break;
                    t = idx.nodes_[t].link;
                }
                node.link = idx.transition(t, c);
            }
            idx.nodes_.push_back(std::move(node));
            to = static_cast<std::int32_t>(idx.nodes_.size() - 1);
            idx.nodes_[cur].next.emplace_back(c, to);
            ++idx.node_count_;
        }
        last = to;
        idx.lps_node_[i + 1] = last;
        idx.new_at_[i + 1] = created ? 1 : 0;
        idx.defect_[i + 1] = idx.defect_[i] + (created ? 0 : 1);
    }

    std::size_t max_len = 0;
    for (std::size_t k = 2; k < idx.nodes_.size(); ++k)
        max_len = std::max(max_len, static_cast<std::size_t>(idx.nodes_[k].length));
    idx.by_length_.assign(max_len + 1, 0);
    idx.by_length_[0] = 1;
    for (std::size_t k = 2; k < idx.nodes_.size(); ++k)
        ++idx.by_length_[static_cast<std::size_t>(idx.nodes_[k].length)];
    return idx;
}

long long PalIndex::defect_at(std::size_t i) const {
    if (i >= defect_.size()) throw std::out_of_range("defect_at: position out of range");
    return defect_[i];
}

std::size_t PalIndex::palindromic_complexity(std::size_t n) const {
    if (n >= by_length_.size()) return 0;
    return by_length_[n];
}

std::size_t PalIndex::max_palindrome_length() const { return by_length_.size() - 1; }

std::size_t PalIndex::lps_length(std::size_t i) const {
    if (i >= lps_node_.size()) throw std::out_of_range("lps_length: position out of range");
    return static_cast<std::size_t>(nodes_[lps_node_[i]].length);
}

Word PalIndex::longest_palindromic_suffix(std::size_t i) const {
    const std::size_t len = lps_length(i);
    return word_.subword(i - len, len);
}

bool PalIndex::is_new_palindrome_at(std::size_t i) const {
    if (i == 0 || i >= new_at_.size())
        throw std::out_of_range("is_new_palindrome_at: position out of range");
    return new_at_[i] != 0;
}

std::vector<std::size_t> PalIndex::defective_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < defect_.size(); ++i)
        if (defect_[i] == defect_[i - 1] + 1) out.push_back(i);
    return out;
}

void PalIndex::for_each_palindrome(
    const std::function<void(std::size_t, std::size_t)>& f) const {
    for (std::size_t k = 2; k < nodes_.size(); ++k) {
        const auto len = static_cast<std::size_t>(nodes_[k].length);
        f(nodes_[k].first_end - len, len);
    }
}

void PalIndex::write_defect_csv(std::ostream& out) const {
    out << "i,defect,lps_length,new\n";
    out << "0,0,0,1\n";
    for (std::size_t i = 1; i < defect_.size(); ++i)
        out << i << ',' << defect_[i] << ',' << lps_length(i) << ','
            << (new_at_[i] ? 1 : 0) << '\n';
}

long long defect(const Word& w) { return PalIndex::build(w).defect(); }

} // namespace paldef
