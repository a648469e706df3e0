#include "paldef/simple_path_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <json.hpp>

namespace paldef {

namespace {

std::string canonical_class(std::string_view w) {
    std::string r = reversed_text(w);
    std::string s(w);
    return s <= r ? s : r;
}

} // namespace

PathEnumeration enumerate_simple_paths(const FactorIndex& idx, std::size_t n,
                                       std::optional<std::size_t> margin) {
    if (n > idx.n_max())
        throw std::out_of_range("enumerate_simple_paths: n above factor index cap");
    const std::size_t max_len = margin.value_or(n + idx.n_max());

    PathEnumeration out;

    // special factors of length n, both sides, deduplicated
    std::set<std::string> specials;
    for (auto& f : idx.special_factors(n, Side::left)) specials.insert(f);
    for (auto& f : idx.special_factors(n, Side::right)) specials.insert(f);

    const std::string_view text = idx.text();
    std::set<std::string> seen; // canonical words, for reversal dedup
    for (const std::string& start : specials) {
        const std::string exts = idx.extensions(start, Side::right);
        for (Letter a : exts) {
            std::string e = start;
            e += a;
            bool ok = true;
            while (true) {
                const std::string_view window = std::string_view(e).substr(e.size() - n, n);
                if (idx.is_special_either(window)) break;
                const std::string next = idx.extensions(window, Side::right);
                if (next.empty()) {
                    out.dead_end = true;
                    out.notes.push_back("dead end after '" + e + "'");
                    ok = false;
                    break;
                }
                if (e.size() >= max_len) {
                    out.margin_exceeded = true;
                    out.notes.push_back("margin " + std::to_string(max_len) +
                                        " exceeded from '" + start + "'");
                    ok = false;
                    break;
                }
                e += next[0]; // non-special: the right extension is unique
            }
            if (!ok) continue;
            if (text.find(e) == std::string_view::npos) {
                // every step is a factor, but the composed word may only be
                // realized past the end of the prefix
                out.occurrence_check_failed = true;
                out.notes.push_back("path word '" + e + "' not realized in the prefix");
                continue;
            }
            std::string canon = canonical_class(e);
            if (seen.insert(std::move(canon)).second)
                out.paths.push_back(SimplePath{std::move(e), n});
        }
    }
    std::sort(out.paths.begin(), out.paths.end(),
              [](const SimplePath& a, const SimplePath& b) { return a.word < b.word; });
    return out;
}

SimplePathGraph SimplePathGraph::build(const FactorIndex& idx, std::size_t n,
                                       std::optional<std::size_t> margin) {
    SimplePathGraph g;
    g.n_ = n;
    g.closed_at_n_ = idx.is_closed_under_reversal(n);
    g.closed_at_n1_ = idx.is_closed_under_reversal(n + 1);
    if (!g.closed_at_n_)
        g.warnings_.push_back("language not closed under reversal at length " +
                              std::to_string(n));
    if (!g.closed_at_n1_)
        g.warnings_.push_back("language not closed under reversal at length " +
                              std::to_string(n + 1));
    if (n >= 1 && idx.suffix_factor_unioccurrent(n)) {
        g.indeterminate_ = true;
        g.warnings_.push_back("suffix factor of length " + std::to_string(n) +
                              " occurs only at the boundary; right extensions unknown");
    }
    if (n >= 1 && idx.prefix_factor_unioccurrent(n)) {
        g.indeterminate_ = true;
        g.warnings_.push_back("prefix factor of length " + std::to_string(n) +
                              " occurs only at the boundary; left extensions unknown");
    }

    std::set<std::string> classes;
    for (auto& f : idx.special_factors(n, Side::left)) classes.insert(canonical_class(f));
    for (auto& f : idx.special_factors(n, Side::right)) classes.insert(canonical_class(f));
    g.vertices_.assign(classes.begin(), classes.end());

    auto vertex_id = [&](std::string_view w) {
        const std::string canon = canonical_class(w);
        const auto it = std::lower_bound(g.vertices_.begin(), g.vertices_.end(), canon);
        return static_cast<std::uint32_t>(it - g.vertices_.begin());
    };

    PathEnumeration paths = enumerate_simple_paths(idx, n, margin);
    if (!paths.clean()) g.indeterminate_ = true;
    for (auto& note : paths.notes) g.warnings_.push_back(note);
    for (const SimplePath& p : paths.paths) {
        Edge e;
        e.from = vertex_id(p.start());
        e.to = vertex_id(p.end());
        if (e.to < e.from) std::swap(e.from, e.to);
        e.word = p.word;
        e.loop = e.from == e.to;
        e.palindrome = p.palindrome();
        g.edges_.push_back(std::move(e));
    }
    return g;
}

SimplePathGraph SimplePathGraph::from_parts(std::size_t n, std::vector<std::string> vertices,
                                            std::vector<Edge> edges) {
    SimplePathGraph g;
    g.n_ = n;
    if (!std::is_sorted(vertices.begin(), vertices.end()))
        throw std::invalid_argument("from_parts: vertices must be sorted");
    for (const Edge& e : edges)
        if (e.from >= vertices.size() || e.to >= vertices.size())
            throw std::invalid_argument("from_parts: edge endpoint out of range");
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    return g;
}

GraphZeroTest graph_zero_test(const SimplePathGraph& g) {
    GraphZeroTest r;
    r.indeterminate = g.indeterminate();
    if (g.vertices().empty()) {
        r.zero = true;
        r.diagnosis = "empty graph: no special factors of this length";
        return r;
    }

    // union-find over non-loop edges
    std::vector<std::uint32_t> parent(g.vertices().size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> root = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) {
        if (e.loop) continue;
        const auto ra = root(e.from), rb = root(e.to);
        if (ra == rb) {
            r.zero = false;
            r.diagnosis = "cycle after loop removal through edge '" + e.word + "'";
            return r;
        }
        parent[ra] = rb;
    }
    std::size_t components = 0;
    for (std::uint32_t v = 0; v < parent.size(); ++v)
        if (root(v) == v) ++components;
    if (components != 1) {
        r.zero = false;
        r.diagnosis = "graph with loops removed is disconnected (" +
                      std::to_string(components) + " components)";
        return r;
    }
    for (const auto& e : g.edges()) {
        if (e.loop && !e.palindrome) {
            r.zero = false;
            r.diagnosis = "non-palindromic loop '" + e.word + "'";
            return r;
        }
    }
    r.zero = true;
    r.diagnosis = "tree after loop removal; all loops palindromic";
    return r;
}

std::string to_dot(const SimplePathGraph& g) {
    const GraphZeroTest zt = graph_zero_test(g);
    std::string out;
    out += "// n = " + std::to_string(g.n()) + "\n";
    out += std::string("// zero-test: ") + (zt.zero ? "true" : "false") + " (" +
           zt.diagnosis + ")\n";
    if (zt.indeterminate) out += "// warning: result indeterminate on this prefix\n";
    for (const auto& w : g.warnings()) out += "// warning: " + w + "\n";
    out += "graph G {\n";
    for (const auto& v : g.vertices()) out += "  \"" + v + "\";\n";
    for (const auto& e : g.edges()) {
        out += "  \"" + g.vertices()[e.from] + "\" -- \"" + g.vertices()[e.to] +
               "\" [label=\"" + e.word + "\"";
        if (e.loop) out += std::string(" palindrome=") + (e.palindrome ? "true" : "false");
        out += "];\n";
    }
    out += "}\n";
    return out;
}

std::string graph_to_json(const SimplePathGraph& g) {
    const GraphZeroTest zt = graph_zero_test(g);
    nlohmann::ordered_json j;
    j["n"] = g.n();
    j["vertices"] = g.vertices();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
        nlohmann::ordered_json rec;
        rec["from"] = g.vertices()[e.from];
        rec["to"] = g.vertices()[e.to];
        rec["word"] = e.word;
        rec["loop"] = e.loop;
        rec["palindrome"] = e.palindrome;
        edges.push_back(std::move(rec));
    }
    j["edges"] = std::move(edges);
    j["closed_at_n"] = g.closed_at_n();
    j["closed_at_n1"] = g.closed_at_n1();
    j["indeterminate"] = g.indeterminate();
    j["warnings"] = g.warnings();
    j["zero_test"] = nlohmann::ordered_json{
        {"zero", zt.zero}, {"indeterminate", zt.indeterminate}, {"diagnosis", zt.diagnosis}};
    return j.dump(2);
}

} // namespace paldef
