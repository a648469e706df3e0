#ifndef PALDEF_SIMPLE_PATH_GRAPH_HPP
#define PALDEF_SIMPLE_PATH_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paldef/factor_index.hpp"

namespace paldef {

/// A factor of length >= n + 1 whose only left- or right-special length-n
/// windows are its length-n prefix and suffix.
struct SimplePath {
    std::string word;
    std::size_t n = 0;

    std::string_view start() const { return std::string_view(word).substr(0, n); }
    std::string_view end() const { return std::string_view(word).substr(word.size() - n, n); }
    bool palindrome() const { return is_palindrome(word); }
};

/// Result of walking the factor graph between special factors. Paths are
/// deduplicated up to reversal. The flags downgrade the enumeration to
/// "indeterminate" instead of guessing past what the finite prefix shows.
struct PathEnumeration {
    std::vector<SimplePath> paths;
    bool margin_exceeded = false;      // a walk ran past the length margin
    bool dead_end = false;             // a walk hit a factor with no known right extension
    bool occurrence_check_failed = false; // a composed path word does not occur in the prefix
    std::vector<std::string> notes;

    bool clean() const { return !margin_exceeded && !dead_end && !occurrence_check_failed; }
};

/// Walks start at every special length-n factor and follow unique right
/// extensions until the next special factor. margin caps the path length.
PathEnumeration enumerate_simple_paths(const FactorIndex& idx, std::size_t n,
                                       std::optional<std::size_t> margin = std::nullopt);

/// The undirected multigraph G_n: vertices are reversal classes {w, w~} of
/// special length-n factors, edges are reversal classes of n-simple paths.
class SimplePathGraph {
public:
    struct Edge {
        std::uint32_t from = 0;
        std::uint32_t to = 0;
        std::string word;
        bool loop = false;
        bool palindrome = false;
    };

    static SimplePathGraph build(const FactorIndex& idx, std::size_t n,
                                 std::optional<std::size_t> margin = std::nullopt);

    /// Assemble a graph from externally supplied parts (synthetic inputs,
    /// deserialized exports). Vertices must be sorted; edge indices in range.
    static SimplePathGraph from_parts(std::size_t n, std::vector<std::string> vertices,
                                      std::vector<Edge> edges);

    std::size_t n() const { return n_; }
    /// Canonical class representatives (lexicographically smaller of w, w~), sorted.
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool closed_at_n() const { return closed_at_n_; }
    bool closed_at_n1() const { return closed_at_n1_; }
    /// True when boundary effects or enumeration limits make the structure
    /// uncertain; the graph is still reported as built from the prefix.
    bool indeterminate() const { return indeterminate_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::size_t n_ = 0;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    bool closed_at_n_ = true;
    bool closed_at_n1_ = true;
    bool indeterminate_ = false;
    std::vector<std::string> warnings_;
};

/// T(n) = 0 characterization: the graph with loops removed is a tree and
/// every loop word is a palindrome. The empty graph passes (periodic case).
struct GraphZeroTest {
    bool zero = false;
    bool indeterminate = false;
    std::string diagnosis;
};

GraphZeroTest graph_zero_test(const SimplePathGraph& g);

std::string to_dot(const SimplePathGraph& g);
std::string graph_to_json(const SimplePathGraph& g);

} // namespace paldef

#endif
