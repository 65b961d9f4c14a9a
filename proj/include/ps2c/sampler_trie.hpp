#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ps2c/discretizer.hpp"
#include "ps2c/pattern_index.hpp"
#include "ps2c/random.hpp"

namespace ps2c {

/// Prefix tree over accepted patterns whose edges carry the summed scaled
/// quality of every pattern routed through them.
///
/// Sampling walks from the root with roulette-wheel selection. A node where a
/// pattern terminates competes its own scaled quality (a terminal pseudo-edge)
/// against the outgoing edges, so each pattern is drawn with probability
/// w / sum(w) over all inserted patterns.
class SamplerTrie {
public:
    SamplerTrie(double tau, double s_min);

    double tau() const { return tau_; }
    double s_min() const { return s_min_; }
    std::size_t pattern_count() const { return pattern_count_; }
    bool empty() const { return pattern_count_ == 0; }
    /// Sum of the scaled weights of every inserted pattern.
    double total_weight() const { return nodes_.front().node_weight; }

    /// Inserts a pattern with its normalized quality. Throws InvalidArgument if
    /// q < s_min, q is not in (0, 1], the pattern is shorter than 2 symbols, or
    /// it was already inserted.
    void insert(std::string_view pattern, double normalized_q);

    /// Draws one pattern. Throws InvalidArgument on an empty trie.
    std::string sample(Rng& rng) const;

    /// Probability that sample() returns `pattern`, computed as the product of
    /// the roulette choices along its path. Throws if the pattern is absent.
    double path_probability(std::string_view pattern) const;

    /// Weight on the edge that ends at `prefix`, if that path exists.
    std::optional<double> edge_weight(std::string_view prefix) const;
    /// Scaled quality of `pattern` if it was inserted.
    std::optional<double> terminal_weight(std::string_view pattern) const;
    /// terminal weight + outgoing edge weights at the node for `prefix`.
    std::optional<double> node_weight(std::string_view prefix) const;

    /// Every inserted pattern with its scaled weight, in lexical order.
    std::vector<std::pair<std::string, double>> patterns() const;
    /// Every edge as (path prefix, weight), in lexical order.
    std::vector<std::pair<std::string, double>> edges() const;

    /// Indented text rendering: one line per edge with weights and terminal marks.
    void dump(std::ostream& out) const;

private:
    struct Node {
        char symbol = 0;
        double edge_weight = 0.0;  ///< weight of the edge from the parent
        double terminal_weight = 0.0;
        double node_weight = 0.0;
        std::vector<std::uint32_t> children;  ///< sorted by symbol
    };

    std::optional<std::uint32_t> locate(std::string_view path) const;
    std::optional<std::uint32_t> child(std::uint32_t node, char symbol) const;

    double tau_;
    double s_min_;
    std::size_t pattern_count_ = 0;
    std::vector<Node> nodes_;  ///< nodes_[0] is the root
};

/// Scores every distinct pattern of length 2..l_max in `index` and inserts
/// those with normalized chi-square >= s_min (and > 0). Patterns are visited
/// by length, then first occurrence. May return an empty trie.
SamplerTrie fit_sampler(const PatternIndex& index, std::span<const int> class_ids, std::size_t num_classes,
                        int l_max, double s_min, double tau);

}  // namespace ps2c
