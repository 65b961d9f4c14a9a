#include "ps2c/sampler_trie.hpp"

#include <algorithm>
#include <ostream>

#include "ps2c/errors.hpp"
#include "ps2c/quality.hpp"

namespace ps2c {

SamplerTrie::SamplerTrie(double tau, double s_min) : tau_(tau), s_min_(s_min), nodes_(1) {
    if (!(tau > 0.0)) throw InvalidArgument("temperature must be > 0");
}

std::optional<std::uint32_t> SamplerTrie::child(std::uint32_t node, char symbol) const {
    const auto& kids = nodes_[node].children;
    const auto it = std::lower_bound(kids.begin(), kids.end(), symbol,
                                     [&](std::uint32_t id, char s) { return nodes_[id].symbol < s; });
    if (it == kids.end() || nodes_[*it].symbol != symbol) return std::nullopt;
    return *it;
}

std::optional<std::uint32_t> SamplerTrie::locate(std::string_view path) const {
    std::uint32_t node = 0;
    for (char c : path) {
        const auto next = child(node, c);
        if (!next) return std::nullopt;
        node = *next;
    }
    return node;
}

void SamplerTrie::insert(std::string_view pattern, double normalized_q) {
    if (pattern.size() < 2) throw InvalidArgument("patterns must have at least 2 symbols");
    if (!(normalized_q > 0.0 && normalized_q <= 1.0)) throw InvalidArgument("normalized quality must lie in (0, 1]");
    if (normalized_q < s_min_) throw InvalidArgument("normalized quality is below s_min");
    if (const auto existing = locate(pattern); existing && nodes_[*existing].terminal_weight > 0.0) {
        throw InvalidArgument("pattern '" + std::string(pattern) + "' inserted twice");
    }

    const double w = scale_quality(normalized_q, tau_);
    if (!(w > 0.0)) throw InvalidArgument("scaled weight underflows to zero; raise tau");
    std::uint32_t node = 0;
    for (char c : pattern) {
        nodes_[node].node_weight += w;
        auto next = child(node, c);
        if (!next) {
            const auto id = static_cast<std::uint32_t>(nodes_.size());
            nodes_.push_back(Node{c, 0.0, 0.0, 0.0, {}});
            auto& kids = nodes_[node].children;
            kids.insert(std::upper_bound(kids.begin(), kids.end(), c,
                                         [&](char s, std::uint32_t other) { return s < nodes_[other].symbol; }),
                        id);
            next = id;
        }
        node = *next;
        nodes_[node].edge_weight += w;
    }
    nodes_[node].terminal_weight = w;
    nodes_[node].node_weight += w;
    ++pattern_count_;
}

std::string SamplerTrie::sample(Rng& rng) const {
    if (empty()) throw InvalidArgument("cannot sample from an empty trie");
    std::string out;
    std::uint32_t node = 0;
    while (true) {
        const Node& n = nodes_[node];
        if (n.children.empty()) return out;

        double total = n.terminal_weight;
        for (auto id : n.children) total += nodes_[id].edge_weight;
        double r = rng.uniform() * total;

        if (n.terminal_weight > 0.0) {
            if (r < n.terminal_weight) return out;
            r -= n.terminal_weight;
        }
        // Rounding can leave r at or just past the last boundary; the final
        // edge absorbs it.
        std::uint32_t chosen = n.children.back();
        for (auto id : n.children) {
            if (r < nodes_[id].edge_weight) {
                chosen = id;
                break;
            }
            r -= nodes_[id].edge_weight;
        }
        out.push_back(nodes_[chosen].symbol);
        node = chosen;
    }
}

double SamplerTrie::path_probability(std::string_view pattern) const {
    const auto target = locate(pattern);
    if (!target || nodes_[*target].terminal_weight <= 0.0) {
        throw InvalidArgument("pattern '" + std::string(pattern) + "' is not in the trie");
    }
    double p = 1.0;
    std::uint32_t node = 0;
    for (char c : pattern) {
        const Node& n = nodes_[node];
        double total = n.terminal_weight;
        for (auto id : n.children) total += nodes_[id].edge_weight;
        node = *child(node, c);
        p *= nodes_[node].edge_weight / total;
    }
    const Node& last = nodes_[node];
    if (!last.children.empty()) {
        double total = last.terminal_weight;
        for (auto id : last.children) total += nodes_[id].edge_weight;
        p *= last.terminal_weight / total;
    }
    return p;
}

std::optional<double> SamplerTrie::edge_weight(std::string_view prefix) const {
    if (prefix.empty()) return std::nullopt;
    const auto node = locate(prefix);
    if (!node) return std::nullopt;
    return nodes_[*node].edge_weight;
}

std::optional<double> SamplerTrie::terminal_weight(std::string_view pattern) const {
    const auto node = locate(pattern);
    if (!node || nodes_[*node].terminal_weight <= 0.0) return std::nullopt;
    return nodes_[*node].terminal_weight;
}

std::optional<double> SamplerTrie::node_weight(std::string_view prefix) const {
    const auto node = locate(prefix);
    if (!node) return std::nullopt;
    return nodes_[*node].node_weight;
}

namespace {

template <typename Nodes, typename Visit>
void walk(const Nodes& nodes, std::uint32_t node, std::string& path, Visit&& visit) {
    for (auto id : nodes[node].children) {
        path.push_back(nodes[id].symbol);
        visit(path, nodes[id]);
        walk(nodes, id, path, visit);
        path.pop_back();
    }
}

}  // namespace

std::vector<std::pair<std::string, double>> SamplerTrie::patterns() const {
    std::vector<std::pair<std::string, double>> out;
    std::string path;
    walk(nodes_, 0, path, [&](const std::string& p, const Node& n) {
        if (n.terminal_weight > 0.0) out.emplace_back(p, n.terminal_weight);
    });
    return out;
}

std::vector<std::pair<std::string, double>> SamplerTrie::edges() const {
    std::vector<std::pair<std::string, double>> out;
    std::string path;
    walk(nodes_, 0, path, [&](const std::string& p, const Node& n) { out.emplace_back(p, n.edge_weight); });
    return out;
}

void SamplerTrie::dump(std::ostream& out) const {
    out << "trie tau=" << tau_ << " s_min=" << s_min_ << " patterns=" << pattern_count_
        << " total=" << total_weight() << '\n';
    std::string path;
    walk(nodes_, 0, path, [&](const std::string& p, const Node& n) {
        out << std::string(2 * p.size(), ' ') << n.symbol << " edge=" << n.edge_weight;
        if (n.terminal_weight > 0.0) out << " * " << p << " weight=" << n.terminal_weight;
        out << '\n';
    });
}

SamplerTrie fit_sampler(const PatternIndex& index, std::span<const int> class_ids, std::size_t num_classes,
                        int l_max, double s_min, double tau) {
    if (l_max != index.l_max()) throw InvalidArgument("sampler and pattern index disagree on l_max");
    if (class_ids.size() != index.num_instances()) throw InvalidArgument("label count differs from indexed instances");
    SamplerTrie trie(tau, s_min);
    const auto sizes = class_sizes(class_ids, num_classes);
    for (int l = 2; l <= l_max; ++l) {
        index.for_each_pattern(l, [&](std::string_view pattern, BitSpan presence) {
            const double q = normalize_chi2(chi2(contingency(presence, class_ids, sizes)), class_ids.size());
            if (q > 0.0 && q >= s_min) trie.insert(pattern, q);
        });
    }
    return trie;
}

}  // namespace ps2c
