#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <optional>
#include <utility>
#include <vector>

#include "ps2c/bitvector.hpp"
#include "ps2c/discretizer.hpp"

namespace ps2c {

struct Occurrence {
    std::size_t instance = 0;
    std::size_t offset = 0;  ///< in symbols
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Result of a presence query. Patterns never seen during build come back with
/// `indexed == false` and an all-zero vector rather than as an error.
struct PresenceLookup {
    BitVector bits;
    bool indexed = false;
};

/// Distinct substrings of length 2..l_max over a set of SAX words, each with
/// the instances containing it and its earliest (instance, offset).
///
/// Built with one hashed n-gram pass per length. Patterns are reported in
/// order of first occurrence, which makes every downstream iteration
/// deterministic.
class PatternIndex {
public:
    static PatternIndex build(const DiscretizedDataset& dataset, int l_max);

    int l_max() const { return l_max_; }
    /// Longest length that has at least one pattern.
    int max_pattern_length() const { return static_cast<int>(tables_.size()) + 1; }
    std::size_t num_instances() const { return strings_->size(); }
    std::size_t num_patterns() const;

    /// Distinct patterns of length l in first-occurrence order. Empty when l
    /// exceeds every string. Throws InvalidArgument for l outside [2, l_max].
    std::vector<std::string_view> distinct_patterns(int l) const;

    PresenceLookup presence_vector(std::string_view pattern) const;
    /// Throws InvalidArgument when the pattern occurs nowhere.
    Occurrence first_occurrence(std::string_view pattern) const;

    bool contains(std::string_view pattern) const { return find(pattern).has_value(); }

    /// Calls f(pattern, BitSpan presence) for each length-l pattern in
    /// first-occurrence order without copying the presence vectors.
    template <typename F>
    void for_each_pattern(int l, F&& f) const {
        if (l < 2 || static_cast<std::size_t>(l - 2) >= tables_.size()) return;
        const auto& table = tables_[l - 2];
        for (std::size_t e = 0; e < table.entries.size(); ++e) f(table.entries[e].pattern, table.presence(e));
    }

private:
    struct Entry {
        std::string_view pattern;
        Occurrence first;
    };
    /// Open-addressing map from a packed key to an entry index. A length-l
    /// pattern is keyed by (index of its length-(l-1) prefix, last symbol),
    /// so lookups never hash whole strings.
    class KeyMap {
    public:
        /// Index stored under `key`, inserting `value` if the key is new.
        std::pair<std::uint32_t, bool> try_emplace(std::uint64_t key, std::uint32_t value);
        std::optional<std::uint32_t> find(std::uint64_t key) const;

    private:
        void grow();
        std::vector<std::uint64_t> keys_;
        std::vector<std::uint32_t> values_;
        std::size_t size_ = 0;
    };
    /// Presence bits of all entries live in one buffer, `words` per entry.
    struct Table {
        KeyMap lookup;
        std::vector<Entry> entries;
        std::vector<std::uint64_t> bits;
        std::size_t words = 0;
        std::size_t instances = 0;

        BitSpan presence(std::size_t e) const { return {bits.data() + e * words, instances}; }
    };

    std::optional<std::pair<std::size_t, std::uint32_t>> find(std::string_view pattern) const;

    int l_max_ = 2;
    // Keys are views into these strings; shared ownership keeps them pinned
    // when the index is copied or moved.
    std::shared_ptr<const std::vector<std::string>> strings_;
    std::vector<Table> tables_;  ///< tables_[l - 2]
};

}  // namespace ps2c
