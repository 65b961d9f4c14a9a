#include "ps2c/pattern_index.hpp"

#include <algorithm>

#include "ps2c/errors.hpp"

namespace ps2c {

namespace {

constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

std::uint64_t bigram_key(char a, char b) {
    return std::uint64_t{static_cast<unsigned char>(a)} << 8 | static_cast<unsigned char>(b);
}

std::uint64_t extension_key(std::uint32_t prefix, char c) {
    return std::uint64_t{prefix} << 8 | static_cast<unsigned char>(c);
}

std::size_t slot_of(std::uint64_t key, std::size_t mask) {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> 17) & mask;
}

}  // namespace

std::pair<std::uint32_t, bool> PatternIndex::KeyMap::try_emplace(std::uint64_t key, std::uint32_t value) {
    if (2 * (size_ + 1) > keys_.size()) grow();
    const std::size_t mask = keys_.size() - 1;
    for (std::size_t i = slot_of(key, mask);; i = (i + 1) & mask) {
        if (keys_[i] == key) return {values_[i], false};
        if (keys_[i] == kEmpty) {
            keys_[i] = key;
            values_[i] = value;
            ++size_;
            return {value, true};
        }
    }
}

std::optional<std::uint32_t> PatternIndex::KeyMap::find(std::uint64_t key) const {
    if (keys_.empty()) return std::nullopt;
    const std::size_t mask = keys_.size() - 1;
    for (std::size_t i = slot_of(key, mask);; i = (i + 1) & mask) {
        if (keys_[i] == key) return values_[i];
        if (keys_[i] == kEmpty) return std::nullopt;
    }
}

void PatternIndex::KeyMap::grow() {
    auto old_keys = std::move(keys_);
    auto old_values = std::move(values_);
    const std::size_t capacity = old_keys.empty() ? 64 : 2 * old_keys.size();
    keys_.assign(capacity, kEmpty);
    values_.assign(capacity, 0);
    size_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
        if (old_keys[i] != kEmpty) try_emplace(old_keys[i], old_values[i]);
    }
}

PatternIndex PatternIndex::build(const DiscretizedDataset& dataset, int l_max) {
    if (l_max < 2) throw InvalidArgument("maximum pattern length must be >= 2");
    PatternIndex index;
    index.l_max_ = l_max;
    index.strings_ = std::make_shared<const std::vector<std::string>>(dataset.strings);
    const auto& strings = *index.strings_;

    std::size_t longest = 0;
    for (const auto& s : strings) longest = std::max(longest, s.size());
    if (longest < 2) throw InvalidArgument("pattern index needs a string of length >= 2");

    const std::size_t n = strings.size();
    const auto top = std::min<std::size_t>(static_cast<std::size_t>(l_max), longest);
    index.tables_.resize(top - 1);
    for (auto& table : index.tables_) {
        table.words = (n + 63) / 64;
        table.instances = n;
    }
    // For a fixed length at most one pattern is added per (instance, offset),
    // so each table still lists patterns in order of first occurrence.
    for (std::size_t i = 0; i < n; ++i) {
        const std::string_view word = strings[i];
        for (std::size_t off = 0; off + 2 <= word.size(); ++off) {
            std::uint64_t key = bigram_key(word[off], word[off + 1]);
            for (std::size_t len = 2; len <= top && off + len <= word.size(); ++len) {
                auto& table = index.tables_[len - 2];
                const auto [id, inserted] = table.lookup.try_emplace(key, static_cast<std::uint32_t>(table.entries.size()));
                if (inserted) {
                    table.entries.push_back(Entry{word.substr(off, len), Occurrence{i, off}});
                    table.bits.resize(table.bits.size() + table.words, 0);
                }
                table.bits[id * table.words + (i >> 6)] |= std::uint64_t{1} << (i & 63);
                if (off + len < word.size()) key = extension_key(id, word[off + len]);
            }
        }
    }
    return index;
}

std::size_t PatternIndex::num_patterns() const {
    std::size_t total = 0;
    for (const auto& t : tables_) total += t.entries.size();
    return total;
}

std::vector<std::string_view> PatternIndex::distinct_patterns(int l) const {
    if (l < 2 || l > l_max_) {
        throw InvalidArgument("pattern length " + std::to_string(l) + " outside [2, " + std::to_string(l_max_) + "]");
    }
    std::vector<std::string_view> out;
    if (static_cast<std::size_t>(l - 2) >= tables_.size()) return out;
    const auto& entries = tables_[l - 2].entries;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.pattern);
    return out;
}

std::optional<std::pair<std::size_t, std::uint32_t>> PatternIndex::find(std::string_view pattern) const {
    if (pattern.size() < 2 || pattern.size() - 2 >= tables_.size()) return std::nullopt;
    auto id = tables_[0].lookup.find(bigram_key(pattern[0], pattern[1]));
    for (std::size_t len = 3; id && len <= pattern.size(); ++len) {
        id = tables_[len - 2].lookup.find(extension_key(*id, pattern[len - 1]));
    }
    if (!id) return std::nullopt;
    return std::pair{pattern.size() - 2, *id};
}

PresenceLookup PatternIndex::presence_vector(std::string_view pattern) const {
    if (const auto hit = find(pattern)) return {BitVector(tables_[hit->first].presence(hit->second)), true};
    return {BitVector(num_instances()), false};
}

Occurrence PatternIndex::first_occurrence(std::string_view pattern) const {
    if (const auto hit = find(pattern)) return tables_[hit->first].entries[hit->second].first;
    throw InvalidArgument("pattern '" + std::string(pattern) + "' does not occur in the indexed data");
}

}  // namespace ps2c
