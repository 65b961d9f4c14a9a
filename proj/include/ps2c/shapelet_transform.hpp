#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ps2c/dataset.hpp"
#include "ps2c/discretizer.hpp"
#include "ps2c/pattern_index.hpp"
#include "ps2c/random.hpp"
#include "ps2c/sampler_trie.hpp"

namespace ps2c {

struct Provenance {
    int alpha = 0;
    int omega = 0;
    std::string pattern;
    std::size_t instance = 0;  ///< training instance the shapelet was read from
    std::size_t offset = 0;    ///< symbol offset of the occurrence

    /// "a{alpha}_w{omega}_{pattern}"
    std::string name() const;
};

struct Shapelet {
    std::vector<double> values;
    Provenance provenance;
};

/// N x k min-distance matrix, stored column-major so feature blocks can be
/// appended cheaply.
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    explicit FeatureMatrix(std::size_t rows) : rows_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return names_.size(); }

    double operator()(std::size_t row, std::size_t col) const { return data_[col * rows_ + row]; }
    std::span<const double> column(std::size_t col) const { return {data_.data() + col * rows_, rows_}; }
    const std::vector<std::string>& column_names() const { return names_; }

    void add_column(std::span<const double> values, std::string name);
    /// Appends every column of `other`. Throws InvalidArgument on a row mismatch.
    void append(const FeatureMatrix& other);

    /// Header of column names, then one row per instance, values printed with
    /// round-trip precision.
    void write_csv(std::ostream& out) const;

    friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<double> data_;
    std::vector<std::string> names_;
};

/// Real-valued subsequence behind the earliest occurrence of `pattern`:
/// positions [offset*omega, min((offset+l)*omega, n)) of that instance.
Shapelet reverse_lookup(std::string_view pattern, std::span<const TimeSeries> normalized_train,
                        const DiscretizedDataset& discretized, const PatternIndex& index);

/// Minimum over alignments of the squared Euclidean distance divided by the
/// shapelet length. A shapelet longer than the series is compared once
/// against its first n values (and a warning is logged).
double min_distance(std::span<const double> series, std::span<const double> shapelet);

struct FeatureSets {
    FeatureMatrix train;
    FeatureMatrix test;
    std::vector<Shapelet> shapelets;
};

/// Draws patterns until `k` distinct ones are found or 10*k draws are spent,
/// turns each into a shapelet and fills one column per shapelet in sampling
/// order. Only the series are passed in, so labels cannot leak into features.
FeatureSets create_feature_sets(std::span<const TimeSeries> normalized_train, std::span<const TimeSeries> normalized_test,
                                const DiscretizedDataset& discretized_train, const PatternIndex& index,
                                const SamplerTrie& trie, int k, Rng& rng);

}  // namespace ps2c
