#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ps2c {

/// Real-valued series of at least two finite observations.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values);

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::vector<double> values_;
};

/// Labelled instances in file order. Labels are kept as the strings found in
/// the input; `class_ids()` maps them onto 0..num_classes()-1 in order of
/// first appearance.
class LabeledDataset {
public:
    LabeledDataset() = default;
    LabeledDataset(std::vector<TimeSeries> series, std::vector<std::string> labels);

    std::size_t size() const { return series_.size(); }
    bool empty() const { return series_.empty(); }

    const TimeSeries& series(std::size_t i) const { return series_[i]; }
    std::span<const TimeSeries> all_series() const { return series_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    std::span<const std::string> labels() const { return labels_; }

    /// Distinct labels in order of first appearance.
    const std::vector<std::string>& classes() const { return classes_; }
    std::size_t num_classes() const { return classes_.size(); }
    /// Per-instance index into classes().
    const std::vector<int>& class_ids() const { return class_ids_; }

    std::size_t min_length() const;
    std::size_t max_length() const;

    /// Throws InvalidArgument unless N >= 2 and at least two classes exist.
    void require_trainable() const;

private:
    std::vector<TimeSeries> series_;
    std::vector<std::string> labels_;
    std::vector<std::string> classes_;
    std::vector<int> class_ids_;
};

struct SplitPair {
    LabeledDataset train;
    LabeledDataset test;
    std::uint64_t seed = 0;
    /// False when some class had a single pooled instance and the split fell
    /// back to an unstratified shuffle.
    bool stratified = true;
};

/// Parses UCR text: one instance per line, label first, comma or tab
/// separated (tab if the first non-empty line contains one).
LabeledDataset parse_ucr(std::istream& in, const std::string& source_name = "<stream>");
LabeledDataset load_ucr(const std::filesystem::path& path);

/// Writes UCR text with the given delimiter and full round-trip precision.
void write_ucr(std::ostream& out, const LabeledDataset& dataset, char delimiter = '\t');
void save_ucr(const std::filesystem::path& path, const LabeledDataset& dataset, char delimiter = '\t');

/// Mean 0, population standard deviation 1. Series whose deviation is
/// below 1e-8 map to all zeros.
TimeSeries znormalize(const TimeSeries& series);
LabeledDataset znormalize(const LabeledDataset& dataset);

/// Pools train and test, shuffles with `seed`, and re-partitions keeping the
/// original split sizes and (when feasible) the per-class train counts.
/// Seed 0 returns the input split untouched.
SplitPair resample_split(const LabeledDataset& train, const LabeledDataset& test, std::uint64_t seed);

}  // namespace ps2c
