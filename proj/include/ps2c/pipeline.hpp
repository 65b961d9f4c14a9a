#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ps2c/dataset.hpp"
#include "ps2c/forest.hpp"
#include "ps2c/shapelet_transform.hpp"

namespace ps2c {

struct PipelineConfig {
    std::vector<int> alphas{2, 3, 4, 5, 6, 7, 8};
    std::vector<int> omegas{2, 3, 4, 5, 6};
    int l_max = 20;
    double s_min = 0.05;
    double tau = 0.5;
    int k = 4;
    std::uint64_t seed = 0;

    /// Throws InvalidArgument on an unusable configuration.
    void validate() const;
    /// (alpha, omega) pairs, deduplicated, ascending by alpha then omega.
    std::vector<SaxParams> cells() const;
};

struct RunOptions {
    int threads = 1;  ///< < 1 means all hardware threads
    ForestOptions forest{};
};

/// Wall-clock seconds per phase. Phases inside the (alpha, omega) loop are
/// summed over cells, so with threads > 1 they can exceed `total`.
struct PhaseTimings {
    double resample = 0.0;
    double normalize = 0.0;
    double discretize = 0.0;
    double fit_sampler = 0.0;  ///< pattern index + trie
    double transform = 0.0;
    double train = 0.0;
    double evaluate = 0.0;
    double total = 0.0;

    double attributed() const {
        return resample + normalize + discretize + fit_sampler + transform + train + evaluate;
    }
    PhaseTimings& operator+=(const PhaseTimings& other);
};

struct SkippedCell {
    int alpha = 0;
    int omega = 0;
    std::string reason;
    friend bool operator==(const SkippedCell&, const SkippedCell&) = default;
};

/// Features from one (alpha, omega) cell.
struct CellFeatures {
    SaxParams params;
    std::size_t trie_patterns = 0;
    FeatureSets sets;
};

struct MergedFeatureSet {
    FeatureMatrix train;
    FeatureMatrix test;
    std::vector<Provenance> provenance;  ///< per column
    std::vector<SkippedCell> skipped;
};

/// Runs one (alpha, omega) cell on z-normalized data. A cell that yields no
/// sampler (strings too short, no pattern reaching s_min) comes back with
/// zero columns and `skip_reason` filled in.
CellFeatures run_cell(const LabeledDataset& normalized_train, std::span<const TimeSeries> normalized_test,
                      const SaxParams& params, const PipelineConfig& config, std::string* skip_reason = nullptr,
                      PhaseTimings* timings = nullptr);

/// Column-wise concatenation in ascending (alpha, omega) order. Cells with no
/// columns contribute nothing. Throws InvalidArgument on a row-count mismatch.
MergedFeatureSet merge(std::vector<CellFeatures> cells);

/// Z-normalizes both splits and runs every cell of the grid (cells whose
/// window is not shorter than the shortest series are skipped). Throws
/// NoPatternsError when no cell yields a feature.
MergedFeatureSet fit_transform(const LabeledDataset& train, const LabeledDataset& test, const PipelineConfig& config,
                               const RunOptions& options = {}, PhaseTimings* timings = nullptr);

RandomForest train_classifier(const FeatureMatrix& features, const LabeledDataset& train, std::uint64_t seed,
                              const ForestOptions& options = {});

/// Accuracy on `test`. Test labels not seen in training count as errors.
double evaluate(const RandomForest& model, const FeatureMatrix& features, const LabeledDataset& train,
                const LabeledDataset& test);

struct ResampleResult {
    std::size_t index = 0;
    std::uint64_t split_seed = 0;
    bool stratified = true;
    double accuracy = 0.0;
    std::size_t columns = 0;
    std::vector<SkippedCell> skipped;
};

struct ExperimentReport {
    std::vector<ResampleResult> resamples;
    double mean_accuracy = 0.0;
    double stddev_accuracy = 0.0;  ///< sample standard deviation, 0 for one run
    PhaseTimings timings;

    std::vector<double> accuracies() const;
};

/// Called once per resample with the split and its merged features.
using FeatureSink = std::function<void(const ResampleResult&, const SplitPair&, const MergedFeatureSet&)>;

/// Resample 0 is the original split; resample i > 0 reshuffles with split
/// seed config.seed + i. Sampling and the forest use streams derived from
/// (config.seed, i).
ExperimentReport run_experiment(const LabeledDataset& train, const LabeledDataset& test, const PipelineConfig& config,
                                int n_resamples, const RunOptions& options = {}, const FeatureSink& sink = {});

}  // namespace ps2c
