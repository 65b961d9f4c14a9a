#include "ps2c/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>

#include "ps2c/discretizer.hpp"
#include "ps2c/errors.hpp"
#include "ps2c/log.hpp"
#include "ps2c/parallel.hpp"
#include "ps2c/pattern_index.hpp"
#include "ps2c/random.hpp"
#include "ps2c/sampler_trie.hpp"

namespace ps2c {

namespace {

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

constexpr std::uint64_t kForestTag = 0x666f72657374ULL;

}  // namespace

void PipelineConfig::validate() const {
    if (alphas.empty()) throw InvalidArgument("alphabet set A is empty");
    if (omegas.empty()) throw InvalidArgument("window set Omega is empty");
    for (int a : alphas) SaxParams{a, 1}.validate();
    for (int w : omegas) SaxParams{2, w}.validate();
    if (l_max < 2) throw InvalidArgument("l_max must be >= 2");
    if (!(s_min >= 0.0)) throw InvalidArgument("s_min must be >= 0");
    if (!(tau > 0.0)) throw InvalidArgument("tau must be > 0");
    if (k < 1) throw InvalidArgument("K must be >= 1");
}

std::vector<SaxParams> PipelineConfig::cells() const {
    std::vector<SaxParams> out;
    for (int a : alphas) {
        for (int w : omegas) out.push_back(SaxParams{a, w});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PhaseTimings& PhaseTimings::operator+=(const PhaseTimings& other) {
    resample += other.resample;
    normalize += other.normalize;
    discretize += other.discretize;
    fit_sampler += other.fit_sampler;
    transform += other.transform;
    train += other.train;
    evaluate += other.evaluate;
    total += other.total;
    return *this;
}

CellFeatures run_cell(const LabeledDataset& normalized_train, std::span<const TimeSeries> normalized_test,
                      const SaxParams& params, const PipelineConfig& config, std::string* skip_reason,
                      PhaseTimings* timings) {
    PhaseTimings local;
    Stopwatch clock;
    CellFeatures cell{params, 0,
                      FeatureSets{FeatureMatrix(normalized_train.size()), FeatureMatrix(normalized_test.size()), {}}};
    auto skip = [&](std::string reason) {
        if (skip_reason) *skip_reason = std::move(reason);
        if (timings) *timings += local;
        return cell;
    };

    const auto words = discretize(normalized_train, params);
    local.discretize = clock.lap();

    const bool long_enough = std::ranges::any_of(words.strings, [](const auto& w) { return w.size() >= 2; });
    if (!long_enough) return skip("discretized strings are shorter than 2 symbols");

    // Held in optionals so their teardown (large hash tables) is timed too.
    std::optional<PatternIndex> index = PatternIndex::build(words, config.l_max);
    std::optional<SamplerTrie> trie = fit_sampler(*index, normalized_train.class_ids(), normalized_train.num_classes(),
                                                  config.l_max, config.s_min, config.tau);
    local.fit_sampler = clock.lap();
    cell.trie_patterns = trie->pattern_count();
    const bool empty = trie->empty();
    if (!empty) {
        Rng rng(derive_seed(config.seed,
                            {static_cast<std::uint64_t>(params.alpha), static_cast<std::uint64_t>(params.omega)}));
        cell.sets =
            create_feature_sets(normalized_train.all_series(), normalized_test, words, *index, *trie, config.k, rng);
        local.transform = clock.lap();
    }
    trie.reset();
    index.reset();
    local.fit_sampler += clock.lap();
    if (empty) return skip("no pattern reached s_min");
    if (timings) *timings += local;
    return cell;
}

MergedFeatureSet merge(std::vector<CellFeatures> cells) {
    std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.params < b.params; });
    MergedFeatureSet out;
    if (cells.empty()) return out;
    out.train = FeatureMatrix(cells.front().sets.train.rows());
    out.test = FeatureMatrix(cells.front().sets.test.rows());
    for (const auto& cell : cells) {
        if (cell.sets.train.rows() != out.train.rows() || cell.sets.test.rows() != out.test.rows()) {
            throw InvalidArgument("feature blocks disagree on row counts");
        }
        out.train.append(cell.sets.train);
        out.test.append(cell.sets.test);
        for (const auto& s : cell.sets.shapelets) out.provenance.push_back(s.provenance);
    }
    return out;
}

MergedFeatureSet fit_transform(const LabeledDataset& train, const LabeledDataset& test, const PipelineConfig& config,
                               const RunOptions& options, PhaseTimings* timings) {
    config.validate();
    train.require_trainable();
    Stopwatch wall;
    PhaseTimings local;

    const auto norm_train = znormalize(train);
    const auto norm_test = znormalize(test);
    local.normalize = wall.lap();

    std::size_t min_length = train.min_length();
    if (!test.empty()) min_length = std::min(min_length, test.min_length());

    const auto grid = config.cells();
    std::vector<std::optional<CellFeatures>> results(grid.size());
    std::vector<std::string> reasons(grid.size());
    std::vector<PhaseTimings> cell_timings(grid.size());
    parallel_for(grid.size(), options.threads, [&](std::size_t c) {
        const auto& params = grid[c];
        if (static_cast<std::size_t>(params.omega) >= min_length) {
            reasons[c] = "window is not shorter than the shortest series";
            return;
        }
        auto cell = run_cell(norm_train, norm_test.all_series(), params, config, &reasons[c], &cell_timings[c]);
        if (cell.sets.train.cols() > 0) results[c] = std::move(cell);
    });

    std::vector<CellFeatures> cells;
    std::vector<SkippedCell> skipped;
    for (std::size_t c = 0; c < grid.size(); ++c) {
        local += cell_timings[c];
        if (results[c]) {
            cells.push_back(std::move(*results[c]));
        } else {
            skipped.push_back(SkippedCell{grid[c].alpha, grid[c].omega, reasons[c]});
            const auto message = "skipping cell alpha=" + std::to_string(grid[c].alpha) +
                                 " omega=" + std::to_string(grid[c].omega) + ": " + reasons[c];
            if (static_cast<std::size_t>(grid[c].omega) >= min_length) {
                log::warning(message);
            } else {
                log::info(message);
            }
        }
    }

    auto merged = merge(std::move(cells));
    merged.skipped = std::move(skipped);
    if (merged.train.cols() == 0) throw NoPatternsError();
    local.total = wall.lap() + local.normalize;
    if (timings) *timings += local;
    return merged;
}

RandomForest train_classifier(const FeatureMatrix& features, const LabeledDataset& train, std::uint64_t seed,
                              const ForestOptions& options) {
    return RandomForest::train(features, train.class_ids(), train.num_classes(), seed, options);
}

double evaluate(const RandomForest& model, const FeatureMatrix& features, const LabeledDataset& train,
                const LabeledDataset& test) {
    if (features.rows() != test.size()) throw InvalidArgument("feature rows and test instances differ in count");
    const auto& classes = train.classes();
    std::vector<int> truth(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) {
        const auto it = std::find(classes.begin(), classes.end(), test.label(i));
        truth[i] = it == classes.end() ? -1 : static_cast<int>(it - classes.begin());
    }
    return accuracy(model.predict(features), truth);
}

std::vector<double> ExperimentReport::accuracies() const {
    std::vector<double> out;
    for (const auto& r : resamples) out.push_back(r.accuracy);
    return out;
}

ExperimentReport run_experiment(const LabeledDataset& train, const LabeledDataset& test, const PipelineConfig& config,
                                int n_resamples, const RunOptions& options, const FeatureSink& sink) {
    if (n_resamples < 1) throw InvalidArgument("need at least one resample");
    config.validate();
    ExperimentReport report;
    Stopwatch wall;
    double sink_seconds = 0.0;

    for (int i = 0; i < n_resamples; ++i) {
        PhaseTimings t;
        Stopwatch clock;
        ResampleResult result;
        result.index = static_cast<std::size_t>(i);
        result.split_seed = i == 0 ? 0 : config.seed + static_cast<std::uint64_t>(i);
        const auto split = resample_split(train, test, result.split_seed);
        result.stratified = split.stratified;
        t.resample = clock.lap();

        PipelineConfig run_config = config;
        run_config.seed = derive_seed(config.seed, {static_cast<std::uint64_t>(i)});
        const auto features = fit_transform(split.train, split.test, run_config, options, &t);
        clock.lap();

        ForestOptions forest_options = options.forest;
        forest_options.threads = options.threads;
        const auto model = train_classifier(features.train, split.train, derive_seed(run_config.seed, {kForestTag}),
                                            forest_options);
        t.train = clock.lap();
        result.accuracy = evaluate(model, features.test, split.train, split.test);
        t.evaluate = clock.lap();

        result.columns = features.train.cols();
        result.skipped = features.skipped;
        if (sink) {
            sink(result, split, features);
            sink_seconds += clock.lap();
        }
        report.timings += t;
        report.resamples.push_back(std::move(result));
    }

    const auto acc = report.accuracies();
    const double n = static_cast<double>(acc.size());
    report.mean_accuracy = std::accumulate(acc.begin(), acc.end(), 0.0) / n;
    if (acc.size() > 1) {
        double ss = 0.0;
        for (double a : acc) ss += (a - report.mean_accuracy) * (a - report.mean_accuracy);
        report.stddev_accuracy = std::sqrt(ss / (n - 1.0));
    }
    // Time spent in the caller's sink (file output) is not part of the run.
    report.timings.total = wall.lap() - sink_seconds;
    return report;
}

}  // namespace ps2c
