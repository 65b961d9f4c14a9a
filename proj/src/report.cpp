#include "ps2c/report.hpp"

namespace ps2c {

nlohmann::json experiment_report_json(const ExperimentReport& report, const PipelineConfig& config, int n_resamples,
                                      const LabeledDataset& train, const LabeledDataset& test) {
    using nlohmann::json;
    json resamples = json::array();
    for (const auto& r : report.resamples) {
        json skipped = json::array();
        for (const auto& s : r.skipped) skipped.push_back({{"alpha", s.alpha}, {"omega", s.omega}, {"reason", s.reason}});
        resamples.push_back({{"index", r.index},
                             {"split_seed", r.split_seed},
                             {"stratified", r.stratified},
                             {"accuracy", r.accuracy},
                             {"features", r.columns},
                             {"skipped_cells", std::move(skipped)}});
    }
    return json{
        {"config",
         {{"alphas", config.alphas},
          {"omegas", config.omegas},
          {"lmax", config.l_max},
          {"smin", config.s_min},
          {"tau", config.tau},
          {"k", config.k},
          {"seed", config.seed},
          {"resamples", n_resamples}}},
        {"data",
         {{"train_instances", train.size()},
          {"test_instances", test.size()},
          {"classes", train.classes()},
          {"min_length", std::min(train.min_length(), test.empty() ? train.min_length() : test.min_length())},
          {"max_length", std::max(train.max_length(), test.max_length())}}},
        {"accuracy", {{"mean", report.mean_accuracy}, {"stddev", report.stddev_accuracy}, {"values", report.accuracies()}}},
        {"resamples", std::move(resamples)},
    };
}

nlohmann::json timings_json(const PhaseTimings& t) {
    return {{"resample", t.resample},   {"normalize", t.normalize}, {"discretize", t.discretize},
            {"fit_sampler", t.fit_sampler}, {"transform", t.transform}, {"train", t.train},
            {"evaluate", t.evaluate},   {"total", t.total},         {"unattributed", t.total - t.attributed()}};
}

}  // namespace ps2c
