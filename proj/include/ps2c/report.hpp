#pragma once

#include <json.hpp>

#include "ps2c/dataset.hpp"
#include "ps2c/pipeline.hpp"

namespace ps2c {

/// Run report: config echo, dataset shape, per-resample accuracy, feature
/// counts and skipped cells. Holds no timings or thread counts, so it is a
/// pure function of the inputs and flags.
nlohmann::json experiment_report_json(const ExperimentReport& report, const PipelineConfig& config, int n_resamples,
                                      const LabeledDataset& train, const LabeledDataset& test);

nlohmann::json timings_json(const PhaseTimings& timings);

}  // namespace ps2c
