#include "ps2c/synthgen.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ps2c/errors.hpp"
#include "ps2c/random.hpp"

namespace ps2c {

void SynthSpec::validate() const {
    if (per_class < 2) throw InvalidArgument("synthetic data needs at least 2 instances per class");
    if (motif_length < 2) throw InvalidArgument("motif length must be >= 2");
    if (motif_length >= length) throw InvalidArgument("motif length must be shorter than the series");
    if (!(noise >= 0.0)) throw InvalidArgument("noise must be >= 0");
}

LabeledDataset generate(const SynthSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const std::size_t m = spec.motif_length;
    std::vector<TimeSeries> series;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < 2 * spec.per_class; ++i) {
        const bool bump = i % 2 == 0;
        std::vector<double> values(spec.length);
        for (auto& v : values) v = spec.noise * rng.normal();
        const std::size_t offset = rng.index(spec.length - m + 1);
        for (std::size_t j = 0; j < m; ++j) {
            const double t = 2.0 * static_cast<double>(j) / static_cast<double>(m - 1) - 1.0;
            values[offset + j] += bump ? spec.amplitude : -spec.amplitude * (1.0 - std::abs(t));
        }
        series.emplace_back(std::move(values));
        labels.emplace_back(bump ? "A" : "B");
    }
    return LabeledDataset(std::move(series), std::move(labels));
}

SplitPair generate_split(const SynthSpec& spec, std::size_t test_per_class) {
    SynthSpec test_spec = spec;
    test_spec.per_class = test_per_class;
    test_spec.seed = derive_seed(spec.seed, {0x74657374ULL});
    return SplitPair{generate(spec), generate(test_spec), spec.seed, true};
}

}  // namespace ps2c
