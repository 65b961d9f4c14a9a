#pragma once

#include <cstddef>
#include <cstdint>

#include "ps2c/dataset.hpp"

namespace ps2c {

/// Two-class planted-motif generator. Class "A" carries a rectangular bump of
/// height +amplitude, class "B" a V-shaped dip reaching -amplitude at its
/// centre; each at a uniformly random offset, on top of N(0, noise^2) noise.
struct SynthSpec {
    std::size_t per_class = 50;
    std::size_t length = 128;
    double noise = 0.1;
    std::size_t motif_length = 16;
    double amplitude = 3.0;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Instances alternate A, B, A, B, ... Values are not z-normalized.
LabeledDataset generate(const SynthSpec& spec);

/// Train and test sets from independent streams of the same spec.
SplitPair generate_split(const SynthSpec& spec, std::size_t test_per_class);

}  // namespace ps2c
