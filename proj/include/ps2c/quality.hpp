#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ps2c/bitvector.hpp"

namespace ps2c {

/// Classes x {present, absent} instance counts for one pattern.
struct ContingencyTable {
    std::vector<std::size_t> present;  ///< per class
    std::vector<std::size_t> absent;   ///< per class
    std::size_t total_present = 0;
    std::size_t total_absent = 0;
    std::size_t n = 0;

    std::size_t num_classes() const { return present.size(); }
    std::size_t class_size(std::size_t c) const { return present[c] + absent[c]; }
};

/// `class_ids[i]` must lie in [0, num_classes).
ContingencyTable contingency(BitSpan presence, std::span<const int> class_ids, std::size_t num_classes);
/// Same table with per-class sizes supplied, so scoring many patterns over
/// one label vector costs O(set bits) each. Ids are assumed valid.
ContingencyTable contingency(BitSpan presence, std::span<const int> class_ids,
                             std::span<const std::size_t> class_sizes);
/// Instances per class. Throws InvalidArgument on an out-of-range id.
std::vector<std::size_t> class_sizes(std::span<const int> class_ids, std::size_t num_classes);

/// Pearson chi-square over the |C| x 2 table, no continuity correction.
/// Cells with zero expected count contribute nothing.
double chi2(const ContingencyTable& table);

/// raw / n, clamped to [0, 1].
double normalize_chi2(double raw, std::size_t n);

/// Temperature scaling q^(1/tau).
double scale_quality(double q, double tau);

struct QualityScore {
    double raw_chi2 = 0.0;
    double normalized = 0.0;
    double scaled = 0.0;
};

QualityScore score_pattern(BitSpan presence, std::span<const int> class_ids, std::size_t num_classes,
                           double tau);

}  // namespace ps2c
