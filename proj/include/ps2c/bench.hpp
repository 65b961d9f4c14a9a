#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ps2c/pipeline.hpp"

namespace ps2c {

struct BenchOptions {
    std::vector<std::size_t> sizes;          ///< training instances N (split evenly over two classes)
    std::vector<std::size_t> lengths{128};   ///< series length n
    int repeats = 3;                         ///< best-of timing
    /// Planted motif length; 0 means n / 8 per row.
    std::size_t motif_length = 0;
    std::uint64_t seed = 1;
    PipelineConfig config{};
    RunOptions run{};
};

struct BenchRow {
    std::size_t instances = 0;
    std::size_t length = 0;
    std::size_t columns = 0;
    double seconds = 0.0;  ///< fastest fit + transform over the repeats
};

/// For each (N, n), generates a planted-motif train set of N instances and a
/// test set of the same size, then times fit_transform.
std::vector<BenchRow> run_bench(const BenchOptions& options);

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace ps2c
