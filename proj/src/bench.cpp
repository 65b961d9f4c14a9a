#include "ps2c/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <ostream>

#include "ps2c/errors.hpp"
#include "ps2c/synthgen.hpp"

namespace ps2c {

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    if (options.sizes.empty()) throw InvalidArgument("benchmark needs at least one size");
    if (options.lengths.empty()) throw InvalidArgument("benchmark needs at least one series length");
    if (options.repeats < 1) throw InvalidArgument("benchmark needs at least one repeat");

    struct Case {
        SplitPair data;
        BenchRow row;
    };
    std::vector<Case> cases;
    for (std::size_t n : options.lengths) {
        for (std::size_t instances : options.sizes) {
            if (instances < 4) throw InvalidArgument("benchmark sizes must be >= 4");
            SynthSpec spec;
            spec.per_class = instances / 2;
            spec.length = n;
            spec.motif_length = options.motif_length > 0 ? options.motif_length : std::max<std::size_t>(2, n / 8);
            spec.seed = options.seed;
            cases.push_back({generate_split(spec, spec.per_class),
                             BenchRow{instances, n, 0, std::numeric_limits<double>::infinity()}});
        }
    }
    // Repeats are interleaved across rows so that slow drift in machine load
    // hits every row alike instead of inflating one of them.
    for (int r = 0; r < options.repeats; ++r) {
        for (auto& c : cases) {
            const auto start = std::chrono::steady_clock::now();
            const auto merged = fit_transform(c.data.train, c.data.test, options.config, options.run);
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            c.row.seconds = std::min(c.row.seconds, s);
            c.row.columns = merged.train.cols();
        }
    }
    std::vector<BenchRow> rows;
    for (const auto& c : cases) rows.push_back(c.row);
    return rows;
}

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << std::left << std::setw(10) << "N" << std::setw(10) << "n" << std::setw(10) << "columns"
        << "seconds\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(10) << r.instances << std::setw(10) << r.length << std::setw(10) << r.columns
            << std::fixed << std::setprecision(4) << r.seconds << '\n';
    }
    out.unsetf(std::ios::floatfield);
}

}  // namespace ps2c
