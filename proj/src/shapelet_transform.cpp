#include "ps2c/shapelet_transform.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "ps2c/errors.hpp"
#include "ps2c/log.hpp"

namespace ps2c {

std::string Provenance::name() const {
    return "a" + std::to_string(alpha) + "_w" + std::to_string(omega) + "_" + pattern;
}

void FeatureMatrix::add_column(std::span<const double> values, std::string name) {
    if (values.size() != rows_) throw InvalidArgument("column length differs from row count");
    data_.insert(data_.end(), values.begin(), values.end());
    names_.push_back(std::move(name));
}

void FeatureMatrix::append(const FeatureMatrix& other) {
    if (other.rows_ != rows_) {
        throw InvalidArgument("cannot merge feature matrices with " + std::to_string(rows_) + " and " +
                              std::to_string(other.rows_) + " rows");
    }
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    names_.insert(names_.end(), other.names_.begin(), other.names_.end());
}

void FeatureMatrix::write_csv(std::ostream& out) const {
    for (std::size_t c = 0; c < cols(); ++c) out << (c ? "," : "") << names_[c];
    out << '\n';
    char buf[32];
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols(); ++c) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, (*this)(r, c));
            if (c) out << ',';
            out << std::string_view(buf, ptr - buf);
        }
        out << '\n';
    }
}

Shapelet reverse_lookup(std::string_view pattern, std::span<const TimeSeries> normalized_train,
                        const DiscretizedDataset& discretized, const PatternIndex& index) {
    const auto occ = index.first_occurrence(pattern);
    if (occ.instance >= normalized_train.size()) throw InvalidArgument("pattern index does not match the training set");
    const auto values = normalized_train[occ.instance].values();
    const auto w = static_cast<std::size_t>(discretized.params.omega);
    const std::size_t begin = occ.offset * w;
    const std::size_t end = std::min((occ.offset + pattern.size()) * w, values.size());
    if (begin >= end) throw InvalidArgument("occurrence lies outside its source series");

    Shapelet s;
    s.values.assign(values.begin() + static_cast<std::ptrdiff_t>(begin), values.begin() + static_cast<std::ptrdiff_t>(end));
    s.provenance = Provenance{discretized.params.alpha, discretized.params.omega, std::string(pattern), occ.instance,
                              occ.offset};
    return s;
}

double min_distance(std::span<const double> series, std::span<const double> shapelet) {
    const std::size_t n = series.size();
    const std::size_t s = shapelet.size();
    if (s == 0) throw InvalidArgument("empty shapelet");

    if (s > n) {
        log::warning("shapelet of length " + std::to_string(s) + " exceeds series length " + std::to_string(n) +
                     "; using a single truncated alignment");
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += (series[j] - shapelet[j]) * (series[j] - shapelet[j]);
        return sum / static_cast<double>(n);
    }

    // Early abandoning only skips windows whose partial sum already reaches the
    // best complete sum, so the minimum is the same value a full scan finds.
    // The bound is tested once per block of 8 terms; summation order is
    // unchanged.
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t start = 0; start + s <= n; ++start) {
        const double* x = series.data() + start;
        double sum = 0.0;
        std::size_t j = 0;
        for (; j + 8 <= s && sum < best; j += 8) {
            for (std::size_t i = j; i < j + 8; ++i) sum += (x[i] - shapelet[i]) * (x[i] - shapelet[i]);
        }
        if (sum >= best) continue;
        for (; j < s; ++j) sum += (x[j] - shapelet[j]) * (x[j] - shapelet[j]);
        if (sum < best) best = sum;
    }
    return best / static_cast<double>(s);
}

FeatureSets create_feature_sets(std::span<const TimeSeries> normalized_train, std::span<const TimeSeries> normalized_test,
                                const DiscretizedDataset& discretized_train, const PatternIndex& index,
                                const SamplerTrie& trie, int k, Rng& rng) {
    if (k < 1) throw InvalidArgument("feature count K must be >= 1");
    if (trie.empty()) throw InvalidArgument("cannot create features from an empty sampler");

    FeatureSets out{FeatureMatrix(normalized_train.size()), FeatureMatrix(normalized_test.size()), {}};
    std::unordered_set<std::string> seen;
    const auto target = static_cast<std::size_t>(k);
    const std::size_t budget = 10 * target;
    for (std::size_t draws = 0; draws < budget && seen.size() < target; ++draws) {
        auto pattern = trie.sample(rng);
        if (!seen.insert(pattern).second) continue;
        out.shapelets.push_back(reverse_lookup(pattern, normalized_train, discretized_train, index));
    }

    std::vector<double> column;
    for (const auto& shapelet : out.shapelets) {
        const auto name = shapelet.provenance.name();
        for (auto [series, matrix] : {std::pair{normalized_train, &out.train}, std::pair{normalized_test, &out.test}}) {
            column.resize(series.size());
            for (std::size_t i = 0; i < series.size(); ++i) column[i] = min_distance(series[i].values(), shapelet.values);
            matrix->add_column(column, name);
        }
    }
    return out;
}

}  // namespace ps2c
