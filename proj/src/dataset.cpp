#include "ps2c/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ps2c/errors.hpp"
#include "ps2c/random.hpp"

namespace ps2c {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw InvalidArgument("time series needs at least 2 observations");
    for (double v : values_) {
        if (!std::isfinite(v)) throw InvalidArgument("time series contains a non-finite value");
    }
}

LabeledDataset::LabeledDataset(std::vector<TimeSeries> series, std::vector<std::string> labels)
    : series_(std::move(series)), labels_(std::move(labels)) {
    if (series_.size() != labels_.size()) throw InvalidArgument("series and label counts differ");
    std::map<std::string, int> ids;
    class_ids_.reserve(labels_.size());
    for (const auto& label : labels_) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<int>(classes_.size()));
        if (inserted) classes_.push_back(label);
        class_ids_.push_back(it->second);
    }
}

std::size_t LabeledDataset::min_length() const {
    std::size_t n = 0;
    for (const auto& s : series_) n = (n == 0) ? s.size() : std::min(n, s.size());
    return n;
}

std::size_t LabeledDataset::max_length() const {
    std::size_t n = 0;
    for (const auto& s : series_) n = std::max(n, s.size());
    return n;
}

void LabeledDataset::require_trainable() const {
    if (size() < 2) throw InvalidArgument("dataset needs at least 2 instances");
    if (num_classes() < 2) throw InvalidArgument("dataset needs at least 2 distinct labels");
}

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n\v\f";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(delimiter, start);
        fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    while (!fields.empty() && fields.back().empty()) fields.pop_back();
    return fields;
}

}  // namespace

LabeledDataset parse_ucr(std::istream& in, const std::string& source_name) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
    if (in.bad()) throw IoError("read failure on " + source_name);

    char delimiter = 0;
    for (const auto& line : lines) {
        if (trim(line).empty()) continue;
        delimiter = line.find('\t') != std::string::npos ? '\t' : ',';
        break;
    }
    if (delimiter == 0) throw ParseError(source_name + ": empty file");

    std::vector<TimeSeries> series;
    std::vector<std::string> labels;
    for (std::size_t lineno = 1; lineno <= lines.size(); ++lineno) {
        const auto line = trim(lines[lineno - 1]);
        if (line.empty()) continue;
        const auto where = source_name + ":" + std::to_string(lineno);
        const auto fields = split_fields(line, delimiter);
        if (fields.size() < 3) throw ParseError(where + ": expected a label and at least 2 values");
        if (fields[0].empty()) throw ParseError(where + ": empty label");

        std::vector<double> values;
        values.reserve(fields.size() - 1);
        for (std::size_t f = 1; f < fields.size(); ++f) {
            const auto tok = fields[f];
            double v = 0.0;
            // from_chars rejects a leading '+', which some writers emit.
            const auto* first = tok.data() + (tok.starts_with('+') ? 1 : 0);
            const auto* last = tok.data() + tok.size();
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc{} || ptr != last || tok.empty()) {
                throw ParseError(where + ": non-numeric token '" + std::string(tok) + "'");
            }
            if (!std::isfinite(v)) throw ParseError(where + ": non-finite value '" + std::string(tok) + "'");
            values.push_back(v);
        }
        series.emplace_back(std::move(values));
        labels.emplace_back(fields[0]);
    }
    return LabeledDataset(std::move(series), std::move(labels));
}

LabeledDataset load_ucr(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_ucr(in, path.string());
}

void write_ucr(std::ostream& out, const LabeledDataset& dataset, char delimiter) {
    char buf[32];
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        out << dataset.label(i);
        for (double v : dataset.series(i).values()) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
            out << delimiter << std::string_view(buf, ptr - buf);
        }
        out << '\n';
    }
}

void save_ucr(const std::filesystem::path& path, const LabeledDataset& dataset, char delimiter) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_ucr(out, dataset, delimiter);
    if (!out) throw IoError("write failure on " + path.string());
}

TimeSeries znormalize(const TimeSeries& series) {
    const auto values = series.values();
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / n);

    std::vector<double> out(values.size(), 0.0);
    if (sd >= 1e-8) {
        for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - mean) / sd;
    }
    return TimeSeries(std::move(out));
}

LabeledDataset znormalize(const LabeledDataset& dataset) {
    std::vector<TimeSeries> series;
    series.reserve(dataset.size());
    for (const auto& s : dataset.all_series()) series.push_back(znormalize(s));
    return LabeledDataset(std::move(series), {dataset.labels().begin(), dataset.labels().end()});
}

SplitPair resample_split(const LabeledDataset& train, const LabeledDataset& test, std::uint64_t seed) {
    const std::size_t pooled = train.size() + test.size();
    if (pooled < 4) throw InvalidArgument("resampling needs at least 4 pooled instances");
    if (seed == 0) return SplitPair{train, test, 0, true};

    std::vector<const TimeSeries*> series;
    std::vector<const std::string*> labels;
    for (const auto* part : {&train, &test}) {
        for (std::size_t i = 0; i < part->size(); ++i) {
            series.push_back(&part->series(i));
            labels.push_back(&part->label(i));
        }
    }

    std::vector<std::size_t> order(pooled);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    for (std::size_t i = pooled - 1; i > 0; --i) std::swap(order[i], order[rng.index(i + 1)]);

    std::map<std::string, std::size_t> pooled_count, train_quota;
    for (const auto* l : labels) ++pooled_count[*l];
    for (const auto& l : train.labels()) ++train_quota[l];
    const bool stratified = std::ranges::none_of(pooled_count, [](const auto& kv) { return kv.second < 2; });

    std::vector<TimeSeries> train_series, test_series;
    std::vector<std::string> train_labels, test_labels;
    for (std::size_t idx : order) {
        const std::string& label = *labels[idx];
        bool to_train;
        if (stratified) {
            auto& quota = train_quota[label];
            to_train = quota > 0;
            if (to_train) --quota;
        } else {
            to_train = train_series.size() < train.size();
        }
        (to_train ? train_series : test_series).push_back(*series[idx]);
        (to_train ? train_labels : test_labels).push_back(label);
    }
    return SplitPair{LabeledDataset(std::move(train_series), std::move(train_labels)),
                     LabeledDataset(std::move(test_series), std::move(test_labels)), seed, stratified};
}

}  // namespace ps2c
