#include "ps2c/forest.hpp"

#include <algorithm>
#include <cmath>

#include "ps2c/errors.hpp"
#include "ps2c/parallel.hpp"
#include "ps2c/random.hpp"

namespace ps2c {

class TreeBuilder {
public:
    TreeBuilder(const FeatureMatrix& features, std::span<const int> labels, std::size_t num_classes,
                std::size_t max_features, Rng& rng)
        : features_(features), labels_(labels), num_classes_(num_classes), max_features_(max_features), rng_(rng) {}

    RandomForest::Tree build(std::vector<std::size_t> sample) {
        sample_ = std::move(sample);
        tree_.clear();
        grow(0, sample_.size());
        return std::move(tree_);
    }

private:
    struct Split {
        int feature = -1;
        double threshold = 0.0;
        double score = -1.0;
    };

    std::uint32_t grow(std::size_t begin, std::size_t end) {
        const auto id = static_cast<std::uint32_t>(tree_.size());
        tree_.emplace_back();

        std::vector<std::size_t> counts(num_classes_, 0);
        for (std::size_t i = begin; i < end; ++i) ++counts[labels_[sample_[i]]];
        const auto majority = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
        tree_[id].label = majority;
        if (end - begin < 2 || counts[majority] == end - begin) return id;

        const Split split = find_split(begin, end);
        if (split.feature < 0) return id;

        const auto column = features_.column(static_cast<std::size_t>(split.feature));
        const auto mid = std::stable_partition(sample_.begin() + static_cast<std::ptrdiff_t>(begin),
                                               sample_.begin() + static_cast<std::ptrdiff_t>(end),
                                               [&](std::size_t s) { return column[s] <= split.threshold; });
        const auto cut = static_cast<std::size_t>(mid - sample_.begin());

        tree_[id].feature = split.feature;
        tree_[id].threshold = split.threshold;
        const auto left = grow(begin, cut);
        const auto right = grow(cut, end);
        tree_[id].left = left;
        tree_[id].right = right;
        return id;
    }

    // Draws features in random order. After the first max_features candidates
    // the search stops as soon as some valid split exists.
    Split find_split(std::size_t begin, std::size_t end) {
        const std::size_t k = features_.cols();
        std::vector<std::size_t> order(k);
        for (std::size_t f = 0; f < k; ++f) order[f] = f;

        Split best;
        for (std::size_t tried = 0; tried < k; ++tried) {
            if (tried >= max_features_ && best.feature >= 0) break;
            std::swap(order[tried], order[tried + rng_.index(k - tried)]);
            evaluate(order[tried], begin, end, best);
        }
        return best;
    }

    void evaluate(std::size_t feature, std::size_t begin, std::size_t end, Split& best) {
        const auto column = features_.column(feature);
        values_.clear();
        for (std::size_t i = begin; i < end; ++i) values_.emplace_back(column[sample_[i]], labels_[sample_[i]]);
        std::sort(values_.begin(), values_.end());
        if (values_.front().first == values_.back().first) return;

        std::vector<double> left(num_classes_, 0.0), right(num_classes_, 0.0);
        for (const auto& [v, c] : values_) right[c] += 1.0;
        double left_sq = 0.0, right_sq = 0.0;
        for (double r : right) right_sq += r * r;

        const std::size_t m = values_.size();
        for (std::size_t i = 0; i + 1 < m; ++i) {
            const int c = values_[i].second;
            left_sq += 2.0 * left[c] + 1.0;
            left[c] += 1.0;
            right_sq -= 2.0 * right[c] - 1.0;
            right[c] -= 1.0;
            if (values_[i].first == values_[i + 1].first) continue;

            // Maximizing sum(count^2)/size over both sides minimizes weighted Gini.
            const double score = left_sq / static_cast<double>(i + 1) + right_sq / static_cast<double>(m - i - 1);
            if (score > best.score) {
                const double lo = values_[i].first;
                const double hi = values_[i + 1].first;
                double threshold = lo + (hi - lo) / 2.0;
                if (!(threshold < hi)) threshold = lo;
                best = Split{static_cast<int>(feature), threshold, score};
            }
        }
    }

    const FeatureMatrix& features_;
    std::span<const int> labels_;
    std::size_t num_classes_;
    std::size_t max_features_;
    Rng& rng_;
    std::vector<std::size_t> sample_;
    std::vector<std::pair<double, int>> values_;
    RandomForest::Tree tree_;
};

RandomForest RandomForest::train(const FeatureMatrix& features, std::span<const int> labels, std::size_t num_classes,
                                 std::uint64_t seed, const ForestOptions& options) {
    if (features.cols() == 0) throw InvalidArgument("classifier needs at least one feature column");
    if (features.rows() != labels.size()) throw InvalidArgument("feature rows and labels differ in count");
    if (options.trees < 1) throw InvalidArgument("forest needs at least one tree");
    std::vector<bool> seen(num_classes, false);
    std::size_t distinct = 0;
    for (int c : labels) {
        if (c < 0 || static_cast<std::size_t>(c) >= num_classes) throw InvalidArgument("class id out of range");
        if (!seen[c]) ++distinct, seen[c] = true;
    }
    if (distinct < 2) throw InvalidArgument("training labels contain a single class");

    RandomForest forest;
    forest.num_features_ = features.cols();
    forest.num_classes_ = num_classes;
    forest.trees_.resize(static_cast<std::size_t>(options.trees));

    const std::size_t k = features.cols();
    const std::size_t max_features =
        options.max_features > 0 ? std::min<std::size_t>(options.max_features, k)
                                 : std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(k))));
    const std::size_t n = features.rows();

    parallel_for(forest.trees_.size(), options.threads, [&](std::size_t t) {
        Rng rng(derive_seed(seed, {t}));
        std::vector<std::size_t> bootstrap(n);
        for (auto& s : bootstrap) s = rng.index(n);
        TreeBuilder builder(features, labels, num_classes, max_features, rng);
        forest.trees_[t] = builder.build(std::move(bootstrap));
    });
    return forest;
}

int RandomForest::predict(std::span<const double> row) const {
    if (row.size() != num_features_) throw InvalidArgument("feature row has the wrong width");
    std::vector<std::size_t> votes(num_classes_, 0);
    for (const auto& tree : trees_) {
        std::uint32_t node = 0;
        while (tree[node].feature >= 0) {
            node = row[static_cast<std::size_t>(tree[node].feature)] <= tree[node].threshold ? tree[node].left
                                                                                              : tree[node].right;
        }
        ++votes[tree[node].label];
    }
    return static_cast<int>(std::max_element(votes.begin(), votes.end()) - votes.begin());
}

std::vector<int> RandomForest::predict(const FeatureMatrix& features) const {
    if (features.cols() != num_features_) {
        throw InvalidArgument("feature matrix has " + std::to_string(features.cols()) + " columns, model expects " +
                              std::to_string(num_features_));
    }
    std::vector<int> out(features.rows());
    std::vector<double> row(num_features_);
    for (std::size_t r = 0; r < features.rows(); ++r) {
        for (std::size_t c = 0; c < num_features_; ++c) row[c] = features(r, c);
        out[r] = predict(row);
    }
    return out;
}

double accuracy(std::span<const int> predicted, std::span<const int> truth) {
    if (predicted.size() != truth.size()) throw InvalidArgument("prediction and label counts differ");
    if (truth.empty()) throw InvalidArgument("accuracy of an empty set is undefined");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) correct += predicted[i] == truth[i];
    return static_cast<double>(correct) / static_cast<double>(truth.size());
}

}  // namespace ps2c
