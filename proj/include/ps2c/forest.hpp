#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ps2c/shapelet_transform.hpp"

namespace ps2c {

struct ForestOptions {
    int trees = 100;
    /// Features tried per split; 0 means floor(sqrt(k)), at least 1.
    int max_features = 0;
    int threads = 1;
};

/// Bagged CART ensemble: Gini splits, one bootstrap sample per tree, random
/// feature subsets per split, trees grown until leaves are pure or cannot be
/// split. Tree t is seeded from (seed, t), so the thread count never changes
/// the model.
class RandomForest {
public:
    static RandomForest train(const FeatureMatrix& features, std::span<const int> labels, std::size_t num_classes,
                              std::uint64_t seed, const ForestOptions& options = {});

    std::size_t num_features() const { return num_features_; }
    std::size_t num_classes() const { return num_classes_; }
    std::size_t num_trees() const { return trees_.size(); }

    /// Majority vote over trees; ties go to the lowest class id.
    int predict(std::span<const double> row) const;
    std::vector<int> predict(const FeatureMatrix& features) const;

private:
    struct Node {
        int feature = -1;  ///< -1 marks a leaf
        double threshold = 0.0;
        std::uint32_t left = 0;
        std::uint32_t right = 0;
        int label = 0;
    };
    using Tree = std::vector<Node>;

    std::size_t num_features_ = 0;
    std::size_t num_classes_ = 0;
    std::vector<Tree> trees_;

    friend class TreeBuilder;
};

/// Fraction of positions where predicted == truth. Throws on length mismatch
/// or empty input.
double accuracy(std::span<const int> predicted, std::span<const int> truth);

}  // namespace ps2c
