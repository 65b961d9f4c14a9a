#include <doctest.h>

#include <cmath>

#include "ps2c/errors.hpp"
#include "ps2c/forest.hpp"
#include "ps2c/random.hpp"

using namespace ps2c;

namespace {

FeatureMatrix matrix(const std::vector<std::vector<double>>& columns) {
    FeatureMatrix m(columns.empty() ? 0 : columns.front().size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.add_column(columns[c], "f" + std::to_string(c));
    return m;
}

}  // namespace

TEST_CASE("a separable feature is learned perfectly") {
    Rng rng(4);
    std::vector<double> signal, noise;
    std::vector<int> y;
    for (int i = 0; i < 60; ++i) {
        const int label = i % 2;
        y.push_back(label);
        signal.push_back(label + 0.3 * rng.uniform());
        noise.push_back(rng.normal());
    }
    const auto x = matrix({noise, signal, noise});
    const auto model = RandomForest::train(x, y, 2, 11);
    CHECK(model.num_trees() == 100);
    CHECK(model.num_features() == 3);
    CHECK(accuracy(model.predict(x), y) == 1.0);
    CHECK(model.predict(std::vector<double>{0.0, 0.05, 0.0}) == 0);
    CHECK(model.predict(std::vector<double>{0.0, 1.2, 0.0}) == 1);
}

TEST_CASE("three classes on one axis") {
    std::vector<double> f;
    std::vector<int> y;
    for (int i = 0; i < 30; ++i) {
        y.push_back(i % 3);
        f.push_back(10.0 * (i % 3) + 0.01 * i);
    }
    const auto model = RandomForest::train(matrix({f}), y, 3, 1);
    CHECK(model.predict(std::vector<double>{0.1}) == 0);
    CHECK(model.predict(std::vector<double>{10.2}) == 1);
    CHECK(model.predict(std::vector<double>{20.1}) == 2);
}

TEST_CASE("same seed, same predictions, whatever the thread count") {
    Rng rng(8);
    std::vector<std::vector<double>> cols(5, std::vector<double>(40));
    std::vector<int> y(40);
    for (std::size_t i = 0; i < 40; ++i) {
        y[i] = static_cast<int>(rng.index(2));
        for (auto& c : cols) c[i] = rng.normal() + 0.5 * y[i];
    }
    const auto x = matrix(cols);
    const auto a = RandomForest::train(x, y, 2, 99, {.trees = 50, .threads = 1});
    const auto b = RandomForest::train(x, y, 2, 99, {.trees = 50, .threads = 4});
    const auto c = RandomForest::train(x, y, 2, 99, {.trees = 50, .threads = 1});
    Rng probe_rng(1);
    FeatureMatrix probe(200);
    for (std::size_t f = 0; f < 5; ++f) {
        std::vector<double> v(200);
        for (auto& e : v) e = probe_rng.normal();
        probe.add_column(v, "p");
    }
    CHECK(a.predict(probe) == b.predict(probe));
    CHECK(a.predict(probe) == c.predict(probe));
}

TEST_CASE("shuffled labels give chance accuracy") {
    double total = 0.0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
        Rng rng(1000 + t);
        const auto make = [&](std::size_t n, std::vector<int>& y) {
            std::vector<std::vector<double>> cols(4, std::vector<double>(n));
            y.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                y[i] = static_cast<int>(i % 2);
                for (auto& c : cols) c[i] = rng.normal();
            }
            return matrix(cols);
        };
        std::vector<int> ytr, yte;
        const auto xtr = make(100, ytr);
        const auto xte = make(200, yte);
        const auto model = RandomForest::train(xtr, ytr, 2, static_cast<std::uint64_t>(t), {.trees = 50});
        total += accuracy(model.predict(xte), yte);
    }
    CHECK(std::abs(total / trials - 0.5) <= 0.1);
}

TEST_CASE("training preconditions") {
    const auto x = matrix({{0.0, 1.0, 2.0}});
    CHECK_THROWS_AS(RandomForest::train(FeatureMatrix(3), std::vector<int>{0, 1, 0}, 2, 1), InvalidArgument);
    CHECK_THROWS_AS(RandomForest::train(x, std::vector<int>{0, 1}, 2, 1), InvalidArgument);
    CHECK_THROWS_AS(RandomForest::train(x, std::vector<int>{1, 1, 1}, 2, 1), InvalidArgument);
    const auto model = RandomForest::train(x, std::vector<int>{0, 1, 1}, 2, 1);
    CHECK_THROWS_AS(model.predict(matrix({{0.0}, {1.0}})), InvalidArgument);
}

TEST_CASE("accuracy") {
    CHECK(accuracy(std::vector<int>{0, 1, 1, 0}, std::vector<int>{0, 1, 1, 0}) == 1.0);
    CHECK(accuracy(std::vector<int>{0, 0, 0, 0}, std::vector<int>{0, 1, 1, 0}) == 0.5);
    CHECK(accuracy(std::vector<int>{1}, std::vector<int>{-1}) == 0.0);
    CHECK_THROWS_AS(accuracy(std::vector<int>{1}, std::vector<int>{1, 0}), InvalidArgument);
    CHECK_THROWS_AS(accuracy(std::vector<int>{}, std::vector<int>{}), InvalidArgument);
}
