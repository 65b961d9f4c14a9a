#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "ps2c/errors.hpp"
#include "ps2c/quality.hpp"
#include "ps2c/random.hpp"

using namespace ps2c;

namespace {

const std::vector<int> kAABB{0, 0, 1, 1};

ContingencyTable table(std::string_view bits, const std::vector<int>& labels, std::size_t classes = 2) {
    return contingency(BitVector::from_string(bits), labels, classes);
}

// 14 + 14 instances, `a` present in class 0, `b` present in class 1.
BitVector coffee_like(std::size_t a, std::size_t b) {
    BitVector v(28);
    for (std::size_t i = 0; i < a; ++i) v.set(i);
    for (std::size_t i = 0; i < b; ++i) v.set(14 + i);
    return v;
}

std::vector<int> coffee_labels() {
    std::vector<int> y(28, 0);
    std::fill(y.begin() + 14, y.end(), 1);
    return y;
}

}  // namespace

TEST_CASE("contingency") {
    auto t = table("1100", kAABB);
    CHECK(t.present == std::vector<std::size_t>{2, 0});
    CHECK(t.absent == std::vector<std::size_t>{0, 2});
    t = table("1111", kAABB);
    CHECK(t.present == std::vector<std::size_t>{2, 2});
    CHECK(t.absent == std::vector<std::size_t>{0, 0});
    t = table("1010", kAABB);
    CHECK(t.present == std::vector<std::size_t>{1, 1});
    CHECK(t.absent == std::vector<std::size_t>{1, 1});
    CHECK(t.n == 4);
    CHECK(t.total_present + t.total_absent == 4);
    CHECK_THROWS_AS(table("110", kAABB), InvalidArgument);
    CHECK_THROWS_AS(table("1100", {0, 0, 1, 2}), InvalidArgument);
}

TEST_CASE("chi2 worked values") {
    CHECK(chi2(table("1100", kAABB)) == doctest::Approx(4.0));
    CHECK(oracle::chi2_2x2(2, 0, 0, 2) == doctest::Approx(4.0));
    CHECK(chi2(table("1111", kAABB)) == 0.0);
    CHECK(chi2(table("0000", kAABB)) == 0.0);
    CHECK(chi2(table("1010", kAABB)) == 0.0);
    CHECK_THROWS_AS(chi2(ContingencyTable{}), InvalidArgument);
}

TEST_CASE("13-of-14 vs 0-of-14 normalizes to 0.867 and scales to 0.65 at tau 0.33") {
    const auto y = coffee_labels();
    const double raw = chi2(contingency(coffee_like(13, 0), y, 2));
    CHECK(raw == doctest::Approx(oracle::chi2_2x2(13, 1, 0, 14)).epsilon(1e-12));
    const double q = normalize_chi2(raw, 28);
    CHECK(std::abs(q - 0.867) <= 0.001);
    CHECK(std::abs(scale_quality(q, 0.33) - 0.65) <= 0.01);

    const double perfect = normalize_chi2(chi2(contingency(coffee_like(14, 0), y, 2)), 28);
    CHECK(perfect == 1.0);
    CHECK(scale_quality(perfect, 0.33) == 1.0);
}

TEST_CASE("normalize and scale") {
    CHECK(normalize_chi2(4.0, 4) == 1.0);
    CHECK(normalize_chi2(0.0, 9) == 0.0);
    CHECK(normalize_chi2(4.0 + 1e-13, 4) == 1.0);
    CHECK_THROWS_AS(normalize_chi2(1.0, 0), InvalidArgument);

    CHECK(scale_quality(0.5, 0.5) == doctest::Approx(0.25));
    CHECK(scale_quality(1.0, 0.1) == 1.0);
    CHECK(scale_quality(0.0, 0.1) == 0.0);
    CHECK_THROWS_AS(scale_quality(0.5, 0.0), InvalidArgument);
    CHECK_THROWS_AS(scale_quality(0.5, -1.0), InvalidArgument);
    CHECK_THROWS_AS(scale_quality(1.5, 1.0), InvalidArgument);
}

TEST_CASE("scaling properties") {
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const double q1 = rng.uniform(), q2 = rng.uniform();
        const double tau = 0.05 + 2.0 * rng.uniform();
        CHECK(scale_quality(q1, 1.0) == doctest::Approx(q1));
        if (q1 < q2) CHECK(scale_quality(q1, tau) <= scale_quality(q2, tau));
        if (tau < 1.0) CHECK(scale_quality(q1, tau) <= q1);
    }
}

TEST_CASE("chi2 matches the textbook sum and is invariant to relabeling and reordering") {
    Rng rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng.index(40);
        const std::size_t classes = 2 + rng.index(4);
        std::vector<int> y(n);
        for (auto& c : y) c = static_cast<int>(rng.index(classes));
        std::vector<bool> present(n);
        BitVector bits(n);
        for (std::size_t i = 0; i < n; ++i) {
            present[i] = rng.uniform() < 0.5;
            if (present[i]) bits.set(i);
        }
        const double got = chi2(contingency(bits, y, classes));
        CHECK(got == doctest::Approx(oracle::chi2(present, y)).epsilon(1e-9));
        const double q = normalize_chi2(got, n);
        CHECK(q >= 0.0);
        CHECK(q <= 1.0);

        // permute class ids
        std::vector<int> perm(classes);
        for (std::size_t c = 0; c < classes; ++c) perm[c] = static_cast<int>((c + 1) % classes);
        std::vector<int> y2(n);
        for (std::size_t i = 0; i < n; ++i) y2[i] = perm[y[i]];
        CHECK(chi2(contingency(bits, y2, classes)) == doctest::Approx(got).epsilon(1e-12));

        // reverse instance order
        BitVector rev(n);
        std::vector<int> y3(y.rbegin(), y.rend());
        for (std::size_t i = 0; i < n; ++i) {
            if (present[i]) rev.set(n - 1 - i);
        }
        CHECK(chi2(contingency(rev, y3, classes)) == doctest::Approx(got).epsilon(1e-12));
    }
}

TEST_CASE("normalized chi2 is 1 exactly when presence coincides with one class") {
    const std::vector<int> y{0, 0, 0, 1, 1, 1, 1};
    for (unsigned mask = 0; mask < (1U << y.size()); ++mask) {
        BitVector bits(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (mask >> i & 1U) bits.set(i);
        }
        const bool one_class = mask == 0b0000111U || mask == 0b1111000U;
        const double q = normalize_chi2(chi2(contingency(bits, y, 2)), y.size());
        CHECK((std::abs(q - 1.0) < 1e-12) == one_class);
    }
}

TEST_CASE("score_pattern chains the stages") {
    const auto s = score_pattern(BitVector::from_string("1100"), kAABB, 2, 0.5);
    CHECK(s.raw_chi2 == doctest::Approx(4.0));
    CHECK(s.normalized == 1.0);
    CHECK(s.scaled == 1.0);
}
