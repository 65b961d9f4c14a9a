#include <doctest.h>

#include <algorithm>

#include "ps2c/errors.hpp"
#include "ps2c/pattern_index.hpp"
#include "ps2c/pipeline.hpp"
#include "ps2c/quality.hpp"
#include "ps2c/synthgen.hpp"

using namespace ps2c;

TEST_CASE("noise-free instances of a class differ only by the motif offset") {
    SynthSpec spec;
    spec.noise = 0.0;
    spec.per_class = 5;
    const auto d = generate(spec);
    REQUIRE(d.size() == 10);
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d.label(i) == (i % 2 == 0 ? "A" : "B"));
        auto v = d.series(i).values();
        std::vector<double> nonzero;
        std::copy_if(v.begin(), v.end(), std::back_inserter(nonzero), [](double x) { return x != 0.0; });
        auto ref = d.series(i % 2).values();
        std::vector<double> ref_nonzero;
        std::copy_if(ref.begin(), ref.end(), std::back_inserter(ref_nonzero), [](double x) { return x != 0.0; });
        CHECK(nonzero == ref_nonzero);
    }
    // bump is flat at +amplitude, the V dips to -amplitude
    const auto a = d.series(0).values();
    CHECK(std::count(a.begin(), a.end(), 3.0) == 16);
    const auto b = d.series(1).values();
    CHECK(*std::min_element(b.begin(), b.end()) >= -3.0);
    CHECK(*std::max_element(b.begin(), b.end()) == 0.0);
}

TEST_CASE("same seed, same data") {
    SynthSpec spec;
    spec.seed = 17;
    const auto x = generate(spec);
    const auto y = generate(spec);
    CHECK(std::ranges::equal(x.all_series(), y.all_series()));
    CHECK(std::ranges::equal(x.labels(), y.labels()));
    spec.seed = 18;
    CHECK_FALSE(std::ranges::equal(generate(spec).all_series(), x.all_series()));

    const auto split = generate_split(spec, 7);
    CHECK(split.train.size() == 100);
    CHECK(split.test.size() == 14);
    CHECK_FALSE(split.train.series(0) == split.test.series(0));
}

TEST_CASE("invalid specs") {
    const auto bad = [](auto mutate) {
        SynthSpec s;
        mutate(s);
        return s;
    };
    CHECK_THROWS_AS(generate(bad([](SynthSpec& s) { s.per_class = 1; })), InvalidArgument);
    CHECK_THROWS_AS(generate(bad([](SynthSpec& s) { s.motif_length = 128; })), InvalidArgument);
    CHECK_THROWS_AS(generate(bad([](SynthSpec& s) { s.motif_length = 1; })), InvalidArgument);
    CHECK_THROWS_AS(generate(bad([](SynthSpec& s) { s.noise = -1.0; })), InvalidArgument);
}

TEST_CASE("some grid cell finds a pattern with normalized chi2 >= 0.8") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SynthSpec spec;
        spec.seed = seed;
        const auto data = znormalize(generate(spec));
        double best = 0.0;
        for (const auto& params : PipelineConfig{}.cells()) {
            const auto index = PatternIndex::build(discretize(data, params), 20);
            for (int l = 2; l <= 20; ++l) {
                index.for_each_pattern(l, [&](std::string_view, BitSpan bits) {
                    best = std::max(best, score_pattern(bits, data.class_ids(), 2, 1.0).normalized);
                });
            }
        }
        CAPTURE(seed);
        CHECK(best >= 0.8);
    }
}
