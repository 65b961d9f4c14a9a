#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "ps2c/errors.hpp"
#include "ps2c/pattern_index.hpp"
#include "ps2c/random.hpp"

using namespace ps2c;

namespace {

PatternIndex index_of(std::vector<std::string> strings, int l_max) {
    return PatternIndex::build(DiscretizedDataset{SaxParams{4, 1}, std::move(strings)}, l_max);
}

std::set<std::string> as_set(const std::vector<std::string_view>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("two identical strings") {
    const auto idx = index_of({"ab", "ab"}, 2);
    CHECK(as_set(idx.distinct_patterns(2)) == std::set<std::string>{"ab"});
    CHECK(idx.presence_vector("ab").bits.to_string() == "11");
    CHECK(idx.first_occurrence("ab") == Occurrence{0, 0});
}

TEST_CASE("abc / bcd") {
    const auto idx = index_of({"abc", "bcd"}, 3);
    CHECK(as_set(idx.distinct_patterns(2)) == std::set<std::string>{"ab", "bc", "cd"});
    CHECK(idx.presence_vector("ab").bits.to_string() == "10");
    CHECK(idx.presence_vector("bc").bits.to_string() == "11");
    CHECK(idx.presence_vector("cd").bits.to_string() == "01");
    CHECK(as_set(idx.distinct_patterns(3)) == std::set<std::string>{"abc", "bcd"});
    CHECK(idx.presence_vector("abc").bits.to_string() == "10");
    CHECK(idx.presence_vector("bcd").bits.to_string() == "01");
    CHECK(idx.first_occurrence("bc") == Occurrence{0, 1});
    CHECK(idx.first_occurrence("bcd") == Occurrence{1, 0});
}

TEST_CASE("repeats deduplicate and keep the earliest offset") {
    const auto idx = index_of({"aaaa"}, 3);
    CHECK(as_set(idx.distinct_patterns(2)) == std::set<std::string>{"aa"});
    CHECK(as_set(idx.distinct_patterns(3)) == std::set<std::string>{"aaa"});
    CHECK(idx.first_occurrence("aaa") == Occurrence{0, 0});
    CHECK(index_of({"abab"}, 2).first_occurrence("ab") == Occurrence{0, 0});
}

TEST_CASE("lengths beyond every string yield nothing") {
    const auto idx = index_of({"ab"}, 5);
    CHECK(as_set(idx.distinct_patterns(2)) == std::set<std::string>{"ab"});
    CHECK(idx.distinct_patterns(4).empty());
    CHECK_THROWS_AS(idx.distinct_patterns(1), InvalidArgument);
    CHECK_THROWS_AS(idx.distinct_patterns(6), InvalidArgument);
}

TEST_CASE("unknown patterns") {
    const auto idx = index_of({"abc", "bcd"}, 3);
    const auto miss = idx.presence_vector("dd");
    CHECK_FALSE(miss.indexed);
    CHECK(miss.bits.to_string() == "00");
    CHECK(idx.presence_vector("ab").indexed);
    CHECK_THROWS_AS(idx.first_occurrence("dd"), InvalidArgument);
    CHECK_THROWS_AS(idx.first_occurrence("abcd"), InvalidArgument);
}

TEST_CASE("build preconditions") {
    CHECK_THROWS_AS(index_of({"ab"}, 1), InvalidArgument);
    CHECK_THROWS_AS(index_of({"a", "b"}, 3), InvalidArgument);
    CHECK_NOTHROW(index_of({"a", "bc"}, 3));
}

TEST_CASE("all-distinct string has sum(m - l + 1) patterns") {
    const std::string s = "abcdefghijklmnop";
    for (int l_max = 2; l_max <= 20; ++l_max) {
        const auto idx = index_of({s}, l_max);
        std::size_t expected = 0;
        for (int l = 2; l <= std::min<int>(l_max, s.size()); ++l) expected += s.size() - l + 1;
        CHECK(idx.num_patterns() == expected);
    }
}

TEST_CASE("matches a naive substring scan on random data") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.index(20);
        const int alpha = 2 + static_cast<int>(rng.index(3));
        const int l_max = 2 + static_cast<int>(rng.index(8));
        std::vector<std::string> strings(n);
        for (auto& s : strings) {
            s.resize(rng.index(31));
            for (auto& c : s) c = static_cast<char>('a' + rng.index(alpha));
        }
        if (std::ranges::none_of(strings, [](const auto& s) { return s.size() >= 2; })) strings[0] = "ab";

        const auto idx = index_of(strings, l_max);
        const auto expected = oracle::enumerate_substrings(strings, l_max);
        std::size_t seen = 0;
        for (int l = 2; l <= l_max; ++l) {
            for (auto p : idx.distinct_patterns(l)) {
                ++seen;
                const auto it = expected.find(std::string(p));
                REQUIRE(it != expected.end());
                const auto bits = idx.presence_vector(p).bits;
                for (std::size_t i = 0; i < n; ++i) CHECK(bits.test(i) == it->second.presence[i]);
                CHECK(idx.first_occurrence(p) == Occurrence{it->second.first_instance, it->second.first_offset});
            }
        }
        CHECK(seen == expected.size());
    }
}
