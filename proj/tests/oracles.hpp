#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the code paths it checks.

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Phi^{-1}(p) by bisection on the erfc-based CDF.
inline double normal_quantile_bisect(double p) {
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double cdf = 0.5 * std::erfc(-mid / std::numbers::sqrt2);
        (cdf < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct NaivePattern {
    std::vector<bool> presence;
    std::size_t first_instance = 0;
    std::size_t first_offset = 0;
};

/// Every distinct substring of length 2..l_max by brute-force scanning.
inline std::map<std::string, NaivePattern> enumerate_substrings(const std::vector<std::string>& strings, int l_max) {
    std::map<std::string, NaivePattern> out;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        const auto& s = strings[i];
        for (std::size_t len = 2; len <= static_cast<std::size_t>(l_max); ++len) {
            for (std::size_t off = 0; off + len <= s.size(); ++off) {
                const auto sub = s.substr(off, len);
                auto it = out.find(sub);
                if (it == out.end()) {
                    it = out.emplace(sub, NaivePattern{std::vector<bool>(strings.size(), false), i, off}).first;
                }
                it->second.presence[i] = true;
            }
        }
    }
    return out;
}

/// Pearson chi-square from the textbook sum over a classes x 2 table.
inline double chi2(const std::vector<bool>& presence, const std::vector<int>& labels) {
    std::map<int, std::pair<double, double>> cells;  // class -> (present, absent)
    double present_total = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto& c = cells[labels[i]];
        (presence[i] ? c.first : c.second) += 1.0;
        present_total += presence[i] ? 1.0 : 0.0;
    }
    const double n = static_cast<double>(labels.size());
    const double absent_total = n - present_total;
    double stat = 0.0;
    for (const auto& [label, c] : cells) {
        const double row = c.first + c.second;
        const double e_present = row * present_total / n;
        const double e_absent = row * absent_total / n;
        if (e_present > 0) stat += (c.first - e_present) * (c.first - e_present) / e_present;
        if (e_absent > 0) stat += (c.second - e_absent) * (c.second - e_absent) / e_absent;
    }
    return stat;
}

/// Closed form for a 2x2 table: N (ad - bc)^2 / (row1 row2 col1 col2).
inline double chi2_2x2(double a, double b, double c, double d) {
    const double n = a + b + c + d;
    const double den = (a + b) * (c + d) * (a + c) * (b + d);
    if (den == 0.0) return 0.0;
    return n * (a * d - b * c) * (a * d - b * c) / den;
}

/// Full scan, no early abandoning.
inline double min_distance(std::span<const double> series, std::span<const double> shapelet) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t start = 0; start + shapelet.size() <= series.size(); ++start) {
        double sum = 0.0;
        for (std::size_t j = 0; j < shapelet.size(); ++j) {
            sum += (series[start + j] - shapelet[j]) * (series[start + j] - shapelet[j]);
        }
        best = std::min(best, sum);
    }
    return best / static_cast<double>(shapelet.size());
}

}  // namespace oracle
