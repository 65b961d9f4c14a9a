#include "ps2c/discretizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>

#include "ps2c/errors.hpp"

namespace ps2c {

void SaxParams::validate() const {
    if (alpha < kMinAlphabet || alpha > kMaxAlphabet) {
        throw InvalidArgument("alphabet size must be in [2, 26], got " + std::to_string(alpha));
    }
    if (omega < 1) throw InvalidArgument("window size must be >= 1, got " + std::to_string(omega));
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("quantile probability must be in (0, 1)");

    // Acklam's rational approximation, then one Halley step against erfc.
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

std::span<const double> compute_breakpoints(int alpha) {
    if (alpha < kMinAlphabet || alpha > kMaxAlphabet) {
        throw InvalidArgument("alphabet size must be in [2, 26], got " + std::to_string(alpha));
    }
    // Built once, thread-safe by static initialization rules.
    static const auto table = [] {
        std::array<std::vector<double>, kMaxAlphabet + 1> t;
        for (int k = kMinAlphabet; k <= kMaxAlphabet; ++k) {
            auto& betas = t[k];
            betas.resize(k - 1);
            for (int i = 1; i < k; ++i) betas[i - 1] = normal_quantile(static_cast<double>(i) / k);
            // Exact symmetry: mirror the lower half onto the upper half.
            for (int i = 0; i < (k - 1) / 2; ++i) betas[k - 2 - i] = -betas[i];
            if (k % 2 == 0) betas[k / 2 - 1] = 0.0;
        }
        return t;
    }();
    return table[alpha];
}

std::size_t paa_length(std::size_t n, int omega) {
    const auto w = static_cast<std::size_t>(omega);
    return (2 * n + w) / (2 * w);
}

std::vector<double> paa(std::span<const double> series, int omega) {
    if (omega < 1) throw InvalidArgument("window size must be >= 1");
    const std::size_t n = series.size();
    const auto w = static_cast<std::size_t>(omega);
    if (n < w) {
        throw InvalidArgument("series length " + std::to_string(n) + " is shorter than window " +
                              std::to_string(omega));
    }
    const std::size_t p = paa_length(n, omega);
    std::vector<double> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        const std::size_t begin = i * w;
        const std::size_t end = (i + 1 == p) ? n : begin + w;
        double sum = 0.0;
        for (std::size_t j = begin; j < end; ++j) sum += series[j];
        out[i] = sum / static_cast<double>(end - begin);
    }
    return out;
}

int symbol_index(double value, std::span<const double> breakpoints) {
    return static_cast<int>(std::upper_bound(breakpoints.begin(), breakpoints.end(), value) - breakpoints.begin());
}

std::string sax(std::span<const double> series, const SaxParams& params) {
    params.validate();
    const auto betas = compute_breakpoints(params.alpha);
    const auto reduced = paa(series, params.omega);
    std::string word(reduced.size(), 'a');
    for (std::size_t i = 0; i < reduced.size(); ++i) word[i] = static_cast<char>('a' + symbol_index(reduced[i], betas));
    return word;
}

DiscretizedDataset discretize(const LabeledDataset& normalized, const SaxParams& params) {
    params.validate();
    DiscretizedDataset out{params, {}};
    out.strings.reserve(normalized.size());
    for (const auto& s : normalized.all_series()) out.strings.push_back(sax(s, params));
    return out;
}

void write_discretized(std::ostream& out, const LabeledDataset& source, const DiscretizedDataset& words) {
    for (std::size_t i = 0; i < words.strings.size(); ++i) out << source.label(i) << '\t' << words.strings[i] << '\n';
}

}  // namespace ps2c
