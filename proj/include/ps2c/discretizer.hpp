#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ps2c/dataset.hpp"

namespace ps2c {

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 26;

struct SaxParams {
    int alpha = 4;  ///< alphabet size, symbols 'a'..
    int omega = 1;  ///< PAA window

    void validate() const;
    friend bool operator==(const SaxParams&, const SaxParams&) = default;
    friend auto operator<=>(const SaxParams&, const SaxParams&) = default;
};

/// Standard normal quantile, |error| < 1e-12 over (0, 1).
double normal_quantile(double p);

/// The alpha-1 equiprobable N(0,1) cut points, ascending. Cached per alphabet.
std::span<const double> compute_breakpoints(int alpha);

/// Number of PAA segments for a series of length n: n/omega rounded half away
/// from zero.
std::size_t paa_length(std::size_t n, int omega);

/// Piecewise aggregate approximation. Segment i covers [i*omega, (i+1)*omega)
/// except the last, which covers everything from (p-1)*omega to the end.
std::vector<double> paa(std::span<const double> series, int omega);

/// Symbol index j for a PAA value: beta_{j-1} <= v < beta_j.
int symbol_index(double value, std::span<const double> breakpoints);

/// SAX word over 'a'.. for an already z-normalized series.
std::string sax(std::span<const double> series, const SaxParams& params);
inline std::string sax(const TimeSeries& series, const SaxParams& params) { return sax(series.values(), params); }

struct DiscretizedDataset {
    SaxParams params;
    std::vector<std::string> strings;  ///< index-aligned with the source dataset
};

DiscretizedDataset discretize(const LabeledDataset& normalized, const SaxParams& params);

/// "label<TAB>word" per instance.
void write_discretized(std::ostream& out, const LabeledDataset& source, const DiscretizedDataset& words);

}  // namespace ps2c
