#include "ps2c/quality.hpp"

#include <algorithm>
#include <cmath>

#include "ps2c/errors.hpp"

namespace ps2c {

std::vector<std::size_t> class_sizes(std::span<const int> class_ids, std::size_t num_classes) {
    std::vector<std::size_t> sizes(num_classes, 0);
    for (int c : class_ids) {
        if (c < 0 || static_cast<std::size_t>(c) >= num_classes) throw InvalidArgument("class id out of range");
        ++sizes[c];
    }
    return sizes;
}

ContingencyTable contingency(BitSpan presence, std::span<const int> class_ids,
                             std::span<const std::size_t> sizes) {
    if (presence.size() != class_ids.size()) throw InvalidArgument("presence vector and labels differ in length");
    ContingencyTable t;
    t.present.assign(sizes.size(), 0);
    t.absent.assign(sizes.size(), 0);
    presence.for_each_set([&](std::size_t i) { ++t.present[class_ids[i]]; });
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        t.absent[c] = sizes[c] - t.present[c];
        t.total_present += t.present[c];
        t.total_absent += t.absent[c];
    }
    t.n = class_ids.size();
    return t;
}

ContingencyTable contingency(BitSpan presence, std::span<const int> class_ids, std::size_t num_classes) {
    if (presence.size() != class_ids.size()) throw InvalidArgument("presence vector and labels differ in length");
    return contingency(presence, class_ids, class_sizes(class_ids, num_classes));
}

double chi2(const ContingencyTable& table) {
    if (table.n == 0 || table.num_classes() == 0) throw InvalidArgument("empty contingency table");
    const double n = static_cast<double>(table.n);
    double stat = 0.0;
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
        const double row = static_cast<double>(table.class_size(c));
        const double cells[2][2] = {{static_cast<double>(table.present[c]), row * table.total_present / n},
                                    {static_cast<double>(table.absent[c]), row * table.total_absent / n}};
        for (const auto& [observed, expected] : cells) {
            if (expected > 0.0) stat += (observed - expected) * (observed - expected) / expected;
        }
    }
    return stat;
}

double normalize_chi2(double raw, std::size_t n) {
    if (n == 0) throw InvalidArgument("normalization needs n > 0");
    return std::clamp(raw / static_cast<double>(n), 0.0, 1.0);
}

double scale_quality(double q, double tau) {
    if (!(tau > 0.0)) throw InvalidArgument("temperature must be > 0");
    if (q < 0.0 || q > 1.0) throw InvalidArgument("quality must lie in [0, 1]");
    if (q == 0.0 || q == 1.0) return q;
    return std::pow(q, 1.0 / tau);
}

QualityScore score_pattern(BitSpan presence, std::span<const int> class_ids, std::size_t num_classes,
                           double tau) {
    QualityScore s;
    s.raw_chi2 = chi2(contingency(presence, class_ids, num_classes));
    s.normalized = normalize_chi2(s.raw_chi2, class_ids.size());
    s.scaled = scale_quality(s.normalized, tau);
    return s;
}

}  // namespace ps2c
