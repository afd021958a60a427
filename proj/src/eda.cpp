#include "cxr/eda.hpp"

#include <cmath>
#include <stdexcept>

namespace cxr::eda {

namespace {

std::size_t bin_index(double value, double width) {
    return static_cast<std::size_t>(std::floor(value / width));
}

}  // namespace

BalanceReport balance_report(const std::vector<ClinicalRecord>& records) {
    BalanceReport report;
    for (const ClinicalRecord& r : records) {
        if (r.has_nodule) ++report.n_nodule;
        else ++report.n_normal;
    }
    report.total = records.size();
    return report;
}

Histogram size_histogram(const std::vector<ClinicalRecord>& records, double bin_width) {
    if (bin_width <= 0) throw std::invalid_argument("bin width must be positive");
    double max_size = -1.0;
    for (const ClinicalRecord& r : records) {
        if (r.has_nodule && r.size_mm) max_size = std::max(max_size, *r.size_mm);
    }
    const std::size_t n_bins = max_size < 0 ? 1 : bin_index(max_size, bin_width) + 1;
    Histogram hist;
    hist.counts.assign(n_bins, 0);
    hist.bin_edges.resize(n_bins + 1);
    for (std::size_t i = 0; i <= n_bins; ++i) {
        hist.bin_edges[i] = static_cast<double>(i) * bin_width;
    }
    for (const ClinicalRecord& r : records) {
        if (r.has_nodule && r.size_mm) ++hist.counts[bin_index(*r.size_mm, bin_width)];
    }
    return hist;
}

std::array<std::size_t, 5> subtlety_distribution(const std::vector<ClinicalRecord>& records) {
    std::array<std::size_t, 5> counts{};
    for (const ClinicalRecord& r : records) {
        if (r.has_nodule && r.subtlety) ++counts[static_cast<std::size_t>(*r.subtlety - 1)];
    }
    return counts;
}

std::map<CombinedKey, std::size_t> combined_distribution(
    const std::vector<ClinicalRecord>& records, double size_bin_width) {
    if (size_bin_width <= 0) throw std::invalid_argument("bin width must be positive");
    std::map<CombinedKey, std::size_t> counts;
    for (const ClinicalRecord& r : records) {
        if (!r.has_nodule || r.gender == Gender::unknown || !r.size_mm || !r.subtlety) continue;
        CombinedKey key{r.gender, bin_index(*r.size_mm, size_bin_width), *r.subtlety};
        ++counts[key];
    }
    return counts;
}

std::vector<LocationRow> location_table(const std::vector<ClinicalRecord>& records) {
    std::vector<LocationRow> rows;
    for (const ClinicalRecord& r : records) {
        if (!r.has_nodule || !r.nodule_x || !r.nodule_y) continue;
        rows.push_back({r.case_id, *r.nodule_x, *r.nodule_y, "nodule"});
    }
    return rows;
}

}  // namespace cxr::eda
