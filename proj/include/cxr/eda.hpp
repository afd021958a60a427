#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cxr/clinical.hpp"

namespace cxr::eda {

struct BalanceReport {
    std::size_t n_nodule = 0;
    std::size_t n_normal = 0;
    std::size_t total = 0;
};

BalanceReport balance_report(const std::vector<ClinicalRecord>& records);

/// Half-open bins [edge[i], edge[i+1]); a value on a boundary counts in the
/// higher bin.
struct Histogram {
    std::vector<double> bin_edges;
    std::vector<std::size_t> counts;
};

/// Nodule-size histogram with bins [0,w), [w,2w), ... covering the largest
/// size present. Records without a nodule size are skipped. With no sizes at
/// all the result is a single empty bin.
Histogram size_histogram(const std::vector<ClinicalRecord>& records, double bin_width);

/// Counts per subtlety degree 1..5; absent degrees report 0.
std::array<std::size_t, 5> subtlety_distribution(const std::vector<ClinicalRecord>& records);

struct CombinedKey {
    Gender gender = Gender::unknown;
    std::size_t size_bin = 0;  // bin [size_bin*w, (size_bin+1)*w)
    int subtlety = 0;

    auto operator<=>(const CombinedKey&) const = default;
};

/// Joint gender / size-bin / subtlety counts over nodule records that carry
/// all three fields. Zero-count keys are omitted.
std::map<CombinedKey, std::size_t> combined_distribution(
    const std::vector<ClinicalRecord>& records, double size_bin_width);

struct LocationRow {
    std::string case_id;
    int x = 0;
    int y = 0;
    std::string label;
};

/// One row per nodule record with coordinates, passed through unchanged.
std::vector<LocationRow> location_table(const std::vector<ClinicalRecord>& records);

}  // namespace cxr::eda
