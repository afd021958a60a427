#include "cxr/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cxr::prep {

namespace {

std::map<std::string, std::string> label_map(const std::vector<ClinicalRecord>& records) {
    std::map<std::string, std::string> labels;
    for (const ClinicalRecord& r : records) {
        labels[r.case_id] = r.has_nodule ? "nodule" : "normal";
    }
    return labels;
}

template <typename Map>
std::set<std::string> id_set(const Map& m) {
    std::set<std::string> ids;
    for (const auto& [id, value] : m) ids.insert(id);
    return ids;
}

void require_same_ids(const std::set<std::string>& a, const std::set<std::string>& b,
                      const std::string& what) {
    if (a != b) throw std::invalid_argument("case id mismatch between " + what);
}

}  // namespace

Variant parse_variant(const std::string& tag) {
    std::string t = tag;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "v01") return Variant::V01;
    if (t == "v02") return Variant::V02;
    if (t == "v03") return Variant::V03;
    if (t == "v04") return Variant::V04;
    if (t == "v05") return Variant::V05;
    throw std::invalid_argument("unknown variant: " + tag);
}

std::string variant_tag(Variant v) {
    switch (v) {
        case Variant::V01: return "v01";
        case Variant::V02: return "v02";
        case Variant::V03: return "v03";
        case Variant::V04: return "v04";
        case Variant::V05: return "v05";
    }
    return "v??";
}

BinaryMask derive_bone_mask(const ImageGrid& original, const ImageGrid& bse,
                            const BinaryMask& lung_mask, std::uint16_t threshold) {
    if (original.width != bse.width || original.height != bse.height ||
        original.width != lung_mask.width || original.height != lung_mask.height) {
        throw std::invalid_argument("derive_bone_mask dimension mismatch");
    }
    if (threshold == 0) throw std::invalid_argument("bone threshold must be positive");
    BinaryMask bone(original.width, original.height);
    for (std::size_t i = 0; i < bone.bits.size(); ++i) {
        const int diff = std::max(0, static_cast<int>(original.pixels[i]) -
                                         static_cast<int>(bse.pixels[i]));
        bone.bits[i] = (diff >= threshold && lung_mask.bits[i]) ? 1 : 0;
    }
    return bone;
}

ProcessedDataset build_variant(Variant variant, const ImageSet& originals,
                               const ImageSet& bse_images, const MaskSet& lung_masks,
                               const std::vector<std::string>& exclusion_list,
                               const std::vector<ClinicalRecord>& records) {
    const bool needs_originals = variant == Variant::V01 || variant == Variant::V03;
    const bool needs_bse = variant == Variant::V02 || variant == Variant::V04 ||
                           variant == Variant::V05;
    const bool needs_masks = variant == Variant::V03 || variant == Variant::V04 ||
                             variant == Variant::V05;

    if (needs_originals && originals.empty())
        throw std::invalid_argument(variant_tag(variant) + " requires original images");
    if (needs_bse && bse_images.empty())
        throw std::invalid_argument(variant_tag(variant) + " requires bone-shadow-excluded images");
    if (needs_masks && lung_masks.empty())
        throw std::invalid_argument(variant_tag(variant) + " requires lung masks");
    if (variant == Variant::V05 && exclusion_list.empty())
        throw std::invalid_argument("v05 requires an exclusion list");

    const ImageSet& base = needs_bse ? bse_images : originals;
    if (needs_masks) {
        require_same_ids(id_set(base), id_set(lung_masks), "images and masks");
    }

    const auto labels = label_map(records);
    ProcessedDataset out;
    out.variant = variant;

    std::set<std::string> excluded;
    if (variant == Variant::V05) {
        for (const std::string& id : exclusion_list) {
            if (!base.count(id)) {
                throw std::invalid_argument("exclusion id not found: " + id);
            }
            excluded.insert(id);
        }
        out.excluded_ids.assign(excluded.begin(), excluded.end());
    }

    for (const auto& [id, image] : base) {
        if (excluded.count(id)) continue;
        auto label = labels.find(id);
        if (label == labels.end()) {
            throw std::invalid_argument("no clinical record for case " + id);
        }
        Sample sample;
        sample.case_id = id;
        sample.label = label->second;
        if (needs_masks) {
            sample.image = apply_mask(image, lung_masks.at(id));
        } else {
            sample.image = image;
        }
        out.samples.push_back(std::move(sample));
    }
    return out;
}

std::vector<std::string> universal_mask_coverage(const MaskSet& masks,
                                                 const std::vector<ClinicalRecord>& records,
                                                 MaskCombine op, int coord_width,
                                                 int coord_height) {
    if (masks.empty()) throw std::invalid_argument("coverage requires at least one mask");
    std::vector<BinaryMask> list;
    list.reserve(masks.size());
    for (const auto& [id, mask] : masks) list.push_back(mask);
    const BinaryMask combined = combine_masks(list, op);

    std::vector<std::string> uncovered;
    for (const ClinicalRecord& r : records) {
        if (!r.has_nodule || !r.nodule_x || !r.nodule_y) continue;
        const int x = *r.nodule_x;
        const int y = *r.nodule_y;
        if (x < 0 || x >= coord_width || y < 0 || y >= coord_height) {
            throw std::invalid_argument(r.case_id + ": nodule coordinates outside the " +
                                        std::to_string(coord_width) + "x" +
                                        std::to_string(coord_height) + " frame");
        }
        const int sx = static_cast<int>(static_cast<long long>(x) * combined.width / coord_width);
        const int sy = static_cast<int>(static_cast<long long>(y) * combined.height / coord_height);
        if (!point_in_mask(combined, sx, sy)) uncovered.push_back(r.case_id);
    }
    std::sort(uncovered.begin(), uncovered.end());
    return uncovered;
}

double mask_dissimilarity(const BinaryMask& a, const BinaryMask& b) {
    if (a.width != b.width || a.height != b.height) {
        throw std::invalid_argument("mask_dissimilarity dimension mismatch");
    }
    std::size_t inter = 0;
    std::size_t uni = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) {
        inter += a.bits[i] & b.bits[i];
        uni += a.bits[i] | b.bits[i];
    }
    if (uni == 0) return 0.0;
    return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

std::size_t exclusion_count(std::size_t count, double fraction) {
    if (fraction < 0.0 || fraction >= 1.0) {
        throw std::invalid_argument("exclusion fraction must be in [0, 1)");
    }
    // Small epsilon so that fractions like 0.05 * 247 floor as intended
    // despite binary representation fuzz.
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(count) + 1e-9));
}

}  // namespace cxr::prep
