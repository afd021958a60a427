#pragma once

#include <map>
#include <string>
#include <vector>

#include "cxr/clinical.hpp"
#include "cxr/image.hpp"

namespace cxr::prep {

/// The five dataset variants: original, bone-shadow-excluded, segmented
/// original, segmented bone-excluded, and segmented bone-excluded with
/// embedding outliers removed.
enum class Variant { V01, V02, V03, V04, V05 };

Variant parse_variant(const std::string& tag);  // accepts "v01".."v05" / "V01".."V05"
std::string variant_tag(Variant v);

struct Sample {
    std::string case_id;
    ImageGrid image;
    std::string label;  // "nodule" or "normal"
};

struct ProcessedDataset {
    Variant variant = Variant::V01;
    std::vector<Sample> samples;              // case_id-sorted
    std::vector<std::string> excluded_ids;    // empty except V05
};

using ImageSet = std::map<std::string, ImageGrid>;
using MaskSet = std::map<std::string, BinaryMask>;

/// Bone-shadow mask: bit = 1 iff the intensity lost in the bone-shadow-
/// excluded image, clamped at zero, reaches the threshold inside the lung
/// field.
BinaryMask derive_bone_mask(const ImageGrid& original, const ImageGrid& bse,
                            const BinaryMask& lung_mask, std::uint16_t threshold);

/// Assembles one dataset variant. Only the collections a variant needs are
/// consulted; their case ids must agree exactly and every case needs a
/// clinical record for its label.
ProcessedDataset build_variant(Variant variant, const ImageSet& originals,
                               const ImageSet& bse_images, const MaskSet& lung_masks,
                               const std::vector<std::string>& exclusion_list,
                               const std::vector<ClinicalRecord>& records);

/// Combines all masks with the given op and reports the nodule cases whose
/// coordinates fall outside the combined mask. Coordinates live in the
/// coord_width x coord_height frame and are scaled proportionally when the
/// masks use a different resolution.
std::vector<std::string> universal_mask_coverage(const MaskSet& masks,
                                                 const std::vector<ClinicalRecord>& records,
                                                 MaskCombine op, int coord_width,
                                                 int coord_height);

/// Jaccard distance 1 - |a AND b| / |a OR b|; defined 0 when both masks are
/// empty.
double mask_dissimilarity(const BinaryMask& a, const BinaryMask& b);

/// floor(fraction * count), the exclusion budget used for V05.
std::size_t exclusion_count(std::size_t count, double fraction);

}  // namespace cxr::prep
