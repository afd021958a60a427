#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cxr/clinical.hpp"
#include "cxr/image.hpp"

namespace cxr::synth {

struct NoduleSpec {
    int x = 0;
    int y = 0;
    int radius = 4;
    std::uint16_t contrast = 60;
};

/// Parameters of one chest phantom: two elliptical lung fields on a flat
/// torso, horizontal rib bands, an optional bright nodule disc, and
/// per-pixel noise.
struct PhantomParams {
    int side = 256;
    double lung_scale = 0.9;  // in (0, 1]; scales both ellipse axes
    std::optional<NoduleSpec> nodule;
    int bone_count = 4;
    std::uint16_t bone_contrast = 60;
    std::uint16_t noise_amplitude = 8;
    std::uint64_t seed = 1;
};

struct Phantom {
    ImageGrid original;   // with rib bands
    ImageGrid bse;        // same scene without rib bands
    BinaryMask lung_mask; // exact ellipse union
    BinaryMask rib_mask;  // generator truth: rib pixels inside the lung field
    ClinicalRecord record;
};

/// Deterministic per seed. The nodule, when present, must sit inside a lung
/// field and its disc inside the image.
Phantom generate_phantom(const PhantomParams& params);

struct SynthCase {
    std::string case_id;
    Phantom phantom;
    bool planted_outlier = false;
};

struct Corpus {
    std::vector<SynthCase> cases;  // case_id-sorted by construction
};

struct CorpusOptions {
    int side = 256;
    std::pair<double, double> normal_scale{0.8, 1.0};
    std::pair<double, double> outlier_scale{0.3, 0.55};
    std::uint16_t noise_amplitude = 8;
    std::pair<int, int> bone_count{3, 5};
    std::pair<int, int> bone_contrast{48, 72};
    std::pair<double, double> nodule_radius_frac{0.025, 0.045};  // of side
    std::pair<int, int> nodule_contrast{40, 80};
};

/// n cases with exactly round(nodule_fraction * n) nodules and
/// round(outlier_fraction * n) abnormally small-lunged cases. Case i derives
/// its own seed as corpus seed + i, so generation order never matters.
Corpus generate_corpus(int n, double nodule_fraction, double outlier_fraction,
                       std::uint64_t seed, const CorpusOptions& options = {});

/// Writes originals/, bse/, masks/ PGM trees plus metadata.csv, manifest.csv
/// (case_id,label,path) and outlier_truth.txt under out_dir.
void write_corpus(const Corpus& corpus, const std::filesystem::path& out_dir);

std::vector<std::string> planted_outlier_ids(const Corpus& corpus);

}  // namespace cxr::synth
