#include "cxr/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cxr/csv.hpp"
#include "cxr/pgm.hpp"
#include "cxr/rng.hpp"

namespace cxr::synth {

namespace {

// Scene intensities (8-bit). Chosen so that lung + nodule + rib + noise can
// never clip at 255, keeping the original/bse difference exact on rib pixels.
constexpr std::uint16_t kBackground = 24;
constexpr std::uint16_t kLungField = 88;

struct LungGeometry {
    double cx_left, cx_right, cy;
    double semi_a, semi_b;  // ellipse semi-axes, already scaled
};

LungGeometry geometry(int side, double lung_scale) {
    LungGeometry g;
    g.cx_left = 0.30 * side;
    g.cx_right = 0.70 * side;
    g.cy = 0.52 * side;
    g.semi_a = 0.17 * side * lung_scale;
    g.semi_b = 0.36 * side * lung_scale;
    return g;
}

bool inside_lungs(const LungGeometry& g, double x, double y) {
    const auto in_ellipse = [&](double cx) {
        const double dx = (x - cx) / g.semi_a;
        const double dy = (y - g.cy) / g.semi_b;
        return dx * dx + dy * dy <= 1.0;
    };
    return in_ellipse(g.cx_left) || in_ellipse(g.cx_right);
}

std::uint16_t clamp8(int v) {
    return static_cast<std::uint16_t>(std::clamp(v, 0, 255));
}

int uniform_int(std::mt19937_64& gen, int lo, int hi) {
    return lo + static_cast<int>(rng::below(gen, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

Phantom generate_phantom(const PhantomParams& params) {
    if (params.side <= 0 || params.lung_scale <= 0.0 || params.lung_scale > 1.0) {
        throw std::invalid_argument("invalid phantom geometry");
    }
    const int side = params.side;
    const LungGeometry g = geometry(side, params.lung_scale);

    Phantom ph;
    ph.lung_mask = BinaryMask(side, side);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            ph.lung_mask.at(y, x) = inside_lungs(g, x + 0.5, y + 0.5) ? 1 : 0;
        }
    }

    if (params.nodule) {
        const NoduleSpec& n = *params.nodule;
        if (n.x - n.radius < 0 || n.x + n.radius >= side || n.y - n.radius < 0 ||
            n.y + n.radius >= side) {
            throw std::invalid_argument("nodule disc outside the image");
        }
        if (!point_in_mask(ph.lung_mask, n.x, n.y)) {
            throw std::invalid_argument("nodule centre outside the lung fields");
        }
    }

    // Base scene: torso + lungs + optional nodule + noise. Ribs go on top of
    // this in the original only, so original == bse wherever there is no rib.
    std::mt19937_64 gen(params.seed);
    ImageGrid base(side, side, 8);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            int v = ph.lung_mask.at(y, x) ? kLungField : kBackground;
            if (params.noise_amplitude > 0) {
                v += uniform_int(gen, -static_cast<int>(params.noise_amplitude),
                                 static_cast<int>(params.noise_amplitude));
            }
            base.at(y, x) = clamp8(v);
        }
    }
    if (params.nodule) {
        const NoduleSpec& n = *params.nodule;
        for (int y = n.y - n.radius; y <= n.y + n.radius; ++y) {
            for (int x = n.x - n.radius; x <= n.x + n.radius; ++x) {
                const double dx = x - n.x;
                const double dy = y - n.y;
                if (dx * dx + dy * dy <= static_cast<double>(n.radius) * n.radius) {
                    base.at(y, x) = clamp8(base.at(y, x) + n.contrast);
                }
            }
        }
    }

    ph.bse = base;
    ph.original = base;
    ph.rib_mask = BinaryMask(side, side);
    if (params.bone_count > 0 && params.bone_contrast > 0) {
        const int thickness = std::max(1, side / 64);
        const int x_lo = static_cast<int>(std::lround(0.08 * side));
        const int x_hi = static_cast<int>(std::lround(0.92 * side));
        const double span = 2.0 * g.semi_b;
        for (int i = 0; i < params.bone_count; ++i) {
            const double band_y = g.cy - g.semi_b + (i + 0.5) * span / params.bone_count;
            const int y0 = static_cast<int>(std::lround(band_y)) - thickness / 2;
            for (int y = y0; y < y0 + thickness; ++y) {
                if (y < 0 || y >= side) continue;
                for (int x = x_lo; x < x_hi; ++x) {
                    ph.original.at(y, x) = clamp8(ph.original.at(y, x) + params.bone_contrast);
                    if (ph.lung_mask.at(y, x)) ph.rib_mask.at(y, x) = 1;
                }
            }
        }
    }

    ClinicalRecord& rec = ph.record;
    rec.case_id = "PHANTOM";
    rec.has_nodule = params.nodule.has_value();
    if (params.nodule) {
        rec.nodule_x = params.nodule->x;
        rec.nodule_y = params.nodule->y;
        rec.size_mm = 2.0 * params.nodule->radius;
        rec.subtlety = std::clamp(params.nodule->contrast / 16, 1, 5);
        rec.malignant = rng::below(gen, 2) == 1;
    }
    rec.gender = rng::below(gen, 2) == 1 ? Gender::female : Gender::male;
    rec.age = static_cast<double>(20 + uniform_int(gen, 0, 60));
    return ph;
}

Corpus generate_corpus(int n, double nodule_fraction, double outlier_fraction,
                       std::uint64_t seed, const CorpusOptions& options) {
    if (n <= 0) throw std::invalid_argument("corpus size must be positive");
    if (nodule_fraction < 0 || nodule_fraction > 1 || outlier_fraction < 0 ||
        outlier_fraction > 1) {
        throw std::invalid_argument("fractions must be in [0, 1]");
    }
    const int n_nodule = static_cast<int>(std::llround(nodule_fraction * n));
    const int n_outlier = static_cast<int>(std::llround(outlier_fraction * n));

    std::mt19937_64 corpus_gen(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng::shuffle(order, corpus_gen);
    std::vector<bool> has_nodule(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n_nodule; ++i) has_nodule[static_cast<std::size_t>(order[i])] = true;
    std::iota(order.begin(), order.end(), 0);
    rng::shuffle(order, corpus_gen);
    std::vector<bool> is_outlier(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n_outlier; ++i) is_outlier[static_cast<std::size_t>(order[i])] = true;

    int id_width = 4;
    for (int v = n; v >= 10000; v /= 10) ++id_width;

    Corpus corpus;
    corpus.cases.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Parameters come from a per-case stream so cases can be generated in
        // any order (or in parallel) with identical results.
        std::mt19937_64 param_gen((seed + static_cast<std::uint64_t>(i)) ^
                                  0x9E3779B97F4A7C15ULL);
        PhantomParams p;
        p.side = options.side;
        p.seed = seed + static_cast<std::uint64_t>(i);
        p.noise_amplitude = options.noise_amplitude;
        const auto& scale_range = is_outlier[static_cast<std::size_t>(i)]
                                      ? options.outlier_scale
                                      : options.normal_scale;
        p.lung_scale = rng::uniform(param_gen, scale_range.first, scale_range.second);
        p.bone_count = uniform_int(param_gen, options.bone_count.first, options.bone_count.second);
        p.bone_contrast = static_cast<std::uint16_t>(
            uniform_int(param_gen, options.bone_contrast.first, options.bone_contrast.second));
        if (has_nodule[static_cast<std::size_t>(i)]) {
            const LungGeometry g = geometry(p.side, p.lung_scale);
            NoduleSpec spec;
            const double r_frac = rng::uniform(param_gen, options.nodule_radius_frac.first,
                                               options.nodule_radius_frac.second);
            int radius = std::max(1, static_cast<int>(std::lround(r_frac * p.side)));
            const int r_max =
                std::max(1, static_cast<int>(std::floor(std::min(g.semi_a, g.semi_b))) - 2);
            spec.radius = std::min(radius, r_max);
            spec.contrast = static_cast<std::uint16_t>(uniform_int(
                param_gen, options.nodule_contrast.first, options.nodule_contrast.second));
            const double cx = rng::below(param_gen, 2) ? g.cx_right : g.cx_left;
            const double theta = rng::uniform(param_gen, 0.0, 2.0 * std::numbers::pi);
            const double rho = 0.8 * std::sqrt(rng::uniform01(param_gen));
            const double ax = std::max(0.0, g.semi_a - spec.radius - 1);
            const double ay = std::max(0.0, g.semi_b - spec.radius - 1);
            spec.x = static_cast<int>(std::lround(cx + rho * std::cos(theta) * ax));
            spec.y = static_cast<int>(std::lround(g.cy + rho * std::sin(theta) * ay));
            p.nodule = spec;
        }

        SynthCase c;
        std::ostringstream id;
        id << "SYN";
        std::string digits = std::to_string(i + 1);
        id << std::string(static_cast<std::size_t>(id_width) - std::min<std::size_t>(
                              static_cast<std::size_t>(id_width), digits.size()),
                          '0')
           << digits;
        c.case_id = id.str();
        c.planted_outlier = is_outlier[static_cast<std::size_t>(i)];
        c.phantom = generate_phantom(p);
        c.phantom.record.case_id = c.case_id;
        corpus.cases.push_back(std::move(c));
    }
    return corpus;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir / "originals");
    fs::create_directories(out_dir / "bse");
    fs::create_directories(out_dir / "masks");

    std::vector<ClinicalRecord> records;
    csv::Table manifest;
    manifest.header = {"case_id", "label", "path"};
    for (const SynthCase& c : corpus.cases) {
        const std::string file = c.case_id + ".pgm";
        pgm::write_image(out_dir / "originals" / file, c.phantom.original);
        pgm::write_image(out_dir / "bse" / file, c.phantom.bse);
        pgm::write_mask(out_dir / "masks" / file, c.phantom.lung_mask);
        records.push_back(c.phantom.record);
        manifest.rows.push_back(
            {c.case_id, c.phantom.record.has_nodule ? "nodule" : "normal", "originals/" + file});
    }
    write_metadata_csv(out_dir / "metadata.csv", records);
    csv::write_file(out_dir / "manifest.csv", manifest);

    std::ofstream truth(out_dir / "outlier_truth.txt");
    for (const std::string& id : planted_outlier_ids(corpus)) {
        truth << id << "\n";
    }
}

std::vector<std::string> planted_outlier_ids(const Corpus& corpus) {
    std::vector<std::string> ids;
    for (const SynthCase& c : corpus.cases) {
        if (c.planted_outlier) ids.push_back(c.case_id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace cxr::synth
