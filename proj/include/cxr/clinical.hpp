#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace cxr {

enum class Gender { male, female, unknown };

Gender parse_gender(const std::string& text);
std::string gender_name(Gender g);

/// Per-case clinical metadata. Coordinates are pixels in the frame of the
/// full-resolution radiograph; size_mm is the reported nodule diameter.
/// Nodule fields are only allowed on nodule cases; on nodule cases an
/// individual field may still be missing and is then skipped by whichever
/// analysis needs it.
struct ClinicalRecord {
    std::string case_id;
    bool has_nodule = false;
    std::optional<int> nodule_x;
    std::optional<int> nodule_y;
    std::optional<double> size_mm;
    std::optional<int> subtlety;  // 1..5
    std::optional<bool> malignant;
    Gender gender = Gender::unknown;
    std::optional<double> age;
};

void validate(const ClinicalRecord& record);

/// Metadata CSV with header
///   case_id,has_nodule,x,y,size_mm,subtlety,malignant,gender,age
/// An empty cell means the field is missing.
std::vector<ClinicalRecord> read_metadata_csv(const std::filesystem::path& path);
void write_metadata_csv(const std::filesystem::path& path,
                        const std::vector<ClinicalRecord>& records);

/// Parses the whitespace-separated clinical listings that ship with the
/// radiograph archives: one file for nodule cases
///   <file> <subtlety> <size_mm> <age> <sex> <x> <y> <malignant|benign> ...
/// and one for normals
///   <file> <age> <sex> ...
/// '?' or missing trailing fields become absent values. Case ids are the
/// uppercased file stems.
std::vector<ClinicalRecord> parse_clinical_listing(std::istream& nodule_listing,
                                                   std::istream& normal_listing);

}  // namespace cxr
