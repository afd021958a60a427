#include "cxr/clinical.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cxr/csv.hpp"

namespace cxr {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::optional<double> parse_optional_double(const std::string& s) {
    if (s.empty() || s == "?") return std::nullopt;
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<int> parse_optional_int(const std::string& s) {
    if (s.empty() || s == "?") return std::nullopt;
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool parse_bool(const std::string& s) {
    const std::string v = to_lower(s);
    if (v == "1" || v == "true" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "no") return false;
    throw std::invalid_argument("cannot parse boolean: " + s);
}

std::string stem_upper(const std::string& filename) {
    std::string stem = filename;
    if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
    std::transform(stem.begin(), stem.end(), stem.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return stem;
}

}  // namespace

Gender parse_gender(const std::string& text) {
    const std::string v = to_lower(text);
    if (v == "male" || v == "m") return Gender::male;
    if (v == "female" || v == "f") return Gender::female;
    return Gender::unknown;
}

std::string gender_name(Gender g) {
    switch (g) {
        case Gender::male: return "male";
        case Gender::female: return "female";
        case Gender::unknown: return "unknown";
    }
    return "unknown";
}

void validate(const ClinicalRecord& record) {
    if (record.case_id.empty()) {
        throw std::invalid_argument("clinical record without case id");
    }
    if (!record.has_nodule) {
        if (record.nodule_x || record.nodule_y || record.size_mm || record.subtlety ||
            record.malignant) {
            throw std::invalid_argument(record.case_id + ": nodule fields on a normal case");
        }
    }
    if (record.subtlety && (*record.subtlety < 1 || *record.subtlety > 5)) {
        throw std::invalid_argument(record.case_id + ": subtlety outside 1..5");
    }
    if (record.size_mm && *record.size_mm <= 0) {
        throw std::invalid_argument(record.case_id + ": nodule size must be positive");
    }
}

std::vector<ClinicalRecord> read_metadata_csv(const std::filesystem::path& path) {
    const csv::Table table = csv::read_file(path);
    const std::vector<std::string> expected = {"case_id", "has_nodule", "x",      "y",   "size_mm",
                                               "subtlety", "malignant",  "gender", "age"};
    if (table.header != expected) {
        throw std::runtime_error("metadata csv header mismatch in " + path.string());
    }
    std::vector<ClinicalRecord> records;
    records.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        if (row.size() != expected.size()) {
            throw std::runtime_error("metadata csv row with " + std::to_string(row.size()) +
                                     " fields in " + path.string());
        }
        ClinicalRecord r;
        r.case_id = row[0];
        r.has_nodule = parse_bool(row[1]);
        r.nodule_x = parse_optional_int(row[2]);
        r.nodule_y = parse_optional_int(row[3]);
        r.size_mm = parse_optional_double(row[4]);
        r.subtlety = parse_optional_int(row[5]);
        if (!row[6].empty()) r.malignant = parse_bool(row[6]);
        r.gender = parse_gender(row[7]);
        r.age = parse_optional_double(row[8]);
        validate(r);
        records.push_back(std::move(r));
    }
    return records;
}

void write_metadata_csv(const std::filesystem::path& path,
                        const std::vector<ClinicalRecord>& records) {
    csv::Table table;
    table.header = {"case_id", "has_nodule", "x",      "y",   "size_mm",
                    "subtlety", "malignant",  "gender", "age"};
    auto fmt_double = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };
    for (const ClinicalRecord& r : records) {
        std::vector<std::string> row(9);
        row[0] = r.case_id;
        row[1] = r.has_nodule ? "1" : "0";
        if (r.nodule_x) row[2] = std::to_string(*r.nodule_x);
        if (r.nodule_y) row[3] = std::to_string(*r.nodule_y);
        if (r.size_mm) row[4] = fmt_double(*r.size_mm);
        if (r.subtlety) row[5] = std::to_string(*r.subtlety);
        if (r.malignant) row[6] = *r.malignant ? "1" : "0";
        if (r.gender != Gender::unknown) row[7] = gender_name(r.gender);
        if (r.age) row[8] = fmt_double(*r.age);
        table.rows.push_back(std::move(row));
    }
    csv::write_file(path, table);
}

std::vector<ClinicalRecord> parse_clinical_listing(std::istream& nodule_listing,
                                                   std::istream& normal_listing) {
    std::vector<ClinicalRecord> records;
    std::string line;
    while (std::getline(nodule_listing, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        ClinicalRecord r;
        r.case_id = stem_upper(tok[0]);
        r.has_nodule = true;
        if (tok.size() > 1) r.subtlety = parse_optional_int(tok[1]);
        if (tok.size() > 2) r.size_mm = parse_optional_double(tok[2]);
        if (tok.size() > 3) r.age = parse_optional_double(tok[3]);
        if (tok.size() > 4) r.gender = parse_gender(tok[4]);
        if (tok.size() > 5) r.nodule_x = parse_optional_int(tok[5]);
        if (tok.size() > 6) r.nodule_y = parse_optional_int(tok[6]);
        if (tok.size() > 7) {
            const std::string p = to_lower(tok[7]);
            if (p == "malignant") r.malignant = true;
            else if (p == "benign") r.malignant = false;
        }
        validate(r);
        records.push_back(std::move(r));
    }
    while (std::getline(normal_listing, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        ClinicalRecord r;
        r.case_id = stem_upper(tok[0]);
        r.has_nodule = false;
        if (tok.size() > 1) r.age = parse_optional_double(tok[1]);
        if (tok.size() > 2) r.gender = parse_gender(tok[2]);
        validate(r);
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace cxr
