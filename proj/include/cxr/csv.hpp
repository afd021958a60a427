#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cxr::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Splits one CSV line. Fields containing commas or quotes must be quoted;
/// doubled quotes escape a quote.
std::vector<std::string> split_line(const std::string& line);

/// Joins fields into one line, quoting only when needed.
std::string join(const std::vector<std::string>& fields);

Table read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Table& table);

}  // namespace cxr::csv
