#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fracsis {

// Decimal formatting with 17 significant digits, enough to round-trip
// doubles exactly.
std::string format_double(double v);

// Compact formatting for values embedded in file names (u_t2.5.csv).
std::string format_compact(double v);

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<const std::vector<double>*>& columns);

void write_key_values(const std::filesystem::path& path,
                      const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace fracsis
