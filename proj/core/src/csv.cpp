#include "fracsis/csv.hpp"

#include <cstdio>
#include <fstream>

#include "fracsis/errors.hpp"

namespace fracsis {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_compact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<const std::vector<double>*>& columns) {
    if (header.size() != columns.size())
        throw LengthMismatch("csv header and column counts differ");
    const std::size_t rows = columns.empty() ? 0 : columns.front()->size();
    for (const auto* col : columns)
        if (col->size() != rows) throw LengthMismatch("csv columns differ in length");

    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    for (std::size_t c = 0; c < header.size(); ++c)
        out << header[c] << (c + 1 < header.size() ? "," : "\n");
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << format_double((*columns[c])[r]) << (c + 1 < columns.size() ? "," : "\n");
}

void write_key_values(const std::filesystem::path& path,
                      const std::vector<std::pair<std::string, std::string>>& entries) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    for (const auto& [key, value] : entries) out << key << "=" << value << "\n";
}

}  // namespace fracsis
