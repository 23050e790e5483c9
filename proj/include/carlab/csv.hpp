#pragma once

#include <string>
#include <vector>

namespace carlab {

/// Formats a double with 17 significant digits ("%.17g"), enough to
/// round-trip any IEEE double. All CSV output goes through this so files
/// are byte-identical across runs.
[[nodiscard]] std::string format_value(double v);

/// Writes a CSV table: `header` is the literal header line (no newline),
/// `data` is row-major with `cols` values per row.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<double>& data, std::size_t rows, std::size_t cols);

}  // namespace carlab
