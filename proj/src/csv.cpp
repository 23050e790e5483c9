#include "carlab/csv.hpp"

#include <cstdio>
#include <fstream>

#include "carlab/errors.hpp"

namespace carlab {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<double>& data, std::size_t rows, std::size_t cols) {
    detail::require(cols > 0 && data.size() == rows * cols, ErrorCode::invalid_argument,
                    "csv data size does not match rows*cols");
    std::ofstream out(path);
    detail::require(out.good(), ErrorCode::io, "cannot open for writing: " + path);
    out << header << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c) out << ',';
            out << format_value(data[r * cols + c]);
        }
        out << '\n';
    }
    detail::require(out.good(), ErrorCode::io, "write failed: " + path);
}

}  // namespace carlab
