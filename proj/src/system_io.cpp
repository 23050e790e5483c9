#include "carlab/system_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace carlab {

namespace {

using nlohmann::json;

[[noreturn]] void fail_field(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::invalid_argument, "system definition, field `" + field + "`: " + what);
}

double number_at(const json& j, const std::string& field) {
    if (!j.is_number()) fail_field(field, "expected a number");
    return j.get<double>();
}

}  // namespace

QuadraticSystem parse_system_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line/column diagnostic.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorCode::invalid_argument,
                    "system definition parse error at line " + std::to_string(line) + ", column " +
                        std::to_string(col) + ": " + e.what());
    }

    if (!doc.is_object()) fail_field("<root>", "expected an object");
    for (const std::string field : {"dim", "f2", "f1", "f0"})
        if (!doc.contains(field)) fail_field(field, "missing");

    if (!doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 1)
        fail_field("dim", "expected a positive integer");
    const int n = doc["dim"].get<int>();

    std::vector<F2Entry> f2;
    if (!doc["f2"].is_array()) fail_field("f2", "expected a list of [row, col, value]");
    for (std::size_t i = 0; i < doc["f2"].size(); ++i) {
        const json& e = doc["f2"][i];
        const std::string field = "f2[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 3) fail_field(field, "expected [row, col, value]");
        if (!e[0].is_number_integer() || !e[1].is_number_integer())
            fail_field(field, "row and col must be integers");
        f2.push_back({e[0].get<int>(), e[1].get<int>(), number_at(e[2], field)});
    }

    if (!doc["f1"].is_array() || doc["f1"].size() != static_cast<std::size_t>(n) * n)
        fail_field("f1", "expected " + std::to_string(static_cast<std::int64_t>(n) * n) +
                             " numbers (dense row-major)");
    Eigen::MatrixXd f1(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            f1(r, c) = number_at(doc["f1"][static_cast<std::size_t>(r) * n + c],
                                 "f1[" + std::to_string(r * n + c) + "]");

    if (!doc["f0"].is_array() || doc["f0"].size() != static_cast<std::size_t>(n))
        fail_field("f0", "expected " + std::to_string(n) + " numbers");
    Eigen::VectorXd f0(n);
    for (int i = 0; i < n; ++i)
        f0[i] = number_at(doc["f0"][static_cast<std::size_t>(i)], "f0[" + std::to_string(i) + "]");

    return QuadraticSystem(n, std::move(f2), std::move(f1), std::move(f0));
}

QuadraticSystem load_system_json(const std::string& path) {
    std::ifstream in(path);
    detail::require(in.good(), ErrorCode::io, "cannot open system file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_system_json(buffer.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

std::string system_to_json(const QuadraticSystem& sys) {
    json doc;
    doc["dim"] = sys.dim();
    doc["f2"] = json::array();
    for (const auto& e : sys.f2()) doc["f2"].push_back({e.row, e.col, e.value});
    doc["f1"] = json::array();
    for (int r = 0; r < sys.dim(); ++r)
        for (int c = 0; c < sys.dim(); ++c) doc["f1"].push_back(sys.f1()(r, c));
    doc["f0"] = json::array();
    for (int i = 0; i < sys.dim(); ++i) doc["f0"].push_back(sys.f0()[i]);
    return doc.dump(2) + "\n";
}

void save_system_json(const QuadraticSystem& sys, const std::string& path) {
    std::ofstream out(path);
    detail::require(out.good(), ErrorCode::io, "cannot open for writing: " + path);
    out << system_to_json(sys);
    detail::require(out.good(), ErrorCode::io, "write failed: " + path);
}

}  // namespace carlab
