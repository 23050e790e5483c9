#pragma once

#include <string>

#include "carlab/quadratic_system.hpp"

namespace carlab {

/// Parses a system definition document:
///   { "dim": N, "f2": [[row, col, value], ...],
///     "f1": [N*N numbers, row-major], "f0": [N numbers] }
/// Errors carry line/field diagnostics.
[[nodiscard]] QuadraticSystem parse_system_json(const std::string& text);

[[nodiscard]] QuadraticSystem load_system_json(const std::string& path);

/// Serialises in the same schema; doubles are emitted with round-trip
/// precision so load(save(sys)) reproduces the system exactly.
[[nodiscard]] std::string system_to_json(const QuadraticSystem& sys);

void save_system_json(const QuadraticSystem& sys, const std::string& path);

}  // namespace carlab
