#pragma once

#include <stdexcept>
#include <string>

namespace carlab {

/// Error categories shared between the C++ core and the C API.
/// Values match the `carlab_status` codes in carlab.h (OK is 0 there).
enum class ErrorCode {
    invalid_argument = 1,
    domain_error = 2,
    capacity = 3,
    numerical = 4,
    divergence = 5,
    singularity = 6,
    non_dissipative = 7,
    geometry = 8,
    io = 9,
    stiffness = 10,
};

[[nodiscard]] constexpr const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::domain_error: return "domain_error";
        case ErrorCode::capacity: return "capacity";
        case ErrorCode::numerical: return "numerical";
        case ErrorCode::divergence: return "divergence";
        case ErrorCode::singularity: return "singularity";
        case ErrorCode::non_dissipative: return "non_dissipative";
        case ErrorCode::geometry: return "geometry";
        case ErrorCode::io: return "io";
        case ErrorCode::stiffness: return "stiffness";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Divergence carries the time at which the state first became non-finite.
class DivergenceError : public Error {
public:
    DivergenceError(double blowup_time, const std::string& message)
        : Error(ErrorCode::divergence, message), blowup_time_(blowup_time) {}

    [[nodiscard]] double blowup_time() const noexcept { return blowup_time_; }

private:
    double blowup_time_;
};

namespace detail {
inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) throw Error(code, message);
}
}  // namespace detail

}  // namespace carlab
