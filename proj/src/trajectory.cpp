#include "carlab/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "carlab/csv.hpp"

namespace carlab {

void Trajectory::append(double t, const Eigen::VectorXd& state) {
    detail::require(state.size() == dim_, ErrorCode::invalid_argument,
                    "trajectory state has wrong dimension");
    if (times_.empty()) {
        detail::require(t == 0.0, ErrorCode::invalid_argument, "trajectory must start at t = 0");
    } else {
        detail::require(t > times_.back(), ErrorCode::invalid_argument,
                        "trajectory times must be strictly increasing");
    }
    times_.push_back(t);
    states_.push_back(state);
}

Eigen::VectorXd Trajectory::sample(double t) const {
    detail::require(!times_.empty(), ErrorCode::invalid_argument, "empty trajectory");
    detail::require(t >= times_.front() - 1e-12 && t <= times_.back() + 1e-12,
                    ErrorCode::invalid_argument, "sample time outside trajectory interval");
    t = std::clamp(t, times_.front(), times_.back());
    const auto it = std::lower_bound(times_.begin(), times_.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - times_.begin());
    if (hi == 0) return states_.front();
    if (times_[hi] == t) return states_[hi];
    const std::size_t lo = hi - 1;
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    return (1.0 - w) * states_[lo] + w * states_[hi];
}

void Trajectory::write_csv(const std::string& path) const {
    std::string header = "t";
    for (Eigen::Index i = 0; i < dim_; ++i) header += ",u_" + std::to_string(i + 1);
    std::vector<double> data;
    data.reserve(times_.size() * (static_cast<std::size_t>(dim_) + 1));
    for (std::size_t r = 0; r < times_.size(); ++r) {
        data.push_back(times_[r]);
        for (Eigen::Index i = 0; i < dim_; ++i) data.push_back(states_[r][i]);
    }
    carlab::write_csv(path, header, data, times_.size(), static_cast<std::size_t>(dim_) + 1);
}

}  // namespace carlab
