#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "carlab/errors.hpp"

namespace carlab {

struct TrajectoryMeta {
    std::string integrator;
    double step_size = 0.0;  // 0 for adaptive integrators
    double rel_tol = 0.0;
    double abs_tol = 0.0;
    bool stability_warning = false;
};

/// Time grid plus state samples. Times are strictly increasing and start at 0.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(Eigen::Index dim, TrajectoryMeta meta) : dim_(dim), meta_(std::move(meta)) {}

    void append(double t, const Eigen::VectorXd& state);

    [[nodiscard]] std::size_t size() const noexcept { return times_.size(); }
    [[nodiscard]] Eigen::Index dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<double>& times() const noexcept { return times_; }
    [[nodiscard]] const std::vector<Eigen::VectorXd>& states() const noexcept { return states_; }
    [[nodiscard]] const Eigen::VectorXd& state(std::size_t i) const { return states_.at(i); }
    [[nodiscard]] double time(std::size_t i) const { return times_.at(i); }
    [[nodiscard]] const TrajectoryMeta& meta() const noexcept { return meta_; }
    [[nodiscard]] TrajectoryMeta& meta() noexcept { return meta_; }

    /// Piecewise-linear interpolation at time t, which must lie within the
    /// covered interval [times.front(), times.back()].
    [[nodiscard]] Eigen::VectorXd sample(double t) const;

    /// CSV with header `t,u_1..u_N`, 17 significant digits per value.
    void write_csv(const std::string& path) const;

private:
    Eigen::Index dim_ = 0;
    std::vector<double> times_;
    std::vector<Eigen::VectorXd> states_;
    TrajectoryMeta meta_;
};

}  // namespace carlab
